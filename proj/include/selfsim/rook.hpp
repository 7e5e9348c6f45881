#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/inverse_semigroup.hpp"
#include "selfsim/io.hpp"

namespace selfsim {

// square matrix over a finite inverse semigroup with zero whose rows and
// columns are internally orthogonal; generalizes partial permutation matrices
class rook_matrix {
  public:
    rook_matrix(const finite_inverse_semigroup& s, std::size_t n)
        : s_(&s), n_(n), e_(n * n, s.zero()) {}

    static rook_matrix from_entries(const finite_inverse_semigroup& s,
                                    std::vector<std::vector<std::string>> rows) {
        rook_matrix m(s, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw dimension_error("rook matrix literal must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, s.at(rows[i][j]));
        }
        m.require_rook();
        return m;
    }

    // literal grammar: rows separated by `;`, entries by whitespace
    static rook_matrix parse(const finite_inverse_semigroup& s, const std::string& text) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& part : split_on(text, ';')) rows.push_back(split_ws(part));
        try {
            return from_entries(s, std::move(rows));
        } catch (const dimension_error& e) {
            throw parse_error(e.what());
        }
    }

    const finite_inverse_semigroup& semigroup() const { return *s_; }
    std::size_t n() const { return n_; }
    std::size_t at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, std::size_t v) { e_[i * n_ + j] = v; }

    bool is_rook() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = j + 1; k < n_; ++k) {
                    // same row: a^-1 b = 0; same column: a b^-1 = 0
                    if (s_->mul(s_->inv(at(i, j)), at(i, k)) != s_->zero()) return false;
                    if (s_->mul(at(j, i), s_->inv(at(k, i))) != s_->zero()) return false;
                }
        return true;
    }
    void require_rook() const {
        if (!is_rook()) throw validation_error("row or column fails orthogonality");
    }

    bool is_zero() const {
        for (std::size_t v : e_)
            if (v != s_->zero()) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) out += "; ";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) out += " ";
                out += s_->id(at(i, j));
            }
        }
        return out;
    }

    friend bool operator==(const rook_matrix& a, const rook_matrix& b) {
        return a.s_ == b.s_ && a.n_ == b.n_ && a.e_ == b.e_;
    }

  private:
    const finite_inverse_semigroup* s_;
    std::size_t n_;
    std::vector<std::size_t> e_;
};

inline rook_matrix diagonal(const finite_inverse_semigroup& s,
                            const std::vector<std::string>& entries) {
    rook_matrix m(s, entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, s.at(entries[i]));
    return m;
}

// c_ij = join over k of a_ik b_kj; the terms are pairwise orthogonal for rook
// inputs, and the result is again a rook matrix (asserted)
inline rook_matrix mat_multiply(const rook_matrix& a, const rook_matrix& b) {
    if (&a.semigroup() != &b.semigroup())
        throw domain_error("matrices over different semigroups");
    if (a.n() != b.n()) throw dimension_error("rook matrix dimensions differ");
    const finite_inverse_semigroup& s = a.semigroup();
    s.require_complete();
    rook_matrix c(s, a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            std::size_t acc = s.zero();
            for (std::size_t k = 0; k < a.n(); ++k) {
                std::size_t term = s.mul(a.at(i, k), b.at(k, j));
                if (term == s.zero()) continue;
                if (!s.orthogonal(acc, term))
                    throw orthogonality_error("non-orthogonal terms in entry sum");
                acc = s.join(acc, term);
            }
            c.set(i, j, acc);
        }
    c.require_rook();
    return c;
}

// entrywise transpose of inverses: the inverse in the matrix semigroup
inline rook_matrix mat_inverse(const rook_matrix& a) {
    rook_matrix b(a.semigroup(), a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            b.set(j, i, a.semigroup().inv(a.at(i, j)));
    return b;
}

inline bool mat_leq(const rook_matrix& a, const rook_matrix& b) {
    if (&a.semigroup() != &b.semigroup() || a.n() != b.n()) return false;
    const finite_inverse_semigroup& s = a.semigroup();
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            if (!s.leq(a.at(i, j), b.at(i, j))) return false;
    return true;
}

inline bool mat_orthogonal(const rook_matrix& a, const rook_matrix& b) {
    if (&a.semigroup() != &b.semigroup() || a.n() != b.n()) return false;
    return mat_multiply(a, mat_inverse(b)).is_zero() &&
           mat_multiply(mat_inverse(a), b).is_zero();
}

inline rook_matrix mat_join(const rook_matrix& a, const rook_matrix& b) {
    if (!mat_orthogonal(a, b)) throw orthogonality_error("join of non-orthogonal matrices");
    const finite_inverse_semigroup& s = a.semigroup();
    rook_matrix c(s, a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            std::size_t x = a.at(i, j), y = b.at(i, j);
            if (!s.orthogonal(x, y)) throw orthogonality_error("non-orthogonal entries");
            c.set(i, j, s.join(x, y));
        }
    c.require_rook();
    return c;
}

// Kronecker product; a rook matrix again when the semigroup is commutative
inline rook_matrix mat_tensor(const rook_matrix& a, const rook_matrix& b) {
    const finite_inverse_semigroup& s = a.semigroup();
    if (&s != &b.semigroup()) throw domain_error("matrices over different semigroups");
    if (!s.commutative()) throw domain_error("tensor products need a commutative semigroup");
    rook_matrix c(s, a.n() * b.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            for (std::size_t k = 0; k < b.n(); ++k)
                for (std::size_t l = 0; l < b.n(); ++l)
                    c.set(i * b.n() + k, j * b.n() + l, s.mul(a.at(i, j), b.at(k, l)));
    c.require_rook();
    return c;
}

// ----- D-class move calculus on diagonal idempotents ------------------------

struct d_move {
    enum class kind { slide, combine, swap_entry };
    kind what = kind::slide;
    std::size_t i = 0, j = 0;  // slots for slide/combine
    std::string s;             // the witness element for swap_entry
};

struct d_witness_result {
    rook_matrix a;
    std::vector<std::string> result;  // the tuple F with A A^-1 = D(E), A^-1 A = D(F)
};

// explicit witness matrix for one move on a diagonal idempotent tuple
inline d_witness_result d_witness(const finite_inverse_semigroup& s, const d_move& m,
                                  const std::vector<std::string>& entries) {
    for (const auto& e : entries)
        if (!s.is_idempotent(s.at(e))) throw domain_error("tuple entry not idempotent: " + e);
    std::size_t n = entries.size();
    rook_matrix a(s, n);
    std::vector<std::string> f = entries;
    auto fill_diag_except = [&](std::size_t skip1, std::size_t skip2) {
        for (std::size_t k = 0; k < n; ++k)
            if (k != skip1 && k != skip2) a.set(k, k, s.at(entries[k]));
    };
    switch (m.what) {
        case d_move::kind::slide: {
            if (m.i >= n || m.j >= n || m.i == m.j) throw move_error("bad slide slots");
            fill_diag_except(m.i, m.j);
            a.set(m.i, m.j, s.at(entries[m.i]));
            a.set(m.j, m.i, s.at(entries[m.j]));
            std::swap(f[m.i], f[m.j]);
            break;
        }
        case d_move::kind::combine: {
            if (m.i >= n || m.j >= n || m.i == m.j) throw move_error("bad combine slots");
            std::size_t ei = s.at(entries[m.i]), ej = s.at(entries[m.j]);
            if (!s.orthogonal(ei, ej))
                throw move_error("combine needs orthogonal entries: " + entries[m.i] + ", " +
                                 entries[m.j]);
            fill_diag_except(m.i, m.j);
            a.set(m.i, m.i, ei);
            a.set(m.j, m.i, ej);
            f[m.i] = s.id(s.join(ei, ej));
            f[m.j] = s.zero_id();
            break;
        }
        case d_move::kind::swap_entry: {
            if (m.i >= n) throw move_error("bad swap slot");
            std::size_t w = s.at(m.s);
            if (s.mul(w, s.inv(w)) != s.at(entries[m.i]))
                throw move_error("swap witness " + m.s + " does not cover slot " +
                                 std::to_string(m.i));
            fill_diag_except(m.i, m.i);
            a.set(m.i, m.i, w);
            f[m.i] = s.id(s.mul(s.inv(w), w));
            break;
        }
    }
    if (!(mat_multiply(a, mat_inverse(a)) == diagonal(s, entries)) ||
        !(mat_multiply(mat_inverse(a), a) == diagonal(s, f)))
        throw validation_error("witness fails the sandwich check");
    return {std::move(a), std::move(f)};
}

enum class d_answer { yes, no, unknown };

// are D(E) and D(F) connected by slide/combine/split/swap moves?  BFS over
// multisets of nonzero diagonal entries with at most max(|E|,|F|) + bound
// slots; slides are absorbed by the multiset canonicalization.  `no` is only
// reported when the closure was exhausted with no split ever blocked by the
// slot limit.
inline d_answer d_related(const finite_inverse_semigroup& s,
                          const std::vector<std::string>& e_tuple,
                          const std::vector<std::string>& f_tuple, std::size_t bound) {
    auto canon = [&](const std::vector<std::string>& t) {
        std::vector<std::size_t> m;
        for (const auto& x : t) {
            std::size_t v = s.at(x);
            if (!s.is_idempotent(v)) throw domain_error("tuple entry not idempotent: " + x);
            if (v != s.zero()) m.push_back(v);
        }
        std::sort(m.begin(), m.end());
        return m;
    };
    std::size_t slots = std::max(e_tuple.size(), f_tuple.size()) + bound;
    std::vector<std::size_t> start = canon(e_tuple), target = canon(f_tuple);
    if (start.size() > slots || target.size() > slots) return d_answer::unknown;
    // splitting pairs per idempotent: e = f v g with f, g nonzero orthogonal
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits(s.size());
    std::vector<std::vector<std::size_t>> swaps(s.size());
    for (std::size_t f = 0; f < s.size(); ++f) {
        if (!s.is_idempotent(f) || f == s.zero()) continue;
        for (std::size_t g = f; g < s.size(); ++g) {
            if (!s.is_idempotent(g) || g == s.zero()) continue;
            if (s.orthogonal(f, g) && s.has_join(f, g))
                splits[s.join(f, g)].push_back({f, g});
        }
    }
    for (std::size_t w = 0; w < s.size(); ++w)
        swaps[s.mul(w, s.inv(w))].push_back(s.mul(s.inv(w), w));
    std::set<std::vector<std::size_t>> seen{start};
    std::vector<std::vector<std::size_t>> frontier{start}, next;
    bool blocked = false;
    auto push = [&](std::vector<std::size_t> m) {
        std::sort(m.begin(), m.end());
        if (seen.insert(m).second) next.push_back(std::move(m));
    };
    while (!frontier.empty()) {
        next.clear();
        for (const auto& m : frontier) {
            if (m == target) return d_answer::yes;
            for (std::size_t i = 0; i < m.size(); ++i) {
                for (std::size_t j = i + 1; j < m.size(); ++j)
                    if (s.orthogonal(m[i], m[j]) && s.has_join(m[i], m[j])) {
                        auto c = m;
                        c[i] = s.join(m[i], m[j]);
                        c.erase(c.begin() + static_cast<long>(j));
                        push(std::move(c));
                    }
                for (auto [f, g] : splits[m[i]]) {
                    if (m.size() + 1 > slots) {
                        blocked = true;
                        continue;
                    }
                    auto c = m;
                    c[i] = f;
                    c.push_back(g);
                    push(std::move(c));
                }
                for (std::size_t r : swaps[m[i]]) {
                    if (r == m[i]) continue;
                    auto c = m;
                    c[i] = r;
                    push(std::move(c));
                }
            }
        }
        frontier.swap(next);
    }
    if (seen.count(target)) return d_answer::yes;
    return blocked ? d_answer::unknown : d_answer::no;
}

}  // namespace selfsim
