#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/groupoid.hpp"
#include "selfsim/io.hpp"

namespace selfsim {

// first-counterexample report for the table axioms
struct semigroup_report {
    bool valid = false;
    std::string detail;
};

// joins listed as (a, b, a v b) over orthogonal pairs with a before b
struct completeness_report {
    bool complete = false;
    std::string detail;
    std::vector<std::array<std::string, 3>> joins;
};

// finite inverse semigroup with zero, given by a total multiplication table.
// Derived structure (unique inverses, idempotents, natural partial order,
// orthogonality, joins of orthogonal pairs) is computed once at construction.
class finite_inverse_semigroup {
  public:
    struct raw_table {
        std::vector<std::string> elements;
        std::string zero;
        // rows (a, b, c) meaning a * b = c
        std::vector<std::array<std::string, 3>> rows;
    };

    finite_inverse_semigroup() = default;

    explicit finite_inverse_semigroup(const raw_table& raw) {
        std::string why = build(raw);
        if (!why.empty()) throw validation_error(why);
        derive();
    }

    // report instead of throwing; used by the verify entry points
    static semigroup_report check(const raw_table& raw) {
        finite_inverse_semigroup s;
        semigroup_report r;
        r.detail = s.build(raw);
        r.valid = r.detail.empty();
        if (r.valid) s.derive();
        return r;
    }

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& element_ids() const { return ids_; }
    const std::string& id(std::size_t i) const { return ids_[i]; }
    std::size_t at(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw domain_error("unknown element: " + id);
        return it->second;
    }
    bool has(const std::string& id) const { return index_.count(id) != 0; }

    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
    std::string mul(const std::string& a, const std::string& b) const {
        return ids_[mul(at(a), at(b))];
    }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    std::string inv(const std::string& a) const { return ids_[inverse_[at(a)]]; }

    std::size_t zero() const { return zero_; }
    const std::string& zero_id() const { return ids_[zero_]; }
    bool is_idempotent(std::size_t a) const { return mul(a, a) == a; }
    const std::vector<std::size_t>& idempotents() const { return idempotents_; }
    // the two-sided identity, or size() when there is none
    std::size_t identity() const { return identity_; }
    bool commutative() const {
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = a + 1; b < size(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    // natural partial order s <= t iff s = t s^-1 s
    bool leq(std::size_t s, std::size_t t) const {
        return s == mul(t, mul(inverse_[s], s));
    }
    bool orthogonal(std::size_t s, std::size_t t) const {
        return mul(s, inverse_[t]) == zero_ && mul(inverse_[s], t) == zero_;
    }
    bool has_join(std::size_t s, std::size_t t) const {
        return orthogonal(s, t) && join_[s * size() + t] >= 0;
    }
    // least upper bound of an orthogonal pair
    std::size_t join(std::size_t s, std::size_t t) const {
        if (!orthogonal(s, t))
            throw orthogonality_error("join of non-orthogonal " + ids_[s] + ", " + ids_[t]);
        long j = join_[s * size() + t];
        if (j < 0)
            throw not_complete_error("no least upper bound for " + ids_[s] + ", " + ids_[t]);
        return static_cast<std::size_t>(j);
    }

    const completeness_report& verify_orthogonal_completeness() const {
        return completeness_;
    }
    // throws when joins are missing or fail to distribute
    void require_complete() const {
        if (!completeness_.complete) throw not_complete_error(completeness_.detail);
    }

    // ----- file format: [elements], [zero], [table], optional [identities] --

    static finite_inverse_semigroup parse(const std::string& text) {
        auto [g, zero] = finite_groupoid::parse_raw(text, /*allow_zero=*/true);
        if (zero.empty()) throw parse_error("inverse semigroup file needs a [zero] section");
        raw_table raw{g.elements, zero, g.rows};
        try {
            return finite_inverse_semigroup(raw);
        } catch (const validation_error& e) {
            throw parse_error(e.what());
        }
    }

    std::string serialize() const {
        std::string out = "[elements]\n";
        for (std::size_t i = 0; i < ids_.size(); ++i)
            out += ids_[i] + (i + 1 == ids_.size() ? "\n" : " ");
        if (identity_ < size()) out += "[identities]\n" + ids_[identity_] + "\n";
        out += "[zero]\n" + ids_[zero_] + "\n[table]\n";
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = 0; b < size(); ++b)
                out += ids_[a] + " " + ids_[b] + " -> " + ids_[mul(a, b)] + "\n";
        return out;
    }

    // ----- built-in families ----------------------------------------------

    // partial injections on {1..n} under composition; elements named 0 and
    // m<domain>.<image> with the domain ascending, matching the data files
    static finite_inverse_semigroup symmetric_inverse_monoid(int n);
    // subsets of {1..n} under intersection, named 0 and p<members>
    static finite_inverse_semigroup boolean_algebra(int n);
    // a finite group with a fresh zero adjoined
    static finite_inverse_semigroup group_with_zero(const finite_groupoid& g);
    static finite_inverse_semigroup cyclic_with_zero(int n);
    // cartesian product with componentwise operations, elements named (a,b)
    static finite_inverse_semigroup product(const finite_inverse_semigroup& s,
                                            const finite_inverse_semigroup& t);
    // restriction to the idempotents; requires them to be closed under the
    // product, which holds in particular for commutative input
    finite_inverse_semigroup idempotent_subsemigroup() const;

  private:
    // returns an error description, or empty on success; leaves the object
    // fully built only on success
    std::string build(const raw_table& raw) {
        ids_ = raw.elements;
        index_.clear();
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (ids_[i].empty()) return "empty element id";
            if (!index_.emplace(ids_[i], i).second)
                return "duplicate element id: " + ids_[i];
        }
        if (ids_.empty()) return "no elements";
        std::size_t n = ids_.size();
        if (!index_.count(raw.zero)) return "zero id not among elements: " + raw.zero;
        zero_ = index_.at(raw.zero);
        std::vector<long> table(n * n, -1);
        for (const auto& row : raw.rows) {
            if (!index_.count(row[0]) || !index_.count(row[1]) || !index_.count(row[2]))
                return "table row over unknown elements: " + row[0] + " " + row[1];
            long& slot = table[index_.at(row[0]) * n + index_.at(row[1])];
            long c = static_cast<long>(index_.at(row[2]));
            if (slot >= 0 && slot != c)
                return "conflicting products for " + row[0] + " " + row[1];
            slot = c;
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (table[a * n + b] < 0)
                    return "product missing for " + ids_[a] + " " + ids_[b];
        table_.assign(n * n, 0);
        for (std::size_t i = 0; i < n * n; ++i)
            table_[i] = static_cast<std::size_t>(table[i]);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        return "associativity fails on " + ids_[a] + ", " + ids_[b] + ", " +
                               ids_[c];
        for (std::size_t a = 0; a < n; ++a)
            if (mul(zero_, a) != zero_ || mul(a, zero_) != zero_)
                return "zero law fails for " + ids_[a];
        inverse_.assign(n, 0);
        for (std::size_t s = 0; s < n; ++s) {
            long found = -1;
            for (std::size_t t = 0; t < n; ++t) {
                if (mul(mul(s, t), s) != s || mul(mul(t, s), t) != t) continue;
                if (found >= 0)
                    return "two inverses for " + ids_[s] + ": " +
                           ids_[static_cast<std::size_t>(found)] + " and " + ids_[t];
                found = static_cast<long>(t);
            }
            if (found < 0) return "no inverse for " + ids_[s];
            inverse_[s] = static_cast<std::size_t>(found);
        }
        for (std::size_t e = 0; e < n; ++e) {
            if (!is_idempotent(e)) continue;
            for (std::size_t f = e + 1; f < n; ++f)
                if (is_idempotent(f) && mul(e, f) != mul(f, e))
                    return "idempotents do not commute: " + ids_[e] + ", " + ids_[f];
        }
        return "";
    }

    void derive() {
        std::size_t n = size();
        idempotents_.clear();
        for (std::size_t e = 0; e < n; ++e)
            if (is_idempotent(e)) idempotents_.push_back(e);
        identity_ = n;
        for (std::size_t e = 0; e < n; ++e) {
            bool id = true;
            for (std::size_t a = 0; a < n && id; ++a)
                id = mul(e, a) == a && mul(a, e) == a;
            if (id) {
                identity_ = e;
                break;
            }
        }
        // joins of orthogonal pairs: the unique minimum of the common upper
        // bounds, or -1 when missing
        join_.assign(n * n, -1);
        completeness_ = {};
        completeness_.complete = true;
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
                if (!orthogonal(s, t)) continue;
                std::vector<std::size_t> ub;
                for (std::size_t u = 0; u < n; ++u)
                    if (leq(s, u) && leq(t, u)) ub.push_back(u);
                long lub = -1;
                for (std::size_t c : ub) {
                    bool least = true;
                    for (std::size_t u : ub)
                        if (!leq(c, u)) {
                            least = false;
                            break;
                        }
                    if (least) {
                        lub = static_cast<long>(c);
                        break;
                    }
                }
                join_[s * n + t] = lub;
                if (lub < 0 && completeness_.complete) {
                    completeness_.complete = false;
                    completeness_.detail = "orthogonal pair without a least upper bound: " +
                                           ids_[s] + ", " + ids_[t];
                }
            }
        if (!completeness_.complete) return;
        // multiplication must distribute over the joins just computed
        for (std::size_t s = 0; s < n && completeness_.complete; ++s)
            for (std::size_t t = s; t < n && completeness_.complete; ++t) {
                if (!orthogonal(s, t)) continue;
                std::size_t j = static_cast<std::size_t>(join_[s * n + t]);
                for (std::size_t a = 0; a < n; ++a) {
                    if (!distributes(a, s, t, j, /*left=*/true) ||
                        !distributes(a, s, t, j, /*left=*/false)) {
                        completeness_.complete = false;
                        completeness_.detail = "multiplication by " + ids_[a] +
                                               " fails to distribute over " + ids_[s] +
                                               " v " + ids_[t];
                        break;
                    }
                }
            }
        if (!completeness_.complete) return;
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = s + 1; t < n; ++t)
                if (orthogonal(s, t))
                    completeness_.joins.push_back(
                        {ids_[s], ids_[t], ids_[static_cast<std::size_t>(join_[s * n + t])]});
    }

    bool distributes(std::size_t a, std::size_t s, std::size_t t, std::size_t j,
                     bool left) const {
        std::size_t as = left ? mul(a, s) : mul(s, a);
        std::size_t at = left ? mul(a, t) : mul(t, a);
        std::size_t aj = left ? mul(a, j) : mul(j, a);
        if (!orthogonal(as, at)) return false;
        long k = join_[as * size() + at];
        return k >= 0 && static_cast<std::size_t>(k) == aj;
    }

    std::vector<std::string> ids_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> idempotents_;
    std::size_t zero_ = 0;
    std::size_t identity_ = 0;
    std::vector<long> join_;
    completeness_report completeness_;
};

// ----- built-in constructions ----------------------------------------------

namespace detail {

// partial injections as image vectors over 0-based points, -1 undefined
inline std::string pinj_label(const std::vector<int>& f) {
    std::string dom, img;
    for (std::size_t p = 0; p < f.size(); ++p)
        if (f[p] >= 0) {
            dom += std::to_string(p + 1);
            img += std::to_string(f[p] + 1);
        }
    if (dom.empty()) return "0";
    return "m" + dom + "." + img;
}

inline std::vector<int> pinj_after(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size(), -1);
    for (std::size_t p = 0; p < f.size(); ++p)
        if (g[p] >= 0 && f[static_cast<std::size_t>(g[p])] >= 0)
            h[p] = f[static_cast<std::size_t>(g[p])];
    return h;
}

}  // namespace detail

inline finite_inverse_semigroup finite_inverse_semigroup::symmetric_inverse_monoid(int n) {
    if (n < 1) throw domain_error("point count must be positive");
    std::vector<std::vector<int>> maps;
    // by domain bitmask, then images in lexicographic order
    for (unsigned dom = 0; dom < (1u << n); ++dom) {
        std::vector<int> points;
        for (int p = 0; p < n; ++p)
            if (dom & (1u << p)) points.push_back(p);
        std::vector<std::vector<int>> partial{std::vector<int>(static_cast<std::size_t>(n), -1)};
        for (int p : points) {
            std::vector<std::vector<int>> next;
            for (const auto& f : partial)
                for (int img = 0; img < n; ++img) {
                    bool used = false;
                    for (int v : f) used = used || v == img;
                    if (used) continue;
                    auto g = f;
                    g[static_cast<std::size_t>(p)] = img;
                    next.push_back(std::move(g));
                }
            partial = std::move(next);
        }
        for (auto& f : partial) maps.push_back(std::move(f));
    }
    raw_table raw;
    raw.zero = "0";
    for (const auto& f : maps) raw.elements.push_back(detail::pinj_label(f));
    for (const auto& f : maps)
        for (const auto& g : maps)
            raw.rows.push_back({detail::pinj_label(f), detail::pinj_label(g),
                                detail::pinj_label(detail::pinj_after(f, g))});
    return finite_inverse_semigroup(raw);
}

inline finite_inverse_semigroup finite_inverse_semigroup::boolean_algebra(int n) {
    if (n < 1) throw domain_error("atom count must be positive");
    auto label = [n](unsigned bits) {
        if (bits == 0) return std::string("0");
        std::string out = "p";
        for (int p = 0; p < n; ++p)
            if (bits & (1u << p)) out += std::to_string(p + 1);
        return out;
    };
    raw_table raw;
    raw.zero = "0";
    for (unsigned a = 0; a < (1u << n); ++a) raw.elements.push_back(label(a));
    for (unsigned a = 0; a < (1u << n); ++a)
        for (unsigned b = 0; b < (1u << n); ++b)
            raw.rows.push_back({label(a), label(b), label(a & b)});
    return finite_inverse_semigroup(raw);
}

inline finite_inverse_semigroup finite_inverse_semigroup::group_with_zero(
    const finite_groupoid& g) {
    if (!g.is_group()) throw domain_error("adjoining zero needs a group table");
    if (g.has("0")) throw domain_error("group already uses the id 0");
    raw_table raw;
    raw.zero = "0";
    raw.elements.push_back("0");
    for (const auto& e : g.element_ids()) raw.elements.push_back(e);
    for (const auto& a : raw.elements)
        for (const auto& b : raw.elements) {
            if (a == "0" || b == "0") raw.rows.push_back({a, b, "0"});
            else raw.rows.push_back({a, b, g.product(a, b)});
        }
    return finite_inverse_semigroup(raw);
}

inline finite_inverse_semigroup finite_inverse_semigroup::cyclic_with_zero(int n) {
    if (n < 1) throw domain_error("order must be positive");
    auto label = [](int k) { return k == 0 ? std::string("1") : "g" + std::to_string(k); };
    finite_groupoid::raw_table g;
    for (int k = 0; k < n; ++k) g.elements.push_back(label(k));
    g.identities.push_back("1");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.rows.push_back({label(a), label(b), label((a + b) % n)});
    return group_with_zero(finite_groupoid(g));
}

inline finite_inverse_semigroup finite_inverse_semigroup::product(
    const finite_inverse_semigroup& s, const finite_inverse_semigroup& t) {
    auto label = [&](std::size_t a, std::size_t b) {
        return "(" + s.id(a) + "," + t.id(b) + ")";
    };
    raw_table raw;
    raw.zero = label(s.zero(), t.zero());
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b) raw.elements.push_back(label(a, b));
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
            for (std::size_t c = 0; c < s.size(); ++c)
                for (std::size_t d = 0; d < t.size(); ++d)
                    raw.rows.push_back(
                        {label(a, b), label(c, d), label(s.mul(a, c), t.mul(b, d))});
    return finite_inverse_semigroup(raw);
}

inline finite_inverse_semigroup finite_inverse_semigroup::idempotent_subsemigroup() const {
    raw_table raw;
    raw.zero = zero_id();
    for (std::size_t e : idempotents_) raw.elements.push_back(ids_[e]);
    for (std::size_t e : idempotents_)
        for (std::size_t f : idempotents_) {
            std::size_t p = mul(e, f);
            if (!is_idempotent(p))
                throw domain_error("idempotents not closed under the product: " + ids_[e] +
                                   " * " + ids_[f]);
            raw.rows.push_back({ids_[e], ids_[f], ids_[p]});
        }
    return finite_inverse_semigroup(raw);
}

// verify entry points matching the report-style interface
inline semigroup_report verify_inverse_semigroup(
    const finite_inverse_semigroup::raw_table& raw) {
    return finite_inverse_semigroup::check(raw);
}

inline const completeness_report& verify_orthogonal_completeness(
    const finite_inverse_semigroup& s) {
    return s.verify_orthogonal_completeness();
}

}  // namespace selfsim
