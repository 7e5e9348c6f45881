#pragma once

#include <array>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/intmatrix.hpp"
#include "selfsim/inverse_semigroup.hpp"
#include "selfsim/io.hpp"

namespace selfsim {

using rational = boost::multiprecision::cpp_rational;

// commutative-monoid presentation read off an orthogonally complete inverse
// semigroup: one generator per D-class of nonzero idempotents, one relation
// [e] + [f] = [e v f] per orthogonal pair; the zero class is the identity
struct k_presentation {
    std::vector<std::vector<std::size_t>> classes;  // nonzero D-classes, least member first
    std::vector<std::string> names;                 // [least-member-id] per class
    std::vector<std::array<std::size_t, 3>> relations;  // class indices (e, f, e v f)
};

inline k_presentation a_presentation(const finite_inverse_semigroup& s) {
    s.require_complete();
    // D on idempotents: e and f are joined by any s with s s^-1 = e, s^-1 s = f
    std::vector<std::size_t> root(s.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (std::size_t w = 0; w < s.size(); ++w) {
        std::size_t e = find(s.mul(w, s.inv(w))), f = find(s.mul(s.inv(w), w));
        if (e != f) root[std::max(e, f)] = std::min(e, f);
    }
    k_presentation p;
    std::map<std::size_t, std::size_t> slot;  // class root -> generator index
    for (std::size_t e : s.idempotents()) {
        if (e == s.zero()) continue;
        std::size_t r = find(e);
        auto it = slot.find(r);
        if (it == slot.end()) {
            slot.emplace(r, p.classes.size());
            p.classes.push_back({e});
            p.names.push_back("[" + s.id(e) + "]");
        } else {
            p.classes[it->second].push_back(e);
        }
    }
    auto class_of = [&](std::size_t e) { return slot.at(find(e)); };
    for (std::size_t i = 0; i < s.idempotents().size(); ++i)
        for (std::size_t j = i + 1; j < s.idempotents().size(); ++j) {
            std::size_t e = s.idempotents()[i], f = s.idempotents()[j];
            if (e == s.zero() || f == s.zero() || !s.orthogonal(e, f)) continue;
            p.relations.push_back({class_of(e), class_of(f), class_of(s.join(e, f))});
        }
    return p;
}

inline abelian_group k_group(const finite_inverse_semigroup& s) {
    k_presentation p = a_presentation(s);
    int_matrix m(p.relations.size(), p.classes.size());
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        m.at(r, p.relations[r][0]) += 1;
        m.at(r, p.relations[r][1]) += 1;
        m.at(r, p.relations[r][2]) -= 1;
    }
    return smith_normal_form(m).group;
}

// vertex matrix m[a][b] = number of edges with range a and domain b
inline int_matrix vertex_matrix(const directed_graph& g) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) idx[g.vertices()[i]] = i;
    int_matrix m(g.vertices().size(), g.vertices().size());
    for (const auto& e : g.edges()) m.at(idx.at(e.range), idx.at(e.domain)) += 1;
    return m;
}

// free abelian group on the vertices modulo a = sum of d(x) over edges x
// with r(x) = a, i.e. the cokernel of Id - M
inline abelian_group k_group_cuntz_krieger(const directed_graph& g) {
    int_matrix m = vertex_matrix(g);
    int_matrix rel = int_matrix::identity(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rel.at(i, j) -= m.at(i, j);
    return smith_normal_form(rel).group;
}

// one vertex with n loops
inline directed_graph bouquet_graph(int loops) {
    std::string text = "[vertices]\nv\n[edges]\n";
    for (int i = 1; i <= loops; ++i)
        text += "x" + std::to_string(i) + " range=v domain=v\n";
    return directed_graph::parse(text);
}

// invariant-factor form of the direct sum
inline abelian_group direct_sum(const abelian_group& a, const abelian_group& b) {
    std::vector<integer> parts = a.torsion;
    parts.insert(parts.end(), b.torsion.begin(), b.torsion.end());
    int_matrix diag(parts.size(), parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) diag.at(i, i) = parts[i];
    abelian_group out = smith_normal_form(diag).group;
    out.rank = a.rank + b.rank;
    return out;
}

struct comparison_report {
    abelian_group left, right;
    bool equal = false;
};

// K of the cartesian product against the direct sum of the factors
inline comparison_report k_product_check(const finite_inverse_semigroup& s,
                                         const finite_inverse_semigroup& t) {
    comparison_report r;
    r.left = k_group(finite_inverse_semigroup::product(s, t));
    r.right = direct_sum(k_group(s), k_group(t));
    r.equal = r.left == r.right;
    return r;
}

// K of a commutative semigroup against K of its idempotent subsemigroup
inline comparison_report k_commutative_check(const finite_inverse_semigroup& s) {
    if (!s.commutative()) throw domain_error("the comparison needs a commutative semigroup");
    comparison_report r;
    r.left = k_group(s);
    r.right = k_group(s.idempotent_subsemigroup());
    r.equal = r.left == r.right;
    return r;
}

// ----- traces ---------------------------------------------------------------

// total map from elements to exact rationals
class trace_function {
  public:
    trace_function(const finite_inverse_semigroup& s, std::vector<rational> values)
        : v_(std::move(values)) {
        if (v_.size() != s.size()) throw domain_error("trace must cover every element");
    }

    // file format: [trace] lines `element -> value`, value integer or p/q
    static trace_function parse(const finite_inverse_semigroup& s, const std::string& text) {
        section_file f = section_file::parse(text);
        f.require_only({"trace"});
        std::vector<rational> v(s.size());
        std::vector<bool> set(s.size(), false);
        for (const auto& line : f.lines("trace")) {
            auto toks = split_ws(line);
            if (toks.size() != 3 || toks[1] != "->")
                throw parse_error("trace line must be `element -> value`: " + line);
            if (!s.has(toks[0])) throw parse_error("trace over unknown element: " + toks[0]);
            std::size_t i = s.at(toks[0]);
            if (set[i]) throw parse_error("duplicate trace value for " + toks[0]);
            set[i] = true;
            try {
                v[i] = rational(toks[2]);
            } catch (const std::exception&) {
                throw parse_error("bad rational: " + toks[2]);
            }
        }
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!set[i]) throw parse_error("trace missing element " + s.id(i));
        return trace_function(s, std::move(v));
    }

    const rational& at(std::size_t i) const { return v_[i]; }

  private:
    std::vector<rational> v_;
};

struct trace_report {
    bool valid = false;
    std::string detail;
};

// positivity on idempotents, tau(0)=0, tau(1)=1 when an identity exists,
// tau(st)=tau(ts), and additivity over existing orthogonal joins
inline trace_report validate_trace(const finite_inverse_semigroup& s,
                                   const trace_function& tau) {
    trace_report r;
    if (tau.at(s.zero()) != 0) {
        r.detail = "zero must have trace 0";
        return r;
    }
    for (std::size_t e : s.idempotents())
        if (tau.at(e) < 0) {
            r.detail = "negative on idempotent " + s.id(e);
            return r;
        }
    if (s.identity() < s.size() && tau.at(s.identity()) != 1) {
        r.detail = "identity must have trace 1";
        return r;
    }
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (tau.at(s.mul(a, b)) != tau.at(s.mul(b, a))) {
                r.detail = "trace differs on " + s.id(a) + " " + s.id(b) + " and " +
                           s.id(b) + " " + s.id(a);
                return r;
            }
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a; b < s.size(); ++b) {
            if (!s.orthogonal(a, b) || !s.has_join(a, b)) continue;
            if (tau.at(s.join(a, b)) != tau.at(a) + tau.at(b)) {
                r.detail = "not additive on " + s.id(a) + " v " + s.id(b);
                return r;
            }
        }
    r.valid = true;
    return r;
}

// the induced values on the K generators; constant across each D-class
inline std::vector<std::pair<std::string, rational>> trace_on_k(
    const finite_inverse_semigroup& s, const trace_function& tau) {
    k_presentation p = a_presentation(s);
    std::vector<std::pair<std::string, rational>> out;
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        const rational& v = tau.at(p.classes[c][0]);
        for (std::size_t e : p.classes[c])
            if (tau.at(e) != v)
                throw validation_error("trace not constant on the class " + p.names[c] +
                                       ": differs at " + s.id(e));
        out.emplace_back(p.names[c], v);
    }
    return out;
}

inline std::string rational_str(const rational& q) {
    return q.str();
}

}  // namespace selfsim
