#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/automaton.hpp"
#include "selfsim/enumerate.hpp"
#include "selfsim/error.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/groupoid.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

// element of the monoid/category of the system: a word together with a
// trailing group (or groupoid) element, the unique normal form
template <class Element>
struct rees_elem {
    word w;
    Element g;
    friend bool operator==(const rees_elem&, const rees_elem&) = default;
};

struct cancellativity_result {
    bool answer = true;
    bool approximate = false;
    // on false: a letter and two distinct stabilizing elements with the
    // same restriction, formatted by the backend
    std::string letter, g, h;
};

// ---------------------------------------------------------------------------
// finite backend: group/groupoid given by a table, letter action and letter
// restriction given by maps; identities are tied to graph vertices
// ---------------------------------------------------------------------------

class table_system {
  public:
    using element = std::string;
    using letter_map = std::map<std::pair<std::string, std::string>, std::string>;

    table_system(directed_graph graph, finite_groupoid group, letter_map act,
                 letter_map restrict, std::map<std::string, std::string> vertex_of_identity = {})
        : graph_(std::move(graph)), group_(std::move(group)), act_(std::move(act)),
          restrict_(std::move(restrict)), vertex_of_(std::move(vertex_of_identity)) {
        if (vertex_of_.empty()) {
            if (group_.identity_count() != 1 || graph_.vertices().size() != 1)
                throw validation_error("identity-to-vertex map required");
            for (const auto& e : group_.element_ids())
                if (group_.is_identity(e)) vertex_of_[e] = graph_.vertices()[0];
        }
        validate();
    }

    const directed_graph& graph() const { return graph_; }
    const finite_groupoid& group() const { return group_; }
    const std::vector<std::string>& elements() const { return group_.element_ids(); }

    std::string mul(const std::string& g, const std::string& h) const {
        return group_.product(g, h);
    }
    std::string inv(const std::string& g) const { return group_.inverse(g); }
    bool is_id(const std::string& g) const { return group_.is_identity(g); }
    std::string format(const std::string& g) const { return g; }

    const std::string& range_vertex(const std::string& g) const {
        return vertex_of_.at(group_.id(group_.range(group_.at(g))));
    }
    const std::string& domain_vertex(const std::string& g) const {
        return vertex_of_.at(group_.id(group_.domain(group_.at(g))));
    }
    std::string identity_at(const std::string& vertex) const {
        for (const auto& [e, v] : vertex_of_)
            if (v == vertex) return e;
        throw domain_error("no identity at vertex " + vertex);
    }

    std::string act_letter(const std::string& g, const std::string& x) const {
        auto it = act_.find({g, x});
        if (it == act_.end())
            throw composition_error("action of " + g + " undefined on letter " + x);
        return it->second;
    }
    std::string restrict_letter(const std::string& g, const std::string& x) const {
        return restrict_.at({g, x});
    }

    word act(const std::string& g, const word& w) const {
        if (domain_vertex(g) != w.range())
            throw composition_error("element " + g + " cannot act at vertex " + w.range());
        std::string cur = g;
        std::vector<std::string> out;
        for (const auto& x : w.letters()) {
            out.push_back(act_letter(cur, x));
            cur = restrict_letter(cur, x);
        }
        if (out.empty()) return word::empty(range_vertex(g));
        return word::make(graph_, out);
    }

    std::string restrict_word(const std::string& g, const word& w) const {
        if (domain_vertex(g) != w.range())
            throw composition_error("element " + g + " cannot restrict at vertex " + w.range());
        std::string cur = g;
        for (const auto& x : w.letters()) cur = restrict_letter(cur, x);
        return cur;
    }

    std::vector<std::string> stabilizer(const std::string& x) const {
        std::vector<std::string> out;
        for (const auto& g : elements())
            if (domain_vertex(g) == graph_.edge(x).range && act_letter(g, x) == x)
                out.push_back(g);
        return out;
    }

    // the restriction homomorphism on the stabilizer of x
    std::string phi(const std::string& x, const std::string& g) const {
        if (act_letter(g, x) != x)
            throw domain_error(g + " does not stabilize letter " + x);
        return restrict_letter(g, x);
    }

    // the restriction map on every element composable with x (monoid form)
    std::string rho(const std::string& x, const std::string& g) const {
        return restrict_letter(g, x);
    }

    std::vector<std::vector<std::string>> orbits() const {
        std::vector<std::vector<std::string>> out;
        std::set<std::string> seen;
        for (const auto& e : graph_.edges()) {
            if (seen.count(e.id)) continue;
            std::vector<std::string> orbit{e.id};
            seen.insert(e.id);
            for (std::size_t i = 0; i < orbit.size(); ++i)
                for (const auto& g : elements()) {
                    if (domain_vertex(g) != graph_.edge(orbit[i]).range) continue;
                    std::string y = act_letter(g, orbit[i]);
                    if (seen.insert(y).second) orbit.push_back(y);
                }
            std::sort(orbit.begin(), orbit.end(), [&](const auto& a, const auto& b) {
                return graph_index(a) < graph_index(b);
            });
            out.push_back(std::move(orbit));
        }
        return out;
    }

    cancellativity_result is_right_cancellative() const {
        for (const auto& e : graph_.edges()) {
            auto stab = stabilizer(e.id);
            for (std::size_t i = 0; i < stab.size(); ++i)
                for (std::size_t j = i + 1; j < stab.size(); ++j)
                    if (restrict_letter(stab[i], e.id) == restrict_letter(stab[j], e.id))
                        return {false, false, e.id, stab[i], stab[j]};
        }
        return {true, false, "", "", ""};
    }

    bool is_symmetric() const {
        for (const auto& e : graph_.edges()) {
            std::set<std::string> image;
            std::size_t count = 0;
            for (const auto& g : elements()) {
                if (domain_vertex(g) != e.range) continue;
                ++count;
                image.insert(restrict_letter(g, e.id));
            }
            if (image.size() != count) return false;
            // surjectivity onto the elements at the letter's end
            std::size_t target = 0;
            for (const auto& g : elements())
                if (domain_vertex(g) == e.domain) ++target;
            if (image.size() != target) return false;
        }
        return true;
    }

    // a finite system from an automaton whose enumeration is exact
    static table_system from_automaton(const automaton& a, int depth, std::size_t cap) {
        enumeration_result r = enumerate_groupoid(a, depth, cap);
        if (r.approximate)
            throw unsupported_error("groupoid enumeration is not exact at depth " +
                                    std::to_string(depth));
        auto class_of = [&](const gword& g) -> std::string {
            for (const auto& [name, rep] : r.representatives)
                if (rep.range() == g.range() && rep.domain() == g.domain() &&
                    a.equivalent(rep, g, depth))
                    return name;
            throw domain_error("restriction escapes the enumerated groupoid");
        };
        letter_map act, restrict;
        std::map<std::string, std::string> vertex_of;
        for (const auto& [name, rep] : r.representatives) {
            if (rep.is_identity_word()) vertex_of[name] = rep.range();
            for (const auto& e : a.graph().edges()) {
                if (e.range != rep.domain()) continue;
                word x = word::make(a.graph(), {e.id});
                act[{name, e.id}] = a.act(rep, x).letters()[0];
                restrict[{name, e.id}] = class_of(a.restrict(rep, x));
            }
        }
        return table_system(a.graph(), r.groupoid, std::move(act), std::move(restrict),
                            std::move(vertex_of));
    }

  private:
    std::size_t graph_index(const std::string& letter) const {
        const auto& es = graph_.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            if (es[i].id == letter) return i;
        return es.size();
    }

    void validate() const {
        // the identity map must pair identities with vertices one-to-one
        std::set<std::string> vs;
        for (const auto& [e, v] : vertex_of_) {
            if (!group_.is_identity(e))
                throw validation_error(e + " mapped to a vertex but is not an identity");
            if (!graph_.has_vertex(v)) throw validation_error("unknown vertex " + v);
            if (!vs.insert(v).second) throw validation_error("two identities at vertex " + v);
        }
        if (vs.size() != group_.identity_count() || vs.size() != graph_.vertices().size())
            throw validation_error("identities and vertices must correspond");

        for (const auto& g : elements()) {
            std::set<std::string> outs;
            for (const auto& e : graph_.edges()) {
                bool composable = domain_vertex(g) == e.range;
                bool defined = act_.count({g, e.id}) != 0;
                if (defined != composable)
                    throw validation_error("action table mismatch for " + g + " on " + e.id);
                if (restrict_.count({g, e.id}) != defined)
                    throw validation_error("restriction table mismatch for " + g + " on " +
                                           e.id);
                if (!defined) continue;
                const std::string& y = act_.at({g, e.id});
                if (!graph_.has_edge(y) || graph_.edge(y).range != range_vertex(g))
                    throw validation_error("image of " + e.id + " under " + g +
                                           " at wrong vertex");
                if (!outs.insert(y).second)
                    throw validation_error("letter action of " + g + " not injective");
                const std::string& r = restrict_.at({g, e.id});
                if (domain_vertex(r) != e.domain ||
                    range_vertex(r) != graph_.edge(y).domain)
                    throw validation_error("restriction of " + g + " on " + e.id +
                                           " has wrong type");
            }
        }
        for (const auto& [e, v] : vertex_of_)
            for (const auto& x : graph_.edges())
                if (x.range == v) {
                    if (act_.at({e, x.id}) != x.id)
                        throw validation_error("identity moves letter " + x.id);
                    if (!group_.is_identity(restrict_.at({e, x.id})))
                        throw validation_error("identity has nontrivial restriction on " +
                                               x.id);
                }
        // composition laws on letters
        for (const auto& g : elements())
            for (const auto& h : elements()) {
                if (!group_.defined(g, h)) continue;
                std::string gh = mul(g, h);
                for (const auto& x : graph_.edges()) {
                    if (x.range != domain_vertex(h)) continue;
                    std::string hx = act_.at({h, x.id});
                    if (act_.at({gh, x.id}) != act_.at({g, hx}))
                        throw validation_error("letter action is not a homomorphism at " +
                                               x.id);
                    if (restrict_.at({gh, x.id}) !=
                        mul(restrict_.at({g, hx}), restrict_.at({h, x.id})))
                        throw validation_error("letter restriction cocycle fails at " + x.id);
                }
            }
    }

    directed_graph graph_;
    finite_groupoid group_;
    letter_map act_;
    letter_map restrict_;
    std::map<std::string, std::string> vertex_of_;
};

// ---------------------------------------------------------------------------
// symbolic backend: G is the free abelian group of rank one, the action of
// the generator is a letter permutation with integer restriction exponents
// ---------------------------------------------------------------------------

class zk_system {
  public:
    using element = long long;

    // from a one-vertex automaton with a single state whose restrictions
    // are powers of that state
    static zk_system from_automaton(const automaton& a) {
        if (a.states().size() != 1)
            throw unsupported_error("symbolic backend needs exactly one state; "
                                    "free abelian rank above one is not implemented");
        if (a.multi_vertex())
            throw unsupported_error("symbolic backend needs a one-vertex graph");
        zk_system s;
        s.gen_ = a.states()[0].id;
        for (const auto& e : a.graph().edges()) s.letters_.push_back(e.id);
        s.graph_ = a.graph();
        for (const auto& e : a.graph().edges()) {
            const transition* t = a.find_transition(s.gen_, e.id);
            if (t == nullptr)
                throw unsupported_error("symbolic backend needs a total action");
            long long exp = 0;
            for (const auto& tok : t->restriction) {
                if (tok.state != s.gen_)
                    throw unsupported_error("restriction is not a power of the generator");
                exp += tok.inv ? -1 : 1;
            }
            s.image_[e.id] = t->out;
            s.exp_[e.id] = exp;
        }
        return s;
    }

    const directed_graph& graph() const { return graph_; }
    const std::string& generator() const { return gen_; }

    long long mul(long long g, long long h) const { return g + h; }
    long long inv(long long g) const { return -g; }
    bool is_id(long long g) const { return g == 0; }
    std::string format(long long g) const {
        if (g == 0) return "1";
        if (g == 1) return gen_;
        return gen_ + "^" + std::to_string(g);
    }

    std::string act_letter(long long m, const std::string& x) const {
        std::string cur = x;
        for (long long i = 0; i < m; ++i) cur = image_.at(cur);
        for (long long i = 0; i > m; --i) cur = preimage(cur);
        return cur;
    }
    long long restrict_letter(long long m, const std::string& x) const {
        long long e = 0;
        std::string cur = x;
        for (long long i = 0; i < m; ++i) {
            e += exp_.at(cur);
            cur = image_.at(cur);
        }
        for (long long i = 0; i > m; --i) {
            cur = preimage(cur);
            e -= exp_.at(cur);
        }
        return e;
    }

    word act(long long m, const word& w) const {
        long long cur = m;
        std::vector<std::string> out;
        for (const auto& x : w.letters()) {
            out.push_back(act_letter(cur, x));
            cur = restrict_letter(cur, x);
        }
        if (out.empty()) return w;
        return word::make(graph_, out);
    }

    long long restrict_word(long long m, const word& w) const {
        long long cur = m;
        for (const auto& x : w.letters()) cur = restrict_letter(cur, x);
        return cur;
    }

    // orbit of a letter under the generator
    std::vector<std::string> orbit_of(const std::string& x) const {
        std::vector<std::string> orbit{x};
        std::string cur = image_.at(x);
        while (cur != x) {
            orbit.push_back(cur);
            cur = image_.at(cur);
        }
        return orbit;
    }
    long long orbit_length(const std::string& x) const {
        return static_cast<long long>(orbit_of(x).size());
    }
    // sum of restriction exponents around the orbit: phi(a^p) = a^c
    long long cycle_sum(const std::string& x) const {
        long long c = 0;
        for (const auto& y : orbit_of(x)) c += exp_.at(y);
        return c;
    }

    std::vector<std::vector<std::string>> orbits() const {
        std::vector<std::vector<std::string>> out;
        std::set<std::string> seen;
        for (const auto& x : letters_)
            if (!seen.count(x)) {
                auto orbit = orbit_of(x);
                for (const auto& y : orbit) seen.insert(y);
                out.push_back(std::move(orbit));
            }
        return out;
    }

    // the stabilizer of x is p Z for p the orbit length; phi is injective
    // exactly when the cycle sum is nonzero
    cancellativity_result is_right_cancellative() const {
        for (const auto& x : letters_)
            if (cycle_sum(x) == 0)
                return {false, false, x, format(orbit_length(x)), "1"};
        return {true, false, "", "", ""};
    }

    // rho_x: a^m -> a^{restriction exponent}; bijective iff the exponent map
    // m -> e(m,x) is a bijection of Z, i.e. the orbit residues fill Z/|c|
    bool is_symmetric() const {
        for (const auto& x : letters_) {
            long long p = orbit_length(x), c = cycle_sum(x);
            if (c == 0 || p != std::llabs(c)) return false;
            std::set<long long> residues;
            for (long long m = 0; m < p; ++m) {
                long long e = restrict_letter(m, x);
                residues.insert(((e % c) + std::llabs(c)) % std::llabs(c));
            }
            if (static_cast<long long>(residues.size()) != std::llabs(c)) return false;
        }
        return true;
    }

  private:
    std::string preimage(const std::string& y) const {
        for (const auto& [from, to] : image_)
            if (to == y) return from;
        throw domain_error("letter action not invertible at " + y);
    }

    directed_graph graph_;
    std::string gen_;
    std::vector<std::string> letters_;
    std::map<std::string, std::string> image_;
    std::map<std::string, long long> exp_;
};

// ---------------------------------------------------------------------------
// automaton backend: group words with depth-bounded equality; structural
// answers are flagged approximate unless certified syntactically
// ---------------------------------------------------------------------------

class aut_system {
  public:
    using element = gword;

    aut_system(automaton a, int depth) : aut_(std::move(a)), depth_(depth) {}

    const automaton& machine() const { return aut_; }
    const directed_graph& graph() const { return aut_.graph(); }
    int depth() const { return depth_; }

    gword mul(const gword& g, const gword& h) const { return concat(g, h); }
    gword inv(const gword& g) const { return inverse(g); }
    bool is_id(const gword& g) const { return g.is_identity_word(); }
    std::string format(const gword& g) const { return g.str(); }

    word act(const gword& g, const word& w) const { return aut_.act(g, w); }
    gword restrict_word(const gword& g, const word& w) const { return aut_.restrict(g, w); }

    std::vector<std::vector<std::string>> orbits() const {
        std::vector<std::vector<std::string>> out;
        std::set<std::string> seen;
        for (const auto& e : graph().edges()) {
            if (seen.count(e.id)) continue;
            std::vector<std::string> orbit{e.id};
            seen.insert(e.id);
            for (std::size_t i = 0; i < orbit.size(); ++i)
                for (const auto& s : aut_.states())
                    for (bool invd : {false, true}) {
                        gtoken t{s.id, invd};
                        if (aut_.token_domain(t) != graph().edge(orbit[i]).range) continue;
                        word x = word::make(graph(), {orbit[i]});
                        std::string y = aut_.act(aut_.make_gword({t}), x).letters()[0];
                        if (seen.insert(y).second) orbit.push_back(y);
                    }
            std::sort(orbit.begin(), orbit.end(), [&](const auto& a, const auto& b) {
                return graph_index(a) < graph_index(b);
            });
            out.push_back(std::move(orbit));
        }
        return out;
    }

    // searches state words up to the given length for a pair stabilizing a
    // letter with syntactically equal restrictions; a syntactic collision
    // between exactly distinguished words is an exact "no"
    cancellativity_result is_right_cancellative(std::size_t search_len = 1) const {
        std::vector<gword> candidates;
        for (const auto& s : aut_.states()) candidates.push_back(aut_.make_gword({gtoken{s.id, false}}));
        std::size_t start = 0, single = candidates.size();
        for (std::size_t l = 1; l < search_len; ++l) {
            std::size_t end = candidates.size();
            for (std::size_t i = start; i < end; ++i)
                for (std::size_t j = 0; j < single; ++j) {
                    if (candidates[i].domain() != candidates[j].range()) continue;
                    candidates.push_back(concat(candidates[i], candidates[j]));
                }
            start = end;
        }
        for (const auto& v : graph().vertices()) candidates.push_back(gword::identity(v));

        for (const auto& e : graph().edges()) {
            word x = word::make(graph(), {e.id});
            for (std::size_t i = 0; i < candidates.size(); ++i)
                for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                    const gword &g = candidates[i], &h = candidates[j];
                    if (g.domain() != e.range || h.domain() != e.range ||
                        g.range() != h.range())
                        continue;
                    if (aut_.act(g, x) != x || aut_.act(h, x) != x) continue;
                    if (aut_.equivalent(g, h, depth_)) continue;  // same element
                    if (aut_.restrict(g, x) == aut_.restrict(h, x))
                        return {false, false, e.id, g.str(), h.str()};
                    if (aut_.equivalent(aut_.restrict(g, x), aut_.restrict(h, x), depth_))
                        return {false, true, e.id, g.str(), h.str()};
                }
        }
        return {true, true, "", "", ""};
    }

  private:
    std::size_t graph_index(const std::string& letter) const {
        const auto& es = graph().edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            if (es[i].id == letter) return i;
        return es.size();
    }

    automaton aut_;
    int depth_;
};

// ---------------------------------------------------------------------------
// generic operations over any backend
// ---------------------------------------------------------------------------

template <class Sys>
rees_elem<typename Sys::element> multiply(const Sys& s,
                                          const rees_elem<typename Sys::element>& a,
                                          const rees_elem<typename Sys::element>& b) {
    return {concat(a.w, s.act(a.g, b.w)), s.mul(s.restrict_word(a.g, b.w), b.g)};
}

template <class Sys>
bool green_R(const Sys&, const rees_elem<typename Sys::element>& a,
             const rees_elem<typename Sys::element>& b) {
    return a.w == b.w;
}

// word-level orbit membership, computed by closing the word orbit
inline bool same_word_orbit_table(const table_system& s, const word& x, const word& y) {
    if (x.size() != y.size()) return false;
    for (const auto& g : s.elements()) {
        if (s.domain_vertex(g) != x.range()) continue;
        if (s.act(g, x) == y) return true;
    }
    return false;
}

inline bool same_word_orbit_zk(const zk_system& s, const word& x, const word& y) {
    if (x.size() != y.size()) return false;
    word cur = x;
    do {
        if (cur == y) return true;
        cur = s.act(1, cur);
    } while (!(cur == x));
    return false;
}

inline bool same_word_orbit_aut(const aut_system& s, const word& x, const word& y) {
    if (x.size() != y.size()) return false;
    auto key = [](const word& w) { return w.str() + "|" + w.range(); };
    std::vector<word> frontier{x};
    std::set<std::string> seen{key(x)};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (frontier[i] == y) return true;
        for (const auto& st : s.machine().states())
            for (bool invd : {false, true}) {
                gtoken t{st.id, invd};
                if (s.machine().token_domain(t) != frontier[i].range()) continue;
                word img = s.machine().act(s.machine().make_gword({t}), frontier[i]);
                if (seen.insert(key(img)).second) frontier.push_back(img);
            }
    }
    return false;
}

inline bool green_J(const table_system& s, const rees_elem<std::string>& a,
                    const rees_elem<std::string>& b) {
    return same_word_orbit_table(s, a.w, b.w);
}
inline bool green_J(const zk_system& s, const rees_elem<long long>& a,
                    const rees_elem<long long>& b) {
    return same_word_orbit_zk(s, a.w, b.w);
}
inline bool green_J(const aut_system& s, const rees_elem<gword>& a,
                    const rees_elem<gword>& b) {
    return same_word_orbit_aut(s, a.w, b.w);
}

}  // namespace selfsim
