#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/io.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

struct gtoken {
    std::string state;
    bool inv = false;
    friend bool operator==(const gtoken&, const gtoken&) = default;
    friend bool operator<(const gtoken& a, const gtoken& b) {
        return a.state != b.state ? a.state < b.state : a.inv < b.inv;
    }
    std::string str() const { return inv ? state + "^-1" : state; }
};

// word over automaton states and their formal inverses; like paths, stored
// left to right with the rightmost token acting first, and an empty word
// carries a vertex anchor
class gword {
  public:
    gword() = default;

    static gword identity(const std::string& vertex) {
        gword g;
        g.range_ = g.domain_ = vertex;
        return g;
    }

    const std::vector<gtoken>& tokens() const { return toks_; }
    const std::string& range() const { return range_; }
    const std::string& domain() const { return domain_; }
    bool is_identity_word() const { return toks_.empty(); }
    std::size_t size() const { return toks_.size(); }

    friend bool operator==(const gword& a, const gword& b) {
        return a.toks_ == b.toks_ && a.range_ == b.range_ && a.domain_ == b.domain_;
    }
    friend bool operator<(const gword& a, const gword& b) {
        if (a.toks_ != b.toks_) return a.toks_ < b.toks_;
        if (a.range_ != b.range_) return a.range_ < b.range_;
        return a.domain_ < b.domain_;
    }

    // adjacent formal inverse pairs cancel eagerly; semantics unchanged
    friend gword concat(const gword& a, const gword& b) {
        if (a.domain_ != b.range_)
            throw composition_error("group words not composable: domain " + a.domain_ +
                                    " vs range " + b.range_);
        gword out = a;
        out.domain_ = b.domain_;
        for (const auto& tk : b.toks_) {
            if (!out.toks_.empty() && out.toks_.back().state == tk.state &&
                out.toks_.back().inv != tk.inv)
                out.toks_.pop_back();
            else
                out.toks_.push_back(tk);
        }
        return out;
    }

    friend gword inverse(const gword& g) {
        gword out;
        out.range_ = g.domain_;
        out.domain_ = g.range_;
        for (std::size_t i = g.toks_.size(); i-- > 0;)
            out.toks_.push_back({g.toks_[i].state, !g.toks_[i].inv});
        return out;
    }

    std::string str() const {
        if (toks_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < toks_.size(); ++i)
            out += (i ? " " : "") + toks_[i].str();
        return out;
    }

  private:
    friend class automaton;
    std::vector<gtoken> toks_;
    std::string range_;
    std::string domain_;
};

struct transition {
    std::string state;
    std::string in;
    std::string out;
    std::vector<gtoken> restriction;
    friend bool operator==(const transition&, const transition&) = default;
};

struct verify_report {
    bool passed = true;
    int depth = 0;
    bool multi_vertex = false;
    std::string counterexample;  // empty when passed
};

// typed Moore machine presenting a self-similar action: states act on the
// edge alphabet by an output bijection per state and restrict to state words
class automaton {
  public:
    automaton() = default;

    automaton(directed_graph graph, std::vector<edge_decl> states,
              std::vector<transition> transitions)
        : graph_(std::move(graph)), states_(std::move(states)),
          transitions_(std::move(transitions)) {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            const auto& s = states_[i];
            if (s.id.empty()) throw validation_error("empty state id");
            if (graph_.has_vertex(s.id) || graph_.has_edge(s.id))
                throw validation_error("state id collides with graph id: " + s.id);
            if (!state_index_.emplace(s.id, i).second)
                throw validation_error("duplicate state id: " + s.id);
            if (!graph_.has_vertex(s.range))
                throw validation_error("state " + s.id + " has undeclared range " + s.range);
            if (!graph_.has_vertex(s.domain))
                throw validation_error("state " + s.id + " has undeclared domain " + s.domain);
        }
        for (std::size_t i = 0; i < transitions_.size(); ++i) {
            const transition& t = transitions_[i];
            const edge_decl& st = state(t.state);
            const edge_decl& in = graph_.edge(t.in);
            const edge_decl& out = graph_.edge(t.out);
            if (in.range != st.domain)
                throw validation_error("transition input " + t.in + " not at domain of " +
                                       t.state);
            if (out.range != st.range)
                throw validation_error("transition output " + t.out + " not at range of " +
                                       t.state);
            if (!trans_index_.emplace(std::make_pair(t.state, t.in), i).second)
                throw validation_error("duplicate transition for " + t.state + " on " + t.in);
            // restriction typing: range = domain of output, domain = domain of input
            gword r = make_gword(t.restriction, in.domain);
            if (r.range() != out.domain || r.domain() != in.domain)
                throw validation_error("restriction of " + t.state + " on " + t.in +
                                       " has wrong type");
        }
        for (const auto& s : states_) {
            std::set<std::string> outs;
            std::size_t inputs = 0;
            for (const auto& t : transitions_)
                if (t.state == s.id) {
                    ++inputs;
                    if (!outs.insert(t.out).second)
                        throw validation_error("output map of " + s.id + " not injective");
                }
            if (multi_vertex()) {
                // typed machines are total on the letters at each state's
                // domain vertex, and the outputs must fill its range vertex
                std::size_t expected_in = graph_.edges_with_range(s.domain).size();
                std::size_t expected_out = graph_.edges_with_range(s.range).size();
                if (inputs != expected_in)
                    throw validation_error("state " + s.id + " must act on all letters at " +
                                           s.domain);
                if (inputs != expected_out)
                    throw validation_error("output of " + s.id + " cannot cover letters at " +
                                           s.range);
            }
        }
    }

    const directed_graph& graph() const { return graph_; }
    const std::vector<edge_decl>& states() const { return states_; }
    const std::vector<transition>& transitions() const { return transitions_; }
    bool invertible() const { return true; }
    bool multi_vertex() const { return graph_.vertices().size() > 1; }

    const edge_decl& state(const std::string& id) const {
        auto it = state_index_.find(id);
        if (it == state_index_.end()) throw domain_error("unknown state: " + id);
        return states_[it->second];
    }
    bool has_state(const std::string& id) const { return state_index_.count(id) != 0; }

    const transition* find_transition(const std::string& state, const std::string& in) const {
        auto it = trans_index_.find(std::make_pair(state, in));
        return it == trans_index_.end() ? nullptr : &transitions_[it->second];
    }

    // ----- group word construction --------------------------------------

    gword make_gword(std::vector<gtoken> tokens, const std::string& anchor = "") const {
        gword g;
        if (tokens.empty()) {
            if (anchor.empty()) throw composition_error("identity word needs a vertex anchor");
            if (!graph_.has_vertex(anchor)) throw domain_error("unknown vertex: " + anchor);
            return gword::identity(anchor);
        }
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
            if (token_domain(tokens[i]) != token_range(tokens[i + 1]))
                throw composition_error("state tokens not composable: " + tokens[i].str() +
                                        " " + tokens[i + 1].str());
        }
        g.range_ = token_range(tokens.front());
        g.domain_ = token_domain(tokens.back());
        g.toks_ = std::move(tokens);
        return g;
    }

    std::string token_range(const gtoken& t) const {
        const edge_decl& s = state(t.state);
        return t.inv ? s.domain : s.range;
    }
    std::string token_domain(const gtoken& t) const {
        const edge_decl& s = state(t.state);
        return t.inv ? s.range : s.domain;
    }

    // text form: space-separated state tokens with ^-1 suffixes; `1` is the
    // identity (with `1@vertex` required over multi-vertex graphs)
    gword parse_gword(const std::string& text) const {
        auto toks = split_ws(trim(text));
        if (toks.size() == 1 && (toks[0] == "1" || toks[0].rfind("1@", 0) == 0)) {
            std::string anchor;
            if (toks[0] == "1") {
                if (multi_vertex())
                    throw parse_error("identity over a multi-vertex graph needs 1@vertex");
                anchor = graph_.vertices()[0];
            } else {
                anchor = toks[0].substr(2);
            }
            try {
                return make_gword({}, anchor);
            } catch (const selfsim::error& e) {
                throw parse_error(e.what());
            }
        }
        std::vector<gtoken> tokens;
        for (const auto& tok : toks) {
            gtoken t;
            if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
                t.state = tok.substr(0, tok.size() - 3);
                t.inv = true;
            } else {
                t.state = tok;
            }
            if (!has_state(t.state)) throw parse_error("unknown state token: " + tok);
            tokens.push_back(t);
        }
        try {
            return make_gword(std::move(tokens));
        } catch (const selfsim::error& e) {
            throw parse_error(e.what());
        }
    }

    // ----- the action ----------------------------------------------------

    // single token on a single letter: returns (output letter, restriction)
    std::pair<std::string, gword> step(const gtoken& tok, const std::string& letter) const {
        const edge_decl& x = graph_.edge(letter);
        if (!tok.inv) {
            if (x.range != state(tok.state).domain)
                throw composition_error("state " + tok.state + " cannot act at vertex " +
                                        x.range);
            const transition* t = find_transition(tok.state, letter);
            if (t == nullptr)
                throw partial_action_error("state " + tok.state + " undefined on letter " +
                                           letter);
            return {t->out, make_gword(t->restriction, x.domain)};
        }
        if (x.range != state(tok.state).range)
            throw composition_error("state " + tok.state + "^-1 cannot act at vertex " +
                                    x.range);
        for (const auto& t : transitions_)
            if (t.state == tok.state && t.out == letter) {
                gword r = make_gword(t.restriction, graph_.edge(t.in).domain);
                return {t.in, inverse(r)};
            }
        throw partial_action_error("state " + tok.state + "^-1 undefined on letter " + letter);
    }

    // letterwise evaluation: the whole group word is threaded through the
    // word one letter at a time
    word act(const gword& g, const word& w) const {
        if (g.domain() != w.range())
            throw composition_error("group word with domain " + g.domain() +
                                    " cannot act on word with range " + w.range());
        if (g.is_identity_word()) return w;
        if (w.empty_word()) return word::empty(g.range());
        std::string cur = w.letters().front();
        gword rst = gword::identity(graph_.edge(cur).domain);
        for (std::size_t i = g.toks_.size(); i-- > 0;) {
            auto [next_letter, r] = step(g.toks_[i], cur);
            cur = next_letter;
            rst = concat(r, rst);
        }
        word tail = w.suffix_after(graph_, word::make(graph_, {w.letters().front()}));
        return concat(word::make(graph_, {cur}), act(rst, tail));
    }

    // tokenwise evaluation: each token transforms the full word in turn;
    // agrees with act by the composition axiom and is compared against it
    // during verification
    word act_tokenwise(const gword& g, const word& w) const {
        if (g.domain() != w.range())
            throw composition_error("group word with domain " + g.domain() +
                                    " cannot act on word with range " + w.range());
        word cur = w;
        for (std::size_t i = g.toks_.size(); i-- > 0;)
            cur = act(make_gword({g.toks_[i]}), cur);
        return cur;
    }

    gword restrict(const gword& g, const word& w) const {
        if (g.domain() != w.range())
            throw composition_error("group word with domain " + g.domain() +
                                    " cannot restrict along word with range " + w.range());
        if (g.is_identity_word()) return gword::identity(w.domain());
        gword front = g;
        gtoken last = front.toks_.back();
        front.toks_.pop_back();
        gword last_r = restrict_token(last, w);
        if (front.toks_.empty()) return last_r;
        front.domain_ = token_domain(front.toks_.back());
        word moved = act(make_gword({last}), w);
        return concat(restrict(front, moved), last_r);
    }

    // ----- verification and equivalence ----------------------------------

    verify_report verify_axioms(int depth) const;

    bool equivalent(const gword& g, const gword& h, int depth) const {
        if (g.range() != h.range() || g.domain() != h.domain())
            throw domain_error("state words must share range and domain");
        return first_difference(g, h, depth) == nullptr;
    }

    // witness word on which g and h act differently, nullptr if none to depth
    std::unique_ptr<word> first_difference(const gword& g, const gword& h, int depth) const {
        std::vector<word> frontier{word::empty(g.domain())};
        for (int l = 0; l < depth; ++l) {
            std::vector<word> next;
            for (const auto& w : frontier)
                for (const auto& e : graph_.edges()) {
                    if (e.range != w.domain()) continue;
                    word ext = concat(w, word::make(graph_, {e.id}));
                    if (act(g, ext) != act(h, ext))
                        return std::make_unique<word>(ext);
                    next.push_back(std::move(ext));
                }
            frontier = std::move(next);
        }
        return nullptr;
    }

    // all composable words with the given range vertex, lengths 0..depth
    std::vector<word> words_to_depth(const std::string& range_vertex, int depth) const {
        std::vector<word> out{word::empty(range_vertex)};
        std::size_t start = 0;
        for (int l = 0; l < depth; ++l) {
            std::size_t end = out.size();
            for (std::size_t i = start; i < end; ++i)
                for (const auto& e : graph_.edges()) {
                    if (e.range != out[i].domain()) continue;
                    out.push_back(concat(out[i], word::make(graph_, {e.id})));
                }
            start = end;
        }
        return out;
    }

    // ----- wreath recursion ----------------------------------------------

    struct wreath {
        std::vector<std::string> letters;  // declared order
        std::vector<std::string> images;
        std::vector<gword> restrictions;
    };

    wreath wreath_recursion(const gword& g) const {
        if (multi_vertex())
            throw unsupported_error("wreath recursion needs a one-vertex automaton");
        wreath out;
        for (const auto& e : graph_.edges()) {
            word x = word::make(graph_, {e.id});
            out.letters.push_back(e.id);
            out.images.push_back(act(g, x).letters()[0]);
            out.restrictions.push_back(restrict(g, x));
        }
        return out;
    }

    // ----- file format ---------------------------------------------------

    static automaton parse(const std::string& text) {
        section_file f = section_file::parse(text);
        f.require_only({"vertices", "alphabet", "states", "transitions"});
        std::vector<std::string> vs;
        for (const auto& line : f.lines("vertices"))
            for (const auto& tok : split_ws(line)) vs.push_back(tok);
        std::vector<edge_decl> alphabet;
        for (const auto& line : f.lines("alphabet"))
            alphabet.push_back(directed_graph::parse_edge_line(line));
        std::vector<edge_decl> states;
        for (const auto& line : f.lines("states"))
            states.push_back(directed_graph::parse_edge_line(line));
        std::vector<transition> transitions;
        for (const auto& line : f.lines("transitions")) {
            auto toks = split_ws(line);
            if (toks.size() < 6 || toks[2] != "->" || toks[4] != ";")
                throw parse_error("transition must be `STATE LETTER -> LETTER ; WORD`: " +
                                  line);
            transition t;
            t.state = toks[0];
            t.in = toks[1];
            t.out = toks[3];
            std::vector<std::string> rest(toks.begin() + 5, toks.end());
            if (!(rest.size() == 1 && rest[0] == "1")) {
                for (const auto& tok : rest) {
                    gtoken g;
                    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
                        g.state = tok.substr(0, tok.size() - 3);
                        g.inv = true;
                    } else {
                        g.state = tok;
                    }
                    t.restriction.push_back(g);
                }
            }
            transitions.push_back(std::move(t));
        }
        try {
            return automaton(directed_graph(std::move(vs), std::move(alphabet)),
                             std::move(states), std::move(transitions));
        } catch (const validation_error& e) {
            throw parse_error(e.what());
        }
    }

    std::string serialize() const {
        std::string out = "[vertices]\n";
        for (const auto& v : graph_.vertices()) out += v + "\n";
        out += "[alphabet]\n";
        for (const auto& e : graph_.edges())
            out += e.id + " range=" + e.range + " domain=" + e.domain + "\n";
        out += "[states]\n";
        for (const auto& s : states_)
            out += s.id + " range=" + s.range + " domain=" + s.domain + "\n";
        out += "[transitions]\n";
        for (const auto& t : transitions_) {
            out += t.state + " " + t.in + " -> " + t.out + " ; ";
            if (t.restriction.empty()) {
                out += "1";
            } else {
                for (std::size_t i = 0; i < t.restriction.size(); ++i)
                    out += (i ? " " : "") + t.restriction[i].str();
            }
            out += "\n";
        }
        return out;
    }

    friend bool operator==(const automaton& a, const automaton& b) {
        return a.graph_ == b.graph_ && a.states_ == b.states_ &&
               a.transitions_ == b.transitions_;
    }

  private:
    gword restrict_token(const gtoken& tok, const word& w) const {
        if (w.empty_word()) return make_gword({tok});
        std::string letter = w.letters().front();
        auto [out, r] = step(tok, letter);
        word tail = w.suffix_after(graph_, word::make(graph_, {letter}));
        return restrict(r, tail);
    }

    directed_graph graph_;
    std::vector<edge_decl> states_;
    std::vector<transition> transitions_;
    std::map<std::string, std::size_t> state_index_;
    std::map<std::pair<std::string, std::string>, std::size_t> trans_index_;
};

// both machines side by side over their shared graph, with b's states renamed
// by the suffix; states of a and b can then be compared with `equivalent`
inline automaton disjoint_union(const automaton& a, const automaton& b,
                                const std::string& suffix) {
    if (!(a.graph() == b.graph()))
        throw domain_error("disjoint union needs machines over the same graph");
    if (suffix.empty()) throw domain_error("state suffix must be nonempty");
    std::vector<edge_decl> states = a.states();
    for (edge_decl s : b.states()) {
        s.id += suffix;
        states.push_back(std::move(s));
    }
    std::vector<transition> transitions = a.transitions();
    for (transition t : b.transitions()) {
        t.state += suffix;
        for (auto& tok : t.restriction) tok.state += suffix;
        transitions.push_back(std::move(t));
    }
    return automaton(a.graph(), std::move(states), std::move(transitions));
}

// full axiom check over all states, composable state pairs, and composable
// words up to the given depth, comparing the two evaluation paths
inline verify_report automaton::verify_axioms(int depth) const {
    verify_report rep;
    rep.depth = depth;
    rep.multi_vertex = multi_vertex();
    auto fail = [&](const std::string& what) {
        if (rep.passed) {
            rep.passed = false;
            rep.counterexample = what;
        }
    };

    std::vector<gword> singles;
    for (const auto& s : states_) singles.push_back(make_gword({gtoken{s.id, false}}));

    for (const auto& v : graph_.vertices()) {
        gword one = gword::identity(v);
        for (const auto& w : words_to_depth(v, depth)) {
            // identity action and identity restriction
            if (act(one, w) != w) {
                fail("identity acts nontrivially on " + w.str());
                return rep;
            }
            if (!restrict(one, w).is_identity_word()) {
                fail("identity has nontrivial restriction on " + w.str());
                return rep;
            }
        }
    }

    for (const auto& g : singles) {
        // action fixes empty words, restriction along empty words fixes g
        word eps = word::empty(g.domain());
        if (!act(g, eps).empty_word()) fail(g.str() + " moves the empty word");
        if (restrict(g, eps) != g) fail(g.str() + " restricted along empty word changes");
        for (const auto& w : words_to_depth(g.domain(), depth)) try {
            word gw = act(g, w);
            gword res = restrict(g, w);
            if (gw.size() != w.size()) {
                fail("length not preserved: " + g.str() + " on " + w.str());
                return rep;
            }
            if (rep.multi_vertex) {
                // typing laws: the image sits at the state's range, its end
                // matches the restriction's range, and domains agree
                if (gw.range() != token_range(g.tokens()[0]))
                    fail("image of " + w.str() + " under " + g.str() + " at wrong vertex");
                if (gw.domain() != res.range())
                    fail("restriction range mismatch for " + g.str() + " on " + w.str());
                if (w.domain() != res.domain())
                    fail("restriction domain mismatch for " + g.str() + " on " + w.str());
                if (!rep.passed) return rep;
            }
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                std::vector<std::string> pre(w.letters().begin(),
                                             w.letters().begin() + static_cast<long>(cut));
                word u = pre.empty() ? word::empty(w.range()) : word::make(graph_, pre);
                word v = w.suffix_after(graph_, u);
                // action and restriction split across concatenation
                word rhs = concat(act(g, u), act(restrict(g, u), v));
                if (gw != rhs) {
                    fail("action fails to split at " + u.str() + " | " + v.str() +
                         " under " + g.str());
                    return rep;
                }
                if (res != restrict(restrict(g, u), v)) {
                    fail("restriction fails to split at " + u.str() + " | " + v.str() +
                         " under " + g.str());
                    return rep;
                }
            }
        } catch (const partial_action_error&) {
            // partial machines are checked over the defined part of the action
        }
    }

    for (const auto& g : singles)
        for (const auto& h : singles) {
            if (g.domain() != h.range()) continue;
            gword gh = concat(g, h);
            for (const auto& w : words_to_depth(h.domain(), depth)) try {
                word lhs = act(gh, w);
                if (lhs != act(g, act(h, w))) {
                    fail("composed action differs on " + w.str() + " for " + gh.str());
                    return rep;
                }
                if (lhs != act_tokenwise(gh, w)) {
                    fail("evaluation paths differ on " + w.str() + " for " + gh.str());
                    return rep;
                }
                if (restrict(gh, w) != concat(restrict(g, act(h, w)), restrict(h, w))) {
                    fail("composed restriction differs on " + w.str() + " for " + gh.str());
                    return rep;
                }
            } catch (const partial_action_error&) {
            }
        }
    return rep;
}

}  // namespace selfsim
