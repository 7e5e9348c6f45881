#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/automaton.hpp"
#include "selfsim/error.hpp"
#include "selfsim/groupoid.hpp"

namespace selfsim {

// a finite quotient of the groupoid generated by the machine states, taken
// modulo depth-bounded equality of actions; exact when the merge classes
// form a bisimulation, otherwise flagged approximate
struct enumeration_result {
    finite_groupoid groupoid;
    int depth = 0;
    bool approximate = false;
    std::vector<std::pair<std::string, gword>> representatives;
};

inline enumeration_result enumerate_groupoid(const automaton& a, int depth,
                                             std::size_t cap) {
    std::vector<gword> reps;
    std::vector<std::string> names;
    std::vector<std::pair<gword, std::size_t>> merges;

    auto name_of = [&](const gword& g) -> std::string {
        if (g.is_identity_word())
            return a.multi_vertex() ? "1@" + g.range() : std::string("1");
        std::string out;
        for (std::size_t i = 0; i < g.tokens().size(); ++i)
            out += (i ? "*" : "") + g.tokens()[i].str();
        return out;
    };
    auto find_class = [&](const gword& g) -> long {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (reps[i].range() != g.range() || reps[i].domain() != g.domain()) continue;
            if (a.equivalent(reps[i], g, depth)) return static_cast<long>(i);
        }
        return -1;
    };
    auto insert = [&](const gword& g) -> std::size_t {
        long c = find_class(g);
        if (c >= 0) {
            if (reps[static_cast<std::size_t>(c)].tokens() != g.tokens())
                merges.emplace_back(g, static_cast<std::size_t>(c));
            return static_cast<std::size_t>(c);
        }
        if (reps.size() >= cap)
            throw cap_exceeded("more than " + std::to_string(cap) +
                               " groupoid classes found");
        reps.push_back(g);
        names.push_back(name_of(g));
        return reps.size() - 1;
    };

    std::vector<gword> gens;
    for (const auto& v : a.graph().vertices()) insert(gword::identity(v));
    // declared states are seeded before any inverses so classes keep their
    // declared names where possible
    for (const auto& s : a.states()) {
        gword g = a.make_gword({gtoken{s.id, false}});
        insert(g);
        gens.push_back(g);
        gens.push_back(a.make_gword({gtoken{s.id, true}}));
    }

    // closure under right products with generators and inverses, and under
    // restriction along single letters
    for (std::size_t i = 0; i < reps.size(); ++i) {
        gword cur = reps[i];  // copy: reps may reallocate
        insert(inverse(cur));
        for (const auto& g : gens)
            if (cur.domain() == g.range()) insert(concat(cur, g));
        for (const auto& e : a.graph().edges())
            if (e.range == cur.domain())
                insert(a.restrict(cur, word::make(a.graph(), {e.id})));
    }

    // the quotient is exact when every merge is certified by a bisimulation:
    // merged words agree with their representative letterwise and their
    // restrictions fall into equal classes
    bool approximate = false;
    for (const auto& [g, c] : merges) {
        const gword& r = reps[c];
        for (const auto& e : a.graph().edges()) {
            if (e.range != g.domain()) continue;
            word x = word::make(a.graph(), {e.id});
            if (a.act(g, x) != a.act(r, x) ||
                find_class(a.restrict(g, x)) != find_class(a.restrict(r, x))) {
                approximate = true;
                break;
            }
        }
        if (approximate) break;
    }

    finite_groupoid::raw_table raw;
    raw.elements = names;
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (reps[i].is_identity_word()) raw.identities.push_back(names[i]);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (reps[i].domain() != reps[j].range()) continue;
            long k = find_class(concat(reps[i], reps[j]));
            raw.rows.push_back({names[i], names[j], names[static_cast<std::size_t>(k)]});
        }

    enumeration_result out;
    out.groupoid = finite_groupoid(raw);
    out.depth = depth;
    out.approximate = approximate;
    for (std::size_t i = 0; i < reps.size(); ++i) out.representatives.emplace_back(names[i], reps[i]);
    return out;
}

}  // namespace selfsim
