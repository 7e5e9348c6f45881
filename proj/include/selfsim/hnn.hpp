#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/groupoid.hpp"
#include "selfsim/io.hpp"
#include "selfsim/rees.hpp"

namespace selfsim {

// token of a mixed word: a stable letter with a sign, or a group element
// rendered as a string (table backend: element id; symbolic backend: power
// of the generator such as "a^3", with "1" for the identity)
struct hnn_token {
    bool stable = false;
    int sign = 1;
    std::string text;
    friend bool operator==(const hnn_token&, const hnn_token&) = default;
};

using mixed_word = std::vector<hnn_token>;

// extension data of a monoid/category over a group part: per stable letter
// a subgroup H, the homomorphism rho with h t = t rho(h), and a left-coset
// transversal of H fixing the normal form; Britton data (a transversal of
// rho(H) and the inverse of rho) is derived when rho is injective
class hnn_presentation {
  public:
    enum class backend { table, zk };

    struct stable_letter {
        std::string id;
        // identity element ids typing the letter: h t = t rho(h) needs
        // d(h) = range and d(rho(h)) = domain
        std::string range, domain;
        // finite backend data
        std::vector<std::string> subgroup;
        std::map<std::string, std::string> rho_map;
        std::vector<std::string> transversal;
        // symbolic backend data: H = modulus Z, rho(a^modulus) = a^factor
        long long modulus = 0;
        long long factor = 0;
        // derived
        std::vector<std::string> transversal_inv;
        std::map<std::string, std::string> rho_inv_map;
        bool rho_injective = true;
    };

    backend kind() const { return kind_; }
    const finite_groupoid& group() const { return group_; }
    const std::string& generator() const { return gen_; }
    const std::vector<stable_letter>& stables() const { return stables_; }

    bool has_stable(const std::string& id) const {
        for (const auto& s : stables_)
            if (s.id == id) return true;
        return false;
    }
    const stable_letter& stable(const std::string& id) const {
        for (const auto& s : stables_)
            if (s.id == id) return s;
        throw domain_error("unknown stable letter: " + id);
    }

    // ---- unified group-element operations on element strings ----

    std::string identity_elem() const {
        if (kind_ == backend::zk) return "1";
        for (const auto& e : group_.element_ids())
            if (group_.is_identity(e)) return e;
        throw validation_error("group has no identity");
    }

    std::string mul(const std::string& a, const std::string& b) const {
        if (kind_ == backend::zk) return format_exp(parse_exp(a) + parse_exp(b));
        return group_.product(a, b);
    }
    std::string inv(const std::string& a) const {
        if (kind_ == backend::zk) return format_exp(-parse_exp(a));
        return group_.inverse(a);
    }
    bool is_id(const std::string& a) const {
        if (kind_ == backend::zk) return parse_exp(a) == 0;
        return group_.is_identity(a);
    }
    std::string elem_range(const std::string& a) const {
        if (kind_ == backend::zk) return "1";
        return group_.id(group_.range(group_.at(a)));
    }
    std::string elem_domain(const std::string& a) const {
        if (kind_ == backend::zk) return "1";
        return group_.id(group_.domain(group_.at(a)));
    }

    long long parse_exp(const std::string& elem) const {
        if (elem == "1") return 0;
        if (elem == gen_) return 1;
        std::string prefix = gen_ + "^";
        if (elem.rfind(prefix, 0) == 0) {
            const std::string num = elem.substr(prefix.size());
            std::size_t used = 0;
            try {
                long long v = std::stoll(num, &used);
                if (used == num.size()) return v;
            } catch (const std::exception&) {
            }
        }
        throw parse_error("not a power of " + gen_ + ": " + elem);
    }
    std::string format_exp(long long m) const {
        if (m == 0) return "1";
        if (m == 1) return gen_;
        return gen_ + "^" + std::to_string(m);
    }

    // normalize an input group token, validating it names an element
    std::string parse_elem(const std::string& text) const {
        if (kind_ == backend::zk) return format_exp(parse_exp(text));
        for (const auto& e : group_.element_ids())
            if (e == text) return text;
        throw parse_error("unknown group element: " + text);
    }

    // ---- subgroup membership, rho, coset decomposition ----

    bool in_subgroup(const stable_letter& s, const std::string& g) const {
        if (kind_ == backend::zk) return parse_exp(g) % s.modulus == 0;
        return std::find(s.subgroup.begin(), s.subgroup.end(), g) != s.subgroup.end();
    }
    bool in_rho_image(const stable_letter& s, const std::string& g) const {
        if (kind_ == backend::zk) {
            long long e = parse_exp(g);
            return s.factor == 0 ? e == 0 : e % s.factor == 0;
        }
        for (const auto& [h, img] : s.rho_map)
            if (img == g) return true;
        return false;
    }
    std::string rho(const stable_letter& s, const std::string& h) const {
        if (kind_ == backend::zk) {
            long long e = parse_exp(h);
            if (e % s.modulus != 0)
                throw domain_error(h + " is not in the subgroup of " + s.id);
            return format_exp((e / s.modulus) * s.factor);
        }
        auto it = s.rho_map.find(h);
        if (it == s.rho_map.end())
            throw domain_error(h + " is not in the subgroup of " + s.id);
        return it->second;
    }
    std::string rho_inv(const stable_letter& s, const std::string& g) const {
        if (!s.rho_injective)
            throw not_cancellative_error("rho of stable letter " + s.id +
                                         " is not injective");
        if (kind_ == backend::zk) {
            long long e = parse_exp(g);
            if (s.factor == 0 || e % s.factor != 0)
                throw domain_error(g + " is not in the image of rho of " + s.id);
            return format_exp((e / s.factor) * s.modulus);
        }
        auto it = s.rho_inv_map.find(g);
        if (it == s.rho_inv_map.end())
            throw domain_error(g + " is not in the image of rho of " + s.id);
        return it->second;
    }

    // v = rep * h with rep in the transversal and h in the subgroup
    std::pair<std::string, std::string> decompose(const stable_letter& s,
                                                  const std::string& v) const {
        if (kind_ == backend::zk) {
            long long e = parse_exp(v);
            long long rep = ((e % s.modulus) + s.modulus) % s.modulus;
            return {format_exp(rep), format_exp(e - rep)};
        }
        for (const auto& rep : s.transversal) {
            if (elem_range(rep) != elem_range(v)) continue;
            std::string h = mul(inv(rep), v);
            if (in_subgroup(s, h)) return {rep, h};
        }
        throw decomposition_error("no coset decomposition of " + v + " for " + s.id);
    }

    // v = rep * u with rep in the derived transversal and u in rho(H)
    std::pair<std::string, std::string> decompose_inv(const stable_letter& s,
                                                      const std::string& v) const {
        if (kind_ == backend::zk) {
            if (s.factor == 0)
                throw not_cancellative_error("rho of stable letter " + s.id +
                                             " is not injective");
            long long c = std::llabs(s.factor);
            long long e = parse_exp(v);
            long long rep = ((e % c) + c) % c;
            return {format_exp(rep), format_exp(e - rep)};
        }
        for (const auto& rep : s.transversal_inv) {
            if (elem_range(rep) != elem_range(v)) continue;
            std::string u = mul(inv(rep), v);
            if (in_rho_image(s, u)) return {rep, u};
        }
        throw decomposition_error("no coset decomposition of " + v + " for " + s.id +
                                  " (inverse side)");
    }

    // ---- construction ----

    static hnn_presentation with_table(finite_groupoid group,
                                       std::vector<stable_letter> stables,
                                       std::string group_source = "") {
        hnn_presentation p;
        p.kind_ = backend::table;
        p.group_ = std::move(group);
        p.stables_ = std::move(stables);
        p.group_source_ = std::move(group_source);
        p.finalize();
        return p;
    }

    static hnn_presentation with_zk(std::string generator,
                                    std::vector<stable_letter> stables) {
        hnn_presentation p;
        p.kind_ = backend::zk;
        p.gen_ = std::move(generator);
        p.stables_ = std::move(stables);
        p.finalize();
        return p;
    }

    // file format: [group] with `table FILE` or `zk k=1`, then [stable]
    // lines `ID range=R domain=D subgroup=... rho=... transversal=...`
    // where R and D are identity element ids
    static hnn_presentation parse(const std::string& text,
                                  const std::string& base_dir = "") {
        section_file f = section_file::parse(text);
        f.require_only({"group", "stable"});
        const auto& glines = f.lines("group");
        if (glines.size() != 1)
            throw parse_error("[group] must hold exactly one line");
        auto gtoks = split_ws(glines[0]);
        hnn_presentation p;
        if (gtoks.size() == 2 && gtoks[0] == "zk") {
            if (expect_kv(gtoks[1], "k") != "1")
                throw unsupported_error("free abelian rank above one is not supported");
            p.kind_ = backend::zk;
        } else if (gtoks.size() == 2 && gtoks[0] == "table") {
            p.kind_ = backend::table;
            std::filesystem::path path(gtoks[1]);
            if (!base_dir.empty() && path.is_relative())
                path = std::filesystem::path(base_dir) / path;
            p.group_ = finite_groupoid::parse(read_file(path.string()));
            p.group_source_ = gtoks[1];
        } else {
            throw parse_error("[group] line must be `table FILE` or `zk k=1`");
        }
        for (const auto& line : f.lines("stable"))
            p.stables_.push_back(parse_stable_line(p, line));
        try {
            p.finalize();
        } catch (const validation_error& e) {
            throw parse_error(e.what());
        }
        return p;
    }

    static hnn_presentation load(const std::string& path) {
        return parse(read_file(path),
                     std::filesystem::path(path).parent_path().string());
    }

    std::string serialize() const {
        std::string out = "[group]\n";
        if (kind_ == backend::zk) {
            out += "zk k=1\n";
        } else {
            if (group_source_.empty())
                throw unsupported_error("presentation has no group file reference");
            out += "table " + group_source_ + "\n";
        }
        out += "[stable]\n";
        for (const auto& s : stables_) {
            out += s.id + " range=" + s.range + " domain=" + s.domain;
            if (kind_ == backend::zk) {
                out += " subgroup=" + std::to_string(s.modulus);
                out += " rho=" + std::to_string(s.factor);
                out += " transversal=";
                for (long long i = 0; i < s.modulus; ++i)
                    out += (i ? "," : "") + std::to_string(i);
            } else {
                out += " subgroup=" + join(s.subgroup);
                out += " rho=";
                for (std::size_t i = 0; i < s.subgroup.size(); ++i)
                    out += (i ? "," : "") + s.subgroup[i] + ":" +
                           s.rho_map.at(s.subgroup[i]);
                out += " transversal=" + join(s.transversal);
            }
            out += "\n";
        }
        return out;
    }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
        return out;
    }

    static stable_letter parse_stable_line(const hnn_presentation& p,
                                           const std::string& line) {
        auto toks = split_ws(line);
        if (toks.size() != 6)
            throw parse_error("stable line must be `ID range=R domain=D subgroup=... "
                              "rho=... transversal=...`: " + line);
        stable_letter s;
        s.id = toks[0];
        s.range = expect_kv(toks[1], "range");
        s.domain = expect_kv(toks[2], "domain");
        std::string sub = expect_kv(toks[3], "subgroup");
        std::string rho = expect_kv(toks[4], "rho");
        std::string tra = expect_kv(toks[5], "transversal");
        if (p.kind_ == backend::zk) {
            s.modulus = parse_int(sub);
            s.factor = parse_int(rho);
            std::vector<long long> exps;
            for (const auto& t : split_on(tra, ',')) exps.push_back(parse_int(t));
            if (s.modulus < 1) throw parse_error("subgroup index must be positive");
            for (long long i = 0; i < s.modulus; ++i)
                if (i >= static_cast<long long>(exps.size()) || exps[static_cast<std::size_t>(i)] != i)
                    throw parse_error("transversal must list exponents 0.." +
                                      std::to_string(s.modulus - 1));
            if (static_cast<long long>(exps.size()) != s.modulus)
                throw parse_error("transversal must list exponents 0.." +
                                  std::to_string(s.modulus - 1));
        } else {
            s.subgroup = split_on(sub, ',');
            for (const auto& pair : split_on(rho, ',')) {
                auto kv = split_on(pair, ':');
                if (kv.size() != 2)
                    throw parse_error("rho entries must be `h:image`: " + pair);
                if (!s.rho_map.emplace(kv[0], kv[1]).second)
                    throw parse_error("duplicate rho entry for " + kv[0]);
            }
            s.transversal = split_on(tra, ',');
        }
        return s;
    }

    static long long parse_int(const std::string& text) {
        std::size_t used = 0;
        try {
            long long v = std::stoll(text, &used);
            if (used == text.size()) return v;
        } catch (const std::exception&) {
        }
        throw parse_error("expected an integer, got '" + text + "'");
    }

    void finalize() {
        if (stables_.empty()) throw validation_error("no stable letters declared");
        std::set<std::string> ids;
        for (const auto& s : stables_) {
            if (s.id.empty() || s.id.find('^') != std::string::npos)
                throw validation_error("bad stable letter id: " + s.id);
            if (!ids.insert(s.id).second)
                throw validation_error("duplicate stable letter: " + s.id);
        }
        if (kind_ == backend::zk) {
            if (ids.count(gen_) || ids.count("1"))
                throw validation_error("stable letter collides with a group token");
            for (auto& s : stables_) {
                if (s.range != "1" || s.domain != "1")
                    throw validation_error("symbolic backend has a single identity 1");
                if (s.modulus < 1)
                    throw validation_error("subgroup index must be positive");
                s.rho_injective = s.factor != 0;
                s.transversal.clear();
                for (long long i = 0; i < s.modulus; ++i)
                    s.transversal.push_back(format_exp(i));
                s.transversal_inv.clear();
                if (s.rho_injective)
                    for (long long i = 0; i < std::llabs(s.factor); ++i)
                        s.transversal_inv.push_back(format_exp(i));
            }
            return;
        }
        for (const auto& e : group_.element_ids())
            if (ids.count(e))
                throw validation_error("stable letter collides with group element " + e);
        for (auto& s : stables_) validate_table_stable(s);
    }

    void validate_table_stable(stable_letter& s) {
        auto check_identity = [&](const std::string& e) {
            bool found = false;
            for (const auto& id : group_.element_ids()) found = found || id == e;
            if (!found || !group_.is_identity(e))
                throw validation_error(e + " is not an identity element");
        };
        check_identity(s.range);
        check_identity(s.domain);
        if (s.subgroup.empty()) throw validation_error("empty subgroup for " + s.id);
        std::set<std::string> sub(s.subgroup.begin(), s.subgroup.end());
        if (sub.size() != s.subgroup.size())
            throw validation_error("duplicate subgroup element for " + s.id);
        if (!sub.count(s.range))
            throw validation_error("subgroup of " + s.id + " must contain " + s.range);
        for (const auto& h : s.subgroup) {
            if (elem_range(h) != s.range || elem_domain(h) != s.range)
                throw validation_error("subgroup element " + h + " is not a loop at " +
                                       s.range);
            if (!sub.count(inv(h)))
                throw validation_error("subgroup of " + s.id + " not closed under inverse");
            for (const auto& k : s.subgroup)
                if (!sub.count(mul(h, k)))
                    throw validation_error("subgroup of " + s.id +
                                           " not closed under product");
        }
        // rho: defined exactly on H, lands in loops at the domain identity,
        // homomorphism; injectivity recorded for Britton mode
        for (const auto& h : s.subgroup)
            if (!s.rho_map.count(h))
                throw validation_error("rho of " + s.id + " undefined on " + h);
        if (s.rho_map.size() != s.subgroup.size())
            throw validation_error("rho of " + s.id + " defined outside the subgroup");
        for (const auto& [h, img] : s.rho_map)
            if (elem_range(img) != s.domain || elem_domain(img) != s.domain)
                throw validation_error("rho(" + h + ") is not a loop at " + s.domain);
        if (s.rho_map.at(s.range) != s.domain)
            throw validation_error("rho of " + s.id + " must send identity to identity");
        for (const auto& h : s.subgroup)
            for (const auto& k : s.subgroup)
                if (s.rho_map.at(mul(h, k)) != mul(s.rho_map.at(h), s.rho_map.at(k)))
                    throw validation_error("rho of " + s.id + " is not a homomorphism");
        s.rho_injective = true;
        s.rho_inv_map.clear();
        for (const auto& [h, img] : s.rho_map)
            if (!s.rho_inv_map.emplace(img, h).second) s.rho_injective = false;
        if (!s.rho_injective) s.rho_inv_map.clear();

        // transversal: distinct left cosets covering everything composable
        // on the left of the stable letter
        std::vector<std::string> universe;
        for (const auto& v : group_.element_ids())
            if (elem_domain(v) == s.range) universe.push_back(v);
        std::set<std::string> covered;
        bool has_identity_rep = false;
        for (const auto& rep : s.transversal) {
            if (elem_domain(rep) != s.range)
                throw validation_error("transversal element " + rep +
                                       " is not composable with " + s.id);
            has_identity_rep = has_identity_rep || rep == s.range;
            for (const auto& h : s.subgroup)
                if (!covered.insert(mul(rep, h)).second)
                    throw validation_error("transversal cosets overlap at " + rep);
        }
        if (!has_identity_rep)
            throw validation_error("transversal of " + s.id +
                                   " must contain the identity");
        if (covered.size() != universe.size())
            throw validation_error("transversal of " + s.id +
                                   " does not cover all cosets");

        // derived transversal of rho(H) for Britton mode
        s.transversal_inv.clear();
        if (s.rho_injective) {
            std::set<std::string> image;
            for (const auto& [h, img] : s.rho_map) image.insert(img);
            std::set<std::string> seen;
            for (const auto& v : group_.element_ids()) {
                if (elem_domain(v) != s.domain || seen.count(v)) continue;
                s.transversal_inv.push_back(v);
                for (const auto& im : image) seen.insert(mul(v, im));
            }
        }
    }

    backend kind_ = backend::zk;
    finite_groupoid group_;
    std::string gen_ = "a";
    std::string group_source_;
    std::vector<stable_letter> stables_;
};

// ---------------------------------------------------------------------------
// mixed word parsing and display
// ---------------------------------------------------------------------------

inline void check_mixed_composable(const hnn_presentation& p, const mixed_word& w) {
    std::string expected;
    for (const auto& tok : w) {
        std::string r, d;
        if (tok.stable) {
            const auto& s = p.stable(tok.text);
            r = tok.sign > 0 ? s.range : s.domain;
            d = tok.sign > 0 ? s.domain : s.range;
        } else {
            r = p.elem_range(tok.text);
            d = p.elem_domain(tok.text);
        }
        if (!expected.empty() && expected != r)
            throw composition_error("mixed word not composable at token " + tok.text);
        expected = d;
    }
}

inline mixed_word parse_mixed(const hnn_presentation& p, const std::string& text) {
    mixed_word out;
    for (const auto& tok : split_ws(text)) {
        const std::string inv_suffix = "^-1";
        if (tok.size() > inv_suffix.size() &&
            tok.compare(tok.size() - inv_suffix.size(), inv_suffix.size(),
                        inv_suffix) == 0 &&
            p.has_stable(tok.substr(0, tok.size() - inv_suffix.size()))) {
            out.push_back({true, -1, tok.substr(0, tok.size() - inv_suffix.size())});
        } else if (p.has_stable(tok)) {
            out.push_back({true, 1, tok});
        } else {
            out.push_back({false, 1, p.parse_elem(tok)});
        }
    }
    if (out.empty()) throw parse_error("empty mixed word");
    check_mixed_composable(p, out);
    return out;
}

// identity group tokens are elided; a word with no visible token prints as
// the identity element it equals
inline std::string format_mixed(const hnn_presentation& p, const mixed_word& w) {
    std::string out;
    for (const auto& tok : w) {
        if (!tok.stable && p.is_id(tok.text)) continue;
        if (!out.empty()) out += " ";
        out += tok.text;
        if (tok.stable && tok.sign < 0) out += "^-1";
    }
    if (out.empty()) {
        if (w.empty()) throw domain_error("empty mixed word");
        return w.front().text;
    }
    return out;
}

// ---------------------------------------------------------------------------
// normal forms
// ---------------------------------------------------------------------------

// rewrites v t -> g t rho(h) with v = g h over the transversal, left to
// right; the result alternates coset representatives and stable letters
// with a trailing group element
inline mixed_word hnn_normal_form(const hnn_presentation& p, const mixed_word& in) {
    if (in.empty()) throw domain_error("empty mixed word");
    check_mixed_composable(p, in);
    for (const auto& tok : in)
        if (tok.stable && tok.sign < 0)
            throw domain_error("inverted stable letter " + tok.text +
                               "; use the Britton normal form");
    std::string v = in.front().stable ? p.stable(in.front().text).range
                                      : p.elem_range(in.front().text);
    mixed_word out;
    for (const auto& tok : in) {
        if (!tok.stable) {
            v = p.mul(v, tok.text);
            continue;
        }
        const auto& s = p.stable(tok.text);
        auto [rep, h] = p.decompose(s, v);
        out.push_back({false, 1, rep});
        out.push_back({true, 1, s.id});
        v = p.rho(s, h);
    }
    out.push_back({false, 1, v});
    return out;
}

// Britton reduction: pinches t^-1 h t (h in H) and t u t^-1 (u in rho(H))
// are removed; surviving blocks carry coset representatives from the
// transversal (positive) or the derived transversal of rho(H) (negative)
inline mixed_word britton_normal_form(const hnn_presentation& p, const mixed_word& in) {
    if (in.empty()) throw domain_error("empty mixed word");
    check_mixed_composable(p, in);
    for (const auto& tok : in)
        if (tok.stable && !p.stable(tok.text).rho_injective)
            throw not_cancellative_error("rho of stable letter " + tok.text +
                                         " is not injective");
    struct block {
        std::string g;
        std::string id;
        int sign;
    };
    std::vector<block> stack;
    std::string pending;
    if (!in.front().stable)
        pending = p.elem_range(in.front().text);
    else {
        const auto& s = p.stable(in.front().text);
        pending = in.front().sign > 0 ? s.range : s.domain;
    }
    for (const auto& tok : in) {
        if (!tok.stable) {
            pending = p.mul(pending, tok.text);
            continue;
        }
        const auto& s = p.stable(tok.text);
        if (!stack.empty() && stack.back().id == s.id && stack.back().sign == -tok.sign) {
            if (tok.sign > 0 && p.in_subgroup(s, pending)) {
                std::string g = stack.back().g;
                stack.pop_back();
                pending = p.mul(g, p.rho(s, pending));
                continue;
            }
            if (tok.sign < 0 && p.in_rho_image(s, pending)) {
                std::string g = stack.back().g;
                stack.pop_back();
                pending = p.mul(g, p.rho_inv(s, pending));
                continue;
            }
        }
        if (tok.sign > 0) {
            auto [rep, h] = p.decompose(s, pending);
            stack.push_back({rep, s.id, 1});
            pending = p.rho(s, h);
        } else {
            auto [rep, u] = p.decompose_inv(s, pending);
            stack.push_back({rep, s.id, -1});
            pending = p.rho_inv(s, u);
        }
    }
    mixed_word out;
    for (const auto& b : stack) {
        out.push_back({false, 1, b.g});
        out.push_back({true, b.sign, b.id});
    }
    out.push_back({false, 1, pending});
    return out;
}

// ---------------------------------------------------------------------------
// extraction from action systems: one stable letter per letter orbit
// ---------------------------------------------------------------------------

inline std::string stable_name(std::size_t index, std::size_t count) {
    return count == 1 ? std::string("t") : "t" + std::to_string(index + 1);
}

inline hnn_presentation extract_presentation(const table_system& sys) {
    auto orbits = sys.orbits();
    std::vector<hnn_presentation::stable_letter> stables;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const std::string& x = orbits[i][0];
        hnn_presentation::stable_letter s;
        s.id = stable_name(i, orbits.size());
        s.range = sys.identity_at(sys.graph().edge(x).range);
        s.domain = sys.identity_at(sys.graph().edge(x).domain);
        s.subgroup = sys.stabilizer(x);
        for (const auto& h : s.subgroup) s.rho_map[h] = sys.phi(x, h);
        // first element in declared order representing each left coset
        std::set<std::string> covered;
        for (const auto& v : sys.elements()) {
            if (sys.domain_vertex(v) != sys.graph().edge(x).range) continue;
            if (covered.count(v)) continue;
            s.transversal.push_back(v);
            for (const auto& h : s.subgroup) covered.insert(sys.mul(v, h));
        }
        stables.push_back(std::move(s));
    }
    return hnn_presentation::with_table(sys.group(), std::move(stables));
}

inline hnn_presentation extract_presentation(const zk_system& sys) {
    auto orbits = sys.orbits();
    std::vector<hnn_presentation::stable_letter> stables;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        hnn_presentation::stable_letter s;
        s.id = stable_name(i, orbits.size());
        s.range = s.domain = "1";
        s.modulus = sys.orbit_length(orbits[i][0]);
        s.factor = sys.cycle_sum(orbits[i][0]);
        stables.push_back(std::move(s));
    }
    return hnn_presentation::with_zk(sys.generator(), std::move(stables));
}

}  // namespace selfsim
