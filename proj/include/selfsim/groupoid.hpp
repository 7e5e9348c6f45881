#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/io.hpp"

namespace selfsim {

// finite groupoid given by a partial multiplication table; a finite group is
// the one-identity special case.  Construction validates the full axiom set:
// identity behavior, unique domain/range identities, inverses, the
// composability pattern, and associativity on all composable triples.
class finite_groupoid {
  public:
    struct raw_table {
        std::vector<std::string> elements;
        std::vector<std::string> identities;
        // rows (a, b, c) meaning a * b = c
        std::vector<std::array<std::string, 3>> rows;
    };

    finite_groupoid() = default;

    explicit finite_groupoid(const raw_table& raw) {
        ids_ = raw.elements;
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (ids_[i].empty()) throw validation_error("empty element id");
            if (!index_.emplace(ids_[i], i).second)
                throw validation_error("duplicate element id: " + ids_[i]);
        }
        std::size_t n = ids_.size();
        identity_.assign(n, false);
        for (const auto& e : raw.identities) identity_[at(e)] = true;
        table_.assign(n * n, -1);
        for (const auto& row : raw.rows) {
            std::size_t a = at(row[0]), b = at(row[1]), c = at(row[2]);
            int& slot = table_[a * n + b];
            if (slot >= 0 && slot != static_cast<int>(c))
                throw validation_error("conflicting products for " + row[0] + " " + row[1]);
            slot = static_cast<int>(c);
        }
        validate();
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

    bool is_identity(std::size_t i) const { return identity_[i]; }
    std::size_t identity_count() const {
        std::size_t c = 0;
        for (bool b : identity_) c += b;
        return c;
    }
    bool is_group() const { return identity_count() == 1; }

    bool defined(std::size_t a, std::size_t b) const {
        return table_[a * size() + b] >= 0;
    }
    std::size_t product(std::size_t a, std::size_t b) const {
        int p = table_[a * size() + b];
        if (p < 0)
            throw composition_error("product undefined: " + ids_[a] + " * " + ids_[b]);
        return static_cast<std::size_t>(p);
    }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t domain(std::size_t a) const { return domain_[a]; }
    std::size_t range(std::size_t a) const { return range_[a]; }

    // id-based conveniences
    std::string product(const std::string& a, const std::string& b) const {
        return ids_[product(at(a), at(b))];
    }
    std::string inverse(const std::string& a) const { return ids_[inverse(at(a))]; }
    bool defined(const std::string& a, const std::string& b) const {
        return defined(at(a), at(b));
    }
    bool is_identity(const std::string& a) const { return identity_[at(a)]; }

    friend bool operator==(const finite_groupoid& a, const finite_groupoid& b) {
        return a.ids_ == b.ids_ && a.identity_ == b.identity_ && a.table_ == b.table_;
    }

    // file format: [elements] ids, [identities] ids, [table] rows `a b -> c`
    static finite_groupoid parse(const std::string& text) {
        raw_table raw = parse_raw(text, /*allow_zero=*/false).first;
        try {
            return finite_groupoid(raw);
        } catch (const validation_error& e) {
            throw parse_error(e.what());
        }
    }

    // shared row grammar for groupoid and inverse-semigroup table files;
    // returns the raw table plus the optional [zero] id
    static std::pair<raw_table, std::string> parse_raw(const std::string& text,
                                                       bool allow_zero) {
        section_file f = section_file::parse(text);
        if (allow_zero)
            f.require_only({"elements", "identities", "zero", "table"});
        else
            f.require_only({"elements", "identities", "table"});
        raw_table raw;
        for (const auto& line : f.lines("elements"))
            for (const auto& tok : split_ws(line)) raw.elements.push_back(tok);
        for (const auto& line : f.lines("identities"))
            for (const auto& tok : split_ws(line)) raw.identities.push_back(tok);
        for (const auto& line : f.lines("table")) {
            auto toks = split_ws(line);
            if (toks.size() != 4 || toks[2] != "->")
                throw parse_error("table row must be `a b -> c`: " + line);
            raw.rows.push_back({toks[0], toks[1], toks[3]});
        }
        std::string zero;
        if (allow_zero && f.has("zero")) {
            auto toks = f.lines("zero");
            if (toks.size() != 1 || split_ws(toks[0]).size() != 1)
                throw parse_error("[zero] must contain exactly one id");
            zero = split_ws(toks[0])[0];
        }
        return {raw, zero};
    }

    std::string serialize() const {
        std::string out = "[elements]\n";
        for (std::size_t i = 0; i < ids_.size(); ++i)
            out += ids_[i] + (i + 1 == ids_.size() ? "\n" : " ");
        out += "[identities]\n";
        {
            std::string line;
            for (std::size_t i = 0; i < ids_.size(); ++i)
                if (identity_[i]) line += (line.empty() ? "" : " ") + ids_[i];
            out += line + "\n";
        }
        out += "[table]\n";
        std::size_t n = size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (table_[a * n + b] >= 0)
                    out += ids_[a] + " " + ids_[b] + " -> " +
                           ids_[static_cast<std::size_t>(table_[a * n + b])] + "\n";
        return out;
    }

  private:
    void validate() {
        std::size_t n = size();
        if (identity_count() == 0) throw validation_error("no identities declared");
        // identity behavior on everything it multiplies with
        for (std::size_t e = 0; e < n; ++e) {
            if (!identity_[e]) continue;
            if (!defined(e, e) || product(e, e) != e)
                throw validation_error("identity law fails for " + ids_[e]);
            for (std::size_t g = 0; g < n; ++g) {
                if (defined(e, g) && product(e, g) != g)
                    throw validation_error("left identity law fails: " + ids_[e] + " * " + ids_[g]);
                if (defined(g, e) && product(g, e) != g)
                    throw validation_error("right identity law fails: " + ids_[g] + " * " + ids_[e]);
            }
        }
        // unique range and domain identity per element
        range_.assign(n, 0);
        domain_.assign(n, 0);
        for (std::size_t g = 0; g < n; ++g) {
            int r = -1, d = -1;
            for (std::size_t e = 0; e < n; ++e) {
                if (!identity_[e]) continue;
                if (defined(e, g)) {
                    if (r >= 0) throw validation_error("two range identities for " + ids_[g]);
                    r = static_cast<int>(e);
                }
                if (defined(g, e)) {
                    if (d >= 0) throw validation_error("two domain identities for " + ids_[g]);
                    d = static_cast<int>(e);
                }
            }
            if (r < 0 || d < 0)
                throw validation_error("no identity acts on " + ids_[g]);
            range_[g] = static_cast<std::size_t>(r);
            domain_[g] = static_cast<std::size_t>(d);
        }
        // inverses before the composability pattern, so a missing s*s in a
        // one-identity table surfaces as the inverse failure it is
        inverse_.assign(n, 0);
        for (std::size_t g = 0; g < n; ++g) {
            int inv = -1;
            for (std::size_t h = 0; h < n; ++h) {
                if (defined(g, h) && product(g, h) == range_[g] && defined(h, g) &&
                    product(h, g) == domain_[g]) {
                    if (inv >= 0)
                        throw validation_error("two inverses for " + ids_[g]);
                    inv = static_cast<int>(h);
                }
            }
            if (inv < 0) throw missing_inverse_error("no inverse for " + ids_[g]);
            inverse_[g] = static_cast<std::size_t>(inv);
        }
        // products are defined exactly on composable pairs
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                bool composable = (domain_[g] == range_[h]);
                if (composable && !defined(g, h))
                    throw validation_error("product missing for composable pair " + ids_[g] +
                                           " * " + ids_[h]);
                if (!composable && defined(g, h))
                    throw validation_error("product defined for non-composable pair " + ids_[g] +
                                           " * " + ids_[h]);
            }
        // associativity on all composable triples
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                if (domain_[g] != range_[h]) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (domain_[h] != range_[k]) continue;
                    if (product(product(g, h), k) != product(g, product(h, k)))
                        throw associativity_error("associativity fails on " + ids_[g] + ", " +
                                                  ids_[h] + ", " + ids_[k]);
                }
            }
    }

    std::vector<std::string> ids_;
    std::map<std::string, std::size_t> index_;
    std::vector<bool> identity_;
    std::vector<int> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> domain_;
    std::vector<std::size_t> range_;
};

}  // namespace selfsim
