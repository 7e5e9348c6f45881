#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/graph.hpp"

namespace selfsim {

// path in a directed graph, stored left to right; the empty word carries an
// explicit vertex anchor so it is unambiguous over multi-vertex graphs
class word {
  public:
    word() = default;

    static word empty(const std::string& vertex) {
        word w;
        w.range_ = w.domain_ = vertex;
        return w;
    }

    static word make(const directed_graph& g, std::vector<std::string> letters,
                     const std::string& anchor = "") {
        if (letters.empty()) {
            if (anchor.empty())
                throw composition_error("empty word needs a vertex anchor");
            if (!g.has_vertex(anchor))
                throw domain_error("unknown vertex: " + anchor);
            return empty(anchor);
        }
        word w;
        w.letters_ = std::move(letters);
        for (std::size_t i = 0; i + 1 < w.letters_.size(); ++i) {
            const auto& cur = g.edge(w.letters_[i]);
            const auto& nxt = g.edge(w.letters_[i + 1]);
            if (cur.domain != nxt.range)
                throw composition_error("letters not composable: " + cur.id + " " + nxt.id);
        }
        w.range_ = g.edge(w.letters_.front()).range;
        w.domain_ = g.edge(w.letters_.back()).domain;
        return w;
    }

    const std::vector<std::string>& letters() const { return letters_; }
    const std::string& range() const { return range_; }
    const std::string& domain() const { return domain_; }
    std::size_t size() const { return letters_.size(); }
    bool empty_word() const { return letters_.empty(); }

    friend bool operator==(const word& a, const word& b) {
        return a.letters_ == b.letters_ && a.range_ == b.range_ && a.domain_ == b.domain_;
    }
    friend bool operator<(const word& a, const word& b) {
        if (a.letters_ != b.letters_) return a.letters_ < b.letters_;
        if (a.range_ != b.range_) return a.range_ < b.range_;
        return a.domain_ < b.domain_;
    }

    friend word concat(const word& a, const word& b) {
        if (a.domain_ != b.range_)
            throw composition_error("words not composable: domain " + a.domain_ +
                                    " vs range " + b.range_);
        word w;
        w.letters_ = a.letters_;
        w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
        w.range_ = a.range_;
        w.domain_ = b.domain_;
        return w;
    }

    // true iff p is a prefix of this word (anchors must agree for words)
    bool has_prefix(const word& p) const {
        if (p.size() > size()) return false;
        if (p.empty_word()) return p.range_ == range_ || empty_word();
        return std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
    }

    // the suffix v with *this = p v; requires has_prefix(p)
    word suffix_after(const directed_graph& g, const word& p) const {
        if (!has_prefix(p)) throw domain_error("not a prefix");
        std::vector<std::string> rest(letters_.begin() + static_cast<long>(p.size()),
                                      letters_.end());
        if (rest.empty()) return empty(domain_);
        return make(g, std::move(rest));
    }

    // display form: letters concatenated; the empty word prints @vertex
    std::string str() const {
        if (letters_.empty()) return "@" + range_;
        std::string out;
        for (const auto& x : letters_) out += x;
        return out;
    }

    // parse a word over the edge alphabet of g: optional whitespace between
    // letters, otherwise greedy longest-match tokenization; `@vertex` is the
    // empty word at that vertex
    static word parse(const directed_graph& g, const std::string& text) {
        std::string s = trim(text);
        if (!s.empty() && s.front() == '@') {
            std::string v = trim(s.substr(1));
            if (!g.has_vertex(v)) throw parse_error("unknown vertex in empty word: " + v);
            return empty(v);
        }
        std::vector<std::string> letters;
        for (const auto& chunk : split_ws(s)) {
            std::size_t pos = 0;
            while (pos < chunk.size()) {
                std::size_t best = 0;
                for (const auto& e : g.edges()) {
                    const std::string& id = e.id;
                    if (id.size() > best && chunk.compare(pos, id.size(), id) == 0)
                        best = id.size();
                }
                if (best == 0)
                    throw parse_error("cannot tokenize word at '" + chunk.substr(pos) + "'");
                letters.push_back(chunk.substr(pos, best));
                pos += best;
            }
        }
        if (letters.empty()) throw parse_error("empty word needs @vertex notation");
        try {
            return make(g, std::move(letters));
        } catch (const composition_error& e) {
            throw parse_error(e.what());
        }
    }

  private:
    std::vector<std::string> letters_;
    std::string range_;
    std::string domain_;
};

}  // namespace selfsim
