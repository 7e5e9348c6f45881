#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/error.hpp"

namespace selfsim {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "key=value" accessor for tokens like "range=v"; throws on shape mismatch
inline std::string expect_kv(const std::string& tok, const std::string& key) {
    std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw parse_error("expected " + key + "=..., got '" + tok + "'");
    std::string v = tok.substr(prefix.size());
    if (v.empty()) throw parse_error("empty value in '" + tok + "'");
    return v;
}

// line-oriented section file: `[name]` headers, `#` starts a comment,
// blank lines ignored; section order and line order are preserved
struct section_file {
    std::vector<std::pair<std::string, std::vector<std::string>>> sections;

    static section_file parse(const std::string& text) {
        section_file f;
        std::istringstream in(text);
        std::string line;
        int current = -1;
        while (std::getline(in, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw parse_error("malformed section header: " + line);
                std::string name = trim(line.substr(1, line.size() - 2));
                if (name.empty()) throw parse_error("empty section name");
                for (const auto& s : f.sections)
                    if (s.first == name)
                        throw parse_error("duplicate section [" + name + "]");
                f.sections.emplace_back(name, std::vector<std::string>{});
                current = static_cast<int>(f.sections.size()) - 1;
            } else {
                if (current < 0)
                    throw parse_error("content before first section: " + line);
                f.sections[static_cast<std::size_t>(current)].second.push_back(line);
            }
        }
        return f;
    }

    bool has(const std::string& name) const {
        for (const auto& s : sections)
            if (s.first == name) return true;
        return false;
    }

    const std::vector<std::string>& lines(const std::string& name) const {
        for (const auto& s : sections)
            if (s.first == name) return s.second;
        throw parse_error("missing section [" + name + "]");
    }

    void require_only(const std::vector<std::string>& allowed) const {
        for (const auto& s : sections) {
            bool ok = false;
            for (const auto& a : allowed) ok = ok || (a == s.first);
            if (!ok) throw parse_error("unexpected section [" + s.first + "]");
        }
    }
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace selfsim
