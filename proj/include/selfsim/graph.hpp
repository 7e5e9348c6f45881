#pragma once

#include <map>
#include <string>
#include <vector>

#include "selfsim/error.hpp"
#include "selfsim/io.hpp"

namespace selfsim {

struct edge_decl {
    std::string id;
    std::string range;
    std::string domain;
    friend bool operator==(const edge_decl&, const edge_decl&) = default;
};

// finite directed graph; edges carry the range/domain convention used for
// paths: in a product xy the range of y equals the domain of x
class directed_graph {
  public:
    directed_graph() = default;

    directed_graph(std::vector<std::string> vertices, std::vector<edge_decl> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const std::string& v = vertices_[i];
            if (v.empty()) throw validation_error("empty vertex id");
            if (!vertex_index_.emplace(v, i).second)
                throw validation_error("duplicate vertex id: " + v);
        }
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const edge_decl& e = edges_[i];
            if (e.id.empty()) throw validation_error("empty edge id");
            if (vertex_index_.count(e.id))
                throw validation_error("edge id collides with vertex id: " + e.id);
            if (!edge_index_.emplace(e.id, i).second)
                throw validation_error("duplicate edge id: " + e.id);
            if (!vertex_index_.count(e.range))
                throw validation_error("edge " + e.id + " has undeclared range " + e.range);
            if (!vertex_index_.count(e.domain))
                throw validation_error("edge " + e.id + " has undeclared domain " + e.domain);
        }
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<edge_decl>& edges() const { return edges_; }

    bool has_vertex(const std::string& v) const { return vertex_index_.count(v) != 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) != 0; }

    const edge_decl& edge(const std::string& id) const {
        auto it = edge_index_.find(id);
        if (it == edge_index_.end()) throw domain_error("unknown edge: " + id);
        return edges_[it->second];
    }

    std::vector<std::string> edges_with_range(const std::string& v) const {
        std::vector<std::string> out;
        for (const auto& e : edges_)
            if (e.range == v) out.push_back(e.id);
        return out;
    }

    friend bool operator==(const directed_graph& a, const directed_graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

    // file format: sections [vertices] and [edges], edge lines
    // `ID range=V domain=W`
    static directed_graph parse(const std::string& text) {
        section_file f = section_file::parse(text);
        f.require_only({"vertices", "edges"});
        std::vector<std::string> vs;
        for (const auto& line : f.lines("vertices"))
            for (const auto& tok : split_ws(line)) vs.push_back(tok);
        std::vector<edge_decl> es;
        for (const auto& line : f.lines("edges")) es.push_back(parse_edge_line(line));
        try {
            return directed_graph(std::move(vs), std::move(es));
        } catch (const validation_error& e) {
            throw parse_error(e.what());
        }
    }

    static edge_decl parse_edge_line(const std::string& line) {
        auto toks = split_ws(line);
        if (toks.size() != 3)
            throw parse_error("edge line must be `ID range=V domain=W`: " + line);
        return edge_decl{toks[0], expect_kv(toks[1], "range"), expect_kv(toks[2], "domain")};
    }

    std::string serialize() const {
        std::string out = "[vertices]\n";
        for (const auto& v : vertices_) out += v + "\n";
        out += "[edges]\n";
        for (const auto& e : edges_)
            out += e.id + " range=" + e.range + " domain=" + e.domain + "\n";
        return out;
    }

  private:
    std::vector<std::string> vertices_;
    std::vector<edge_decl> edges_;
    std::map<std::string, std::size_t> vertex_index_;
    std::map<std::string, std::size_t> edge_index_;
};

}  // namespace selfsim
