#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kneadkit/errors.hpp"

namespace kneadkit {

using Vertex = int;

/// A finite directed graph with no parallel edges, strongly connected and
/// aperiodic, together with a +-1 sign on each vertex. Vertices are the dense
/// range 0..N and N is the distinguished top letter. Validation is eager:
/// a constructed graph always satisfies the invariants.
class SignedGraph {
 public:
  SignedGraph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
              std::vector<int> signs, std::string name = "")
      : n_(vertex_count), signs_(std::move(signs)), name_(std::move(name)) {
    require(n_ >= 1, errc::invalid_config, "vertex count must be positive");
    require(static_cast<int>(signs_.size()) == n_, errc::invalid_config,
            "signs must list one value per vertex");
    for (int s : signs_)
      require(s == 1 || s == -1, errc::invalid_config, "signs must be +1 or -1");

    std::set<std::pair<Vertex, Vertex>> uniq(edges.begin(), edges.end());
    require(uniq.size() == edges.size(), errc::invalid_config, "parallel edges are not allowed");
    adj_.assign(n_, {});
    has_edge_.assign(static_cast<size_t>(n_) * n_, false);
    for (auto [i, j] : uniq) {
      require(i >= 0 && i < n_ && j >= 0 && j < n_, errc::invalid_config,
              "edge endpoint out of range");
      adj_[i].push_back(j);
      has_edge_[static_cast<size_t>(i) * n_ + j] = true;
    }
    for (int v = 0; v < n_; ++v) {
      require(!adj_[v].empty(), errc::invalid_config,
              "vertex " + std::to_string(v) + " has no outgoing edge");
      std::sort(adj_[v].begin(), adj_[v].end());
    }
    require(strongly_connected(), errc::invalid_config, "graph must be strongly connected");
    require(aperiodic(), errc::invalid_config, "graph must be aperiodic");
  }

  int vertex_count() const { return n_; }
  Vertex top() const { return n_ - 1; }  // the letter N
  int sign_of(Vertex v) const { return signs_[v]; }
  const std::vector<Vertex>& out(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex i, Vertex j) const {
    return has_edge_[static_cast<size_t>(i) * n_ + j];
  }
  const std::string& name() const { return name_; }

  std::vector<std::pair<Vertex, Vertex>> edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n_; ++i)
      for (Vertex j : adj_[i]) es.emplace_back(i, j);
    return es;
  }

  bool same_as(const SignedGraph& o) const { return this == &o; }

  // ---- letter <-> text. Single digits while N <= 9, else dash separated.
  std::string format_word(const std::vector<Vertex>& w) const {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
      if (top() > 9 && i) os << '-';
      os << w[i];
    }
    return os.str();
  }

  std::vector<Vertex> parse_letters(const std::string& text) const {
    std::vector<Vertex> w;
    if (text.find_first_of("-, ") != std::string::npos) {
      std::string tok;
      std::istringstream is(text);
      while (std::getline(is, tok, text.find('-') != std::string::npos ? '-' : ',')) {
        if (tok.empty()) continue;
        w.push_back(std::stoi(tok));
      }
    } else {
      for (char c : text) {
        require(c >= '0' && c <= '9', errc::invalid_config,
                "cannot parse letter '" + std::string(1, c) + "'");
        w.push_back(c - '0');
      }
    }
    for (Vertex v : w)
      require(v >= 0 && v < n_, errc::invalid_config,
              "letter " + std::to_string(v) + " is not a vertex");
    return w;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = n_;
    auto es = nlohmann::ordered_json::array();
    for (auto [a, b] : edge_list()) es.push_back({a, b});
    j["edges"] = std::move(es);
    j["signs"] = signs_;
    return j;
  }

  static SignedGraph from_json(const nlohmann::json& j, const std::string& name = "") {
    require(j.contains("vertices") && j.contains("edges") && j.contains("signs"),
            errc::invalid_config, "config needs vertices, edges, signs");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& e : j["edges"]) {
      require(e.is_array() && e.size() == 2, errc::invalid_config, "edge must be a pair");
      es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return SignedGraph(j["vertices"].get<int>(), std::move(es),
                       j["signs"].get<std::vector<int>>(), name);
  }

  static SignedGraph from_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), errc::invalid_config, "cannot open config " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j, path);
  }

 private:
  bool strongly_connected() const {
    auto reach = [&](bool forward) {
      std::vector<char> seen(n_, 0);
      std::vector<Vertex> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
          bool e = forward ? has_edge(v, u) : has_edge(u, v);
          if (e && !seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
      return std::count(seen.begin(), seen.end(), 1) == n_;
    };
    return reach(true) && reach(false);
  }

  // gcd of cycle lengths, via BFS levels from vertex 0.
  bool aperiodic() const {
    std::vector<int> depth(n_, -1);
    std::vector<Vertex> order{0};
    depth[0] = 0;
    for (size_t k = 0; k < order.size(); ++k) {
      Vertex v = order[k];
      for (Vertex u : adj_[v])
        if (depth[u] < 0) {
          depth[u] = depth[v] + 1;
          order.push_back(u);
        }
    }
    int g = 0;
    for (int v = 0; v < n_; ++v)
      for (Vertex u : adj_[v]) g = std::gcd(g, depth[v] + 1 - depth[u]);
    return g == 1;
  }

  int n_;
  std::vector<int> signs_;
  std::string name_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> has_edge_;
};

/// The unimodal system: complete graph on {0,1}, O(0)=+1, O(1)=-1. This is
/// also the fixed exponent system for tuning.
inline const SignedGraph& unimodal_system() {
  static const SignedGraph g(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {1, -1}, "unimodal");
  return g;
}

/// Four-vertex system: all edges (i,j) except i in {1,2}, j = 3; O(k) = (-1)^k.
inline const SignedGraph& four_vertex_system() {
  static const SignedGraph g = [] {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!((i == 1 || i == 2) && j == 3)) es.emplace_back(i, j);
    return SignedGraph(4, es, {1, -1, 1, -1}, "four-vertex");
  }();
  return g;
}

/// Tree-map system on 4 vertices. Note: edge (3,2) is included so that the
/// word 3210 is a cycle; see README for the full edge list.
inline const SignedGraph& tree_system() {
  static const SignedGraph g(
      4, {{0, 2}, {0, 3}, {1, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}, {-1, -1, 1, -1}, "tree");
  return g;
}

/// Resolve a system by built-in name, else treat the argument as a file path.
inline const SignedGraph& lookup_system(const std::string& name_or_path,
                                        std::vector<std::unique_ptr<SignedGraph>>& owned) {
  if (name_or_path == "unimodal") return unimodal_system();
  if (name_or_path == "four-vertex") return four_vertex_system();
  if (name_or_path == "tree") return tree_system();
  owned.push_back(std::make_unique<SignedGraph>(SignedGraph::from_file(name_or_path)));
  return *owned.back();
}

}  // namespace kneadkit
