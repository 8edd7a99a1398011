#ifndef MVI_GRAPH_HPP
#define MVI_GRAPH_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "mvi/errors.hpp"

namespace mvi {

using Vertex = int;

/// Part sizes alpha_1..alpha_r of a complete multipartite graph.
struct PartitionSpec {
  std::vector<int> alphas;

  int r() const { return static_cast<int>(alphas.size()); }
  int n() const { return std::accumulate(alphas.begin(), alphas.end(), 0); }
};

/// "a1,a2,...,ar" with positive decimal integers.
inline PartitionSpec parse_partition(const std::string& text) {
  PartitionSpec spec;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw InvalidPartition("bad partition entry '" + item + "'");
    }
    if (pos != item.size() || v < 1) throw InvalidPartition("bad partition entry '" + item + "'");
    spec.alphas.push_back(v);
  }
  if (spec.alphas.empty()) throw InvalidPartition("empty partition string");
  return spec;
}

inline std::string to_string(const PartitionSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.alphas.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.alphas[i]);
  }
  return out;
}

struct Edge {
  Vertex u, v;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// K_{alpha_1,...,alpha_r}. Vertices 0..n-1 in consecutive part blocks
/// (P_1 = {0..alpha_1-1} and so on); edges are exactly the cross-part
/// pairs, listed in lexicographic (u,v) order and indexed 1..s.
class MultipartiteGraph {
 public:
  explicit MultipartiteGraph(PartitionSpec spec) : spec_(std::move(spec)) {
    if (spec_.r() < 2) throw InvalidPartition("need at least 2 parts");
    for (int a : spec_.alphas)
      if (a < 1) throw InvalidPartition("part sizes must be positive");
    n_ = spec_.n();
    part_.reserve(n_);
    for (int i = 0; i < spec_.r(); ++i)
      for (int j = 0; j < spec_.alphas[i]; ++j) part_.push_back(i);
    edge_index_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (part_[u] != part_[v]) {
          edges_.push_back({u, v});
          const int id = static_cast<int>(edges_.size());
          edge_index_[static_cast<std::size_t>(u) * n_ + v] = id;
          edge_index_[static_cast<std::size_t>(v) * n_ + u] = id;
        }
  }

  const PartitionSpec& spec() const { return spec_; }
  int n() const { return n_; }
  int r() const { return spec_.r(); }
  int s() const { return static_cast<int>(edges_.size()); }
  bool is_bipartite() const { return spec_.r() == 2; }

  /// 0-based part index of a vertex.
  int part_of(Vertex v) const {
    check_vertex(v);
    return part_[v];
  }

  /// First vertex of part i (0-based part index).
  Vertex part_begin(int i) const {
    Vertex v = 0;
    for (int j = 0; j < i; ++j) v += spec_.alphas[j];
    return v;
  }

  bool is_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && part_[u] != part_[v];
  }

  /// 1-based index of the edge {u,v}; symmetric in u,v.
  int edge_index(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const int id = edge_index_[static_cast<std::size_t>(u) * n_ + v];
    if (id == 0)
      throw NotAnEdge("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    return id;
  }

  /// Edge with 1-based index i.
  const Edge& edge(int i) const {
    if (i < 1 || i > s()) throw NotAnEdge("edge index out of range");
    return edges_[i - 1];
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw NotAnEdge("vertex " + std::to_string(v) + " out of range");
  }

  PartitionSpec spec_;
  int n_ = 0;
  std::vector<int> part_;
  std::vector<Edge> edges_;
  std::vector<int> edge_index_;
};

inline MultipartiteGraph build_graph(const PartitionSpec& spec) { return MultipartiteGraph(spec); }

/// All 4-cycles, one canonical representative each, as edge-index
/// quadruples (i,j,k,l) walking the cycle: e_i = {v1,v2}, e_j = {v2,v3},
/// e_k = {v3,v4}, e_l = {v4,v1}. The representative minimizes the vertex
/// tuple (v1,v2,v3,v4) lexicographically over rotations and reflections.
inline std::vector<std::array<int, 4>> four_cycles(const MultipartiteGraph& g) {
  std::vector<std::array<int, 4>> out;
  std::vector<std::array<Vertex, 4>> tuples;
  const int n = g.n();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          // three ways to pair {a,b,c,d} into opposite corners; the
          // canonical walk starts at a and visits its smaller neighbor first
          const std::array<std::array<Vertex, 4>, 3> walks = {{
              {a, b, c, d},  // opposite pairs (a,c),(b,d)
              {a, b, d, c},  // (a,d),(b,c)
              {a, c, b, d},  // (a,b),(c,d)
          }};
          for (const auto& w : walks) {
            if (!g.is_edge(w[0], w[1]) || !g.is_edge(w[1], w[2]) || !g.is_edge(w[2], w[3]) ||
                !g.is_edge(w[3], w[0]))
              continue;
            std::array<Vertex, 4> t = w;
            if (t[3] < t[1]) std::swap(t[1], t[3]);
            tuples.push_back(t);
          }
        }
  std::sort(tuples.begin(), tuples.end());
  out.reserve(tuples.size());
  for (const auto& t : tuples)
    out.push_back({g.edge_index(t[0], t[1]), g.edge_index(t[1], t[2]), g.edge_index(t[2], t[3]),
                   g.edge_index(t[3], t[0])});
  return out;
}

}  // namespace mvi

#endif
