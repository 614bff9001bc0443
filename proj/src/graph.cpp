#include "h2leader/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "h2leader/random.hpp"

namespace h2leader {

namespace {

std::string edge_label(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

bool edges_connect(int n, const std::vector<Edge>& edges) {
  UnionFind uf(n);
  for (const Edge& e : edges) uf.unite(e.source - 1, e.sink - 1);
  const int root = uf.find(0);
  for (int v = 1; v < n; ++v) {
    if (uf.find(v) != root) return false;
  }
  return true;
}

int first_unreachable_vertex(int n, const std::vector<Edge>& edges) {
  UnionFind uf(n);
  for (const Edge& e : edges) uf.unite(e.source - 1, e.sink - 1);
  const int root = uf.find(0);
  for (int v = 1; v < n; ++v) {
    if (uf.find(v) != root) return v + 1;
  }
  return 0;
}

}  // namespace

WeightedGraph build_graph(int n, std::vector<Edge> edges) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "graph needs at least 2 vertices",
                std::to_string(n));
  }
  if (edges.empty()) {
    throw Error(ErrorCode::InvalidArgument, "edge list is empty");
  }
  for (Edge& e : edges) {
    if (e.source < 1 || e.source > n || e.sink < 1 || e.sink > n) {
      throw Error(ErrorCode::InvalidArgument, "vertex id out of range 1..n",
                  edge_label(e.source, e.sink));
    }
    if (e.source == e.sink) {
      throw Error(ErrorCode::SelfLoop, "self loop rejected",
                  edge_label(e.source, e.sink));
    }
    if (!(e.weight > 0.0)) {
      throw Error(ErrorCode::NonpositiveWeight, "edge weight must be > 0",
                  edge_label(e.source, e.sink));
    }
    if (e.source > e.sink) std::swap(e.source, e.sink);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.source, a.sink) < std::pair(b.source, b.sink);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].source == edges[i - 1].source &&
        edges[i].sink == edges[i - 1].sink) {
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge rejected",
                  edge_label(edges[i].source, edges[i].sink));
    }
  }
  if (!edges_connect(n, edges)) {
    throw Error(ErrorCode::DisconnectedGraph, "graph is not connected",
                "vertex " + std::to_string(first_unreachable_vertex(n, edges)) +
                    " unreachable from vertex 1");
  }
  return WeightedGraph{n, std::move(edges)};
}

GraphMatrices derive_matrices(const WeightedGraph& g) {
  const int n = g.n;
  const int k = g.edge_count();
  GraphMatrices m;
  m.adjacency = Eigen::MatrixXd::Zero(n, n);
  m.incidence = Eigen::MatrixXd::Zero(n, k);
  m.edge_weights = Eigen::VectorXd::Zero(k);
  for (int e = 0; e < k; ++e) {
    const Edge& edge = g.edges[static_cast<std::size_t>(e)];
    const int i = edge.source - 1;
    const int j = edge.sink - 1;
    m.adjacency(i, j) = edge.weight;
    m.adjacency(j, i) = edge.weight;
    m.incidence(i, e) = 1.0;
    m.incidence(j, e) = -1.0;
    m.edge_weights(e) = edge.weight;
  }
  m.degree = Eigen::MatrixXd(m.adjacency.rowwise().sum().asDiagonal());
  m.laplacian = m.degree - m.adjacency;
  return m;
}

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "path") return GraphKind::Path;
  if (name == "ring") return GraphKind::Ring;
  if (name == "complete") return GraphKind::Complete;
  if (name == "random") return GraphKind::Random;
  throw Error(ErrorCode::InvalidArgument, "unknown graph kind", name);
}

WeightedGraph generate_graph(GraphKind kind, int n, std::uint64_t seed,
                             double edge_prob, int max_retries) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "graph needs at least 2 vertices",
                std::to_string(n));
  }
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::Path:
      for (int v = 1; v < n; ++v) edges.push_back({v, v + 1, 1.0});
      return build_graph(n, std::move(edges));
    case GraphKind::Ring:
      if (n < 3) {
        throw Error(ErrorCode::InvalidArgument, "ring needs at least 3 vertices",
                    std::to_string(n));
      }
      for (int v = 1; v < n; ++v) edges.push_back({v, v + 1, 1.0});
      edges.push_back({1, n, 1.0});
      return build_graph(n, std::move(edges));
    case GraphKind::Complete:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j, 1.0});
      }
      return build_graph(n, std::move(edges));
    case GraphKind::Random:
      break;
  }
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "edge_prob must be in (0, 1]",
                std::to_string(edge_prob));
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    edges.clear();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (uniform_unit(rng) < edge_prob) edges.push_back({i, j, 1.0});
      }
    }
    if (!edges.empty() && edges_connect(n, edges)) {
      return build_graph(n, std::move(edges));
    }
  }
  throw Error(ErrorCode::GenerationFailed,
              "no connected sample within retry budget",
              "n=" + std::to_string(n) + " p=" + std::to_string(edge_prob) +
                  " retries=" + std::to_string(max_retries));
}

WeightedGraph with_log_uniform_weights(const WeightedGraph& g,
                                       std::uint64_t seed, double wmin,
                                       double wmax) {
  if (!(wmin > 0.0) || !(wmax >= wmin)) {
    throw Error(ErrorCode::InvalidArgument,
                "weight range must satisfy 0 < wmin <= wmax");
  }
  WeightedGraph out = g;
  std::mt19937_64 rng(seed);
  for (Edge& e : out.edges) e.weight = log_uniform(rng, wmin, wmax);
  return out;
}

}  // namespace h2leader
