#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "h2leader/errors.hpp"

namespace h2leader {

/// One undirected weighted edge. After canonicalization source < sink; the
/// (source, sink) ordering doubles as the edge orientation used by the
/// incidence matrix.
struct Edge {
  int source = 0;  // 1-based vertex id
  int sink = 0;    // 1-based vertex id
  double weight = 0.0;
};

/// Connected weighted undirected graph on vertices {1,...,n}. Immutable after
/// construction; build through build_graph / generate_graph so the invariants
/// (no self loops, no duplicates, positive weights, connected) hold.
struct WeightedGraph {
  int n = 0;
  std::vector<Edge> edges;  // sorted lexicographically on (source, sink)

  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Dense matrices derived from a graph: adjacency A, degree D, Laplacian
/// L = D - A = R W R^T, signed incidence R (n x k, one +1 and one -1 per
/// column), and the diagonal edge-weight matrix W stored as a vector.
struct GraphMatrices {
  Eigen::MatrixXd adjacency;
  Eigen::MatrixXd degree;
  Eigen::MatrixXd laplacian;
  Eigen::MatrixXd incidence;
  Eigen::VectorXd edge_weights;

  int n() const { return static_cast<int>(laplacian.rows()); }
  int k() const { return static_cast<int>(edge_weights.size()); }

  Eigen::MatrixXd weight_matrix() const {
    return Eigen::MatrixXd(edge_weights.asDiagonal());
  }

  /// W^{1/2} R^T, the map from states to outputs (k x n).
  Eigen::MatrixXd output_map() const {
    return edge_weights.cwiseSqrt().asDiagonal() * incidence.transpose();
  }
};

/// Validates and canonicalizes an edge list: source = min(i,j),
/// sink = max(i,j), edges sorted lexicographically and numbered in that
/// order. Throws SelfLoop / NonpositiveWeight / DuplicateEdge /
/// DisconnectedGraph, naming the offending edge or vertex.
WeightedGraph build_graph(int n, std::vector<Edge> edges);

GraphMatrices derive_matrices(const WeightedGraph& g);

enum class GraphKind { Path, Ring, Complete, Random };

GraphKind parse_graph_kind(const std::string& name);

/// Deterministic generator. Random graphs draw each pair with probability
/// edge_prob and are resampled until connected; after the retry budget is
/// exhausted throws GenerationFailed. Weights are all 1.
WeightedGraph generate_graph(GraphKind kind, int n, std::uint64_t seed = 0,
                             double edge_prob = 0.5, int max_retries = 1000);

/// Same topology, weights redrawn log-uniformly from [wmin, wmax].
WeightedGraph with_log_uniform_weights(const WeightedGraph& g,
                                       std::uint64_t seed, double wmin,
                                       double wmax);

}  // namespace h2leader
