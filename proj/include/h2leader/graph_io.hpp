#pragma once

#include <iosfwd>
#include <string>

#include "h2leader/graph.hpp"

namespace h2leader {

/// Graph files come in two shapes, accepted interchangeably everywhere:
///   JSON  {"n": 5, "edges": [[1, 2, 1.0], ...]}
///   CSV   header "i,j,w", one edge per row (n inferred from the ids)
/// Vertices are 1-indexed in both.

WeightedGraph read_graph_json(std::istream& in);
WeightedGraph read_graph_csv(std::istream& in);

/// Dispatches on the file extension (.json vs .csv); anything else is
/// sniffed by the first non-space byte ('{' means JSON).
WeightedGraph read_graph_file(const std::string& path);

std::string graph_to_json(const WeightedGraph& g);
std::string graph_to_csv(const WeightedGraph& g);
void write_graph_file(const std::string& path, const WeightedGraph& g);

}  // namespace h2leader
