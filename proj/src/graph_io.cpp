#include "h2leader/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace h2leader {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, "malformed graph file", what);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_weight(const std::string& token) {
  try {
    std::size_t pos = 0;
    const double w = std::stod(token, &pos);
    if (pos != token.size()) parse_fail("trailing characters in weight: " + token);
    return w;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail("bad weight: " + token);
  }
}

int parse_vertex(const std::string& token) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(token, &pos);
    if (pos != token.size()) parse_fail("trailing characters in vertex id: " + token);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail("bad vertex id: " + token);
  }
}

}  // namespace

WeightedGraph read_graph_json(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    parse_fail("expected an object with \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer()) parse_fail("\"n\" must be an integer");
  if (!doc["edges"].is_array()) parse_fail("\"edges\" must be an array");

  std::vector<Edge> edges;
  for (const auto& row : doc["edges"]) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
        !row[1].is_number_integer() || !row[2].is_number()) {
      parse_fail("each edge must be [i, j, w]");
    }
    edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<double>()});
  }
  return build_graph(doc["n"].get<int>(), std::move(edges));
}

WeightedGraph read_graph_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) parse_fail("empty file");
  if (trim(line) != "i,j,w") parse_fail("expected header \"i,j,w\"");

  std::vector<Edge> edges;
  int max_vertex = 0;
  while (std::getline(in, line)) {
    const std::string row = trim(line);
    if (row.empty()) continue;
    std::istringstream cells(row);
    std::string a, b, c, extra;
    if (!std::getline(cells, a, ',') || !std::getline(cells, b, ',') ||
        !std::getline(cells, c, ',')) {
      parse_fail("expected three comma-separated fields: " + row);
    }
    if (std::getline(cells, extra, ',')) parse_fail("too many fields: " + row);
    Edge e{parse_vertex(trim(a)), parse_vertex(trim(b)), parse_weight(trim(c))};
    max_vertex = std::max({max_vertex, e.source, e.sink});
    edges.push_back(e);
  }
  return build_graph(max_vertex, std::move(edges));
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open graph file", path);
  }
  const auto dot = path.find_last_of('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".json") return read_graph_json(in);
  if (ext == ".csv") return read_graph_csv(in);
  // Unknown extension: sniff. A JSON document opens with '{'.
  char first = '\0';
  while (in.get(first) && (first == ' ' || first == '\t' || first == '\n' ||
                           first == '\r')) {
  }
  in.clear();
  in.seekg(0);
  if (first == '{') return read_graph_json(in);
  return read_graph_csv(in);
}

std::string graph_to_json(const WeightedGraph& g) {
  ordered_json doc;
  doc["n"] = g.n;
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges) {
    doc["edges"].push_back({e.source, e.sink, e.weight});
  }
  return doc.dump(2) + "\n";
}

std::string graph_to_csv(const WeightedGraph& g) {
  std::ostringstream out;
  out << "i,j,w\n";
  out.precision(17);
  for (const Edge& e : g.edges) {
    out << e.source << ',' << e.sink << ',' << e.weight << '\n';
  }
  return out.str();
}

void write_graph_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::ParseError, "cannot open output file", path);
  }
  const auto dot = path.find_last_of('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  out << (ext == ".csv" ? graph_to_csv(g) : graph_to_json(g));
}

}  // namespace h2leader
