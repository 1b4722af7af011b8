#include "corona/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace corona {

namespace {

using nlohmann::json;

std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> lines = data_lines(in);
  if (lines.empty()) throw std::runtime_error("edge list: empty input");
  std::istringstream header(lines[0]);
  int n = 0, m = 0;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("edge list: malformed header");
  if (static_cast<int>(lines.size()) != m + 1)
    throw std::runtime_error("edge list: expected " + std::to_string(m) +
                             " edge lines");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 1; i <= m; ++i) {
    std::istringstream row(lines[i]);
    int u = 0, v = 0;
    if (!(row >> u >> v))
      throw std::runtime_error("edge list: malformed edge line " +
                               std::to_string(i));
    edges.emplace_back(u, v);
  }
  try {
    return from_edge_list(n, edges);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  if (g.has_tags()) {
    for (VertexId v = 0; v < g.n; ++v) {
      const CoronaVertexTag& tag = g.tags[v];
      out << "# tag " << v << (tag.is_external() ? " ext " : " int ")
          << tag.origin;
      if (tag.is_internal()) {
        out << ' ';
        for (std::size_t i = 0; i < tag.block.size(); ++i)
          out << (i ? "," : "") << tag.block[i];
      }
      out << '\n';
    }
  }
  out << g.n << ' ' << g.m << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.n; ++v) {
    if (g.has_tags()) {
      const CoronaVertexTag& tag = g.tags[v];
      out << "  " << v << " [label=\"" << to_string(tag) << '"';
      if (tag.is_external()) out << ", shape=square";
      out << "];\n";
    } else if (g.degree(v) == 0) {
      out << "  " << v << ";\n";
    }
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

NeighborhoodPartition parse_partition_json(const std::string& text,
                                           const Graph& base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("partition: invalid JSON: ") +
                             e.what());
  }
  if (!doc.is_object())
    throw std::runtime_error("partition: top level must be an object");

  NeighborhoodPartition p = trivial_partition(base);
  for (const auto& [key, value] : doc.items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::runtime_error("partition: key '" + key +
                               "' is not a vertex id");
    }
    if (v < 0 || v >= base.n)
      throw std::runtime_error("partition: vertex id " + key + " out of range");
    if (!value.is_array())
      throw std::runtime_error("partition: value for " + key +
                               " must be an array of arrays");
    std::vector<std::vector<VertexId>> family;
    for (const auto& block : value) {
      if (!block.is_array())
        throw std::runtime_error("partition: block for " + key +
                                 " must be an array");
      std::vector<VertexId> ids;
      for (const auto& item : block) {
        if (!item.is_number_integer())
          throw std::runtime_error("partition: block member for " + key +
                                   " must be an integer");
        ids.push_back(item.get<int>());
      }
      family.push_back(std::move(ids));
    }
    p.blocks[v] = std::move(family);
  }
  return normalized(std::move(p));
}

namespace {

json partition_json_object(const NeighborhoodPartition& p, const Graph& base) {
  NeighborhoodPartition normal = normalized(p);
  NeighborhoodPartition trivial = trivial_partition(base);
  json obj = json::object();
  for (VertexId v = 0; v < base.n; ++v) {
    if (normal.blocks[v] == trivial.blocks[v]) continue;
    obj[std::to_string(v)] = normal.blocks[v];
  }
  return obj;
}

json graph_json_object(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& obj) {
  std::vector<Edge> edges;
  for (const auto& e : obj.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return from_edge_list(obj.at("n").get<int>(), edges);
}

}  // namespace

std::string partition_to_json(const NeighborhoodPartition& p,
                              const Graph& base) {
  return partition_json_object(p, base).dump();
}

std::string witness_to_json(const CoronaWitness& w) {
  json obj{{"base", graph_json_object(w.base)},
           {"partition", partition_json_object(w.partition, w.base)}};
  return obj.dump();
}

CoronaWitness witness_from_json(const std::string& text) {
  json doc = json::parse(text);
  CoronaWitness w;
  w.base = graph_from_json(doc.at("base"));
  w.partition =
      parse_partition_json(doc.at("partition").dump(), w.base);
  return w;
}

std::string corona_to_json(const CoronaGraph& c) {
  json tags = json::array();
  for (VertexId v = 0; v < c.graph.n; ++v) {
    const CoronaVertexTag& tag = c.graph.tags[v];
    json entry{{"id", v},
               {"kind", tag.is_external() ? "external" : "internal"},
               {"origin", tag.origin}};
    if (tag.is_internal()) entry["block"] = tag.block;
    tags.push_back(std::move(entry));
  }
  json obj{{"n", c.graph.n},
           {"base_order", c.base_order},
           {"edges", graph_json_object(c.graph)["edges"]},
           {"tags", tags}};
  return obj.dump();
}

std::string report_to_json_line(const ClassReport& r) {
  json obj{{"code", r.tree_code}, {"n", r.order},   {"sd", r.sd_value},
           {"c1", r.cond_sd3},    {"c2", r.cond_unique_packing},
           {"c3", r.cond_family_f}, {"c4", r.cond_corona},
           {"c5", r.cond_from_subdivision}, {"c6", r.cond_from_corona_k1}};
  if (r.witness) obj["witness"] = json::parse(witness_to_json(*r.witness));
  if (r.packing) obj["packing"] = *r.packing;
  return obj.dump();
}

}  // namespace corona
