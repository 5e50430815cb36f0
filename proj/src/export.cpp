#include "coxkit/export.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "dot") return Format::kDot;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw ValidationError("unknown format '" + text + "' (expected dot, json or csv)");
}

nlohmann::json to_json(const GroupBall& ball) {
  nlohmann::json elements = nlohmann::json::array();
  nlohmann::json cayley = nlohmann::json::array();
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) {
    elements.push_back({{"id", w}, {"word", ball.normal_form(w)}, {"length", ball.length(w)}});
    nlohmann::json row = nlohmann::json::array();
    for (Generator s = 0; s < ball.rank(); ++s) row.push_back(ball.left_mul(s, w));
    cayley.push_back(row);
  }
  return {{"matrix", ball.matrix().entries()},
          {"inf_token", kInfinity},
          {"name", ball.matrix().name()},
          {"radius", ball.radius()},
          {"complete", ball.is_complete_group()},
          {"elements", elements},
          {"cayley", cayley}};
}

std::string to_csv(const GroupBall& ball) {
  std::string out = "id,word,length\n";
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w)
    out += std::to_string(w) + "," + ball.label(w) + "," + std::to_string(ball.length(w)) + "\n";
  return out;
}

std::string to_csv(const AbsoluteLengthTable& table) {
  std::string out = "id,length,lk\n";
  for (std::size_t w = 0; w < table.lk.size(); ++w)
    out += std::to_string(w) + "," + std::to_string(table.ball->length(static_cast<ElementId>(w))) + "," +
           std::to_string(table.lk[w]) + "\n";
  return out;
}

std::string to_csv(const SelfMapTable& map) {
  std::string out = "id,image\n";
  for (std::size_t w = 0; w < map.images.size(); ++w)
    out += std::to_string(w) + "," + std::to_string(map.images[w]) + "\n";
  return out;
}

nlohmann::json to_json(const MonoidReport& report) {
  return {{"size", report.size},
          {"idempotent", report.generators_idempotent},
          {"braid_ok", report.braid_ok},
          {"order_preserving", report.order_preserving}};
}

std::string to_dot(const Poset& poset, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  if (poset.size() > 0) {
    out << "  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int u = 0; u < static_cast<int>(poset.size()); ++u)
      out << "  n" << u << " [label=" << quote(poset.label(u)) << "];\n";
    if (poset.rank) {
      std::map<int, std::vector<int>> levels;
      for (int u = 0; u < static_cast<int>(poset.size()); ++u) levels[(*poset.rank)[u]].push_back(u);
      for (const auto& [r, nodes] : levels) {
        out << "  { rank=same;";
        for (int u : nodes) out << " n" << u << ";";
        out << " }\n";
      }
    }
    for (const auto& [u, v] : poset.cover_edges()) out << "  n" << u << " -> n" << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const Poset& poset) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int u = 0; u < static_cast<int>(poset.size()); ++u) {
    nlohmann::json node{{"id", u}, {"label", poset.label(u)}};
    if (u < static_cast<int>(poset.origin.size())) node["origin"] = poset.origin[u];
    if (poset.rank) node["rank"] = (*poset.rank)[u];
    nodes.push_back(node);
  }
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [u, v] : poset.cover_edges()) covers.push_back({u, v});
  return {{"descriptor", poset.descriptor}, {"size", poset.size()}, {"nodes", nodes}, {"covers", covers}};
}

std::string to_csv(const Poset& poset) {
  std::string out = "lower,upper,lower_label,upper_label\n";
  for (const auto& [u, v] : poset.cover_edges())
    out += std::to_string(u) + "," + std::to_string(v) + "," + csv_field(poset.label(u)) + "," +
           csv_field(poset.label(v)) + "\n";
  return out;
}

std::string to_dot(const OmegaGraph& graph, const std::string& name) {
  const GroupBall& ball = *graph.ball;
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  if (ball.size() > 0) {
    out << "  rankdir=BT;\n  node [shape=plaintext];\n";
    std::map<int, std::vector<ElementId>> levels;
    for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) {
      out << "  n" << w << " [label=" << quote(ball.label(w)) << "];\n";
      levels[ball.length(w)].push_back(w);
    }
    for (const auto& [r, nodes] : levels) {
      out << "  { rank=same;";
      for (ElementId w : nodes) out << " n" << w << ";";
      out << " }\n";
    }
    for (const auto& arc : graph.arcs)
      out << "  n" << arc.from << " -> n" << arc.to << " [label=" << quote(ball.label(arc.label)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const OmegaGraph& graph) {
  const GroupBall& ball = *graph.ball;
  nlohmann::json nodes = nlohmann::json::array();
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w)
    nodes.push_back({{"id", w}, {"label", ball.label(w)}, {"length", ball.length(w)}});
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& arc : graph.arcs) arcs.push_back({arc.from, arc.to, arc.label});
  nlohmann::json x = nlohmann::json::array();
  for (ElementId t : graph.X) x.push_back(ball.label(t));
  return {{"X", x}, {"nodes", nodes}, {"arcs", arcs}, {"boundary_arcs", graph.boundary_arcs}};
}

std::string to_csv(const OmegaGraph& graph) {
  const GroupBall& ball = *graph.ball;
  std::string out = "from,to,reflection\n";
  for (const auto& arc : graph.arcs)
    out += ball.label(arc.from) + "," + ball.label(arc.to) + "," + ball.label(arc.label) + "\n";
  return out;
}

nlohmann::json to_json(const OrderComplex& complex) {
  return {{"vertices", complex.vertices}, {"facets", complex.facets}};
}

std::string to_csv(const SpernerReport& report) {
  std::string out = "h,flow_value,top_rank_sum,pass\n";
  for (const auto& r : report.rows)
    out += std::to_string(r.h) + "," + std::to_string(r.flow_value) + "," + std::to_string(r.top_rank_sum) + "," +
           (r.pass ? "true" : "false") + "\n";
  return out;
}

std::string to_csv(const CurvatureSpectrum& spectrum, const UndirectedGraph& graph) {
  auto name = [&](int v) { return v < static_cast<int>(graph.labels.size()) ? graph.labels[v] : std::to_string(v); };
  std::string out = "x,y,kappa_num,kappa_den\n";
  for (const auto& r : spectrum.records)
    out += csv_field(name(r.x)) + "," + csv_field(name(r.y)) + "," + std::to_string(r.kappa.numerator()) + "," +
           std::to_string(r.kappa.denominator()) + "\n";
  return out;
}

nlohmann::json to_json(const CurvatureSpectrum& spectrum, const UndirectedGraph& graph) {
  auto name = [&](int v) { return v < static_cast<int>(graph.labels.size()) ? graph.labels[v] : std::to_string(v); };
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& r : spectrum.records) {
    nlohmann::json plan = nlohmann::json::array();
    for (const auto& e : r.plan) plan.push_back({name(e.from), name(e.to), to_string(e.mass)});
    edges.push_back({{"x", name(r.x)}, {"y", name(r.y)}, {"kappa", to_string(r.kappa)}, {"plan", plan}});
  }
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [k, n] : spectrum.histogram) histogram[to_string(k)] = n;
  nlohmann::json out{{"convention", {{"measure", "uniform on neighbours"},
                                     {"idleness", 0},
                                     {"cost", "shortest-path distance"},
                                     {"graph", "undirected"},
                                     {"description", curvature_convention()}}},
                     {"edges", edges},
                     {"histogram", histogram}};
  out["min"] = spectrum.min ? nlohmann::json(to_string(*spectrum.min)) : nlohmann::json(nullptr);
  out["max"] = spectrum.max ? nlohmann::json(to_string(*spectrum.max)) : nlohmann::json(nullptr);
  return out;
}

std::string render(const Poset& poset, Format format, const std::string& name) {
  switch (format) {
    case Format::kDot:
      return to_dot(poset, name);
    case Format::kJson:
      return to_json(poset).dump(2) + "\n";
    case Format::kCsv:
      break;
  }
  return to_csv(poset);
}

std::string render(const OmegaGraph& graph, Format format, const std::string& name) {
  switch (format) {
    case Format::kDot:
      return to_dot(graph, name);
    case Format::kJson:
      return to_json(graph).dump(2) + "\n";
    case Format::kCsv:
      break;
  }
  return to_csv(graph);
}

void write_text(const std::string& path, const std::string& content) {
  std::error_code ec;
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out.flush()) throw IoError("write failed for " + path);
}

}  // namespace coxkit
