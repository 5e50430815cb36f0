#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "coxkit/orders.hpp"

namespace coxkit {

using Rational = boost::rational<std::int64_t>;

/// Simple undirected graph. `complete[v]` says the neighbourhood of v is
/// fully known; graphs cut from a partial ball have incomplete vertices.
struct UndirectedGraph {
  std::vector<std::vector<int>> adjacency;  // sorted
  std::vector<bool> complete;
  std::vector<std::string> labels;

  std::size_t size() const { return adjacency.size(); }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v
};

UndirectedGraph graph_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// Underlying graph of Ω^X: {w, tw} for t in X. A vertex is complete when
/// every tw lies in the ball.
UndirectedGraph undirected_omega(const OmegaGraph& omega);

struct TransportEntry {
  int from = 0;
  int to = 0;
  Rational mass;
};

struct CurvatureRecord {
  int x = 0;
  int y = 0;
  Rational w1;
  Rational kappa;
  std::vector<TransportEntry> plan;
};

/// κ(x, y) = 1 - W1(μ_x, μ_y) with μ_v uniform on the neighbours of v and
/// no idleness; W1 over the shortest-path metric, solved exactly as an
/// integer min-cost flow scaled by lcm(deg x, deg y).
/// DomainError unless {x, y} is an edge; OutOfBallError unless x, y and
/// all their neighbours have complete neighbourhoods.
CurvatureRecord ollivier_ricci_edge(const UndirectedGraph& graph, int x, int y);

/// The edges whose curvature can be computed exactly.
std::vector<std::pair<int, int>> safe_edges(const UndirectedGraph& graph);

struct CurvatureSpectrum {
  std::vector<CurvatureRecord> records;
  std::optional<Rational> min;
  std::optional<Rational> max;
  std::map<Rational, std::size_t> histogram;
};

CurvatureSpectrum curvature_spectrum(const UndirectedGraph& graph, const std::vector<std::pair<int, int>>& edges);

/// Measure convention, reported with every curvature output.
std::string curvature_convention();

std::string to_string(const Rational& r);

}  // namespace coxkit
