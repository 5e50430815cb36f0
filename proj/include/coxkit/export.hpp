#pragma once

#include <string>

#include <json.hpp>

#include "coxkit/curvature.hpp"
#include "coxkit/orders.hpp"
#include "coxkit/polynomials.hpp"
#include "coxkit/posetlab.hpp"
#include "coxkit/projections.hpp"

namespace coxkit {

enum class Format { kDot, kJson, kCsv };

/// "dot", "json" or "csv"; ValidationError otherwise.
Format parse_format(const std::string& text);

/// {matrix, inf_token, radius, complete, elements: [{id, word, length}],
/// cayley: [[left neighbour id or -1 per generator]]}; infinite entries are 0.
nlohmann::json to_json(const GroupBall& ball);
/// Columns id, word, length.
std::string to_csv(const GroupBall& ball);

/// Columns id, length, lk.
std::string to_csv(const AbsoluteLengthTable& table);

/// Columns id, image.
std::string to_csv(const SelfMapTable& map);
nlohmann::json to_json(const MonoidReport& report);

// Output is deterministic: nodes by id, edges sorted. Hasse diagrams are
// drawn bottom-up with one DOT rank per rank value when a rank exists.

std::string to_dot(const Poset& poset, const std::string& name = "poset");
nlohmann::json to_json(const Poset& poset);
/// Cover edges, one "lower,upper,lower_label,upper_label" row each.
std::string to_csv(const Poset& poset);

std::string to_dot(const OmegaGraph& graph, const std::string& name = "omega");
nlohmann::json to_json(const OmegaGraph& graph);
/// Arcs as "from,to,reflection" rows of labels.
std::string to_csv(const OmegaGraph& graph);

nlohmann::json to_json(const OrderComplex& complex);

/// Columns h, flow_value, top_rank_sum, pass.
std::string to_csv(const SpernerReport& report);

/// Columns x, y, kappa_num, kappa_den.
std::string to_csv(const CurvatureSpectrum& spectrum, const UndirectedGraph& graph);
nlohmann::json to_json(const CurvatureSpectrum& spectrum, const UndirectedGraph& graph);

std::string render(const Poset& poset, Format format, const std::string& name = "poset");
std::string render(const OmegaGraph& graph, Format format, const std::string& name = "omega");

/// Writes `content` to `path`, creating parent directories; IoError on failure.
void write_text(const std::string& path, const std::string& content);

}  // namespace coxkit
