#pragma once

#include <optional>
#include <vector>

#include "curvesos/configuration.hpp"

namespace curvesos {

// Alternating sequence c_0, p_0, c_1, p_1, ..., c_{k-1}, p_{k-1} (p_{k-1} returns to c_0).
struct GraphCycle {
  std::vector<int> components;
  std::vector<int> points;
};

struct ForestResult {
  bool forest = true;
  std::optional<GraphCycle> cycle;
};

// Points incident to at least two components of `subset`, restricted to those components.
std::vector<std::pair<int, std::vector<int>>> subset_edges(const CurveConfiguration& config,
                                                           const std::vector<int>& subset);

ForestResult is_forest(const CurveConfiguration& config, const std::vector<int>& subset);

struct AttachmentOrder {
  std::vector<int> order;
  // Point joining order[i] to order[0..i-1], if any.
  std::vector<std::optional<int>> attach_point;
};

struct AttachmentResult {
  std::optional<AttachmentOrder> order;
  std::optional<GraphCycle> cycle;
};

AttachmentResult attachment_order(const CurveConfiguration& config, const std::vector<int>& subset);

// Checks the attachment invariant for an explicit order.
bool is_valid_attachment_order(const CurveConfiguration& config, const std::vector<int>& order);

struct CPrime {
  std::vector<int> yes;
  std::vector<int> no;
  std::vector<int> unknown;
};
CPrime extract_C_prime(const CurveConfiguration& config);

struct ConnectedPiece {
  std::vector<int> components;
  Tri bounded_ring_trivial = Tri::Unknown;
};
std::vector<ConnectedPiece> connectivity_report(const CurveConfiguration& config);

}  // namespace curvesos
