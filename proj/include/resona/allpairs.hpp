#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "resona/features.hpp"
#include "resona/vec2.hpp"

namespace resona {

// Interaction constants shared by both engines. theta is the quadtree opening
// threshold and is ignored by the exact engine.
struct KernelConfig {
  double g = 1.0;
  double eps_soft = 1e-3;
  double theta = 0.5;

  void validate() const;
};

struct BodyResult {
  int id = 0;
  Vec2 force;
  double amplitude = 0.0;
};

// Per-body accumulators plus a work counter: the exact engine counts pair
// evaluations (always N(N-1)), the tree engine counts node evaluations.
struct InteractionResult {
  std::vector<BodyResult> bodies;
  std::uint64_t evaluations = 0;
};

// Softened pair similarity g m_i m_j / sqrt(|p_j - p_i|^2 + eps^2).
// Symmetric, finite, and positive for any pair, coincident positions included.
double calculate_similarity(const Body& i, const Body& j, const KernelConfig& k);

struct PairContribution {
  double d_amplitude = 0.0;
  Vec2 d_force;
};

// Contribution of j to i's accumulators: the amplitude gains the similarity
// itself; the force is the softened inverse-square attraction
// g m_i m_j (p_j - p_i) / (|p_j - p_i|^2 + eps^2)^(3/2), the form whose group
// aggregates a center-of-mass monopole can stand in for.
PairContribution adjust_amplitude(const Body& i, const Body& j,
                                  double similarity, const KernelConfig& k);

// Exact O(N^2) engine: every target i accumulates over all j != i in
// ascending j order. Targets may be processed by several workers (0 = one per
// hardware thread); each result slot is written by exactly one worker, so the
// output is identical for every worker count.
InteractionResult all_pairs(std::span<const Body> bodies, const KernelConfig& k,
                            unsigned workers = 0);

}  // namespace resona
