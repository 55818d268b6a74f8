#pragma once

#include <cstdint>
#include <vector>

#include "ruledmmp/contraction.hpp"

namespace ruledmmp {

/// Result of the staged blow-down run: the ordered steps, the stage
/// boundaries k1 <= k2 <= m, the recovered invariant gamma, the effective
/// correction class summed over stage-1 steps, and the final state.
struct GoodModelPlan {
  std::vector<ContractionStep> steps;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t m = 0;
  std::int64_t gamma_value = 0;
  DivisorClass e_prime;
  ContractionState final_state;

  friend bool operator==(const GoodModelPlan&, const GoodModelPlan&) = default;
};

/// Runs the three staged loops on a validated pair:
///   stage 1 contracts vertical (-1)-curves disjoint from the horizontal
///           boundary (set-theoretic, with the lattice product checked);
///   stage 2 walks fibers in ascending label order and, while the fiber has
///           a (-1)-curve and the horizontal and vertical boundaries still
///           meet over it, contracts one, preferring in-D^v components;
///   stage 3 contracts every remaining vertical (-1)-curve.
/// Ties are broken by smallest component id at every choice point, so the
/// run is a pure function of its input. Rejects pairs that fail validate().
GoodModelPlan run(const SurfacePair& sp);

/// Recovers gamma from a completed plan: the fully projected class
/// K + D^h must be an integer multiple lambda * F, and gamma is
/// lambda - (2g - 2). An input where the multiple test fails is reported
/// as an internal consistency error.
std::int64_t gamma(const GoodModelPlan& plan);

/// Sum of the ambient classes contracted during stage 1 (zero when k1 = 0).
DivisorClass compute_e_prime(const GoodModelPlan& plan);

/// Enumerates every plan the staged loops could produce under some legal
/// set of choices (free pick of the contracted curve within each stage's
/// constraint, free fiber order in stage 2). Intended for tiny instances;
/// enumeration stops after `limit` plans.
std::vector<GoodModelPlan> enumerate_plans(const SurfacePair& sp, std::size_t limit);

}  // namespace ruledmmp
