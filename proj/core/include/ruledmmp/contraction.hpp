#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ruledmmp/surface.hpp"

namespace ruledmmp {

/// A live crossing point. After blow-downs the configuration is no longer
/// simple normal crossing, so a point keeps the full picture: how many
/// local branches each curve has there, and the pairwise local
/// intersection multiplicities.
struct LivePoint {
  std::string id;
  std::map<std::string, std::int64_t, IdLess> branches;  // curve id -> branch count
  std::map<std::pair<std::string, std::string>, std::int64_t> pair_mults;  // (a,b) with a<b

  bool has_curve(const std::string& id) const { return branches.count(id) != 0; }
  std::int64_t pair_mult(const std::string& a, const std::string& b) const;

  friend bool operator==(const LivePoint&, const LivePoint&) = default;
};

struct LiveComponent {
  std::string id;
  DivisorClass cls;  // ambient projection = class at the current level
  std::int64_t mult = 1;
  bool in_dv = false;

  friend bool operator==(const LiveComponent&, const LiveComponent&) = default;
};

struct LiveFiber {
  std::string label;
  std::vector<LiveComponent> components;
  std::vector<LivePoint> points;

  const LiveComponent* find(const std::string& id) const;

  friend bool operator==(const LiveFiber&, const LiveFiber&) = default;
};

struct LiveHorizontal {
  std::string id;
  DivisorClass cls;

  friend bool operator==(const LiveHorizontal&, const LiveHorizontal&) = default;
};

struct ContractedCurve {
  DivisorClass cls;  // ambient class at the moment of contraction
  std::string component_id;
  std::string fiber_label;

  friend bool operator==(const ContractedCurve&, const ContractedCurve&) = default;
};

enum class StepRationale { DisjointFromDh, InDvPreferred, AnyMinusOne, Cleanup };

const char* to_string(StepRationale r);
StepRationale rationale_from_string(const std::string& s);

/// Audit record of one blow-down.
struct ContractionStep {
  std::int64_t index = 0;
  int stage = 0;  // 1, 2 or 3
  std::string fiber_label;
  DivisorClass contracted_class;
  std::string component_id;
  StepRationale rationale = StepRationale::AnyMinusOne;

  friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

/// Full state of the contraction process. Transitions are pure: contract()
/// returns a new state and leaves its input untouched.
struct ContractionState {
  SurfacePair base;
  std::vector<ContractedCurve> contracted;
  std::vector<LiveFiber> fibers;
  std::vector<LiveHorizontal> horizontals;
  DivisorClass canonical;  // projected canonical class
  std::int64_t step_count = 0;

  /// Points where a horizontal curve has acquired two or more branches,
  /// tallied at merge time: (horizontal id, point id, step index).
  struct SingularImagePoint {
    std::string horizontal_id;
    std::string point_id;
    std::int64_t step = 0;
    friend bool operator==(const SingularImagePoint&, const SingularImagePoint&) = default;
  };
  std::vector<SingularImagePoint> singular_image_points;

  const LiveFiber* find_fiber(const std::string& label) const;
  /// Live component lookup; nullptr when dead or never existed.
  std::pair<const LiveFiber*, const LiveComponent*> find_component(const std::string& id) const;
  const LivePoint* find_point(const std::string& id) const;

  DivisorClass horizontal_total() const;
  std::vector<std::string> live_minus_one_ids() const;  // across all fibers, id order
  std::vector<std::string> live_minus_one_ids(const LiveFiber& f) const;

  friend bool operator==(const ContractionState&, const ContractionState&) = default;
};

/// State of the uncontracted starting surface.
ContractionState initial_state(const SurfacePair& sp);

/// True iff no live point contains both this component and a horizontal
/// curve. Set-theoretic: decided from points, not classes.
bool is_disjoint_from_dh(const ContractionState& state, const std::string& component_id);

/// True iff some live point over the fiber carries a horizontal branch and
/// a branch of a live in-D^v component.
bool dh_dv_meet_in_fiber(const ContractionState& state, const std::string& label);

/// Blows down one vertical (-1)-component: merges its points into one new
/// point (branch counts add, pairwise multiplicities add and gain the
/// product of the local multiplicities with the contracted curve), projects
/// every live class, and keeps multiplicities and in-D^v flags of the
/// survivors. Stage and rationale are recorded verbatim in the step.
std::pair<ContractionState, ContractionStep> contract(
    const ContractionState& state, const std::string& component_id, int stage = 0,
    StepRationale rationale = StepRationale::AnyMinusOne);

/// Re-applies a recorded step sequence from the start surface. Checks that
/// each recorded class matches the live class it contracts.
ContractionState replay(const SurfacePair& sp, const std::vector<ContractionStep>& steps,
                        std::size_t upto);

}  // namespace ruledmmp
