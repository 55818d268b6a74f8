#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ruledmmp/lattice.hpp"
#include "ruledmmp/report.hpp"

namespace ruledmmp {

/// Identifier order used everywhere ids or labels are sorted: by length,
/// then lexicographic. Numeric suffixes of equal-width prefixes sort
/// naturally ("t2" < "t10").
struct IdLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};
inline bool id_less(const std::string& a, const std::string& b) { return IdLess{}(a, b); }

/// One irreducible component of a degenerate fiber.
struct FiberComponent {
  std::string id;
  DivisorClass cls;
  std::int64_t mult = 1;  // multiplicity in the scheme-theoretic fiber
  bool in_dv = false;

  friend bool operator==(const FiberComponent&, const FiberComponent&) = default;
};

/// A crossing point on the starting surface. Each branch is (curve id,
/// local multiplicity); the surface starts simple normal crossing, so
/// points carry exactly two branches of local multiplicity one.
struct IncidencePoint {
  std::string id;
  std::vector<std::pair<std::string, std::int64_t>> branches;

  bool has_branch(const std::string& curve) const {
    for (const auto& [c, m] : branches)
      if (c == curve) return true;
    return false;
  }

  friend bool operator==(const IncidencePoint&, const IncidencePoint&) = default;
};

/// All components and recorded points over one base point.
struct FiberConfig {
  std::string label;
  std::vector<FiberComponent> components;
  std::vector<IncidencePoint> points;

  friend bool operator==(const FiberConfig&, const FiberConfig&) = default;
};

/// A boundary component surjecting onto the base curve.
struct HorizontalCurve {
  std::string id;
  DivisorClass cls;
  std::vector<std::string> marks;  // ids of the points the curve passes through
  std::int64_t genus = 0;          // geometric genus; equals adjunction_genus(cls) on the start surface

  friend bool operator==(const HorizontalCurve&, const HorizontalCurve&) = default;
};

/// The combinatorial model of a fibered surface pair: ambient lattice
/// context, degenerate fiber configurations, horizontal boundary, and the
/// labels of smooth fibers wholly contained in the vertical boundary.
struct SurfacePair {
  LatticeContext ctx;
  std::vector<FiberConfig> fibers;  // kept sorted by label
  std::vector<HorizontalCurve> horizontals;
  std::vector<std::string> dv_whole_smooth_fibers;

  const FiberConfig* find_fiber(const std::string& label) const;
  const FiberComponent* find_component(const std::string& id) const;
  const HorizontalCurve* find_horizontal(const std::string& id) const;
  bool is_horizontal_id(const std::string& id) const { return find_horizontal(id) != nullptr; }

  /// Sum of the horizontal classes.
  DivisorClass horizontal_total() const;
  /// Sum of every vertical boundary class: in-D^v components plus one
  /// fiber class per whole smooth boundary fiber.
  DivisorClass vertical_total() const;
  /// Sum of horizontal and vertical boundary.
  DivisorClass boundary_total() const;
  /// Sum of all fiber multiplicities over all degenerate fibers.
  std::int64_t total_fiber_multiplicity() const;

  friend bool operator==(const SurfacePair&, const SurfacePair&) = default;
};

/// Checks every structural invariant of the model and reports each
/// violation with a witness. Never throws on bad data.
VerificationReport validate(const SurfacePair& sp);

/// Ids of the components of the given degenerate fiber whose classes have
/// self-intersection -1. Rejects unknown labels.
std::vector<std::string> minus_one_curves(const SurfacePair& sp, const std::string& label);

}  // namespace ruledmmp
