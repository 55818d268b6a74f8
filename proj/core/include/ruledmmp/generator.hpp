#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ruledmmp/surface.hpp"

namespace ruledmmp {

struct GeneratorParams {
  std::int64_t genus = 0;                 // 0..3
  std::int64_t e_invariant = 0;           // 0..4
  std::int64_t max_blowups = 0;           // 0..12, applied exactly
  double dv_density = 0.0;                // [0,1]
  std::int64_t whole_fiber_dv_count = 0;  // 0..4
};

/// Shape of the horizontal boundary the builder starts from.
enum class HorizontalShape {
  BisectionRational,  // one irreducible double section of genus 0
  BisectionElliptic,  // one irreducible double section of genus 1
  TwoSections,        // two disjoint sections, classes C0 and C0 + e*F
};

/// One admissible blow-up center on the surface under construction:
/// a recorded point (a boundary mark or a node of two fiber components),
/// a free smooth point of a fiber component, or a point on a fiber that is
/// still smooth (which degenerates it). Centers never create triple points
/// on the boundary.
struct BlowupCenter {
  enum class Kind { RecordedPoint, FreePoint, FreshFiberMark, FreshFiberFree };
  Kind kind = Kind::FreshFiberFree;
  std::string fiber_label;     // RecordedPoint, FreePoint
  std::string point_id;        // RecordedPoint
  std::string component_id;    // FreePoint
  std::string horizontal_id;   // FreshFiberMark

  std::string describe() const;
};

/// Builds instances by iterated blow-up of a ruled model, exposing the
/// admissible-center list so callers can walk the full choice tree.
class InstanceBuilder {
 public:
  /// total_blowups fixes the width of the ambient lattice up front.
  InstanceBuilder(std::int64_t genus, std::int64_t e_invariant, std::int64_t total_blowups,
                  HorizontalShape shape);

  /// Enumerates every admissible center in a fixed deterministic order.
  std::vector<BlowupCenter> admissible_centers() const;

  void blow_up(const BlowupCenter& center);

  std::int64_t blowups_done() const { return blowups_done_; }
  std::int64_t blowups_total() const { return total_; }

  /// Assembles the pair; in_dv flags are applied to components in
  /// (fiber label, component id) order and must match the component count.
  SurfacePair finish(const std::vector<bool>& in_dv_flags,
                     std::int64_t whole_fiber_dv_count) const;

  std::size_t component_count() const;

 private:
  SurfacePair sp_;
  std::int64_t total_ = 0;
  std::int64_t blowups_done_ = 0;
  std::int64_t next_component_ = 0;
  std::int64_t next_point_ = 0;

  std::string fresh_component_id() { return "v" + std::to_string(next_component_++); }
  std::string fresh_point_id() { return "p" + std::to_string(next_point_++); }
  FiberConfig& fresh_fiber();
  void blow_up_at_point(FiberConfig& fiber, const std::string& point_id);
  void blow_up_free(FiberConfig& fiber, const std::string& component_id);
};

/// Which horizontal shapes are geometrically sensible for a given base
/// genus: rational bisections need a rational double cover, elliptic
/// bisections a genus-one one, so the menu shrinks as the genus grows.
std::vector<HorizontalShape> shapes_for_genus(std::int64_t genus);

/// Deterministic seeded instance generation. Identical seed and parameters
/// give identical instances. Rejects parameters outside the documented
/// ranges.
SurfacePair random_instance(std::uint64_t seed, const GeneratorParams& params);

}  // namespace ruledmmp
