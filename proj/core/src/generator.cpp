#include "ruledmmp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ruledmmp/checked.hpp"

namespace ruledmmp {

std::string BlowupCenter::describe() const {
  switch (kind) {
    case Kind::RecordedPoint: return "point " + point_id + " of " + fiber_label;
    case Kind::FreePoint: return "free point on " + component_id + " of " + fiber_label;
    case Kind::FreshFiberMark: return "fresh fiber at a mark of " + horizontal_id;
    case Kind::FreshFiberFree: return "fresh fiber at a free point";
  }
  return "?";
}

namespace {

DivisorClass exceptional(std::int64_t total, std::int64_t index) {
  std::vector<std::int64_t> e(total, 0);
  e.at(index) = 1;
  return DivisorClass(0, 0, std::move(e));
}

void sort_fiber(FiberConfig& f) {
  std::sort(f.components.begin(), f.components.end(),
            [](const FiberComponent& a, const FiberComponent& b) { return id_less(a.id, b.id); });
  std::sort(f.points.begin(), f.points.end(),
            [](const IncidencePoint& a, const IncidencePoint& b) { return id_less(a.id, b.id); });
}

}  // namespace

InstanceBuilder::InstanceBuilder(std::int64_t genus, std::int64_t e_invariant,
                                 std::int64_t total_blowups, HorizontalShape shape)
    : total_(total_blowups) {
  sp_.ctx = LatticeContext{genus, e_invariant, total_blowups};
  std::vector<std::int64_t> zeros(total_blowups, 0);
  switch (shape) {
    case HorizontalShape::BisectionRational:
    case HorizontalShape::BisectionElliptic: {
      // p_a(2*C0 + b*F) = b - e + 2g - 1, so b realizes the wanted genus.
      std::int64_t pa = shape == HorizontalShape::BisectionRational ? 0 : 1;
      std::int64_t b = pa + e_invariant - 2 * genus + 1;
      sp_.horizontals.push_back({"h0", DivisorClass(2, b, zeros), {}, pa});
      break;
    }
    case HorizontalShape::TwoSections: {
      // C0 and C0 + e*F are disjoint sections; each has genus g.
      sp_.horizontals.push_back({"h0", DivisorClass(1, 0, zeros), {}, genus});
      sp_.horizontals.push_back({"h1", DivisorClass(1, e_invariant, zeros), {}, genus});
      break;
    }
  }
}

std::size_t InstanceBuilder::component_count() const {
  std::size_t n = 0;
  for (const FiberConfig& f : sp_.fibers) n += f.components.size();
  return n;
}

std::vector<BlowupCenter> InstanceBuilder::admissible_centers() const {
  std::vector<BlowupCenter> out;
  for (const FiberConfig& f : sp_.fibers) {
    for (const IncidencePoint& p : f.points)
      out.push_back({BlowupCenter::Kind::RecordedPoint, f.label, p.id, "", ""});
    for (const FiberComponent& c : f.components)
      out.push_back({BlowupCenter::Kind::FreePoint, f.label, "", c.id, ""});
  }
  for (const HorizontalCurve& h : sp_.horizontals)
    out.push_back({BlowupCenter::Kind::FreshFiberMark, "", "", "", h.id});
  out.push_back({BlowupCenter::Kind::FreshFiberFree, "", "", "", ""});
  return out;
}

FiberConfig& InstanceBuilder::fresh_fiber() {
  FiberConfig f;
  f.label = "t" + std::to_string(sp_.fibers.size());
  FiberComponent comp{fresh_component_id(), fiber_class(sp_.ctx), 1, false};
  // The horizontal boundary crosses a smooth fiber transversally: one point
  // per unit of fiber degree, all distinct.
  for (HorizontalCurve& h : sp_.horizontals) {
    std::int64_t deg = intersect(h.cls, fiber_class(sp_.ctx), sp_.ctx);
    for (std::int64_t i = 0; i < deg; ++i) {
      IncidencePoint pt{fresh_point_id(), {{h.id, 1}, {comp.id, 1}}};
      h.marks.push_back(pt.id);
      f.points.push_back(std::move(pt));
    }
  }
  f.components.push_back(std::move(comp));
  sp_.fibers.push_back(std::move(f));
  return sp_.fibers.back();
}

void InstanceBuilder::blow_up_at_point(FiberConfig& fiber, const std::string& point_id) {
  auto pt_it = std::find_if(fiber.points.begin(), fiber.points.end(),
                            [&](const IncidencePoint& p) { return p.id == point_id; });
  if (pt_it == fiber.points.end()) fail(errc::invalid_parameter, "no point " + point_id);
  IncidencePoint old = *pt_it;
  fiber.points.erase(pt_it);

  DivisorClass exc = exceptional(total_, blowups_done_);
  FiberComponent fresh{fresh_component_id(), exc, 0, false};

  for (const auto& [curve_id, mult] : old.branches) {
    (void)mult;
    auto h_it = std::find_if(sp_.horizontals.begin(), sp_.horizontals.end(),
                             [&](const HorizontalCurve& h) { return h.id == curve_id; });
    if (h_it != sp_.horizontals.end()) {
      h_it->cls -= exc;
      std::erase(h_it->marks, old.id);
      IncidencePoint pt{fresh_point_id(), {{h_it->id, 1}, {fresh.id, 1}}};
      h_it->marks.push_back(pt.id);
      fiber.points.push_back(std::move(pt));
    } else {
      auto comp_it = std::find_if(fiber.components.begin(), fiber.components.end(),
                                  [&](const FiberComponent& c) { return c.id == curve_id; });
      if (comp_it == fiber.components.end())
        fail(errc::inconsistent_state, "point " + old.id + " references missing " + curve_id);
      comp_it->cls -= exc;
      fresh.mult = checked_add(fresh.mult, comp_it->mult);
      fiber.points.push_back({fresh_point_id(), {{comp_it->id, 1}, {fresh.id, 1}}});
    }
  }
  fiber.components.push_back(std::move(fresh));
  sort_fiber(fiber);
  for (HorizontalCurve& h : sp_.horizontals) std::sort(h.marks.begin(), h.marks.end(), IdLess{});
}

void InstanceBuilder::blow_up_free(FiberConfig& fiber, const std::string& component_id) {
  auto comp_it = std::find_if(fiber.components.begin(), fiber.components.end(),
                              [&](const FiberComponent& c) { return c.id == component_id; });
  if (comp_it == fiber.components.end()) fail(errc::invalid_parameter, "no component " + component_id);
  DivisorClass exc = exceptional(total_, blowups_done_);
  FiberComponent fresh{fresh_component_id(), exc, comp_it->mult, false};
  comp_it->cls -= exc;
  fiber.points.push_back({fresh_point_id(), {{comp_it->id, 1}, {fresh.id, 1}}});
  fiber.components.push_back(std::move(fresh));
  sort_fiber(fiber);
}

void InstanceBuilder::blow_up(const BlowupCenter& center) {
  if (blowups_done_ >= total_) fail(errc::invalid_parameter, "all blow-ups already spent");
  auto fiber_ref = [&](const std::string& label) -> FiberConfig& {
    for (FiberConfig& f : sp_.fibers)
      if (f.label == label) return f;
    fail(errc::invalid_parameter, "no fiber " + label);
  };
  switch (center.kind) {
    case BlowupCenter::Kind::RecordedPoint:
      blow_up_at_point(fiber_ref(center.fiber_label), center.point_id);
      break;
    case BlowupCenter::Kind::FreePoint:
      blow_up_free(fiber_ref(center.fiber_label), center.component_id);
      break;
    case BlowupCenter::Kind::FreshFiberMark: {
      FiberConfig& f = fresh_fiber();
      const HorizontalCurve* h = sp_.find_horizontal(center.horizontal_id);
      if (!h) fail(errc::invalid_parameter, "no horizontal " + center.horizontal_id);
      // First recorded mark of that curve on the new fiber.
      std::string mark;
      for (const IncidencePoint& p : f.points)
        if (p.has_branch(h->id) && (mark.empty() || id_less(p.id, mark))) mark = p.id;
      blow_up_at_point(f, mark);
      break;
    }
    case BlowupCenter::Kind::FreshFiberFree: {
      FiberConfig& f = fresh_fiber();
      blow_up_free(f, f.components.front().id);
      break;
    }
  }
  blowups_done_ += 1;
}

SurfacePair InstanceBuilder::finish(const std::vector<bool>& in_dv_flags,
                                    std::int64_t whole_fiber_dv_count) const {
  if (blowups_done_ != total_)
    fail(errc::invalid_parameter, "builder still has blow-ups to spend");
  if (in_dv_flags.size() != component_count())
    fail(errc::invalid_parameter, "in_dv flag count does not match component count");
  SurfacePair out = sp_;
  std::size_t at = 0;
  for (FiberConfig& f : out.fibers)
    for (FiberComponent& c : f.components) c.in_dv = in_dv_flags[at++];
  for (std::int64_t i = 0; i < whole_fiber_dv_count; ++i)
    out.dv_whole_smooth_fibers.push_back("t" + std::to_string(out.fibers.size() + i));
  return out;
}

std::vector<HorizontalShape> shapes_for_genus(std::int64_t genus) {
  if (genus == 0)
    return {HorizontalShape::BisectionRational, HorizontalShape::BisectionElliptic,
            HorizontalShape::TwoSections};
  if (genus == 1) return {HorizontalShape::BisectionElliptic, HorizontalShape::TwoSections};
  return {HorizontalShape::TwoSections};
}

SurfacePair random_instance(std::uint64_t seed, const GeneratorParams& params) {
  if (params.genus < 0 || params.genus > 3)
    fail(errc::invalid_parameter, "genus must lie in 0..3");
  if (params.e_invariant < 0 || params.e_invariant > 4)
    fail(errc::invalid_parameter, "e must lie in 0..4");
  if (params.max_blowups < 0 || params.max_blowups > 12)
    fail(errc::invalid_parameter, "blow-up count must lie in 0..12");
  if (!(params.dv_density >= 0.0 && params.dv_density <= 1.0))
    fail(errc::invalid_parameter, "dv density must lie in [0,1]");
  if (params.whole_fiber_dv_count < 0 || params.whole_fiber_dv_count > 4)
    fail(errc::invalid_parameter, "whole-fiber count must lie in 0..4");

  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::uint64_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<HorizontalShape> shapes = shapes_for_genus(params.genus);
  HorizontalShape shape;
  if (params.genus == 0) {
    // Weighted toward the rational bisection, which is the richest case.
    static const HorizontalShape table[4] = {
        HorizontalShape::BisectionElliptic, HorizontalShape::TwoSections,
        HorizontalShape::BisectionRational, HorizontalShape::BisectionRational};
    shape = table[pick(4)];
  } else {
    shape = shapes[pick(shapes.size())];
  }

  InstanceBuilder builder(params.genus, params.e_invariant, params.max_blowups, shape);
  for (std::int64_t i = 0; i < params.max_blowups; ++i) {
    std::vector<BlowupCenter> centers = builder.admissible_centers();
    builder.blow_up(centers[pick(centers.size())]);
  }

  const std::uint64_t scale = 1u << 20;
  auto threshold = static_cast<std::uint64_t>(std::llround(params.dv_density * scale));
  std::vector<bool> flags(builder.component_count());
  for (std::size_t i = 0; i < flags.size(); ++i) flags[i] = (rng() % scale) < threshold;

  return builder.finish(flags, params.whole_fiber_dv_count);
}

}  // namespace ruledmmp
