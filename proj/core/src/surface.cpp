#include "ruledmmp/surface.hpp"

#include <algorithm>
#include <set>

#include "ruledmmp/checked.hpp"

namespace ruledmmp {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Vacuous: return "VACUOUS";
    case CheckStatus::Flag: return "FLAG";
  }
  return "?";
}

const FiberConfig* SurfacePair::find_fiber(const std::string& label) const {
  for (const FiberConfig& f : fibers)
    if (f.label == label) return &f;
  return nullptr;
}

const FiberComponent* SurfacePair::find_component(const std::string& id) const {
  for (const FiberConfig& f : fibers)
    for (const FiberComponent& c : f.components)
      if (c.id == id) return &c;
  return nullptr;
}

const HorizontalCurve* SurfacePair::find_horizontal(const std::string& id) const {
  for (const HorizontalCurve& h : horizontals)
    if (h.id == id) return &h;
  return nullptr;
}

DivisorClass SurfacePair::horizontal_total() const {
  DivisorClass sum = DivisorClass::zero(ctx);
  for (const HorizontalCurve& h : horizontals) sum += h.cls;
  return sum;
}

DivisorClass SurfacePair::vertical_total() const {
  DivisorClass sum = DivisorClass::zero(ctx);
  for (const FiberConfig& f : fibers)
    for (const FiberComponent& c : f.components)
      if (c.in_dv) sum += c.cls;
  for (std::size_t i = 0; i < dv_whole_smooth_fibers.size(); ++i) sum += fiber_class(ctx);
  return sum;
}

DivisorClass SurfacePair::boundary_total() const { return horizontal_total() + vertical_total(); }

std::int64_t SurfacePair::total_fiber_multiplicity() const {
  std::int64_t total = 0;
  for (const FiberConfig& f : fibers)
    for (const FiberComponent& c : f.components) total = checked_add(total, c.mult);
  return total;
}

namespace {

bool sorted_by_id(const std::vector<std::string>& ids) {
  return std::is_sorted(ids.begin(), ids.end(), IdLess{});
}

// All recorded curves of the pair: fiber components plus horizontals,
// with the label of the fiber a component belongs to ("" for horizontals).
struct CurveRef {
  std::string id;
  std::string fiber;
  const DivisorClass* cls;
};

}  // namespace

VerificationReport validate(const SurfacePair& sp) {
  VerificationReport rep;
  bool dims_ok = true;

  if (sp.ctx.genus < 0 || sp.ctx.num_exceptionals < 0)
    rep.add("context", CheckStatus::Fail, "genus and exceptional count must be non-negative");

  auto check_dim = [&](const DivisorClass& cls, const std::string& who) {
    if (!cls.fits(sp.ctx)) {
      rep.add("class_dimensions", CheckStatus::Fail, who + " has wrong coefficient count");
      dims_ok = false;
    }
  };
  for (const HorizontalCurve& h : sp.horizontals) check_dim(h.cls, "horizontal " + h.id);
  for (const FiberConfig& f : sp.fibers)
    for (const FiberComponent& c : f.components) check_dim(c.cls, "component " + c.id);
  if (!dims_ok) return rep;  // nothing else is well-posed

  // Unique, canonically ordered identifiers.
  {
    std::set<std::string> seen;
    auto claim = [&](const std::string& id, const char* kind) {
      if (!seen.insert(id).second)
        rep.add("unique_ids", CheckStatus::Fail, std::string(kind) + " id reused: " + id);
    };
    std::vector<std::string> labels;
    for (const FiberConfig& f : sp.fibers) {
      claim(f.label, "fiber label");
      labels.push_back(f.label);
      std::vector<std::string> comp_ids, point_ids;
      for (const FiberComponent& c : f.components) { claim(c.id, "component"); comp_ids.push_back(c.id); }
      for (const IncidencePoint& p : f.points) { claim(p.id, "point"); point_ids.push_back(p.id); }
      if (!sorted_by_id(comp_ids))
        rep.add("unique_ids", CheckStatus::Fail, "components of " + f.label + " not in id order");
      if (!sorted_by_id(point_ids))
        rep.add("unique_ids", CheckStatus::Fail, "points of " + f.label + " not in id order");
    }
    if (!sorted_by_id(labels)) rep.add("unique_ids", CheckStatus::Fail, "fibers not in label order");
    for (const HorizontalCurve& h : sp.horizontals) claim(h.id, "horizontal");
    for (const std::string& l : sp.dv_whole_smooth_fibers) {
      claim(l, "whole smooth boundary fiber");
      if (sp.find_fiber(l))
        rep.add("dv_whole_labels", CheckStatus::Fail, "label " + l + " is also a degenerate fiber");
    }
    if (!sorted_by_id(sp.dv_whole_smooth_fibers))
      rep.add("dv_whole_labels", CheckStatus::Fail, "whole smooth boundary fibers not in label order");
  }

  // Horizontal boundary: a double section in total.
  if (sp.horizontals.empty() || sp.horizontals.size() > 2)
    rep.add("horizontal_count", CheckStatus::Fail,
            "expected 1 or 2 horizontal curves, found " + std::to_string(sp.horizontals.size()));
  const DivisorClass fib = fiber_class(sp.ctx);
  std::int64_t dh_f = 0;
  for (const HorizontalCurve& h : sp.horizontals) {
    std::int64_t deg = intersect(h.cls, fib, sp.ctx);
    dh_f = checked_add(dh_f, deg);
    if (deg < 1 || deg > 2)
      rep.add("dh_fiber_degree", CheckStatus::Fail,
              "horizontal " + h.id + " has fiber degree " + std::to_string(deg));
    if (sp.horizontals.size() == 2 && deg != 1)
      rep.add("dh_fiber_degree", CheckStatus::Fail,
              "horizontal " + h.id + " must be a section when the boundary splits");
    std::int64_t pa = adjunction_genus(h.cls, sp.ctx);
    if (h.genus < 0 || pa != h.genus)
      rep.add("horizontal_genus", CheckStatus::Fail,
              "horizontal " + h.id + " has genus field " + std::to_string(h.genus) +
                  " but adjunction genus " + std::to_string(pa));
  }
  if (dh_f != 2)
    rep.add("dh_fiber_degree", CheckStatus::Fail,
            "total horizontal fiber degree is " + std::to_string(dh_f) + ", not 2");

  // Fiber configurations.
  for (const FiberConfig& f : sp.fibers) {
    DivisorClass sum = DivisorClass::zero(sp.ctx);
    for (const FiberComponent& c : f.components) {
      if (c.mult < 1)
        rep.add("component_mult", CheckStatus::Fail, "component " + c.id + " has multiplicity < 1");
      if (intersect(c.cls, fib, sp.ctx) != 0)
        rep.add("component_vertical", CheckStatus::Fail, "component " + c.id + " is not vertical");
      if (adjunction_genus(c.cls, sp.ctx) != 0)
        rep.add("component_rationality", CheckStatus::Fail,
                "component " + c.id + " has nonzero adjunction genus");
      sum += c.cls.scaled(c.mult);
    }
    if (!(sum == fib))
      rep.add("fiber_class_sum", CheckStatus::Fail,
              "fiber " + f.label + ": multiplicity-weighted class sum is " + to_string(sum));

    for (const IncidencePoint& p : f.points) {
      if (p.branches.size() != 2) {
        rep.add("snc_points", CheckStatus::Fail,
                "point " + p.id + " has " + std::to_string(p.branches.size()) + " branches");
        continue;
      }
      if (p.branches[0].first == p.branches[1].first)
        rep.add("snc_points", CheckStatus::Fail, "point " + p.id + " lists one curve twice");
      bool on_fiber = false;
      for (const auto& [curve, mult] : p.branches) {
        if (mult != 1)
          rep.add("snc_points", CheckStatus::Fail,
                  "point " + p.id + " has branch multiplicity " + std::to_string(mult));
        bool is_comp = std::any_of(f.components.begin(), f.components.end(),
                                   [&](const FiberComponent& c) { return c.id == curve; });
        if (is_comp) on_fiber = true;
        if (!is_comp && !sp.is_horizontal_id(curve))
          rep.add("snc_points", CheckStatus::Fail,
                  "point " + p.id + " references unknown curve " + curve);
      }
      if (!on_fiber)
        rep.add("snc_points", CheckStatus::Fail,
                "point " + p.id + " does not lie on any component of fiber " + f.label);
    }
  }

  // Horizontal marks must be exactly the recorded points carrying the curve.
  for (const HorizontalCurve& h : sp.horizontals) {
    std::vector<std::string> expected;
    for (const FiberConfig& f : sp.fibers)
      for (const IncidencePoint& p : f.points)
        if (p.has_branch(h.id)) expected.push_back(p.id);
    std::sort(expected.begin(), expected.end(), IdLess{});
    std::vector<std::string> marks = h.marks;
    if (!sorted_by_id(marks))
      rep.add("horizontal_marks", CheckStatus::Fail, "marks of " + h.id + " not in id order");
    std::sort(marks.begin(), marks.end(), IdLess{});
    if (marks != expected)
      rep.add("horizontal_marks", CheckStatus::Fail,
              "marks of " + h.id + " disagree with the recorded points");
  }

  // Incidence data and lattice classes must tell the same story: for every
  // pair of distinct recorded curves the sum of branch-multiplicity products
  // over shared points equals the intersection number of their classes.
  {
    std::vector<CurveRef> curves;
    for (const FiberConfig& f : sp.fibers)
      for (const FiberComponent& c : f.components) curves.push_back({c.id, f.label, &c.cls});
    for (const HorizontalCurve& h : sp.horizontals) curves.push_back({h.id, "", &h.cls});

    auto point_sum = [&](const CurveRef& a, const CurveRef& b) {
      std::int64_t sum = 0;
      for (const FiberConfig& f : sp.fibers)
        for (const IncidencePoint& p : f.points) {
          std::int64_t ma = 0, mb = 0;
          for (const auto& [curve, mult] : p.branches) {
            if (curve == a.id) ma = mult;
            if (curve == b.id) mb = mult;
          }
          sum = checked_add(sum, checked_mul(ma, mb));
        }
      return sum;
    };

    for (std::size_t i = 0; i < curves.size(); ++i)
      for (std::size_t j = i + 1; j < curves.size(); ++j) {
        std::int64_t from_points = point_sum(curves[i], curves[j]);
        std::int64_t from_classes = intersect(*curves[i].cls, *curves[j].cls, sp.ctx);
        if (from_points != from_classes)
          rep.add("incidence_lattice", CheckStatus::Fail,
                  curves[i].id + "*" + curves[j].id + ": points give " +
                      std::to_string(from_points) + ", classes give " +
                      std::to_string(from_classes));
      }
  }

  if (rep.checks.empty()) rep.add("valid", CheckStatus::Pass);
  return rep;
}

std::vector<std::string> minus_one_curves(const SurfacePair& sp, const std::string& label) {
  const FiberConfig* f = sp.find_fiber(label);
  if (!f) fail(errc::unknown_fiber, "no degenerate fiber labelled " + label);
  std::vector<std::string> out;
  for (const FiberComponent& c : f->components) {
    if (intersect(c.cls, c.cls, sp.ctx) == -1) {
      if (adjunction_genus(c.cls, sp.ctx) != 0)
        fail(errc::inconsistent_state, "component " + c.id + " has self -1 but nonzero genus");
      out.push_back(c.id);
    }
  }
  return out;
}

}  // namespace ruledmmp
