#include "ruledmmp/contraction.hpp"

#include <algorithm>

#include "ruledmmp/checked.hpp"

namespace ruledmmp {

const char* to_string(StepRationale r) {
  switch (r) {
    case StepRationale::DisjointFromDh: return "disjoint-from-Dh";
    case StepRationale::InDvPreferred: return "in-Dv-preferred";
    case StepRationale::AnyMinusOne: return "any-minus-one";
    case StepRationale::Cleanup: return "cleanup";
  }
  return "?";
}

StepRationale rationale_from_string(const std::string& s) {
  if (s == "disjoint-from-Dh") return StepRationale::DisjointFromDh;
  if (s == "in-Dv-preferred") return StepRationale::InDvPreferred;
  if (s == "any-minus-one") return StepRationale::AnyMinusOne;
  if (s == "cleanup") return StepRationale::Cleanup;
  fail(errc::parse_error, "unknown step rationale: " + s);
}

std::int64_t LivePoint::pair_mult(const std::string& a, const std::string& b) const {
  auto key = id_less(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = pair_mults.find(key);
  return it == pair_mults.end() ? 0 : it->second;
}

const LiveComponent* LiveFiber::find(const std::string& id) const {
  for (const LiveComponent& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

const LiveFiber* ContractionState::find_fiber(const std::string& label) const {
  for (const LiveFiber& f : fibers)
    if (f.label == label) return &f;
  return nullptr;
}

std::pair<const LiveFiber*, const LiveComponent*> ContractionState::find_component(
    const std::string& id) const {
  for (const LiveFiber& f : fibers)
    if (const LiveComponent* c = f.find(id)) return {&f, c};
  return {nullptr, nullptr};
}

const LivePoint* ContractionState::find_point(const std::string& id) const {
  for (const LiveFiber& f : fibers)
    for (const LivePoint& p : f.points)
      if (p.id == id) return &p;
  return nullptr;
}

DivisorClass ContractionState::horizontal_total() const {
  DivisorClass sum = DivisorClass::zero(base.ctx);
  for (const LiveHorizontal& h : horizontals) sum += h.cls;
  return sum;
}

std::vector<std::string> ContractionState::live_minus_one_ids(const LiveFiber& f) const {
  std::vector<std::string> out;
  for (const LiveComponent& c : f.components)
    if (intersect(c.cls, c.cls, base.ctx) == -1) out.push_back(c.id);
  std::sort(out.begin(), out.end(), IdLess{});
  return out;
}

std::vector<std::string> ContractionState::live_minus_one_ids() const {
  std::vector<std::string> out;
  for (const LiveFiber& f : fibers) {
    std::vector<std::string> part = live_minus_one_ids(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), IdLess{});
  return out;
}

ContractionState initial_state(const SurfacePair& sp) {
  ContractionState st;
  st.base = sp;
  st.canonical = canonical_class(sp.ctx);
  for (const HorizontalCurve& h : sp.horizontals) st.horizontals.push_back({h.id, h.cls});
  for (const FiberConfig& f : sp.fibers) {
    LiveFiber lf;
    lf.label = f.label;
    for (const FiberComponent& c : f.components)
      lf.components.push_back({c.id, c.cls, c.mult, c.in_dv});
    for (const IncidencePoint& p : f.points) {
      LivePoint lp;
      lp.id = p.id;
      for (const auto& [curve, mult] : p.branches) lp.branches[curve] += 1;
      for (std::size_t i = 0; i < p.branches.size(); ++i)
        for (std::size_t j = i + 1; j < p.branches.size(); ++j) {
          const auto& [a_id, a_mult] = p.branches[i];
          const auto& [b_id, b_mult] = p.branches[j];
          auto key = id_less(a_id, b_id) ? std::make_pair(a_id, b_id) : std::make_pair(b_id, a_id);
          lp.pair_mults[key] = checked_add(lp.pair_mults[key], checked_mul(a_mult, b_mult));
        }
      lf.points.push_back(std::move(lp));
    }
    st.fibers.push_back(std::move(lf));
  }
  return st;
}

namespace {

const LiveFiber& require_live_vertical(const ContractionState& state, const std::string& id,
                                       const LiveComponent** out_comp) {
  for (const LiveHorizontal& h : state.horizontals)
    if (h.id == id) fail(errc::horizontal_component, id + " is a horizontal curve");
  auto [fiber, comp] = state.find_component(id);
  if (!fiber) {
    bool existed = state.base.find_component(id) != nullptr;
    if (existed) fail(errc::dead_component, id + " was already contracted");
    fail(errc::unknown_component, "no component named " + id);
  }
  *out_comp = comp;
  return *fiber;
}

}  // namespace

bool is_disjoint_from_dh(const ContractionState& state, const std::string& component_id) {
  const LiveComponent* comp = nullptr;
  const LiveFiber& fiber = require_live_vertical(state, component_id, &comp);
  for (const LivePoint& p : fiber.points) {
    if (!p.has_curve(component_id)) continue;
    for (const LiveHorizontal& h : state.horizontals)
      if (p.has_curve(h.id)) return false;
  }
  return true;
}

bool dh_dv_meet_in_fiber(const ContractionState& state, const std::string& label) {
  const LiveFiber* fiber = state.find_fiber(label);
  if (!fiber) fail(errc::unknown_fiber, "no degenerate fiber labelled " + label);
  for (const LivePoint& p : fiber->points) {
    bool has_h = false, has_dv = false;
    for (const auto& [curve, count] : p.branches) {
      for (const LiveHorizontal& h : state.horizontals)
        if (h.id == curve) has_h = true;
      if (const LiveComponent* c = fiber->find(curve); c && c->in_dv) has_dv = true;
    }
    if (has_h && has_dv) return true;
  }
  return false;
}

std::pair<ContractionState, ContractionStep> contract(const ContractionState& state,
                                                      const std::string& component_id, int stage,
                                                      StepRationale rationale) {
  const LiveComponent* comp = nullptr;
  const LiveFiber& fiber = require_live_vertical(state, component_id, &comp);
  const LatticeContext& ctx = state.base.ctx;
  const DivisorClass axis = comp->cls;
  if (intersect(axis, axis, ctx) != -1)
    fail(errc::not_minus_one_curve, component_id + " has self-intersection " +
                                        std::to_string(intersect(axis, axis, ctx)));
  if (intersect(state.canonical, axis, ctx) != -1)
    fail(errc::inconsistent_state, "canonical pairing with " + component_id + " is not -1");

  ContractionState next = state;
  LiveFiber* lf = nullptr;
  for (LiveFiber& f : next.fibers)
    if (f.label == fiber.label) lf = &f;

  // Merge every point of the contracted curve into one new point. Branch
  // counts add up; the pairwise multiplicity of two survivors picks up the
  // product of their total local multiplicities with the contracted curve
  // on top of whatever contact they already had at the merged points.
  LivePoint merged;
  merged.id = "m" + std::to_string(state.step_count);
  std::map<std::string, std::int64_t, IdLess> mult_with_axis;
  std::vector<LivePoint> kept;
  for (const LivePoint& p : lf->points) {
    if (!p.has_curve(component_id)) {
      kept.push_back(p);
      continue;
    }
    for (const auto& [curve, count] : p.branches)
      if (curve != component_id) merged.branches[curve] += count;
    for (const auto& [key, mult] : p.pair_mults) {
      const auto& [a, b] = key;
      if (a == component_id)
        mult_with_axis[b] = checked_add(mult_with_axis[b], mult);
      else if (b == component_id)
        mult_with_axis[a] = checked_add(mult_with_axis[a], mult);
      else
        merged.pair_mults[key] = checked_add(merged.pair_mults[key], mult);
    }
  }
  for (auto it = mult_with_axis.begin(); it != mult_with_axis.end(); ++it)
    for (auto jt = std::next(it); jt != mult_with_axis.end(); ++jt) {
      auto key = std::make_pair(it->first, jt->first);
      merged.pair_mults[key] = checked_add(merged.pair_mults[key],
                                           checked_mul(it->second, jt->second));
    }
  if (merged.branches.empty())
    fail(errc::inconsistent_state, component_id + " met no other curve; fiber is disconnected");
  kept.push_back(merged);
  std::sort(kept.begin(), kept.end(),
            [](const LivePoint& a, const LivePoint& b) { return id_less(a.id, b.id); });
  lf->points = std::move(kept);
  std::erase_if(lf->components, [&](const LiveComponent& c) { return c.id == component_id; });

  // A horizontal curve with two or more branches at the merged point maps
  // onto a singular point of its image from here on.
  for (const LiveHorizontal& h : next.horizontals) {
    auto it = merged.branches.find(h.id);
    if (it != merged.branches.end() && it->second >= 2)
      next.singular_image_points.push_back({h.id, merged.id, state.step_count});
  }

  // Project every live class onto the perp of the contracted class.
  for (LiveFiber& f : next.fibers)
    for (LiveComponent& c : f.components) c.cls = project_contract(c.cls, axis, ctx);
  for (LiveHorizontal& h : next.horizontals) h.cls = project_contract(h.cls, axis, ctx);
  next.canonical = project_contract(next.canonical, axis, ctx);

  next.contracted.push_back({axis, component_id, fiber.label});
  next.step_count += 1;

  ContractionStep step;
  step.index = state.step_count;
  step.stage = stage;
  step.fiber_label = fiber.label;
  step.contracted_class = axis;
  step.component_id = component_id;
  step.rationale = rationale;
  return {std::move(next), std::move(step)};
}

ContractionState replay(const SurfacePair& sp, const std::vector<ContractionStep>& steps,
                        std::size_t upto) {
  if (upto > steps.size()) fail(errc::invalid_parameter, "replay index past the end of the trace");
  ContractionState state = initial_state(sp);
  for (std::size_t i = 0; i < upto; ++i) {
    auto [fiber, comp] = state.find_component(steps[i].component_id);
    if (!fiber) fail(errc::plan_mismatch, "trace contracts unknown component " + steps[i].component_id);
    if (!(comp->cls == steps[i].contracted_class))
      fail(errc::plan_mismatch, "recorded class of step " + std::to_string(i) +
                                    " does not match the live class");
    state = contract(state, steps[i].component_id, steps[i].stage, steps[i].rationale).first;
  }
  return state;
}

}  // namespace ruledmmp
