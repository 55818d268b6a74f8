#include "ruledmmp/goodmodel.hpp"

#include <algorithm>

#include "ruledmmp/checked.hpp"

namespace ruledmmp {

namespace {

// Smallest-id live (-1)-curve that is set-theoretically disjoint from the
// horizontal boundary. Claims of disjointness are cross-checked against the
// lattice product.
std::string pick_stage1(const ContractionState& state) {
  std::string pick;
  for (const LiveFiber& f : state.fibers)
    for (const std::string& id : state.live_minus_one_ids(f)) {
      if (!is_disjoint_from_dh(state, id)) continue;
      std::int64_t product = intersect(state.horizontal_total(), f.find(id)->cls, state.base.ctx);
      if (product != 0)
        fail(errc::inconsistent_state,
             id + " has no shared point with the horizontal boundary but pairs to " +
                 std::to_string(product));
      if (pick.empty() || id_less(id, pick)) pick = id;
    }
  return pick;
}

// Stage-2 choice within one fiber: smallest-id (-1)-curve, restricted to
// in-D^v members whenever one exists.
std::pair<std::string, StepRationale> pick_stage2(const ContractionState& state,
                                                  const LiveFiber& fiber) {
  std::vector<std::string> ones = state.live_minus_one_ids(fiber);
  if (ones.empty()) return {"", StepRationale::AnyMinusOne};
  for (const std::string& id : ones)
    if (fiber.find(id)->in_dv) return {id, StepRationale::InDvPreferred};
  return {ones.front(), StepRationale::AnyMinusOne};
}

void finish_plan(GoodModelPlan& plan, const SurfacePair& sp) {
  plan.m = static_cast<std::int64_t>(plan.steps.size());
  if (plan.m != sp.ctx.num_exceptionals)
    fail(errc::inconsistent_state,
         "run finished after " + std::to_string(plan.m) + " steps on a lattice with " +
             std::to_string(sp.ctx.num_exceptionals) + " exceptionals");
  const DivisorClass fib = fiber_class(sp.ctx);
  for (const LiveFiber& f : plan.final_state.fibers) {
    if (f.components.size() != 1 || !(f.components[0].cls == fib) || f.components[0].mult != 1)
      fail(errc::inconsistent_state, "fiber " + f.label + " did not reduce to a smooth fiber");
  }
  plan.gamma_value = gamma(plan);
  plan.e_prime = compute_e_prime(plan);
}

}  // namespace

GoodModelPlan run(const SurfacePair& sp) {
  VerificationReport vr = validate(sp);
  if (!vr.overall()) {
    std::string what = "instance fails validation:";
    for (const CheckResult& c : vr.checks)
      if (c.status == CheckStatus::Fail) what += " [" + c.name + "] " + c.witness;
    fail(errc::validation_failed, what);
  }

  GoodModelPlan plan;
  ContractionState state = initial_state(sp);

  for (;;) {
    std::string pick = pick_stage1(state);
    if (pick.empty()) break;
    auto [next, step] = contract(state, pick, 1, StepRationale::DisjointFromDh);
    state = std::move(next);
    plan.steps.push_back(std::move(step));
  }
  plan.k1 = static_cast<std::int64_t>(plan.steps.size());

  std::vector<std::string> labels;
  for (const LiveFiber& f : state.fibers) labels.push_back(f.label);
  std::sort(labels.begin(), labels.end(), IdLess{});
  for (const std::string& label : labels) {
    for (;;) {
      if (!dh_dv_meet_in_fiber(state, label)) break;
      auto [pick, rationale] = pick_stage2(state, *state.find_fiber(label));
      if (pick.empty()) break;
      auto [next, step] = contract(state, pick, 2, rationale);
      state = std::move(next);
      plan.steps.push_back(std::move(step));
    }
  }
  plan.k2 = static_cast<std::int64_t>(plan.steps.size());

  for (;;) {
    std::vector<std::string> ones = state.live_minus_one_ids();
    if (ones.empty()) break;
    auto [next, step] = contract(state, ones.front(), 3, StepRationale::Cleanup);
    state = std::move(next);
    plan.steps.push_back(std::move(step));
  }

  plan.final_state = std::move(state);
  finish_plan(plan, sp);
  return plan;
}

std::int64_t gamma(const GoodModelPlan& plan) {
  const LatticeContext& ctx = plan.final_state.base.ctx;
  DivisorClass projected = plan.final_state.canonical + plan.final_state.horizontal_total();
  bool proportional = projected.c0() == 0 &&
                      std::all_of(projected.e().begin(), projected.e().end(),
                                  [](std::int64_t v) { return v == 0; });
  if (!proportional)
    fail(errc::inconsistent_state,
         "projected K + D^h is not a multiple of the fiber class: " + to_string(projected));
  std::int64_t lambda = projected.f();
  return checked_sub(lambda, checked_sub(checked_mul(2, ctx.genus), 2));
}

DivisorClass compute_e_prime(const GoodModelPlan& plan) {
  DivisorClass sum = DivisorClass::zero(plan.final_state.base.ctx);
  for (std::int64_t i = 0; i < plan.k1; ++i) sum += plan.steps[i].contracted_class;
  return sum;
}

namespace {

struct PlanEnumerator {
  const SurfacePair& sp;
  std::size_t limit;
  std::vector<GoodModelPlan> out;

  bool full() const { return out.size() >= limit; }

  void record(ContractionState state, std::vector<ContractionStep> steps, std::int64_t k1,
              std::int64_t k2) {
    if (full()) return;
    GoodModelPlan plan;
    plan.steps = std::move(steps);
    plan.k1 = k1;
    plan.k2 = k2;
    plan.final_state = std::move(state);
    finish_plan(plan, sp);
    out.push_back(std::move(plan));
  }

  std::vector<std::string> stage1_candidates(const ContractionState& state) const {
    std::vector<std::string> cands;
    for (const LiveFiber& f : state.fibers)
      for (const std::string& id : state.live_minus_one_ids(f))
        if (is_disjoint_from_dh(state, id)) cands.push_back(id);
    return cands;
  }

  void stage1(const ContractionState& state, std::vector<ContractionStep> steps) {
    if (full()) return;
    std::vector<std::string> cands = stage1_candidates(state);
    if (cands.empty()) {
      std::vector<std::string> labels;
      for (const LiveFiber& f : state.fibers) labels.push_back(f.label);
      std::sort(labels.begin(), labels.end(), IdLess{});
      std::int64_t k1 = static_cast<std::int64_t>(steps.size());
      if (labels.empty()) {
        stage3(state, steps, k1, k1);
        return;
      }
      do {
        stage2(state, steps, labels, 0, k1);
      } while (std::next_permutation(labels.begin(), labels.end(), IdLess{}) && !full());
      return;
    }
    for (const std::string& id : cands) {
      if (full()) return;
      auto [next, step] = contract(state, id, 1, StepRationale::DisjointFromDh);
      std::vector<ContractionStep> s = steps;
      s.push_back(step);
      stage1(next, std::move(s));
    }
  }

  void stage2(const ContractionState& state, std::vector<ContractionStep> steps,
              const std::vector<std::string>& order, std::size_t at, std::int64_t k1) {
    if (full()) return;
    if (at == order.size()) {
      stage3(state, steps, k1, static_cast<std::int64_t>(steps.size()));
      return;
    }
    const std::string& label = order[at];
    if (!dh_dv_meet_in_fiber(state, label)) {
      stage2(state, steps, order, at + 1, k1);
      return;
    }
    const LiveFiber* fiber = state.find_fiber(label);
    std::vector<std::string> ones = state.live_minus_one_ids(*fiber);
    if (ones.empty()) {
      stage2(state, steps, order, at + 1, k1);
      return;
    }
    std::vector<std::string> dv_ones;
    for (const std::string& id : ones)
      if (fiber->find(id)->in_dv) dv_ones.push_back(id);
    StepRationale rationale =
        dv_ones.empty() ? StepRationale::AnyMinusOne : StepRationale::InDvPreferred;
    const std::vector<std::string>& cands = dv_ones.empty() ? ones : dv_ones;
    for (const std::string& id : cands) {
      if (full()) return;
      auto [next, step] = contract(state, id, 2, rationale);
      std::vector<ContractionStep> s = steps;
      s.push_back(step);
      stage2(next, std::move(s), order, at, k1);
    }
  }

  void stage3(const ContractionState& state, std::vector<ContractionStep> steps, std::int64_t k1,
              std::int64_t k2) {
    if (full()) return;
    std::vector<std::string> ones = state.live_minus_one_ids();
    if (ones.empty()) {
      record(state, std::move(steps), k1, k2);
      return;
    }
    for (const std::string& id : ones) {
      if (full()) return;
      auto [next, step] = contract(state, id, 3, StepRationale::Cleanup);
      std::vector<ContractionStep> s = steps;
      s.push_back(step);
      stage3(next, std::move(s), k1, k2);
    }
  }
};

}  // namespace

std::vector<GoodModelPlan> enumerate_plans(const SurfacePair& sp, std::size_t limit) {
  VerificationReport vr = validate(sp);
  if (!vr.overall()) fail(errc::validation_failed, "instance fails validation");
  PlanEnumerator en{sp, limit, {}};
  en.stage1(initial_state(sp), {});
  return en.out;
}

}  // namespace ruledmmp
