#include "ruledmmp/verify.hpp"

#include <algorithm>

#include "ruledmmp/checked.hpp"

namespace ruledmmp {

namespace {

void require_plan_match(const SurfacePair& sp, const GoodModelPlan& plan) {
  if (!(plan.final_state.base == sp))
    fail(errc::plan_mismatch, "plan was computed for a different instance");
}

// Start-surface component ids spanning supp(D^v + E'): the in-D^v members
// plus everything contracted during stage 1.
std::set<std::string> dv_eprime_support(const SurfacePair& sp, const GoodModelPlan& plan) {
  std::set<std::string> supp;
  for (const FiberConfig& f : sp.fibers)
    for (const FiberComponent& c : f.components)
      if (c.in_dv) supp.insert(c.id);
  for (std::int64_t i = 0; i < plan.k1; ++i) supp.insert(plan.steps[i].component_id);
  return supp;
}

bool fiber_inside_support(const FiberConfig& f, const std::set<std::string>& supp) {
  return std::all_of(f.components.begin(), f.components.end(),
                     [&](const FiberComponent& c) { return supp.count(c.id) != 0; });
}

std::int64_t projected_lambda(const GoodModelPlan& plan) {
  const LatticeContext& ctx = plan.final_state.base.ctx;
  return checked_add(plan.gamma_value, checked_sub(checked_mul(2, ctx.genus), 2));
}

}  // namespace

VerificationReport check_prop_3_5(const SurfacePair& sp, const GoodModelPlan& plan) {
  require_plan_match(sp, plan);
  VerificationReport rep;
  const LatticeContext& ctx = sp.ctx;

  DivisorClass lhs = canonical_class(ctx) + sp.boundary_total();
  DivisorClass rhs = fiber_class(ctx).scaled(projected_lambda(plan)) + sp.vertical_total() +
                     plan.e_prime;
  if (lhs == rhs)
    rep.add("prop_3_5", CheckStatus::Pass, "K + D = " + to_string(lhs));
  else
    rep.add("prop_3_5", CheckStatus::Fail,
            "K + D = " + to_string(lhs) + " but decomposition gives " + to_string(rhs));

  bool zero = plan.e_prime.is_zero();
  if (zero != (plan.k1 == 0))
    rep.add("prop_3_5", CheckStatus::Fail,
            "E' = " + to_string(plan.e_prime) + " with k1 = " + std::to_string(plan.k1));

  std::vector<DivisorClass> basis;
  for (std::int64_t i = 0; i < plan.k1; ++i)
    basis.push_back(sp.find_component(plan.steps[i].component_id)->cls);
  std::int64_t bound =
      checked_add(max_abs_coeff(plan.e_prime), sp.total_fiber_multiplicity());
  auto coeffs = decompose_effective(plan.e_prime, basis, ctx, bound);
  if (!coeffs) {
    rep.add("prop_3_5", CheckStatus::Fail,
            "E' has no effective decomposition over the stage-1 components");
  } else {
    for (std::size_t i = 0; i < coeffs->size(); ++i)
      if ((*coeffs)[i] < 1)
        rep.add("prop_3_5", CheckStatus::Fail,
                "stage-1 component " + plan.steps[i].component_id +
                    " missing from the support of E'");
  }
  return rep;
}

VerificationReport check_prop_3_6(const SurfacePair& sp, const GoodModelPlan& plan) {
  require_plan_match(sp, plan);
  VerificationReport rep;
  std::set<std::string> supp = dv_eprime_support(sp, plan);
  ContractionState at_k2 = replay(sp, plan.steps, static_cast<std::size_t>(plan.k2));

  std::size_t checked = 0;
  for (const FiberConfig& f : sp.fibers) {
    if (fiber_inside_support(f, supp)) continue;  // hypothesis fails for this fiber
    ++checked;
    const LiveFiber* lf = at_k2.find_fiber(f.label);
    for (const LivePoint& p : lf->points) {
      bool has_h = false, has_dv = false;
      for (const auto& [curve, count] : p.branches) {
        if (std::any_of(sp.horizontals.begin(), sp.horizontals.end(),
                        [&](const HorizontalCurve& h) { return h.id == curve; }))
          has_h = true;
        if (const LiveComponent* c = lf->find(curve); c && c->in_dv) has_dv = true;
      }
      if (has_h && has_dv)
        rep.add("prop_3_6", CheckStatus::Fail,
                "fiber " + f.label + " point " + p.id +
                    " joins the horizontal and vertical boundary at the end of stage 2");
    }
  }
  if (rep.checks.empty()) {
    if (checked == 0)
      rep.add("prop_3_6", CheckStatus::Vacuous, "no fiber satisfies the hypothesis");
    else
      rep.add("prop_3_6", CheckStatus::Pass, std::to_string(checked) + " fiber(s) checked");
  }
  return rep;
}

VerificationReport check_lemma_3_7(const GoodModelPlan& plan) {
  VerificationReport rep;
  const SurfacePair& sp = plan.final_state.base;
  ContractionState state = initial_state(sp);
  bool saw_reducible = false;
  for (std::int64_t i = 0; i < plan.m; ++i) {
    for (const LiveFiber& f : state.fibers) {
      if (f.components.size() < 2) continue;
      saw_reducible = true;
      std::vector<std::string> ones = state.live_minus_one_ids(f);
      for (const std::string& id : ones)
        if (adjunction_genus(f.find(id)->cls, sp.ctx) != 0)
          rep.add("lemma_3_7", CheckStatus::Fail,
                  "state " + std::to_string(i) + ": " + id + " has self -1 but nonzero genus");
      if (ones.size() >= 2) continue;
      if (ones.size() == 1 && f.find(ones.front())->mult > 1) continue;
      rep.add("lemma_3_7", CheckStatus::Fail,
              "state " + std::to_string(i) + " fiber " + f.label + ": " +
                  std::to_string(ones.size()) + " (-1)-curve(s), none of higher multiplicity");
    }
    state = contract(state, plan.steps[i].component_id, plan.steps[i].stage,
                     plan.steps[i].rationale)
                .first;
  }
  if (rep.checks.empty())
    rep.add("lemma_3_7", saw_reducible ? CheckStatus::Pass : CheckStatus::Vacuous,
            saw_reducible ? "" : "no reducible fiber in any intermediate state");
  return rep;
}

VerificationReport check_cor_3_8(const GoodModelPlan& plan) {
  VerificationReport rep;
  const SurfacePair& sp = plan.final_state.base;
  ContractionState state = replay(sp, plan.steps, static_cast<std::size_t>(plan.k1));
  bool saw_any = false;
  for (std::int64_t j = plan.k1; j <= plan.m; ++j) {
    DivisorClass dh = state.horizontal_total();
    for (const std::string& id : state.live_minus_one_ids()) {
      saw_any = true;
      std::int64_t product = intersect(dh, state.find_component(id).second->cls, sp.ctx);
      if (product != 1)
        rep.add("cor_3_8", CheckStatus::Fail,
                "state " + std::to_string(j) + ": D^h * " + id + " = " +
                    std::to_string(product));
    }
    if (j < plan.m)
      state = contract(state, plan.steps[j].component_id, plan.steps[j].stage,
                       plan.steps[j].rationale)
                  .first;
  }
  if (rep.checks.empty())
    rep.add("cor_3_8", saw_any ? CheckStatus::Pass : CheckStatus::Vacuous,
            saw_any ? "" : "no vertical (-1)-curve from stage 2 on");
  return rep;
}

VerificationReport check_genus_formula(const SurfacePair& sp, const GoodModelPlan& plan) {
  require_plan_match(sp, plan);
  if (sp.horizontals.size() != 1)
    fail(errc::reducible_horizontal, "genus formula needs an irreducible horizontal boundary");
  VerificationReport rep;
  std::int64_t pa = adjunction_genus(plan.final_state.horizontals[0].cls, sp.ctx);
  std::int64_t expected = checked_add(plan.gamma_value,
                                      checked_sub(checked_mul(2, sp.ctx.genus), 1));
  if (pa == expected)
    rep.add("genus_formula", CheckStatus::Pass, "p_a = " + std::to_string(pa));
  else
    rep.add("genus_formula", CheckStatus::Fail,
            "projected boundary has p_a " + std::to_string(pa) + ", expected " +
                std::to_string(expected));
  return rep;
}

VerificationReport check_cross_term(const SurfacePair& sp, const GoodModelPlan& plan) {
  require_plan_match(sp, plan);
  if (sp.horizontals.size() != 2)
    fail(errc::irreducible_horizontal, "cross term needs a split horizontal boundary");
  VerificationReport rep;
  std::int64_t product = intersect(plan.final_state.horizontals[0].cls,
                                   plan.final_state.horizontals[1].cls, sp.ctx);
  if (product == plan.gamma_value)
    rep.add("cross_term", CheckStatus::Pass, "product = " + std::to_string(product));
  else
    rep.add("cross_term", CheckStatus::Fail,
            "projected sections meet in " + std::to_string(product) + ", expected gamma = " +
                std::to_string(plan.gamma_value));
  return rep;
}

DvFiberCount count_degenerate_dv_fibers(const SurfacePair& sp, const GoodModelPlan& plan) {
  require_plan_match(sp, plan);
  DvFiberCount out;
  std::set<std::string> supp = dv_eprime_support(sp, plan);
  for (const FiberConfig& f : sp.fibers)
    if (fiber_inside_support(f, supp)) out.labels.insert(f.label);
  for (const std::string& label : sp.dv_whole_smooth_fibers) out.labels.insert(label);
  out.count = static_cast<std::int64_t>(out.labels.size());
  out.bound = checked_neg(projected_lambda(plan));
  return out;
}

namespace {

// Follows a point through the remaining contractions: whenever the live
// point sits on the curve contracted next, it is absorbed into that step's
// merge point.
std::string descend_point(const SurfacePair& sp, const GoodModelPlan& plan, std::size_t from,
                          std::string point_id) {
  ContractionState state = replay(sp, plan.steps, from);
  for (std::size_t j = from; j < plan.steps.size(); ++j) {
    const LivePoint* p = state.find_point(point_id);
    if (p && p->has_curve(plan.steps[j].component_id))
      point_id = "m" + std::to_string(j);
    state = contract(state, plan.steps[j].component_id, plan.steps[j].stage,
                     plan.steps[j].rationale)
                .first;
  }
  return point_id;
}

}  // namespace

IData compute_I_data(const SurfacePair& sp, const GoodModelPlan& plan) {
  require_plan_match(sp, plan);
  IData out;
  const HorizontalCurve& h1 = sp.horizontals.front();
  out.d = intersect(h1.cls, fiber_class(sp.ctx), sp.ctx);

  for (const LiveFiber& f : plan.final_state.fibers)
    for (const LivePoint& p : f.points) {
      auto it = p.branches.find(h1.id);
      if (it != p.branches.end() && it->second >= 2) out.i1 += 1;
    }

  DvFiberCount counted = count_degenerate_dv_fibers(sp, plan);
  for (const std::string& label : counted.labels) {
    if (const FiberConfig* f = sp.find_fiber(label)) {
      for (const IncidencePoint& p : f->points)
        if (p.has_branch(h1.id)) out.i2 += 1;
    } else {
      out.i2 = checked_add(out.i2, out.d);  // transversal points on a whole smooth fiber
    }
  }

  out.cross = sp.horizontals.size() == 2 ? plan.gamma_value : 0;
  out.bound = checked_add(checked_add(out.i1, out.i2), out.cross);
  out.i2_cap = checked_neg(checked_mul(out.d, projected_lambda(plan)));
  out.kappa0_count_held = counted.count <= counted.bound;
  return out;
}

VerificationReport check_i_data(const SurfacePair& sp, const GoodModelPlan& plan) {
  VerificationReport rep;
  IData data = compute_I_data(sp, plan);
  const HorizontalCurve& h1 = sp.horizontals.front();

  // Classification of the boundary-meeting points of the first horizontal
  // component at the end of stage 2. Each must land in exactly one case.
  ContractionState at_k2 = replay(sp, plan.steps, static_cast<std::size_t>(plan.k2));
  for (const LiveFiber& f : at_k2.fibers) {
    for (const LivePoint& p : f.points) {
      auto it = p.branches.find(h1.id);
      if (it == p.branches.end()) continue;
      bool meets_dv = false, meets_other_h = false;
      for (const auto& [curve, count] : p.branches) {
        if (const LiveComponent* c = f.find(curve); c && c->in_dv) meets_dv = true;
        if (curve != h1.id &&
            std::any_of(sp.horizontals.begin(), sp.horizontals.end(),
                        [&](const HorizontalCurve& h) { return h.id == curve; }))
          meets_other_h = true;
      }
      bool self_singular = it->second >= 2;
      if (!meets_dv && !meets_other_h && !self_singular) continue;  // not a boundary meeting

      std::string at_m =
          descend_point(sp, plan, static_cast<std::size_t>(plan.k2), p.id);
      const LivePoint* final_p = plan.final_state.find_point(at_m);
      bool case_singular = false;
      if (final_p) {
        auto fit = final_p->branches.find(h1.id);
        case_singular = fit != final_p->branches.end() && fit->second >= 2;
      }
      int matched = (case_singular ? 1 : 0) + (meets_dv ? 1 : 0) + (meets_other_h ? 1 : 0);
      if (matched != 1)
        rep.add("i_data", CheckStatus::Fail,
                "point " + p.id + " over " + f.label + " matches " + std::to_string(matched) +
                    " classification cases");
    }
  }

  if (data.kappa0_count_held && data.i2 > std::max<std::int64_t>(0, data.i2_cap))
    rep.add("i_data", CheckStatus::Fail,
            "i2 = " + std::to_string(data.i2) + " exceeds its ceiling " +
                std::to_string(data.i2_cap));

  if (rep.checks.empty())
    rep.add("i_data", CheckStatus::Pass,
            "i1=" + std::to_string(data.i1) + " i2=" + std::to_string(data.i2) +
                " d=" + std::to_string(data.d) + " cross=" + std::to_string(data.cross) +
                " bound=" + std::to_string(data.bound));
  return rep;
}

std::pair<std::int64_t, std::int64_t> log_restriction_degrees(const SurfacePair& sp,
                                                              const DivisorClass& curve_class,
                                                              std::int64_t g_curve,
                                                              std::int64_t boundary_meets) {
  if (boundary_meets < 0) fail(errc::invalid_parameter, "negative point count");
  std::int64_t conormal = checked_neg(intersect(curve_class, curve_class, sp.ctx));
  std::int64_t log_deg = checked_add(checked_sub(checked_mul(2, g_curve), 2), boundary_meets);
  return {conormal, log_deg};
}

VerificationReport check_kappa0_consistency(const SurfacePair& sp, const GoodModelPlan& plan) {
  VerificationReport rep;
  DvFiberCount counted = count_degenerate_dv_fibers(sp, plan);
  if (counted.count <= counted.bound)
    rep.add("kappa0_consistency", CheckStatus::Pass,
            "count " + std::to_string(counted.count) + " <= bound " +
                std::to_string(counted.bound));
  else
    rep.add("kappa0_consistency", CheckStatus::Flag,
            std::to_string(counted.count) + " boundary fibers exceed the ceiling " +
                std::to_string(counted.bound));

  IData data = compute_I_data(sp, plan);
  if (sp.horizontals.size() == 1) {
    std::int64_t pa = adjunction_genus(plan.final_state.horizontals[0].cls, sp.ctx);
    if (pa <= 1)
      rep.add("kappa0_consistency", CheckStatus::Pass, "p_a = " + std::to_string(pa));
    else
      rep.add("kappa0_consistency", CheckStatus::Flag,
              "projected boundary genus " + std::to_string(pa) + " exceeds 1");
    if (data.bound <= 2)
      rep.add("kappa0_consistency", CheckStatus::Pass,
              "intersection budget " + std::to_string(data.bound));
    else
      rep.add("kappa0_consistency", CheckStatus::Flag,
              "intersection budget " + std::to_string(data.bound) + " exceeds 2");
  } else {
    std::int64_t ceiling = checked_sub(2, checked_mul(2, sp.ctx.genus));
    if (data.bound <= ceiling)
      rep.add("kappa0_consistency", CheckStatus::Pass,
              "intersection budget " + std::to_string(data.bound));
    else
      rep.add("kappa0_consistency", CheckStatus::Flag,
              "intersection budget " + std::to_string(data.bound) + " exceeds " +
                  std::to_string(ceiling));
  }
  return rep;
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "prop_3_5",      "prop_3_6",  "lemma_3_7",          "cor_3_8",
      "genus_formula", "cross_term", "i_data",            "kappa0_consistency"};
  return names;
}

VerificationReport run_checks(const SurfacePair& sp, const GoodModelPlan& plan,
                              const std::vector<std::string>& names) {
  const std::vector<std::string>& all = all_check_names();
  std::vector<std::string> selected = names.empty() ? all : names;
  VerificationReport rep;
  for (const std::string& name : selected) {
    if (std::find(all.begin(), all.end(), name) == all.end())
      fail(errc::unknown_check, "no check named " + name);
    if (name == "prop_3_5") rep.merge(check_prop_3_5(sp, plan));
    if (name == "prop_3_6") rep.merge(check_prop_3_6(sp, plan));
    if (name == "lemma_3_7") rep.merge(check_lemma_3_7(plan));
    if (name == "cor_3_8") rep.merge(check_cor_3_8(plan));
    if (name == "genus_formula") {
      if (sp.horizontals.size() == 1)
        rep.merge(check_genus_formula(sp, plan));
      else
        rep.add("genus_formula", CheckStatus::Vacuous, "horizontal boundary is split");
    }
    if (name == "cross_term") {
      if (sp.horizontals.size() == 2)
        rep.merge(check_cross_term(sp, plan));
      else
        rep.add("cross_term", CheckStatus::Vacuous, "horizontal boundary is irreducible");
    }
    if (name == "i_data") rep.merge(check_i_data(sp, plan));
    if (name == "kappa0_consistency") rep.merge(check_kappa0_consistency(sp, plan));
  }
  return rep;
}

}  // namespace ruledmmp
