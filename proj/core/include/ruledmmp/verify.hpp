#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ruledmmp/goodmodel.hpp"
#include "ruledmmp/report.hpp"

namespace ruledmmp {

/// Exact class identity of the completed run: K + D equals
/// (gamma + 2g - 2) * F + D^v + E', E' vanishes exactly when stage 1 is
/// empty, and E' decomposes non-negatively over the start classes of the
/// stage-1 components with every one of them appearing.
VerificationReport check_prop_3_5(const SurfacePair& sp, const GoodModelPlan& plan);

/// For every degenerate fiber whose start components are not all inside
/// supp(D^v + E'), the horizontal and vertical boundaries are disjoint
/// over it at the end of stage 2.
VerificationReport check_prop_3_6(const SurfacePair& sp, const GoodModelPlan& plan);

/// At every intermediate state, every reducible fiber either contains two
/// or more (-1)-curves or exactly one of multiplicity greater than one.
VerificationReport check_lemma_3_7(const GoodModelPlan& plan);

/// From the end of stage 1 on, every live vertical (-1)-curve meets the
/// horizontal boundary with total intersection number exactly one.
VerificationReport check_cor_3_8(const GoodModelPlan& plan);

/// For an irreducible horizontal boundary, the adjunction genus of the
/// fully projected class equals gamma + 2g - 1. Rejects split boundaries.
VerificationReport check_genus_formula(const SurfacePair& sp, const GoodModelPlan& plan);

/// For a split horizontal boundary, the product of the two fully projected
/// section classes equals gamma. Rejects irreducible boundaries.
VerificationReport check_cross_term(const SurfacePair& sp, const GoodModelPlan& plan);

/// Fibers wholly contained in supp(D^v + E') versus the ceiling
/// -(gamma + 2g - 2) that holds for log Kodaira dimension zero.
struct DvFiberCount {
  std::int64_t count = 0;
  std::int64_t bound = 0;
  std::set<std::string> labels;  // the counted base points
};
DvFiberCount count_degenerate_dv_fibers(const SurfacePair& sp, const GoodModelPlan& plan);

/// Intersection-point budget of the first horizontal component:
///   i1    points of the final state where its image is singular,
///   i2    its branch points over fibers counted by count_degenerate_dv_fibers,
///   cross gamma when the horizontal boundary splits, else 0,
///   bound i1 + i2 + cross,
///   i2_cap the ceiling -d*(gamma + 2g - 2) valid under kappa = 0.
struct IData {
  std::int64_t i1 = 0;
  std::int64_t i2 = 0;
  std::int64_t d = 0;
  std::int64_t cross = 0;
  std::int64_t bound = 0;
  std::int64_t i2_cap = 0;
  bool kappa0_count_held = false;
};
IData compute_I_data(const SurfacePair& sp, const GoodModelPlan& plan);

/// compute_I_data plus its internal assertions as report entries: the
/// boundary-meeting points of the first horizontal component at the end of
/// stage 2 classify into exactly one of (singular image at the end) /
/// (meets live D^v) / (meets the other horizontal), and i2 respects its
/// ceiling whenever the fiber count did.
VerificationReport check_i_data(const SurfacePair& sp, const GoodModelPlan& plan);

/// Degrees in the restriction sequence of log differentials to a curve:
/// (conormal degree -(c*c), log-differential degree 2*g_curve - 2 + meets).
std::pair<std::int64_t, std::int64_t> log_restriction_degrees(const SurfacePair& sp,
                                                              const DivisorClass& curve_class,
                                                              std::int64_t g_curve,
                                                              std::int64_t boundary_meets);

/// The inequalities that hold when the open surface has log Kodaira
/// dimension zero. The model cannot see the Kodaira dimension, so
/// violations flag the instance instead of failing it.
VerificationReport check_kappa0_consistency(const SurfacePair& sp, const GoodModelPlan& plan);

/// Names accepted by run_checks, in canonical order.
const std::vector<std::string>& all_check_names();

/// Runs the named checks (all applicable ones when names is empty) and
/// merges the reports. Unknown names are rejected. Checks whose hypothesis
/// the instance does not satisfy report a single vacuous entry.
VerificationReport run_checks(const SurfacePair& sp, const GoodModelPlan& plan,
                              const std::vector<std::string>& names);

}  // namespace ruledmmp
