#include "ruledmmp/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ruledmmp/checked.hpp"

namespace ruledmmp {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::integer_overflow: return "integer_overflow";
    case errc::non_curve_class: return "non_curve_class";
    case errc::not_minus_one_curve: return "not_minus_one_curve";
    case errc::horizontal_component: return "horizontal_component";
    case errc::unknown_component: return "unknown_component";
    case errc::dead_component: return "dead_component";
    case errc::unknown_fiber: return "unknown_fiber";
    case errc::invalid_parameter: return "invalid_parameter";
    case errc::validation_failed: return "validation_failed";
    case errc::reducible_horizontal: return "reducible_horizontal";
    case errc::irreducible_horizontal: return "irreducible_horizontal";
    case errc::plan_mismatch: return "plan_mismatch";
    case errc::inconsistent_state: return "inconsistent_state";
    case errc::unknown_check: return "unknown_check";
    case errc::parse_error: return "parse_error";
    case errc::io_error: return "io_error";
  }
  return "unknown_error";
}

DivisorClass DivisorClass::zero(const LatticeContext& ctx) {
  return DivisorClass(0, 0, std::vector<std::int64_t>(ctx.num_exceptionals, 0));
}

bool DivisorClass::is_zero() const {
  if (c0_ != 0 || f_ != 0) return false;
  return std::all_of(e_.begin(), e_.end(), [](std::int64_t v) { return v == 0; });
}

namespace {

void require_same_dim(const DivisorClass& a, const DivisorClass& b) {
  if (a.num_e() != b.num_e())
    fail(errc::dimension_mismatch, "divisor classes live in different lattices");
}

void require_in_context(const DivisorClass& a, const LatticeContext& ctx, const char* who) {
  if (!a.fits(ctx)) fail(errc::dimension_mismatch, std::string(who) + " does not belong to the context");
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  require_same_dim(*this, o);
  std::vector<std::int64_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = checked_add(e_[i], o.e_[i]);
  return DivisorClass(checked_add(c0_, o.c0_), checked_add(f_, o.f_), std::move(e));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  require_same_dim(*this, o);
  std::vector<std::int64_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = checked_sub(e_[i], o.e_[i]);
  return DivisorClass(checked_sub(c0_, o.c0_), checked_sub(f_, o.f_), std::move(e));
}

DivisorClass DivisorClass::operator-() const { return scaled(-1); }

DivisorClass DivisorClass::scaled(std::int64_t n) const {
  std::vector<std::int64_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = checked_mul(e_[i], n);
  return DivisorClass(checked_mul(c0_, n), checked_mul(f_, n), std::move(e));
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b, const LatticeContext& ctx) {
  require_in_context(a, ctx, "left class");
  require_in_context(b, ctx, "right class");
  // a*b = a0*b1 + a1*b0 - e*a0*b0 - sum_i ai*bi
  std::int64_t acc = checked_add(checked_mul(a.c0(), b.f()), checked_mul(a.f(), b.c0()));
  acc = checked_sub(acc, checked_mul(ctx.e_invariant, checked_mul(a.c0(), b.c0())));
  for (std::size_t i = 0; i < a.num_e(); ++i)
    acc = checked_sub(acc, checked_mul(a.e(i), b.e(i)));
  return acc;
}

DivisorClass canonical_class(const LatticeContext& ctx) {
  std::int64_t f = checked_sub(checked_mul(2, ctx.genus), checked_add(2, ctx.e_invariant));
  return DivisorClass(-2, f, std::vector<std::int64_t>(ctx.num_exceptionals, 1));
}

DivisorClass fiber_class(const LatticeContext& ctx) {
  return DivisorClass(0, 1, std::vector<std::int64_t>(ctx.num_exceptionals, 0));
}

DivisorClass project_contract(const DivisorClass& x, const DivisorClass& c,
                              const LatticeContext& ctx) {
  if (intersect(c, c, ctx) != -1)
    fail(errc::not_minus_one_curve, "projection axis must have self-intersection -1");
  return x + c.scaled(intersect(x, c, ctx));
}

std::int64_t adjunction_genus(const DivisorClass& x, const LatticeContext& ctx) {
  std::int64_t t = intersect(x, x + canonical_class(ctx), ctx);
  if (t % 2 != 0) fail(errc::non_curve_class, "x*(x+K) is odd; not the class of a curve");
  return t / 2 + 1;
}

std::int64_t max_abs_coeff(const DivisorClass& x) {
  std::int64_t m = std::max(std::llabs(x.c0()), std::llabs(x.f()));
  for (std::size_t i = 0; i < x.num_e(); ++i) m = std::max<std::int64_t>(m, std::llabs(x.e(i)));
  return m;
}

namespace {

// Coordinate view: index 0 = C0, 1 = F, 2+i = Ei.
std::int64_t coord(const DivisorClass& x, std::size_t j) {
  if (j == 0) return x.c0();
  if (j == 1) return x.f();
  return x.e(j - 2);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Exact bounded search for x = sum n_i * basis_i with L_i <= n_i <= U_i,
// run as interval propagation over the per-coordinate equalities with a
// branch on the loosest variable when propagation alone does not finish.
struct DecompositionSearch {
  std::size_t dim;
  std::vector<std::int64_t> target;                 // dense coordinates of x
  std::vector<std::vector<std::int64_t>> columns;   // columns[i][j] = coeff of basis_i at coord j

  // Narrows [lo, hi] to the n with bound_lo <= c*n <= bound_hi.
  static bool narrow(std::int64_t c, std::int64_t bound_lo, std::int64_t bound_hi,
                     std::int64_t& lo, std::int64_t& hi) {
    std::int64_t nlo = c > 0 ? ceil_div(bound_lo, c) : ceil_div(bound_hi, c);
    std::int64_t nhi = c > 0 ? floor_div(bound_hi, c) : floor_div(bound_lo, c);
    if (nlo > lo) lo = nlo;
    if (nhi < hi) hi = nhi;
    return lo <= hi;
  }

  // One fixpoint round: returns false on infeasibility.
  bool propagate(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j < dim; ++j) {
        std::int64_t sum_min = 0, sum_max = 0;
        for (std::size_t i = 0; i < columns.size(); ++i) {
          std::int64_t c = columns[i][j];
          if (c == 0) continue;
          sum_min = checked_add(sum_min, c > 0 ? checked_mul(c, lo[i]) : checked_mul(c, hi[i]));
          sum_max = checked_add(sum_max, c > 0 ? checked_mul(c, hi[i]) : checked_mul(c, lo[i]));
        }
        if (target[j] < sum_min || target[j] > sum_max) return false;
        for (std::size_t i = 0; i < columns.size(); ++i) {
          std::int64_t c = columns[i][j];
          if (c == 0) continue;
          std::int64_t self_min = c > 0 ? checked_mul(c, lo[i]) : checked_mul(c, hi[i]);
          std::int64_t self_max = c > 0 ? checked_mul(c, hi[i]) : checked_mul(c, lo[i]);
          std::int64_t rest_min = checked_sub(sum_min, self_min);
          std::int64_t rest_max = checked_sub(sum_max, self_max);
          std::int64_t before_lo = lo[i], before_hi = hi[i];
          if (!narrow(c, checked_sub(target[j], rest_max), checked_sub(target[j], rest_min),
                      lo[i], hi[i]))
            return false;
          if (lo[i] != before_lo || hi[i] != before_hi) changed = true;
        }
      }
    }
    return true;
  }

  bool solved(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] != hi[i]) return false;
    for (std::size_t j = 0; j < dim; ++j) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < columns.size(); ++i)
        sum = checked_add(sum, checked_mul(columns[i][j], lo[i]));
      if (sum != target[j]) return false;
    }
    return true;
  }

  bool search(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi,
              std::vector<std::int64_t>& out) const {
    if (!propagate(lo, hi)) return false;
    std::size_t pick = columns.size();
    std::int64_t width = -1;
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (hi[i] > lo[i] && (width < 0 || hi[i] - lo[i] < width)) {
        width = hi[i] - lo[i];
        pick = i;
      }
    if (pick == columns.size()) {
      if (!solved(lo, hi)) return false;
      out = lo;
      return true;
    }
    for (std::int64_t v = lo[pick]; v <= hi[pick]; ++v) {
      std::vector<std::int64_t> nlo = lo, nhi = hi;
      nlo[pick] = nhi[pick] = v;
      if (search(std::move(nlo), std::move(nhi), out)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::int64_t>> decompose_effective(
    const DivisorClass& x, const std::vector<DivisorClass>& basis, const LatticeContext& ctx,
    std::int64_t bound) {
  require_in_context(x, ctx, "target class");
  for (const DivisorClass& b : basis) require_in_context(b, ctx, "basis class");
  if (bound < 0) fail(errc::invalid_parameter, "negative search bound");

  DecompositionSearch s;
  s.dim = static_cast<std::size_t>(ctx.dim());
  s.target.resize(s.dim);
  for (std::size_t j = 0; j < s.dim; ++j) s.target[j] = coord(x, j);
  for (const DivisorClass& b : basis) {
    std::vector<std::int64_t> column(s.dim);
    for (std::size_t j = 0; j < s.dim; ++j) column[j] = coord(b, j);
    s.columns.push_back(std::move(column));
  }

  std::vector<std::int64_t> out;
  if (s.search(std::vector<std::int64_t>(basis.size(), 0),
               std::vector<std::int64_t>(basis.size(), bound), out))
    return out;
  return std::nullopt;
}

std::optional<std::vector<std::int64_t>> decompose_effective(
    const DivisorClass& x, const std::vector<DivisorClass>& basis, const LatticeContext& ctx) {
  std::int64_t bound = max_abs_coeff(x);
  for (const DivisorClass& b : basis) bound = checked_add(bound, max_abs_coeff(b));
  return decompose_effective(x, basis, ctx, bound);
}

std::string to_string(const DivisorClass& x) {
  std::string out;
  auto term = [&out](std::int64_t v, const std::string& name) {
    if (v == 0) return;
    if (out.empty())
      out += (v < 0 ? "-" : "");
    else
      out += (v < 0 ? " - " : " + ");
    std::int64_t a = std::llabs(v);
    if (a != 1) out += std::to_string(a) + "*";
    out += name;
  };
  term(x.c0(), "C0");
  term(x.f(), "F");
  for (std::size_t i = 0; i < x.num_e(); ++i) term(x.e(i), "E" + std::to_string(i + 1));
  if (out.empty()) out = "0";
  return out;
}

}  // namespace ruledmmp
