#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ruledmmp/errors.hpp"

namespace ruledmmp {

/// Ambient intersection lattice of an iterated blow-up of a ruled surface.
///
/// The basis is (C0, F, E1, ..., Ek) with the pairing
///   C0*C0 = -e,  C0*F = 1,  F*F = 0,  Ei*Ej = -delta_ij,  Ei*C0 = Ei*F = 0,
/// so the form is symmetric, integral, of signature (1, k+1).
struct LatticeContext {
  std::int64_t genus = 0;             // genus of the base curve, >= 0
  std::int64_t e_invariant = 0;       // e = -C0^2 of the starting ruled model
  std::int64_t num_exceptionals = 0;  // k, >= 0

  std::int64_t dim() const { return 2 + num_exceptionals; }

  friend bool operator==(const LatticeContext&, const LatticeContext&) = default;
};

/// Integer divisor class in a fixed ambient basis (C0, F, E1, ..., Ek).
/// Classes of every intermediate contraction level live in this one lattice;
/// "a class on the i-th model" is an ambient vector orthogonal to everything
/// contracted so far, and pull-back is the identity embedding.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(std::int64_t c0, std::int64_t f, std::vector<std::int64_t> e = {})
      : c0_(c0), f_(f), e_(std::move(e)) {}

  static DivisorClass zero(const LatticeContext& ctx);

  std::int64_t c0() const { return c0_; }
  std::int64_t f() const { return f_; }
  const std::vector<std::int64_t>& e() const { return e_; }
  std::int64_t e(std::size_t i) const { return e_.at(i); }
  std::size_t num_e() const { return e_.size(); }

  bool is_zero() const;
  bool fits(const LatticeContext& ctx) const {
    return static_cast<std::int64_t>(e_.size()) == ctx.num_exceptionals;
  }

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  DivisorClass scaled(std::int64_t n) const;
  DivisorClass& operator+=(const DivisorClass& o) { return *this = *this + o; }
  DivisorClass& operator-=(const DivisorClass& o) { return *this = *this - o; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::int64_t c0_ = 0;
  std::int64_t f_ = 0;
  std::vector<std::int64_t> e_;
};

/// Value of the intersection form. Rejects classes of the wrong dimension.
std::int64_t intersect(const DivisorClass& a, const DivisorClass& b, const LatticeContext& ctx);

/// K = -2*C0 + (2g-2-e)*F + sum_i Ei.
DivisorClass canonical_class(const LatticeContext& ctx);

/// Numerical class of a fiber: (0, 1, 0, ..., 0).
DivisorClass fiber_class(const LatticeContext& ctx);

/// Total-transform image of x under contracting the (-1)-class c:
/// x |-> x + (x*c)*c, the orthogonal projection onto the perp of c.
/// Rejects c unless c*c = -1.
DivisorClass project_contract(const DivisorClass& x, const DivisorClass& c,
                              const LatticeContext& ctx);

/// Arithmetic genus x*(x+K)/2 + 1. Rejects classes with odd x*(x+K).
std::int64_t adjunction_genus(const DivisorClass& x, const LatticeContext& ctx);

/// Searches for non-negative integers n_i with x = sum n_i * basis_i.
/// The search is exact and bounded: no coefficient above `bound` is
/// considered. Returns nullopt when no such decomposition exists within
/// the bound. Callers that know the instance pass
/// max |coeff of x| + total fiber multiplicity; the parameterless overload
/// derives a default bound from x and the basis alone.
std::optional<std::vector<std::int64_t>> decompose_effective(
    const DivisorClass& x, const std::vector<DivisorClass>& basis, const LatticeContext& ctx,
    std::int64_t bound);
std::optional<std::vector<std::int64_t>> decompose_effective(
    const DivisorClass& x, const std::vector<DivisorClass>& basis, const LatticeContext& ctx);

std::int64_t max_abs_coeff(const DivisorClass& x);

/// Renders "2*C0 + 1*F - 1*E1" style text, for witnesses and logs.
std::string to_string(const DivisorClass& x);

}  // namespace ruledmmp
