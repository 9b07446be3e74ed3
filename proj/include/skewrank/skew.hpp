#pragma once

#include <optional>
#include <span>
#include <vector>

#include "skewrank/gf.hpp"

namespace skewrank::skew {

using gf::Fel;
using gf::TowerPtr;

/// Element of F_{q^m}[x;theta] with the twist x a = theta(a) x. Coefficients
/// are indexed by degree with trailing zeros trimmed; the zero polynomial has
/// an empty coefficient vector and no degree.
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(TowerPtr tw) : tw_(std::move(tw)) {}
  SkewPoly(TowerPtr tw, std::vector<Fel> coeffs);

  static SkewPoly zero(TowerPtr tw) { return SkewPoly(std::move(tw)); }
  static SkewPoly constant(TowerPtr tw, Fel c);
  static SkewPoly one(TowerPtr tw) { return constant(std::move(tw), 1); }
  static SkewPoly monomial(TowerPtr tw, int degree, Fel c = 1);

  const TowerPtr& tower() const { return tw_; }
  const std::vector<Fel>& coeffs() const { return c_; }
  /// Degree; empty for the zero polynomial (minus infinity marker).
  std::optional<int> degree() const {
    return c_.empty() ? std::nullopt : std::make_optional(static_cast<int>(c_.size()) - 1);
  }
  bool is_zero() const { return c_.empty(); }
  Fel coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Fel leading() const { return c_.empty() ? 0 : c_.back(); }

  bool operator==(const SkewPoly& o) const { return c_ == o.c_; }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly scale(Fel c) const;  // left multiplication by a constant
  SkewPoly monic() const;

 private:
  TowerPtr tw_;
  std::vector<Fel> c_;
  void trim();
  friend SkewPoly skew_mul(const SkewPoly&, const SkewPoly&);
};

/// Product under the twist rule; degree is additive on nonzero inputs.
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

struct DivResult {
  SkewPoly quotient, remainder;
};

/// Right division: f = quotient * g + remainder with deg(remainder) < deg(g).
DivResult right_divide(const SkewPoly& f, const SkewPoly& g);

bool right_divides(const SkewPoly& g, const SkewPoly& f);

/// Monic generator of Rf + Rg. gcrd(f, 0) is the monic multiple of f.
SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g);

/// Monic generator of Rf intersect Rg; both inputs must be nonzero.
SkewPoly lclm(const SkewPoly& f, const SkewPoly& g);

struct XgcrdResult {
  SkewPoly d, a, b;  // d = a*f + b*g, d monic
};

XgcrdResult extended_gcrd(const SkewPoly& f, const SkewPoly& g);

/// i-th truncated norm of alpha: the product theta^0(alpha)...theta^(i-1)(alpha).
Fel truncated_norm(const gf::FieldTower& tw, Fel alpha, int i);

/// Coefficient i is multiplied by the i-th truncated norm of alpha.
SkewPoly alpha_twist(const SkewPoly& f, Fel alpha);

/// The central modulus: product over (x^m - lambda_i). Lambdas must be
/// pairwise distinct, nonzero and lie in F_q.
SkewPoly build_h_lambda(TowerPtr tw, std::span<const Fel> lambdas);

}  // namespace skewrank::skew
