#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "skewrank/skew.hpp"
#include "skewrank/srmat.hpp"

namespace skewrank::quot {

using gf::Fel;
using gf::TowerPtr;

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// Canonical representative of a class in R/RH: the unique remainder of
/// degree < tm under right division by H.
struct QuotElement {
  skew::SkewPoly rep;
  const QuotientRing* ring = nullptr;

  bool operator==(const QuotElement& o) const { return rep == o.rep; }
  bool is_zero() const { return rep.is_zero(); }
};

struct NonUnitError : std::invalid_argument {
  NonUnitError(std::string msg, skew::SkewPoly witness)
      : std::invalid_argument(std::move(msg)), gcrd_witness(std::move(witness)) {}
  skew::SkewPoly gcrd_witness;
};

/// The quotient R/RH_Lambda where H_Lambda is the product of the central
/// factors x^m - lambda_i. Elements carry the sum-rank weight
/// wt(a) = tm - deg gcrd(a, H). Immutable after construction.
class QuotientRing {
 public:
  /// When alphas are not supplied, alpha_i is the least element of F_{q^m}*
  /// in coordinate-lexicographic order whose norm down to F_q is lambda_i.
  static RingPtr create(TowerPtr tw, std::vector<Fel> lambdas,
                        std::vector<Fel> alphas = {});

  const TowerPtr& tower() const { return tw_; }
  const std::vector<Fel>& lambdas() const { return lambdas_; }
  const std::vector<Fel>& alphas() const { return alphas_; }
  const skew::SkewPoly& modulus() const { return h_; }
  int t() const { return t_; }
  int m() const { return tw_->m(); }
  int tm() const { return t_ * tw_->m(); }
  std::size_t dim_fp() const { return static_cast<std::size_t>(tm()) * tw_->me(); }

  QuotElement reduce(const skew::SkewPoly& f) const;
  QuotElement zero() const { return {skew::SkewPoly::zero(tw_), this}; }
  QuotElement one() const { return {skew::SkewPoly::one(tw_), this}; }
  QuotElement from_constant(Fel c) const { return {skew::SkewPoly::constant(tw_, c), this}; }
  QuotElement monomial(int degree, Fel c = 1) const {
    return reduce(skew::SkewPoly::monomial(tw_, degree, c));
  }

  QuotElement add(const QuotElement& a, const QuotElement& b) const;
  QuotElement sub(const QuotElement& a, const QuotElement& b) const;
  QuotElement mul(const QuotElement& a, const QuotElement& b) const;

  int weight(const QuotElement& a) const;
  /// Enumeration kernel: weight from a dense coefficient vector of length tm.
  int weight_of_coeffs(std::span<const Fel> coeffs) const;

  bool is_unit(const QuotElement& a) const { return weight(a) == tm(); }
  /// Two-sided inverse of a unit; throws NonUnitError with the gcrd witness.
  QuotElement invert(const QuotElement& a) const;

  /// Image of a as a tuple of t matrices of the blockwise linearized maps.
  srmat::MatTuple evaluate_matrices(const QuotElement& a, const gf::FqBasis& basis) const;
  srmat::Ambient matrix_ambient() const;

  /// The F_p-bilinear pairing Tr_{q^m/p}(sum f_i g_i), valued in F_p.
  std::uint8_t dual_pair(const QuotElement& a, const QuotElement& b) const;
  /// Gram matrix of the pairing over the standard F_p-basis of the quotient.
  fp::Matrix gram() const;

  std::vector<std::uint8_t> to_coords(const QuotElement& a) const;
  QuotElement from_coords(std::span<const std::uint8_t> c) const;
  std::vector<Fel> dense_coeffs(const QuotElement& a) const;
  QuotElement from_dense_coeffs(std::span<const Fel> c) const;

  bool compatible(const QuotientRing& o) const;

 private:
  QuotientRing() = default;
  TowerPtr tw_;
  std::vector<Fel> lambdas_, alphas_;
  skew::SkewPoly h_;
  std::vector<Fel> h_dense_;  // length tm + 1
  int t_ = 0;
};

}  // namespace skewrank::quot
