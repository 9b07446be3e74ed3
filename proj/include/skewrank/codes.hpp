#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "skewrank/quot.hpp"

namespace skewrank::codes {

using gf::Fel;
using gf::TowerPtr;
using quot::QuotElement;
using quot::RingPtr;

enum class Family { lrs, atlrs, tz, custom };

struct Provenance {
  Family family = Family::custom;
  int k = 0;
  Fel eta = 0;
  int tau_h = 0;
  Fel gamma = 0;
};

/// An F_p-subspace of either ambient (quotient ring or matrix-tuple space),
/// stored as a canonical reduced-echelon basis of F_p coordinate rows.
class Code {
 public:
  static Code from_quot_basis(RingPtr ring, fp::Matrix rows, Provenance prov = {});
  static Code from_mat_basis(srmat::Ambient amb, fp::Matrix rows, Provenance prov = {});

  bool is_quot() const { return std::holds_alternative<RingPtr>(amb_); }
  const RingPtr& ring() const { return std::get<RingPtr>(amb_); }
  const srmat::Ambient& mat_ambient() const { return std::get<srmat::Ambient>(amb_); }
  const TowerPtr& tower() const;
  int p() const { return tower()->p(); }

  const fp::Matrix& basis() const { return rref_.mat; }
  const fp::Rref& basis_rref() const { return rref_; }
  std::size_t dim_fp() const { return rref_.mat.rows(); }
  std::size_t ambient_dim() const;
  const Provenance& provenance() const { return prov_; }

  QuotElement quot_element(std::size_t row) const;
  srmat::MatTuple mat_element(std::size_t row) const;
  std::vector<std::uint8_t> identity_coords() const;
  bool contains(std::span<const std::uint8_t> coords) const;
  bool contains_identity() const;
  bool same_subspace(const Code& o) const { return rref_.mat == o.rref_.mat; }

 private:
  std::variant<RingPtr, srmat::Ambient> amb_;
  fp::Rref rref_;
  Provenance prov_;
};

struct ConstructionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Codewords f_0 + ... + f_{k-1} x^{k-1} with all f_i free over F_{q^m}.
Code construct_lrs(RingPtr ring, int k);

/// Codewords f_0 + ... + f_{k-1} x^{k-1} + eta tau(f_0) x^k. The twist
/// validity condition on eta is enforced; tau is the automorphism
/// y -> y^(p^tau_h).
Code construct_atlrs(RingPtr ring, int k, Fel eta, int tau_h);

/// Codewords f_0 + f_1 x + ... + gamma f_k x^k with f_0, f_k restricted to
/// the half-degree subfield; requires m even, q odd, Lambda inside the
/// squares and the norm of gamma a non-square.
Code construct_tz(RingPtr ring, int k, Fel gamma);

/// Multiplicative closure of the lambda set inside F_q^*.
std::vector<Fel> lambda_subgroup(const gf::FieldTower& tw, std::span<const Fel> lambdas);
bool is_square_in_fq(const gf::FieldTower& tw, Fel x);

struct TwistCheck {
  bool ok = false;
  Fel lhs = 0;  // (-1)^{ukm} N(eta), the value tested against the subgroup
  std::vector<Fel> subgroup;
  std::string detail;
};
TwistCheck atlrs_twist_check(const quot::QuotientRing& ring, int k, Fel eta, int tau_h);

/// Deterministic parameter search: least valid eta / gamma in
/// coordinate-lexicographic order. Returns 0 when none exists.
Fel find_valid_eta(const quot::QuotientRing& ring, int k, int tau_h);
Fel find_valid_gamma(const quot::QuotientRing& ring);

struct CodeReport {
  int p = 2;
  std::size_t dim_fp = 0;  // |C| = p^dim_fp
  int min_distance = 0;
  std::vector<std::uint64_t> weights;  // index = weight
  bool msrd = false;
  bool nondegenerate = false;
  bool exact = true;
  std::vector<std::uint8_t> min_weight_witness;  // coordinates of a codeword of minimum weight
};

/// Exact weight histogram by full codeword enumeration; throws CapExceeded
/// when |C| exceeds the cap unless a sample size is given (flagged non-exact).
CodeReport weight_distribution(const Code& c, std::uint64_t cap = 1ull << 26, int workers = 1,
                               std::uint64_t sample = 0, std::uint64_t seed = 12345);

/// Orthogonal complement (dual pairing in the quotient, trace form in the
/// matrix ambient).
Code dual_of(const Code& c);

Code scale_right(const Code& c, const QuotElement& u, bool require_unit = true);
Code scale_left(const Code& c, const QuotElement& u, bool require_unit = true);
/// Blockwise right multiplication by a tuple of invertible matrices.
Code scale_right_blocks(const Code& c, const srmat::MatTuple& u);

/// First codeword of full weight in coordinate-lexicographic order.
std::optional<std::vector<std::uint8_t>> find_full_weight_codeword(const Code& c, std::uint64_t cap);

/// Right-scale by the inverse of a full-weight codeword so that the result
/// contains the identity; equivalent to the input code.
Code normalize_to_identity(const Code& c, std::uint64_t cap = 1ull << 26);

/// Image in the matrix-tuple ambient under the blockwise evaluation map,
/// using the canonical F_q-basis.
Code to_matrix_code(const Code& c);

Code apply_isometry_code(const Code& c, const srmat::Isometry& iso);
Code v_adjoint_code(const Code& c, std::span<const int> v);

/// Largest j such that the code is closed under coefficientwise scaling by
/// F_{p^j} (subspace linearity, which is not an equivalence invariant).
int subspace_linearity_exp(const Code& c);

/// Enumerates all codewords in coordinate-lexicographic order, invoking
/// fn(linear_index, weight). Used by reports and searches.
void for_each_codeword_weight(const Code& c, std::uint64_t cap, int workers,
                              const std::function<void(std::uint64_t, int)>& fn);

}  // namespace skewrank::codes
