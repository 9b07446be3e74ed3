#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewrank/fp_linalg.hpp"

namespace skewrank::gf {

/// A field element, encoded as the base-p packing of its coordinate vector
/// over F_p relative to the power basis of the top modulus. 0 is the zero
/// element, 1 is the multiplicative identity.
using Fel = std::uint32_t;

/// Polynomial over F_p, coefficients from the constant term upward.
using Poly = std::vector<std::uint8_t>;

int poly_deg(const Poly& f);
Poly poly_trim(Poly f);
Poly poly_mul(const Poly& a, const Poly& b, int p);
Poly poly_rem(Poly a, const Poly& b, int p);
bool poly_is_irreducible(const Poly& f, int p);

/// Lexicographically least monic irreducible polynomial of the given degree
/// over F_p, coefficients compared from the constant term upward.
Poly canonical_irreducible(int p, int degree);

bool is_prime(std::uint64_t n);

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Coordinates of elements of the subfield F_{p^s} relative to its canonical
/// F_p-basis inside the tower.
class SubfieldCoords {
 public:
  SubfieldCoords() = default;
  SubfieldCoords(const FieldTower* tw, int s);
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Fel>& basis() const { return basis_; }
  std::vector<std::uint8_t> to_coords(Fel a) const;  // a must lie in the subfield
  Fel from_coords(std::span<const std::uint8_t> c) const;

 private:
  const FieldTower* tw_ = nullptr;
  std::vector<Fel> basis_;
  std::vector<std::size_t> pivot_rows_;
  fp::Matrix solve_;  // s x s inverse of the pivot-row submatrix
};

/// An ordered F_q-basis of F_{q^m}, with exact coordinate extraction. The
/// extracted coordinates are elements of F_q (as tower elements).
class FqBasis {
 public:
  FqBasis() = default;
  FqBasis(TowerPtr tw, std::vector<Fel> elems);  // throws on dependence
  const std::vector<Fel>& elements() const { return elems_; }
  const FieldTower& tower() const { return *tw_; }
  std::vector<Fel> to_fq_coords(Fel v) const;  // length m, entries in F_q
  Fel from_fq_coords(std::span<const Fel> c) const;

 private:
  TowerPtr tw_;
  std::vector<Fel> elems_;
  fp::Matrix inv_;  // me x me over F_p
};

/// The tower F_p in F_q = F_{p^e} in F_{q^m}, with one flat arithmetic kernel
/// on F_{q^m}. Subfields are cut out by Frobenius fixedness, not by nested
/// representations. Immutable after construction and safe to share across
/// threads.
class FieldTower {
 public:
  /// Exhaustive lookup tables bound the supported field size.
  static constexpr std::uint64_t kSizeCap = 1u << 20;

  static TowerPtr build(int p, int e, int m, int theta_exponent,
                        std::optional<Poly> modulus_q = std::nullopt,
                        std::optional<Poly> modulus_qm = std::nullopt);

  int p() const { return p_; }
  int e() const { return e_; }
  int m() const { return m_; }
  int me() const { return me_; }
  std::uint64_t q() const { return q_; }
  std::uint32_t size() const { return n_; }
  int theta_exponent() const { return j_; }
  const Poly& modulus_q() const { return mod_q_; }
  const Poly& modulus_qm() const { return mod_qm_; }

  Fel zero() const { return 0; }
  Fel one() const { return 1; }

  Fel add(Fel a, Fel b) const {
    if (p_ == 2) return a ^ b;
    if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * n_ + b];
    return add_slow(a, b);
  }
  Fel neg(Fel a) const { return neg_tab_[a]; }
  Fel sub(Fel a, Fel b) const { return add(a, neg_tab_[b]); }
  Fel mul(Fel a, Fel b) const {
    if (!a || !b) return 0;
    return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
  }
  Fel inv(Fel a) const;  // throws on zero
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, std::uint64_t k) const;

  std::vector<std::uint8_t> coords(Fel a) const;
  Fel from_coords(std::span<const std::uint8_t> c) const;
  /// Lexicographic order on coordinate vectors, constant coordinate first.
  bool lex_less(Fel a, Fel b) const;

  /// p-power Frobenius iterated h times: a -> a^(p^h).
  Fel frob(Fel a, int h = 1) const;
  /// theta^k where theta(a) = a^(q^j) generates Gal(F_{q^m}/F_q).
  Fel theta(Fel a, int k = 1) const {
    if (!a) return 0;
    k %= m_;
    if (k < 0) k += m_;
    if (!theta_tab_.empty()) return theta_tab_[k][a];
    return exp_[static_cast<std::size_t>(log_[a]) * theta_mult_[k] % (n_ - 1)];
  }
  /// theta^k as a p-power exponent in [0, me).
  int theta_as_p_exponent(int k) const;

  bool in_subfield(Fel a, int s) const { return frob(a, s) == a; }

  /// Fixed field of tau : a -> a^(p^h) is F_{p^gcd(h, me)}.
  int fixed_field_exponent(int h) const;

  std::uint64_t subfield_size(int s) const;
  /// Relative norm and trace down to F_{p^s}; s must divide me.
  Fel norm_to(Fel a, int s) const;
  Fel trace_to(Fel a, int s) const;

  /// Canonical F_p-basis of F_{p^s} (RREF of the Frobenius fixed space).
  std::vector<Fel> subfield_basis(int s) const;
  std::vector<Fel> subfield_elements(int s) const;

  const std::vector<Fel>& fq_basis() const { return fq_basis_; }
  const SubfieldCoords& fq_coords() const { return fq_coords_; }
  /// Canonical F_q-basis of F_{q^m}: greedily chosen in index order.
  const std::vector<Fel>& canonical_fq_m_basis() const { return fqm_basis_; }

  bool compatible(const FieldTower& o) const;

 private:
  FieldTower() = default;
  Fel add_slow(Fel a, Fel b) const;
  Fel mul_poly(Fel a, Fel b) const;  // table-free, used during construction

  int p_ = 2, e_ = 1, m_ = 2, me_ = 2, j_ = 1;
  std::uint64_t q_ = 2;
  std::uint32_t n_ = 4;
  Poly mod_q_, mod_qm_;
  std::vector<Fel> exp_, log_, neg_tab_, add_tab_;
  std::vector<Fel> frob_tab_;                  // a -> a^p
  std::vector<std::vector<Fel>> theta_tab_;    // theta^k, k in [0, m)
  std::vector<std::uint64_t> theta_mult_;      // q^(jk) mod (n-1)
  std::vector<Fel> fq_basis_;
  std::vector<Fel> fqm_basis_;
  SubfieldCoords fq_coords_;
};

}  // namespace skewrank::gf
