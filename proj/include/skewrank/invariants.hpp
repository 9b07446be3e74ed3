#pragma once

#include <functional>
#include <string>

#include "skewrank/codes.hpp"

namespace skewrank::inv {

using codes::Code;
using gf::Fel;

/// A multiplication-closed F_p-subspace of an ambient algebra. Closure is
/// asserted at construction by computing the structure constants; products
/// of basis elements must reduce to zero against the basis.
class Subring {
 public:
  using MulFn = std::function<std::vector<std::uint8_t>(std::span<const std::uint8_t>,
                                                        std::span<const std::uint8_t>)>;

  Subring(int p, std::string ambient_tag, fp::Matrix basis_rows, MulFn ambient_mul,
          std::vector<std::uint8_t> ambient_identity);

  int p() const { return p_; }
  std::size_t dim() const { return basis_.mat.rows(); }  // |S| = p^dim
  const std::string& ambient_tag() const { return tag_; }
  const fp::Matrix& basis() const { return basis_.mat; }
  const fp::Rref& basis_rref() const { return basis_; }
  bool contains_ambient_identity() const { return contains_identity_; }

  /// Product of two elements given by coefficient vectors in the basis.
  std::vector<std::uint8_t> mul_coeffs(std::span<const std::uint8_t> u,
                                       std::span<const std::uint8_t> v) const;
  /// Matrix of left multiplication by basis element i, in basis coordinates.
  const std::vector<fp::Matrix>& left_mult() const { return lmul_; }

 private:
  int p_;
  std::string tag_;
  fp::Rref basis_;
  std::vector<std::vector<std::vector<std::uint8_t>>> tensor_;
  std::vector<fp::Matrix> lmul_;
  bool contains_identity_ = false;
};

/// Computable isomorphism-class data of a finite ring. Two rings with equal
/// complete fingerprints are indistinguishable by these invariants; for
/// commutative rings that decompose into fields the residue multiset is a
/// complete invariant.
struct RingFingerprint {
  std::size_t size_exp = 0;  // |S| = p^size_exp
  bool commutative = true;
  bool is_field = false;
  bool field_checked = true;
  std::vector<std::size_t> residue_exps;  // sorted; meaningful when complete
  bool decomposition_complete = false;
  std::size_t max_subfield_exp = 0;
  bool max_subfield_exact = true;

  bool operator==(const RingFingerprint&) const = default;
};

constexpr std::uint64_t kDefaultRingCap = 1ull << 20;

RingFingerprint fingerprint(const Subring& s, std::uint64_t cap = kDefaultRingCap);

/// Name of the first fingerprint field that provably differs, empty when the
/// fingerprints are indistinguishable.
std::string fingerprint_mismatch(const RingFingerprint& a, const RingFingerprint& b);

/// Generalised idealiser for a pattern s over the blocks: s_i = 1 acts by
/// left multiplication on block i, s_i = 0 by right multiplication. The code
/// must live in the matrix ambient.
Subring s_idealiser(const Code& c, std::span<const int> s);

/// Left/right idealisers; quotient-ambient codes are solved directly in the
/// quotient ring, matrix-ambient codes via the all-ones / all-zeros pattern.
Subring left_idealiser(const Code& c);
Subring right_idealiser(const Code& c);

/// Elements commuting with every codeword. Requires the identity in C.
Subring centraliser(const Code& c);

/// Intersection of the left idealiser with the centraliser.
Subring center(const Code& c);

struct NuclearParameters {
  std::size_t code_size_exp = 0;
  RingFingerprint left, right, centraliser, center;
  bool center_is_intersection = true;  // internal consistency check
};

/// The five sizes with fingerprints, computed on a normalization of C that
/// contains the identity.
NuclearParameters nuclear_parameters(const Code& c, std::uint64_t ring_cap = kDefaultRingCap,
                                     std::uint64_t enum_cap = 1ull << 26);

struct LinearityDegree {
  std::size_t exp = 0;  // largest F_{p^exp} embedding into the left idealiser
  bool exact = true;
};

LinearityDegree linearity_degree(const Code& c, std::uint64_t cap = kDefaultRingCap);

enum class Verdict { inequivalent, undetermined };

struct DistinguishOptions {
  std::uint64_t ring_cap = kDefaultRingCap;
  std::uint64_t enum_cap = 1ull << 26;
  int workers = 1;
  bool compare_weights = true;
};

struct DistinguishResult {
  Verdict verdict = Verdict::undetermined;
  std::string witness;  // separating invariant, empty when undetermined
  std::string detail;
  std::vector<std::string> notes;  // skipped comparisons and caps
  std::vector<std::pair<std::string, RingFingerprint>> fingerprints_a, fingerprints_b;
};

/// Compares every computable invariant; INEQUIVALENT verdicts carry the
/// witnessing invariant. Never claims equivalence.
DistinguishResult distinguish(const Code& a, const Code& b, const DistinguishOptions& opt = {});

}  // namespace skewrank::inv
