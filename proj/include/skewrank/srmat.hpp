#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "skewrank/gf.hpp"

namespace skewrank::srmat {

using gf::Fel;
using gf::TowerPtr;

/// Dense matrix over F_q; entries are tower elements lying in the subfield.
struct FqMat {
  int rows = 0, cols = 0;
  std::vector<Fel> a;  // row-major

  FqMat() = default;
  FqMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static FqMat identity(int n);

  Fel at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  void set(int r, int c, Fel v) { a[static_cast<std::size_t>(r) * cols + c] = v; }
  bool operator==(const FqMat& o) const = default;
};

FqMat fqm_add(const gf::FieldTower& tw, const FqMat& x, const FqMat& y);
FqMat fqm_sub(const gf::FieldTower& tw, const FqMat& x, const FqMat& y);
FqMat fqm_mul(const gf::FieldTower& tw, const FqMat& x, const FqMat& y);
FqMat fqm_transpose(const FqMat& x);
FqMat fqm_scale(const gf::FieldTower& tw, Fel c, const FqMat& x);
int fqm_rank(const gf::FieldTower& tw, FqMat x);
FqMat fqm_inverse(const gf::FieldTower& tw, const FqMat& x);  // throws when singular
/// Rows form a basis of {v : x v = 0}.
FqMat fqm_kernel(const gf::FieldTower& tw, FqMat x);
FqMat fqm_entry_frob(const gf::FieldTower& tw, const FqMat& x, int h);
bool fqm_is_zero(const FqMat& x);

/// Per-block dimensions of Mat(m, n, F_q).
struct Shape {
  std::vector<int> rows, cols;
  int blocks() const { return static_cast<int>(rows.size()); }
  bool square() const { return rows == cols; }
  int min_rank_sum() const;
  bool operator==(const Shape& o) const = default;
};

/// A tuple of t matrices over F_q. The sum-rank weight is the sum of the
/// blockwise F_q-ranks.
class MatTuple {
 public:
  MatTuple() = default;
  MatTuple(TowerPtr tw, std::vector<FqMat> blocks);
  static MatTuple zero(TowerPtr tw, const Shape& s);
  static MatTuple identity_tuple(TowerPtr tw, const Shape& s);  // square shapes

  const TowerPtr& tower() const { return tw_; }
  int blocks() const { return static_cast<int>(b_.size()); }
  const FqMat& block(int i) const { return b_[static_cast<std::size_t>(i)]; }
  FqMat& block(int i) { return b_[static_cast<std::size_t>(i)]; }
  Shape shape() const;

  bool operator==(const MatTuple& o) const { return b_ == o.b_; }
  MatTuple operator+(const MatTuple& o) const;
  MatTuple operator-(const MatTuple& o) const;
  /// Blockwise product (both tuples square, matching shapes).
  MatTuple blockwise_mul(const MatTuple& o) const;
  bool is_zero() const;

 private:
  TowerPtr tw_;
  std::vector<FqMat> b_;
};

int sum_rank_weight(const MatTuple& x);

/// A strong additive isometry: block i of the image is A_i X_{perm[i]}^{rho_i} B_i
/// where rho_i is an entrywise p-power automorphism of F_q.
struct Isometry {
  std::vector<int> perm;
  std::vector<FqMat> left, right;
  std::vector<int> rho;  // exponents mod e
};

MatTuple apply_isometry(const MatTuple& x, const Isometry& iso);
Isometry inverse_isometry(const gf::FieldTower& tw, const Isometry& iso);
Isometry random_isometry(const TowerPtr& tw, const Shape& s, std::mt19937_64& rng);
FqMat random_invertible(const gf::FieldTower& tw, int n, std::mt19937_64& rng);

/// Blockwise transposition pattern: block i is transposed iff v[i] = 1.
MatTuple v_adjoint(const MatTuple& x, std::span<const int> v);

/// The nondegenerate form sum_i Tr_{q/p}(Tr(X_i Y_i^T)), valued in F_p.
std::uint8_t trace_form(const MatTuple& x, const MatTuple& y);

/// Block-diagonal embedding into a single (sum m_i) x (sum n_i) matrix.
FqMat block_embed(const MatTuple& x);

/// Matrix of the F_q-linear map b -> sum_j c_j theta^j(b) in the given basis.
FqMat linearized_to_matrix(const gf::FieldTower& tw, std::span<const Fel> coeffs,
                           const gf::FqBasis& basis);

/// Blockwise expansion of vectors over F_{q^m} into coordinate matrices.
MatTuple ext_expand(TowerPtr tw, const std::vector<std::vector<Fel>>& vecs,
                    const std::vector<gf::FqBasis>& bases);

/// Rank of the F_q-span of the entries of a vector over F_{q^m}.
int vector_rank(const gf::FieldTower& tw, std::span<const Fel> v);

/// Maximum log_q |C| for a code of minimum distance d in the given shape.
/// Requires m_i <= n_i with both sequences sorted in decreasing order.
long long singleton_bound(const Shape& s, int d);

enum class Side { left, right };

/// Intersection over the basis of the blockwise left (or right) kernels;
/// rows of the result form an F_q-basis of the common kernel.
FqMat common_kernel(const gf::FieldTower& tw, std::span<const MatTuple> basis, int block, Side side);

struct NondegeneracyReport {
  bool nondegenerate = true;
  int block = -1;
  Side side = Side::left;
  std::vector<Fel> witness;  // nonzero common-kernel vector when degenerate
};

NondegeneracyReport is_nondegenerate(const gf::FieldTower& tw, std::span<const MatTuple> basis);

/// Ambient descriptor with the F_p coordinatization used by codes and
/// invariant solvers: blocks in order, row-major entries, e digits per entry.
class Ambient {
 public:
  Ambient() = default;
  Ambient(TowerPtr tw, Shape s);
  const TowerPtr& tower() const { return tw_; }
  const Shape& shape() const { return shape_; }
  std::size_t dim_fp() const { return dim_; }
  std::vector<std::uint8_t> to_coords(const MatTuple& x) const;
  MatTuple from_coords(std::span<const std::uint8_t> c) const;
  bool operator==(const Ambient& o) const {
    return shape_ == o.shape_ && tw_->compatible(*o.tw_);
  }

 private:
  TowerPtr tw_;
  Shape shape_;
  std::size_t dim_ = 0;
};

/// Basis of the orthogonal complement under the trace form.
std::vector<MatTuple> dual_code(const Ambient& amb, std::span<const MatTuple> basis);

}  // namespace skewrank::srmat
