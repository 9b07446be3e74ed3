#pragma once

#include <cstddef>
#include <optional>
#include <cstdint>
#include <span>
#include <vector>

namespace skewrank::fp {

/// Dense matrix over the prime field F_p, p < 256. Entries are stored
/// row-major as canonical representatives in [0, p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(int p, std::size_t n);

  int p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint8_t v) { a_[r * cols_ + c] = v; }
  std::uint8_t* row(std::size_t r) { return a_.data() + r * cols_; }
  const std::uint8_t* row(std::size_t r) const { return a_.data() + r * cols_; }
  std::span<const std::uint8_t> row_span(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const std::uint8_t> v);
  void swap_rows(std::size_t i, std::size_t j);
  void truncate_rows(std::size_t n);

  bool operator==(const Matrix& o) const = default;

 private:
  int p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> a_;
};

std::uint8_t inv_mod(std::uint8_t a, int p);

struct Rref {
  Matrix mat;                        // zero rows dropped, pivots normalized
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form; the canonical representative of a row space.
Rref rref(Matrix a);

std::size_t rank(const Matrix& a);

/// Basis (as rows, in RREF) of the right null space {x : a x = 0}.
Matrix kernel(const Matrix& a);

/// Reduce v against an echelonized basis; the residual is zero iff v lies
/// in the row space.
std::vector<std::uint8_t> reduce_row(const Rref& basis, std::span<const std::uint8_t> v);
bool in_row_space(const Rref& basis, std::span<const std::uint8_t> v);

/// Coefficients of v in the RREF basis rows (valid only when v is in the
/// row space; RREF makes them directly readable at the pivot positions).
std::vector<std::uint8_t> coefficients_in_basis(const Rref& basis, std::span<const std::uint8_t> v);

bool same_row_space(const Matrix& a, const Matrix& b);

/// One solution x of a x = rhs, or nothing when inconsistent.
std::optional<std::vector<std::uint8_t>> solve(const Matrix& a, std::span<const std::uint8_t> rhs);

/// Zassenhaus intersection of two row spaces, returned in RREF.
Matrix row_space_intersection(const Matrix& a, const Matrix& b);

Matrix mul(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix inverse(const Matrix& a);

}  // namespace skewrank::fp
