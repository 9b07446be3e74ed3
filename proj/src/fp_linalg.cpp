#include "skewrank/fp_linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace skewrank::fp {

Matrix Matrix::identity(int p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::append_row(std::span<const std::uint8_t> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("fp: row length mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

void Matrix::truncate_rows(std::size_t n) {
  rows_ = n;
  a_.resize(n * cols_);
}

std::uint8_t inv_mod(std::uint8_t a, int p) {
  // p is a small prime; Fermat
  int r = 1;
  int base = a % p;
  int k = p - 2;
  while (k > 0) {
    if (k & 1) r = r * base % p;
    base = base * base % p;
    k >>= 1;
  }
  return static_cast<std::uint8_t>(r);
}

Rref rref(Matrix a) {
  const int p = a.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (a.at(i, c)) {
        sel = i;
        break;
      }
    if (sel == a.rows()) continue;
    a.swap_rows(sel, r);
    const std::uint8_t ipiv = inv_mod(a.at(r, c), p);
    if (ipiv != 1) {
      auto* row = a.row(r);
      for (std::size_t k = c; k < a.cols(); ++k) row[k] = static_cast<std::uint8_t>(row[k] * ipiv % p);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const std::uint8_t f = a.at(i, c);
      if (!f) continue;
      auto* ri = a.row(i);
      const auto* rr = a.row(r);
      for (std::size_t k = c; k < a.cols(); ++k)
        ri[k] = static_cast<std::uint8_t>((ri[k] + (p - f) * rr[k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  a.truncate_rows(pivots.size());
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix kernel(const Matrix& a) {
  const int p = a.p();
  Rref rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  Matrix out(p, 0, a.cols());
  std::vector<std::uint8_t> x(a.cols());
  for (std::size_t fc = 0; fc < a.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::fill(x.begin(), x.end(), 0);
    x[fc] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      const std::uint8_t v = rr.mat.at(i, fc);
      if (v) x[rr.pivots[i]] = static_cast<std::uint8_t>((p - v) % p);
    }
    out.append_row(x);
  }
  return rref(std::move(out)).mat;
}

std::vector<std::uint8_t> reduce_row(const Rref& basis, std::span<const std::uint8_t> v) {
  const int p = basis.mat.p();
  std::vector<std::uint8_t> res(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    const std::uint8_t f = res[basis.pivots[i]];
    if (!f) continue;
    const auto* br = basis.mat.row(i);
    for (std::size_t k = 0; k < res.size(); ++k)
      res[k] = static_cast<std::uint8_t>((res[k] + (p - f) * br[k]) % p);
  }
  return res;
}

bool in_row_space(const Rref& basis, std::span<const std::uint8_t> v) {
  auto res = reduce_row(basis, v);
  for (auto x : res)
    if (x) return false;
  return true;
}

std::vector<std::uint8_t> coefficients_in_basis(const Rref& basis, std::span<const std::uint8_t> v) {
  std::vector<std::uint8_t> c(basis.pivots.size());
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) c[i] = v[basis.pivots[i]];
  return c;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  return rref(a).mat == rref(b).mat;
}

std::optional<std::vector<std::uint8_t>> solve(const Matrix& a, std::span<const std::uint8_t> rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("fp: solve rhs length mismatch");
  Matrix aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, a.cols(), rhs[i]);
  }
  Rref rr = rref(std::move(aug));
  std::vector<std::uint8_t> x(a.cols(), 0);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == a.cols()) return std::nullopt;  // inconsistent
    x[rr.pivots[i]] = rr.mat.at(i, a.cols());
  }
  return x;
}

Matrix row_space_intersection(const Matrix& a, const Matrix& b) {
  const int p = a.p();
  const std::size_t n = a.cols();
  if (b.cols() != n) throw std::invalid_argument("fp: intersection dimension mismatch");
  Matrix big(p, 0, 2 * n);
  std::vector<std::uint8_t> row(2 * n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto* r = a.row(i);
    std::copy(r, r + n, row.begin());
    std::copy(r, r + n, row.begin() + n);
    big.append_row(row);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const auto* r = b.row(i);
    std::copy(r, r + n, row.begin());
    std::fill(row.begin() + n, row.end(), 0);
    big.append_row(row);
  }
  Rref rr = rref(std::move(big));
  Matrix inter(p, 0, n);
  for (std::size_t i = 0; i < rr.mat.rows(); ++i) {
    const auto* r = rr.mat.row(i);
    bool left_zero = true;
    for (std::size_t k = 0; k < n; ++k)
      if (r[k]) {
        left_zero = false;
        break;
      }
    if (left_zero) inter.append_row({r + n, n});
  }
  return rref(std::move(inter)).mat;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("fp: mul shape mismatch");
  const int p = a.p();
  Matrix out(p, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const int f = a.at(i, k);
      if (!f) continue;
      const auto* br = b.row(k);
      auto* orow = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j)
        orow[j] = static_cast<std::uint8_t>((orow[j] + f * br[j]) % p);
    }
  return out;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("fp: inverse of non-square matrix");
  const int p = a.p();
  const std::size_t n = a.rows();
  Matrix aug(p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, n + i, 1);
  }
  Rref rr = rref(std::move(aug));
  for (std::size_t i = 0; i < n; ++i)
    if (i >= rr.pivots.size() || rr.pivots[i] != i)
      throw std::invalid_argument("fp: singular matrix");
  Matrix inv(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rr.mat.at(i, n + j));
  return inv;
}

}  // namespace skewrank::fp
