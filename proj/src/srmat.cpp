#include "skewrank/srmat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewrank::srmat {

FqMat FqMat::identity(int n) {
  FqMat m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMat fqm_add(const gf::FieldTower& tw, const FqMat& x, const FqMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("srmat: shape mismatch");
  FqMat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = tw.add(x.a[i], y.a[i]);
  return r;
}

FqMat fqm_sub(const gf::FieldTower& tw, const FqMat& x, const FqMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("srmat: shape mismatch");
  FqMat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = tw.sub(x.a[i], y.a[i]);
  return r;
}

FqMat fqm_mul(const gf::FieldTower& tw, const FqMat& x, const FqMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("srmat: mul shape mismatch");
  FqMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Fel f = x.at(i, k);
      if (!f) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Fel g = y.at(k, j);
        if (g) r.set(i, j, tw.add(r.at(i, j), tw.mul(f, g)));
      }
    }
  return r;
}

FqMat fqm_transpose(const FqMat& x) {
  FqMat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.set(j, i, x.at(i, j));
  return r;
}

FqMat fqm_scale(const gf::FieldTower& tw, Fel c, const FqMat& x) {
  FqMat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = tw.mul(c, x.a[i]);
  return r;
}

int fqm_rank(const gf::FieldTower& tw, FqMat x) {
  int rank = 0;
  for (int c = 0; c < x.cols && rank < x.rows; ++c) {
    int sel = -1;
    for (int i = rank; i < x.rows; ++i)
      if (x.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank)
      for (int j = 0; j < x.cols; ++j) {
        Fel t = x.at(sel, j);
        x.set(sel, j, x.at(rank, j));
        x.set(rank, j, t);
      }
    const Fel ipiv = tw.inv(x.at(rank, c));
    for (int i = rank + 1; i < x.rows; ++i) {
      const Fel f = x.at(i, c);
      if (!f) continue;
      const Fel scale = tw.mul(f, ipiv);
      for (int j = c; j < x.cols; ++j)
        x.set(i, j, tw.sub(x.at(i, j), tw.mul(scale, x.at(rank, j))));
    }
    ++rank;
  }
  return rank;
}

FqMat fqm_inverse(const gf::FieldTower& tw, const FqMat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("srmat: inverse of non-square matrix");
  const int n = x.rows;
  FqMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.set(i, j, x.at(i, j));
    aug.set(i, n + i, 1);
  }
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (aug.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) throw std::invalid_argument("srmat: singular matrix");
    if (sel != c)
      for (int j = 0; j < 2 * n; ++j) {
        Fel t = aug.at(sel, j);
        aug.set(sel, j, aug.at(c, j));
        aug.set(c, j, t);
      }
    const Fel ipiv = tw.inv(aug.at(c, c));
    for (int j = 0; j < 2 * n; ++j) aug.set(c, j, tw.mul(ipiv, aug.at(c, j)));
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      const Fel f = aug.at(i, c);
      if (!f) continue;
      for (int j = 0; j < 2 * n; ++j) aug.set(i, j, tw.sub(aug.at(i, j), tw.mul(f, aug.at(c, j))));
    }
  }
  FqMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
  return inv;
}

FqMat fqm_kernel(const gf::FieldTower& tw, FqMat x) {
  const int n = x.cols;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < x.rows; ++c) {
    int sel = -1;
    for (int i = rank; i < x.rows; ++i)
      if (x.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank)
      for (int j = 0; j < n; ++j) {
        Fel t = x.at(sel, j);
        x.set(sel, j, x.at(rank, j));
        x.set(rank, j, t);
      }
    const Fel ipiv = tw.inv(x.at(rank, c));
    for (int j = 0; j < n; ++j) x.set(rank, j, tw.mul(ipiv, x.at(rank, j)));
    for (int i = 0; i < x.rows; ++i) {
      if (i == rank) continue;
      const Fel f = x.at(i, c);
      if (!f) continue;
      for (int j = 0; j < n; ++j) x.set(i, j, tw.sub(x.at(i, j), tw.mul(f, x.at(rank, j))));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  FqMat out(n - rank, n);
  int row = 0;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    out.set(row, fc, 1);
    for (int i = 0; i < rank; ++i) {
      const Fel v = x.at(i, fc);
      if (v) out.set(row, pivot_col[static_cast<std::size_t>(i)], tw.neg(v));
    }
    ++row;
  }
  return out;
}

FqMat fqm_entry_frob(const gf::FieldTower& tw, const FqMat& x, int h) {
  FqMat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = tw.frob(x.a[i], h);
  return r;
}

bool fqm_is_zero(const FqMat& x) {
  return std::all_of(x.a.begin(), x.a.end(), [](Fel v) { return v == 0; });
}

int Shape::min_rank_sum() const {
  int s = 0;
  for (int i = 0; i < blocks(); ++i) s += std::min(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(i)]);
  return s;
}

MatTuple::MatTuple(TowerPtr tw, std::vector<FqMat> blocks) : tw_(std::move(tw)), b_(std::move(blocks)) {
  for (const auto& blk : b_)
    for (Fel v : blk.a)
      if (!tw_->in_subfield(v, tw_->e()))
        throw std::invalid_argument("srmat: matrix entry outside F_q");
}

MatTuple MatTuple::zero(TowerPtr tw, const Shape& s) {
  std::vector<FqMat> b;
  for (int i = 0; i < s.blocks(); ++i)
    b.emplace_back(s.rows[static_cast<std::size_t>(i)], s.cols[static_cast<std::size_t>(i)]);
  return MatTuple(std::move(tw), std::move(b));
}

MatTuple MatTuple::identity_tuple(TowerPtr tw, const Shape& s) {
  if (!s.square()) throw std::invalid_argument("srmat: identity tuple needs square blocks");
  std::vector<FqMat> b;
  for (int i = 0; i < s.blocks(); ++i) b.push_back(FqMat::identity(s.rows[static_cast<std::size_t>(i)]));
  return MatTuple(std::move(tw), std::move(b));
}

Shape MatTuple::shape() const {
  Shape s;
  for (const auto& blk : b_) {
    s.rows.push_back(blk.rows);
    s.cols.push_back(blk.cols);
  }
  return s;
}

MatTuple MatTuple::operator+(const MatTuple& o) const {
  MatTuple r = *this;
  for (int i = 0; i < blocks(); ++i) r.b_[static_cast<std::size_t>(i)] = fqm_add(*tw_, block(i), o.block(i));
  return r;
}

MatTuple MatTuple::operator-(const MatTuple& o) const {
  MatTuple r = *this;
  for (int i = 0; i < blocks(); ++i) r.b_[static_cast<std::size_t>(i)] = fqm_sub(*tw_, block(i), o.block(i));
  return r;
}

MatTuple MatTuple::blockwise_mul(const MatTuple& o) const {
  MatTuple r = *this;
  for (int i = 0; i < blocks(); ++i) r.b_[static_cast<std::size_t>(i)] = fqm_mul(*tw_, block(i), o.block(i));
  return r;
}

bool MatTuple::is_zero() const {
  return std::all_of(b_.begin(), b_.end(), [](const FqMat& m) { return fqm_is_zero(m); });
}

int sum_rank_weight(const MatTuple& x) {
  int w = 0;
  for (int i = 0; i < x.blocks(); ++i) w += fqm_rank(*x.tower(), x.block(i));
  return w;
}

MatTuple apply_isometry(const MatTuple& x, const Isometry& iso) {
  const auto& tw = *x.tower();
  const int t = x.blocks();
  if (static_cast<int>(iso.perm.size()) != t) throw std::invalid_argument("srmat: isometry block count mismatch");
  std::vector<FqMat> out;
  out.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    const FqMat& src = x.block(iso.perm[static_cast<std::size_t>(i)]);
    const FqMat& a = iso.left[static_cast<std::size_t>(i)];
    const FqMat& b = iso.right[static_cast<std::size_t>(i)];
    if (a.cols != src.rows || src.cols != b.rows)
      throw std::invalid_argument("srmat: permutation not shape compatible");
    if (fqm_rank(tw, a) != a.rows || fqm_rank(tw, b) != b.rows)
      throw std::invalid_argument("srmat: isometry blocks must be invertible");
    FqMat img = fqm_entry_frob(tw, src, iso.rho[static_cast<std::size_t>(i)]);
    out.push_back(fqm_mul(tw, fqm_mul(tw, a, img), b));
  }
  return MatTuple(x.tower(), std::move(out));
}

Isometry inverse_isometry(const gf::FieldTower& tw, const Isometry& iso) {
  const int t = static_cast<int>(iso.perm.size());
  const int e = tw.e();
  Isometry out;
  out.perm.resize(static_cast<std::size_t>(t));
  out.left.resize(static_cast<std::size_t>(t));
  out.right.resize(static_cast<std::size_t>(t));
  out.rho.resize(static_cast<std::size_t>(t));
  std::vector<int> pinv(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) pinv[static_cast<std::size_t>(iso.perm[static_cast<std::size_t>(i)])] = i;
  for (int j = 0; j < t; ++j) {
    const int i = pinv[static_cast<std::size_t>(j)];
    const int rinv = (e - iso.rho[static_cast<std::size_t>(i)] % e) % e;
    out.perm[static_cast<std::size_t>(j)] = i;
    out.rho[static_cast<std::size_t>(j)] = rinv;
    out.left[static_cast<std::size_t>(j)] =
        fqm_entry_frob(tw, fqm_inverse(tw, iso.left[static_cast<std::size_t>(i)]), rinv);
    out.right[static_cast<std::size_t>(j)] =
        fqm_entry_frob(tw, fqm_inverse(tw, iso.right[static_cast<std::size_t>(i)]), rinv);
  }
  return out;
}

FqMat random_invertible(const gf::FieldTower& tw, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, tw.q() - 1);
  const auto fq = tw.subfield_elements(tw.e());
  while (true) {
    FqMat m(n, n);
    for (auto& v : m.a) v = fq[dist(rng)];
    if (fqm_rank(tw, m) == n) return m;
  }
}

Isometry random_isometry(const TowerPtr& tw, const Shape& s, std::mt19937_64& rng) {
  const int t = s.blocks();
  Isometry iso;
  iso.perm.resize(static_cast<std::size_t>(t));
  std::iota(iso.perm.begin(), iso.perm.end(), 0);
  // shuffle within classes of equal shape
  for (int i = t - 1; i > 0; --i) {
    std::vector<int> cands;
    for (int j = 0; j <= i; ++j)
      if (s.rows[static_cast<std::size_t>(iso.perm[static_cast<std::size_t>(j)])] == s.rows[static_cast<std::size_t>(iso.perm[static_cast<std::size_t>(i)])] &&
          s.cols[static_cast<std::size_t>(iso.perm[static_cast<std::size_t>(j)])] == s.cols[static_cast<std::size_t>(iso.perm[static_cast<std::size_t>(i)])])
        cands.push_back(j);
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    std::swap(iso.perm[static_cast<std::size_t>(i)], iso.perm[static_cast<std::size_t>(cands[pick(rng)])]);
  }
  std::uniform_int_distribution<int> rdist(0, tw->e() - 1);
  for (int i = 0; i < t; ++i) {
    iso.left.push_back(random_invertible(*tw, s.rows[static_cast<std::size_t>(i)], rng));
    iso.right.push_back(random_invertible(*tw, s.cols[static_cast<std::size_t>(i)], rng));
    iso.rho.push_back(rdist(rng));
  }
  return iso;
}

MatTuple v_adjoint(const MatTuple& x, std::span<const int> v) {
  if (static_cast<int>(v.size()) != x.blocks()) throw std::invalid_argument("srmat: adjoint pattern length mismatch");
  std::vector<FqMat> out;
  for (int i = 0; i < x.blocks(); ++i)
    out.push_back(v[static_cast<std::size_t>(i)] ? fqm_transpose(x.block(i)) : x.block(i));
  return MatTuple(x.tower(), std::move(out));
}

std::uint8_t trace_form(const MatTuple& x, const MatTuple& y) {
  const auto& tw = *x.tower();
  if (x.blocks() != y.blocks()) throw std::invalid_argument("srmat: trace form shape mismatch");
  Fel acc = 0;
  for (int i = 0; i < x.blocks(); ++i) {
    const auto& xb = x.block(i);
    const auto& yb = y.block(i);
    if (xb.rows != yb.rows || xb.cols != yb.cols)
      throw std::invalid_argument("srmat: trace form shape mismatch");
    for (std::size_t k = 0; k < xb.a.size(); ++k) acc = tw.add(acc, tw.mul(xb.a[k], yb.a[k]));
  }
  const Fel tr = tw.trace_to(acc, 1);
  return static_cast<std::uint8_t>(tr);  // elements of F_p are their own index
}

FqMat block_embed(const MatTuple& x) {
  int rr = 0, cc = 0;
  for (int i = 0; i < x.blocks(); ++i) {
    rr += x.block(i).rows;
    cc += x.block(i).cols;
  }
  FqMat big(rr, cc);
  int ro = 0, co = 0;
  for (int i = 0; i < x.blocks(); ++i) {
    const auto& b = x.block(i);
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) big.set(ro + r, co + c, b.at(r, c));
    ro += b.rows;
    co += b.cols;
  }
  return big;
}

FqMat linearized_to_matrix(const gf::FieldTower& tw, std::span<const Fel> coeffs,
                           const gf::FqBasis& basis) {
  const int m = tw.m();
  FqMat mat(m, m);
  for (int c = 0; c < m; ++c) {
    const Fel b = basis.elements()[static_cast<std::size_t>(c)];
    Fel img = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      img = tw.add(img, tw.mul(coeffs[j], tw.theta(b, static_cast<int>(j))));
    auto col = basis.to_fq_coords(img);
    for (int r = 0; r < m; ++r) mat.set(r, c, col[static_cast<std::size_t>(r)]);
  }
  return mat;
}

MatTuple ext_expand(TowerPtr tw, const std::vector<std::vector<Fel>>& vecs,
                    const std::vector<gf::FqBasis>& bases) {
  if (vecs.size() != bases.size()) throw std::invalid_argument("srmat: one basis per block required");
  const int m = tw->m();
  std::vector<FqMat> out;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    const int n = static_cast<int>(vecs[i].size());
    FqMat blk(m, n);
    for (int c = 0; c < n; ++c) {
      auto col = bases[i].to_fq_coords(vecs[i][static_cast<std::size_t>(c)]);
      for (int r = 0; r < m; ++r) blk.set(r, c, col[static_cast<std::size_t>(r)]);
    }
    out.push_back(std::move(blk));
  }
  return MatTuple(std::move(tw), std::move(out));
}

int vector_rank(const gf::FieldTower& tw, std::span<const Fel> v) {
  // dimension over F_q of the span of the entries
  fp::Matrix span(tw.p(), 0, static_cast<std::size_t>(tw.me()));
  for (Fel x : v)
    for (Fel u : tw.fq_basis()) span.append_row(tw.coords(tw.mul(x, u)));
  return static_cast<int>(fp::rank(span)) / tw.e();
}

long long singleton_bound(const Shape& s, int d) {
  const int t = s.blocks();
  long long total_m = 0;
  for (int i = 0; i < t; ++i) {
    if (s.rows[static_cast<std::size_t>(i)] > s.cols[static_cast<std::size_t>(i)])
      throw std::invalid_argument("srmat: bound requires m_i <= n_i");
    if (i > 0 && (s.rows[static_cast<std::size_t>(i)] > s.rows[static_cast<std::size_t>(i - 1)] ||
                  s.cols[static_cast<std::size_t>(i)] > s.cols[static_cast<std::size_t>(i - 1)]))
      throw std::invalid_argument("srmat: bound requires decreasing block sizes");
    total_m += s.rows[static_cast<std::size_t>(i)];
  }
  if (d < 1 || d > total_m) throw std::invalid_argument("srmat: distance out of range");
  long long cum = 0;
  for (int j = 0; j < t; ++j) {
    const long long mj = s.rows[static_cast<std::size_t>(j)];
    if (d - 1 < cum + mj) {
      const long long delta = d - 1 - cum;
      long long bound = 0;
      for (int i = j; i < t; ++i)
        bound += static_cast<long long>(s.rows[static_cast<std::size_t>(i)]) * s.cols[static_cast<std::size_t>(i)];
      bound -= static_cast<long long>(s.cols[static_cast<std::size_t>(j)]) * delta;
      return bound;
    }
    cum += mj;
  }
  throw std::logic_error("srmat: bound decomposition failed");
}

FqMat common_kernel(const gf::FieldTower& tw, std::span<const MatTuple> basis, int block, Side side) {
  if (basis.empty()) throw std::invalid_argument("srmat: empty basis");
  const FqMat& first = basis[0].block(block);
  const int dim = side == Side::left ? first.rows : first.cols;
  FqMat stacked(0, dim);
  stacked.rows = 0;
  for (const auto& bt : basis) {
    FqMat blk = side == Side::left ? fqm_transpose(bt.block(block)) : bt.block(block);
    stacked.a.insert(stacked.a.end(), blk.a.begin(), blk.a.end());
    stacked.rows += blk.rows;
  }
  return fqm_kernel(tw, std::move(stacked));
}

NondegeneracyReport is_nondegenerate(const gf::FieldTower& tw, std::span<const MatTuple> basis) {
  NondegeneracyReport rep;
  const int t = basis.empty() ? 0 : basis[0].blocks();
  for (int j = 0; j < t; ++j) {
    for (Side side : {Side::left, Side::right}) {
      FqMat k = common_kernel(tw, basis, j, side);
      if (k.rows > 0) {
        rep.nondegenerate = false;
        rep.block = j;
        rep.side = side;
        rep.witness.assign(k.a.begin(), k.a.begin() + k.cols);
        return rep;
      }
    }
  }
  return rep;
}

Ambient::Ambient(TowerPtr tw, Shape s) : tw_(std::move(tw)), shape_(std::move(s)) {
  dim_ = 0;
  for (int i = 0; i < shape_.blocks(); ++i)
    dim_ += static_cast<std::size_t>(shape_.rows[static_cast<std::size_t>(i)]) *
            static_cast<std::size_t>(shape_.cols[static_cast<std::size_t>(i)]) *
            static_cast<std::size_t>(tw_->e());
}

std::vector<std::uint8_t> Ambient::to_coords(const MatTuple& x) const {
  std::vector<std::uint8_t> out;
  out.reserve(dim_);
  const auto& qc = tw_->fq_coords();
  for (int i = 0; i < x.blocks(); ++i)
    for (Fel v : x.block(i).a) {
      auto c = qc.to_coords(v);
      out.insert(out.end(), c.begin(), c.end());
    }
  return out;
}

MatTuple Ambient::from_coords(std::span<const std::uint8_t> c) const {
  if (c.size() != dim_) throw std::invalid_argument("srmat: coordinate length mismatch");
  const auto& qc = tw_->fq_coords();
  const int e = tw_->e();
  std::vector<FqMat> blocks;
  std::size_t pos = 0;
  for (int i = 0; i < shape_.blocks(); ++i) {
    FqMat blk(shape_.rows[static_cast<std::size_t>(i)], shape_.cols[static_cast<std::size_t>(i)]);
    for (auto& v : blk.a) {
      v = qc.from_coords(c.subspan(pos, static_cast<std::size_t>(e)));
      pos += static_cast<std::size_t>(e);
    }
    blocks.push_back(std::move(blk));
  }
  return MatTuple(tw_, std::move(blocks));
}

std::vector<MatTuple> dual_code(const Ambient& amb, std::span<const MatTuple> basis) {
  const auto& tw = *amb.tower();
  const std::size_t dim = amb.dim_fp();
  fp::Matrix constraints(tw.p(), basis.size(), dim);
  std::vector<std::uint8_t> unit(dim, 0);
  for (std::size_t col = 0; col < dim; ++col) {
    unit[col] = 1;
    MatTuple ej = amb.from_coords(unit);
    for (std::size_t i = 0; i < basis.size(); ++i)
      constraints.set(i, col, trace_form(basis[i], ej));
    unit[col] = 0;
  }
  fp::Matrix k = fp::kernel(constraints);
  std::vector<MatTuple> out;
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(amb.from_coords(k.row_span(i)));
  return out;
}

}  // namespace skewrank::srmat
