#include "skewrank/codes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace skewrank::codes {

using quot::QuotientRing;
using skew::SkewPoly;
using srmat::FqMat;
using srmat::MatTuple;

namespace {

std::uint64_t ipow_u64(std::uint64_t b, std::size_t k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

// rank with caller-provided scratch, used inside enumeration loops
int rank_scratch(const gf::FieldTower& tw, const FqMat& src, std::vector<Fel>& buf) {
  const int rows = src.rows, cols = src.cols;
  buf.assign(src.a.begin(), src.a.end());
  Fel* a = buf.data();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int sel = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i * cols + c]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank)
      for (int j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[rank * cols + j]);
    const Fel ipiv = tw.inv(a[rank * cols + c]);
    for (int i = rank + 1; i < rows; ++i) {
      const Fel f = a[i * cols + c];
      if (!f) continue;
      const Fel s = tw.mul(f, ipiv);
      for (int j = c; j < cols; ++j)
        a[i * cols + j] = tw.sub(a[i * cols + j], tw.mul(s, a[rank * cols + j]));
    }
    ++rank;
  }
  return rank;
}

// Enumeration state shared by both ambients: codewords are visited in
// coordinate-lexicographic order (last coordinate varies fastest), so the
// linear index equals the base-p reading of the coordinate digits.
struct QuotWalker {
  const QuotientRing* ring;
  std::vector<std::vector<Fel>> rows;  // dense coefficient vectors per basis row
  std::vector<Fel> cur;
  std::vector<std::uint8_t> digits;
  std::size_t dim;
  int p;

  explicit QuotWalker(const Code& c) {
    ring = c.ring().get();
    dim = c.dim_fp();
    p = c.p();
    for (std::size_t i = 0; i < dim; ++i)
      rows.push_back(ring->dense_coeffs(c.quot_element(i)));
    cur.assign(static_cast<std::size_t>(ring->tm()), 0);
    digits.assign(dim, 0);
  }

  void seek(std::uint64_t index) {
    std::fill(cur.begin(), cur.end(), 0);
    const auto& tw = *ring->tower();
    for (std::size_t i = 0; i < dim; ++i) {
      const std::uint64_t place = ipow_u64(static_cast<std::uint64_t>(p), dim - 1 - i);
      const int d = static_cast<int>(index / place % static_cast<std::uint64_t>(p));
      digits[i] = static_cast<std::uint8_t>(d);
      for (int rep = 0; rep < d; ++rep)
        for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = tw.add(cur[j], rows[i][j]);
    }
  }

  void step() {
    const auto& tw = *ring->tower();
    for (std::size_t i = dim; i-- > 0;) {
      for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = tw.add(cur[j], rows[i][j]);
      if (++digits[i] < p) return;
      digits[i] = 0;
    }
  }

  int weight() const { return ring->weight_of_coeffs(cur); }
};

struct MatWalker {
  const srmat::Ambient* amb;
  const gf::FieldTower* tw;
  std::vector<std::vector<FqMat>> rows;
  std::vector<FqMat> cur;
  std::vector<std::uint8_t> digits;
  std::size_t dim;
  int p;
  mutable std::vector<Fel> scratch;

  explicit MatWalker(const Code& c) {
    amb = &c.mat_ambient();
    tw = amb->tower().get();
    dim = c.dim_fp();
    p = c.p();
    for (std::size_t i = 0; i < dim; ++i) {
      MatTuple t = c.mat_element(i);
      std::vector<FqMat> blocks;
      for (int b = 0; b < t.blocks(); ++b) blocks.push_back(t.block(b));
      rows.push_back(std::move(blocks));
    }
    const auto& s = amb->shape();
    for (int b = 0; b < s.blocks(); ++b)
      cur.emplace_back(s.rows[static_cast<std::size_t>(b)], s.cols[static_cast<std::size_t>(b)]);
    digits.assign(dim, 0);
  }

  void add_row(std::size_t i) {
    for (std::size_t b = 0; b < cur.size(); ++b)
      for (std::size_t k = 0; k < cur[b].a.size(); ++k)
        cur[b].a[k] = tw->add(cur[b].a[k], rows[i][b].a[k]);
  }

  void seek(std::uint64_t index) {
    for (auto& blk : cur) std::fill(blk.a.begin(), blk.a.end(), 0);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::uint64_t place = ipow_u64(static_cast<std::uint64_t>(p), dim - 1 - i);
      const int d = static_cast<int>(index / place % static_cast<std::uint64_t>(p));
      digits[i] = static_cast<std::uint8_t>(d);
      for (int rep = 0; rep < d; ++rep) add_row(i);
    }
  }

  void step() {
    for (std::size_t i = dim; i-- > 0;) {
      add_row(i);
      if (++digits[i] < p) return;
      digits[i] = 0;
    }
  }

  int weight() const {
    int w = 0;
    for (const auto& blk : cur) w += rank_scratch(*tw, blk, scratch);
    return w;
  }
};

template <class Walker>
void walk_range(Walker& w, std::uint64_t lo, std::uint64_t hi,
                const std::function<void(std::uint64_t, int)>& fn) {
  w.seek(lo);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (idx != lo) w.step();
    fn(idx, w.weight());
  }
}

std::uint64_t checked_total(const Code& c) {
  const double bits = static_cast<double>(c.dim_fp()) * std::log2(static_cast<double>(c.p()));
  if (bits > 62) return std::numeric_limits<std::uint64_t>::max();
  return ipow_u64(static_cast<std::uint64_t>(c.p()), c.dim_fp());
}

int max_weight_of(const Code& c) {
  if (c.is_quot()) return c.ring()->tm();
  return c.mat_ambient().shape().min_rank_sum();
}

srmat::Shape normalized_shape(const srmat::Shape& s) {
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < s.blocks(); ++i) {
    int r = s.rows[static_cast<std::size_t>(i)], cc = s.cols[static_cast<std::size_t>(i)];
    blocks.emplace_back(std::min(r, cc), std::max(r, cc));
  }
  std::sort(blocks.begin(), blocks.end(), std::greater<>());
  srmat::Shape out;
  for (auto [a, b] : blocks) {
    out.rows.push_back(a);
    out.cols.push_back(b);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Code Code::from_quot_basis(RingPtr ring, fp::Matrix rows, Provenance prov) {
  Code c;
  if (rows.cols() != ring->dim_fp() && rows.rows() > 0)
    throw std::invalid_argument("codes: basis row length mismatch");
  if (rows.rows() == 0 && rows.cols() == 0) rows = fp::Matrix(ring->tower()->p(), 0, ring->dim_fp());
  c.amb_ = std::move(ring);
  c.rref_ = fp::rref(std::move(rows));
  c.prov_ = prov;
  return c;
}

Code Code::from_mat_basis(srmat::Ambient amb, fp::Matrix rows, Provenance prov) {
  Code c;
  if (rows.cols() != amb.dim_fp() && rows.rows() > 0)
    throw std::invalid_argument("codes: basis row length mismatch");
  if (rows.rows() == 0 && rows.cols() == 0) rows = fp::Matrix(amb.tower()->p(), 0, amb.dim_fp());
  c.amb_ = std::move(amb);
  c.rref_ = fp::rref(std::move(rows));
  c.prov_ = prov;
  return c;
}

const TowerPtr& Code::tower() const {
  if (is_quot()) return ring()->tower();
  return mat_ambient().tower();
}

std::size_t Code::ambient_dim() const {
  return is_quot() ? ring()->dim_fp() : mat_ambient().dim_fp();
}

QuotElement Code::quot_element(std::size_t row) const {
  return ring()->from_coords(rref_.mat.row_span(row));
}

MatTuple Code::mat_element(std::size_t row) const {
  return mat_ambient().from_coords(rref_.mat.row_span(row));
}

std::vector<std::uint8_t> Code::identity_coords() const {
  if (is_quot()) return ring()->to_coords(ring()->one());
  return mat_ambient().to_coords(MatTuple::identity_tuple(tower(), mat_ambient().shape()));
}

bool Code::contains(std::span<const std::uint8_t> coords) const {
  return fp::in_row_space(rref_, coords);
}

bool Code::contains_identity() const {
  if (!is_quot() && !mat_ambient().shape().square()) return false;
  return contains(identity_coords());
}

// ---------------------------------------------------------------------------

Code construct_lrs(RingPtr ring, int k) {
  return construct_atlrs(std::move(ring), k, 0, 0);
}

Code construct_atlrs(RingPtr ring, int k, Fel eta, int tau_h) {
  const auto& tw = *ring->tower();
  const int tm = ring->tm();
  if (k < 1 || k >= tm) throw ConstructionError("codes: require 1 <= k < tm");
  if (eta) {
    TwistCheck chk = atlrs_twist_check(*ring, k, eta, tau_h);
    if (!chk.ok) throw ConstructionError("codes: eta twist condition failed: " + chk.detail);
  }
  fp::Matrix rows(tw.p(), 0, ring->dim_fp());
  Fel beta = 1;
  for (int r = 0; r < tw.me(); ++r) {
    SkewPoly gen = SkewPoly::constant(ring->tower(), beta);
    if (eta) {
      const Fel twist = tw.mul(eta, tw.frob(beta, tau_h));
      gen = gen + SkewPoly::monomial(ring->tower(), k, twist);
    }
    rows.append_row(ring->to_coords(ring->reduce(gen)));
    beta *= static_cast<Fel>(tw.p());  // next power-basis element
  }
  for (int i = 1; i < k; ++i) {
    beta = 1;
    for (int r = 0; r < tw.me(); ++r) {
      rows.append_row(ring->to_coords(ring->monomial(i, beta)));
      beta *= static_cast<Fel>(tw.p());
    }
  }
  Provenance prov{eta ? Family::atlrs : Family::lrs, k, eta, tau_h, 0};
  return Code::from_quot_basis(std::move(ring), std::move(rows), prov);
}

Code construct_tz(RingPtr ring, int k, Fel gamma) {
  const auto& tw = *ring->tower();
  const int tm = ring->tm();
  const int m = tw.m();
  if (m % 2 != 0) throw ConstructionError("codes: tz requires m even");
  if (tw.p() == 2) throw ConstructionError("codes: tz requires q odd");
  if (k < 1 || k >= tm) throw ConstructionError("codes: require 1 <= k < tm");
  for (Fel l : ring->lambdas())
    if (!is_square_in_fq(tw, l))
      throw ConstructionError("codes: tz requires Lambda inside the squares of F_q*");
  if (!gamma) throw ConstructionError("codes: tz requires gamma != 0");
  const Fel ng = tw.norm_to(gamma, tw.e());
  if (is_square_in_fq(tw, ng))
    throw ConstructionError("codes: tz requires the norm of gamma to be a non-square");
  const int half = tw.e() * (m / 2);
  const auto half_basis = tw.subfield_basis(half);
  fp::Matrix rows(tw.p(), 0, ring->dim_fp());
  for (Fel b : half_basis) rows.append_row(ring->to_coords(ring->from_constant(b)));
  for (int i = 1; i < k; ++i) {
    Fel beta = 1;
    for (int r = 0; r < tw.me(); ++r) {
      rows.append_row(ring->to_coords(ring->monomial(i, beta)));
      beta *= static_cast<Fel>(tw.p());
    }
  }
  for (Fel b : half_basis)
    rows.append_row(ring->to_coords(ring->monomial(k, tw.mul(gamma, b))));
  Provenance prov{Family::tz, k, 0, 0, gamma};
  return Code::from_quot_basis(std::move(ring), std::move(rows), prov);
}

std::vector<Fel> lambda_subgroup(const gf::FieldTower& tw, std::span<const Fel> lambdas) {
  std::vector<Fel> group{1};
  bool grew = true;
  while (grew) {
    grew = false;
    for (Fel g : std::vector<Fel>(group)) {
      for (Fel l : lambdas) {
        const Fel x = tw.mul(g, l);
        if (std::find(group.begin(), group.end(), x) == group.end()) {
          group.push_back(x);
          grew = true;
        }
      }
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

bool is_square_in_fq(const gf::FieldTower& tw, Fel x) {
  if (!x) return false;
  if (tw.p() == 2) return true;
  return tw.pow(x, (tw.q() - 1) / 2) == 1;
}

TwistCheck atlrs_twist_check(const QuotientRing& ring, int k, Fel eta, int tau_h) {
  const auto& tw = *ring.tower();
  TwistCheck chk;
  chk.subgroup = lambda_subgroup(tw, ring.lambdas());
  if (!eta) {  // no twist; nothing to test
    chk.ok = true;
    return chk;
  }
  const int fix_exp = tw.fixed_field_exponent(tau_h);
  const int s_f = std::gcd(tw.e(), fix_exp);
  const int u = tw.e() / s_f;
  Fel value = tw.norm_to(eta, s_f);
  const long long par = static_cast<long long>(u) * k * tw.m();
  if (tw.p() != 2 && par % 2 != 0) value = tw.neg(value);
  chk.lhs = value;
  chk.ok = std::find(chk.subgroup.begin(), chk.subgroup.end(), value) == chk.subgroup.end();
  if (!chk.ok) {
    auto coords_of = [&](Fel x) {
      std::string s = "(";
      for (auto d : tw.coords(x)) s += std::to_string(d) + ",";
      s.back() = ')';
      return s;
    };
    std::string group;
    for (Fel g : chk.subgroup) group += (group.empty() ? "" : " ") + coords_of(g);
    chk.detail = "(-1)^{ukm} N(eta) = " + coords_of(value) +
                 " lies in the subgroup generated by Lambda {" + group + "}";
  }
  return chk;
}

Fel find_valid_eta(const QuotientRing& ring, int k, int tau_h) {
  const auto& tw = *ring.tower();
  Fel best = 0;
  for (Fel a = 1; a < tw.size(); ++a)
    if (atlrs_twist_check(ring, k, a, tau_h).ok && (best == 0 || tw.lex_less(a, best))) best = a;
  return best;
}

Fel find_valid_gamma(const QuotientRing& ring) {
  const auto& tw = *ring.tower();
  Fel best = 0;
  for (Fel a = 1; a < tw.size(); ++a)
    if (!is_square_in_fq(tw, tw.norm_to(a, tw.e())) && (best == 0 || tw.lex_less(a, best))) best = a;
  return best;
}

// ---------------------------------------------------------------------------

void for_each_codeword_weight(const Code& c, std::uint64_t cap, int workers,
                              const std::function<void(std::uint64_t, int)>& fn) {
  const std::uint64_t total = checked_total(c);
  if (total > cap) throw CapExceeded("codes: enumeration cap exceeded");
  (void)workers;  // sequential; parallelism lives in weight_distribution
  if (c.is_quot()) {
    QuotWalker w(c);
    walk_range(w, 0, total, fn);
  } else {
    MatWalker w(c);
    walk_range(w, 0, total, fn);
  }
}

CodeReport weight_distribution(const Code& c, std::uint64_t cap, int workers, std::uint64_t sample,
                               std::uint64_t seed) {
  CodeReport rep;
  rep.p = c.p();
  rep.dim_fp = c.dim_fp();
  const int maxw = max_weight_of(c);
  rep.weights.assign(static_cast<std::size_t>(maxw) + 1, 0);
  const std::uint64_t total = checked_total(c);

  if (total > cap) {
    if (sample == 0)
      throw CapExceeded("codes: enumeration cap exceeded; lower parameters or request sampling");
    // sampling mode, clearly non-exact
    rep.exact = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, c.p() - 1);
    std::vector<std::uint8_t> digits(c.dim_fp());
    const auto& tw = *c.tower();
    for (std::uint64_t s = 0; s < sample; ++s) {
      for (auto& d : digits) d = static_cast<std::uint8_t>(digit(rng));
      int w = 0;
      if (c.is_quot()) {
        std::vector<Fel> cur(static_cast<std::size_t>(c.ring()->tm()), 0);
        for (std::size_t i = 0; i < digits.size(); ++i) {
          auto coeffs = c.ring()->dense_coeffs(c.quot_element(i));
          for (int rpt = 0; rpt < digits[i]; ++rpt)
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = tw.add(cur[j], coeffs[j]);
        }
        w = c.ring()->weight_of_coeffs(cur);
      } else {
        MatTuple cur = MatTuple::zero(c.tower(), c.mat_ambient().shape());
        for (std::size_t i = 0; i < digits.size(); ++i) {
          MatTuple row = c.mat_element(i);
          for (int rpt = 0; rpt < digits[i]; ++rpt) cur = cur + row;
        }
        w = srmat::sum_rank_weight(cur);
      }
      ++rep.weights[static_cast<std::size_t>(w)];
    }
  } else {
    const int nthreads =
        std::max(1, std::min<int>(workers, static_cast<int>(total / 4096) + 1));
    std::vector<std::vector<std::uint64_t>> hists(
        static_cast<std::size_t>(nthreads),
        std::vector<std::uint64_t>(static_cast<std::size_t>(maxw) + 1, 0));
    std::vector<std::vector<std::uint64_t>> firsts(
        static_cast<std::size_t>(nthreads),
        std::vector<std::uint64_t>(static_cast<std::size_t>(maxw) + 1,
                                   std::numeric_limits<std::uint64_t>::max()));
    auto run = [&](int tid, std::uint64_t lo, std::uint64_t hi) {
      auto& hist = hists[static_cast<std::size_t>(tid)];
      auto& first = firsts[static_cast<std::size_t>(tid)];
      auto fn = [&](std::uint64_t idx, int w) {
        ++hist[static_cast<std::size_t>(w)];
        if (first[static_cast<std::size_t>(w)] == std::numeric_limits<std::uint64_t>::max())
          first[static_cast<std::size_t>(w)] = idx;
      };
      if (c.is_quot()) {
        QuotWalker w(c);
        walk_range(w, lo, hi, fn);
      } else {
        MatWalker w(c);
        walk_range(w, lo, hi, fn);
      }
    };
    if (nthreads == 1) {
      run(0, 0, total);
    } else {
      std::vector<std::thread> threads;
      const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
      for (int tdx = 0; tdx < nthreads; ++tdx) {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(tdx);
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(run, tdx, lo, hi);
      }
      for (auto& t : threads) t.join();
    }
    std::vector<std::uint64_t> first(static_cast<std::size_t>(maxw) + 1,
                                     std::numeric_limits<std::uint64_t>::max());
    for (int tdx = 0; tdx < nthreads; ++tdx)
      for (int w = 0; w <= maxw; ++w) {
        rep.weights[static_cast<std::size_t>(w)] += hists[static_cast<std::size_t>(tdx)][static_cast<std::size_t>(w)];
        first[static_cast<std::size_t>(w)] =
            std::min(first[static_cast<std::size_t>(w)], firsts[static_cast<std::size_t>(tdx)][static_cast<std::size_t>(w)]);
      }
    // witness = codeword coordinates at the first index achieving min weight
    for (int w = 1; w <= maxw; ++w)
      if (rep.weights[static_cast<std::size_t>(w)] > 0) {
        rep.min_distance = w;
        std::uint64_t idx = first[static_cast<std::size_t>(w)];
        std::vector<std::uint8_t> digits(c.dim_fp());
        for (std::size_t i = 0; i < digits.size(); ++i)
          digits[i] = static_cast<std::uint8_t>(
              idx / ipow_u64(static_cast<std::uint64_t>(c.p()), c.dim_fp() - 1 - i) %
              static_cast<std::uint64_t>(c.p()));
        rep.min_weight_witness = std::move(digits);
        break;
      }
  }

  if (rep.exact && rep.min_distance == 0)
    for (int w = 1; w <= maxw; ++w)
      if (rep.weights[static_cast<std::size_t>(w)] > 0) {
        rep.min_distance = w;
        break;
      }

  // MSRD flag against the bound, in the exact mode only
  if (rep.exact && rep.min_distance > 0) {
    srmat::Shape shape;
    if (c.is_quot()) {
      shape.rows.assign(static_cast<std::size_t>(c.ring()->t()), c.ring()->m());
      shape.cols = shape.rows;
    } else {
      shape = normalized_shape(c.mat_ambient().shape());
    }
    const long long bound = srmat::singleton_bound(shape, rep.min_distance);
    rep.msrd = static_cast<long long>(rep.dim_fp) == bound * c.tower()->e();
  }

  // nondegeneracy from the basis, through the matrix picture when needed
  {
    const Code& mat = c.is_quot() ? to_matrix_code(c) : c;
    if (mat.dim_fp() > 0) {
      std::vector<MatTuple> basis;
      for (std::size_t i = 0; i < mat.dim_fp(); ++i) basis.push_back(mat.mat_element(i));
      rep.nondegenerate = srmat::is_nondegenerate(*mat.tower(), basis).nondegenerate;
    }
  }
  return rep;
}

Code dual_of(const Code& c) {
  if (c.is_quot()) {
    const auto& ring = c.ring();
    fp::Matrix constraints = fp::mul(c.basis(), ring->gram());
    fp::Matrix k = fp::kernel(constraints);
    return Code::from_quot_basis(ring, std::move(k));
  }
  std::vector<MatTuple> basis;
  for (std::size_t i = 0; i < c.dim_fp(); ++i) basis.push_back(c.mat_element(i));
  auto dual = srmat::dual_code(c.mat_ambient(), basis);
  fp::Matrix rows(c.p(), 0, c.mat_ambient().dim_fp());
  for (const auto& d : dual) rows.append_row(c.mat_ambient().to_coords(d));
  return Code::from_mat_basis(c.mat_ambient(), std::move(rows));
}

namespace {

Code scale_quot(const Code& c, const QuotElement& u, bool require_unit, bool right) {
  const auto& ring = c.ring();
  if (require_unit && !ring->is_unit(u))
    throw std::invalid_argument("codes: scaling element is not a unit");
  fp::Matrix rows(c.p(), 0, ring->dim_fp());
  for (std::size_t i = 0; i < c.dim_fp(); ++i) {
    QuotElement x = c.quot_element(i);
    rows.append_row(ring->to_coords(right ? ring->mul(x, u) : ring->mul(u, x)));
  }
  return Code::from_quot_basis(ring, std::move(rows), c.provenance());
}

}  // namespace

Code scale_right(const Code& c, const QuotElement& u, bool require_unit) {
  return scale_quot(c, u, require_unit, true);
}

Code scale_left(const Code& c, const QuotElement& u, bool require_unit) {
  return scale_quot(c, u, require_unit, false);
}

Code scale_right_blocks(const Code& c, const MatTuple& u) {
  const auto& amb = c.mat_ambient();
  fp::Matrix rows(c.p(), 0, amb.dim_fp());
  for (std::size_t i = 0; i < c.dim_fp(); ++i) {
    MatTuple x = c.mat_element(i);
    rows.append_row(amb.to_coords(x.blockwise_mul(u)));
  }
  return Code::from_mat_basis(amb, std::move(rows), c.provenance());
}

std::optional<std::vector<std::uint8_t>> find_full_weight_codeword(const Code& c, std::uint64_t cap) {
  // scan codewords in coordinate-lexicographic order, up to the cap
  const std::uint64_t total = std::min(checked_total(c), cap);
  const int full = max_weight_of(c);
  std::optional<std::vector<std::uint8_t>> found;
  auto grab = [&](const std::vector<std::uint8_t>& digits) {
    std::vector<std::uint8_t> coords(c.ambient_dim(), 0);
    const auto& basis = c.basis();
    const int p = c.p();
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (!digits[i]) continue;
      for (std::size_t j = 0; j < coords.size(); ++j)
        coords[j] = static_cast<std::uint8_t>((coords[j] + digits[i] * basis.at(i, j)) % p);
    }
    return coords;
  };
  if (c.is_quot()) {
    QuotWalker w(c);
    w.seek(0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (idx) w.step();
      if (idx && w.weight() == full) return grab(w.digits);
    }
  } else {
    MatWalker w(c);
    w.seek(0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (idx) w.step();
      if (idx && w.weight() == full) return grab(w.digits);
    }
  }
  return found;
}

Code normalize_to_identity(const Code& c, std::uint64_t cap) {
  if (c.contains_identity()) return c;
  auto witness = find_full_weight_codeword(c, cap);
  if (!witness)
    throw std::runtime_error("codes: no full-weight codeword found within the cap");
  if (c.is_quot()) {
    QuotElement w = c.ring()->from_coords(*witness);
    return scale_right(c, c.ring()->invert(w));
  }
  MatTuple w = c.mat_ambient().from_coords(*witness);
  std::vector<FqMat> invs;
  for (int b = 0; b < w.blocks(); ++b) invs.push_back(srmat::fqm_inverse(*c.tower(), w.block(b)));
  return scale_right_blocks(c, MatTuple(c.tower(), std::move(invs)));
}

Code to_matrix_code(const Code& c) {
  const auto& ring = c.ring();
  gf::FqBasis basis(ring->tower(), ring->tower()->canonical_fq_m_basis());
  srmat::Ambient amb = ring->matrix_ambient();
  fp::Matrix rows(c.p(), 0, amb.dim_fp());
  for (std::size_t i = 0; i < c.dim_fp(); ++i)
    rows.append_row(amb.to_coords(ring->evaluate_matrices(c.quot_element(i), basis)));
  return Code::from_mat_basis(std::move(amb), std::move(rows), c.provenance());
}

Code apply_isometry_code(const Code& c, const srmat::Isometry& iso) {
  const auto& amb = c.mat_ambient();
  fp::Matrix rows(c.p(), 0, amb.dim_fp());
  for (std::size_t i = 0; i < c.dim_fp(); ++i)
    rows.append_row(amb.to_coords(srmat::apply_isometry(c.mat_element(i), iso)));
  return Code::from_mat_basis(amb, std::move(rows), c.provenance());
}

Code v_adjoint_code(const Code& c, std::span<const int> v) {
  const auto& amb = c.mat_ambient();
  srmat::Shape s = amb.shape();
  for (int i = 0; i < s.blocks(); ++i)
    if (v[static_cast<std::size_t>(i)]) std::swap(s.rows[static_cast<std::size_t>(i)], s.cols[static_cast<std::size_t>(i)]);
  srmat::Ambient out_amb(amb.tower(), std::move(s));
  fp::Matrix rows(c.p(), 0, out_amb.dim_fp());
  for (std::size_t i = 0; i < c.dim_fp(); ++i)
    rows.append_row(out_amb.to_coords(srmat::v_adjoint(c.mat_element(i), v)));
  return Code::from_mat_basis(std::move(out_amb), std::move(rows), c.provenance());
}

int subspace_linearity_exp(const Code& c) {
  if (!c.is_quot())
    throw std::invalid_argument("codes: subspace linearity is defined on the quotient ambient");
  const auto& tw = *c.tower();
  const auto& ring = c.ring();
  const int me = tw.me();
  for (int j = me; j >= 1; --j) {
    if (me % j != 0) continue;
    // generator of F_{p^j}: an element of the subfield in no proper subfield
    Fel gen = 0;
    for (Fel a : tw.subfield_elements(j)) {
      if (!a) continue;
      bool proper = false;
      for (int d = 1; d < j; ++d)
        if (j % d == 0 && tw.in_subfield(a, d)) {
          proper = true;
          break;
        }
      if (!proper) {
        gen = a;
        break;
      }
    }
    if (!gen) continue;
    bool closed = true;
    for (std::size_t i = 0; i < c.dim_fp() && closed; ++i) {
      QuotElement x = c.quot_element(i);
      QuotElement sx{x.rep.scale(gen), ring.get()};
      closed = c.contains(ring->to_coords(sx));
    }
    if (closed) return j;
  }
  return 1;
}

}  // namespace skewrank::codes
