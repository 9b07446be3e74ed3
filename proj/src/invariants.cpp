#include "skewrank/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace skewrank::inv {

using codes::CapExceeded;
using quot::QuotElement;
using srmat::FqMat;
using srmat::MatTuple;

namespace {

std::uint64_t ipow_u64(std::uint64_t b, std::size_t k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

double log2_size(int p, std::size_t k) { return static_cast<double>(k) * std::log2(p); }

}  // namespace

// ---------------------------------------------------------------------------

Subring::Subring(int p, std::string ambient_tag, fp::Matrix basis_rows, MulFn ambient_mul,
                 std::vector<std::uint8_t> ambient_identity)
    : p_(p), tag_(std::move(ambient_tag)) {
  basis_ = fp::rref(std::move(basis_rows));
  const std::size_t k = basis_.mat.rows();
  contains_identity_ = fp::in_row_space(basis_, ambient_identity);
  tensor_.assign(k, std::vector<std::vector<std::uint8_t>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto prod = ambient_mul(basis_.mat.row_span(i), basis_.mat.row_span(j));
      if (!fp::in_row_space(basis_, prod))
        throw std::logic_error("invariants: subring is not closed under multiplication");
      tensor_[i][j] = fp::coefficients_in_basis(basis_, prod);
    }
  lmul_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    fp::Matrix li(p_, k, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < k; ++r) li.set(r, j, tensor_[i][j][r]);
    lmul_.push_back(std::move(li));
  }
}

std::vector<std::uint8_t> Subring::mul_coeffs(std::span<const std::uint8_t> u,
                                              std::span<const std::uint8_t> v) const {
  const std::size_t k = dim();
  std::vector<std::uint8_t> out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (!v[j]) continue;
      const int f = u[i] * v[j] % p_;
      if (!f) continue;
      const auto& c = tensor_[i][j];
      for (std::size_t r = 0; r < k; ++r) out[r] = static_cast<std::uint8_t>((out[r] + f * c[r]) % p_);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// fingerprinting

namespace {

// forward-eliminated span with cheap membership, grown one row at a time
struct IncrementalSpan {
  int p;
  std::size_t cols;
  std::vector<std::vector<std::uint8_t>> rows;  // echelon rows
  std::vector<std::size_t> pivots;

  IncrementalSpan(int p_, std::size_t cols_) : p(p_), cols(cols_) {}

  std::vector<std::uint8_t> reduce(std::span<const std::uint8_t> v) const {
    std::vector<std::uint8_t> r(v.begin(), v.end());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint8_t f = r[pivots[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j)
        r[j] = static_cast<std::uint8_t>((r[j] + (p - f) * rows[i][j]) % p);
    }
    return r;
  }

  bool add(std::span<const std::uint8_t> v) {  // true when the span grew
    auto r = reduce(v);
    std::size_t piv = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (r[j]) {
        piv = j;
        break;
      }
    if (piv == cols) return false;
    const std::uint8_t ip = fp::inv_mod(r[piv], p);
    for (auto& x : r) x = static_cast<std::uint8_t>(x * ip % p);
    rows.push_back(std::move(r));
    pivots.push_back(piv);
    return true;
  }
};

// span of the powers u, u^2, ... inside the subring (coefficient space)
struct GeneratedAlgebra {
  std::size_t dim = 0;
  bool is_field = false;
};

GeneratedAlgebra generated_subalgebra(const Subring& s, std::span<const std::uint8_t> u) {
  GeneratedAlgebra out;
  const int p = s.p();
  const std::size_t k = s.dim();
  IncrementalSpan span(p, k);
  std::vector<std::vector<std::uint8_t>> plist;
  std::vector<std::uint8_t> cur(u.begin(), u.end());
  while (span.add(cur)) {
    plist.push_back(cur);
    cur = s.mul_coeffs(cur, u);
  }
  out.dim = plist.size();
  if (out.dim == 0) return out;  // u = 0
  // identity of F_p[u]: solve e * u = u with e in the span of the powers
  fp::Matrix cols(p, k, plist.size());
  for (std::size_t i = 0; i < plist.size(); ++i) {
    auto pu = s.mul_coeffs(plist[i], u);
    for (std::size_t r = 0; r < k; ++r) cols.set(r, i, pu[r]);
  }
  auto sol = fp::solve(cols, u);
  if (!sol) return out;  // no identity, not a field
  std::vector<std::uint8_t> e(k, 0);
  for (std::size_t i = 0; i < plist.size(); ++i)
    for (std::size_t r = 0; r < k; ++r)
      e[r] = static_cast<std::uint8_t>((e[r] + (*sol)[i] * plist[i][r]) % p);
  // minimal polynomial of u relative to e: u^dim against e, u, ..., u^{dim-1}
  fp::Matrix lower(p, k, out.dim);
  std::vector<std::uint8_t> pw = e;
  for (std::size_t i = 0; i < out.dim; ++i) {
    for (std::size_t r = 0; r < k; ++r) lower.set(r, i, pw[r]);
    pw = s.mul_coeffs(pw, u);
  }
  auto rel = fp::solve(lower, pw);  // pw = u^dim here
  if (!rel) return out;
  gf::Poly minpoly(out.dim + 1, 0);
  minpoly[out.dim] = 1;
  for (std::size_t i = 0; i < out.dim; ++i)
    minpoly[i] = static_cast<std::uint8_t>((p - (*rel)[i]) % p);
  out.is_field = gf::poly_is_irreducible(minpoly, p);
  return out;
}

// Odometer over all coefficient vectors that keeps the left-multiplication
// matrix of the current element up to date.
struct ElementScan {
  const Subring* s;
  int p;
  std::size_t k;
  std::vector<std::uint8_t> digits;
  std::vector<std::uint8_t> mu;  // k x k, row-major

  explicit ElementScan(const Subring& sub)
      : s(&sub), p(sub.p()), k(sub.dim()), digits(sub.dim(), 0), mu(sub.dim() * sub.dim(), 0) {}

  void step() {
    for (std::size_t i = k; i-- > 0;) {
      const auto& li = s->left_mult()[i];
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          mu[r * k + c] = static_cast<std::uint8_t>((mu[r * k + c] + li.at(r, c)) % p);
      if (++digits[i] < p) return;
      digits[i] = 0;
    }
  }

  bool invertible(std::vector<std::uint8_t>& scratch) const {
    scratch = mu;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < k && rank < k; ++c) {
      std::size_t sel = k;
      for (std::size_t i = rank; i < k; ++i)
        if (scratch[i * k + c]) {
          sel = i;
          break;
        }
      if (sel == k) return false;
      if (sel != rank)
        for (std::size_t j = 0; j < k; ++j) std::swap(scratch[sel * k + j], scratch[rank * k + j]);
      const std::uint8_t ip = fp::inv_mod(scratch[rank * k + c], p);
      for (std::size_t i = rank + 1; i < k; ++i) {
        const std::uint8_t f = scratch[i * k + c];
        if (!f) continue;
        const int m = f * ip % p;
        for (std::size_t j = c; j < k; ++j)
          scratch[i * k + j] =
              static_cast<std::uint8_t>((scratch[i * k + j] + (p - m) * scratch[rank * k + j]) % p);
      }
      ++rank;
    }
    return rank == k;
  }

  std::vector<std::uint8_t> apply(std::span<const std::uint8_t> v) const {
    std::vector<std::uint8_t> out(k, 0);
    for (std::size_t r = 0; r < k; ++r) {
      int acc = 0;
      for (std::size_t c = 0; c < k; ++c) acc += mu[r * k + c] * v[c];
      out[r] = static_cast<std::uint8_t>(acc % p);
    }
    return out;
  }
};

bool is_zero_vec(std::span<const std::uint8_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

std::optional<std::vector<std::uint8_t>> own_identity(const Subring& s,
                                                      const std::vector<std::vector<std::uint8_t>>& idempotents) {
  const std::size_t k = s.dim();
  for (const auto& e : idempotents) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      std::vector<std::uint8_t> unit(k, 0);
      unit[j] = 1;
      ok = s.mul_coeffs(e, unit) == unit && s.mul_coeffs(unit, e) == unit;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

RingFingerprint fingerprint(const Subring& s, std::uint64_t cap) {
  RingFingerprint fpr;
  const int p = s.p();
  const std::size_t k = s.dim();
  fpr.size_exp = k;
  if (k == 0) {
    fpr.decomposition_complete = true;
    return fpr;
  }
  // commutativity on all basis pairs
  for (std::size_t i = 0; i < k && fpr.commutative; ++i)
    for (std::size_t j = i + 1; j < k && fpr.commutative; ++j) {
      std::vector<std::uint8_t> u(k, 0), v(k, 0);
      u[i] = 1;
      v[j] = 1;
      fpr.commutative = s.mul_coeffs(u, v) == s.mul_coeffs(v, u);
    }

  const bool within_cap = log2_size(p, k) <= std::log2(static_cast<double>(cap));

  // single-generator shortcut: a generator with irreducible minimal
  // polynomial of full degree proves the whole ring is a field
  if (fpr.commutative) {
    std::vector<std::vector<std::uint8_t>> cands;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::uint8_t> u(k, 0);
      u[i] = 1;
      cands.push_back(u);
    }
    for (std::size_t i = 0; i < k && cands.size() < 64; ++i)
      for (std::size_t j = i + 1; j < k && cands.size() < 64; ++j) {
        std::vector<std::uint8_t> u(k, 0);
        u[i] = 1;
        u[j] = 1;
        cands.push_back(u);
      }
    for (const auto& u : cands) {
      GeneratedAlgebra g = generated_subalgebra(s, u);
      if (g.dim == k && g.is_field) {
        fpr.is_field = true;
        fpr.residue_exps = {k};
        fpr.decomposition_complete = true;
        fpr.max_subfield_exp = k;
        return fpr;
      }
    }
  } else {
    fpr.is_field = false;  // a finite field is commutative
  }

  std::vector<std::vector<std::uint8_t>> idempotents;
  if (fpr.commutative && within_cap) {
    const std::uint64_t total = ipow_u64(static_cast<std::uint64_t>(p), k);
    ElementScan scan(s);
    std::vector<std::uint8_t> scratch;
    bool all_invertible = true;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      scan.step();
      if (all_invertible && !scan.invertible(scratch)) all_invertible = false;
      if (scan.apply(scan.digits) == scan.digits) idempotents.push_back(scan.digits);
    }
    fpr.is_field = all_invertible;
  } else if (fpr.commutative) {
    fpr.field_checked = false;  // beyond the exhaustive cap
  }

  if (fpr.is_field) {
    fpr.residue_exps = {k};
    fpr.decomposition_complete = true;
    fpr.max_subfield_exp = k;
    return fpr;
  }

  // idempotent splitting for commutative rings inside the cap; the
  // primitivity filter is quadratic in the idempotent count, so very
  // splintered rings are left undecomposed
  if (fpr.commutative && within_cap && idempotents.size() <= 4096) {
    auto one = own_identity(s, idempotents);
    if (one) {
      std::vector<std::vector<std::uint8_t>> prim;
      for (const auto& e : idempotents) {
        if (is_zero_vec(e)) continue;
        bool minimal = true;
        for (const auto& f : idempotents) {
          if (is_zero_vec(f) || f == e) continue;
          if (s.mul_coeffs(e, f) == f) {
            minimal = false;
            break;
          }
        }
        if (minimal) prim.push_back(e);
      }
      bool ok = !prim.empty();
      // pairwise orthogonal and summing to the identity
      std::vector<std::uint8_t> sum(k, 0);
      for (std::size_t i = 0; i < prim.size() && ok; ++i) {
        for (std::size_t j = 0; j < k; ++j)
          sum[j] = static_cast<std::uint8_t>((sum[j] + prim[i][j]) % p);
        for (std::size_t j = i + 1; j < prim.size() && ok; ++j)
          ok = is_zero_vec(s.mul_coeffs(prim[i], prim[j]));
      }
      ok = ok && sum == *one;
      std::vector<std::size_t> res;
      std::size_t dim_sum = 0;
      for (std::size_t i = 0; i < prim.size() && ok; ++i) {
        // factor e_i S
        fp::Matrix rows(p, 0, k);
        for (std::size_t j = 0; j < k; ++j) {
          std::vector<std::uint8_t> unit(k, 0);
          unit[j] = 1;
          rows.append_row(s.mul_coeffs(prim[i], unit));
        }
        fp::Rref fr = fp::rref(std::move(rows));
        const std::size_t d = fr.mat.rows();
        // the factor is a field iff multiplication by every nonzero factor
        // element is injective on the factor
        const std::uint64_t ftotal = ipow_u64(static_cast<std::uint64_t>(p), d);
        bool field = d > 0;
        for (std::uint64_t idx = 1; idx < ftotal && field; ++idx) {
          std::vector<std::uint8_t> y(d);
          std::uint64_t v = idx;
          for (std::size_t t2 = d; t2-- > 0;) {
            y[t2] = static_cast<std::uint8_t>(v % p);
            v /= p;
          }
          std::vector<std::uint8_t> x(k, 0);
          for (std::size_t l = 0; l < d; ++l)
            for (std::size_t r = 0; r < k; ++r)
              x[r] = static_cast<std::uint8_t>((x[r] + y[l] * fr.mat.at(l, r)) % p);
          fp::Matrix mulmat(p, k, d);
          for (std::size_t l = 0; l < d; ++l) {
            auto prod = s.mul_coeffs(x, fr.mat.row_span(l));
            for (std::size_t r = 0; r < k; ++r) mulmat.set(r, l, prod[r]);
          }
          field = fp::rank(mulmat) == d;
        }
        ok = ok && field;
        res.push_back(d);
        dim_sum += d;
      }
      if (ok && dim_sum == k) {
        std::sort(res.begin(), res.end());
        fpr.residue_exps = std::move(res);
        fpr.decomposition_complete = true;
      }
    }
  }

  // maximal embedded subfield by scanning generated subalgebras
  if (within_cap) {
    const std::uint64_t total = ipow_u64(static_cast<std::uint64_t>(p), k);
    ElementScan scan(s);
    std::size_t best = 0;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      scan.step();
      GeneratedAlgebra g = generated_subalgebra(s, scan.digits);
      if (g.is_field) best = std::max(best, g.dim);
    }
    fpr.max_subfield_exp = best;
  } else {
    std::size_t best = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::uint8_t> u(k, 0);
      u[i] = 1;
      GeneratedAlgebra g = generated_subalgebra(s, u);
      if (g.is_field) best = std::max(best, g.dim);
    }
    fpr.max_subfield_exp = best;
    fpr.max_subfield_exact = false;
  }
  return fpr;
}

std::string fingerprint_mismatch(const RingFingerprint& a, const RingFingerprint& b) {
  if (a.size_exp != b.size_exp) return "size";
  if (a.commutative != b.commutative) return "commutative";
  if (a.field_checked && b.field_checked && a.is_field != b.is_field) return "is-field";
  if (a.decomposition_complete && b.decomposition_complete && a.residue_exps != b.residue_exps)
    return "residue-fields";
  if (a.max_subfield_exact && b.max_subfield_exact && a.max_subfield_exp != b.max_subfield_exp)
    return "max-subfield";
  return {};
}

// ---------------------------------------------------------------------------
// solvers

namespace {

Subring::MulFn quot_mul_fn(const quot::RingPtr& ring) {
  return [ring](std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
    return ring->to_coords(ring->mul(ring->from_coords(u), ring->from_coords(v)));
  };
}

Subring::MulFn pi_mul_fn(const srmat::Ambient& amb, std::vector<int> s) {
  return [amb, s](std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
    MatTuple a = amb.from_coords(u), b = amb.from_coords(v);
    const auto& tw = *amb.tower();
    std::vector<FqMat> out;
    for (int i = 0; i < a.blocks(); ++i)
      out.push_back(s[static_cast<std::size_t>(i)] ? srmat::fqm_mul(tw, a.block(i), b.block(i))
                                                   : srmat::fqm_mul(tw, b.block(i), a.block(i)));
    return amb.to_coords(MatTuple(amb.tower(), std::move(out)));
  };
}

std::string pattern_of(std::span<const int> s) {
  std::string out;
  for (int b : s) out += b ? '1' : '0';
  return out;
}

Subring quot_idealiser(const Code& c, bool left) {
  const auto& ring = c.ring();
  const std::size_t d = ring->dim_fp();
  const auto& rr = c.basis_rref();
  fp::Matrix constraints(c.p(), 0, d);
  std::vector<std::uint8_t> unit(d, 0);
  std::vector<QuotElement> gens(d, ring->zero());
  for (std::size_t j = 0; j < d; ++j) {
    unit[j] = 1;
    gens[j] = ring->from_coords(unit);
    unit[j] = 0;
  }
  for (std::size_t i = 0; i < c.dim_fp(); ++i) {
    QuotElement cw = c.quot_element(i);
    fp::Matrix block(c.p(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
      QuotElement prod = left ? ring->mul(gens[j], cw) : ring->mul(cw, gens[j]);
      auto res = fp::reduce_row(rr, ring->to_coords(prod));
      for (std::size_t r = 0; r < d; ++r) block.set(r, j, res[r]);
    }
    for (std::size_t r = 0; r < d; ++r) constraints.append_row(block.row_span(r));
  }
  fp::Matrix kern = fp::kernel(constraints);
  return Subring(c.p(), left ? "quotient-left" : "quotient-right", std::move(kern),
                 quot_mul_fn(ring), ring->to_coords(ring->one()));
}

}  // namespace

Subring s_idealiser(const Code& c, std::span<const int> s) {
  if (c.is_quot()) throw std::invalid_argument("invariants: s-idealiser needs the matrix ambient");
  const auto& amb = c.mat_ambient();
  const auto& tw = *amb.tower();
  const auto& shape = amb.shape();
  const int t = shape.blocks();
  if (static_cast<int>(s.size()) != t) throw std::invalid_argument("invariants: pattern length mismatch");
  srmat::Shape pi_shape;
  for (int i = 0; i < t; ++i) {
    const int n = s[static_cast<std::size_t>(i)] ? shape.rows[static_cast<std::size_t>(i)]
                                                 : shape.cols[static_cast<std::size_t>(i)];
    pi_shape.rows.push_back(n);
    pi_shape.cols.push_back(n);
  }
  srmat::Ambient pi(amb.tower(), pi_shape);
  const std::size_t du = pi.dim_fp(), dc = amb.dim_fp();
  const auto& rr = c.basis_rref();
  // unknown tuple A acts on codeword C as A_i C_i (s_i = 1) or C_i A_i (s_i = 0)
  fp::Matrix constraints(c.p(), 0, du);
  std::vector<std::uint8_t> unit(du, 0);
  for (std::size_t i = 0; i < c.dim_fp(); ++i) {
    MatTuple cw = c.mat_element(i);
    fp::Matrix block(c.p(), dc, du);
    for (std::size_t j = 0; j < du; ++j) {
      unit[j] = 1;
      MatTuple a = pi.from_coords(unit);
      unit[j] = 0;
      std::vector<FqMat> acted;
      for (int b = 0; b < t; ++b)
        acted.push_back(s[static_cast<std::size_t>(b)]
                            ? srmat::fqm_mul(tw, a.block(b), cw.block(b))
                            : srmat::fqm_mul(tw, cw.block(b), a.block(b)));
      auto res = fp::reduce_row(rr, amb.to_coords(MatTuple(amb.tower(), std::move(acted))));
      for (std::size_t r = 0; r < dc; ++r) block.set(r, j, res[r]);
    }
    for (std::size_t r = 0; r < dc; ++r) constraints.append_row(block.row_span(r));
  }
  fp::Matrix kern = fp::kernel(constraints);
  std::vector<int> svec(s.begin(), s.end());
  return Subring(c.p(), "pi_s[" + pattern_of(s) + "]", std::move(kern), pi_mul_fn(pi, svec),
                 pi.to_coords(MatTuple::identity_tuple(amb.tower(), pi_shape)));
}

Subring left_idealiser(const Code& c) {
  if (c.is_quot()) return quot_idealiser(c, true);
  std::vector<int> s(static_cast<std::size_t>(c.mat_ambient().shape().blocks()), 1);
  return s_idealiser(c, s);
}

Subring right_idealiser(const Code& c) {
  if (c.is_quot()) return quot_idealiser(c, false);
  std::vector<int> s(static_cast<std::size_t>(c.mat_ambient().shape().blocks()), 0);
  return s_idealiser(c, s);
}

Subring centraliser(const Code& c) {
  if (!c.contains_identity())
    throw std::invalid_argument(
        "invariants: centraliser requires the identity in C; normalize the code first");
  if (c.is_quot()) {
    const auto& ring = c.ring();
    const std::size_t d = ring->dim_fp();
    fp::Matrix constraints(c.p(), 0, d);
    std::vector<std::uint8_t> unit(d, 0);
    for (std::size_t i = 0; i < c.dim_fp(); ++i) {
      QuotElement cw = c.quot_element(i);
      fp::Matrix block(c.p(), d, d);
      for (std::size_t j = 0; j < d; ++j) {
        unit[j] = 1;
        QuotElement g = ring->from_coords(unit);
        unit[j] = 0;
        auto comm = ring->to_coords(ring->sub(ring->mul(g, cw), ring->mul(cw, g)));
        for (std::size_t r = 0; r < d; ++r) block.set(r, j, comm[r]);
      }
      for (std::size_t r = 0; r < d; ++r) constraints.append_row(block.row_span(r));
    }
    fp::Matrix kern = fp::kernel(constraints);
    return Subring(c.p(), "quotient-centraliser", std::move(kern), quot_mul_fn(ring),
                   ring->to_coords(ring->one()));
  }
  const auto& amb = c.mat_ambient();
  const auto& tw = *amb.tower();
  if (!amb.shape().square())
    throw std::invalid_argument("invariants: centraliser requires square blocks");
  const std::size_t d = amb.dim_fp();
  fp::Matrix constraints(c.p(), 0, d);
  std::vector<std::uint8_t> unit(d, 0);
  for (std::size_t i = 0; i < c.dim_fp(); ++i) {
    MatTuple cw = c.mat_element(i);
    fp::Matrix block(c.p(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
      unit[j] = 1;
      MatTuple g = amb.from_coords(unit);
      unit[j] = 0;
      std::vector<FqMat> comm;
      for (int b = 0; b < cw.blocks(); ++b)
        comm.push_back(srmat::fqm_sub(tw, srmat::fqm_mul(tw, g.block(b), cw.block(b)),
                                      srmat::fqm_mul(tw, cw.block(b), g.block(b))));
      auto cc = amb.to_coords(MatTuple(amb.tower(), std::move(comm)));
      for (std::size_t r = 0; r < d; ++r) block.set(r, j, cc[r]);
    }
    for (std::size_t r = 0; r < d; ++r) constraints.append_row(block.row_span(r));
  }
  fp::Matrix kern = fp::kernel(constraints);
  std::vector<int> ones(static_cast<std::size_t>(amb.shape().blocks()), 1);
  return Subring(c.p(), "mat-centraliser", std::move(kern), pi_mul_fn(amb, ones),
                 amb.to_coords(MatTuple::identity_tuple(amb.tower(), amb.shape())));
}

Subring center(const Code& c) {
  Subring il = left_idealiser(c);
  Subring ce = centraliser(c);
  fp::Matrix inter = fp::row_space_intersection(il.basis(), ce.basis());
  if (c.is_quot())
    return Subring(c.p(), "quotient-center", std::move(inter), quot_mul_fn(c.ring()),
                   c.ring()->to_coords(c.ring()->one()));
  const auto& amb = c.mat_ambient();
  std::vector<int> ones(static_cast<std::size_t>(amb.shape().blocks()), 1);
  return Subring(c.p(), "mat-center", std::move(inter), pi_mul_fn(amb, ones),
                 amb.to_coords(MatTuple::identity_tuple(amb.tower(), amb.shape())));
}

NuclearParameters nuclear_parameters(const Code& c, std::uint64_t ring_cap, std::uint64_t enum_cap) {
  Code normalized = c.contains_identity() ? c : codes::normalize_to_identity(c, enum_cap);
  NuclearParameters np;
  np.code_size_exp = c.dim_fp();
  Subring il = left_idealiser(normalized);
  Subring ir = right_idealiser(normalized);
  Subring ce = centraliser(normalized);
  fp::Matrix inter = fp::row_space_intersection(il.basis(), ce.basis());
  Subring z = center(normalized);
  np.center_is_intersection = inter == z.basis();
  np.left = fingerprint(il, ring_cap);
  np.right = fingerprint(ir, ring_cap);
  np.centraliser = fingerprint(ce, ring_cap);
  np.center = fingerprint(z, ring_cap);
  return np;
}

LinearityDegree linearity_degree(const Code& c, std::uint64_t cap) {
  Subring il = left_idealiser(c);
  RingFingerprint f = fingerprint(il, cap);
  return {f.max_subfield_exp, f.max_subfield_exact};
}

// ---------------------------------------------------------------------------

DistinguishResult distinguish(const Code& a, const Code& b, const DistinguishOptions& opt) {
  DistinguishResult res;
  Code ma = a.is_quot() ? codes::to_matrix_code(a) : a;
  Code mb = b.is_quot() ? codes::to_matrix_code(b) : b;
  const auto& ta = *ma.tower();
  const auto& tb = *mb.tower();
  if (ta.p() != tb.p() || ta.e() != tb.e() || !(ma.mat_ambient().shape() == mb.mat_ambient().shape())) {
    res.verdict = Verdict::inequivalent;
    res.witness = "ambient-parameters";
    res.detail = "the codes live in different ambient spaces";
    return res;
  }
  if (a.dim_fp() != b.dim_fp()) {
    res.verdict = Verdict::inequivalent;
    res.witness = "code-size";
    res.detail = "log_p sizes " + std::to_string(a.dim_fp()) + " vs " + std::to_string(b.dim_fp());
    return res;
  }
  if (opt.compare_weights) {
    try {
      auto wa = codes::weight_distribution(a, opt.enum_cap, opt.workers);
      auto wb = codes::weight_distribution(b, opt.enum_cap, opt.workers);
      if (wa.weights != wb.weights) {
        res.verdict = Verdict::inequivalent;
        res.witness = "weight-distribution";
        return res;
      }
    } catch (const CapExceeded&) {
      res.notes.push_back("weight distribution skipped: enumeration cap exceeded");
    }
  }
  const int t = ma.mat_ambient().shape().blocks();
  // the all-ones (left) pattern first, then descending
  for (int mask = (1 << t) - 1; mask >= 0; --mask) {
    std::vector<int> s(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) s[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    RingFingerprint fa = fingerprint(s_idealiser(ma, s), opt.ring_cap);
    RingFingerprint fb = fingerprint(s_idealiser(mb, s), opt.ring_cap);
    const std::string tag = "s-idealiser[" + pattern_of(s) + "]";
    res.fingerprints_a.emplace_back(tag, fa);
    res.fingerprints_b.emplace_back(tag, fb);
    const std::string field = fingerprint_mismatch(fa, fb);
    if (!field.empty()) {
      res.verdict = Verdict::inequivalent;
      res.witness = tag;
      res.detail = field + " differs (p-exponents " + std::to_string(fa.size_exp) + " vs " +
                   std::to_string(fb.size_exp) + ")";
      return res;
    }
  }
  try {
    Code na = ma.contains_identity() ? ma : codes::normalize_to_identity(ma, opt.enum_cap);
    Code nb = mb.contains_identity() ? mb : codes::normalize_to_identity(mb, opt.enum_cap);
    RingFingerprint ca = fingerprint(centraliser(na), opt.ring_cap);
    RingFingerprint cb = fingerprint(centraliser(nb), opt.ring_cap);
    res.fingerprints_a.emplace_back("centraliser", ca);
    res.fingerprints_b.emplace_back("centraliser", cb);
    std::string field = fingerprint_mismatch(ca, cb);
    if (!field.empty()) {
      res.verdict = Verdict::inequivalent;
      res.witness = "centraliser";
      res.detail = field + " differs";
      return res;
    }
    RingFingerprint za = fingerprint(center(na), opt.ring_cap);
    RingFingerprint zb = fingerprint(center(nb), opt.ring_cap);
    res.fingerprints_a.emplace_back("center", za);
    res.fingerprints_b.emplace_back("center", zb);
    field = fingerprint_mismatch(za, zb);
    if (!field.empty()) {
      res.verdict = Verdict::inequivalent;
      res.witness = "center";
      res.detail = field + " differs";
      return res;
    }
  } catch (const std::exception& ex) {
    res.notes.push_back(std::string("centraliser/center skipped: ") + ex.what());
  }
  {
    LinearityDegree la = linearity_degree(ma, opt.ring_cap);
    LinearityDegree lb = linearity_degree(mb, opt.ring_cap);
    if (la.exact && lb.exact && la.exp != lb.exp) {
      res.verdict = Verdict::inequivalent;
      res.witness = "linearity-degree";
      res.detail = "p-exponents " + std::to_string(la.exp) + " vs " + std::to_string(lb.exp);
      return res;
    }
  }
  res.verdict = Verdict::undetermined;
  res.detail = "all computed invariants agree";
  return res;
}

}  // namespace skewrank::inv
