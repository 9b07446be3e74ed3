#include "skewrank/gf.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace skewrank::gf {

namespace {

std::uint64_t ipow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

Poly poly_trim(Poly f) {
  f.resize(static_cast<std::size_t>(poly_deg(f) + 1));
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint8_t>((c[i + j] + a[i] * b[j]) % p);
  }
  return poly_trim(std::move(c));
}

Poly poly_rem(Poly a, const Poly& b, int p) {
  const int db = poly_deg(b);
  if (db < 0) throw std::invalid_argument("gf: polynomial division by zero");
  const std::uint8_t ilead = fp::inv_mod(b[static_cast<std::size_t>(db)], p);
  int da = poly_deg(a);
  while (da >= db) {
    const std::uint8_t c = static_cast<std::uint8_t>(a[static_cast<std::size_t>(da)] * ilead % p);
    const int shift = da - db;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(i + shift)] = static_cast<std::uint8_t>(
          (a[static_cast<std::size_t>(i + shift)] + (p - c) * b[static_cast<std::size_t>(i)]) % p);
    da = poly_deg(a);
  }
  return poly_trim(std::move(a));
}

bool poly_is_irreducible(const Poly& f, int p) {
  const int d = poly_deg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // trial division by every monic polynomial of degree 1..d/2
  for (int k = 1; 2 * k <= d; ++k) {
    Poly g(static_cast<std::size_t>(k) + 1, 0);
    g[static_cast<std::size_t>(k)] = 1;
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(k), 0);
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(p), k);
    for (std::uint64_t it = 0; it < total; ++it) {
      for (int i = 0; i < k; ++i) g[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i)];
      if (poly_deg(poly_rem(f, g, p)) < 0) return false;
      for (int i = k - 1; i >= 0; --i) {  // lex odometer, last digit fastest
        if (++digits[static_cast<std::size_t>(i)] < p) break;
        digits[static_cast<std::size_t>(i)] = 0;
      }
    }
  }
  return true;
}

Poly canonical_irreducible(int p, int degree) {
  if (degree < 1) throw std::invalid_argument("gf: modulus degree must be positive");
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  f[static_cast<std::size_t>(degree)] = 1;
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(degree), 0);
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(p), degree);
  for (std::uint64_t it = 0; it < total; ++it) {
    for (int i = 0; i < degree; ++i) f[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i)];
    if (poly_is_irreducible(f, p)) return f;
    for (int i = degree - 1; i >= 0; --i) {
      if (++digits[static_cast<std::size_t>(i)] < p) break;
      digits[static_cast<std::size_t>(i)] = 0;
    }
  }
  throw std::logic_error("gf: no irreducible polynomial found");
}

// ---------------------------------------------------------------------------

SubfieldCoords::SubfieldCoords(const FieldTower* tw, int s) : tw_(tw) {
  basis_ = tw->subfield_basis(s);
  const int me = tw->me();
  fp::Matrix bt(tw->p(), 0, static_cast<std::size_t>(me));
  for (Fel b : basis_) bt.append_row(tw->coords(b));
  fp::Rref rr = fp::rref(bt);
  pivot_rows_.assign(rr.pivots.begin(), rr.pivots.end());
  // basis rows restricted to pivot coordinates form an invertible block
  fp::Matrix sub(tw->p(), basis_.size(), basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto c = tw->coords(basis_[i]);
    for (std::size_t j = 0; j < pivot_rows_.size(); ++j) sub.set(j, i, c[pivot_rows_[j]]);
  }
  solve_ = fp::inverse(sub);
}

std::vector<std::uint8_t> SubfieldCoords::to_coords(Fel a) const {
  auto c = tw_->coords(a);
  fp::Matrix v(tw_->p(), pivot_rows_.size(), 1);
  for (std::size_t j = 0; j < pivot_rows_.size(); ++j) v.set(j, 0, c[pivot_rows_[j]]);
  fp::Matrix x = fp::mul(solve_, v);
  std::vector<std::uint8_t> out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = x.at(i, 0);
  // reject elements outside the subfield
  Fel back = from_coords(out);
  if (back != a) throw std::invalid_argument("gf: element not in subfield");
  return out;
}

Fel SubfieldCoords::from_coords(std::span<const std::uint8_t> c) const {
  Fel acc = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Fel term = basis_[i];
    Fel scaled = 0;
    for (int k = 0; k < c[i]; ++k) scaled = tw_->add(scaled, term);
    acc = tw_->add(acc, scaled);
  }
  return acc;
}

// ---------------------------------------------------------------------------

FqBasis::FqBasis(TowerPtr tw, std::vector<Fel> elems) : tw_(std::move(tw)), elems_(std::move(elems)) {
  const int m = tw_->m(), e = tw_->e(), me = tw_->me();
  if (static_cast<int>(elems_.size()) != m)
    throw std::invalid_argument("gf: F_q-basis must have m elements");
  fp::Matrix mat(tw_->p(), static_cast<std::size_t>(me), static_cast<std::size_t>(me));
  const auto& u = tw_->fq_basis();
  for (int r = 0; r < m; ++r)
    for (int l = 0; l < e; ++l) {
      auto c = tw_->coords(tw_->mul(elems_[static_cast<std::size_t>(r)], u[static_cast<std::size_t>(l)]));
      for (int row = 0; row < me; ++row)
        mat.set(static_cast<std::size_t>(row), static_cast<std::size_t>(r * e + l), c[static_cast<std::size_t>(row)]);
    }
  try {
    inv_ = fp::inverse(mat);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("gf: basis is dependent over F_q");
  }
}

std::vector<Fel> FqBasis::to_fq_coords(Fel v) const {
  const int m = tw_->m(), e = tw_->e(), me = tw_->me();
  auto c = tw_->coords(v);
  fp::Matrix col(tw_->p(), static_cast<std::size_t>(me), 1);
  for (int i = 0; i < me; ++i) col.set(static_cast<std::size_t>(i), 0, c[static_cast<std::size_t>(i)]);
  fp::Matrix x = fp::mul(inv_, col);
  const auto& u = tw_->fq_basis();
  std::vector<Fel> out(static_cast<std::size_t>(m), 0);
  for (int r = 0; r < m; ++r) {
    Fel acc = 0;
    for (int l = 0; l < e; ++l) {
      Fel term = u[static_cast<std::size_t>(l)];
      for (int k = 0; k < x.at(static_cast<std::size_t>(r * e + l), 0); ++k) acc = tw_->add(acc, term);
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

Fel FqBasis::from_fq_coords(std::span<const Fel> c) const {
  Fel acc = 0;
  for (std::size_t r = 0; r < elems_.size(); ++r)
    acc = tw_->add(acc, tw_->mul(c[r], elems_[r]));
  return acc;
}

// ---------------------------------------------------------------------------

TowerPtr FieldTower::build(int p, int e, int m, int theta_exponent,
                           std::optional<Poly> modulus_q, std::optional<Poly> modulus_qm) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("gf: p must be prime");
  if (p > 251) throw std::invalid_argument("gf: characteristic beyond supported bound (p <= 251)");
  if (e < 1 || m < 2) throw std::invalid_argument("gf: require e >= 1 and m >= 2");
  if (std::gcd(theta_exponent % m, m) != 1)
    throw std::invalid_argument("gf: gcd(theta_exponent, m) must be 1");
  const int me = m * e;
  std::uint64_t n64 = ipow(static_cast<std::uint64_t>(p), me);
  if (n64 > kSizeCap) throw std::invalid_argument("gf: field size cap exceeded (2^20)");

  auto tw = std::shared_ptr<FieldTower>(new FieldTower());
  tw->p_ = p;
  tw->e_ = e;
  tw->m_ = m;
  tw->me_ = me;
  tw->j_ = ((theta_exponent % m) + m) % m;
  tw->q_ = ipow(static_cast<std::uint64_t>(p), e);
  tw->n_ = static_cast<std::uint32_t>(n64);

  if (modulus_q) {
    Poly f = poly_trim(*modulus_q);
    if (poly_deg(f) != e || f.back() != 1) throw std::invalid_argument("gf: modulus_q must be monic of degree e");
    if (!poly_is_irreducible(f, p)) throw std::invalid_argument("gf: modulus_q is reducible");
    tw->mod_q_ = std::move(f);
  } else {
    tw->mod_q_ = canonical_irreducible(p, e);
  }
  if (modulus_qm) {
    Poly f = poly_trim(*modulus_qm);
    if (poly_deg(f) != me || f.back() != 1)
      throw std::invalid_argument("gf: modulus_qm must be monic of degree m*e");
    if (!poly_is_irreducible(f, p)) throw std::invalid_argument("gf: modulus_qm is reducible");
    tw->mod_qm_ = std::move(f);
  } else {
    tw->mod_qm_ = canonical_irreducible(p, me);
  }

  const std::uint32_t n = tw->n_;

  // negation
  tw->neg_tab_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t v = a, r = 0, mult = 1;
    for (int i = 0; i < me; ++i) {
      const std::uint32_t d = v % static_cast<std::uint32_t>(p);
      v /= static_cast<std::uint32_t>(p);
      r += ((static_cast<std::uint32_t>(p) - d) % p) * mult;
      mult *= static_cast<std::uint32_t>(p);
    }
    tw->neg_tab_[a] = r;
  }

  // discrete-log tables from a multiplicative generator
  const std::uint64_t order = n - 1;
  auto factors = prime_factors(order);
  Fel gen = 0;
  for (Fel cand = 2; cand < n; ++cand) {
    bool ok = true;
    for (auto f : factors) {
      // cand^(order/f) via square-and-multiply on the polynomial kernel
      std::uint64_t k = order / f;
      Fel r = 1, b = cand;
      while (k) {
        if (k & 1) r = tw->mul_poly(r, b);
        b = tw->mul_poly(b, b);
        k >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (!gen) throw std::logic_error("gf: no multiplicative generator found");
  tw->exp_.resize(2 * order);
  tw->log_.assign(n, 0);
  Fel cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    tw->exp_[i] = cur;
    tw->log_[cur] = static_cast<Fel>(i);
    cur = tw->mul_poly(cur, gen);
  }
  if (cur != 1) throw std::logic_error("gf: generator order mismatch");
  for (std::uint64_t i = 0; i < order; ++i) tw->exp_[order + i] = tw->exp_[i];

  // addition table for small fields
  if (n <= 1024 && p != 2) {
    tw->add_tab_.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        tw->add_tab_[static_cast<std::size_t>(a) * n + b] = tw->add_slow(a, b);
  }

  // Frobenius a -> a^p and the theta powers
  tw->frob_tab_.resize(n);
  tw->frob_tab_[0] = 0;
  for (std::uint32_t a = 1; a < n; ++a)
    tw->frob_tab_[a] = tw->exp_[static_cast<std::uint64_t>(tw->log_[a]) * p % order];
  tw->theta_mult_.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    // q^(j k) mod order
    std::uint64_t t = 1;
    for (int i = 0; i < tw->j_ * k * e; ++i) t = t * p % order;
    tw->theta_mult_[static_cast<std::size_t>(k)] = t;
  }
  if (n <= (1u << 16)) {
    tw->theta_tab_.assign(static_cast<std::size_t>(m), std::vector<Fel>(n, 0));
    for (int k = 0; k < m; ++k)
      for (std::uint32_t a = 1; a < n; ++a)
        tw->theta_tab_[static_cast<std::size_t>(k)][a] =
            tw->exp_[static_cast<std::uint64_t>(tw->log_[a]) * tw->theta_mult_[static_cast<std::size_t>(k)] % order];
  }

  // theta^m must be the identity on all of F_{q^m}
  for (std::uint32_t a = 1; a < n; ++a)
    if (tw->theta(a, m) != a) throw std::logic_error("gf: theta^m is not the identity");

  tw->fq_basis_ = tw->subfield_basis(e);
  tw->fq_coords_ = SubfieldCoords(tw.get(), e);

  // canonical F_q-basis of F_{q^m}: greedy over element indices
  {
    fp::Matrix span(p, 0, static_cast<std::size_t>(me));
    fp::Rref rr = fp::rref(span);
    std::vector<Fel> basis;
    for (std::uint32_t a = 1; a < n && static_cast<int>(basis.size()) < m; ++a) {
      auto c = tw->coords(a);
      if (fp::in_row_space(rr, c)) continue;
      basis.push_back(a);
      for (Fel u : tw->fq_basis_) span.append_row(tw->coords(tw->mul(a, u)));
      rr = fp::rref(span);
    }
    if (static_cast<int>(basis.size()) != m) throw std::logic_error("gf: F_q-basis search failed");
    tw->fqm_basis_ = std::move(basis);
  }

  return tw;
}

Fel FieldTower::add_slow(Fel a, Fel b) const {
  Fel r = 0, mult = 1;
  for (int i = 0; i < me_; ++i) {
    const Fel da = a % static_cast<Fel>(p_), db = b % static_cast<Fel>(p_);
    a /= static_cast<Fel>(p_);
    b /= static_cast<Fel>(p_);
    r += ((da + db) % static_cast<Fel>(p_)) * mult;
    mult *= static_cast<Fel>(p_);
  }
  return r;
}

Fel FieldTower::mul_poly(Fel a, Fel b) const {
  // schoolbook product modulo mod_qm_, independent of the log tables
  std::vector<std::uint32_t> prod(static_cast<std::size_t>(2 * me_ - 1), 0);
  std::vector<std::uint8_t> da(static_cast<std::size_t>(me_)), db(static_cast<std::size_t>(me_));
  for (int i = 0; i < me_; ++i) {
    da[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a % static_cast<Fel>(p_));
    a /= static_cast<Fel>(p_);
    db[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b % static_cast<Fel>(p_));
    b /= static_cast<Fel>(p_);
  }
  for (int i = 0; i < me_; ++i) {
    if (!da[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < me_; ++j)
      prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
  }
  for (auto& x : prod) x %= static_cast<std::uint32_t>(p_);
  // reduce by the monic modulus
  for (int d = 2 * me_ - 2; d >= me_; --d) {
    const std::uint32_t c = prod[static_cast<std::size_t>(d)];
    if (!c) continue;
    prod[static_cast<std::size_t>(d)] = 0;
    for (int i = 0; i < me_; ++i) {
      auto& slot = prod[static_cast<std::size_t>(d - me_ + i)];
      slot = (slot + c * (static_cast<std::uint32_t>(p_) - mod_qm_[static_cast<std::size_t>(i)])) %
             static_cast<std::uint32_t>(p_);
    }
  }
  Fel r = 0, mult = 1;
  for (int i = 0; i < me_; ++i) {
    r += prod[static_cast<std::size_t>(i)] * mult;
    mult *= static_cast<Fel>(p_);
  }
  return r;
}

Fel FieldTower::inv(Fel a) const {
  if (!a) throw std::invalid_argument("gf: inverse of zero");
  return exp_[(n_ - 1) - log_[a]];
}

Fel FieldTower::pow(Fel a, std::uint64_t k) const {
  if (!a) return k == 0 ? 1 : 0;
  const std::uint64_t order = n_ - 1;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (k % order) % order];
}

std::vector<std::uint8_t> FieldTower::coords(Fel a) const {
  std::vector<std::uint8_t> c(static_cast<std::size_t>(me_));
  for (int i = 0; i < me_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a % static_cast<Fel>(p_));
    a /= static_cast<Fel>(p_);
  }
  return c;
}

Fel FieldTower::from_coords(std::span<const std::uint8_t> c) const {
  if (static_cast<int>(c.size()) != me_) throw std::invalid_argument("gf: coordinate length mismatch");
  Fel r = 0, mult = 1;
  for (int i = 0; i < me_; ++i) {
    if (c[static_cast<std::size_t>(i)] >= p_) throw std::invalid_argument("gf: coordinate out of range");
    r += c[static_cast<std::size_t>(i)] * mult;
    mult *= static_cast<Fel>(p_);
  }
  return r;
}

bool FieldTower::lex_less(Fel a, Fel b) const {
  for (int i = 0; i < me_; ++i) {
    const Fel da = a % static_cast<Fel>(p_), db = b % static_cast<Fel>(p_);
    if (da != db) return da < db;
    a /= static_cast<Fel>(p_);
    b /= static_cast<Fel>(p_);
  }
  return false;
}

Fel FieldTower::frob(Fel a, int h) const {
  if (!a) return 0;
  h %= me_;
  if (h < 0) h += me_;
  for (int i = 0; i < h; ++i) a = frob_tab_[a];
  return a;
}

int FieldTower::theta_as_p_exponent(int k) const {
  k %= m_;
  if (k < 0) k += m_;
  return (e_ * j_ * k) % me_;
}

int FieldTower::fixed_field_exponent(int h) const {
  h %= me_;
  if (h < 0) h += me_;
  if (h == 0) return me_;
  return std::gcd(h, me_);
}

std::uint64_t FieldTower::subfield_size(int s) const {
  return ipow(static_cast<std::uint64_t>(p_), s);
}

Fel FieldTower::norm_to(Fel a, int s) const {
  if (s <= 0 || me_ % s != 0) throw std::invalid_argument("gf: not a subfield of the tower");
  Fel acc = 1, cur = a;
  for (int i = 0; i < me_ / s; ++i) {
    acc = mul(acc, cur);
    cur = frob(cur, s);
  }
  return acc;
}

Fel FieldTower::trace_to(Fel a, int s) const {
  if (s <= 0 || me_ % s != 0) throw std::invalid_argument("gf: not a subfield of the tower");
  Fel acc = 0, cur = a;
  for (int i = 0; i < me_ / s; ++i) {
    acc = add(acc, cur);
    cur = frob(cur, s);
  }
  return acc;
}

std::vector<Fel> FieldTower::subfield_basis(int s) const {
  if (s <= 0 || me_ % s != 0) throw std::invalid_argument("gf: not a subfield of the tower");
  // kernel of frob^s - id as an F_p-linear map on coordinates
  fp::Matrix mat(p_, static_cast<std::size_t>(me_), static_cast<std::size_t>(me_));
  Fel basis_vec = 1;
  for (int cidx = 0; cidx < me_; ++cidx) {
    const Fel img = frob(basis_vec, s);
    auto ci = coords(img);
    for (int r = 0; r < me_; ++r) {
      int v = ci[static_cast<std::size_t>(r)];
      if (r == cidx) v = (v + p_ - 1) % p_;
      mat.set(static_cast<std::size_t>(r), static_cast<std::size_t>(cidx), static_cast<std::uint8_t>(v));
    }
    basis_vec *= static_cast<Fel>(p_);  // next power-basis element
  }
  fp::Matrix k = fp::kernel(mat);
  if (static_cast<int>(k.rows()) != s) throw std::logic_error("gf: unexpected subfield dimension");
  std::vector<Fel> out;
  out.reserve(static_cast<std::size_t>(s));
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(from_coords(k.row_span(i)));
  return out;
}

std::vector<Fel> FieldTower::subfield_elements(int s) const {
  if (s <= 0 || me_ % s != 0) throw std::invalid_argument("gf: not a subfield of the tower");
  std::vector<Fel> out;
  out.reserve(static_cast<std::size_t>(subfield_size(s)));
  for (std::uint32_t a = 0; a < n_; ++a)
    if (in_subfield(a, s)) out.push_back(a);
  return out;
}

bool FieldTower::compatible(const FieldTower& o) const {
  return p_ == o.p_ && e_ == o.e_ && m_ == o.m_ && j_ == o.j_ && mod_q_ == o.mod_q_ &&
         mod_qm_ == o.mod_qm_;
}

}  // namespace skewrank::gf
