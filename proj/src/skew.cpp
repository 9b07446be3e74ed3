#include "skewrank/skew.hpp"

#include <stdexcept>

namespace skewrank::skew {

namespace {

void check_same_tower(const SkewPoly& f, const SkewPoly& g) {
  if (!f.tower() || !g.tower()) throw std::invalid_argument("skew: missing tower");
  if (f.tower().get() != g.tower().get() && !f.tower()->compatible(*g.tower()))
    throw std::invalid_argument("skew: tower mismatch");
}

}  // namespace

SkewPoly::SkewPoly(TowerPtr tw, std::vector<Fel> coeffs) : tw_(std::move(tw)), c_(std::move(coeffs)) {
  trim();
}

void SkewPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

SkewPoly SkewPoly::constant(TowerPtr tw, Fel c) {
  SkewPoly f(std::move(tw));
  if (c) f.c_ = {c};
  return f;
}

SkewPoly SkewPoly::monomial(TowerPtr tw, int degree, Fel c) {
  SkewPoly f(std::move(tw));
  if (c) {
    f.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
    f.c_.back() = c;
  }
  return f;
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  check_same_tower(*this, o);
  SkewPoly r(tw_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = tw_->add(coeff(i), o.coeff(i));
  r.trim();
  return r;
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly r(tw_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = tw_->neg(c_[i]);
  return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::scale(Fel c) const {
  SkewPoly r(tw_);
  if (!c) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = tw_->mul(c, c_[i]);
  return r;
}

SkewPoly SkewPoly::monic() const {
  if (is_zero()) return *this;
  return scale(tw_->inv(leading()));
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
  check_same_tower(f, g);
  const auto& tw = *f.tower();
  SkewPoly r(f.tower());
  if (f.is_zero() || g.is_zero()) return r;
  r.c_.assign(f.c_.size() + g.c_.size() - 1, 0);
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    const Fel fi = f.c_[i];
    if (!fi) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) {
      const Fel gj = g.c_[j];
      if (!gj) continue;
      r.c_[i + j] = tw.add(r.c_[i + j], tw.mul(fi, tw.theta(gj, static_cast<int>(i))));
    }
  }
  r.trim();
  return r;
}

DivResult right_divide(const SkewPoly& f, const SkewPoly& g) {
  check_same_tower(f, g);
  if (g.is_zero()) throw std::invalid_argument("skew: division by the zero polynomial");
  const auto& tw = *f.tower();
  const int dg = *g.degree();
  std::vector<Fel> rem(f.coeffs());
  std::vector<Fel> quo;
  int df = f.is_zero() ? -1 : *f.degree();
  if (df >= dg) quo.assign(static_cast<std::size_t>(df - dg) + 1, 0);
  const Fel glead = g.leading();
  while (df >= dg) {
    const int k = df - dg;
    const Fel c = tw.mul(rem[static_cast<std::size_t>(df)], tw.inv(tw.theta(glead, k)));
    quo[static_cast<std::size_t>(k)] = c;
    // rem -= c x^k * g
    for (int i = 0; i <= dg; ++i) {
      const Fel gi = g.coeff(static_cast<std::size_t>(i));
      if (!gi) continue;
      auto& slot = rem[static_cast<std::size_t>(k + i)];
      slot = tw.sub(slot, tw.mul(c, tw.theta(gi, k)));
    }
    while (df >= 0 && rem[static_cast<std::size_t>(df)] == 0) --df;
  }
  rem.resize(static_cast<std::size_t>(df + 1));
  return {SkewPoly(f.tower(), std::move(quo)), SkewPoly(f.tower(), std::move(rem))};
}

bool right_divides(const SkewPoly& g, const SkewPoly& f) {
  if (f.is_zero()) return true;
  return right_divide(f, g).remainder.is_zero();
}

SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) {
  check_same_tower(f, g);
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("skew: gcrd of two zero polynomials");
  SkewPoly a = f, b = g;
  while (!b.is_zero()) {
    SkewPoly r = right_divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcrdResult extended_gcrd(const SkewPoly& f, const SkewPoly& g) {
  check_same_tower(f, g);
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("skew: extended gcrd of two zero polynomials");
  const auto tw = f.tower();
  SkewPoly r0 = f, r1 = g;
  SkewPoly u0 = SkewPoly::one(tw), u1 = SkewPoly::zero(tw);
  SkewPoly v0 = SkewPoly::zero(tw), v1 = SkewPoly::one(tw);
  while (!r1.is_zero()) {
    DivResult d = right_divide(r0, r1);
    SkewPoly r2 = d.remainder;
    SkewPoly u2 = u0 - skew_mul(d.quotient, u1);
    SkewPoly v2 = v0 - skew_mul(d.quotient, v1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const Fel ilead = tw->inv(r0.leading());
  return {r0.scale(ilead), u0.scale(ilead), v0.scale(ilead)};
}

SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) {
  check_same_tower(f, g);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("skew: lclm requires nonzero inputs");
  const auto tw = f.tower();
  SkewPoly r0 = f, r1 = g;
  SkewPoly u0 = SkewPoly::one(tw), u1 = SkewPoly::zero(tw);
  while (!r1.is_zero()) {
    DivResult d = right_divide(r0, r1);
    SkewPoly r2 = d.remainder;
    SkewPoly u2 = u0 - skew_mul(d.quotient, u1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // the final cofactor satisfies u1 f = -(v1 g), a generator of Rf intersect Rg
  return skew_mul(u1, f).monic();
}

Fel truncated_norm(const gf::FieldTower& tw, Fel alpha, int i) {
  Fel acc = 1;
  for (int j = 0; j < i; ++j) acc = tw.mul(acc, tw.theta(alpha, j));
  return acc;
}

SkewPoly alpha_twist(const SkewPoly& f, Fel alpha) {
  if (!alpha) throw std::invalid_argument("skew: alpha twist requires alpha != 0");
  const auto& tw = *f.tower();
  std::vector<Fel> c(f.coeffs());
  Fel norm = 1;  // running truncated norm
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = tw.mul(c[i], norm);
    norm = tw.mul(norm, tw.theta(alpha, static_cast<int>(i)));
  }
  return SkewPoly(f.tower(), std::move(c));
}

SkewPoly build_h_lambda(TowerPtr tw, std::span<const Fel> lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("skew: empty lambda set");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!lambdas[i]) throw std::invalid_argument("skew: lambda must be nonzero");
    if (!tw->in_subfield(lambdas[i], tw->e()))
      throw std::invalid_argument("skew: lambda must lie in F_q");
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (lambdas[i] == lambdas[j]) throw std::invalid_argument("skew: repeated lambda");
  }
  SkewPoly h = SkewPoly::one(tw);
  for (Fel l : lambdas) {
    SkewPoly factor = SkewPoly::monomial(tw, tw->m());
    factor = factor + SkewPoly::constant(tw, tw->neg(l));
    h = skew_mul(h, factor);
  }
  return h;
}

}  // namespace skewrank::skew
