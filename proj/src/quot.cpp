#include "skewrank/quot.hpp"

#include <algorithm>

namespace skewrank::quot {

using skew::SkewPoly;

RingPtr QuotientRing::create(TowerPtr tw, std::vector<Fel> lambdas, std::vector<Fel> alphas) {
  auto ring = std::shared_ptr<QuotientRing>(new QuotientRing());
  const int e = tw->e();
  ring->t_ = static_cast<int>(lambdas.size());
  ring->h_ = skew::build_h_lambda(tw, lambdas);  // validates the lambdas
  if (alphas.empty()) {
    for (Fel l : lambdas) {
      Fel best = 0;
      for (Fel a = 1; a < tw->size(); ++a)
        if (tw->norm_to(a, e) == l && (best == 0 || tw->lex_less(a, best))) best = a;
      if (!best) throw std::invalid_argument("quot: no alpha with the requested norm");
      alphas.push_back(best);
    }
  } else {
    if (alphas.size() != lambdas.size())
      throw std::invalid_argument("quot: alphas and lambdas must have equal length");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      if (!alphas[i]) throw std::invalid_argument("quot: alpha must be nonzero");
      if (tw->norm_to(alphas[i], e) != lambdas[i])
        throw std::invalid_argument("quot: alpha norm does not match lambda");
    }
  }
  ring->lambdas_ = std::move(lambdas);
  ring->alphas_ = std::move(alphas);
  ring->h_dense_.assign(static_cast<std::size_t>(ring->t_ * tw->m()) + 1, 0);
  for (std::size_t i = 0; i < ring->h_.coeffs().size(); ++i) ring->h_dense_[i] = ring->h_.coeffs()[i];
  ring->tw_ = std::move(tw);
  return ring;
}

QuotElement QuotientRing::reduce(const SkewPoly& f) const {
  if (f.tower().get() != tw_.get() && !f.tower()->compatible(*tw_))
    throw std::invalid_argument("quot: tower mismatch");
  if (f.is_zero() || *f.degree() < tm()) return {f, this};
  return {skew::right_divide(f, h_).remainder, this};
}

QuotElement QuotientRing::add(const QuotElement& a, const QuotElement& b) const {
  return {a.rep + b.rep, this};
}

QuotElement QuotientRing::sub(const QuotElement& a, const QuotElement& b) const {
  return {a.rep - b.rep, this};
}

QuotElement QuotientRing::mul(const QuotElement& a, const QuotElement& b) const {
  if (a.ring != b.ring && !compatible(*b.ring)) throw std::invalid_argument("quot: ring mismatch");
  return reduce(skew::skew_mul(a.rep, b.rep));
}

int QuotientRing::weight(const QuotElement& a) const {
  if (a.is_zero()) return 0;  // gcrd(0, H) = H by convention
  std::vector<Fel> c = dense_coeffs(a);
  return weight_of_coeffs(c);
}

int QuotientRing::weight_of_coeffs(std::span<const Fel> coeffs) const {
  const auto& tw = *tw_;
  const int n = tm();
  thread_local std::vector<Fel> fbuf, gbuf;
  fbuf.assign(h_dense_.begin(), h_dense_.end());
  gbuf.assign(coeffs.begin(), coeffs.end());
  int df = n;
  int dg = -1;
  for (int i = static_cast<int>(gbuf.size()) - 1; i >= 0; --i)
    if (gbuf[static_cast<std::size_t>(i)]) {
      dg = i;
      break;
    }
  if (dg < 0) return 0;
  Fel* f = fbuf.data();
  Fel* g = gbuf.data();
  while (dg >= 0) {
    // f <- f mod g (right division)
    while (df >= dg) {
      const int k = df - dg;
      const Fel c = tw.mul(f[df], tw.inv(tw.theta(g[dg], k)));
      f[df] = 0;
      for (int i = 0; i < dg; ++i) {
        const Fel gi = g[i];
        if (gi) f[k + i] = tw.sub(f[k + i], tw.mul(c, tw.theta(gi, k)));
      }
      while (df >= 0 && f[df] == 0) --df;
    }
    std::swap(f, g);
    std::swap(df, dg);
  }
  return n - df;
}

QuotElement QuotientRing::invert(const QuotElement& a) const {
  SkewPoly g = skew::gcrd(a.rep.is_zero() ? h_ : a.rep, h_);
  if (a.is_zero() || *g.degree() != 0)
    throw NonUnitError("quot: element is not a unit (weight < tm)", g);
  auto x = skew::extended_gcrd(a.rep, h_);
  QuotElement inv = reduce(x.a);  // x.a * rep + x.b * H = 1
  if (!(mul(inv, a) == one()) || !(mul(a, inv) == one()))
    throw std::logic_error("quot: inverse verification failed");
  return inv;
}

srmat::MatTuple QuotientRing::evaluate_matrices(const QuotElement& a, const gf::FqBasis& basis) const {
  const auto& tw = *tw_;
  const int m = tw.m();
  std::vector<srmat::FqMat> blocks;
  blocks.reserve(static_cast<std::size_t>(t_));
  for (int b = 0; b < t_; ++b) {
    // fold the alpha-twisted coefficients into a linearized polynomial
    std::vector<Fel> lin(static_cast<std::size_t>(m), 0);
    Fel norm = 1;
    const auto& c = a.rep.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i]) {
        auto& slot = lin[i % static_cast<std::size_t>(m)];
        slot = tw.add(slot, tw.mul(c[i], norm));
      }
      norm = tw.mul(norm, tw.theta(alphas_[static_cast<std::size_t>(b)], static_cast<int>(i)));
    }
    blocks.push_back(srmat::linearized_to_matrix(tw, lin, basis));
  }
  return srmat::MatTuple(tw_, std::move(blocks));
}

srmat::Ambient QuotientRing::matrix_ambient() const {
  srmat::Shape s;
  s.rows.assign(static_cast<std::size_t>(t_), tw_->m());
  s.cols.assign(static_cast<std::size_t>(t_), tw_->m());
  return srmat::Ambient(tw_, std::move(s));
}

std::uint8_t QuotientRing::dual_pair(const QuotElement& a, const QuotElement& b) const {
  if (a.ring != b.ring && !compatible(*b.ring)) throw std::invalid_argument("quot: ring mismatch");
  const auto& tw = *tw_;
  Fel acc = 0;
  const auto& ca = a.rep.coeffs();
  const auto& cb = b.rep.coeffs();
  const std::size_t n = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i) acc = tw.add(acc, tw.mul(ca[i], cb[i]));
  return static_cast<std::uint8_t>(tw.trace_to(acc, 1));
}

fp::Matrix QuotientRing::gram() const {
  const std::size_t d = dim_fp();
  fp::Matrix g(tw_->p(), d, d);
  const int me = tw_->me();
  // basis (i, r) is y^r x^i; pairs vanish unless positions agree
  std::vector<std::vector<std::uint8_t>> tr(static_cast<std::size_t>(me),
                                            std::vector<std::uint8_t>(static_cast<std::size_t>(me)));
  Fel yr = 1;
  std::vector<Fel> pows(static_cast<std::size_t>(me));
  for (int r = 0; r < me; ++r) {
    pows[static_cast<std::size_t>(r)] = yr;
    yr *= static_cast<Fel>(tw_->p());
  }
  for (int r = 0; r < me; ++r)
    for (int s = 0; s < me; ++s)
      tr[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(
          tw_->trace_to(tw_->mul(pows[static_cast<std::size_t>(r)], pows[static_cast<std::size_t>(s)]), 1));
  for (int i = 0; i < tm(); ++i)
    for (int r = 0; r < me; ++r)
      for (int s = 0; s < me; ++s)
        g.set(static_cast<std::size_t>(i * me + r), static_cast<std::size_t>(i * me + s),
              tr[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]);
  return g;
}

std::vector<std::uint8_t> QuotientRing::to_coords(const QuotElement& a) const {
  std::vector<std::uint8_t> out;
  out.reserve(dim_fp());
  const int me = tw_->me();
  for (int i = 0; i < tm(); ++i) {
    auto c = tw_->coords(a.rep.coeff(static_cast<std::size_t>(i)));
    out.insert(out.end(), c.begin(), c.begin() + me);
  }
  return out;
}

QuotElement QuotientRing::from_coords(std::span<const std::uint8_t> c) const {
  if (c.size() != dim_fp()) throw std::invalid_argument("quot: coordinate length mismatch");
  const int me = tw_->me();
  std::vector<Fel> coeffs(static_cast<std::size_t>(tm()));
  for (int i = 0; i < tm(); ++i)
    coeffs[static_cast<std::size_t>(i)] =
        tw_->from_coords(c.subspan(static_cast<std::size_t>(i * me), static_cast<std::size_t>(me)));
  return {SkewPoly(tw_, std::move(coeffs)), this};
}

std::vector<Fel> QuotientRing::dense_coeffs(const QuotElement& a) const {
  std::vector<Fel> c(static_cast<std::size_t>(tm()), 0);
  const auto& rc = a.rep.coeffs();
  std::copy(rc.begin(), rc.end(), c.begin());
  return c;
}

QuotElement QuotientRing::from_dense_coeffs(std::span<const Fel> c) const {
  return {SkewPoly(tw_, std::vector<Fel>(c.begin(), c.end())), this};
}

bool QuotientRing::compatible(const QuotientRing& o) const {
  return tw_->compatible(*o.tw_) && lambdas_ == o.lambdas_ && alphas_ == o.alphas_;
}

}  // namespace skewrank::quot
