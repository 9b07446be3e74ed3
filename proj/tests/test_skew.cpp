#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrank/skew.hpp"

using namespace skewrank;
using gf::Fel;
using skew::SkewPoly;

namespace {

Fel pow_mul(const gf::FieldTower& tw, Fel a, std::uint64_t k) {
  Fel r = 1, b = a;
  if (!a) return k ? 0 : 1;
  while (k) {
    if (k & 1) r = tw.mul(r, b);
    b = tw.mul(b, b);
    k >>= 1;
  }
  return r;
}

// schoolbook expansion with theta replaced by exponentiation; the oracle for
// the library product
SkewPoly naive_mul(const SkewPoly& f, const SkewPoly& g) {
  const auto& tw = *f.tower();
  std::uint64_t q = tw.q();
  std::vector<Fel> out;
  if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.tower());
  out.assign(f.coeffs().size() + g.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      // x^i a = theta^i(a) x^i with theta^i(a) = a^(q^(j_exp * i))
      std::uint64_t qe = 1;
      for (int r = 0; r < tw.theta_exponent() * static_cast<int>(i); ++r) qe = qe * q % (tw.size() - 1);
      Fel tb = g.coeffs()[j] ? pow_mul(tw, g.coeffs()[j], qe) : 0;
      out[i + j] = tw.add(out[i + j], tw.mul(f.coeffs()[i], tb));
    }
  return SkewPoly(f.tower(), std::move(out));
}

SkewPoly random_poly(const gf::TowerPtr& tw, int maxdeg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ddist(0, maxdeg);
  std::uniform_int_distribution<Fel> cdist(0, tw->size() - 1);
  std::vector<Fel> c(static_cast<std::size_t>(ddist(rng)) + 1);
  for (auto& x : c) x = cdist(rng);
  return SkewPoly(tw, std::move(c));
}

}  // namespace

TEST_CASE("twist rule on monomials") {
  auto f4 = gf::FieldTower::build(2, 1, 2, 1);
  const Fel w = f4->from_coords(std::vector<std::uint8_t>{0, 1});
  const Fel w1 = f4->from_coords(std::vector<std::uint8_t>{1, 1});
  SkewPoly x = SkewPoly::monomial(f4, 1);
  SkewPoly cw = SkewPoly::constant(f4, w);
  SkewPoly prod = skew_mul(x, cw);  // x w = theta(w) x = (w+1) x
  CHECK(prod == SkewPoly::monomial(f4, 1, w1));

  SkewPoly one = SkewPoly::one(f4);
  SkewPoly f(f4, std::vector<Fel>{w, 1, w1});
  CHECK(skew_mul(f, one) == f);
  CHECK(skew_mul(one, f) == f);
}

TEST_CASE("squared binomial in characteristic two") {
  auto f4 = gf::FieldTower::build(2, 1, 2, 1);
  SkewPoly xp1(f4, std::vector<Fel>{1, 1});
  SkewPoly sq = skew_mul(xp1, xp1);
  // (x+1)^2 = x^2 + (theta(1)+1)x + 1 = x^2 + 1 in characteristic 2
  CHECK(sq == SkewPoly(f4, std::vector<Fel>{1, 0, 1}));
  CHECK(sq == naive_mul(xp1, xp1));
}

TEST_CASE("product agrees with the schoolbook expansion") {
  for (auto tw : {gf::FieldTower::build(2, 1, 4, 1), gf::FieldTower::build(5, 1, 3, 1),
                  gf::FieldTower::build(2, 2, 2, 1)}) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      SkewPoly f = random_poly(tw, 5, rng), g = random_poly(tw, 5, rng);
      CHECK(skew_mul(f, g) == naive_mul(f, g));
    }
  }
}

TEST_CASE("degree is additive and multiplication is associative") {
  auto tw = gf::FieldTower::build(5, 1, 3, 1);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    SkewPoly f = random_poly(tw, 4, rng), g = random_poly(tw, 4, rng), h = random_poly(tw, 3, rng);
    if (!f.is_zero() && !g.is_zero())
      CHECK(*skew_mul(f, g).degree() == *f.degree() + *g.degree());
    CHECK(skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h)));
  }
}

TEST_CASE("right division basics") {
  auto tw = gf::FieldTower::build(5, 1, 3, 1);
  SkewPoly x = SkewPoly::monomial(tw, 1);
  SkewPoly g(tw, std::vector<Fel>{2, 1, 3});
  auto d = right_divide(g, g);
  CHECK(d.quotient == SkewPoly::one(tw));
  CHECK(d.remainder.is_zero());
  // x^m - 1 divided by x: quotient x^(m-1), remainder -1
  SkewPoly xm1(tw, std::vector<Fel>{tw->neg(1), 0, 0, 1});
  auto d2 = right_divide(xm1, x);
  CHECK(d2.quotient == SkewPoly::monomial(tw, 2));
  CHECK(d2.remainder == SkewPoly::constant(tw, tw->neg(1)));
  CHECK_THROWS(right_divide(x, SkewPoly::zero(tw)));
}

TEST_CASE("euclidean round trip over many random pairs") {
  for (auto tw : {gf::FieldTower::build(5, 1, 3, 1), gf::FieldTower::build(2, 2, 2, 1)}) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10000; ++i) {
      SkewPoly f = random_poly(tw, 7, rng), g = random_poly(tw, 5, rng);
      if (g.is_zero()) continue;
      auto d = right_divide(f, g);
      CHECK(skew_mul(d.quotient, g) + d.remainder == f);
      if (!d.remainder.is_zero()) CHECK(*d.remainder.degree() < *g.degree());
    }
  }
}

TEST_CASE("gcrd divides both inputs") {
  auto tw = gf::FieldTower::build(5, 1, 3, 1);
  SkewPoly x = SkewPoly::monomial(tw, 1);
  SkewPoly f(tw, std::vector<Fel>{3, 2, 0, 1});
  CHECK(gcrd(f, SkewPoly::zero(tw)) == f.monic());
  SkewPoly xm1(tw, std::vector<Fel>{tw->neg(1), 0, 0, 1});
  CHECK(gcrd(x, xm1) == SkewPoly::one(tw));
  CHECK_THROWS(gcrd(SkewPoly::zero(tw), SkewPoly::zero(tw)));

  std::mt19937_64 rng(19);
  for (int i = 0; i < 10000; ++i) {
    SkewPoly a = random_poly(tw, 6, rng), b = random_poly(tw, 6, rng);
    if (a.is_zero() && b.is_zero()) continue;
    SkewPoly d = gcrd(a, b);
    CHECK(right_divides(d, a));
    CHECK(right_divides(d, b));
  }
}

TEST_CASE("gcrd of a divisor pair over F_4") {
  auto f4 = gf::FieldTower::build(2, 1, 2, 1);
  SkewPoly a(f4, std::vector<Fel>{1, 0, 1});  // x^2 + 1
  SkewPoly b(f4, std::vector<Fel>{1, 1});     // x + 1
  // (x+1) right-divides x^2+1: confirmed by the division oracle
  CHECK(right_divides(b, a));
  CHECK(gcrd(a, b) == b);
}

TEST_CASE("lclm degree identity") {
  auto tw = gf::FieldTower::build(5, 1, 3, 1);
  SkewPoly x = SkewPoly::monomial(tw, 1);
  SkewPoly f(tw, std::vector<Fel>{2, 3, 1});
  CHECK(lclm(f, f) == f.monic());
  CHECK(lclm(x, x) == x);
  CHECK_THROWS(lclm(f, SkewPoly::zero(tw)));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    SkewPoly a = random_poly(tw, 5, rng), b = random_poly(tw, 5, rng);
    if (a.is_zero() || b.is_zero()) continue;
    SkewPoly l = lclm(a, b), d = gcrd(a, b);
    CHECK(*l.degree() + *d.degree() == *a.degree() + *b.degree());
    CHECK(right_divides(a, l));
    CHECK(right_divides(b, l));
  }
}

TEST_CASE("extended gcrd reconstruction") {
  auto tw = gf::FieldTower::build(5, 1, 3, 1);
  SkewPoly f(tw, std::vector<Fel>{3, 0, 2});
  auto z = extended_gcrd(f, SkewPoly::zero(tw));
  CHECK(z.d == f.monic());
  CHECK(z.b.is_zero());
  CHECK(skew_mul(z.a, f) == z.d);

  SkewPoly x = SkewPoly::monomial(tw, 1);
  SkewPoly xm1(tw, std::vector<Fel>{tw->neg(1), 0, 0, 1});
  auto e = extended_gcrd(x, xm1);
  CHECK(e.d == SkewPoly::one(tw));
  CHECK(skew_mul(e.a, x) + skew_mul(e.b, xm1) == SkewPoly::one(tw));

  std::mt19937_64 rng(29);
  for (int i = 0; i < 10000; ++i) {
    SkewPoly a = random_poly(tw, 5, rng), b = random_poly(tw, 5, rng);
    if (a.is_zero() && b.is_zero()) continue;
    auto r = extended_gcrd(a, b);
    CHECK(skew_mul(r.a, a) + skew_mul(r.b, b) == r.d);
    CHECK(r.d == gcrd(a.is_zero() ? b : a, a.is_zero() ? a : b));
  }
}

TEST_CASE("alpha twist and truncated norms") {
  auto tw = gf::FieldTower::build(5, 1, 3, 1);
  std::mt19937_64 rng(31);
  SkewPoly f = random_poly(tw, 5, rng);
  CHECK(alpha_twist(f, 1) == f);
  CHECK_THROWS(alpha_twist(f, 0));
  for (Fel a = 1; a < tw->size(); ++a) {
    SkewPoly x = SkewPoly::monomial(tw, 1);
    CHECK(alpha_twist(x, a) == SkewPoly::monomial(tw, 1, a));
    // the full-orbit truncated norm is the relative norm
    CHECK(skew::truncated_norm(*tw, a, tw->m()) == tw->norm_to(a, tw->e()));
  }
}

TEST_CASE("central modulus construction") {
  auto tw = gf::FieldTower::build(5, 1, 3, 1);
  SkewPoly h1 = skew::build_h_lambda(tw, std::vector<Fel>{1});
  CHECK(h1 == SkewPoly(tw, std::vector<Fel>{tw->neg(1), 0, 0, 1}));  // x^3 - 1

  auto f3 = gf::FieldTower::build(3, 1, 3, 1);
  SkewPoly h = skew::build_h_lambda(f3, std::vector<Fel>{1, 2});
  // the commutative center oracle: (y - 1)(y - 2) = y^2 + 2 over F_3, y = x^3
  CHECK(h == SkewPoly(f3, std::vector<Fel>{2, 0, 0, 0, 0, 0, 1}));

  std::mt19937_64 rng(37);
  SkewPoly hq = skew::build_h_lambda(tw, std::vector<Fel>{1, 4});
  for (int i = 0; i < 1000; ++i) {
    SkewPoly a = random_poly(tw, 6, rng);
    CHECK(skew_mul(hq, a) == skew_mul(a, hq));  // centrality
  }
  CHECK_THROWS(skew::build_h_lambda(tw, std::vector<Fel>{1, 1}));  // repeated
  CHECK_THROWS(skew::build_h_lambda(tw, std::vector<Fel>{0}));     // zero
  auto f16 = gf::FieldTower::build(2, 2, 2, 1);
  // an element outside F_q is rejected
  Fel outside = 0;
  for (Fel a = 1; a < f16->size(); ++a)
    if (!f16->in_subfield(a, f16->e())) {
      outside = a;
      break;
    }
  CHECK_THROWS(skew::build_h_lambda(f16, std::vector<Fel>{outside}));
}
