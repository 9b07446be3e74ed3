#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrank/codes.hpp"

using namespace skewrank;
using codes::Code;
using gf::Fel;
using quot::QuotientRing;

namespace {

quot::RingPtr ring_m3() {
  return QuotientRing::create(gf::FieldTower::build(5, 1, 3, 1), std::vector<Fel>{1, 4});
}

quot::RingPtr ring_m2() {
  return QuotientRing::create(gf::FieldTower::build(5, 1, 2, 1), std::vector<Fel>{1, 4});
}

}  // namespace

TEST_CASE("untwisted construction sizes and identity membership") {
  auto ring = ring_m3();
  Code c = codes::construct_lrs(ring, 3);
  CHECK(c.dim_fp() == 9);  // |C| = 5^9 = q^(mk)
  CHECK(c.contains_identity());
  Code c1 = codes::construct_lrs(ring, 1);
  CHECK(c1.dim_fp() == 3);
  // with k = 1 every nonzero codeword is a unit
  for (std::size_t i = 0; i < c1.dim_fp(); ++i)
    CHECK(ring->weight(c1.quot_element(i)) == ring->tm());
  CHECK_THROWS_AS(codes::construct_lrs(ring, 0), codes::ConstructionError);
  CHECK_THROWS_AS(codes::construct_lrs(ring, 6), codes::ConstructionError);
}

TEST_CASE("twist validity condition") {
  auto ring = ring_m3();
  const auto& tw = *ring->tower();
  // eta = 0 gives the untwisted basis
  Code lrs = codes::construct_lrs(ring, 3);
  Code eta0 = codes::construct_atlrs(ring, 3, 0, 1);
  CHECK(lrs.same_subspace(eta0));
  // the scan picks eta with norm in {2, 3}: the subgroup of Lambda is {1, 4}
  // and (-1)^{ukm} = -1 here, so -N(eta) must avoid {1, 4}
  const Fel eta = codes::find_valid_eta(*ring, 3, 1);
  REQUIRE(eta != 0);
  const Fel n = tw.norm_to(eta, 1);
  CHECK((n == 2 || n == 3));
  Code atlrs = codes::construct_atlrs(ring, 3, eta, 1);
  CHECK(atlrs.dim_fp() == 9);
  CHECK(!atlrs.contains_identity());
  // every eta with -N(eta) inside {1, 4} must be rejected at these parameters
  int rejected = 0;
  for (Fel bad = 1; bad < tw.size() && rejected < 5; ++bad) {
    const Fel nb = tw.norm_to(bad, 1);
    if (tw.neg(nb) == 1 || tw.neg(nb) == 4) {
      CHECK_THROWS_AS(codes::construct_atlrs(ring, 3, bad, 1), codes::ConstructionError);
      ++rejected;
    }
  }
  CHECK(rejected == 5);
}

TEST_CASE("half subfield twist construction") {
  auto ring = ring_m2();
  const auto& tw = *ring->tower();
  const Fel gamma = codes::find_valid_gamma(*ring);
  REQUIRE(gamma != 0);
  const Fel n = tw.norm_to(gamma, 1);
  CHECK((n == 2 || n == 3));  // the non-squares of F_5
  Code tz = codes::construct_tz(ring, 2, gamma);
  CHECK(tz.dim_fp() == 4);  // |C| = 5^4 = 625
  CHECK(tz.contains_identity());

  // Lambda not inside the squares is rejected: 2 is a non-square mod 5
  auto bad_ring = QuotientRing::create(ring->tower(), std::vector<Fel>{1, 2});
  CHECK_THROWS_AS(codes::construct_tz(bad_ring, 2, gamma), codes::ConstructionError);
  // odd q is required
  auto even_tw = gf::FieldTower::build(2, 1, 2, 1);
  auto even_ring = QuotientRing::create(even_tw, std::vector<Fel>{1});
  CHECK_THROWS_AS(codes::construct_tz(even_ring, 1, 2), codes::ConstructionError);
  // odd m is rejected
  auto r3 = ring_m3();
  CHECK_THROWS_AS(codes::construct_tz(r3, 2, 2), codes::ConstructionError);
}

TEST_CASE("weight distribution against a direct count of the whole ambient") {
  // tiny frame where the whole ambient is enumerable both ways
  auto tw = gf::FieldTower::build(2, 1, 2, 1);
  auto ring = QuotientRing::create(tw, std::vector<Fel>{1});
  fp::Matrix rows = fp::Matrix::identity(2, ring->dim_fp());
  Code full = Code::from_quot_basis(ring, rows);
  codes::CodeReport rep = codes::weight_distribution(full);
  // direct count through the matrix image
  gf::FqBasis basis(tw, tw->canonical_fq_m_basis());
  std::vector<std::uint64_t> direct(3, 0);
  for (Fel c0 = 0; c0 < 4; ++c0)
    for (Fel c1 = 0; c1 < 4; ++c1) {
      auto el = ring->from_dense_coeffs(std::vector<Fel>{c0, c1});
      ++direct[static_cast<std::size_t>(srmat::sum_rank_weight(ring->evaluate_matrices(el, basis)))];
    }
  CHECK(rep.weights == direct);
  CHECK(rep.weights[0] == 1);
}

TEST_CASE("desk reports: minimum distance, bound, spectrum") {
  auto ring = ring_m2();
  Code lrs = codes::construct_lrs(ring, 2);
  codes::CodeReport rep = codes::weight_distribution(lrs);
  CHECK(rep.min_distance == 3);  // tm - k + 1
  CHECK(rep.msrd);
  CHECK(rep.nondegenerate);
  CHECK(rep.exact);
  std::uint64_t total = 0;
  for (auto w : rep.weights) total += w;
  CHECK(total == 625);
  for (int w = rep.min_distance; w <= 4; ++w) CHECK(rep.weights[static_cast<std::size_t>(w)] > 0);

  const Fel eta = codes::find_valid_eta(*ring, 2, 1);
  REQUIRE(eta != 0);
  codes::CodeReport rep2 = codes::weight_distribution(codes::construct_atlrs(ring, 2, eta, 1));
  CHECK(rep2.min_distance == 3);
  CHECK(rep2.msrd);

  codes::CodeReport rep3 =
      codes::weight_distribution(codes::construct_tz(ring, 2, codes::find_valid_gamma(*ring)));
  CHECK(rep3.min_distance == 3);
  CHECK(rep3.msrd);
  CHECK(rep3.nondegenerate);
}

TEST_CASE("enumeration cap and sampling mode") {
  auto ring = ring_m3();
  Code lrs = codes::construct_lrs(ring, 3);  // 5^9 codewords
  CHECK_THROWS_AS(codes::weight_distribution(lrs, 1000), codes::CapExceeded);
  codes::CodeReport rep = codes::weight_distribution(lrs, 1000, 1, 2000, 99);
  CHECK(!rep.exact);
  std::uint64_t total = 0;
  for (auto w : rep.weights) total += w;
  CHECK(total == 2000);
}

TEST_CASE("duality identities for the three families") {
  auto ring = ring_m3();
  // dual of the zero code is the whole ambient
  Code zero = Code::from_quot_basis(ring, fp::Matrix(5, 0, ring->dim_fp()));
  CHECK(codes::dual_of(zero).dim_fp() == ring->dim_fp());

  Code lrs = codes::construct_lrs(ring, 3);
  Code dual = codes::dual_of(lrs);
  CHECK(dual.dim_fp() == 9);
  const quot::QuotElement xk = ring->monomial(3);
  Code expect = codes::scale_right(codes::construct_lrs(ring, 3), xk);
  CHECK(dual.same_subspace(expect));
  CHECK(expect.same_subspace(codes::scale_left(codes::construct_lrs(ring, 3), xk)));
  CHECK(codes::dual_of(dual).same_subspace(lrs));

  // twisted family: the dual twists by the inverse automorphism, with the
  // parameter divided by the constant term of the modulus (equal to -1 for a
  // subgroup Lambda)
  const Fel eta = codes::find_valid_eta(*ring, 3, 1);
  Code atlrs = codes::construct_atlrs(ring, 3, eta, 1);
  const int me = ring->tower()->me();
  const Fel h0 = ring->modulus().coeff(0);
  const Fel eta2 = ring->tower()->mul(ring->tower()->frob(eta, me - 1), ring->tower()->inv(h0));
  Code adual = codes::dual_of(atlrs);
  Code aexpect = codes::scale_right(codes::construct_atlrs(ring, 3, eta2, me - 1), xk);
  CHECK(adual.same_subspace(aexpect));

  // half-subfield family: dual negates gamma
  auto r2 = ring_m2();
  const Fel gamma = codes::find_valid_gamma(*r2);
  Code tz = codes::construct_tz(r2, 2, gamma);
  Code tdual = codes::dual_of(tz);
  Code texpect =
      codes::scale_right(codes::construct_tz(r2, 2, r2->tower()->neg(gamma)), r2->monomial(2));
  CHECK(tdual.same_subspace(texpect));
}

TEST_CASE("unit scaling preserves the weight distribution") {
  auto ring = ring_m2();
  Code lrs = codes::construct_lrs(ring, 2);
  Code scaled = codes::scale_right(lrs, ring->monomial(1));
  CHECK(codes::weight_distribution(lrs).weights == codes::weight_distribution(scaled).weights);
  CHECK(codes::scale_right(lrs, ring->one()).same_subspace(lrs));
  // a non-unit is rejected when equivalence preservation is requested
  quot::QuotElement nonunit = ring->reduce(
      skew::SkewPoly(ring->tower(), std::vector<Fel>{ring->tower()->neg(1), 0, 1}));  // x^2 - 1
  CHECK(ring->weight(nonunit) < ring->tm());
  CHECK_THROWS(codes::scale_right(lrs, nonunit));
}

TEST_CASE("normalization to a code containing the identity") {
  auto ring = ring_m2();
  Code lrs = codes::construct_lrs(ring, 2);
  CHECK(codes::normalize_to_identity(lrs).same_subspace(lrs));  // already contains 1
  const Fel eta = codes::find_valid_eta(*ring, 2, 1);
  Code atlrs = codes::construct_atlrs(ring, 2, eta, 1);
  CHECK(!atlrs.contains_identity());
  Code norm = codes::normalize_to_identity(atlrs);
  CHECK(norm.contains_identity());
  CHECK(codes::weight_distribution(norm).weights == codes::weight_distribution(atlrs).weights);
}

TEST_CASE("matrix image and isometries") {
  auto ring = ring_m2();
  Code tz = codes::construct_tz(ring, 2, codes::find_valid_gamma(*ring));
  Code mat = codes::to_matrix_code(tz);
  CHECK(mat.dim_fp() == tz.dim_fp());
  CHECK(codes::weight_distribution(mat).weights == codes::weight_distribution(tz).weights);
  std::mt19937_64 rng(107);
  srmat::Isometry iso = srmat::random_isometry(ring->tower(), mat.mat_ambient().shape(), rng);
  Code moved = codes::apply_isometry_code(mat, iso);
  CHECK(codes::weight_distribution(moved).weights == codes::weight_distribution(mat).weights);
  // the adjoint pattern transposes blockwise
  std::vector<int> v{1, 0};
  Code adj = codes::v_adjoint_code(mat, v);
  CHECK(codes::weight_distribution(adj).weights == codes::weight_distribution(mat).weights);
}

TEST_CASE("subspace linearity of scalar-closed codes") {
  auto ring = ring_m3();
  Code lrs = codes::construct_lrs(ring, 3);
  CHECK(codes::subspace_linearity_exp(lrs) == 3);  // closed under all of F_{q^m}
  // the twisted code is only F_p-closed
  const Fel eta = codes::find_valid_eta(*ring, 3, 1);
  Code atlrs = codes::construct_atlrs(ring, 3, eta, 1);
  CHECK(codes::subspace_linearity_exp(atlrs) == 1);
}
