#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrank/invariants.hpp"
#include "skewrank/suites.hpp"

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

TEST_CASE("idealisers of the untwisted desk code") {
  auto ring = ring_m3();
  Code lrs = codes::construct_lrs(ring, 3);
  inv::Subring il = inv::left_idealiser(lrs);
  inv::Subring ir = inv::right_idealiser(lrs);
  CHECK(il.dim() == 3);  // the field F_{q^m} = F_125
  CHECK(ir.dim() == 3);
  inv::RingFingerprint f = inv::fingerprint(il);
  CHECK(f.is_field);
  CHECK(f.commutative);
  CHECK(f.max_subfield_exp == 3);
  // the matrix-side solver gives the same sizes
  Code mat = codes::to_matrix_code(lrs);
  CHECK(inv::left_idealiser(mat).dim() == 3);
  CHECK(inv::right_idealiser(mat).dim() == 3);
}

TEST_CASE("idealisers of the twisted desk code") {
  auto ring = ring_m3();
  const Fel eta = codes::find_valid_eta(*ring, 3, 1);
  Code atlrs = codes::construct_atlrs(ring, 3, eta, 1);
  inv::Subring il = inv::left_idealiser(atlrs);
  inv::Subring ir = inv::right_idealiser(atlrs);
  CHECK(il.dim() == 1);  // Fix(theta) = F_5
  CHECK(ir.dim() == 1);  // Fix(theta^{-1} o theta^3) = Fix(theta^2) = F_5
  CHECK(inv::fingerprint(il).is_field);
  CHECK(inv::fingerprint(ir).is_field);
}

TEST_CASE("idealisers of the half-subfield desk code") {
  auto ring = ring_m2();
  Code tz = codes::construct_tz(ring, 2, codes::find_valid_gamma(*ring));
  CHECK(inv::left_idealiser(tz).dim() == 1);
  CHECK(inv::right_idealiser(tz).dim() == 1);
}

TEST_CASE("centraliser and center of desk codes") {
  auto ring = ring_m3();
  Code lrs = codes::construct_lrs(ring, 3);
  inv::Subring ce = inv::centraliser(lrs);
  CHECK(ce.dim() == 2);  // q^t = 25
  inv::RingFingerprint f = inv::fingerprint(ce);
  CHECK(f.commutative);
  CHECK(!f.is_field);
  CHECK(f.decomposition_complete);
  CHECK(f.residue_exps == std::vector<std::size_t>{1, 1});  // two copies of F_5
  inv::Subring z = inv::center(lrs);
  CHECK(z.dim() == 1);

  // the twisted code needs normalization first
  const Fel eta = codes::find_valid_eta(*ring, 3, 1);
  Code atlrs = codes::construct_atlrs(ring, 3, eta, 1);
  CHECK_THROWS(inv::centraliser(atlrs));
  Code norm = codes::normalize_to_identity(atlrs);
  CHECK(inv::centraliser(norm).dim() == 2);
  CHECK(inv::center(norm).dim() == 1);

  // the half-subfield desk code contains the identity already
  auto r2 = ring_m2();
  Code tz = codes::construct_tz(r2, 2, codes::find_valid_gamma(*r2));
  CHECK(inv::centraliser(tz).dim() == 2);
  CHECK(inv::center(tz).dim() == 1);

  // centraliser of the full ambient is its center: q^t via the product of
  // residue fields
  fp::Matrix full_rows = fp::Matrix::identity(5, r2->dim_fp());
  Code full = Code::from_quot_basis(r2, full_rows);
  inv::Subring cf = inv::centraliser(full);
  CHECK(cf.dim() == 2);
  inv::RingFingerprint ff = inv::fingerprint(cf);
  CHECK(ff.decomposition_complete);
  CHECK(ff.residue_exps == std::vector<std::size_t>{1, 1});
}

TEST_CASE("the s-idealiser of the full ambient is the whole block space") {
  auto tw = gf::FieldTower::build(3, 1, 2, 1);
  srmat::Shape s{{2, 2}, {2, 2}};
  srmat::Ambient amb(tw, s);
  Code full = Code::from_mat_basis(amb, fp::Matrix::identity(3, amb.dim_fp()));
  for (int mask = 0; mask < 4; ++mask) {
    std::vector<int> sv{mask & 1, (mask >> 1) & 1};
    CHECK(inv::s_idealiser(full, sv).dim() == 8);
  }
}

TEST_CASE("mixed-pattern idealisers of a two-block linearized code") {
  // blocks spanned by 1 + x + x^2 + x^3 over F_16 and 1 + x^2 over F_4,
  // realized as 4x4 binary matrices
  auto tw = gf::FieldTower::build(2, 1, 4, 1);
  gf::FqBasis basis(tw, tw->canonical_fq_m_basis());
  srmat::Shape shape{{4, 4}, {4, 4}};
  srmat::Ambient amb(tw, shape);
  const std::vector<Fel> fcoef{1, 1, 1, 1};
  const std::vector<Fel> gcoef{1, 0, 1, 0};
  auto scaled = [&](const std::vector<Fel>& c, Fel beta) {
    std::vector<Fel> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = tw->mul(beta, c[i]);
    return out;
  };
  // single-block idealisers first; the right ones have the closed-form sizes
  srmat::Shape one{{4}, {4}};
  srmat::Ambient amb1(tw, one);
  fp::Matrix rows_f(2, 0, amb1.dim_fp());
  Fel beta = 1;
  for (int r = 0; r < 4; ++r) {
    std::vector<srmat::FqMat> blk{srmat::linearized_to_matrix(*tw, scaled(fcoef, beta), basis)};
    rows_f.append_row(amb1.to_coords(srmat::MatTuple(tw, std::move(blk))));
    beta *= 2;
  }
  Code cf = Code::from_mat_basis(amb1, std::move(rows_f));
  fp::Matrix rows_g(2, 0, amb1.dim_fp());
  for (Fel b : tw->subfield_basis(2)) {
    std::vector<srmat::FqMat> blk{srmat::linearized_to_matrix(*tw, scaled(gcoef, b), basis)};
    rows_g.append_row(amb1.to_coords(srmat::MatTuple(tw, std::move(blk))));
  }
  Code cg = Code::from_mat_basis(amb1, std::move(rows_g));
  const std::vector<int> sr{0}, sl{1};
  inv::Subring rf = inv::s_idealiser(cf, sr), lf = inv::s_idealiser(cf, sl);
  inv::Subring rg = inv::s_idealiser(cg, sr), lg = inv::s_idealiser(cg, sl);
  CHECK(rf.dim() == 13);  // 1 + m(m-1)
  CHECK(rg.dim() == 10);  // 2 + m(m-2)

  // the direct sum code and all four patterns
  fp::Matrix rows(2, 0, amb.dim_fp());
  beta = 1;
  for (int r = 0; r < 4; ++r) {
    std::vector<srmat::FqMat> blk{srmat::linearized_to_matrix(*tw, scaled(fcoef, beta), basis),
                                  srmat::FqMat(4, 4)};
    rows.append_row(amb.to_coords(srmat::MatTuple(tw, std::move(blk))));
    beta *= 2;
  }
  for (Fel b : tw->subfield_basis(2)) {
    std::vector<srmat::FqMat> blk{srmat::FqMat(4, 4),
                                  srmat::linearized_to_matrix(*tw, scaled(gcoef, b), basis)};
    rows.append_row(amb.to_coords(srmat::MatTuple(tw, std::move(blk))));
  }
  Code c = Code::from_mat_basis(amb, std::move(rows));
  CHECK(c.dim_fp() == 6);
  // every pattern idealiser splits as the direct sum of the single-block
  // idealisers; checked as subspace equalities
  auto direct_sum = [&](const inv::Subring& a, const inv::Subring& b) {
    fp::Matrix out(2, 0, amb.dim_fp());
    std::vector<std::uint8_t> row(amb.dim_fp(), 0);
    for (std::size_t i = 0; i < a.basis().rows(); ++i) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t k = 0; k < 16; ++k) row[k] = a.basis().at(i, k);
      out.append_row(row);
    }
    for (std::size_t i = 0; i < b.basis().rows(); ++i) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t k = 0; k < 16; ++k) row[16 + k] = b.basis().at(i, k);
      out.append_row(row);
    }
    return fp::rref(std::move(out)).mat;
  };
  CHECK(inv::s_idealiser(c, std::vector<int>{0, 0}).basis() == direct_sum(rf, rg));
  CHECK(inv::s_idealiser(c, std::vector<int>{1, 1}).basis() == direct_sum(lf, lg));
  CHECK(inv::s_idealiser(c, std::vector<int>{1, 0}).basis() == direct_sum(lf, rg));
  CHECK(inv::s_idealiser(c, std::vector<int>{0, 1}).basis() == direct_sum(rf, lg));
}

TEST_CASE("fingerprint of the span of the identity") {
  auto ring = ring_m2();
  fp::Matrix rows(5, 0, ring->dim_fp());
  rows.append_row(ring->to_coords(ring->one()));
  inv::Subring s(5, "quotient", std::move(rows),
                 [ring](std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
                   return ring->to_coords(ring->mul(ring->from_coords(u), ring->from_coords(v)));
                 },
                 ring->to_coords(ring->one()));
  inv::RingFingerprint f = inv::fingerprint(s);
  CHECK(f.size_exp == 1);
  CHECK(f.is_field);
  CHECK(f.residue_exps == std::vector<std::size_t>{1});
}

TEST_CASE("subrings that are not closed are rejected") {
  auto ring = ring_m2();
  fp::Matrix rows(5, 0, ring->dim_fp());
  rows.append_row(ring->to_coords(ring->monomial(1)));  // x alone: x*x leaves the span
  CHECK_THROWS_AS(inv::Subring(5, "quotient", std::move(rows),
                               [ring](std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
                                 return ring->to_coords(ring->mul(ring->from_coords(u), ring->from_coords(v)));
                               },
                               ring->to_coords(ring->one())),
                  std::logic_error);
}

TEST_CASE("strict subspace linearity with a large refined linearity") {
  // the one-block frame over F_16: the code {a + a^2 x + a^4 x^2} is
  // equivalent to a scalar-multiple code, so its left idealiser still
  // embeds the full field
  auto tw = gf::FieldTower::build(2, 1, 4, 1);
  auto ring = QuotientRing::create(tw, std::vector<Fel>{1}, std::vector<Fel>{1});
  fp::Matrix rows(2, 0, ring->dim_fp());
  Fel beta = 1;
  for (int r = 0; r < 4; ++r) {
    std::vector<Fel> coeffs{beta, tw->frob(beta, 1), tw->frob(beta, 2)};
    rows.append_row(ring->to_coords(ring->from_dense_coeffs(std::vector<Fel>{
        coeffs[0], coeffs[1], coeffs[2], 0})));
    beta *= 2;
  }
  Code c2 = Code::from_quot_basis(ring, std::move(rows));
  CHECK(c2.dim_fp() == 4);
  CHECK(codes::subspace_linearity_exp(c2) == 1);  // strictly F_2-linear as a subspace
  inv::LinearityDegree ld = inv::linearity_degree(c2);
  CHECK(ld.exact);
  CHECK(ld.exp == 4);  // the left idealiser contains a copy of F_16

  // any scalar-closed code has linearity degree at least q^m
  Code lrs = codes::construct_lrs(ring, 2);
  inv::LinearityDegree l2 = inv::linearity_degree(lrs);
  CHECK(l2.exp >= 4);
}

TEST_CASE("nuclear parameters of desk codes") {
  auto ring = ring_m3();
  Code lrs = codes::construct_lrs(ring, 3);
  inv::NuclearParameters np = inv::nuclear_parameters(lrs);
  CHECK(np.code_size_exp == 9);
  CHECK(np.left.size_exp == 3);
  CHECK(np.right.size_exp == 3);
  CHECK(np.centraliser.size_exp == 2);
  CHECK(np.center.size_exp == 1);
  CHECK(np.center_is_intersection);

  const Fel eta = codes::find_valid_eta(*ring, 3, 1);
  inv::NuclearParameters na = inv::nuclear_parameters(codes::construct_atlrs(ring, 3, eta, 1));
  CHECK(na.code_size_exp == 9);
  CHECK(na.left.size_exp == 1);
  CHECK(na.right.size_exp == 1);
  CHECK(na.centraliser.size_exp == 2);
  CHECK(na.center.size_exp == 1);

  auto r2 = ring_m2();
  inv::NuclearParameters nt =
      inv::nuclear_parameters(codes::construct_tz(r2, 2, codes::find_valid_gamma(*r2)));
  CHECK(nt.code_size_exp == 4);
  CHECK(nt.left.size_exp == 1);
  CHECK(nt.right.size_exp == 1);
  CHECK(nt.centraliser.size_exp == 2);
  CHECK(nt.center.size_exp == 1);
}

TEST_CASE("nuclear parameters are stable under unit scaling") {
  auto ring = ring_m2();
  Code lrs = codes::construct_lrs(ring, 2);
  inv::NuclearParameters before = inv::nuclear_parameters(lrs);
  Code scaled = codes::scale_right(lrs, ring->monomial(1));
  inv::NuclearParameters after = inv::nuclear_parameters(scaled);
  CHECK(before.left == after.left);
  CHECK(before.right == after.right);
  CHECK(before.centraliser == after.centraliser);
  CHECK(before.center == after.center);
}

TEST_CASE("block-diagonal shape of the embedded idealiser") {
  auto ring = ring_m2();
  Code lrs = codes::construct_lrs(ring, 2);
  Code mat = codes::to_matrix_code(lrs);
  const auto& amb = mat.mat_ambient();
  // embed each basis tuple as one block-diagonal matrix
  srmat::Shape big{{4}, {4}};
  srmat::Ambient bamb(ring->tower(), big);
  fp::Matrix rows(5, 0, bamb.dim_fp());
  for (std::size_t i = 0; i < mat.dim_fp(); ++i) {
    std::vector<srmat::FqMat> one{srmat::block_embed(mat.mat_element(i))};
    rows.append_row(bamb.to_coords(srmat::MatTuple(ring->tower(), std::move(one))));
  }
  Code embedded = Code::from_mat_basis(bamb, std::move(rows));
  inv::Subring lbig = inv::s_idealiser(embedded, std::vector<int>{1});
  // every element of the big left idealiser is block diagonal
  for (std::size_t i = 0; i < lbig.dim(); ++i) {
    srmat::MatTuple t = bamb.from_coords(lbig.basis().row_span(i));
    const srmat::FqMat& mtx = t.block(0);
    for (int r = 0; r < 4; ++r)
      for (int cc = 0; cc < 4; ++cc)
        if (r / 2 != cc / 2) CHECK(mtx.at(r, cc) == 0);
  }
  // and the diagonal blocks recover the blockwise left idealiser
  inv::Subring lsmall = inv::left_idealiser(mat);
  CHECK(lbig.dim() == lsmall.dim());
  fp::Matrix mapped(5, 0, bamb.dim_fp());
  for (std::size_t i = 0; i < lsmall.dim(); ++i) {
    srmat::MatTuple t = amb.from_coords(lsmall.basis().row_span(i));
    std::vector<srmat::FqMat> one{srmat::block_embed(t)};
    mapped.append_row(bamb.to_coords(srmat::MatTuple(ring->tower(), std::move(one))));
  }
  CHECK(fp::same_row_space(lbig.basis(), mapped));
}

TEST_CASE("distinguisher separates the desk families") {
  auto ring = ring_m3();
  Code lrs = codes::construct_lrs(ring, 3);
  const Fel eta = codes::find_valid_eta(*ring, 3, 1);
  Code atlrs = codes::construct_atlrs(ring, 3, eta, 1);
  inv::DistinguishOptions opt;
  opt.compare_weights = false;  // both are maximum distance codes; go straight to the rings
  inv::DistinguishResult d = inv::distinguish(lrs, atlrs, opt);
  CHECK(d.verdict == inv::Verdict::inequivalent);
  CHECK(d.witness == "s-idealiser[11]");  // left idealisers 5^3 vs 5

  // an isometric copy is never separated
  auto r2 = ring_m2();
  Code tz = codes::construct_tz(r2, 2, codes::find_valid_gamma(*r2));
  Code mat = codes::to_matrix_code(tz);
  std::mt19937_64 rng(109);
  Code moved = codes::apply_isometry_code(mat, srmat::random_isometry(r2->tower(), mat.mat_ambient().shape(), rng));
  inv::DistinguishResult u = inv::distinguish(mat, moved);
  CHECK(u.verdict == inv::Verdict::undetermined);

  // two twists with different fixed fields are separated
  auto tw4 = gf::FieldTower::build(5, 1, 4, 1);
  auto r4 = QuotientRing::create(tw4, std::vector<Fel>{1, 4});
  const Fel e1 = codes::find_valid_eta(*r4, 3, 1);
  const Fel e2 = codes::find_valid_eta(*r4, 3, 2);
  REQUIRE(e1 != 0);
  REQUIRE(e2 != 0);
  inv::DistinguishResult d2 =
      inv::distinguish(codes::construct_atlrs(r4, 3, e1, 1), codes::construct_atlrs(r4, 3, e2, 2), opt);
  CHECK(d2.verdict == inv::Verdict::inequivalent);
}

TEST_CASE("idealisers in the upper parameter window with a subgroup lambda set") {
  // tm = 8, k = 5 sits in the window tm/2 + 1 .. tm - 3, covered through duality
  auto tw = gf::FieldTower::build(5, 1, 4, 1);
  auto ring = QuotientRing::create(tw, std::vector<Fel>{1, 4});
  Code lrs = codes::construct_lrs(ring, 5);
  suites::SuiteResult s1 = suites::suite_idealisers_atlrs(lrs);
  CHECK(s1.passed());  // both idealisers the full field F_{5^4}
  CHECK(inv::left_idealiser(lrs).dim() == 4);
  CHECK(inv::right_idealiser(lrs).dim() == 4);

  const Fel eta = codes::find_valid_eta(*ring, 5, 1);
  REQUIRE(eta != 0);
  Code atlrs = codes::construct_atlrs(ring, 5, eta, 1);
  // tau^{-1} o theta^5 is the identity here, so the right side is the full field
  CHECK(inv::left_idealiser(atlrs).dim() == 1);
  CHECK(inv::right_idealiser(atlrs).dim() == 4);
  CHECK(suites::suite_idealisers_atlrs(atlrs).passed());
  CHECK(suites::suite_centraliser_lrs(atlrs).passed());
}

TEST_CASE("distinguisher compares codes from different quotient presentations") {
  // same matrix space, different evaluation sets
  auto tw = gf::FieldTower::build(5, 1, 2, 1);
  auto ring_a = QuotientRing::create(tw, std::vector<Fel>{2, 3});
  auto ring_b = QuotientRing::create(tw, std::vector<Fel>{1, 4});
  Code lrs = codes::construct_lrs(ring_a, 2);
  Code tz = codes::construct_tz(ring_b, 2, codes::find_valid_gamma(*ring_b));
  inv::DistinguishResult d = inv::distinguish(lrs, tz);
  CHECK(d.verdict == inv::Verdict::inequivalent);
  CHECK(d.witness == "s-idealiser[11]");  // F_25 vs F_5
  // and two untwisted codes over different evaluation sets stay undetermined
  Code lrs_b = codes::construct_lrs(ring_b, 2);
  inv::DistinguishResult u = inv::distinguish(lrs, lrs_b);
  CHECK(u.verdict == inv::Verdict::undetermined);
}

TEST_CASE("invariants are preserved by random isometries") {
  auto ring = ring_m2();
  Code tz = codes::construct_tz(ring, 2, codes::find_valid_gamma(*ring));
  Code mat = codes::to_matrix_code(tz);
  std::vector<std::pair<std::string, inv::RingFingerprint>> base;
  for (int mask = 0; mask < 4; ++mask) {
    std::vector<int> s{mask & 1, (mask >> 1) & 1};
    base.emplace_back("s", inv::fingerprint(inv::s_idealiser(mat, s)));
  }
  std::mt19937_64 rng(113);
  for (int rep = 0; rep < 5; ++rep) {
    srmat::Isometry iso = srmat::random_isometry(ring->tower(), mat.mat_ambient().shape(), rng);
    Code moved = codes::apply_isometry_code(mat, iso);
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<int> s{mask & 1, (mask >> 1) & 1};
      CHECK(inv::fingerprint(inv::s_idealiser(moved, s)) == base[static_cast<std::size_t>(mask)].second);
    }
  }
}

TEST_CASE("centraliser splits into one residue field per block") {
  // three blocks: the centraliser decomposes as F_5 x F_5 x F_5
  auto tw = gf::FieldTower::build(5, 1, 2, 1);
  auto ring = QuotientRing::create(tw, std::vector<Fel>{1, 2, 4});
  Code lrs = codes::construct_lrs(ring, 2);
  inv::RingFingerprint ce = inv::fingerprint(inv::centraliser(lrs));
  CHECK(ce.size_exp == 3);
  CHECK(ce.decomposition_complete);
  CHECK(ce.residue_exps == std::vector<std::size_t>{1, 1, 1});

  // over a proper extension base field the residues are copies of F_q
  auto tw4 = gf::FieldTower::build(2, 2, 2, 1);
  auto fq = tw4->subfield_elements(2);
  Fel omega = 0;
  for (Fel a : fq)
    if (a && a != 1) {
      omega = a;
      break;
    }
  auto ring4 = QuotientRing::create(tw4, std::vector<Fel>{1, omega});
  Code lrs4 = codes::construct_lrs(ring4, 2);
  inv::RingFingerprint ce4 = inv::fingerprint(inv::centraliser(lrs4));
  CHECK(ce4.size_exp == 4);  // q^t with q = 4, t = 2
  CHECK(ce4.decomposition_complete);
  CHECK(ce4.residue_exps == std::vector<std::size_t>{2, 2});
  inv::RingFingerprint il4 = inv::fingerprint(inv::left_idealiser(lrs4));
  CHECK(il4.size_exp == 4);  // F_{q^m} = F_16
  CHECK(il4.is_field);
}

TEST_CASE("pattern idealisers of maximum-distance desk codes are fields") {
  auto r2 = ring_m2();
  const int m = r2->m(), e = r2->tower()->e();
  for (Code c : {codes::construct_lrs(r2, 2), codes::construct_tz(r2, 2, codes::find_valid_gamma(*r2)),
                 codes::construct_atlrs(r2, 2, codes::find_valid_eta(*r2, 2, 1), 1)}) {
    Code mat = codes::to_matrix_code(c);
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<int> s{mask & 1, (mask >> 1) & 1};
      inv::RingFingerprint f = inv::fingerprint(inv::s_idealiser(mat, s));
      CHECK(f.is_field);
      // size bound for equal square blocks
      CHECK(f.size_exp <= static_cast<std::size_t>(m * e));
    }
  }
}

TEST_CASE("twisted code over a degree-two base with asymmetric idealisers") {
  // q = 4, m = 6, one block; tau = frob^4 gives Fix(tau) = F_16 on the left
  // and Fix(tau^{-1} o theta^3) = F_4 on the right
  auto tw = gf::FieldTower::build(2, 2, 6, 1);
  auto ring = QuotientRing::create(tw, std::vector<Fel>{1});
  // no twist is valid when the reference subfield collapses to F_2: every
  // nonzero norm is 1 and lies in the subgroup
  CHECK(codes::find_valid_eta(*ring, 3, 3) == 0);
  const Fel eta = codes::find_valid_eta(*ring, 3, 4);
  REQUIRE(eta != 0);
  Code c = codes::construct_atlrs(ring, 3, eta, 4);
  CHECK(c.dim_fp() == 36);
  suites::SuiteResult ideal = suites::suite_idealisers_atlrs(c);
  CHECK(ideal.passed());
  suites::SuiteResult cent = suites::suite_centraliser_lrs(c);
  CHECK(cent.passed());
  inv::NuclearParameters np = inv::nuclear_parameters(c);
  CHECK(np.code_size_exp == 36);
  CHECK(np.left.size_exp == 4);   // F_16
  CHECK(np.right.size_exp == 2);  // F_4
  CHECK(np.left.is_field);
  CHECK(np.right.is_field);
  CHECK(np.centraliser.size_exp == 2);
  CHECK(np.centraliser.residue_exps == std::vector<std::size_t>{2});
  CHECK(np.center.size_exp == 2);  // F_q is fixed by tau here
}

TEST_CASE("adjoint and duality identities on a small battery") {
  suites::SuiteOptions opt;
  opt.battery_size = 6;
  opt.seed = 4242;
  auto sr = suites::suite_duality_ideal(gf::FieldTower::build(3, 1, 2, 1), 2, opt);
  CHECK(sr.passed());
}
