#include "skewrank/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace skewrank::suites {

using codes::Family;
using gf::Fel;
using inv::RingFingerprint;
using srmat::MatTuple;

namespace {

TheoremCheck size_check(std::string name, std::size_t expected_exp, const RingFingerprint& got, int p) {
  TheoremCheck c;
  c.name = std::move(name);
  c.expected = std::to_string(p) + "^" + std::to_string(expected_exp);
  c.got = std::to_string(p) + "^" + std::to_string(got.size_exp);
  c.pass = got.size_exp == expected_exp;
  return c;
}

TheoremCheck flag_check(std::string name, bool expected, bool got) {
  TheoremCheck c;
  c.name = std::move(name);
  c.expected = expected ? "true" : "false";
  c.got = got ? "true" : "false";
  c.pass = expected == got;
  return c;
}

SuiteResult finish(SuiteResult r) {
  if (r.status.empty())
    r.status = std::all_of(r.checks.begin(), r.checks.end(),
                           [](const TheoremCheck& c) { return c.pass; })
                   ? "PASS"
                   : "FAIL";
  return r;
}

bool lambda_is_subgroup(const quot::QuotientRing& ring) {
  auto closure = codes::lambda_subgroup(*ring.tower(), ring.lambdas());
  std::vector<Fel> sorted(ring.lambdas().begin(), ring.lambdas().end());
  std::sort(sorted.begin(), sorted.end());
  return closure == sorted;
}

// right idealiser fixed-field exponent: tau^{-1} composed with theta^k
int right_fix_exponent(const gf::FieldTower& tw, int tau_h, int k) {
  const int me = tw.me();
  const int h = ((me - tau_h % me) % me + tw.theta_as_p_exponent(k)) % me;
  return tw.fixed_field_exponent(h);
}

}  // namespace

SuiteResult suite_idealisers_atlrs(const Code& c, const SuiteOptions& opt) {
  SuiteResult r{.suite = "idealisers-atlrs"};
  const auto& prov = c.provenance();
  if (!c.is_quot() || (prov.family != Family::lrs && prov.family != Family::atlrs)) {
    r.status = "SKIP";
    r.reason = "needs an untwisted or additively twisted quotient-ambient code";
    return r;
  }
  const auto& ring = *c.ring();
  const auto& tw = *ring.tower();
  const int tm = ring.tm(), k = prov.k;
  const bool lower = 3 <= k && 2 * k <= tm;
  const bool upper = 2 * k >= tm + 2 && k <= tm - 3 && lambda_is_subgroup(ring);
  if (!lower && !upper) {
    r.status = "SKIP";
    r.reason = "hypothesis 3 <= k <= tm/2 violated (and no cyclic-lambda fallback window)";
    return r;
  }
  std::size_t exp_left, exp_right;
  if (prov.family == Family::lrs) {
    exp_left = static_cast<std::size_t>(tw.me());
    exp_right = static_cast<std::size_t>(tw.me());
  } else {
    exp_left = static_cast<std::size_t>(tw.fixed_field_exponent(prov.tau_h));
    exp_right = static_cast<std::size_t>(right_fix_exponent(tw, prov.tau_h, k));
  }
  RingFingerprint fl = inv::fingerprint(inv::left_idealiser(c), opt.ring_cap);
  RingFingerprint fr = inv::fingerprint(inv::right_idealiser(c), opt.ring_cap);
  r.checks.push_back(size_check("left idealiser size", exp_left, fl, tw.p()));
  r.checks.push_back(size_check("right idealiser size", exp_right, fr, tw.p()));
  r.checks.push_back(flag_check("left idealiser is a field", true, fl.is_field));
  r.checks.push_back(flag_check("right idealiser is a field", true, fr.is_field));
  return finish(std::move(r));
}

SuiteResult suite_centraliser_lrs(const Code& c, const SuiteOptions& opt) {
  SuiteResult r{.suite = "centraliser-lrs"};
  const auto& prov = c.provenance();
  if (!c.is_quot() || (prov.family != Family::lrs && prov.family != Family::atlrs)) {
    r.status = "SKIP";
    r.reason = "needs an untwisted or additively twisted quotient-ambient code";
    return r;
  }
  const auto& ring = *c.ring();
  const auto& tw = *ring.tower();
  const int tm = ring.tm(), k = prov.k;
  if (k < 2 || k > tm - 1) {
    r.status = "SKIP";
    r.reason = "hypothesis 2 <= k <= tm - 1 violated";
    return r;
  }
  if (2 * k > tm && !lambda_is_subgroup(ring)) {
    r.status = "SKIP";
    r.reason = "k > tm/2 requires the lambda set to be a cyclic subgroup";
    return r;
  }
  Code normalized = c.contains_identity() ? c : codes::normalize_to_identity(c, opt.enum_cap);
  RingFingerprint ce = inv::fingerprint(inv::centraliser(normalized), opt.ring_cap);
  RingFingerprint z = inv::fingerprint(inv::center(normalized), opt.ring_cap);
  const std::size_t exp_c = static_cast<std::size_t>(tw.e()) * ring.t();
  const std::size_t exp_z =
      prov.family == Family::lrs
          ? static_cast<std::size_t>(tw.e())
          : static_cast<std::size_t>(std::gcd(tw.e(), tw.fixed_field_exponent(prov.tau_h)));
  r.checks.push_back(size_check("centraliser size", exp_c, ce, tw.p()));
  {
    TheoremCheck chk;
    chk.name = "centraliser residue fields";
    std::vector<std::size_t> expect(static_cast<std::size_t>(ring.t()),
                                    static_cast<std::size_t>(tw.e()));
    chk.expected = "t copies of F_q";
    chk.got = ce.decomposition_complete ? "complete decomposition" : "incomplete decomposition";
    chk.pass = ce.decomposition_complete && ce.residue_exps == expect;
    r.checks.push_back(chk);
  }
  r.checks.push_back(size_check("center size", exp_z, z, tw.p()));
  return finish(std::move(r));
}

SuiteResult suite_tz_idealisers(const Code& c, const SuiteOptions& opt) {
  SuiteResult r{.suite = "tz-idealisers"};
  const auto& prov = c.provenance();
  if (!c.is_quot() || prov.family != Family::tz) {
    r.status = "SKIP";
    r.reason = "needs a tz-family quotient-ambient code";
    return r;
  }
  const auto& ring = *c.ring();
  const auto& tw = *ring.tower();
  const int tm = ring.tm(), k = prov.k, m = tw.m();
  const bool lower = 2 <= k && 2 * k <= tm;
  const bool upper = 2 * k >= tm + 2 && k <= tm - 2 && lambda_is_subgroup(ring);
  if (!lower && !upper) {
    r.status = "SKIP";
    r.reason = "hypothesis 2 <= k <= tm/2 violated (and no cyclic-lambda fallback window)";
    return r;
  }
  const std::size_t exp_half = static_cast<std::size_t>(tw.e()) * (m / 2);
  RingFingerprint fl = inv::fingerprint(inv::left_idealiser(c), opt.ring_cap);
  RingFingerprint fr = inv::fingerprint(inv::right_idealiser(c), opt.ring_cap);
  r.checks.push_back(size_check("left idealiser size", exp_half, fl, tw.p()));
  r.checks.push_back(size_check("right idealiser size", exp_half, fr, tw.p()));
  r.checks.push_back(flag_check("left idealiser is a field", true, fl.is_field));
  r.checks.push_back(flag_check("right idealiser is a field", true, fr.is_field));
  if (m / 2 >= 2 && k <= tm - 2) {
    Code normalized = c.contains_identity() ? c : codes::normalize_to_identity(c, opt.enum_cap);
    RingFingerprint ce = inv::fingerprint(inv::centraliser(normalized), opt.ring_cap);
    RingFingerprint z = inv::fingerprint(inv::center(normalized), opt.ring_cap);
    r.checks.push_back(
        size_check("centraliser size", static_cast<std::size_t>(tw.e()) * ring.t(), ce, tw.p()));
    r.checks.push_back(size_check("center size", static_cast<std::size_t>(tw.e()), z, tw.p()));
  }
  return finish(std::move(r));
}

SuiteResult suite_duality_lrs(const Code& c, const SuiteOptions&) {
  SuiteResult r{.suite = "duality-lrs"};
  const auto& prov = c.provenance();
  if (!c.is_quot() || prov.family == Family::custom) {
    r.status = "SKIP";
    r.reason = "needs a constructed quotient-ambient code";
    return r;
  }
  const auto& ringp = c.ring();
  const auto& ring = *ringp;
  const auto& tw = *ring.tower();
  if (!lambda_is_subgroup(ring)) {
    r.status = "SKIP";
    r.reason = "the lambda set must be a cyclic subgroup of F_q^*";
    return r;
  }
  const int tm = ring.tm(), k = prov.k;
  Code dual = codes::dual_of(c);
  const quot::QuotElement xk = ring.monomial(k);
  if (prov.family == Family::lrs) {
    Code expect = codes::scale_right(codes::construct_lrs(ringp, tm - k), xk);
    r.checks.push_back(flag_check("dual equals the length-complement scaled by x^k", true,
                                  dual.same_subspace(expect)));
    Code expect_left = codes::scale_left(codes::construct_lrs(ringp, tm - k), xk);
    r.checks.push_back(flag_check("right and left scalings by x^k agree", true,
                                  expect.same_subspace(expect_left)));
  } else if (prov.family == Family::atlrs) {
    const int me = tw.me();
    const int inv_h = (me - prov.tau_h % me) % me;
    // the twist parameter of the dual picks up the constant term of the
    // modulus, which is -1 when Lambda is a subgroup
    const Fel eta2 = tw.mul(tw.frob(prov.eta, inv_h), tw.inv(ring.modulus().coeff(0)));
    Code expect = codes::scale_right(codes::construct_atlrs(ringp, tm - k, eta2, inv_h), xk);
    r.checks.push_back(flag_check("dual equals the inverse-twisted complement scaled by x^k", true,
                                  dual.same_subspace(expect)));
  } else {
    Code expect = codes::scale_right(codes::construct_tz(ringp, tm - k, tw.neg(prov.gamma)), xk);
    r.checks.push_back(flag_check("dual equals the gamma-negated complement scaled by x^k", true,
                                  dual.same_subspace(expect)));
  }
  r.checks.push_back(flag_check("double dual returns the code", true,
                                codes::dual_of(dual).same_subspace(c)));
  return finish(std::move(r));
}

SuiteResult suite_duality_ideal(gf::TowerPtr tw, int t, const SuiteOptions& opt) {
  SuiteResult r{.suite = "duality-ideal"};
  const int m = tw->m();
  if (m < 2) {
    r.status = "SKIP";
    r.reason = "blocks of size 1 are outside the isometry classification";
    return r;
  }
  srmat::Shape shape;
  shape.rows.assign(static_cast<std::size_t>(t), m);
  shape.cols.assign(static_cast<std::size_t>(t), m);
  srmat::Ambient amb(tw, shape);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> digit(0, tw->p() - 1);
  const std::size_t dim = amb.dim_fp();
  std::uniform_int_distribution<std::size_t> dim_pick(1, dim - 1);
  int failures = 0;
  for (int rep = 0; rep < opt.battery_size; ++rep) {
    fp::Matrix rows(tw->p(), 0, dim);
    const std::size_t want = dim_pick(rng);
    std::vector<std::uint8_t> row(dim);
    for (std::size_t i = 0; i < want; ++i) {
      for (auto& v : row) v = static_cast<std::uint8_t>(digit(rng));
      rows.append_row(row);
    }
    Code c = codes::Code::from_mat_basis(amb, std::move(rows));
    if (c.dim_fp() == 0) continue;
    Code cperp = codes::dual_of(c);
    for (int vm = 0; vm < (1 << t); ++vm) {
      std::vector<int> v(static_cast<std::size_t>(t));
      for (int i = 0; i < t; ++i) v[static_cast<std::size_t>(i)] = (vm >> i) & 1;
      Code cv = codes::v_adjoint_code(c, v);
      for (int sm = 0; sm < (1 << t); ++sm) {
        std::vector<int> s(static_cast<std::size_t>(t)), sv(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) {
          s[static_cast<std::size_t>(i)] = (sm >> i) & 1;
          sv[static_cast<std::size_t>(i)] = ((sm ^ vm) >> i) & 1;
        }
        // I_s(C^v) = (I_{s-v}(C))^v
        inv::Subring lhs = inv::s_idealiser(cv, s);
        inv::Subring rhs = inv::s_idealiser(c, sv);
        fp::Matrix transposed(tw->p(), 0, dim);
        for (std::size_t i = 0; i < rhs.basis().rows(); ++i) {
          MatTuple x = amb.from_coords(rhs.basis().row_span(i));
          transposed.append_row(amb.to_coords(srmat::v_adjoint(x, v)));
        }
        if (!fp::same_row_space(lhs.basis(), transposed)) ++failures;
        if (vm == 0) {
          // I_s(C^perp) = (I_s(C))^1
          inv::Subring lp = inv::s_idealiser(cperp, s);
          inv::Subring ls = inv::s_idealiser(c, s);
          std::vector<int> ones(static_cast<std::size_t>(t), 1);
          fp::Matrix tr(tw->p(), 0, dim);
          for (std::size_t i = 0; i < ls.basis().rows(); ++i) {
            MatTuple x = amb.from_coords(ls.basis().row_span(i));
            tr.append_row(amb.to_coords(srmat::v_adjoint(x, ones)));
          }
          if (!fp::same_row_space(lp.basis(), tr)) ++failures;
        }
      }
    }
  }
  TheoremCheck chk;
  chk.name = "adjoint and duality identities over the random battery";
  chk.expected = "0 failures";
  chk.got = std::to_string(failures) + " failures";
  chk.pass = failures == 0;
  r.checks.push_back(chk);
  return finish(std::move(r));
}

SuiteResult suite_inequivalence(std::span<const Code> cs, const SuiteOptions& opt) {
  SuiteResult r{.suite = "inequivalence"};
  if (cs.size() < 2) {
    r.status = "SKIP";
    r.reason = "needs at least two codes";
    return r;
  }
  inv::DistinguishOptions dopt;
  dopt.ring_cap = opt.ring_cap;
  dopt.enum_cap = opt.enum_cap;
  dopt.workers = opt.workers;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      inv::DistinguishResult d = inv::distinguish(cs[i], cs[j], dopt);
      TheoremCheck chk;
      chk.name = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      chk.expected = "INEQUIVALENT";
      chk.got = d.verdict == inv::Verdict::inequivalent ? "INEQUIVALENT (witness: " + d.witness + ")"
                                                        : "UNDETERMINED";
      chk.pass = d.verdict == inv::Verdict::inequivalent;
      r.checks.push_back(chk);
    }
  return finish(std::move(r));
}

namespace {

SuiteResult msrd_hypotheses(const char* suite, const Code& c, codes::CodeReport& rep,
                            const SuiteOptions& opt) {
  SuiteResult r{.suite = suite};
  const auto& tw = *c.tower();
  srmat::Shape shape = c.is_quot()
                           ? srmat::Shape{std::vector<int>(static_cast<std::size_t>(c.ring()->t()), c.ring()->m()),
                                          std::vector<int>(static_cast<std::size_t>(c.ring()->t()), c.ring()->m())}
                           : c.mat_ambient().shape();
  const int t = shape.blocks();
  for (int i = 0; i < t; ++i)
    if (std::max(shape.rows[static_cast<std::size_t>(i)], shape.cols[static_cast<std::size_t>(i)]) <= 1) {
      r.status = "SKIP";
      r.reason = "blocks of size 1 are outside the isometry classification";
      return r;
    }
  if (!(std::equal(shape.rows.begin() + 1, shape.rows.end(), shape.rows.begin()) &&
        std::equal(shape.cols.begin() + 1, shape.cols.end(), shape.cols.begin()))) {
    r.status = "SKIP";
    r.reason = "hypothesis of equal block sizes violated";
    return r;
  }
  if (static_cast<std::uint64_t>(t) > tw.q() - 1) {
    r.status = "SKIP";
    r.reason = "hypothesis t <= q - 1 violated";
    return r;
  }
  rep = codes::weight_distribution(c, opt.enum_cap, opt.workers);
  if (!rep.msrd) {
    r.status = "SKIP";
    r.reason = "the code does not attain the size bound at its minimum distance";
    return r;
  }
  return r;
}

}  // namespace

SuiteResult suite_nondegeneracy_msrd(const Code& c, const SuiteOptions& opt) {
  codes::CodeReport rep;
  SuiteResult r = msrd_hypotheses("nondegeneracy-msrd", c, rep, opt);
  if (!r.status.empty()) return r;
  r.checks.push_back(flag_check("nondegenerate", true, rep.nondegenerate));
  return finish(std::move(r));
}

SuiteResult suite_weights_msrd(const Code& c, const SuiteOptions& opt) {
  codes::CodeReport rep;
  SuiteResult r = msrd_hypotheses("weights-msrd", c, rep, opt);
  if (!r.status.empty()) return r;
  const int maxw = static_cast<int>(rep.weights.size()) - 1;
  bool all_positive = true;
  for (int w = rep.min_distance; w <= maxw; ++w)
    if (rep.weights[static_cast<std::size_t>(w)] == 0) all_positive = false;
  TheoremCheck chk;
  chk.name = "every weight from d to the maximum occurs";
  chk.expected = "positive counts";
  chk.got = all_positive ? "positive counts" : "a gap in the spectrum";
  chk.pass = all_positive;
  r.checks.push_back(chk);
  return finish(std::move(r));
}

SuiteResult run_named_suite(const std::string& name, std::span<const Code> cs,
                            gf::TowerPtr tower_for_battery, const SuiteOptions& opt) {
  auto need_code = [&]() -> const Code& {
    if (cs.empty()) throw std::invalid_argument("suites: this suite needs a code");
    return cs[0];
  };
  if (name == "idealisers-atlrs") return suite_idealisers_atlrs(need_code(), opt);
  if (name == "centraliser-lrs") return suite_centraliser_lrs(need_code(), opt);
  if (name == "tz-idealisers") return suite_tz_idealisers(need_code(), opt);
  if (name == "duality-lrs") return suite_duality_lrs(need_code(), opt);
  if (name == "duality-ideal") {
    if (!tower_for_battery) throw std::invalid_argument("suites: duality-ideal needs a field spec");
    int t = cs.empty() ? 2 : (cs[0].is_quot() ? cs[0].ring()->t() : cs[0].mat_ambient().shape().blocks());
    return suite_duality_ideal(std::move(tower_for_battery), t, opt);
  }
  if (name == "inequivalence") return suite_inequivalence(cs, opt);
  if (name == "nondegeneracy-msrd") return suite_nondegeneracy_msrd(need_code(), opt);
  if (name == "weights-msrd") return suite_weights_msrd(need_code(), opt);
  throw std::invalid_argument("suites: unknown suite: " + name);
}

std::vector<std::string> suite_names() {
  return {"idealisers-atlrs", "centraliser-lrs", "tz-idealisers",    "duality-lrs",
          "duality-ideal",    "inequivalence",   "nondegeneracy-msrd", "weights-msrd"};
}

}  // namespace skewrank::suites
