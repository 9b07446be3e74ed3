#include "skewrank/io.hpp"

#include <algorithm>

namespace skewrank::io {

std::string pow_decimal(int p, std::size_t exp) {
  std::vector<int> digits{1};  // little-endian base 10
  for (std::size_t i = 0; i < exp; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      const int v = d * p + carry;
      d = v % 10;
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(carry % 10);
      carry /= 10;
    }
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

json size_json(int p, std::size_t exp) {
  return json{{"p", p}, {"exp", exp}, {"value", pow_decimal(p, exp)}};
}

json poly_to_json(const gf::Poly& f) {
  json j = json::array();
  for (auto c : f) j.push_back(static_cast<int>(c));
  return j;
}

gf::Poly poly_from_json(const json& j) {
  gf::Poly f;
  for (const auto& c : j) f.push_back(static_cast<std::uint8_t>(c.get<int>()));
  return f;
}

json fel_to_json(const gf::FieldTower& tw, gf::Fel a) {
  json j = json::array();
  for (auto c : tw.coords(a)) j.push_back(static_cast<int>(c));
  return j;
}

gf::Fel fel_from_json(const gf::FieldTower& tw, const json& j) {
  std::vector<std::uint8_t> c;
  for (const auto& d : j) c.push_back(static_cast<std::uint8_t>(d.get<int>()));
  if (static_cast<int>(c.size()) != tw.me())
    throw std::invalid_argument("io: element coordinate array must have length m*e");
  return tw.from_coords(c);
}

gf::TowerPtr tower_from_json(const json& spec) {
  if (!spec.contains("p") || !spec.contains("e") || !spec.contains("m") ||
      !spec.contains("theta_exponent"))
    throw std::invalid_argument("io: field spec requires p, e, m, theta_exponent");
  std::optional<gf::Poly> mq, mqm;
  if (spec.contains("modulus_q")) mq = poly_from_json(spec["modulus_q"]);
  if (spec.contains("modulus_qm")) mqm = poly_from_json(spec["modulus_qm"]);
  return gf::FieldTower::build(spec["p"].get<int>(), spec["e"].get<int>(), spec["m"].get<int>(),
                               spec["theta_exponent"].get<int>(), mq, mqm);
}

json tower_resolved_json(const gf::FieldTower& tw) {
  return json{{"p", tw.p()},
              {"e", tw.e()},
              {"m", tw.m()},
              {"theta_exponent", tw.theta_exponent()},
              {"modulus_q", poly_to_json(tw.modulus_q())},
              {"modulus_qm", poly_to_json(tw.modulus_qm())}};
}

quot::RingPtr ring_from_json(const json& config) {
  if (!config.contains("field")) throw std::invalid_argument("io: config requires a field spec");
  gf::TowerPtr tw = tower_from_json(config["field"]);
  if (!config.contains("ring") || !config["ring"].contains("lambdas"))
    throw std::invalid_argument("io: config requires ring.lambdas");
  std::vector<gf::Fel> lambdas, alphas;
  for (const auto& l : config["ring"]["lambdas"]) lambdas.push_back(fel_from_json(*tw, l));
  if (config["ring"].contains("alphas"))
    for (const auto& a : config["ring"]["alphas"]) alphas.push_back(fel_from_json(*tw, a));
  return quot::QuotientRing::create(tw, std::move(lambdas), std::move(alphas));
}

json ring_resolved_json(const quot::QuotientRing& ring) {
  const auto& tw = *ring.tower();
  json lam = json::array(), alp = json::array();
  for (auto l : ring.lambdas()) lam.push_back(fel_to_json(tw, l));
  for (auto a : ring.alphas()) alp.push_back(fel_to_json(tw, a));
  return json{{"field", tower_resolved_json(tw)},
              {"lambdas", lam},
              {"alphas", alp},
              {"t", ring.t()},
              {"modulus_text", skew_poly_to_text(tw, ring.modulus())}};
}

codes::Code code_from_json(const json& config, const json& spec) {
  const std::string family = spec.value("family", "custom");
  if (family == "custom" && spec.contains("shape")) {
    // matrix-ambient code: shape header plus basis tuples of row-major
    // matrices with entries as F_p coordinate tuples
    gf::TowerPtr tw = tower_from_json(spec.contains("field") ? spec["field"] : config["field"]);
    srmat::Shape shape;
    for (const auto& v : spec["shape"]["m"]) shape.rows.push_back(v.get<int>());
    for (const auto& v : spec["shape"]["n"]) shape.cols.push_back(v.get<int>());
    srmat::Ambient amb(tw, shape);
    fp::Matrix rows(tw->p(), 0, amb.dim_fp());
    for (const auto& tuple : spec["basis"]) {
      std::vector<srmat::FqMat> blocks;
      for (int b = 0; b < shape.blocks(); ++b) {
        srmat::FqMat blk(shape.rows[static_cast<std::size_t>(b)], shape.cols[static_cast<std::size_t>(b)]);
        const auto& jb = tuple[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < blk.a.size(); ++i) blk.a[i] = fel_from_json(*tw, jb[i]);
        blocks.push_back(std::move(blk));
      }
      rows.append_row(amb.to_coords(srmat::MatTuple(tw, std::move(blocks))));
    }
    return codes::Code::from_mat_basis(std::move(amb), std::move(rows));
  }
  json ring_cfg;
  ring_cfg["field"] = spec.contains("field") ? spec["field"] : config.at("field");
  if (spec.contains("ring"))
    ring_cfg["ring"] = spec["ring"];
  else if (config.contains("ring"))
    ring_cfg["ring"] = config["ring"];
  quot::RingPtr ring = ring_from_json(ring_cfg);
  const auto& tw = *ring->tower();
  if (family == "lrs") return codes::construct_lrs(ring, spec.at("k").get<int>());
  if (family == "atlrs") {
    const int k = spec.at("k").get<int>();
    const int tau_h = spec.value("tau_h", 0);
    gf::Fel eta;
    if (spec.contains("eta") && spec["eta"].is_string() && spec["eta"] == "auto") {
      eta = codes::find_valid_eta(*ring, k, tau_h);
      if (!eta) throw std::invalid_argument("io: no valid eta exists for these parameters");
    } else {
      eta = fel_from_json(tw, spec.at("eta"));
    }
    return codes::construct_atlrs(ring, k, eta, tau_h);
  }
  if (family == "tz") {
    const int k = spec.at("k").get<int>();
    gf::Fel gamma;
    if (spec.contains("gamma") && spec["gamma"].is_string() && spec["gamma"] == "auto") {
      gamma = codes::find_valid_gamma(*ring);
      if (!gamma) throw std::invalid_argument("io: no valid gamma exists for these parameters");
    } else {
      gamma = fel_from_json(tw, spec.at("gamma"));
    }
    return codes::construct_tz(ring, k, gamma);
  }
  if (family == "custom") {
    fp::Matrix rows(tw.p(), 0, ring->dim_fp());
    for (const auto& row : spec.at("basis")) {
      std::vector<std::uint8_t> coords;
      for (const auto& v : row) coords.push_back(static_cast<std::uint8_t>(v.get<int>()));
      rows.append_row(coords);
    }
    return codes::Code::from_quot_basis(ring, std::move(rows));
  }
  throw std::invalid_argument("io: unknown code family: " + family);
}

std::string skew_poly_to_text(const gf::FieldTower& tw, const skew::SkewPoly& f) {
  json j = json::array();
  const int deg = f.degree().value_or(-1);
  for (int i = 0; i <= deg; ++i) j.push_back(fel_to_json(tw, f.coeff(static_cast<std::size_t>(i))));
  return j.dump();
}

skew::SkewPoly skew_poly_from_text(gf::TowerPtr tw, const std::string& text) {
  json j = json::parse(text);
  std::vector<gf::Fel> coeffs;
  for (const auto& c : j) coeffs.push_back(fel_from_json(*tw, c));
  return skew::SkewPoly(std::move(tw), std::move(coeffs));
}

namespace {

std::string family_name(codes::Family f) {
  switch (f) {
    case codes::Family::lrs:
      return "lrs";
    case codes::Family::atlrs:
      return "atlrs";
    case codes::Family::tz:
      return "tz";
    default:
      return "custom";
  }
}

}  // namespace

json code_summary_json(const codes::Code& c) {
  json j;
  j["ambient"] = c.is_quot() ? "quotient" : "matrix";
  j["dim_fp"] = c.dim_fp();
  j["size"] = size_json(c.p(), c.dim_fp());
  const auto& prov = c.provenance();
  j["family"] = family_name(prov.family);
  if (prov.family != codes::Family::custom) {
    j["k"] = prov.k;
    if (prov.family == codes::Family::atlrs) {
      j["eta"] = fel_to_json(*c.tower(), prov.eta);
      j["tau_h"] = prov.tau_h;
    }
    if (prov.family == codes::Family::tz) j["gamma"] = fel_to_json(*c.tower(), prov.gamma);
  }
  json rows = json::array();
  for (std::size_t i = 0; i < c.basis().rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < c.basis().cols(); ++k) row.push_back(static_cast<int>(c.basis().at(i, k)));
    rows.push_back(row);
  }
  j["basis"] = rows;
  return j;
}

json code_report_to_json(int p, const codes::CodeReport& rep) {
  json j;
  j["size"] = size_json(p, rep.dim_fp);
  j["min_distance"] = rep.min_distance;
  json w = json::array();
  for (auto v : rep.weights) w.push_back(v);
  j["weights"] = w;
  j["msrd"] = rep.msrd;
  j["nondegenerate"] = rep.nondegenerate;
  j["exact"] = rep.exact;
  if (!rep.min_weight_witness.empty()) {
    json ws = json::array();
    for (auto d : rep.min_weight_witness) ws.push_back(static_cast<int>(d));
    j["min_weight_witness"] = ws;
  }
  return j;
}

json fingerprint_to_json(int p, const inv::RingFingerprint& f) {
  json j;
  j["size"] = size_json(p, f.size_exp);
  j["commutative"] = f.commutative;
  j["is_field"] = f.is_field;
  j["field_checked"] = f.field_checked;
  j["decomposition_complete"] = f.decomposition_complete;
  if (f.decomposition_complete) {
    json r = json::array();
    for (auto e : f.residue_exps) r.push_back(size_json(p, e));
    j["residue_fields"] = r;
    if (f.commutative)
      j["note"] =
          "for commutative rings decomposing into fields the residue multiset is a complete "
          "isomorphism invariant";
  }
  j["max_subfield"] = size_json(p, f.max_subfield_exp);
  j["max_subfield_exact"] = f.max_subfield_exact;
  return j;
}

json subring_to_json(const inv::Subring& s) {
  json j;
  j["ambient"] = s.ambient_tag();
  j["dim_fp"] = s.dim();
  j["size"] = size_json(s.p(), s.dim());
  j["contains_ambient_identity"] = s.contains_ambient_identity();
  json rows = json::array();
  for (std::size_t i = 0; i < s.basis().rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < s.basis().cols(); ++k) row.push_back(static_cast<int>(s.basis().at(i, k)));
    rows.push_back(row);
  }
  j["basis"] = rows;
  return j;
}

json nuclear_to_json(int p, const inv::NuclearParameters& np) {
  json j;
  j["code_size"] = size_json(p, np.code_size_exp);
  j["left_idealiser"] = fingerprint_to_json(p, np.left);
  j["right_idealiser"] = fingerprint_to_json(p, np.right);
  j["centraliser"] = fingerprint_to_json(p, np.centraliser);
  j["center"] = fingerprint_to_json(p, np.center);
  j["center_is_intersection"] = np.center_is_intersection;
  j["tuple"] = json::array({size_json(p, np.code_size_exp), size_json(p, np.left.size_exp),
                            size_json(p, np.right.size_exp), size_json(p, np.centraliser.size_exp),
                            size_json(p, np.center.size_exp)});
  return j;
}

json distinguish_to_json(int p, const inv::DistinguishResult& r) {
  json j;
  j["verdict"] = r.verdict == inv::Verdict::inequivalent ? "INEQUIVALENT" : "UNDETERMINED";
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.notes.empty()) j["notes"] = r.notes;
  json fa = json::array(), fb = json::array();
  for (const auto& [tag, f] : r.fingerprints_a) fa.push_back(json{{"invariant", tag}, {"fingerprint", fingerprint_to_json(p, f)}});
  for (const auto& [tag, f] : r.fingerprints_b) fb.push_back(json{{"invariant", tag}, {"fingerprint", fingerprint_to_json(p, f)}});
  j["fingerprints_a"] = fa;
  j["fingerprints_b"] = fb;
  return j;
}

json report_envelope(const std::string& command, const json& config_echo) {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["config"] = config_echo;
  return j;
}

}  // namespace skewrank::io
