#pragma once

#include <json.hpp>

#include "skewrank/invariants.hpp"

namespace skewrank::io {

using nlohmann::json;

/// Exact decimal string of p^exp.
std::string pow_decimal(int p, std::size_t exp);
json size_json(int p, std::size_t exp);

json poly_to_json(const gf::Poly& f);
gf::Poly poly_from_json(const json& j);

json fel_to_json(const gf::FieldTower& tw, gf::Fel a);
gf::Fel fel_from_json(const gf::FieldTower& tw, const json& j);

/// Field specification: keys p, e, m, theta_exponent, optional moduli given
/// as F_p coefficient arrays with the constant term first.
gf::TowerPtr tower_from_json(const json& field_spec);
json tower_resolved_json(const gf::FieldTower& tw);

/// Ring descriptor: a field spec plus lambdas (and optional alphas) as
/// coordinate tuples.
quot::RingPtr ring_from_json(const json& config);
json ring_resolved_json(const quot::QuotientRing& ring);

/// Code specification: family tag plus parameters. Values "auto" for eta and
/// gamma select the least valid parameter in coordinate-lexicographic order.
codes::Code code_from_json(const json& config, const json& code_spec);

/// Textual skew polynomial format: degree-ascending coefficient tuples,
/// e.g. [[1],[0],[2]] for 1 + 2x^2 over F_3.
std::string skew_poly_to_text(const gf::FieldTower& tw, const skew::SkewPoly& f);
skew::SkewPoly skew_poly_from_text(gf::TowerPtr tw, const std::string& text);

json code_summary_json(const codes::Code& c);
json code_report_to_json(int p, const codes::CodeReport& rep);
json fingerprint_to_json(int p, const inv::RingFingerprint& f);
json subring_to_json(const inv::Subring& s);
json nuclear_to_json(int p, const inv::NuclearParameters& np);
json distinguish_to_json(int p, const inv::DistinguishResult& r);

/// Envelope shared by every CLI report.
json report_envelope(const std::string& command, const json& config_echo);

}  // namespace skewrank::io
