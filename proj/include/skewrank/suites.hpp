#pragma once

#include "skewrank/invariants.hpp"

namespace skewrank::suites {

using codes::Code;

struct TheoremCheck {
  std::string name;
  bool pass = false;
  std::string expected, got;
};

struct SuiteResult {
  std::string suite;
  std::string status;  // PASS, FAIL or SKIP
  std::string reason;  // populated on SKIP
  std::vector<TheoremCheck> checks;
  bool passed() const { return status == "PASS"; }
  bool skipped() const { return status == "SKIP"; }
};

struct SuiteOptions {
  std::uint64_t ring_cap = inv::kDefaultRingCap;
  std::uint64_t enum_cap = 1ull << 26;
  int workers = 1;
  std::uint64_t seed = 12345;
  int battery_size = 50;  // random codes in the duality-ideal battery
};

/// Predicted idealiser sizes of twisted and untwisted codes against the
/// kernel solver. Hypotheses: 3 <= k <= tm/2, or a cyclic lambda set with
/// tm/2 + 1 <= k <= tm - 3.
SuiteResult suite_idealisers_atlrs(const Code& c, const SuiteOptions& opt = {});

/// Centraliser q^t with residue multiset {q,...,q} and the predicted center,
/// on a normalization containing the identity. Hypotheses: 2 <= k <= tm - 1,
/// cyclic lambda set when k > tm/2.
SuiteResult suite_centraliser_lrs(const Code& c, const SuiteOptions& opt = {});

/// Both idealisers of the half-subfield twisted family equal F_{q^(m/2)};
/// centraliser and center checked when the half degree is at least 2.
SuiteResult suite_tz_idealisers(const Code& c, const SuiteOptions& opt = {});

/// Dual-code identities for the three families, as canonical-basis set
/// equalities. Requires the lambda set to be a subgroup of F_q^*.
SuiteResult suite_duality_lrs(const Code& c, const SuiteOptions& opt = {});

/// Idealiser identities under blockwise transposition and duality on a
/// battery of random matrix-ambient codes with square blocks.
SuiteResult suite_duality_ideal(gf::TowerPtr tw, int t, const SuiteOptions& opt = {});

/// Pairwise inequivalence of the supplied codes via the distinguisher.
SuiteResult suite_inequivalence(std::span<const Code> cs, const SuiteOptions& opt = {});

/// Maximum-distance codes with equal blocks and t <= q - 1 are nondegenerate.
SuiteResult suite_nondegeneracy_msrd(const Code& c, const SuiteOptions& opt = {});

/// The weight spectrum of such codes has no gaps above the minimum distance.
SuiteResult suite_weights_msrd(const Code& c, const SuiteOptions& opt = {});

SuiteResult run_named_suite(const std::string& name, std::span<const Code> cs,
                            gf::TowerPtr tower_for_battery, const SuiteOptions& opt = {});
std::vector<std::string> suite_names();

}  // namespace skewrank::suites
