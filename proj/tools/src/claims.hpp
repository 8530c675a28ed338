#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fatcat/cocycle.hpp"
#include "fatcat/comparison.hpp"
#include "json_io.hpp"

namespace fatcat::claims {

using io::json;

/// One parameter set of a claim. `pass` means the expectation was met, which
/// for expected-failure cases (broken fixtures, ρ) means a witness was found.
struct Case {
  json parameters;
  bool pass = true;
  json details = json::object();
  Report violations;
};

struct Claim {
  std::string id;
  std::string location;
  std::vector<Case> cases;

  [[nodiscard]] bool passed() const;
};

/// {"id","location","result","parameters":[…],"details":[…],"witnesses":[…]}
json to_json(const Claim& c);

// Case builders shared by `verify` subcommands and the registry.
Case category_laws(const std::string& name, const FinCategory& c, bool expect_valid = true);
Case groupoid_laws(const std::string& name, const FinGroupoid& g, bool expect_valid = true);
Case unravel_equivalences(int n, int N);
Case unravel_nerve_iso(const std::string& name, const FinCategory& c, int N, int D);
Case cell_bijection(const std::string& name, const FinCategory& c, int N, int D);
Case projection_quasi_iso(const std::string& name, const FinCategory& c, int N, int D, int d);
Case quillen_fibers(const std::string& name, const FinCategory& c, int N, int D);
Case tau_chain_map(const std::string& name, const FinCategory& c, int N, int D);
Case pi_tau_identity(const std::string& name, const FinCategory& c, int N, int D, int d);
Case subdivision(int n);
Case rho_mismatch(int n, RhoReading reading);
Case partition(const PartitionPoint& t, const Rational& s);
/// ≥ 100 points (t, s) with s ∈ {0, 1/4, 1/2, 3/4, 1}, vertices included.
Case partition_grid();
Case blowup_quasi_iso(const std::string& name, const CoveredPtr& base, int d);
Case universal_cocycle(const std::string& name, const GroupoidPtr& g, int N, int D);
Case pullback(const std::string& name, const GCocycle& u, int N, int D);
Case cocycle_valid(const std::string& name, const GCocycle& u, bool expect_valid = true);
Case iso_calculus();

struct ClaimSpec {
  std::string id;
  std::string location;
  std::function<std::vector<Case>()> cases;
};

/// Fixed registry, ordered by id.
const std::vector<ClaimSpec>& registry();
Claim run(const ClaimSpec& spec);

/// {"claims":[…], "canonical_digest": FNV-1a 64 of the claims dump,
/// "timing_ms": {id: ms}}.
json report_all();
std::string fnv1a64_hex(const std::string& data);

}  // namespace fatcat::claims
