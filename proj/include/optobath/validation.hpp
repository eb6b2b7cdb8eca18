// validation.hpp: cross-module consistency checks and the acceptance suite,
// shared by `optobath validate` and the acceptance test binary.

#pragma once

#include "optobath/correlation_oracle.hpp"
#include "optobath/units_params.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace optobath::validation {

enum class Status { pass, fail, skipped };
std::string_view to_string(Status s);

struct CheckResult {
    std::string name;
    Status status;
    double measured;   // the quantity compared against threshold (NaN if skipped)
    double threshold;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    bool passed() const;
    std::size_t count(Status s) const;
};

// Acceptance criteria, each evaluated at its own fixed parameter set.
CheckResult temperature_reduction();
CheckResult threshold_identity();
CheckResult flat_temperature();
CheckResult detailed_balance();

struct StabilityOracleSpec {
    int draws{10000};
    std::uint64_t seed{20240611};
    unsigned threads{1};
};
CheckResult stability_oracle(const StabilityOracleSpec& spec = {});

CheckResult representation_equivalence();
CheckResult variance_consistency(const LangevinSpec& spec = {});
CheckResult reduction_chain();
// Share of the Gamma_+/- weight below 0.5 omega_m, cooled over bare preset.
CheckResult bandwidth_gain();

// g_c where the 4x4 abscissa changes sign at g_a = 0 (bisection).
double stability_boundary_g_c(const SystemParams& p);

struct SuiteOptions {
    std::uint64_t seed{12345};
    unsigned threads{1};
    int stability_draws{10000};
    int trajectories{1000};
};
std::vector<CheckResult> acceptance_suite(const SuiteOptions& opt = {});

// Property checks evaluated at p. Checks that need a stable steady state are
// reported as skipped, with the reason, when p is unstable.
std::vector<CheckResult> invariant_checks(const SystemParams& p);

struct ValidateOptions {
    SuiteOptions suite;
    bool acceptance{true};
};
Report validate(const SystemParams& p, const ValidateOptions& opt = {});

nlohmann::json report_json(const Report& r, const SystemParams& p);

}  // namespace optobath::validation
