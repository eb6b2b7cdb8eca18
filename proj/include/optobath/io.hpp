// io.hpp: configuration documents and CSV/JSON serialisation.
//
// CSV headers are a stable interface:
//   spectrum   omega,j_eff,beta_eff,t_eff,flags
//   rates      Omega,gamma_plus,gamma_minus,n_bar,n_bar_lossy
//   stability  g_c,g_a,delta_a,s1,s2,s3,rh_value,abscissa,abscissa_qc,
//              analytic_verdict,eig_verdict,eig_verdict_qc,disagree
//   series     t,re,im,tag
// JSON output mirrors the same keys as an array of row objects; NaN and
// infinities become null.

#pragma once

#include "optobath/bath_spectrum.hpp"
#include "optobath/correlation_oracle.hpp"
#include "optobath/msi_design.hpp"
#include "optobath/photon_rates.hpp"
#include "optobath/stability.hpp"
#include "optobath/units_params.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace optobath::io {

using Json = nlohmann::json;

// Fixed scientific format shared by every CSV writer ("nan"/"inf" spelled out).
std::string format_number(double x);

// Reads a JSON document; ConfigError with the path on failure.
Json load_json_file(const std::filesystem::path& path);

// Overlays the flat parameter keys of `doc` onto `base`. Keys outside the
// parameter set, "hardware" and the run keys (sweep, sweep_y, out, format,
// seed, threads, preset) raise ConfigError.
SystemParams params_from_json(const Json& doc, SystemParams base = {});
std::optional<HardwareSpec> hardware_from_json(const Json& doc);
Json params_to_json(const SystemParams& p);

std::string spectrum_csv(const BathSpectrum& s);
Json spectrum_json(const BathSpectrum& s, const SystemParams& p);

std::string rates_csv(const RateTable& t);
Json rates_json(const RateTable& t, const SystemParams& p);

std::string stability_csv(const StabilityMap& m);
Json stability_json(const StabilityMap& m, const SystemParams& p);

std::string series_csv(const CorrelationSeries& s);

// Writes text to path, creating parent directories; std::runtime_error with
// the path on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace optobath::io
