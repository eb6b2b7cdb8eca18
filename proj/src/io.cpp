#include "optobath/io.hpp"

#include "optobath/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace optobath::io {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double get_number(const Json& doc, const std::string& key) {
    const Json& v = doc.at(key);
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
}

struct Field {
    const char* name;
    double SystemParams::*member;
};

constexpr Field fields[] = {
    {"omega_m", &SystemParams::omega_m}, {"gamma_m", &SystemParams::gamma_m},
    {"kappa_b", &SystemParams::kappa_b}, {"kappa_c", &SystemParams::kappa_c},
    {"kappa_a", &SystemParams::kappa_a}, {"delta_a", &SystemParams::delta_a},
    {"delta_b", &SystemParams::delta_b}, {"delta_c", &SystemParams::delta_c},
    {"g_a", &SystemParams::g_a},         {"g_c", &SystemParams::g_c},
    {"beta", &SystemParams::beta},       {"cutoff", &SystemParams::cutoff},
};

const std::set<std::string> run_keys = {"hardware", "sweep",   "sweep_y", "out",
                                        "format",   "seed",    "threads", "preset"};

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError("config '" + path.string() + "': " + e.what());
    }
}

SystemParams params_from_json(const Json& doc, SystemParams base) {
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        bool known = run_keys.contains(key);
        for (const auto& f : fields) known = known || key == f.name;
        if (!known) throw ConfigError("unknown config key '" + key + "'");
    }
    for (const auto& f : fields)
        if (doc.contains(f.name)) base.*f.member = get_number(doc, f.name);
    return base;
}

std::optional<HardwareSpec> hardware_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("hardware")) return std::nullopt;
    const Json& h = doc.at("hardware");
    if (!h.is_object()) throw ConfigError("'hardware' must be an object");
    try {
        HardwareSpec hw;
        hw.geometry.r_m = get_number(h, "r_m");
        hw.geometry.omega_0 = get_number(h, "omega_0");
        hw.geometry.d = get_number(h, "d");
        hw.geometry.L = get_number(h, "L");
        hw.geometry.l = get_number(h, "l");
        hw.b_s = get_number(h, "b_s");
        hw.mass = get_number(h, "mass");
        hw.omega_m = get_number(h, "omega_m");
        hw.geometry.validate();
        return hw;
    } catch (const Json::out_of_range& e) {
        throw ConfigError(std::string("hardware block: ") + e.what());
    }
}

Json params_to_json(const SystemParams& p) {
    Json j = Json::object();
    for (const auto& f : fields) j[f.name] = p.*f.member;
    return j;
}

std::string spectrum_csv(const BathSpectrum& s) {
    std::ostringstream out;
    out << "omega,j_eff,beta_eff,t_eff,flags\n";
    const Eigen::ArrayXd t = s.t_eff();
    for (Eigen::Index i = 0; i < s.grid.size(); ++i) {
        out << format_number(s.grid(i)) << ',' << format_number(s.j_eff(i)) << ','
            << format_number(s.beta_eff(i)) << ',' << format_number(t(i)) << ','
            << static_cast<int>(s.flags[static_cast<std::size_t>(i)]) << '\n';
    }
    return out.str();
}

Json spectrum_json(const BathSpectrum& s, const SystemParams& p) {
    Json rows = Json::array();
    const Eigen::ArrayXd t = s.t_eff();
    for (Eigen::Index i = 0; i < s.grid.size(); ++i) {
        rows.push_back({{"omega", number(s.grid(i))},
                        {"j_eff", number(s.j_eff(i))},
                        {"beta_eff", number(s.beta_eff(i))},
                        {"t_eff", number(t(i))},
                        {"flags", static_cast<int>(s.flags[static_cast<std::size_t>(i)])}});
    }
    return {{"params", params_to_json(p)}, {"rows", rows}};
}

std::string rates_csv(const RateTable& t) {
    std::ostringstream out;
    out << "Omega,gamma_plus,gamma_minus,n_bar,n_bar_lossy\n";
    for (Eigen::Index i = 0; i < t.omega.size(); ++i) {
        out << format_number(t.omega(i)) << ',' << format_number(t.gamma_plus(i)) << ','
            << format_number(t.gamma_minus(i)) << ',' << format_number(t.n_bar(i)) << ','
            << format_number(t.n_bar_lossy(i)) << '\n';
    }
    return out.str();
}

Json rates_json(const RateTable& t, const SystemParams& p) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < t.omega.size(); ++i) {
        rows.push_back({{"Omega", number(t.omega(i))},
                        {"gamma_plus", number(t.gamma_plus(i))},
                        {"gamma_minus", number(t.gamma_minus(i))},
                        {"n_bar", number(t.n_bar(i))},
                        {"n_bar_lossy", number(t.n_bar_lossy(i))}});
    }
    return {{"params", params_to_json(p)}, {"rows", rows}};
}

namespace {

struct StabilityRow {
    double s1, s2, s3, rh;
    std::string analytic;
};

StabilityRow stability_row(const StabilityCell& c) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    StabilityRow r{nan, nan, nan, nan, "n/a"};
    if (c.report.criteria) {
        r.s1 = c.report.criteria->s1;
        r.s2 = c.report.criteria->s2;
        r.s3 = c.report.criteria->s3;
        r.analytic = std::string(to_string(c.report.criteria->verdict));
    }
    if (c.report.routh_hurwitz) r.rh = c.report.routh_hurwitz->value;
    return r;
}

}  // namespace

std::string stability_csv(const StabilityMap& m) {
    std::ostringstream out;
    out << "g_c,g_a,delta_a,s1,s2,s3,rh_value,abscissa,abscissa_qc,"
           "analytic_verdict,eig_verdict,eig_verdict_qc,disagree\n";
    for (const auto& c : m.cells) {
        const StabilityRow r = stability_row(c);
        out << format_number(c.params.g_c) << ',' << format_number(c.params.g_a) << ','
            << format_number(c.params.delta_a) << ',' << format_number(r.s1) << ','
            << format_number(r.s2) << ',' << format_number(r.s3) << ',' << format_number(r.rh)
            << ',' << format_number(c.report.spectral_abscissa) << ','
            << format_number(c.report.spectral_abscissa_qc) << ',' << r.analytic << ','
            << to_string(c.report.eig_stable) << ',' << to_string(c.report.eig_stable_qc) << ','
            << (c.report.disagrees() ? 1 : 0) << '\n';
    }
    return out.str();
}

Json stability_json(const StabilityMap& m, const SystemParams& p) {
    Json rows = Json::array();
    for (const auto& c : m.cells) {
        const StabilityRow r = stability_row(c);
        rows.push_back({{"g_c", c.params.g_c},
                        {"g_a", c.params.g_a},
                        {"delta_a", c.params.delta_a},
                        {"s1", number(r.s1)},
                        {"s2", number(r.s2)},
                        {"s3", number(r.s3)},
                        {"rh_value", number(r.rh)},
                        {"abscissa", number(c.report.spectral_abscissa)},
                        {"abscissa_qc", number(c.report.spectral_abscissa_qc)},
                        {"analytic_verdict", r.analytic},
                        {"eig_verdict", to_string(c.report.eig_stable)},
                        {"eig_verdict_qc", to_string(c.report.eig_stable_qc)},
                        {"disagree", c.report.disagrees()}});
    }
    return {{"params", params_to_json(p)},
            {"x_axis", to_string(m.x_axis.variable)},
            {"y_axis", to_string(m.y_axis.variable)},
            {"disagreements", m.disagreements()},
            {"rows", rows}};
}

std::string series_csv(const CorrelationSeries& s) {
    std::ostringstream out;
    out << "t,re,im,tag\n";
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        out << format_number(s.times[i]) << ',' << format_number(s.values[i].real()) << ','
            << format_number(s.values[i].imag()) << ',' << to_string(s.tag) << '\n';
    }
    return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace optobath::io
