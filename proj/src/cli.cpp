#include "optobath/cli.hpp"

#include "optobath/bath_spectrum.hpp"
#include "optobath/errors.hpp"
#include "optobath/io.hpp"
#include "optobath/msi_design.hpp"
#include "optobath/photon_rates.hpp"
#include "optobath/stability.hpp"
#include "optobath/validation.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

namespace optobath::cli {

namespace {

struct GridSpec {
    std::optional<double> min, max;
    int count{400};
    std::string scale{"log"};
};

struct AxisSpec {
    std::string variable;
    double min, max;
    int count;
};

struct Options {
    std::string command;
    std::string config;
    std::string preset;
    std::optional<double> g_c, g_a, kappa_c, delta_c, gamma_m, beta, kappa_a;
    std::string out;
    std::string format{"csv"};
    unsigned threads{std::max(1u, std::thread::hardware_concurrency())};
    std::uint64_t seed{12345};
    GridSpec grid;
    AxisSpec x{"g_c", 0.0, 0.8, 81};
    AxisSpec y{"g_a", 0.0, 0.6, 61};
    bool allow_gain{false};
    bool acceptance{true};
    int trajectories{1000};
    int draws{10000};
    const CLI::App* sub{nullptr};

    // true when the flag was given on the command line; those beat the config
    bool given(const char* flag) const {
        const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
        return opt && opt->count() > 0;
    }
};

// One parameter set to run, with the output-file suffix of a family member.
struct Job {
    SystemParams params;
    std::string suffix;
};

std::vector<Job> preset_jobs(const std::string& name) {
    if (name.empty() || name == "fig1-cooled") return {{presets::fig1_cooled(), ""}};
    if (name == "fig1-bare") return {{presets::fig1_bare(), ""}};
    if (name == "fig3") {
        std::vector<Job> jobs;
        for (double r : presets::fig3_ratios) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "_gcr%g", r);
            jobs.push_back({presets::fig3(r), buf});
        }
        return jobs;
    }
    throw ConfigError("unknown preset '" + name + "' (expected fig1-bare, fig1-cooled or fig3)");
}

void apply_overrides(SystemParams& p, const Options& o) {
    if (o.g_c) p.g_c = *o.g_c;
    if (o.g_a) p.g_a = *o.g_a;
    if (o.kappa_c) p.kappa_c = *o.kappa_c;
    if (o.delta_c) p.delta_c = *o.delta_c;
    if (o.gamma_m) p.gamma_m = *o.gamma_m;
    if (o.beta) p.beta = *o.beta;
    if (o.kappa_a) p.kappa_a = *o.kappa_a;
}

double config_number(const io::Json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(std::string("sweep block missing '") + key + "'");
    if (!j.at(key).is_number()) throw ConfigError(std::string("sweep key '") + key + "' must be a number");
    return j.at(key).get<double>();
}

void merge_sweep(const io::Json& j, AxisSpec& axis, const Options& o, const std::string& prefix) {
    if (!j.is_object()) throw ConfigError("sweep block must be an object");
    const auto flag = [&](const char* k) { return o.given((prefix + k).c_str()); };
    if (j.contains("variable") && !flag("")) axis.variable = j.at("variable").get<std::string>();
    const double min = config_number(j, "min");
    const double max = config_number(j, "max");
    const int count = static_cast<int>(config_number(j, "count"));
    if (!flag("-min")) axis.min = min;
    if (!flag("-max")) axis.max = max;
    if (!flag("-count")) axis.count = count;
}

// Resolves parameters: preset, then config document, then flag overrides.
// Run settings follow the same order: an explicit flag wins over the config.
std::vector<Job> resolve(Options& o) {
    io::Json doc = io::Json::object();
    if (!o.config.empty()) doc = io::load_json_file(o.config);
    if (o.preset.empty() && doc.contains("preset")) o.preset = doc.at("preset").get<std::string>();

    if (doc.contains("format") && !o.given("--format")) o.format = doc.at("format").get<std::string>();
    if (o.format != "csv" && o.format != "json") throw ConfigError("format must be csv or json");
    if (doc.contains("out") && !o.given("--out")) o.out = doc.at("out").get<std::string>();
    if (doc.contains("seed") && !o.given("--seed")) o.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("threads") && !o.given("--threads")) {
        o.threads = doc.at("threads").get<unsigned>();
        if (o.threads == 0) throw ConfigError("threads must be positive");
    }
    if (doc.contains("sweep")) {
        const io::Json& s = doc.at("sweep");
        if (o.command == "stability") {
            merge_sweep(s, o.x, o, "--x");
        } else {
            const double min = config_number(s, "min");
            const double max = config_number(s, "max");
            const int count = static_cast<int>(config_number(s, "count"));
            if (!o.given("--min")) o.grid.min = min;
            if (!o.given("--max")) o.grid.max = max;
            if (!o.given("--count")) o.grid.count = count;
            if (s.contains("scale") && !o.given("--scale"))
                o.grid.scale = s.at("scale").get<std::string>();
        }
    }
    if (doc.contains("sweep_y")) merge_sweep(doc.at("sweep_y"), o.y, o, "--y");

    const auto hardware = io::hardware_from_json(doc);
    std::vector<Job> jobs = preset_jobs(o.preset);
    for (auto& job : jobs) {
        job.params = io::params_from_json(doc, job.params);
        if (hardware) job.params = apply_hardware(job.params, *hardware);
        apply_overrides(job.params, o);
        job.params.validate();
    }
    return jobs;
}

Eigen::ArrayXd make_grid(const GridSpec& g, const SystemParams& p) {
    const double min = g.min.value_or(1e-4 * p.omega_m);
    const double max = g.max.value_or(4.0 * p.omega_m);
    if (g.scale == "log") return log_grid(min, max, g.count);
    if (g.scale == "lin") return linear_grid(min, max, g.count);
    throw ConfigError("grid scale must be lin or log");
}

Axis make_axis(const AxisSpec& a) {
    const auto v = parse_sweep_variable(a.variable);
    if (!v) throw ConfigError("unknown sweep variable '" + a.variable + "' (expected g_c, g_a or delta_a)");
    return {*v, a.min, a.max, a.count};
}

std::string member_path(const std::string& out, const std::string& suffix) {
    if (suffix.empty()) return out;
    const std::filesystem::path p(out);
    return (p.parent_path() / (p.stem().string() + suffix + p.extension().string())).string();
}

void emit(const Options& o, const std::string& suffix, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    io::write_text(member_path(o.out, suffix), text);
}

int cmd_spectrum(Options& o, std::ostream& out) {
    const auto jobs = resolve(o);
    if (jobs.size() > 1 && o.out.empty()) throw ConfigError("preset fig3 writes one file per member; pass --out");
    for (const auto& job : jobs) {
        const BathSpectrum s = compute_bath_spectrum(make_grid(o.grid, job.params), job.params, o.threads);
        emit(o, job.suffix,
             o.format == "csv" ? io::spectrum_csv(s) : io::spectrum_json(s, job.params).dump(2) + "\n", out);
    }
    return exit_ok;
}

int cmd_rates(Options& o, std::ostream& out) {
    const auto jobs = resolve(o);
    if (jobs.size() > 1 && o.out.empty()) throw ConfigError("preset fig3 writes one file per member; pass --out");
    const GainPolicy policy = o.allow_gain ? GainPolicy::Raw : GainPolicy::Reject;
    for (const auto& job : jobs) {
        const RateTable t = compute_rate_table(make_grid(o.grid, job.params), job.params, o.threads, policy);
        emit(o, job.suffix,
             o.format == "csv" ? io::rates_csv(t) : io::rates_json(t, job.params).dump(2) + "\n", out);
    }
    return exit_ok;
}

int cmd_stability(Options& o, std::ostream& out, std::ostream& err) {
    const auto jobs = resolve(o);
    if (jobs.size() > 1) throw ConfigError("stability takes a single parameter set, not the fig3 family");
    const SystemParams& p = jobs.front().params;
    const StabilityMap m = stability_map(make_axis(o.x), make_axis(o.y), p, o.threads);
    emit(o, "", o.format == "csv" ? io::stability_csv(m) : io::stability_json(m, p).dump(2) + "\n", out);
    err << m.cells.size() << " cells, " << m.disagreements() << " analytic/eigenvalue disagreements\n";
    return exit_ok;
}

int cmd_validate(Options& o, std::ostream& out, std::ostream& err) {
    const auto jobs = resolve(o);
    if (jobs.size() > 1) throw ConfigError("validate takes a single parameter set, not the fig3 family");
    const SystemParams& p = jobs.front().params;
    validation::ValidateOptions opt;
    opt.acceptance = o.acceptance;
    opt.suite.seed = o.seed;
    opt.suite.threads = o.threads;
    opt.suite.trajectories = o.trajectories;
    opt.suite.stability_draws = o.draws;
    const validation::Report r = validation::validate(p, opt);
    for (const auto& c : r.checks) {
        err << '[' << validation::to_string(c.status) << "] " << c.name;
        if (!c.detail.empty()) err << ": " << c.detail;
        err << '\n';
    }
    emit(o, "", validation::report_json(r, p).dump(2) + "\n", out);
    return r.passed() ? exit_ok : exit_validation_failed;
}

void add_common(CLI::App& sub, Options& o) {
    sub.add_option("--config", o.config, "JSON configuration document");
    sub.add_option("--preset", o.preset, "fig1-bare, fig1-cooled (default) or fig3");
    sub.add_option("--gc", o.g_c, "cooling coupling g_c");
    sub.add_option("--ga", o.g_a, "probe coupling g_a");
    sub.add_option("--kappa-c", o.kappa_c, "cooling cavity linewidth");
    sub.add_option("--delta-c", o.delta_c, "cooling cavity detuning");
    sub.add_option("--gamma-m", o.gamma_m, "mechanical damping");
    sub.add_option("--beta", o.beta, "inverse bath temperature (hbar beta omega_m)");
    sub.add_option("--kappa-a", o.kappa_a, "system cavity loss");
    sub.add_option("-o,--out", o.out, "output path (stdout if omitted)");
    sub.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    sub.add_option("--seed", o.seed, "random seed");
}

void add_grid(CLI::App& sub, Options& o) {
    sub.add_option("--min", o.grid.min, "first grid frequency (default 1e-4 omega_m)");
    sub.add_option("--max", o.grid.max, "last grid frequency (default 4 omega_m)");
    sub.add_option("--count", o.grid.count, "grid points");
    sub.add_option("--scale", o.grid.scale, "lin or log")->check(CLI::IsMember({"lin", "log"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Engineered-bath numerics for optomechanical photon thermalisation", "optobath"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "effective spectral density and temperature");
    add_common(*spectrum, o);
    add_grid(*spectrum, o);
    auto* rates = app.add_subcommand("rates", "photon emission/absorption rates and occupation");
    add_common(*rates, o);
    add_grid(*rates, o);
    rates->add_flag("--allow-gain", o.allow_gain, "report the raw Bose value in the gain regime");
    auto* stability = app.add_subcommand("stability", "stability map over two parameters");
    add_common(*stability, o);
    stability->add_option("--x", o.x.variable, "x variable: g_c, g_a or delta_a");
    stability->add_option("--x-min", o.x.min);
    stability->add_option("--x-max", o.x.max);
    stability->add_option("--x-count", o.x.count);
    stability->add_option("--y", o.y.variable, "y variable: g_c, g_a or delta_a");
    stability->add_option("--y-min", o.y.min);
    stability->add_option("--y-max", o.y.max);
    stability->add_option("--y-count", o.y.count);
    auto* validate = app.add_subcommand("validate", "consistency checks and acceptance suite");
    add_common(*validate, o);
    bool no_acceptance = false;
    validate->add_flag("--no-acceptance", no_acceptance, "run only the checks at the given parameters");
    validate->add_option("--trajectories", o.trajectories, "Monte Carlo trajectories")
        ->check(CLI::PositiveNumber);
    validate->add_option("--draws", o.draws, "random stability draws")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_config_error;
    }
    o.acceptance = !no_acceptance;
    for (const CLI::App* sub : {spectrum, rates, stability, validate})
        if (sub->parsed()) o.sub = sub;

    try {
        if (spectrum->parsed()) return o.command = "spectrum", cmd_spectrum(o, out);
        if (rates->parsed()) return o.command = "rates", cmd_rates(o, out);
        if (stability->parsed()) return o.command = "stability", cmd_stability(o, out, err);
        if (validate->parsed()) return o.command = "validate", cmd_validate(o, out, err);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const nlohmann::json::exception& e) {
        err << "configuration error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime_error;
    }
    return exit_config_error;
}

int run(int argc, char** argv) {
    return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

}  // namespace optobath::cli
