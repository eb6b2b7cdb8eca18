#include "doctest.h"

#include "optobath/cli.hpp"
#include "optobath/errors.hpp"
#include "optobath/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace optobath;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> v;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) v.push_back(f);
    return v;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "optobath_io_cli";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("format_number") {
    CHECK(io::format_number(1.0) == "1.000000000000e+00");
    CHECK(io::format_number(-2.5e-7) == "-2.500000000000e-07");
    CHECK(io::format_number(std::nan("")) == "nan");
    CHECK(io::format_number(-INFINITY) == "-inf");
}

TEST_CASE("params from JSON") {
    const auto doc = io::Json::parse(R"({"g_c": 0.3, "kappa_a": 0.01, "seed": 4})");
    const SystemParams p = io::params_from_json(doc, presets::fig1_cooled());
    CHECK(p.g_c == 0.3);
    CHECK(p.kappa_a == 0.01);
    CHECK(p.g_a == 0.45);

    CHECK_THROWS_AS(io::params_from_json(io::Json::parse(R"({"gc": 0.3})")), ConfigError);
    CHECK_THROWS_AS(io::params_from_json(io::Json::parse(R"({"g_c": "big"})")), ConfigError);
    CHECK_THROWS_AS(io::params_from_json(io::Json::parse("[1, 2]")), ConfigError);

    SUBCASE("round trip") {
        SystemParams q;
        q.delta_a = -1.25;
        q.cutoff = 77.0;
        const SystemParams r = io::params_from_json(io::params_to_json(q));
        CHECK(io::params_to_json(r) == io::params_to_json(q));
    }
    SUBCASE("hardware block") {
        const auto hw_doc = io::Json::parse(R"({"hardware": {"r_m": 0.3, "omega_0": 1e15, "d": 0.05,
            "L": 0.03, "l": 0.02, "b_s": 1000, "mass": 1e-11, "omega_m": 6.283e5}})");
        const auto hw = io::hardware_from_json(hw_doc);
        REQUIRE(hw.has_value());
        CHECK(hw->geometry.effective_length() == doctest::Approx(0.1));
        CHECK_FALSE(io::hardware_from_json(io::Json::parse("{}")).has_value());
        CHECK_THROWS_AS(io::hardware_from_json(io::Json::parse(R"({"hardware": {"r_m": 0.3}})")), ConfigError);
    }
    CHECK_THROWS_AS(io::load_json_file("/nonexistent/optobath.json"), ConfigError);
}

TEST_CASE("CSV headers are stable") {
    const SystemParams p = presets::fig1_cooled();
    const auto grid = log_grid(0.1, 1.0, 3);
    CHECK(lines(io::spectrum_csv(compute_bath_spectrum(grid, p)))[0] == "omega,j_eff,beta_eff,t_eff,flags");
    CHECK(lines(io::rates_csv(compute_rate_table(grid, p)))[0] == "Omega,gamma_plus,gamma_minus,n_bar,n_bar_lossy");
    const StabilityMap m = stability_map({SweepVariable::g_c, 0, 0.5, 2}, {SweepVariable::g_a, 0, 0.5, 2}, p);
    CHECK(lines(io::stability_csv(m))[0] ==
          "g_c,g_a,delta_a,s1,s2,s3,rh_value,abscissa,abscissa_qc,analytic_verdict,eig_verdict,"
          "eig_verdict_qc,disagree");
    CorrelationSeries s{{0.0, 1.0}, {Complex(1, 0), Complex(0.5, -0.25)}, Contribution::total};
    const auto l = lines(io::series_csv(s));
    CHECK(l[0] == "t,re,im,tag");
    CHECK(l[2] == "1.000000000000e+00,5.000000000000e-01,-2.500000000000e-01,total");
    CHECK(io::spectrum_json(compute_bath_spectrum(grid, p), p)["rows"][0].contains("t_eff"));
}

TEST_CASE("cli spectrum") {
    SUBCASE("preset writes 400 rows") {
        const fs::path out = scratch("cooled.csv");
        const Run r = cli_run({"spectrum", "--preset", "fig1-cooled", "-o", out.string()});
        CHECK(r.code == 0);
        CHECK(lines(slurp(out)).size() == 401);
    }
    SUBCASE("g_c = 0 gives a constant beta_eff column") {
        const Run r = cli_run({"spectrum", "--gc", "0", "--count", "50"});
        REQUIRE(r.code == 0);
        const auto l = lines(r.out);
        REQUIRE(l.size() == 51);
        for (std::size_t i = 1; i < l.size(); ++i)
            CHECK(std::stod(split(l[i])[2]) == doctest::Approx(1e-4).epsilon(1e-12));
    }
    SUBCASE("fig3 family") {
        const fs::path out = scratch("fig3.csv");
        CHECK(cli_run({"spectrum", "--preset", "fig3", "-o", out.string()}).code == 0);
        for (const char* suffix : {"0", "0.24", "0.5", "0.75", "0.9"})
            CHECK(fs::exists(scratch(std::string("fig3_gcr") + suffix + ".csv")));
        CHECK(cli_run({"spectrum", "--preset", "fig3"}).code == cli::exit_config_error);
    }
    SUBCASE("deterministic output") {
        const Run a = cli_run({"spectrum", "--threads", "1"});
        const Run b = cli_run({"spectrum", "--threads", "3"});
        CHECK(a.out == b.out);
    }
    SUBCASE("json format and config file") {
        const fs::path cfg = scratch("cfg.json");
        std::ofstream(cfg) << R"({"preset": "fig1-bare", "gamma_m": 2e-6,
                                  "sweep": {"min": 0.1, "max": 1.0, "count": 4, "scale": "lin"}})";
        const Run r = cli_run({"spectrum", "--config", cfg.string(), "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = io::Json::parse(r.out);
        CHECK(j["params"]["g_c"] == 0.0);
        CHECK(j["params"]["gamma_m"] == 2e-6);
        CHECK(j["rows"].size() == 4);
        CHECK(j["rows"][1]["omega"] == doctest::Approx(0.4));
    }
    SUBCASE("flags beat the config file") {
        const fs::path cfg = scratch("cfg_flags.json");
        std::ofstream(cfg) << R"({"format": "json", "gamma_m": 2e-6,
                                  "sweep": {"min": 0.1, "max": 1.0, "count": 4, "scale": "lin"},
                                  "sweep_y": {"min": 0.0, "max": 0.5, "count": 3}})";
        const Run r = cli_run({"spectrum", "--config", cfg.string(), "--format", "csv", "--count",
                               "7", "--gamma-m", "3e-6"});
        REQUIRE(r.code == 0);
        const auto l = lines(r.out);
        REQUIRE(l.size() == 8);
        CHECK(l[0].rfind("omega,", 0) == 0);
        CHECK(std::stod(split(l[1])[0]) == doctest::Approx(0.1));
        CHECK(std::stod(split(l[7])[0]) == doctest::Approx(1.0));
    }
}

TEST_CASE("cli rates") {
    SUBCASE("g_a = 0 table is all zero") {
        const Run r = cli_run({"rates", "--ga", "0", "--count", "20"});
        REQUIRE(r.code == 0);
        const auto l = lines(r.out);
        for (std::size_t i = 1; i < l.size(); ++i) {
            CHECK(std::stod(split(l[i])[1]) == 0.0);
            CHECK(std::stod(split(l[i])[2]) == 0.0);
        }
    }
    SUBCASE("lossy column below lossless") {
        const Run r = cli_run({"rates", "--kappa-a", "0.05", "--count", "40"});
        REQUIRE(r.code == 0);
        const auto l = lines(r.out);
        for (std::size_t i = 1; i < l.size(); ++i)
            CHECK(std::stod(split(l[i])[4]) < std::stod(split(l[i])[3]));
    }
    SUBCASE("gain regime") {
        const Run rej = cli_run({"rates", "--delta-c", "1", "--gc", "0.2", "--count", "3"});
        REQUIRE(rej.code == 0);
        CHECK(split(lines(rej.out)[1])[3] == "nan");
        const Run raw = cli_run({"rates", "--delta-c", "1", "--gc", "0.2", "--count", "3", "--allow-gain"});
        CHECK(std::stod(split(lines(raw.out)[1])[3]) < 0.0);
    }
}

TEST_CASE("cli stability") {
    const Run r = cli_run({"stability", "--gamma-m", "0", "--x-count", "30", "--y-count", "20"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l.size() == 601);
    for (std::size_t i = 1; i < l.size(); ++i) CHECK(split(l[i]).back() == "0");
    CHECK(r.err.find("0 analytic/eigenvalue disagreements") != std::string::npos);
    CHECK(cli_run({"stability", "--x", "kappa"}).code == cli::exit_config_error);
}

TEST_CASE("cli validate") {
    SUBCASE("default parameters pass") {
        const Run r = cli_run({"validate", "--threads", "2"});
        CHECK(r.code == cli::exit_ok);
        const auto j = io::Json::parse(r.out);
        CHECK(j["passed"] == true);
        CHECK(j["counts"]["fail"] == 0);
    }
    SUBCASE("invalid linewidth is a configuration error") {
        CHECK(cli_run({"validate", "--kappa-c", "-1"}).code == cli::exit_config_error);
        CHECK(cli_run({"validate", "--kappa-c", "0"}).code == cli::exit_config_error);
    }
    SUBCASE("unstable parameters skip stability-dependent checks") {
        const Run r = cli_run({"validate", "--gc", "0.7", "--gamma-m", "0", "--no-acceptance"});
        CHECK(r.code == cli::exit_ok);
        const auto j = io::Json::parse(r.out);
        int skipped = 0;
        for (const auto& c : j["checks"]) {
            if (c["status"] == "skipped") {
                ++skipped;
                CHECK_FALSE(c["detail"].get<std::string>().empty());
            }
        }
        CHECK(skipped >= 2);
    }
}

TEST_CASE("cli usage errors") {
    CHECK(cli_run({}).code == cli::exit_config_error);
    CHECK(cli_run({"spectrum", "--format", "xml"}).code == cli::exit_config_error);
    CHECK(cli_run({"spectrum", "--preset", "fig2"}).code == cli::exit_config_error);
    CHECK(cli_run({"spectrum", "--count", "1"}).code == cli::exit_config_error);
    CHECK(cli_run({"spectrum", "--min", "2", "--max", "1"}).code == cli::exit_config_error);
    CHECK(cli_run({"spectrum", "--config", "/nonexistent.json"}).code == cli::exit_config_error);
    CHECK(cli_run({"spectrum", "-o", "/proc/forbidden/x.csv"}).code == cli::exit_runtime_error);
    CHECK(cli_run({"--help"}).code == cli::exit_ok);
}
