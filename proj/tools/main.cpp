// Copyright 2026 layerheat authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "layerheat/config.hpp"
#include "layerheat/fd_oracle.hpp"
#include "layerheat/heat_solver.hpp"
#include "layerheat/kernels.hpp"
#include "layerheat/media.hpp"
#include "layerheat/transforms.hpp"
#include "layerheat/verification.hpp"

#ifndef LAYERHEAT_VERSION
#define LAYERHEAT_VERSION "0.0.0"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string hash_hex(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

// Reads and translates a config file.  Returns kExitOk and fills *out on
// success; otherwise prints diagnostics and returns the exit code.
int load_config(const std::string& path, layerheat::ScenarioConfig* out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read config file '" << path << "'\n";
        return kExitUsage;
    }
    std::ostringstream text;
    text << in.rdbuf();
    layerheat::ParseResult parsed = layerheat::parse_config(text.str());
    if (!parsed.ok) {
        std::cerr << "error: invalid config '" << path << "'\n";
        for (const layerheat::ConfigError& e : parsed.errors) {
            std::cerr << "  " << layerheat::format_error(e) << "\n";
        }
        return kExitValidation;
    }
    *out = std::move(parsed.config);
    return kExitOk;
}

void write_header(std::ostream& os, const layerheat::ScenarioConfig& cfg,
                  const std::string& kind) {
    const layerheat::HeatScenario& sc = cfg.scenario;
    const int m = sc.medium.transverse_dim;
    os << "# layerheat " << kind << " " << LAYERHEAT_VERSION << "\n";
    os << "# config_hash = " << hash_hex(cfg.hash) << "\n";
    os << "# transverse_dim = " << m << "\n";
    os << "# layers = " << sc.medium.layer_count() << "\n";
    os << "# weight_mode = " << sc.mode.name() << "\n";
    os << "# polar_constant = " << num(layerheat::polar_constant(sc.mode, m))
       << "\n";
    os << "# polar_exponent = " << num(layerheat::polar_exponent(sc.mode, m))
       << "\n";
    os << "# quadrature_finite_nodes = " << sc.spec.finite_nodes << "\n";
    os << "# quadrature_rho_nodes = " << sc.spec.rho_nodes << "\n";
    os << "# quadrature_alpha_nodes = " << sc.spec.alpha_nodes << "\n";
    os << "# quadrature_rho_truncation = " << num(sc.spec.rho_truncation)
       << "\n";
    os << "# quadrature_tau_schedule =";
    for (double tau : sc.spec.tau_schedule) os << " " << num(tau);
    os << "\n";
}

int run_solve(const std::string& config_path, const std::string& out_dir) {
    layerheat::ScenarioConfig cfg;
    if (int rc = load_config(config_path, &cfg); rc != kExitOk) return rc;
    const layerheat::HeatScenario& sc = cfg.scenario;
    if (sc.times.empty() || sc.probes.empty()) {
        std::cerr << "error: solve needs nonempty 'times' and probes "
                     "([[probes]] or [probe_grid])\n";
        return kExitValidation;
    }

    std::vector<layerheat::GridSample> rows;
    try {
        rows = layerheat::solve_grid(sc);
    } catch (const std::exception& problem) {
        std::cerr << "error: " << problem.what() << "\n";
        return kExitValidation;
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory '" << out_dir
                  << "': " << ec.message() << "\n";
        return kExitUsage;
    }
    const std::filesystem::path out_path =
        std::filesystem::path(out_dir) / cfg.output_name;
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot write '" << out_path.string() << "'\n";
        return kExitUsage;
    }

    const int m = sc.medium.transverse_dim;
    write_header(os, cfg, "solve");
    os << "t,x";
    for (int i = 1; i <= m; ++i) os << ",y_" << i;
    os << ",layer,value,mode\n";
    const std::string mode_name = sc.mode.name();
    for (const layerheat::GridSample& row : rows) {
        os << num(row.t) << "," << num(row.x);
        for (double y : row.y) os << "," << num(y);
        os << "," << row.layer << "," << num(row.value) << "," << mode_name
           << "\n";
    }
    os.flush();
    if (!os) {
        std::cerr << "error: write failed for '" << out_path.string()
                  << "'\n";
        return kExitUsage;
    }
    std::cout << "wrote " << rows.size() << " rows to " << out_path.string()
              << "\n";
    return kExitOk;
}

int run_verify(const std::string& config_path, const std::string& suite) {
    layerheat::ScenarioConfig cfg;
    if (int rc = load_config(config_path, &cfg); rc != kExitOk) return rc;
    const layerheat::HeatScenario& sc = cfg.scenario;

    const bool want_roundtrip = suite == "all" || suite == "roundtrip";
    const bool want_diag = suite == "all" || suite == "theorem1";
    const bool want_kernels = suite == "all" || suite == "kernels";

    std::vector<layerheat::CheckRow> rows;
    try {
        if (want_roundtrip) {
            if (sc.probes.empty()) {
                std::cerr << "error: the roundtrip suite needs probes "
                             "([[probes]] or [probe_grid])\n";
                return kExitValidation;
            }
            auto part = layerheat::roundtrip_suite(sc, 5e-3);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        if (want_diag) {
            auto part = layerheat::diagonalization_suite(
                sc.medium, sc.coupling, sc.spec, 1e-3);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        if (want_kernels) {
            auto part =
                layerheat::kernel_suite(sc.medium, sc.coupling, sc.spec);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    } catch (const std::exception& problem) {
        std::cerr << "error: " << problem.what() << "\n";
        return kExitValidation;
    }

    write_header(std::cout, cfg, "verify");
    std::cout << "suite,check,value,threshold,status\n";
    for (const layerheat::CheckRow& row : rows) {
        std::cout << row.suite << "," << row.check << "," << num(row.value)
                  << "," << num(row.threshold) << ","
                  << (row.pass ? "pass" : "FAIL") << "\n";
    }
    const bool ok = layerheat::all_pass(rows);
    std::cout << "# VERIFY: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitTolerance;
}

int run_compare(const std::string& config_path, double fd_h, double fd_dt) {
    layerheat::ScenarioConfig cfg;
    if (int rc = load_config(config_path, &cfg); rc != kExitOk) return rc;
    const layerheat::HeatScenario& sc = cfg.scenario;
    if (sc.times.empty() || sc.probes.empty()) {
        std::cerr << "error: compare needs nonempty 'times' and probes "
                     "([[probes]] or [probe_grid])\n";
        return kExitValidation;
    }

    layerheat::FdGrid grid;
    grid.x_lo = cfg.oracle.x_lo;
    grid.x_hi = cfg.oracle.x_hi;
    grid.y_lo = cfg.oracle.y_lo;
    grid.y_hi = cfg.oracle.y_hi;
    grid.h = fd_h > 0.0 ? fd_h : cfg.oracle.h;
    grid.dt = fd_dt > 0.0 ? fd_dt : cfg.oracle.dt;

    std::vector<layerheat::GridSample> spectral;
    try {
        spectral = layerheat::solve_grid(sc);
    } catch (const std::exception& problem) {
        std::cerr << "error: " << problem.what() << "\n";
        return kExitValidation;
    }

    const int m = sc.medium.transverse_dim;
    const std::size_t probe_count = sc.probes.size();
    write_header(std::cout, cfg, "compare");
    std::cout << "# oracle_h = " << num(grid.h) << "\n";
    std::cout << "# oracle_dt = " << num(grid.dt) << "\n";
    std::cout << "# tolerance_l2_rel = " << num(cfg.oracle.tolerance)
              << "\n";
    std::cout << "t,x";
    for (int i = 1; i <= m; ++i) std::cout << ",y_" << i;
    std::cout << ",layer,spectral,fd,abs_error\n";

    struct Summary {
        double t;
        layerheat::ErrorReport report;
    };
    std::vector<Summary> summaries;
    for (std::size_t ti = 0; ti < sc.times.size(); ++ti) {
        const double t = sc.times[ti];
        std::vector<double> fd_values(probe_count, 0.0);
        try {
            layerheat::FdSolution fd = layerheat::fd_solve(sc, t, grid);
            for (std::size_t p = 0; p < probe_count; ++p) {
                fd_values[p] = fd.value(sc.probes[p].x, sc.probes[p].y);
            }
        } catch (const std::exception& problem) {
            std::cerr << "error: " << problem.what() << "\n";
            return kExitValidation;
        }
        std::vector<double> spectral_values(probe_count, 0.0);
        for (std::size_t p = 0; p < probe_count; ++p) {
            const layerheat::GridSample& row =
                spectral[ti * probe_count + p];
            spectral_values[p] = row.value;
            std::cout << num(row.t) << "," << num(row.x);
            for (double y : row.y) std::cout << "," << num(y);
            std::cout << "," << row.layer << "," << num(row.value) << ","
                      << num(fd_values[p]) << ","
                      << num(std::abs(row.value - fd_values[p])) << "\n";
        }
        summaries.push_back(
            {t, layerheat::compare_samples(fd_values, spectral_values)});
    }

    bool ok = true;
    for (const Summary& s : summaries) {
        const bool pass = s.report.l2_rel <= cfg.oracle.tolerance;
        ok = ok && pass;
        std::cout << "# t = " << num(s.t) << ": l2_rel = "
                  << num(s.report.l2_rel)
                  << ", linf_abs = " << num(s.report.linf_abs)
                  << ", ref_scale = " << num(s.report.ref_scale) << " ["
                  << (pass ? "pass" : "FAIL") << "]\n";
    }
    std::cout << "# COMPARE: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitTolerance;
}

// Parses "rho=0.5,2;x=-0.4,0.3;xi=0.2;s=0,0.5" into the four axes.
bool parse_grid_spec(const std::string& text, std::vector<double>* rho,
                     std::vector<double>* x, std::vector<double>* xi,
                     std::vector<double>* s) {
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ';')) {
        if (part.empty()) continue;
        const std::size_t eq = part.find('=');
        if (eq == std::string::npos) return false;
        const std::string name = part.substr(0, eq);
        std::vector<double>* axis = nullptr;
        if (name == "rho") axis = rho;
        else if (name == "x") axis = x;
        else if (name == "xi") axis = xi;
        else if (name == "s") axis = s;
        if (axis == nullptr) return false;
        axis->clear();
        std::stringstream values(part.substr(eq + 1));
        std::string token;
        while (std::getline(values, token, ',')) {
            char* end = nullptr;
            const double v = std::strtod(token.c_str(), &end);
            if (token.empty() || end != token.c_str() + token.size() ||
                !std::isfinite(v)) {
                return false;
            }
            axis->push_back(v);
        }
        if (axis->empty()) return false;
    }
    return !rho->empty() && !x->empty() && !xi->empty() && !s->empty();
}

int run_kernels(const std::string& config_path, const std::string& grid) {
    layerheat::ScenarioConfig cfg;
    if (int rc = load_config(config_path, &cfg); rc != kExitOk) return rc;
    const layerheat::HeatScenario& sc = cfg.scenario;

    std::vector<double> rho_axis = {0.5, 2.0};
    std::vector<double> x_axis = {-0.6, 0.4};
    std::vector<double> xi_axis = {-0.3, 0.5};
    std::vector<double> s_axis = {0.0, 0.8};
    if (!grid.empty() &&
        !parse_grid_spec(grid, &rho_axis, &x_axis, &xi_axis, &s_axis)) {
        std::cerr << "error: malformed --grid; expected "
                     "\"rho=R1,R2;x=X1,..;xi=S1,..;s=D1,..\"\n";
        return kExitUsage;
    }

    write_header(std::cout, cfg, "kernels");
    std::cout << "rho,x,xi,s,k,j,re,im\n";
    try {
        for (double rho : rho_axis) {
            for (double x : x_axis) {
                for (double xi : xi_axis) {
                    for (double s : s_axis) {
                        layerheat::KernelQuery q;
                        q.rho = rho;
                        q.x = x;
                        q.xi = xi;
                        q.s = s;
                        q.m = sc.medium.transverse_dim;
                        q.k = layerheat::layer_index(sc.medium, x);
                        q.j = layerheat::layer_index(sc.medium, xi);
                        const std::complex<double> value =
                            layerheat::phi_kj_integral(q, sc.medium,
                                                       sc.coupling, sc.spec);
                        std::cout << num(rho) << "," << num(x) << ","
                                  << num(xi) << "," << num(s) << "," << q.k
                                  << "," << q.j << "," << num(value.real())
                                  << "," << num(value.imag()) << "\n";
                    }
                }
            }
        }
    } catch (const std::exception& problem) {
        std::cerr << "error: " << problem.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "layerheat: spectral heat-equation solver for layered media"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string suite = "all";
    std::string grid;
    double fd_h = 0.0;
    double fd_dt = 0.0;

    CLI::App* solve =
        app.add_subcommand("solve", "Evaluate the solution on a probe grid "
                                    "and write a CSV table");
    solve->add_option("--config", config_path, "Scenario config file")
        ->required();
    solve->add_option("--out", out_dir, "Output directory")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "Run transform and kernel identity suites");
    verify->add_option("--config", config_path, "Scenario config file")
        ->required();
    verify
        ->add_option("--suite", suite,
                     "Which suite to run: all|roundtrip|theorem1|kernels")
        ->check(CLI::IsMember({"all", "roundtrip", "theorem1", "kernels"}));

    CLI::App* compare = app.add_subcommand(
        "compare", "Cross-validate against the finite-difference oracle");
    compare->add_option("--config", config_path, "Scenario config file")
        ->required();
    compare->add_option("--fd-h", fd_h, "Override oracle mesh step")
        ->check(CLI::PositiveNumber);
    compare->add_option("--fd-dt", fd_dt, "Override oracle time step")
        ->check(CLI::PositiveNumber);

    CLI::App* kernels = app.add_subcommand(
        "kernels", "Tabulate transform kernels on a query grid");
    kernels->add_option("--config", config_path, "Scenario config file")
        ->required();
    kernels->add_option(
        "--grid", grid,
        "Query grid, e.g. \"rho=0.5,2;x=-0.4,0.3;xi=0.2;s=0,0.5\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(config_path, out_dir);
        if (verify->parsed()) return run_verify(config_path, suite);
        if (compare->parsed()) return run_compare(config_path, fd_h, fd_dt);
        if (kernels->parsed()) return run_kernels(config_path, grid);
    } catch (const std::exception& problem) {
        std::cerr << "error: " << problem.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
