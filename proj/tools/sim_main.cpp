// Copyright 2026 The ds3sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ds3/serialize.hpp"

namespace {

using namespace ds3;

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("SIM_LOG");
    if (env == nullptr) {
        return LogLevel::Error;
    }
    std::string v(env);
    if (v == "debug") {
        return LogLevel::Debug;
    }
    if (v == "info") {
        return LogLevel::Info;
    }
    return LogLevel::Error;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) {
        std::cerr << "[info] " << msg << "\n";
    }
}

struct RunConfig {
    std::string layout = "plaquette1";
    std::string layout_file;
    double tolerance = kDefaultTolerance;
    std::string format = "pretty";
    std::string output;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--layout", cfg.layout, "Builtin layout name (plaquette1, plaquette2)");
    cmd->add_option("--layout-file", cfg.layout_file, "Path to a JSON layout file");
    cmd->add_option("--tolerance", cfg.tolerance, "Check tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"pretty", "json"}));
    cmd->add_option("--output", cfg.output, "Write the JSON result to this path");
}

LatticeLayout resolve_layout(const RunConfig& cfg) {
    if (!cfg.layout_file.empty()) {
        log_info("loading layout file " + cfg.layout_file);
        return layout_from_file(cfg.layout_file);
    }
    return LatticeLayout::builtin(cfg.layout);
}

// Annotates a complex number with the nearest cube root of unity, if any.
std::string omega_annotation(const cplx& z, double tol) {
    struct Named {
        cplx value;
        const char* label;
    };
    const Named table[] = {
        {cplx(1, 0), "1"},   {cplx(-1, 0), "-1"},      {omega(), "w"},
        {omega_bar(), "w*"}, {-omega(), "-w"},         {-omega_bar(), "-w*"},
        {cplx(0, 0), "0"},
    };
    for (const auto& n : table) {
        if (std::abs(z - n.value) < tol) {
            return n.label;
        }
    }
    return "";
}

std::string format_complex(const cplx& z) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

void print_r_diagonal(const std::array<cplx, 3>& diag, double tol) {
    std::printf("R^GG = diag(");
    for (int i = 0; i < 3; ++i) {
        std::string a = omega_annotation(diag[i], tol);
        std::printf("%s%s", a.empty() ? format_complex(diag[i]).c_str() : a.c_str(),
                    i < 2 ? ", " : "");
    }
    std::printf(")   [w = exp(2*pi*i/3); channels A, B, G]\n");
    for (int i = 0; i < 3; ++i) {
        std::printf("  R_%c = %s\n", kSubmodelTags[i], format_complex(diag[i]).c_str());
    }
}

void print_f_squared(const Mat3d& f) {
    std::printf("F^2 (rows i = A,B,G; columns j = A,B,G):\n");
    for (int i = 0; i < 3; ++i) {
        std::printf("  %12.9f %12.9f %12.9f\n", f[i][0], f[i][1], f[i][2]);
    }
}

void append(std::vector<CheckResult>& checks, const std::string& name, double residual,
            double tol) {
    checks.push_back({name, residual < tol, residual});
}

std::vector<CheckResult> r_checks(const RResult& r, double tol) {
    std::vector<CheckResult> checks;
    double unit = 0, analytic = 0;
    auto expect = analytic_r_diagonal();
    for (int i = 0; i < 3; ++i) {
        unit = std::max(unit, std::abs(std::abs(r.diagonal[i]) - 1.0));
        analytic = std::max(analytic, std::abs(r.diagonal[i] - expect[i]));
    }
    append(checks, "r_unit_modulus", unit, tol);
    append(checks, "r_A_equals_r_B", std::abs(r.diagonal[0] - r.diagonal[1]), tol);
    append(checks, "r_G_conjugate_of_r_A", std::abs(r.diagonal[2] - std::conj(r.diagonal[0])),
           tol);
    append(checks, "r_matches_analytic", analytic, tol);
    return checks;
}

std::vector<CheckResult> f_checks(const FResult& f, double tol) {
    std::vector<CheckResult> checks;
    double analytic = 0, rows = 0, sym = 0, range = 0;
    auto expect = analytic_f_squared();
    for (int i = 0; i < 3; ++i) {
        double row_sum = 0;
        for (int j = 0; j < 3; ++j) {
            analytic = std::max(analytic, std::abs(f.f_squared[i][j] - expect[i][j]));
            sym = std::max(sym, std::abs(f.f_squared[i][j] - f.f_squared[j][i]));
            range = std::max({range, -f.f_squared[i][j], f.f_squared[i][j] - 1.0});
            row_sum += f.f_squared[i][j];
        }
        rows = std::max(rows, std::abs(row_sum - 1.0));
    }
    append(checks, "f_entries_real", f.max_imag_residue, tol);
    append(checks, "f_rows_sum_to_one", rows, tol);
    append(checks, "f_symmetric", sym, tol);
    append(checks, "f_entries_in_unit_interval", std::max(range, 0.0), tol);
    append(checks, "f_matches_analytic", analytic, tol);
    return checks;
}

std::vector<CheckResult> sign_family_checks(const SignFamilyResult& fam, double tol) {
    std::vector<CheckResult> checks;
    checks.push_back({"sign_family_count_is_8", fam.candidates.size() == 8,
                      std::abs(static_cast<double>(fam.candidates.size()) - 8.0)});
    const double sqrt6 = std::sqrt(6.0);
    double norm_res = 0;
    for (double n : fam.commutator_norms) {
        norm_res = std::max(norm_res, std::abs(n - sqrt6));
    }
    append(checks, "commutator_norms_sqrt6", norm_res, tol);
    // Commutator sparsity: zeros everywhere except the (A,G)/(B,G) corners,
    // which have magnitude sqrt(6)/2.
    double pattern = 0;
    for (const auto& comm : fam.commutators) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                bool corner = (i == 2) != (j == 2);
                double expect = corner ? sqrt6 / 2.0 : 0.0;
                pattern = std::max(pattern, std::abs(std::abs(comm[i][j]) - expect));
            }
        }
    }
    append(checks, "commutator_pattern", pattern, tol);
    double analytic = 1e300;
    for (const auto& cand : fam.candidates) {
        double diff = 0;
        auto expect = analytic_f_matrix();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                diff = std::max(diff, std::abs(cand[i][j] - expect[i][j]));
            }
        }
        analytic = std::min(analytic, diff);
    }
    append(checks, "analytic_f_among_candidates", analytic, tol);
    return checks;
}

int finish(ProtocolReport& report, const RunConfig& cfg) {
    if (cfg.format == "json" || !cfg.output.empty()) {
        std::string text = to_json(report).dump(2);
        if (!cfg.output.empty()) {
            std::ofstream out(cfg.output);
            if (!out) {
                std::cerr << "error: cannot write " << cfg.output << "\n";
                return 2;
            }
            out << text << "\n";
        }
        if (cfg.format == "json") {
            std::printf("%s\n", text.c_str());
        }
    }
    if (cfg.format == "pretty") {
        for (const auto& c : report.checks) {
            std::printf("  [%s] %-32s residual = %.3e\n", c.pass ? "pass" : "FAIL",
                        c.name.c_str(), c.residual);
        }
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_ground_state(const RunConfig& cfg) {
    LatticeLayout lat = resolve_layout(cfg);
    const GroupTable& group = GroupTable::s3();
    log_info("computing ground state of " + lat.name);
    GroundState gs = ground_state(lat, group);
    ProtocolReport report;
    append(report.checks, "stabilizer_residual", gs.max_stabilizer_residual, cfg.tolerance);
    double expected_energy =
        -static_cast<double>(lat.vertices.size() + lat.plaquettes.size());
    append(report.checks, "energy_is_minus_stabilizer_count",
           std::abs(gs.energy - expected_energy), cfg.tolerance);
    if (cfg.format == "pretty") {
        std::printf("layout %s: %d qudits, %zu vertices, %zu plaquettes\n", lat.name.c_str(),
                    lat.num_qudits(), lat.vertices.size(), lat.plaquettes.size());
        std::printf("energy = %.12f\n", gs.energy);
        std::printf("max stabilizer residual = %.3e\n", gs.max_stabilizer_residual);
    }
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return 2;
        }
        out << to_json(gs.state).dump(2) << "\n";
        RunConfig no_output = cfg;
        no_output.output.clear();
        return finish(report, no_output);
    }
    return finish(report, cfg);
}

int cmd_r_matrix(const RunConfig& cfg) {
    LatticeLayout lat = resolve_layout(cfg);
    const GroupTable& group = GroupTable::s3();
    GroundState gs = ground_state(lat, group);
    RResult r = extract_r_matrix(gs, group);
    ProtocolReport report;
    report.r_diagonal = r.diagonal;
    report.checks = r_checks(r, cfg.tolerance);
    if (cfg.format == "pretty") {
        print_r_diagonal(r.diagonal, cfg.tolerance);
    }
    return finish(report, cfg);
}

int cmd_f_matrix(const RunConfig& cfg) {
    LatticeLayout lat = resolve_layout(cfg);
    const GroupTable& group = GroupTable::s3();
    GroundState gs = ground_state(lat, group);
    FResult f = extract_f_squared(gs, group);
    ProtocolReport report;
    report.f_squared = f.f_squared;
    report.checks = f_checks(f, cfg.tolerance);
    if (cfg.format == "pretty") {
        print_f_squared(f.f_squared);
    }
    return finish(report, cfg);
}

int cmd_fusion_check(const RunConfig& cfg) {
    LatticeLayout lat = resolve_layout(cfg);
    const GroupTable& group = GroupTable::s3();
    GroundState gs = ground_state(lat, group);
    FusionReport fr = fusion_check(gs, group, {}, cfg.tolerance);
    ProtocolReport report;
    append(report.checks, "fusion_channel_A", fr.residuals[0], cfg.tolerance);
    append(report.checks, "fusion_channel_B", fr.residuals[1], cfg.tolerance);
    append(report.checks, "fusion_channel_G", fr.residuals[2], cfg.tolerance);
    if (cfg.format == "pretty") {
        std::printf("G x G fusion channel residuals: A %.3e, B %.3e, G %.3e\n", fr.residuals[0],
                    fr.residuals[1], fr.residuals[2]);
    }
    return finish(report, cfg);
}

int cmd_exchange_check(const RunConfig& cfg) {
    const GroupTable& group = GroupTable::s3();
    ExchangeReport ex = verify_exchange_relation(group, cfg.tolerance);
    ProtocolReport report;
    report.checks.push_back({"exchange_same_sparsity", ex.same_sparsity,
                             std::abs(static_cast<double>(ex.entries_12 - ex.entries_21))});
    append(report.checks, "exchange_phase_prescription", ex.max_rule_residual, cfg.tolerance);
    if (cfg.format == "pretty") {
        std::printf("F_rho1 F_rho2 has %d entries; F_rho2 F_rho1 has %d entries\n",
                    ex.entries_12, ex.entries_21);
        std::printf("phase prescription (w* if g1g2 = h1h2, else w): residual %.3e\n",
                    ex.max_rule_residual);
    }
    return finish(report, cfg);
}

int cmd_commutator(const RunConfig& cfg) {
    LatticeLayout lat = resolve_layout(cfg);
    const GroupTable& group = GroupTable::s3();
    GroundState gs = ground_state(lat, group);
    RResult r = extract_r_matrix(gs, group);
    FResult f = extract_f_squared(gs, group);
    SignFamilyResult fam = enumerate_sign_family(f.f_squared, r.diagonal, cfg.tolerance);
    ProtocolReport report;
    report.r_diagonal = r.diagonal;
    report.f_squared = f.f_squared;
    report.sign_family_count = static_cast<int>(fam.candidates.size());
    report.min_commutator_norm = fam.min_commutator_norm;
    report.checks = sign_family_checks(fam, cfg.tolerance);
    if (cfg.format == "pretty") {
        std::printf("%zu sign candidates; min Frobenius commutator norm %.9f (sqrt 6 = %.9f)\n",
                    fam.candidates.size(), fam.min_commutator_norm, std::sqrt(6.0));
    }
    return finish(report, cfg);
}

int cmd_dense(const RunConfig& cfg) {
    LatticeLayout lat = resolve_layout(cfg);
    const GroupTable& group = GroupTable::s3();
    GroundState gs = ground_state(lat, group);
    RResult r_full = extract_r_matrix(gs, group);
    FResult f_full = extract_f_squared(gs, group);
    auto [r_dense, f_dense] = run_dense_protocols(group);
    ProtocolReport report;
    report.r_diagonal = r_dense.diagonal;
    report.f_squared = f_dense.f_squared;
    double rdiff = 0, fdiff = 0;
    for (int i = 0; i < 3; ++i) {
        rdiff = std::max(rdiff, std::abs(r_dense.diagonal[i] - r_full.diagonal[i]));
        for (int j = 0; j < 3; ++j) {
            fdiff = std::max(fdiff, std::abs(f_dense.f_squared[i][j] - f_full.f_squared[i][j]));
        }
    }
    append(report.checks, "dense_r_matches_full_lattice", rdiff, cfg.tolerance);
    append(report.checks, "dense_f_matches_full_lattice", fdiff, cfg.tolerance);
    for (auto& c : r_checks(r_dense, cfg.tolerance)) {
        c.name = "dense_" + c.name;
        report.checks.push_back(c);
    }
    for (auto& c : f_checks(f_dense, cfg.tolerance)) {
        c.name = "dense_" + c.name;
        report.checks.push_back(c);
    }
    if (cfg.format == "pretty") {
        std::printf("two-qudit dense encoding (36-dimensional operators only):\n");
        print_r_diagonal(r_dense.diagonal, cfg.tolerance);
        print_f_squared(f_dense.f_squared);
        std::printf("max difference vs full lattice: R %.3e, F^2 %.3e\n", rdiff, fdiff);
    }
    return finish(report, cfg);
}

int cmd_full_report(const RunConfig& cfg) {
    LatticeLayout lat = resolve_layout(cfg);
    const GroupTable& group = GroupTable::s3();
    log_info("running the whole protocol suite on " + lat.name);
    GroundState gs = ground_state(lat, group);
    RResult r = extract_r_matrix(gs, group);
    FResult f = extract_f_squared(gs, group);
    SignFamilyResult fam = enumerate_sign_family(f.f_squared, r.diagonal, cfg.tolerance);
    ExchangeReport ex = verify_exchange_relation(group, cfg.tolerance);
    FusionReport fu = fusion_check(gs, group, {}, cfg.tolerance);
    auto [r_dense, f_dense] = run_dense_protocols(group);

    ProtocolReport report;
    report.r_diagonal = r.diagonal;
    report.f_squared = f.f_squared;
    report.sign_family_count = static_cast<int>(fam.candidates.size());
    report.min_commutator_norm = fam.min_commutator_norm;
    append(report.checks, "stabilizer_residual", gs.max_stabilizer_residual, cfg.tolerance);
    for (const auto& c : r_checks(r, cfg.tolerance)) {
        report.checks.push_back(c);
    }
    for (const auto& c : f_checks(f, cfg.tolerance)) {
        report.checks.push_back(c);
    }
    append(report.checks, "fusion_channel_A", fu.residuals[0], cfg.tolerance);
    append(report.checks, "fusion_channel_B", fu.residuals[1], cfg.tolerance);
    append(report.checks, "fusion_channel_G", fu.residuals[2], cfg.tolerance);
    report.checks.push_back({"exchange_same_sparsity", ex.same_sparsity,
                             std::abs(static_cast<double>(ex.entries_12 - ex.entries_21))});
    append(report.checks, "exchange_phase_prescription", ex.max_rule_residual, cfg.tolerance);
    for (const auto& c : sign_family_checks(fam, cfg.tolerance)) {
        report.checks.push_back(c);
    }
    double rdiff = 0, fdiff = 0;
    for (int i = 0; i < 3; ++i) {
        rdiff = std::max(rdiff, std::abs(r_dense.diagonal[i] - r.diagonal[i]));
        for (int j = 0; j < 3; ++j) {
            fdiff = std::max(fdiff, std::abs(f_dense.f_squared[i][j] - f.f_squared[i][j]));
        }
    }
    append(report.checks, "dense_r_matches_full_lattice", rdiff, cfg.tolerance);
    append(report.checks, "dense_f_matches_full_lattice", fdiff, cfg.tolerance);

    if (cfg.format == "pretty") {
        std::printf("layout %s: energy %.12f\n", lat.name.c_str(), gs.energy);
        print_r_diagonal(r.diagonal, cfg.tolerance);
        print_f_squared(f.f_squared);
        std::printf("%zu sign candidates; min commutator norm %.9f\n", fam.candidates.size(),
                    fam.min_commutator_norm);
    }
    return finish(report, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulator of the D(S3) quantum double on small qudit lattices"};
    app.require_subcommand(1);

    RunConfig cfg;
    struct Command {
        const char* name;
        const char* help;
        int (*run)(const RunConfig&);
    };
    const Command commands[] = {
        {"ground-state", "Build the stabilizer ground state and report residuals",
         cmd_ground_state},
        {"r-matrix", "Extract the braiding matrix R^GG from crossed ribbons", cmd_r_matrix},
        {"f-matrix", "Extract the squared fusion matrix F^2", cmd_f_matrix},
        {"fusion-check", "Verify the G x G = A + B + G fusion identities", cmd_fusion_check},
        {"exchange-check", "Verify the ribbon exchange phase prescription", cmd_exchange_check},
        {"commutator", "Enumerate sign candidates and their commutators with R", cmd_commutator},
        {"dense", "Run both protocols through the two-qudit dense encoding", cmd_dense},
        {"full-report", "Run everything and emit the complete report", cmd_full_report},
    };
    std::map<const CLI::App*, const Command*> dispatch;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common_options(sub, cfg);
        dispatch[sub] = &c;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const auto& [sub, cmd] : dispatch) {
            if (sub->parsed()) {
                return cmd->run(cfg);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
