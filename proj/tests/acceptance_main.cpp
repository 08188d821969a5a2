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

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Heavier checks (the full pairwise stabilizer sweep and
// the dense eigensolver oracle) live here rather than in the unit tests.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ds3/protocols.hpp"
#include "support/symmetric_eigen.hpp"
#include "support/test_helpers.hpp"

using namespace ds3;

namespace {

using clock_type = std::chrono::steady_clock;

struct SubCheck {
    std::string text;
    bool pass;
};

struct Criterion {
    int number;
    std::string title;
    std::vector<SubCheck> checks;
    std::vector<std::string> notes;

    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

std::vector<Criterion> g_criteria;

Criterion& criterion(int number, const std::string& title) {
    g_criteria.push_back({number, title, {}, {}});
    return g_criteria.back();
}

void check(Criterion& c, bool pass, const std::string& text) {
    c.checks.push_back({text, pass});
}

void check_residual(Criterion& c, double residual, double tol, const std::string& what) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s (residual %.3e, tol %.0e)", what.c_str(), residual, tol);
    c.checks.push_back({buf, residual < tol});
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Frozen 36-entry expansions of F_rho1 F_rho2 and F_rho2 F_rho1 in the
// {e, c, c2} sector, element indices 0/1/2, phases 0 -> 1, 1 -> w, 2 -> w*.
// Each second-product entry was derived by hand from the first product and
// the exchange phase prescription (w* iff g1 g2 = h1 h2, else w), and
// cross-checked by direct evaluation of the operator product; in particular
// the |e,e><c,c2| coefficient is w, as both routes require.

struct FrozenEntry {
    int g1, g2, h1, h2, phase;
};

constexpr FrozenEntry kProduct12[] = {
    {0, 2, 1, 0, 0}, {0, 2, 2, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 2, 0, 0}, {2, 2, 0, 0, 1},
    {2, 2, 1, 0, 1}, {2, 1, 0, 0, 2}, {2, 1, 1, 0, 2}, {1, 2, 0, 0, 2}, {1, 2, 2, 0, 2},
    {1, 1, 0, 0, 1}, {1, 1, 2, 0, 1}, {0, 0, 1, 1, 1}, {0, 0, 2, 1, 2}, {0, 2, 1, 1, 1},
    {0, 2, 2, 1, 2}, {2, 0, 0, 1, 2}, {2, 0, 1, 1, 0}, {2, 2, 0, 1, 0}, {2, 2, 1, 1, 1},
    {1, 0, 0, 1, 1}, {1, 0, 2, 1, 0}, {1, 2, 0, 1, 0}, {1, 2, 2, 1, 2}, {0, 1, 1, 2, 2},
    {0, 1, 2, 2, 1}, {0, 0, 1, 2, 2}, {0, 0, 2, 2, 1}, {2, 1, 0, 2, 0}, {2, 1, 1, 2, 2},
    {2, 0, 0, 2, 1}, {2, 0, 1, 2, 0}, {1, 1, 0, 2, 0}, {1, 1, 2, 2, 1}, {1, 0, 0, 2, 2},
    {1, 0, 2, 2, 0},
};

constexpr FrozenEntry kProduct21[] = {
    {0, 2, 1, 0, 1}, {0, 2, 2, 0, 2}, {0, 1, 1, 0, 2}, {0, 1, 2, 0, 1}, {2, 2, 0, 0, 2},
    {2, 2, 1, 0, 0}, {2, 1, 0, 0, 1}, {2, 1, 1, 0, 0}, {1, 2, 0, 0, 1}, {1, 2, 2, 0, 0},
    {1, 1, 0, 0, 2}, {1, 1, 2, 0, 0}, {0, 0, 1, 1, 2}, {0, 0, 2, 1, 1}, {0, 2, 1, 1, 0},
    {0, 2, 2, 1, 0}, {2, 0, 0, 1, 0}, {2, 0, 1, 1, 2}, {2, 2, 0, 1, 2}, {2, 2, 1, 1, 2},
    {1, 0, 0, 1, 0}, {1, 0, 2, 1, 1}, {1, 2, 0, 1, 1}, {1, 2, 2, 1, 1}, {0, 1, 1, 2, 0},
    {0, 1, 2, 2, 0}, {0, 0, 1, 2, 1}, {0, 0, 2, 2, 2}, {2, 1, 0, 2, 1}, {2, 1, 1, 2, 1},
    {2, 0, 0, 2, 0}, {2, 0, 1, 2, 1}, {1, 1, 0, 2, 2}, {1, 1, 2, 2, 2}, {1, 0, 0, 2, 0},
    {1, 0, 2, 2, 2},
};

double frozen_table_residual(const LinearOperator& product, const FrozenEntry* table,
                             size_t count) {
    if (product.entries.size() != count) {
        return 1.0;
    }
    const cplx phases[3] = {cplx(1, 0), omega(), omega_bar()};
    LinearOperator expected(2, 6);
    for (size_t i = 0; i < count; ++i) {
        const FrozenEntry& f = table[i];
        expected.entries.push_back({basis_index({f.g1, f.g2}, 6), basis_index({f.h1, f.h2}, 6),
                                    phases[f.phase]});
    }
    expected.canonicalize();
    return max_entry_difference(product, expected);
}

// ---------------------------------------------------------------------------

void run_criterion_1(const GroundState& gs, const GroupTable& group) {
    Criterion& c = criterion(1, "R-matrix reproduction on plaquette1");
    auto t0 = clock_type::now();
    RResult r = extract_r_matrix(gs, group);
    double elapsed = seconds_since(t0);
    auto expect = analytic_r_diagonal();
    double residual = 0;
    for (int i = 0; i < 3; ++i) {
        residual = std::max(residual, std::abs(r.diagonal[i] - expect[i]));
    }
    check_residual(c, residual, 1e-10, "R diagonal equals diag(w*, w*, w)");
    char buf[128];
    std::snprintf(buf, sizeof buf, "runtime %.3f s < 1 s", elapsed);
    check(c, elapsed < 1.0, buf);
}

void run_criterion_2(const GroundState& gs, const GroupTable& group) {
    Criterion& c = criterion(2, "squared-F reproduction on plaquette1");
    auto t0 = clock_type::now();
    FResult f = extract_f_squared(gs, group);
    double elapsed = seconds_since(t0);
    auto expect = analytic_f_squared();
    double residual = f.max_imag_residue;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            residual = std::max(residual, std::abs(f.f_squared[i][j] - expect[i][j]));
        }
    }
    check_residual(c, residual, 1e-10, "F^2 equals (1/4)[[1,1,2],[1,1,2],[2,2,0]]");
    char buf[128];
    std::snprintf(buf, sizeof buf, "runtime %.3f s < 5 s", elapsed);
    check(c, elapsed < 5.0, buf);
}

void run_criterion_3(const GroundState& gs, const GroupTable& group) {
    Criterion& c = criterion(3, "non-commutativity across the sign family");
    RResult r = extract_r_matrix(gs, group);
    FResult f = extract_f_squared(gs, group);
    SignFamilyResult fam = enumerate_sign_family(f.f_squared, r.diagonal);
    check(c, fam.candidates.size() == 8,
          "exactly 8 unitary real symmetric candidates (found " +
              std::to_string(fam.candidates.size()) + ")");
    const double sqrt6 = std::sqrt(6.0);
    double norm_residual = 0;
    for (double n : fam.commutator_norms) {
        norm_residual = std::max(norm_residual, std::abs(n - sqrt6));
    }
    check_residual(c, norm_residual, 1e-10, "all commutator Frobenius norms equal sqrt(6)");
    double pattern = 0;
    for (const auto& comm : fam.commutators) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                bool corner = (i == 2) != (j == 2);
                pattern = std::max(pattern,
                                   std::abs(std::abs(comm[i][j]) - (corner ? sqrt6 / 2 : 0.0)));
            }
        }
    }
    check_residual(c, pattern, 1e-10,
                   "commutators vanish except the four G-row/column corners of "
                   "magnitude sqrt(6)/2");
    double best = 1e300;
    auto analytic = analytic_f_matrix();
    for (const auto& cand : fam.candidates) {
        double diff = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                diff = std::max(diff, std::abs(cand[i][j] - analytic[i][j]));
            }
        }
        best = std::min(best, diff);
    }
    check_residual(c, best, 1e-10, "the analytic F matrix is among the candidates");
}

void run_criterion_4(const GroundState& gs, const GroupTable& group) {
    Criterion& c = criterion(4, "fusion rules G x G = A + B + G");
    FusionReport rep = fusion_check(gs, group);
    check_residual(c, rep.residuals[0], 1e-10, "A^A(v)(F1)^2|gs> = |gs>");
    check_residual(c, rep.residuals[1], 1e-10, "A^B(v)(F1)^2|gs> = F^B|gs>");
    check_residual(c, rep.residuals[2], 1e-10, "A^G(v)(F1)^2|gs> = F^G|gs>");
}

void run_criterion_5(const GroupTable& group) {
    Criterion& c = criterion(5, "ribbon exchange relation and explicit products");
    ExchangeReport rep = verify_exchange_relation(group);
    check(c, rep.entries_12 == 36 && rep.entries_21 == 36 && rep.same_sparsity,
          "both products have the same 36-position sparsity pattern");
    check_residual(c, rep.max_rule_residual, 1e-10,
                   "phase prescription (w* iff g1g2 = h1h2, else w) at every position");
    auto [rho1, rho2] = builtin_G_ribbons(group);
    double r12 = frozen_table_residual(compose(rho1, rho2), kProduct12, 36);
    double r21 = frozen_table_residual(compose(rho2, rho1), kProduct21, 36);
    check_residual(c, r12, 1e-10, "F_rho1 F_rho2 matches the explicit 36-term expansion");
    check_residual(c, r21, 1e-10, "F_rho2 F_rho1 matches the explicit 36-term expansion");
}

void run_criterion_6(const GroundState& gs, const GroupTable& group) {
    Criterion& c = criterion(6, "two-qudit dense encoding");
    RResult r_full = extract_r_matrix(gs, group);
    FResult f_full = extract_f_squared(gs, group);
    auto [r_dense, f_dense] = run_dense_protocols(group);
    double rdiff = 0, fdiff = 0;
    for (int i = 0; i < 3; ++i) {
        rdiff = std::max(rdiff, std::abs(r_dense.diagonal[i] - r_full.diagonal[i]));
        for (int j = 0; j < 3; ++j) {
            fdiff = std::max(fdiff, std::abs(f_dense.f_squared[i][j] - f_full.f_squared[i][j]));
        }
    }
    check_residual(c, rdiff, 1e-10, "dense R equals the four-qudit R");
    check_residual(c, fdiff, 1e-10, "dense F^2 equals the four-qudit F^2");

    // Documented global constant, measured on the identity operator.
    cplx identity_ratio = two_qudit_overlap(LinearOperator::identity(2, 6)) /
                          inner(gs.state, gs.state);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "documented global constant (identity operator): %.12f + %.1ei",
                  identity_ratio.real(), identity_ratio.imag());
    check(c, std::abs(identity_ratio - cplx(1, 0)) < 1e-10, buf);

    // The reduction is exact on the whole operator algebra the protocols
    // draw from: random words in {F1, F2, A^A, A^B, A^G, B strings}.
    auto [f1, f2] = builtin_G_ribbons(group);
    std::vector<LinearOperator> gens = {f1,
                                        f2,
                                        dense_charge_projector('A', group),
                                        dense_charge_projector('B', group),
                                        dense_charge_projector('G', group),
                                        embed(abelian_string('B', '-', group), {1}, 2),
                                        embed(abelian_string('B', '-', group), {2}, 2)};
    std::mt19937 rng(20260808);
    double worst_word = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int length = 1 + static_cast<int>(rng() % 8);
        LinearOperator w = LinearOperator::identity(2, 6);
        for (int k = 0; k < length; ++k) {
            w = compose(w, gens[rng() % gens.size()]);
        }
        cplx dense = two_qudit_overlap(w);
        cplx full = inner(gs.state, apply(embed(w, {3, 4}, 4), gs.state));
        worst_word = std::max(worst_word, std::abs(dense - full));
    }
    check_residual(c, worst_word, 1e-10,
                   "50 random words in the protocol operator algebra satisfy the reduction");

    // Random two-site operators, compared up to a single fitted constant.
    std::vector<cplx> dense_vals, full_vals;
    for (int trial = 0; trial < 50; ++trial) {
        LinearOperator o = ds3::testing::random_sparse_operator(rng, 2, 6, 12);
        dense_vals.push_back(two_qudit_overlap(o));
        full_vals.push_back(inner(gs.state, apply(embed(o, {3, 4}, 4), gs.state)));
    }
    cplx num(0, 0);
    double den = 0;
    for (int k = 0; k < 50; ++k) {
        num += std::conj(full_vals[k]) * dense_vals[k];
        den += std::norm(full_vals[k]);
    }
    cplx constant = num / den;
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
        worst = std::max(worst, std::abs(dense_vals[k] - constant * full_vals[k]));
    }
    std::snprintf(buf, sizeof buf,
                  "50 random two-site operators agree up to one constant "
                  "(best fit %.6f%+.6fi, max residual %.3e)",
                  constant.real(), constant.imag(), worst);
    check(c, worst < 1e-10, buf);
    if (worst >= 1e-10) {
        c.notes.push_back(
            "the ground-state expectation <gs|1x0|gs> sums only flux-preserving matrix "
            "elements of O, while the uniform-state evaluation 6<xi|O|xi> sums all of "
            "them; no single constant reconciles generic operators.  The reduction is "
            "an identity for the protocol operators (their cross-flux elements cancel), "
            "which is what the dense R/F^2 checks above confirm.");
    }
}

// Pairwise commutators over the commuting stabilizer family.  Same-vertex
// A^g pairs realize the group algebra (A^g A^h = A^{gh}) and the flux base
// corner of each plaquette conjugates B^h for h != e, so those pairs are
// checked against their algebra in the unit tests rather than against zero
// here.
void sweep_stabilizer_commutators(Criterion& c, const LatticeLayout& lat,
                                  const GroupTable& group, const char* label) {
    const int d = group.order();
    double worst = 0;
    size_t pairs = 0;

    std::vector<LinearOperator> a_ops;  // vertex-major blocks of size d
    for (const auto& v : lat.vertices) {
        for (int g = 0; g < d; ++g) {
            a_ops.push_back(vertex_operator(lat, group, v.id, g));
        }
    }
    const size_t nv = lat.vertices.size();
    for (size_t vi = 0; vi < nv; ++vi) {
        for (size_t wi = vi + 1; wi < nv; ++wi) {
            for (int g = 0; g < d; ++g) {
                for (int h = 0; h < d; ++h) {
                    worst = std::max(worst, commutator_residual(a_ops[vi * d + g],
                                                                a_ops[wi * d + h]));
                    ++pairs;
                }
            }
        }
    }

    std::vector<LinearOperator> b_ops;
    std::vector<int> base_vertex;
    for (const auto& p : lat.plaquettes) {
        base_vertex.push_back(flux_base_vertex(lat, p.id));
        for (int h = 0; h < d; ++h) {
            b_ops.push_back(plaquette_operator(lat, group, p.id, h));
        }
    }
    for (size_t pi = 0; pi < lat.plaquettes.size(); ++pi) {
        for (size_t vi = 0; vi < nv; ++vi) {
            bool at_base = lat.vertices[vi].id == base_vertex[pi];
            for (int h = 0; h < d; ++h) {
                if (h != group.identity() && at_base) {
                    continue;  // D(G) site algebra instead: A^g B^h = B^{ghg^-1} A^g
                }
                for (int g = 0; g < d; ++g) {
                    worst = std::max(worst, commutator_residual(a_ops[vi * d + g],
                                                                b_ops[pi * d + h]));
                    ++pairs;
                }
            }
        }
    }
    for (size_t i = 0; i < b_ops.size(); ++i) {
        for (size_t j = i + 1; j < b_ops.size(); ++j) {
            worst = std::max(worst, commutator_residual(b_ops[i], b_ops[j]));
            ++pairs;
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%s: %zu pairwise commutators of the commuting stabilizer family < 1e-12 "
                  "(worst %.3e)",
                  label, pairs, worst);
    check(c, worst < 1e-12, buf);
}

void check_projectors(Criterion& c, const LatticeLayout& lat, const GroupTable& group,
                      const char* label) {
    double worst_idem = 0, worst_herm = 0, worst_sum = 0;
    LinearOperator id = LinearOperator::identity(lat.num_qudits(), group.order());
    for (const auto& v : lat.vertices) {
        std::vector<LinearOperator> charge;
        for (char tag : kSubmodelTags) {
            charge.push_back(anyon_projector(lat, group, v.id, tag));
        }
        std::vector<LinearOperator> all = charge;
        all.push_back(vertex_projector(lat, group, v.id));
        for (const auto& p : all) {
            double herm = 0;
            worst_idem = std::max(worst_idem, ds3::testing::projector_residual(p, &herm));
            worst_herm = std::max(worst_herm, herm);
        }
        worst_sum = std::max(worst_sum,
                             max_entry_difference(sum({charge[0], charge[1], charge[2]}), id));
    }
    for (const auto& p : lat.plaquettes) {
        LinearOperator bp = plaquette_operator(lat, group, p.id, group.identity());
        double herm = 0;
        worst_idem = std::max(worst_idem, ds3::testing::projector_residual(bp, &herm));
        worst_herm = std::max(worst_herm, herm);
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s: projectors satisfy P^2 = P (worst %.3e) and P+ = P "
                  "(worst %.3e)", label, worst_idem, worst_herm);
    check(c, worst_idem < 1e-12 && worst_herm < 1e-12, buf);
    std::snprintf(buf, sizeof buf, "%s: A^A + A^B + A^G = identity (worst %.3e)", label,
                  worst_sum);
    check(c, worst_sum < 1e-12, buf);
}

void run_criterion_7(const GroundState& gs1, const GroupTable& group) {
    Criterion& c = criterion(7, "stabilizer structure and spectral oracle");
    LatticeLayout lat1 = LatticeLayout::plaquette1();
    LatticeLayout lat2 = LatticeLayout::plaquette2();
    sweep_stabilizer_commutators(c, lat1, group, "plaquette1");
    sweep_stabilizer_commutators(c, lat2, group, "plaquette2");
    check_projectors(c, lat1, group, "plaquette1");
    check_projectors(c, lat2, group, "plaquette2");

    // Dense eigensolver oracle on the 1296-dimensional Hamiltonian.
    LinearOperator h = hamiltonian(lat1, group);
    const int n = static_cast<int>(h.size());
    std::vector<double> dense(static_cast<size_t>(n) * n, 0.0);
    double max_imag = 0;
    for (const auto& e : h.entries) {
        dense[static_cast<size_t>(e.row) * n + e.col] = e.val.real();
        max_imag = std::max(max_imag, std::abs(e.val.imag()));
    }
    check(c, max_imag < 1e-14, "Hamiltonian is real in the group basis");
    auto eigs = ds3::testing::symmetric_eigenvalues(std::move(dense), n);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "eigensolver oracle: lowest eigenvalue %.9f = -5 with spectral gap %.6f",
                  eigs[0], eigs[1] - eigs[0]);
    check(c, std::abs(eigs[0] + 5.0) < 1e-8 && eigs[1] - eigs[0] > 0.9, buf);
    double gs_energy_residual = std::abs(gs1.energy - eigs[0]);
    check_residual(c, gs_energy_residual, 1e-8,
                   "projected ground state sits at the oracle's lowest eigenvalue");
    StateVector hgs = apply(h, gs1.state);
    check_residual(c, distance(hgs, scale(cplx(-5, 0), gs1.state)), 1e-10,
                   "H|gs> = -5|gs>, so the unique lowest eigenvector is the projected state");
}

void run_criterion_8(const GroundState& gs, const GroupTable& group) {
    Criterion& c = criterion(8, "generic ribbon algebra");
    // Gluing one dual and one direct triangle reproduces F^{h,g} = L^h T^g.
    auto fam = glue(triangle_family({Triangle::Kind::Dual, 1, '-'}, group),
                    triangle_family({Triangle::Kind::Direct, 2, '-'}, group), group);
    double worst = 0;
    for (int h = 0; h < 6; ++h) {
        for (int g = 0; g < 6; ++g) {
            LinearOperator expect = tensor(single_qudit_operator(QuditOp::Lminus, h, group),
                                           single_qudit_operator(QuditOp::Tminus, g, group));
            worst = std::max(worst, max_entry_difference(fam.op(h, g), expect));
        }
    }
    check_residual(c, worst, 1e-14, "glued dual+direct family equals L^h T^g for all (h,g)");

    // The generically constructed G ribbons create dyon pairs: preserved by
    // A^G at both endpoint vertices, annihilated by A^A and A^B.
    LatticeLayout lat = gs.layout;
    struct Case {
        RibbonSpec spec;
        std::array<int, 2> endpoints;
    };
    const Case cases[] = {{RibbonSpec::rho1(), {3, 4}}, {RibbonSpec::rho2(), {2, 3}}};
    double worst_keep = 0, worst_kill = 0;
    for (const auto& [spec, endpoints] : cases) {
        LinearOperator ribbon =
            nonabelian_ribbon_traced(anyon('G'), ribbon_family(spec, group), group);
        StateVector excited = apply(embed(ribbon, {3, 4}, lat.num_qudits()), gs.state);
        for (int v : endpoints) {
            worst_keep = std::max(
                worst_keep,
                distance(apply(anyon_projector(lat, group, v, 'G'), excited), excited));
            worst_kill =
                std::max(worst_kill, apply(anyon_projector(lat, group, v, 'A'), excited).norm());
            worst_kill =
                std::max(worst_kill, apply(anyon_projector(lat, group, v, 'B'), excited).norm());
        }
    }
    check_residual(c, worst_keep, 1e-10, "A^G preserves the state at both endpoint vertices");
    check_residual(c, worst_kill, 1e-10, "A^A and A^B annihilate it there");
}

}  // namespace

int main() {
    const GroupTable& group = GroupTable::s3();
    GroundState gs = ground_state(LatticeLayout::plaquette1(), group);

    run_criterion_1(gs, group);
    run_criterion_2(gs, group);
    run_criterion_3(gs, group);
    run_criterion_4(gs, group);
    run_criterion_5(group);
    run_criterion_6(gs, group);
    run_criterion_7(gs, group);
    run_criterion_8(gs, group);

    int failures = 0;
    for (const auto& c : g_criteria) {
        std::printf("criterion %d [%s] %s\n", c.number, c.pass() ? "PASS" : "FAIL",
                    c.title.c_str());
        for (const auto& sub : c.checks) {
            std::printf("    [%s] %s\n", sub.pass ? "pass" : "FAIL", sub.text.c_str());
        }
        for (const auto& note : c.notes) {
            std::printf("    note: %s\n", note.c_str());
        }
        if (!c.pass()) {
            ++failures;
        }
    }
    std::printf("%zu/%zu criteria passed\n", g_criteria.size() - failures, g_criteria.size());
    return failures == 0 ? 0 : 1;
}
