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

#pragma once

#include <array>

#include "ds3/lattice.hpp"
#include "ds3/ribbon.hpp"

namespace ds3 {

using Mat3c = std::array<std::array<cplx, 3>, 3>;
using Mat3d = std::array<std::array<double, 3>, 3>;

inline constexpr std::array<char, 3> kSubmodelTags = {'A', 'B', 'G'};

/// Braiding matrix diagonal of two G anyons per fusion channel (A, B, G).
inline std::array<cplx, 3> analytic_r_diagonal() {
    return {omega_bar(), omega_bar(), omega()};
}

/// Elementwise square of the fusion recombination matrix.
inline Mat3d analytic_f_squared() {
    return {{{0.25, 0.25, 0.5}, {0.25, 0.25, 0.5}, {0.5, 0.5, 0.0}}};
}

/// The fusion recombination matrix itself (one sign choice).
inline Mat3d analytic_f_matrix() {
    const double s = std::sqrt(0.5);
    return {{{0.5, 0.5, s}, {0.5, 0.5, -s}, {s, -s, 0.0}}};
}

/// Frobenius norm of R F - F R for 3x3 matrices.
inline double commutator_norm(const Mat3c& r, const Mat3c& f) {
    double n2 = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            cplx rf(0, 0), fr(0, 0);
            for (int k = 0; k < 3; ++k) {
                rf += r[i][k] * f[k][j];
                fr += f[i][k] * r[k][j];
            }
            n2 += std::norm(rf - fr);
        }
    }
    return std::sqrt(n2);
}

inline Mat3c to_complex(const Mat3d& m) {
    Mat3c out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out[i][j] = cplx(m[i][j], 0);
        }
    }
    return out;
}

inline Mat3c diagonal_matrix(const std::array<cplx, 3>& d) {
    Mat3c out{};
    for (int i = 0; i < 3; ++i) {
        out[i][i] = d[i];
    }
    return out;
}

/// Where the crossed ribbons sit: both act on the qudits of links
/// (link_a, link_b) and share the measurement vertex.
struct ProtocolGeometry {
    int link_a = 3;
    int link_b = 4;
    int vertex = 3;
};

/// The embedded operators every protocol needs.
struct ProtocolOperators {
    LinearOperator f1;                     // F^G_rho1 on the full lattice
    LinearOperator f2;                     // F^G_rho2 on the full lattice
    std::array<LinearOperator, 3> charge;  // A^A(v), A^B(v), A^G(v)

    static ProtocolOperators build(const LatticeLayout& lat, const GroupTable& group,
                                   const ProtocolGeometry& geo) {
        auto [rho1, rho2] = builtin_G_ribbons(group);
        std::vector<int> sites = {lat.site_of_link(geo.link_a), lat.site_of_link(geo.link_b)};
        ProtocolOperators ops;
        ops.f1 = embed(rho1, sites, lat.num_qudits());
        ops.f2 = embed(rho2, sites, lat.num_qudits());
        for (int i = 0; i < 3; ++i) {
            ops.charge[i] = anyon_projector(lat, group, geo.vertex, kSubmodelTags[i]);
        }
        return ops;
    }
};

/// N_A = N_B = 2, N_G = sqrt(2): the projector-induced normalizations of
/// the phi states.
inline std::array<double, 3> r_state_normalizations() {
    return {2.0, 2.0, std::sqrt(2.0)};
}

struct RResult {
    std::array<cplx, 3> diagonal{};      // R^GG_i for i = A, B, G
    std::array<cplx, 3> raw_overlaps{};  // before the N_i^2 factor
    std::array<double, 3> normalizations{};
    std::array<double, 3> phi12_norm{};  // after the N_i factor, should be 1
    std::array<double, 3> phi21_norm{};
};

/// Builds |phi12(i)> = N_i A^i(v) F^G_rho1 F^G_rho2 |gs> and
/// |phi21(i)> = N_i A^i(v) F^G_rho2 F^G_rho1 |gs> and returns the braiding
/// diagonal R^GG_i = <phi12(i)|phi21(i)>.
inline RResult extract_r_matrix(const GroundState& gs, const GroupTable& group,
                                const ProtocolGeometry& geo = {}) {
    ProtocolOperators ops = ProtocolOperators::build(gs.layout, group, geo);
    StateVector s12 = apply(ops.f1, apply(ops.f2, gs.state));
    StateVector s21 = apply(ops.f2, apply(ops.f1, gs.state));
    RResult res;
    res.normalizations = r_state_normalizations();
    for (int i = 0; i < 3; ++i) {
        StateVector p12 = apply(ops.charge[i], s12);
        StateVector p21 = apply(ops.charge[i], s21);
        if (p12.norm() < 1e-12 || p21.norm() < 1e-12) {
            throw std::runtime_error("projected state vanished; wrong vertex/ribbon geometry");
        }
        res.raw_overlaps[i] = inner(p12, p21);
        double n = res.normalizations[i];
        res.diagonal[i] = n * n * res.raw_overlaps[i];
        res.phi12_norm[i] = n * p12.norm();
        res.phi21_norm[i] = n * p21.norm();
    }
    return res;
}

struct ExchangeReport {
    int entries_12 = 0;
    int entries_21 = 0;
    bool same_sparsity = false;
    double max_rule_residual = 0;  // against P21 = (wbar or w) * P12 entrywise
    bool pass = false;
};

/// Checks F^G_rho2 F^G_rho1 against R^GG F^G_rho1 F^G_rho2 elementwise: each
/// common entry |g1,g2><h1,h2| of the two 36-dimensional products differs by
/// the factor wbar when g1 g2 = h1 h2 and by w otherwise.
inline ExchangeReport verify_exchange_relation(const GroupTable& group,
                                               double tolerance = kDefaultTolerance) {
    auto [rho1, rho2] = builtin_G_ribbons(group);
    LinearOperator p12 = compose(rho1, rho2);
    LinearOperator p21 = compose(rho2, rho1);
    ExchangeReport rep;
    rep.entries_12 = static_cast<int>(p12.entries.size());
    rep.entries_21 = static_cast<int>(p21.entries.size());
    rep.same_sparsity = rep.entries_12 == rep.entries_21;
    if (rep.same_sparsity) {
        for (size_t k = 0; k < p12.entries.size(); ++k) {
            if (p12.entries[k].row != p21.entries[k].row ||
                p12.entries[k].col != p21.entries[k].col) {
                rep.same_sparsity = false;
                break;
            }
        }
    }
    if (!rep.same_sparsity) {
        return rep;
    }
    const int d = group.order();
    for (size_t k = 0; k < p12.entries.size(); ++k) {
        const auto& e12 = p12.entries[k];
        const auto& e21 = p21.entries[k];
        int g1 = static_cast<int>(e12.row / d), g2 = static_cast<int>(e12.row % d);
        int h1 = static_cast<int>(e12.col / d), h2 = static_cast<int>(e12.col % d);
        bool flux_equal = group.multiply(g1, g2) == group.multiply(h1, h2);
        cplx factor = flux_equal ? omega_bar() : omega();
        rep.max_rule_residual =
            std::max(rep.max_rule_residual, std::abs(e21.val - factor * e12.val));
    }
    rep.pass = rep.max_rule_residual < tolerance;
    return rep;
}

struct FusionReport {
    // Residuals of A^A(v)(F^G_rho1)^2|gs> = |gs>,
    //              A^B(v)(F^G_rho1)^2|gs> = F^B_rho1|gs>,
    //              A^G(v)(F^G_rho1)^2|gs> = F^G_rho1|gs>.
    std::array<double, 3> residuals{};
    double max_residual = 0;
    bool pass = false;
};

inline FusionReport fusion_check(const GroundState& gs, const GroupTable& group,
                                 const ProtocolGeometry& geo = {},
                                 double tolerance = kDefaultTolerance) {
    ProtocolOperators ops = ProtocolOperators::build(gs.layout, group, geo);
    // The B string along rho1 is the B triangle on rho1's direct link.
    LinearOperator b_string = embed(abelian_string('B', '-', group),
                                    {gs.layout.site_of_link(geo.link_a)}, gs.layout.num_qudits());
    StateVector ff = apply(ops.f1, apply(ops.f1, gs.state));
    FusionReport rep;
    rep.residuals[0] = distance(apply(ops.charge[0], ff), gs.state);
    rep.residuals[1] = distance(apply(ops.charge[1], ff), apply(b_string, gs.state));
    rep.residuals[2] = distance(apply(ops.charge[2], ff), apply(ops.f1, gs.state));
    rep.max_residual = std::max({rep.residuals[0], rep.residuals[1], rep.residuals[2]});
    rep.pass = rep.max_residual < tolerance;
    return rep;
}

struct FResult {
    Mat3d f_squared{};                   // conj(R^Gj_G) * f_ij, real within tolerance
    std::array<std::array<cplx, 3>, 3> raw_coefficients{};  // f_ij
    std::array<cplx, 3> phases{};        // R^GA_G, R^GB_G, R^GG_G
    double max_imag_residue = 0;
};

inline std::array<cplx, 3> f_braiding_phases() {
    return {cplx(1, 0), cplx(1, 0), omega()};
}

/// Builds |psi1(i)> = A^G(v) F2 A^i(v) F2 F1 |gs> and
/// |psi2(j)> = A^G(v) F1 A^j(v) F2 F2 |gs>, then
/// f_ij = <psi2(j)|psi1(i)> / <psi2(j)|psi2(j)> and
/// F^i_j squared = conj(R^Gj_G) f_ij.
inline FResult extract_f_squared(const GroundState& gs, const GroupTable& group,
                                 const ProtocolGeometry& geo = {}) {
    ProtocolOperators ops = ProtocolOperators::build(gs.layout, group, geo);
    const LinearOperator& ag = ops.charge[2];
    StateVector f21 = apply(ops.f2, apply(ops.f1, gs.state));
    StateVector f22 = apply(ops.f2, apply(ops.f2, gs.state));
    std::array<StateVector, 3> psi1, psi2;
    for (int i = 0; i < 3; ++i) {
        psi1[i] = apply(ag, apply(ops.f2, apply(ops.charge[i], f21)));
        psi2[i] = apply(ag, apply(ops.f1, apply(ops.charge[i], f22)));
    }
    FResult res;
    res.phases = f_braiding_phases();
    for (int j = 0; j < 3; ++j) {
        double denom = inner(psi2[j], psi2[j]).real();
        if (denom < 1e-12) {
            throw std::runtime_error("psi2 state vanished; wrong vertex/ribbon geometry");
        }
        for (int i = 0; i < 3; ++i) {
            cplx f = inner(psi2[j], psi1[i]) / denom;
            res.raw_coefficients[i][j] = f;
            cplx value = std::conj(res.phases[j]) * f;
            res.f_squared[i][j] = value.real();
            res.max_imag_residue = std::max(res.max_imag_residue, std::abs(value.imag()));
        }
    }
    return res;
}

struct SignFamilyResult {
    std::vector<Mat3d> candidates;    // real symmetric, entrywise sqrt of F squared
    std::vector<Mat3c> commutators;   // [R, candidate]
    std::vector<double> commutator_norms;
    double min_commutator_norm = 0;
};

/// All real symmetric unitary matrices whose entrywise square is the given
/// matrix, with the square roots snapped to the exact value set
/// {0, 1/2, 1/sqrt(2)} before sign assignment.
inline SignFamilyResult enumerate_sign_family(const Mat3d& f_squared,
                                              const std::array<cplx, 3>& r_diagonal,
                                              double tolerance = kDefaultTolerance) {
    Mat3d root{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double f = f_squared[i][j];
            if (f < -tolerance) {
                throw std::invalid_argument("squared fusion matrix has a negative entry");
            }
            if (std::abs(f) < tolerance) {
                root[i][j] = 0;
            } else if (std::abs(f - 0.25) < tolerance) {
                root[i][j] = 0.5;
            } else if (std::abs(f - 0.5) < tolerance) {
                root[i][j] = std::sqrt(0.5);
            } else {
                root[i][j] = std::sqrt(f);
            }
        }
    }
    // Sign slots: upper triangle (including diagonal) of nonzero roots.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            if (root[i][j] != 0) {
                slots.emplace_back(i, j);
            }
        }
    }
    SignFamilyResult res;
    const Mat3c r = diagonal_matrix(r_diagonal);
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        Mat3d cand = root;
        for (size_t s = 0; s < slots.size(); ++s) {
            auto [i, j] = slots[s];
            if (mask & (1u << s)) {
                cand[i][j] = -cand[i][j];
            }
            cand[j][i] = cand[i][j];
        }
        // Unitarity: rows orthonormal (real symmetric candidate).
        double residual = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                double dot = 0;
                for (int k = 0; k < 3; ++k) {
                    dot += cand[i][k] * cand[j][k];
                }
                residual = std::max(residual, std::abs(dot - (i == j ? 1.0 : 0.0)));
            }
        }
        if (residual < tolerance) {
            res.candidates.push_back(cand);
            Mat3c fc = to_complex(cand);
            Mat3c comm{};
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    cplx rf(0, 0), fr(0, 0);
                    for (int k = 0; k < 3; ++k) {
                        rf += r[i][k] * fc[k][j];
                        fr += fc[i][k] * r[k][j];
                    }
                    comm[i][j] = rf - fr;
                }
            }
            res.commutators.push_back(comm);
            res.commutator_norms.push_back(commutator_norm(r, fc));
        }
    }
    res.min_commutator_norm = res.commutator_norms.empty()
                                  ? 0
                                  : *std::min_element(res.commutator_norms.begin(),
                                                      res.commutator_norms.end());
    return res;
}

/// 6 <xi| O |xi> with |xi> = (1/sqrt(216)) sum_{g3,g4} |g3,g4>, which equals
/// (1/36) times the sum of every entry of O.  Note |xi| = 1/sqrt(6): the
/// state is kept in this unnormalized block convention.
inline cplx two_qudit_overlap(const LinearOperator& op) {
    if (op.num_qudits != 2) {
        throw std::invalid_argument("two_qudit_overlap requires a two-qudit operator");
    }
    cplx sum(0, 0);
    for (const auto& e : op.entries) {
        sum += e.val;
    }
    return sum / cplx(static_cast<double>(op.dim) * op.dim, 0);
}

/// Same value evaluated literally as 6 <xi|O|xi>.
inline cplx two_qudit_overlap_via_state(const LinearOperator& op) {
    if (op.num_qudits != 2) {
        throw std::invalid_argument("two_qudit_overlap requires a two-qudit operator");
    }
    StateVector xi(2, op.dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(op.dim) * op.dim * op.dim);
    for (cplx& a : xi.amps) {
        a = amp;
    }
    return 6.0 * inner(xi, apply(op, xi));
}

/// Two-qudit vertex charge projector acting per A(v3) = L^g_+ (x) L^g_-.
inline LinearOperator dense_charge_projector(char tag, const GroupTable& group) {
    const AnyonLabel& label = anyon(tag);
    if (!label.in_submodel) {
        throw std::invalid_argument(std::string("no projector for anyon ") + tag);
    }
    LinearOperator acc = LinearOperator::zero(2, group.order());
    for (int g = 0; g < group.order(); ++g) {
        double chi = charge_character(label, g);
        if (chi != 0) {
            acc = add(acc, scale(cplx(chi, 0),
                                 tensor(single_qudit_operator(QuditOp::Lplus, g, group),
                                        single_qudit_operator(QuditOp::Lminus, g, group))));
        }
    }
    return scale(cplx(label.quantum_dimension / 6.0, 0), acc);
}

/// Runs both extraction protocols with every overlap evaluated through
/// two_qudit_overlap on 36-dimensional operators instead of the full
/// lattice ground state.
inline std::pair<RResult, FResult> run_dense_protocols(const GroupTable& group) {
    auto [f1, f2] = builtin_G_ribbons(group);
    std::array<LinearOperator, 3> charge = {dense_charge_projector('A', group),
                                            dense_charge_projector('B', group),
                                            dense_charge_projector('G', group)};
    LinearOperator p21 = compose(f2, f1);

    RResult r;
    r.normalizations = r_state_normalizations();
    for (int i = 0; i < 3; ++i) {
        r.raw_overlaps[i] = two_qudit_overlap(compose(p21, compose(charge[i], p21)));
        double n = r.normalizations[i];
        r.diagonal[i] = n * n * r.raw_overlaps[i];
        cplx norm12 = two_qudit_overlap(compose(p21, compose(charge[i], compose(f1, f2))));
        cplx norm21 = two_qudit_overlap(
            compose(compose(f1, f2), compose(charge[i], p21)));
        r.phi12_norm[i] = n * std::sqrt(std::abs(norm12.real()));
        r.phi21_norm[i] = n * std::sqrt(std::abs(norm21.real()));
    }

    FResult f;
    f.phases = f_braiding_phases();
    const LinearOperator& ag = charge[2];
    LinearOperator f21 = compose(f2, f1);
    LinearOperator f22 = compose(f2, f2);
    for (int j = 0; j < 3; ++j) {
        // psi2(j) = A^G F1 A^j F2 F2 |gs>
        LinearOperator psi2 = compose(ag, compose(f1, compose(charge[j], f22)));
        cplx denom = two_qudit_overlap(compose(adjoint(psi2), psi2));
        if (std::abs(denom) < 1e-12) {
            throw std::runtime_error("psi2 state vanished in the dense protocol");
        }
        for (int i = 0; i < 3; ++i) {
            LinearOperator psi1 = compose(ag, compose(f2, compose(charge[i], f21)));
            cplx num = two_qudit_overlap(compose(adjoint(psi2), psi1));
            cplx fij = num / denom;
            f.raw_coefficients[i][j] = fij;
            cplx value = std::conj(f.phases[j]) * fij;
            f.f_squared[i][j] = value.real();
            f.max_imag_residue = std::max(f.max_imag_residue, std::abs(value.imag()));
        }
    }
    return {r, f};
}

}  // namespace ds3
