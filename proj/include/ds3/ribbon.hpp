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

#include <utility>

#include "ds3/linear_operator.hpp"

namespace ds3 {

/// One triangle of a ribbon: a dual triangle acts on its link with L
/// operators, a direct triangle with T operators.  The sign picks the
/// L+/L- (T+/T-) variant per the lattice orientation conventions.
struct Triangle {
    enum class Kind { Dual, Direct };
    Kind kind;
    int site;   // link id
    char sign;  // '+' or '-'
};

struct RibbonSpec {
    std::vector<Triangle> triangles;

    /// Link ids in triangle order.  Distinctness is the code-level stand-in
    /// for the no-self-crossing requirement.
    std::vector<int> sites() const {
        std::vector<int> out;
        for (const auto& t : triangles) {
            out.push_back(t.site);
        }
        return out;
    }

    void validate() const {
        auto s = sites();
        for (size_t i = 0; i < s.size(); ++i) {
            for (size_t j = i + 1; j < s.size(); ++j) {
                if (s[i] == s[j]) {
                    throw std::invalid_argument("ribbon crosses itself at link " +
                                                std::to_string(s[i]));
                }
            }
        }
        for (const auto& t : triangles) {
            if (t.sign != '+' && t.sign != '-') {
                throw std::invalid_argument("triangle sign must be '+' or '-'");
            }
        }
    }

    /// The two crossed ribbons acting on links (a, b):
    /// rho1 = direct triangle on a, dual triangle on b (both minus),
    /// rho2 = dual triangle on a (plus), direct triangle on b (minus).
    static RibbonSpec rho1(int link_a = 3, int link_b = 4) {
        return RibbonSpec{{{Triangle::Kind::Direct, link_a, '-'},
                           {Triangle::Kind::Dual, link_b, '-'}}};
    }
    static RibbonSpec rho2(int link_a = 3, int link_b = 4) {
        return RibbonSpec{{{Triangle::Kind::Dual, link_a, '+'},
                           {Triangle::Kind::Direct, link_b, '-'}}};
    }
};

/// F^{h,g} for a single triangle:
///   dual:    F^{h,g} = d_{e,g} L^h,
///   direct:  F^{h,g} = T^g   (independent of h).
inline LinearOperator triangle_ribbon(Triangle::Kind kind, int h, int g, char sign,
                                      const GroupTable& group) {
    const int d = group.order();
    if (kind == Triangle::Kind::Dual) {
        if (g != group.identity()) {
            return LinearOperator::zero(1, d);
        }
        return single_qudit_operator(sign == '+' ? QuditOp::Lplus : QuditOp::Lminus, h, group);
    }
    return single_qudit_operator(sign == '+' ? QuditOp::Tplus : QuditOp::Tminus, g, group);
}

/// The full set {F^{h,g}} over a ribbon, closed under gluing.
struct RibbonOperatorFamily {
    RibbonSpec ribbon;
    int group_order = 6;
    std::vector<LinearOperator> ops;  // indexed h * order + g, on sites().size() qudits

    const LinearOperator& op(int h, int g) const {
        if (h < 0 || h >= group_order || g < 0 || g >= group_order) {
            throw std::out_of_range("group element index out of range");
        }
        return ops[static_cast<size_t>(h) * group_order + g];
    }
};

inline RibbonOperatorFamily triangle_family(const Triangle& tri, const GroupTable& group) {
    RibbonOperatorFamily fam;
    fam.ribbon = RibbonSpec{{tri}};
    fam.group_order = group.order();
    fam.ops.reserve(static_cast<size_t>(group.order()) * group.order());
    for (int h = 0; h < group.order(); ++h) {
        for (int g = 0; g < group.order(); ++g) {
            fam.ops.push_back(triangle_ribbon(tri.kind, h, g, tri.sign, group));
        }
    }
    return fam;
}

/// Gluing recursion F^{h,g} = sum_k F^{h,k}_{rho1} (x) F^{k^-1 h k, k^-1 g}_{rho2}.
/// The first family supplies the more significant qudits of the result.
inline RibbonOperatorFamily glue(const RibbonOperatorFamily& f1, const RibbonOperatorFamily& f2,
                                 const GroupTable& group) {
    for (int a : f1.ribbon.sites()) {
        for (int b : f2.ribbon.sites()) {
            if (a == b) {
                throw std::invalid_argument("incompatible ribbons: overlapping support");
            }
        }
    }
    const int d = group.order();
    RibbonOperatorFamily out;
    out.ribbon.triangles = f1.ribbon.triangles;
    out.ribbon.triangles.insert(out.ribbon.triangles.end(), f2.ribbon.triangles.begin(),
                                f2.ribbon.triangles.end());
    out.group_order = d;
    const int n = static_cast<int>(out.ribbon.triangles.size() ? out.ribbon.sites().size() : 0);
    for (int h = 0; h < d; ++h) {
        for (int g = 0; g < d; ++g) {
            LinearOperator acc = LinearOperator::zero(n, d);
            for (int k = 0; k < d; ++k) {
                int kb = group.inverse(k);
                const LinearOperator& left = f1.op(h, k);
                const LinearOperator& right =
                    f2.op(group.multiply(group.multiply(kb, h), k), group.multiply(kb, g));
                if (left.entries.empty() || right.entries.empty()) {
                    continue;
                }
                acc = add(acc, tensor(left, right));
            }
            out.ops.push_back(std::move(acc));
        }
    }
    return out;
}

inline RibbonOperatorFamily ribbon_family(const RibbonSpec& spec, const GroupTable& group) {
    spec.validate();
    if (spec.triangles.empty()) {
        throw std::invalid_argument("empty ribbon");
    }
    RibbonOperatorFamily fam = triangle_family(spec.triangles[0], group);
    for (size_t i = 1; i < spec.triangles.size(); ++i) {
        fam = glue(fam, triangle_family(spec.triangles[i], group), group);
    }
    return fam;
}

/// Abelian anyon ribbon F^{chi,c} = sum_g conj(chi(g)) F^{c^-1, g}.
inline LinearOperator abelian_ribbon(const AnyonLabel& label, int c,
                                     const RibbonOperatorFamily& fam, const GroupTable& group) {
    if (!label.in_submodel || label.tag == 'G') {
        throw std::invalid_argument(std::string("abelian_ribbon requires a one-dimensional "
                                                "character, got anyon ") +
                                    label.tag);
    }
    const int n = static_cast<int>(fam.ribbon.sites().size());
    LinearOperator acc = LinearOperator::zero(n, group.order());
    const int cb = group.inverse(c);
    for (int g = 0; g < group.order(); ++g) {
        cplx coeff = std::conj(character(label, g));
        if (coeff != cplx(0, 0)) {
            acc = add(acc, scale(coeff, fam.op(cb, g)));
        }
    }
    return acc;
}

/// Single-qudit string operator of an Abelian label on a direct triangle,
/// F^chi = sum_h conj(chi(h)) T^h; the identity for A, diag(1,1,1,-1,-1,-1)
/// for B in the canonical element order.
inline LinearOperator abelian_string(char tag, char sign, const GroupTable& group) {
    Triangle tri{Triangle::Kind::Direct, 0, sign};
    return abelian_ribbon(anyon(tag), group.identity(), triangle_family(tri, group), group);
}

/// Non-Abelian basis transformation
///   F^{RC;uv} = (n_R/|N_C|) sum_{n in N_C} conj(Gamma_R^{j,j'}(n))
///               F^{c_i^-1, q_i n q_{i'}^-1},
/// with u = (i, j), v = (i', j'), coset representatives q of G/N_C in
/// ascending element order (q_1 = e, q_2 = t for the G anyon), and
/// c_i = q_i c q_i^-1.  Only one-dimensional normalizer irreps are stored,
/// so j = j' = 0.
inline LinearOperator nonabelian_ribbon(const AnyonLabel& label, const RibbonOperatorFamily& fam,
                                        const GroupTable& group, std::pair<int, int> u,
                                        std::pair<int, int> v) {
    if (!label.in_submodel) {
        throw std::invalid_argument(std::string("no irrep data stored for anyon ") + label.tag);
    }
    if (u.second != 0 || v.second != 0) {
        throw std::out_of_range("irrep matrix index out of range for a 1-dimensional irrep");
    }
    const std::vector<int> normalizer = group.normalizer(label.flux_representative);
    const std::vector<int> reps = group.coset_representatives(normalizer);
    if (u.first < 0 || u.first >= static_cast<int>(reps.size()) || v.first < 0 ||
        v.first >= static_cast<int>(reps.size())) {
        throw std::out_of_range("coset index out of range");
    }
    const int qi = reps[u.first];
    const int qip = reps[v.first];
    const int ci = group.multiply(group.multiply(qi, label.flux_representative),
                                  group.inverse(qi));
    const int n_qudits = static_cast<int>(fam.ribbon.sites().size());
    LinearOperator acc = LinearOperator::zero(n_qudits, group.order());
    for (int n : normalizer) {
        cplx coeff = std::conj(character(label, n));
        if (coeff == cplx(0, 0)) {
            continue;
        }
        int arg = group.multiply(group.multiply(qi, n), group.inverse(qip));
        acc = add(acc, scale(coeff, fam.op(group.inverse(ci), arg)));
    }
    return scale(cplx(1.0 / static_cast<double>(normalizer.size()), 0), acc);
}

/// Trace-out of the u, v degrees of freedom: |N_C| * sum_i F^{(i,0),(i,0)}.
/// With the conventions above this reproduces the hard-coded two-qudit G
/// ribbons exactly and degenerates to the Abelian construction for A and B.
inline LinearOperator nonabelian_ribbon_traced(const AnyonLabel& label,
                                               const RibbonOperatorFamily& fam,
                                               const GroupTable& group) {
    const std::vector<int> normalizer = group.normalizer(label.flux_representative);
    const std::vector<int> reps = group.coset_representatives(normalizer);
    const int n_qudits = static_cast<int>(fam.ribbon.sites().size());
    LinearOperator acc = LinearOperator::zero(n_qudits, group.order());
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
        acc = add(acc, nonabelian_ribbon(label, fam, group, {i, 0}, {i, 0}));
    }
    return scale(cplx(static_cast<double>(normalizer.size()), 0), acc);
}

/// The two-qudit G ribbons, hard-coded:
///   F^G_rho1 = (T^e_- + w T^c_- + w* T^c2_-) (x) L^c_-
///            + (T^e_- + w* T^c_- + w T^c2_-) (x) L^c2_-,
///   F^G_rho2 = L^c_+ (x) (T^e_- + w T^c_- + w* T^c2_-)
///            + L^c2_+ (x) (T^e_- + w* T^c_- + w T^c2_-).
/// Both are Hermitian but not unitary.
inline std::pair<LinearOperator, LinearOperator> builtin_G_ribbons(const GroupTable& group) {
    const cplx w = omega();
    const cplx wb = omega_bar();
    const int c = group.element_by_name("c");
    const int c2 = group.element_by_name("c2");
    const int e = group.identity();
    auto tminus = [&](int h) { return single_qudit_operator(QuditOp::Tminus, h, group); };
    auto tcombo = [&](cplx pc, cplx pc2) {
        return add(tminus(e), add(scale(pc, tminus(c)), scale(pc2, tminus(c2))));
    };
    LinearOperator rho1 =
        add(tensor(tcombo(w, wb), single_qudit_operator(QuditOp::Lminus, c, group)),
            tensor(tcombo(wb, w), single_qudit_operator(QuditOp::Lminus, c2, group)));
    LinearOperator rho2 =
        add(tensor(single_qudit_operator(QuditOp::Lplus, c, group), tcombo(w, wb)),
            tensor(single_qudit_operator(QuditOp::Lplus, c2, group), tcombo(wb, w)));
    return {rho1, rho2};
}

}  // namespace ds3
