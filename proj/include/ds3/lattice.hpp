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

#include <map>
#include <string>
#include <vector>

#include "ds3/linear_operator.hpp"

namespace ds3 {

/// Oriented open lattice described purely by incidence data.
///
/// Signs are stored explicitly per incidence rather than inferred from
/// geometry: a vertex incidence carries '+' when the link is oriented into
/// the vertex (L+) and '-' when oriented out of it (L-); a plaquette
/// incidence carries '+' when the link runs clockwise around the plaquette
/// (T+) and '-' otherwise (T-).  Plaquette incidence lists are ordered: the
/// flux condition multiplies the letters in listing order.
struct LatticeLayout {
    struct Incidence {
        int link;
        char sign;  // '+' or '-'
    };
    struct Vertex {
        int id;
        std::vector<Incidence> links;
    };
    struct Plaquette {
        int id;
        std::vector<Incidence> links;
    };

    std::string name;
    std::vector<int> link_ids;  // qudit i (1-based) carries link_ids[i-1]
    std::vector<Vertex> vertices;
    std::vector<Plaquette> plaquettes;

    int num_qudits() const { return static_cast<int>(link_ids.size()); }

    /// 1-based qudit position of a link (qudit 1 is most significant).
    int site_of_link(int link_id) const {
        for (size_t i = 0; i < link_ids.size(); ++i) {
            if (link_ids[i] == link_id) {
                return static_cast<int>(i) + 1;
            }
        }
        throw std::invalid_argument("unknown link id: " + std::to_string(link_id));
    }

    const Vertex& vertex(int id) const {
        for (const auto& v : vertices) {
            if (v.id == id) {
                return v;
            }
        }
        throw std::invalid_argument("unknown vertex id: " + std::to_string(id));
    }

    const Plaquette& plaquette(int id) const {
        for (const auto& p : plaquettes) {
            if (p.id == id) {
                return p;
            }
        }
        throw std::invalid_argument("unknown plaquette id: " + std::to_string(id));
    }

    void validate() const {
        std::map<int, int> vertex_uses, plaquette_uses;
        auto check_sign = [](char s) {
            if (s != '+' && s != '-') {
                throw std::invalid_argument("incidence sign must be '+' or '-'");
            }
        };
        for (const auto& v : vertices) {
            for (const auto& inc : v.links) {
                site_of_link(inc.link);
                check_sign(inc.sign);
                ++vertex_uses[inc.link];
            }
        }
        for (const auto& p : plaquettes) {
            for (const auto& inc : p.links) {
                site_of_link(inc.link);
                check_sign(inc.sign);
                ++plaquette_uses[inc.link];
            }
        }
        for (const auto& [link, uses] : vertex_uses) {
            if (uses > 2) {
                throw std::invalid_argument("link " + std::to_string(link) +
                                            " appears in more than two vertices");
            }
        }
        for (const auto& [link, uses] : plaquette_uses) {
            if (uses > 2) {
                throw std::invalid_argument("link " + std::to_string(link) +
                                            " appears in more than two plaquettes");
            }
        }
    }

    /// Single square plaquette, four links.  Horizontal links point right,
    /// vertical links point up; link 3 runs into vertex 3 and link 4 out of
    /// it, so A(v3) acts as L+ on qudit 3 and L- on qudit 4.
    static LatticeLayout plaquette1() {
        LatticeLayout lat;
        lat.name = "plaquette1";
        lat.link_ids = {1, 2, 3, 4};
        lat.vertices = {
            {1, {{1, '-'}, {2, '+'}}},
            {2, {{1, '+'}, {4, '+'}}},
            {3, {{3, '+'}, {4, '-'}}},
            {4, {{2, '-'}, {3, '-'}}},
        };
        lat.plaquettes = {
            {1, {{2, '+'}, {3, '-'}, {4, '-'}, {1, '+'}}},
        };
        return lat;
    }

    /// Two adjacent square plaquettes sharing link 4; seven links, six
    /// vertices.  The left square matches plaquette1.
    static LatticeLayout plaquette2() {
        LatticeLayout lat;
        lat.name = "plaquette2";
        lat.link_ids = {1, 2, 3, 4, 5, 6, 7};
        lat.vertices = {
            {1, {{1, '-'}, {2, '+'}}},
            {2, {{1, '+'}, {4, '+'}, {5, '-'}}},
            {3, {{3, '+'}, {4, '-'}, {7, '-'}}},
            {4, {{2, '-'}, {3, '-'}}},
            {5, {{5, '+'}, {6, '+'}}},
            {6, {{6, '-'}, {7, '+'}}},
        };
        lat.plaquettes = {
            {1, {{2, '+'}, {3, '-'}, {4, '-'}, {1, '+'}}},
            {2, {{4, '+'}, {7, '-'}, {6, '-'}, {5, '+'}}},
        };
        return lat;
    }

    static LatticeLayout builtin(const std::string& which) {
        if (which == "plaquette1") {
            return plaquette1();
        }
        if (which == "plaquette2") {
            return plaquette2();
        }
        throw std::invalid_argument("unknown builtin layout: " + which);
    }
};

/// A^g(v): tensor of L^g over the vertex's links with the stored signs.
inline LinearOperator vertex_operator(const LatticeLayout& lat, const GroupTable& group,
                                      int vertex_id, int g) {
    const auto& v = lat.vertex(vertex_id);
    LinearOperator local = LinearOperator::identity(0, group.order());
    std::vector<int> sites;
    for (const auto& inc : v.links) {
        QuditOp kind = inc.sign == '+' ? QuditOp::Lplus : QuditOp::Lminus;
        local = tensor(local, single_qudit_operator(kind, g, group));
        sites.push_back(lat.site_of_link(inc.link));
    }
    return embed(local, sites, lat.num_qudits());
}

/// A(v) = (1/|G|) sum_g A^g(v); group-average projector.
inline LinearOperator vertex_projector(const LatticeLayout& lat, const GroupTable& group,
                                       int vertex_id) {
    std::vector<LinearOperator> terms;
    terms.reserve(group.order());
    for (int g = 0; g < group.order(); ++g) {
        terms.push_back(vertex_operator(lat, group, vertex_id, g));
    }
    return scale(cplx(1.0 / group.order(), 0), sum(terms));
}

/// B^h(p): projector onto configurations whose ordered flux word equals h.
/// A T+ incidence contributes the link value itself to the word, a T-
/// incidence contributes its inverse.
inline LinearOperator plaquette_operator(const LatticeLayout& lat, const GroupTable& group,
                                         int plaquette_id, int h) {
    const auto& p = lat.plaquette(plaquette_id);
    const int k = static_cast<int>(p.links.size());
    const int d = group.order();
    if (h < 0 || h >= d) {
        throw std::out_of_range("group element index out of range");
    }
    LinearOperator local(k, d);
    const int64_t configs = pow_i64(d, k);
    for (int64_t idx = 0; idx < configs; ++idx) {
        auto z = basis_tuple(idx, k, d);
        int word = group.identity();
        for (int i = 0; i < k; ++i) {
            int letter = p.links[i].sign == '+' ? z[i] : group.inverse(z[i]);
            word = group.multiply(word, letter);
        }
        if (word == h) {
            local.entries.push_back({idx, idx, cplx(1, 0)});
        }
    }
    local.canonicalize();
    std::vector<int> sites;
    for (const auto& inc : p.links) {
        sites.push_back(lat.site_of_link(inc.link));
    }
    return embed(local, sites, lat.num_qudits());
}

/// The vertex at which a plaquette's flux word is based: the common vertex
/// of the first and last links in its incidence list.  A^g there conjugates
/// the flux, A^g B^h = B^{g h g^-1} A^g, so only B^e commutes with it; at
/// every other corner the word telescopes and A^g commutes with every B^h.
inline int flux_base_vertex(const LatticeLayout& lat, int plaquette_id) {
    const auto& p = lat.plaquette(plaquette_id);
    if (p.links.size() < 2) {
        throw std::invalid_argument("plaquette with fewer than two links has no base vertex");
    }
    const int first = p.links.front().link;
    const int last = p.links.back().link;
    for (const auto& v : lat.vertices) {
        bool has_first = false, has_last = false;
        for (const auto& inc : v.links) {
            has_first = has_first || inc.link == first;
            has_last = has_last || inc.link == last;
        }
        if (has_first && has_last) {
            return v.id;
        }
    }
    throw std::invalid_argument("plaquette has no base vertex");
}

/// H = -sum_v A(v) - sum_p B^e(p).
inline LinearOperator hamiltonian(const LatticeLayout& lat, const GroupTable& group) {
    std::vector<LinearOperator> terms;
    for (const auto& v : lat.vertices) {
        terms.push_back(scale(cplx(-1, 0), vertex_projector(lat, group, v.id)));
    }
    for (const auto& p : lat.plaquettes) {
        terms.push_back(
            scale(cplx(-1, 0), plaquette_operator(lat, group, p.id, group.identity())));
    }
    return sum(terms);
}

struct GroundState {
    LatticeLayout layout;
    StateVector state;
    double energy = 0;
    double max_stabilizer_residual = 0;
};

namespace detail {

inline StateVector apply_vertex_average(const LatticeLayout& lat, const GroupTable& group,
                                        int vertex_id, const StateVector& s) {
    StateVector acc(s.num_qudits, s.dim);
    for (int g = 0; g < group.order(); ++g) {
        acc = add(acc, apply(vertex_operator(lat, group, vertex_id, g), s));
    }
    return scale(cplx(1.0 / group.order(), 0), acc);
}

inline StateVector project_onto_ground_space(const LatticeLayout& lat, const GroupTable& group,
                                             const StateVector& start) {
    StateVector s = start;
    for (const auto& v : lat.vertices) {
        s = apply_vertex_average(lat, group, v.id, s);
    }
    for (const auto& p : lat.plaquettes) {
        s = apply(plaquette_operator(lat, group, p.id, group.identity()), s);
    }
    return s;
}

}  // namespace detail

/// Unique simultaneous +1 eigenstate of all A(v) and B^e(p), built by
/// applying the product of stabilizer projectors to a reference basis state
/// and normalizing.  Falls back to the next basis state when the projection
/// vanishes, and reports degeneracy if a second reference projects onto an
/// independent ray.
inline GroundState ground_state(const LatticeLayout& lat, const GroupTable& group) {
    const int n = lat.num_qudits();
    const int64_t size = pow_i64(group.order(), n);
    StateVector projected;
    int64_t start = 0;
    for (; start < size; ++start) {
        projected = detail::project_onto_ground_space(
            lat, group, StateVector::basis_state(n, group.order(), start));
        if (projected.norm() > 1e-12) {
            break;
        }
    }
    if (start == size) {
        throw std::runtime_error("stabilizer projectors annihilate every basis state");
    }
    projected.normalize();
    for (int64_t probe = start + 1; probe < size; ++probe) {
        StateVector other = detail::project_onto_ground_space(
            lat, group, StateVector::basis_state(n, group.order(), probe));
        if (other.norm() <= 1e-12) {
            continue;
        }
        other.normalize();
        if (std::abs(std::abs(inner(projected, other)) - 1.0) > kDefaultTolerance) {
            throw std::runtime_error("degenerate ground space");
        }
        break;
    }

    GroundState gs;
    gs.layout = lat;
    gs.state = std::move(projected);
    double energy = 0;
    double max_res = 0;
    auto account = [&](const StateVector& ps) {
        energy -= inner(gs.state, ps).real();
        max_res = std::max(max_res, distance(ps, gs.state));
    };
    for (const auto& v : lat.vertices) {
        account(detail::apply_vertex_average(lat, group, v.id, gs.state));
    }
    for (const auto& p : lat.plaquettes) {
        account(apply(plaquette_operator(lat, group, p.id, group.identity()), gs.state));
    }
    gs.energy = energy;
    gs.max_stabilizer_residual = max_res;
    return gs;
}

/// Four-body (two-body on boundary vertices) charge measurement projector
/// for a sub-model anyon:
///   A^A(v) = (1/6)(A^e + A^c + A^c2 + A^t + A^tc + A^tc2),
///   A^B(v) = (1/6)(A^e + A^c + A^c2 - A^t - A^tc - A^tc2),
///   A^G(v) = (1/3)(2 A^e - A^c - A^c2).
inline LinearOperator anyon_projector(const LatticeLayout& lat, const GroupTable& group,
                                      int vertex_id, char tag) {
    const AnyonLabel& label = anyon(tag);
    if (!label.in_submodel) {
        throw std::invalid_argument(std::string("no projector for anyon ") + tag);
    }
    std::vector<LinearOperator> terms;
    for (int g = 0; g < group.order(); ++g) {
        double chi = charge_character(label, g);
        if (chi != 0) {
            terms.push_back(scale(cplx(chi, 0), vertex_operator(lat, group, vertex_id, g)));
        }
    }
    return scale(cplx(label.quantum_dimension / 6.0, 0), sum(terms));
}

}  // namespace ds3
