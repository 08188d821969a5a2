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

#include <fstream>

#include <json.hpp>

#include "ds3/report.hpp"

namespace ds3 {

using ordered_json = nlohmann::ordered_json;

// Complex numbers serialize as [re, im]; sparse operators as lists of
// [row, col, re, im]; states as flat amplitude arrays with "num_qudits".

inline ordered_json to_json(const cplx& z) { return ordered_json::array({z.real(), z.imag()}); }

// Group data serializes by element name ("e", "c", "c2", ...).
inline ordered_json to_json(const GroupTable& group) {
    ordered_json elements = ordered_json::array();
    for (int a = 0; a < group.order(); ++a) {
        elements.push_back(group.name(a));
    }
    ordered_json classes = ordered_json::array();
    for (const auto& cls : group.conjugacy_classes()) {
        ordered_json names = ordered_json::array();
        for (int a : cls) {
            names.push_back(group.name(a));
        }
        classes.push_back(names);
    }
    return ordered_json{
        {"order", group.order()}, {"elements", elements}, {"conjugacy_classes", classes}};
}

inline ordered_json to_json(const StateVector& s) {
    ordered_json amps = ordered_json::array();
    for (const cplx& a : s.amps) {
        amps.push_back(to_json(a));
    }
    return ordered_json{{"num_qudits", s.num_qudits}, {"dim", s.dim}, {"amplitudes", amps}};
}

inline ordered_json to_json(const LinearOperator& op) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : op.entries) {
        entries.push_back(ordered_json::array({e.row, e.col, e.val.real(), e.val.imag()}));
    }
    return ordered_json{{"num_qudits", op.num_qudits}, {"dim", op.dim}, {"entries", entries}};
}

inline StateVector state_from_json(const nlohmann::json& j) {
    StateVector s(j.at("num_qudits").get<int>(), j.value("dim", 6));
    const auto& amps = j.at("amplitudes");
    if (amps.size() != s.amps.size()) {
        throw std::invalid_argument("state amplitude count does not match num_qudits");
    }
    for (size_t i = 0; i < s.amps.size(); ++i) {
        s.amps[i] = cplx(amps[i].at(0).get<double>(), amps[i].at(1).get<double>());
    }
    return s;
}

inline LinearOperator operator_from_json(const nlohmann::json& j) {
    LinearOperator op(j.at("num_qudits").get<int>(), j.value("dim", 6));
    for (const auto& e : j.at("entries")) {
        op.entries.push_back({e.at(0).get<int64_t>(), e.at(1).get<int64_t>(),
                              cplx(e.at(2).get<double>(), e.at(3).get<double>())});
    }
    op.canonicalize();
    return op;
}

// Layout files:
// {"links":[{"id":int}],
//  "vertices":[{"id":int,"links":[[id,"L+"|"L-"],...]}],
//  "plaquettes":[{"id":int,"links":[[id,"T+"|"T-"],...]}]}

inline LatticeLayout layout_from_json(const nlohmann::json& j) {
    LatticeLayout lat;
    lat.name = j.value("name", "custom");
    for (const auto& link : j.at("links")) {
        lat.link_ids.push_back(link.at("id").get<int>());
    }
    auto parse_sign = [](const std::string& s, char expect_kind) {
        if (s.size() != 2 || (s[0] != 'L' && s[0] != 'T') || (s[1] != '+' && s[1] != '-')) {
            throw std::invalid_argument("incidence sign must be L+/L-/T+/T-, got " + s);
        }
        if (s[0] != expect_kind) {
            throw std::invalid_argument("wrong incidence kind: " + s);
        }
        return s[1];
    };
    for (const auto& v : j.at("vertices")) {
        LatticeLayout::Vertex vertex;
        vertex.id = v.at("id").get<int>();
        for (const auto& inc : v.at("links")) {
            vertex.links.push_back(
                {inc.at(0).get<int>(), parse_sign(inc.at(1).get<std::string>(), 'L')});
        }
        lat.vertices.push_back(std::move(vertex));
    }
    for (const auto& p : j.at("plaquettes")) {
        LatticeLayout::Plaquette plaq;
        plaq.id = p.at("id").get<int>();
        for (const auto& inc : p.at("links")) {
            plaq.links.push_back(
                {inc.at(0).get<int>(), parse_sign(inc.at(1).get<std::string>(), 'T')});
        }
        lat.plaquettes.push_back(std::move(plaq));
    }
    lat.validate();
    return lat;
}

inline ordered_json to_json(const LatticeLayout& lat) {
    ordered_json links = ordered_json::array();
    for (int id : lat.link_ids) {
        links.push_back(ordered_json{{"id", id}});
    }
    ordered_json vertices = ordered_json::array();
    for (const auto& v : lat.vertices) {
        ordered_json incs = ordered_json::array();
        for (const auto& inc : v.links) {
            incs.push_back(ordered_json::array({inc.link, std::string("L") + inc.sign}));
        }
        vertices.push_back(ordered_json{{"id", v.id}, {"links", incs}});
    }
    ordered_json plaquettes = ordered_json::array();
    for (const auto& p : lat.plaquettes) {
        ordered_json incs = ordered_json::array();
        for (const auto& inc : p.links) {
            incs.push_back(ordered_json::array({inc.link, std::string("T") + inc.sign}));
        }
        plaquettes.push_back(ordered_json{{"id", p.id}, {"links", incs}});
    }
    return ordered_json{
        {"name", lat.name}, {"links", links}, {"vertices", vertices}, {"plaquettes", plaquettes}};
}

inline LatticeLayout layout_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open layout file: " + path);
    }
    nlohmann::json j;
    in >> j;
    return layout_from_json(j);
}

// Ribbon files: {"triangles":[{"kind":"dual"|"direct","site":int,"sign":"+"|"-"}]}

inline RibbonSpec ribbon_from_json(const nlohmann::json& j) {
    RibbonSpec spec;
    for (const auto& t : j.at("triangles")) {
        std::string kind = t.at("kind").get<std::string>();
        if (kind != "dual" && kind != "direct") {
            throw std::invalid_argument("triangle kind must be dual or direct, got " + kind);
        }
        std::string sign = t.at("sign").get<std::string>();
        if (sign != "+" && sign != "-") {
            throw std::invalid_argument("triangle sign must be + or -, got " + sign);
        }
        spec.triangles.push_back({kind == "dual" ? Triangle::Kind::Dual : Triangle::Kind::Direct,
                                  t.at("site").get<int>(), sign[0]});
    }
    spec.validate();
    return spec;
}

inline ordered_json to_json(const RibbonSpec& spec) {
    ordered_json triangles = ordered_json::array();
    for (const auto& t : spec.triangles) {
        triangles.push_back(
            ordered_json{{"kind", t.kind == Triangle::Kind::Dual ? "dual" : "direct"},
                         {"site", t.site},
                         {"sign", std::string(1, t.sign)}});
    }
    return ordered_json{{"triangles", triangles}};
}

inline ordered_json to_json(const ProtocolReport& report) {
    ordered_json r = ordered_json::array();
    for (const cplx& z : report.r_diagonal) {
        r.push_back(to_json(z));
    }
    ordered_json f = ordered_json::array();
    for (const auto& row : report.f_squared) {
        f.push_back(ordered_json::array({row[0], row[1], row[2]}));
    }
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back(
            ordered_json{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    }
    return ordered_json{{"r_matrix", r},
                        {"f_squared", f},
                        {"sign_family",
                         ordered_json{{"count", report.sign_family_count},
                                      {"min_commutator_norm", report.min_commutator_norm}}},
                        {"checks", checks}};
}

}  // namespace ds3
