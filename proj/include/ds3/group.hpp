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
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ds3 {

using cplx = std::complex<double>;

/// Primitive cube root of unity exp(2*pi*i/3), stored to double precision.
inline cplx omega() {
    constexpr double theta = 2.0 * std::numbers::pi / 3.0;
    return cplx(std::cos(theta), std::sin(theta));
}

inline cplx omega_bar() { return std::conj(omega()); }

/// Finite group given by an explicit multiplication table.
///
/// Elements are integer indices 0..order-1; index 0 is the identity.
/// The factory validates the group axioms by full enumeration, so any
/// constructed table is a genuine group.
class GroupTable {
  public:
    static GroupTable from_table(int order, std::vector<int> products,
                                 std::vector<std::string> names) {
        if (order <= 0 || products.size() != static_cast<size_t>(order) * order) {
            throw std::invalid_argument("multiplication table has wrong size");
        }
        if (names.size() != static_cast<size_t>(order)) {
            throw std::invalid_argument("element name list has wrong size");
        }
        GroupTable g;
        g.order_ = order;
        g.mul_ = std::move(products);
        g.names_ = std::move(names);
        for (int v : g.mul_) {
            if (v < 0 || v >= order) {
                throw std::invalid_argument("multiplication table entry out of range");
            }
        }
        // Identity must be two-sided neutral at index 0.
        for (int a = 0; a < order; ++a) {
            if (g.mul_[a] != a || g.mul_[static_cast<size_t>(a) * order] != a) {
                throw std::invalid_argument("element 0 is not a two-sided identity");
            }
        }
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                for (int c = 0; c < order; ++c) {
                    int ab_c = g.mul_at(g.mul_at(a, b), c);
                    int a_bc = g.mul_at(a, g.mul_at(b, c));
                    if (ab_c != a_bc) {
                        throw std::invalid_argument("multiplication table is not associative");
                    }
                }
            }
        }
        g.inv_.assign(order, -1);
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                if (g.mul_at(a, b) == 0 && g.mul_at(b, a) == 0) {
                    g.inv_[a] = b;
                    break;
                }
            }
            if (g.inv_[a] < 0) {
                throw std::invalid_argument("element without inverse");
            }
        }
        return g;
    }

    /// The symmetric group S3 in the canonical order e, c, c2, t, tc, tc2,
    /// generated from the presentation c^3 = e, t^2 = e, ct = tc^2.
    static const GroupTable& s3() {
        static const GroupTable table = make_s3();
        return table;
    }

    int order() const { return order_; }
    int identity() const { return 0; }

    int multiply(int a, int b) const {
        check(a);
        check(b);
        return mul_at(a, b);
    }

    int inverse(int a) const {
        check(a);
        return inv_[a];
    }

    const std::string& name(int a) const {
        check(a);
        return names_[a];
    }

    int element_by_name(const std::string& n) const {
        for (int a = 0; a < order_; ++a) {
            if (names_[a] == n) {
                return a;
            }
        }
        throw std::invalid_argument("unknown group element name: " + n);
    }

    /// {h g h^-1 : h in G}, ascending element order.
    std::vector<int> conjugacy_class(int g) const {
        check(g);
        std::vector<bool> seen(order_, false);
        for (int h = 0; h < order_; ++h) {
            seen[mul_at(mul_at(h, g), inv_[h])] = true;
        }
        std::vector<int> out;
        for (int a = 0; a < order_; ++a) {
            if (seen[a]) {
                out.push_back(a);
            }
        }
        return out;
    }

    /// Partition of the group into conjugacy classes, identity class first.
    std::vector<std::vector<int>> conjugacy_classes() const {
        std::vector<std::vector<int>> classes;
        std::vector<bool> done(order_, false);
        for (int a = 0; a < order_; ++a) {
            if (done[a]) {
                continue;
            }
            auto cls = conjugacy_class(a);
            for (int x : cls) {
                done[x] = true;
            }
            classes.push_back(std::move(cls));
        }
        return classes;
    }

    /// {h : gh = hg}, ascending element order.
    std::vector<int> normalizer(int g) const {
        check(g);
        std::vector<int> out;
        for (int h = 0; h < order_; ++h) {
            if (mul_at(g, h) == mul_at(h, g)) {
                out.push_back(h);
            }
        }
        return out;
    }

    /// Representatives of the left cosets q*N of a subgroup N, including the
    /// identity first, in ascending element order.
    std::vector<int> coset_representatives(const std::vector<int>& subgroup) const {
        std::vector<bool> covered(order_, false);
        std::vector<int> reps;
        for (int q = 0; q < order_; ++q) {
            if (covered[q]) {
                continue;
            }
            reps.push_back(q);
            for (int n : subgroup) {
                covered[mul_at(q, n)] = true;
            }
        }
        return reps;
    }

  private:
    static GroupTable make_s3() {
        // Element i = 3a + b stands for t^a c^b.  The product rule follows
        // from c^b t = t c^(2b): (t^a c^b)(t^a' c^b') = t^(a+a') c^(2^a' b + b').
        std::vector<int> products(36);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                int a = i / 3, b = i % 3;
                int ap = j / 3, bp = j % 3;
                int ra = (a + ap) % 2;
                int rb = ((ap ? 2 * b : b) + bp) % 3;
                products[static_cast<size_t>(i) * 6 + j] = 3 * ra + rb;
            }
        }
        return from_table(6, std::move(products), {"e", "c", "c2", "t", "tc", "tc2"});
    }

    int mul_at(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }

    void check(int a) const {
        if (a < 0 || a >= order_) {
            throw std::out_of_range("group element index out of range");
        }
    }

    int order_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
};

enum class AnyonType { Vacuum, Chargeon, Fluxon, Dyon };

/// One row of the D(S3) anyon table.
///
/// All eight anyons are listed as metadata; only the closed sub-model
/// {A, B, G} carries operator-level data.  For those three labels,
/// `character` holds the normalizer-irrep trace row used to build ribbon
/// operators (identically 1 for A), while `charge_character` holds the S3
/// irrep trace that drives the vertex charge projectors.  The two coincide
/// for A and B and differ for G, whose ribbon row is (1, w, w*, 0, 0, 0)
/// while its vertex charge transforms in the two-dimensional irrep with
/// trace (2, -1, -1, 0, 0, 0).
struct AnyonLabel {
    char tag;
    std::string irrep;
    int quantum_dimension;
    int flux_representative;  // representative element of the conjugacy class
    AnyonType type;
    bool in_submodel;
    std::array<cplx, 6> character;
    std::array<double, 6> charge_character;
};

inline const std::array<AnyonLabel, 8>& anyon_table() {
    static const std::array<AnyonLabel, 8> table = [] {
        const cplx w = omega();
        const cplx wb = omega_bar();
        std::array<AnyonLabel, 8> t{{
            {'A', "Gamma_1^S3", 1, 0, AnyonType::Vacuum, true,
             {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}},
            {'B', "Gamma_-1^S3", 1, 0, AnyonType::Chargeon, true,
             {1, 1, 1, -1, -1, -1}, {1, 1, 1, -1, -1, -1}},
            {'C', "Gamma_2^S3", 2, 0, AnyonType::Chargeon, false, {}, {}},
            {'D', "Gamma_1^Z2", 3, 3, AnyonType::Fluxon, false, {}, {}},
            {'E', "Gamma_-1^Z2", 3, 3, AnyonType::Dyon, false, {}, {}},
            {'F', "Gamma_1^Z3", 2, 1, AnyonType::Fluxon, false, {}, {}},
            {'G', "Gamma_w^Z3", 2, 1, AnyonType::Dyon, true,
             {1, w, wb, 0, 0, 0}, {2, -1, -1, 0, 0, 0}},
            {'H', "Gamma_wbar^Z3", 2, 1, AnyonType::Dyon, false, {}, {}},
        }};
        return t;
    }();
    return table;
}

inline const AnyonLabel& anyon(char tag) {
    for (const AnyonLabel& a : anyon_table()) {
        if (a.tag == tag) {
            return a;
        }
    }
    throw std::invalid_argument(std::string("unknown anyon label: ") + tag);
}

/// Normalizer-irrep trace of a sub-model label at group element g.
inline cplx character(const AnyonLabel& label, int g) {
    if (!label.in_submodel) {
        throw std::invalid_argument(std::string("no character data for anyon ") + label.tag);
    }
    if (g < 0 || g >= 6) {
        throw std::out_of_range("group element index out of range");
    }
    return label.character[g];
}

inline cplx character(char tag, int g) { return character(anyon(tag), g); }

/// S3 charge-irrep trace of a sub-model label at group element g.
inline double charge_character(const AnyonLabel& label, int g) {
    if (!label.in_submodel) {
        throw std::invalid_argument(std::string("no character data for anyon ") + label.tag);
    }
    if (g < 0 || g >= 6) {
        throw std::out_of_range("group element index out of range");
    }
    return label.charge_character[g];
}

inline double charge_character(char tag, int g) { return charge_character(anyon(tag), g); }

}  // namespace ds3
