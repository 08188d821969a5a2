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

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ds3/group.hpp"

namespace ds3 {

inline int64_t pow_i64(int base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

/// Big-endian radix encoding of a group-element tuple: qudit 1 is the most
/// significant digit.
inline int64_t basis_index(std::span<const int> tuple, int dim) {
    int64_t idx = 0;
    for (int digit : tuple) {
        if (digit < 0 || digit >= dim) {
            throw std::out_of_range("basis digit out of range");
        }
        idx = idx * dim + digit;
    }
    return idx;
}

inline int64_t basis_index(std::initializer_list<int> tuple, int dim) {
    return basis_index(std::span<const int>(tuple.begin(), tuple.size()), dim);
}

inline std::vector<int> basis_tuple(int64_t index, int num_qudits, int dim) {
    if (index < 0 || index >= pow_i64(dim, num_qudits)) {
        throw std::out_of_range("basis index out of range");
    }
    std::vector<int> tuple(num_qudits);
    for (int q = num_qudits - 1; q >= 0; --q) {
        tuple[q] = static_cast<int>(index % dim);
        index /= dim;
    }
    return tuple;
}

/// Dense complex amplitude vector over the dim^n tuple basis.
struct StateVector {
    int num_qudits = 0;
    int dim = 6;
    std::vector<cplx> amps;

    StateVector() = default;
    StateVector(int n, int d) : num_qudits(n), dim(d), amps(pow_i64(d, n), cplx(0, 0)) {}

    static StateVector basis_state(int n, int d, int64_t index) {
        StateVector s(n, d);
        if (index < 0 || index >= s.size()) {
            throw std::out_of_range("basis index out of range");
        }
        s.amps[index] = 1.0;
        return s;
    }

    int64_t size() const { return static_cast<int64_t>(amps.size()); }

    double norm() const {
        double n2 = 0;
        for (const cplx& a : amps) {
            n2 += std::norm(a);
        }
        return std::sqrt(n2);
    }

    StateVector& normalize() {
        double n = norm();
        if (n == 0) {
            throw std::runtime_error("cannot normalize the zero state");
        }
        for (cplx& a : amps) {
            a /= n;
        }
        return *this;
    }
};

/// Sesquilinear inner product, conjugating the first argument.
inline cplx inner(const StateVector& a, const StateVector& b) {
    if (a.num_qudits != b.num_qudits || a.dim != b.dim) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    cplx acc(0, 0);
    for (int64_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a.amps[i]) * b.amps[i];
    }
    return acc;
}

inline double distance(const StateVector& a, const StateVector& b) {
    if (a.num_qudits != b.num_qudits || a.dim != b.dim) {
        throw std::invalid_argument("distance: dimension mismatch");
    }
    double n2 = 0;
    for (int64_t i = 0; i < a.size(); ++i) {
        n2 += std::norm(a.amps[i] - b.amps[i]);
    }
    return std::sqrt(n2);
}

inline StateVector add(const StateVector& a, const StateVector& b) {
    if (a.num_qudits != b.num_qudits || a.dim != b.dim) {
        throw std::invalid_argument("add: dimension mismatch");
    }
    StateVector out = a;
    for (int64_t i = 0; i < out.size(); ++i) {
        out.amps[i] += b.amps[i];
    }
    return out;
}

inline StateVector scale(cplx z, const StateVector& a) {
    StateVector out = a;
    for (cplx& v : out.amps) {
        v *= z;
    }
    return out;
}

}  // namespace ds3
