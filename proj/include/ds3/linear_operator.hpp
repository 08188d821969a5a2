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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ds3/state_vector.hpp"

namespace ds3 {

/// Entries with magnitude below this threshold are dropped after every
/// algebra operation, keeping sparsity exact for operators built from
/// exact phases.
inline constexpr double kPruneThreshold = 1e-14;

/// Default numeric comparison tolerance for all protocol-level assertions.
inline constexpr double kDefaultTolerance = 1e-10;

/// Sparse complex operator on a tensor product of qudits.
///
/// Entries are kept column-major sorted by (col, row) with duplicates
/// combined and near-zero values pruned, so equal operators have identical
/// entry lists.  Column-major storage lets composition join directly
/// against the left factor's columns.
struct LinearOperator {
    struct Entry {
        int64_t row;
        int64_t col;
        cplx val;
    };

    int num_qudits = 0;
    int dim = 6;
    std::vector<Entry> entries;

    LinearOperator() = default;
    LinearOperator(int n, int d) : num_qudits(n), dim(d) {}

    static LinearOperator zero(int n, int d) { return LinearOperator(n, d); }

    static LinearOperator identity(int n, int d) {
        LinearOperator op(n, d);
        int64_t size = pow_i64(d, n);
        op.entries.reserve(size);
        for (int64_t i = 0; i < size; ++i) {
            op.entries.push_back({i, i, cplx(1, 0)});
        }
        return op;
    }

    int64_t size() const { return pow_i64(dim, num_qudits); }

    /// Sorts by (col, row), combines duplicates, prunes tiny entries.
    void canonicalize() {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
        combine_sorted();
    }

    /// Duplicate-combining and pruning pass over already-sorted entries.
    void combine_sorted() {
        size_t out = 0;
        for (size_t i = 0; i < entries.size();) {
            Entry e = entries[i];
            size_t j = i + 1;
            while (j < entries.size() && entries[j].col == e.col && entries[j].row == e.row) {
                e.val += entries[j].val;
                ++j;
            }
            if (std::abs(e.val) > kPruneThreshold) {
                entries[out++] = e;
            }
            i = j;
        }
        entries.resize(out);
    }
};

inline void require_same_shape(const LinearOperator& a, const LinearOperator& b,
                               const char* what) {
    if (a.num_qudits != b.num_qudits || a.dim != b.dim) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

enum class QuditOp { Lplus, Lminus, Tplus, Tminus };

/// The four single-qudit generators:
///   L+_g |z> = |gz>,  L-_g |z> = |z g^-1>,
///   T+_h |z> = d_{h,z} |z>,  T-_h |z> = d_{h^-1,z} |z>.
inline LinearOperator single_qudit_operator(QuditOp kind, int g, const GroupTable& group) {
    const int d = group.order();
    if (g < 0 || g >= d) {
        throw std::out_of_range("group element index out of range");
    }
    LinearOperator op(1, d);
    switch (kind) {
        case QuditOp::Lplus:
            for (int z = 0; z < d; ++z) {
                op.entries.push_back({group.multiply(g, z), z, cplx(1, 0)});
            }
            break;
        case QuditOp::Lminus:
            for (int z = 0; z < d; ++z) {
                op.entries.push_back({group.multiply(z, group.inverse(g)), z, cplx(1, 0)});
            }
            break;
        case QuditOp::Tplus:
            op.entries.push_back({g, g, cplx(1, 0)});
            break;
        case QuditOp::Tminus: {
            int h = group.inverse(g);
            op.entries.push_back({h, h, cplx(1, 0)});
            break;
        }
    }
    op.canonicalize();
    return op;
}

/// Places a k-qudit operator on the named sites (1-based, qudit 1 most
/// significant) of an n-qudit system, identity elsewhere.  The j-th local
/// qudit of `op` lands on sites[j].
inline LinearOperator embed(const LinearOperator& op, const std::vector<int>& sites, int n) {
    const int k = op.num_qudits;
    const int d = op.dim;
    if (static_cast<int>(sites.size()) != k) {
        throw std::invalid_argument("embed: site count does not match operator arity");
    }
    std::vector<bool> used(n, false);
    for (int s : sites) {
        if (s < 1 || s > n) {
            throw std::invalid_argument("embed: site out of range");
        }
        if (used[s - 1]) {
            throw std::invalid_argument("embed: duplicate site");
        }
        used[s - 1] = true;
    }
    std::vector<int64_t> stride(n);
    for (int q = 0; q < n; ++q) {
        stride[q] = pow_i64(d, n - 1 - q);
    }

    // Bucket the local entries by local column; within a bucket order by the
    // fixed row-minus-column displacement so the emitted global entries come
    // out sorted by (col, row) with no further sorting.
    const int64_t local_size = op.size();
    struct Shifted {
        int64_t delta;
        cplx val;
    };
    std::vector<std::vector<Shifted>> bucket(local_size);
    for (const auto& e : op.entries) {
        int64_t delta = 0;
        int64_t r = e.row, c = e.col;
        for (int j = k - 1; j >= 0; --j) {
            delta += (r % d - c % d) * stride[sites[j] - 1];
            r /= d;
            c /= d;
        }
        bucket[e.col].push_back({delta, e.val});
    }
    for (auto& b : bucket) {
        std::sort(b.begin(), b.end(),
                  [](const Shifted& x, const Shifted& y) { return x.delta < y.delta; });
    }

    const int64_t size = pow_i64(d, n);
    LinearOperator out(n, d);
    out.entries.reserve(op.entries.size() * pow_i64(d, n - k));
    std::vector<int> digits(n, 0);
    for (int64_t col = 0;;) {
        int64_t local_col = 0;
        for (int j = 0; j < k; ++j) {
            local_col = local_col * d + digits[sites[j] - 1];
        }
        for (const auto& s : bucket[local_col]) {
            out.entries.push_back({col + s.delta, col, s.val});
        }
        if (++col == size) {
            break;
        }
        for (int j = n; j-- > 0;) {
            if (++digits[j] < d) {
                break;
            }
            digits[j] = 0;
        }
    }
    return out;
}

inline LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    require_same_shape(a, b, "compose");
    // a is canonical column-major, so a's columns can be joined against b's
    // rows by binary search.  Emitted entries have nondecreasing column;
    // each equal-column run is sorted in place afterwards.
    LinearOperator out(a.num_qudits, a.dim);
    out.entries.reserve(std::max(a.entries.size(), b.entries.size()));
    for (const auto& be : b.entries) {
        auto lo = std::lower_bound(a.entries.begin(), a.entries.end(), be.row,
                                   [](const LinearOperator::Entry& x, int64_t col) {
                                       return x.col < col;
                                   });
        for (auto it = lo; it != a.entries.end() && it->col == be.row; ++it) {
            out.entries.push_back({it->row, be.col, it->val * be.val});
        }
    }
    for (size_t i = 0; i < out.entries.size();) {
        size_t j = i + 1;
        while (j < out.entries.size() && out.entries[j].col == out.entries[i].col) {
            ++j;
        }
        std::sort(out.entries.begin() + i, out.entries.begin() + j,
                  [](const LinearOperator::Entry& x, const LinearOperator::Entry& y) {
                      return x.row < y.row;
                  });
        i = j;
    }
    out.combine_sorted();
    return out;
}

inline LinearOperator adjoint(const LinearOperator& a) {
    LinearOperator out(a.num_qudits, a.dim);
    out.entries.reserve(a.entries.size());
    for (const auto& e : a.entries) {
        out.entries.push_back({e.col, e.row, std::conj(e.val)});
    }
    out.canonicalize();
    return out;
}

inline LinearOperator add(const LinearOperator& a, const LinearOperator& b) {
    require_same_shape(a, b, "add");
    // Linear merge of two canonical entry lists.
    LinearOperator out(a.num_qudits, a.dim);
    out.entries.reserve(a.entries.size() + b.entries.size());
    size_t i = 0, j = 0;
    auto before = [](const LinearOperator::Entry& x, const LinearOperator::Entry& y) {
        return x.col != y.col ? x.col < y.col : x.row < y.row;
    };
    while (i < a.entries.size() && j < b.entries.size()) {
        if (before(a.entries[i], b.entries[j])) {
            out.entries.push_back(a.entries[i++]);
        } else {
            out.entries.push_back(b.entries[j++]);
        }
    }
    out.entries.insert(out.entries.end(), a.entries.begin() + i, a.entries.end());
    out.entries.insert(out.entries.end(), b.entries.begin() + j, b.entries.end());
    out.combine_sorted();
    return out;
}

inline LinearOperator scale(cplx z, const LinearOperator& a) {
    LinearOperator out(a.num_qudits, a.dim);
    if (std::abs(z) <= kPruneThreshold) {
        return out;
    }
    out.entries.reserve(a.entries.size());
    for (const auto& e : a.entries) {
        out.entries.push_back({e.row, e.col, z * e.val});
    }
    out.combine_sorted();
    return out;
}

inline LinearOperator subtract(const LinearOperator& a, const LinearOperator& b) {
    return add(a, scale(cplx(-1, 0), b));
}

/// Sum of many operators with a single duplicate-combining pass.
inline LinearOperator sum(const std::vector<LinearOperator>& ops) {
    if (ops.empty()) {
        throw std::invalid_argument("sum of zero operators");
    }
    LinearOperator out(ops[0].num_qudits, ops[0].dim);
    size_t total = 0;
    for (const auto& op : ops) {
        require_same_shape(ops[0], op, "sum");
        total += op.entries.size();
    }
    out.entries.reserve(total);
    for (const auto& op : ops) {
        out.entries.insert(out.entries.end(), op.entries.begin(), op.entries.end());
    }
    out.canonicalize();
    return out;
}

/// Tensor product; `a` supplies the most significant qudits.
inline LinearOperator tensor(const LinearOperator& a, const LinearOperator& b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("tensor: qudit dimension mismatch");
    }
    const int64_t bsize = b.size();
    LinearOperator out(a.num_qudits + b.num_qudits, a.dim);
    out.entries.reserve(a.entries.size() * b.entries.size());
    for (const auto& ea : a.entries) {
        for (const auto& eb : b.entries) {
            out.entries.push_back(
                {ea.row * bsize + eb.row, ea.col * bsize + eb.col, ea.val * eb.val});
        }
    }
    out.canonicalize();
    return out;
}

inline StateVector apply(const LinearOperator& op, const StateVector& s) {
    if (op.num_qudits != s.num_qudits || op.dim != s.dim) {
        throw std::invalid_argument("apply: dimension mismatch");
    }
    StateVector out(s.num_qudits, s.dim);
    for (const auto& e : op.entries) {
        out.amps[e.row] += e.val * s.amps[e.col];
    }
    return out;
}

inline double frobenius_norm(const LinearOperator& a) {
    double n2 = 0;
    for (const auto& e : a.entries) {
        n2 += std::norm(e.val);
    }
    return std::sqrt(n2);
}

inline double commutator_residual(const LinearOperator& a, const LinearOperator& b) {
    return frobenius_norm(subtract(compose(a, b), compose(b, a)));
}

inline cplx trace(const LinearOperator& a) {
    cplx t(0, 0);
    for (const auto& e : a.entries) {
        if (e.row == e.col) {
            t += e.val;
        }
    }
    return t;
}

/// Largest entrywise difference; operators must have the same shape.
inline double max_entry_difference(const LinearOperator& a, const LinearOperator& b) {
    require_same_shape(a, b, "max_entry_difference");
    double m = 0;
    for (const auto& e : subtract(a, b).entries) {
        m = std::max(m, std::abs(e.val));
    }
    return m;
}

/// <a|M|b> without materializing M as a dense matrix.
inline cplx matrix_element(const StateVector& a, const LinearOperator& m, const StateVector& b) {
    return inner(a, apply(m, b));
}

}  // namespace ds3
