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

#include <string>
#include <vector>

#include "ds3/protocols.hpp"

namespace ds3 {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0;
};

struct ProtocolReport {
    std::array<cplx, 3> r_diagonal{};
    Mat3d f_squared{};
    int sign_family_count = 0;
    double min_commutator_norm = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace ds3
