// Copyright 2026 The oal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "oal/errors.hpp"

namespace oal {

// Multidimensional relaxed subset sum: pick at most kprime of the
// vectors so that their coordinatewise sum dominates the target.
struct MRSSInstance {
    int dim = 0;     // coordinates per vector
    int kprime = 0;  // cardinality bound on the picked subset
    std::vector<std::vector<long long>> vectors;
    std::vector<long long> target;

    int n() const { return static_cast<int>(vectors.size()); }

    // Throws InvalidInput on dim < 1, kprime < 0, ragged or negative
    // entries, or an empty vector list.
    void validate() const;

    friend bool operator==(const MRSSInstance&, const MRSSInstance&) = default;
};

}  // namespace oal
