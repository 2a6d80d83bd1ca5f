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

#include "oal/mrss.hpp"

#include <string>

namespace oal {

void MRSSInstance::validate() const {
    if (dim < 1)
        throw InvalidInput("vector dimension must be at least 1, got " + std::to_string(dim));
    if (kprime < 0)
        throw InvalidInput("cardinality bound must be nonnegative, got " + std::to_string(kprime));
    if (vectors.empty())
        throw InvalidInput("instance has no vectors");
    if (static_cast<int>(target.size()) != dim)
        throw InvalidInput("target has " + std::to_string(target.size()) + " entries, expected " +
                           std::to_string(dim));
    for (long long t : target)
        if (t < 0) throw InvalidInput("negative target entry " + std::to_string(t));
    for (std::size_t s = 0; s < vectors.size(); ++s) {
        if (static_cast<int>(vectors[s].size()) != dim)
            throw InvalidInput("vector " + std::to_string(s + 1) + " has " +
                               std::to_string(vectors[s].size()) + " entries, expected " +
                               std::to_string(dim));
        for (long long e : vectors[s])
            if (e < 0) throw InvalidInput("negative entry " + std::to_string(e) + " in vector " +
                                          std::to_string(s + 1));
    }
}

}  // namespace oal
