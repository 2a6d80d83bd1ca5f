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

#include <cstdint>
#include <string>
#include <variant>

#include "oal/alliance.hpp"
#include "oal/mrss.hpp"

namespace oal {

using GeneratedInstance = std::variant<AnnotatedInstance, MRSSInstance>;

// Deterministic instance generation: a fixed seed always yields the
// identical instance. Profiles:
//
//   plain-small      plain instance, |V| in [4,12], random kind/mode
//   annotated-small  forbidden/necessary annotations; forbidden vertices
//                    are planted as hub+pendant pairs so the structural
//                    condition always holds
//   soafn-small      strong offensive, at_most, 2..4 necessary vertices,
//                    planted forbidden structure
//   mrss-small       dim and kprime in {1,2}, 1..2 vectors with entries
//                    in {0,1,2}, target entries in {1,2}, coordinates
//                    normalized so every column sum reaches the target
//
// Annotated profiles always satisfy validate_forbidden_structure.
// Unknown profile names are InvalidInput.
GeneratedInstance gen_random(std::uint64_t seed, const std::string& profile);

}  // namespace oal
