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

#include <string>

#include "oal/alliance.hpp"
#include "oal/mrss.hpp"
#include "oal/reduce.hpp"

namespace oal {

// DIMACS-flavored instance text. Grammar (one directive per line, `c`
// lines are comments, 0-based vertex ids):
//
//   p oa <n> <m>                     first non-comment line
//   k <budget>
//   mode offensive|strong|defensive
//   card atmost|exact
//   e <u> <v>
//   f <v>                            forbidden vertex
//   nn <v>                           necessary vertex
//
// k/mode/card default to 1/offensive/atmost when absent and may appear
// at most once. Duplicate edges or annotations, ids >= n, self-loops,
// edge-count mismatches and forbidden/necessary overlaps are rejected
// with the offending line number. serialize_instance emits the canonical
// form (directives in the order above, edges and annotations ascending),
// and parse(serialize(x)) == x for every valid instance.
AnnotatedInstance parse_instance(const std::string& text);
std::string serialize_instance(const AnnotatedInstance& inst);

// MRSS text:
//
//   mrss <dim> <n> <kprime>
//   t <dim entries>
//   s <dim entries>                  exactly n lines
//
// Entries are nonnegative integers; ragged lines are dimension errors.
MRSSInstance parse_mrss(const std::string& text);
std::string serialize_mrss(const MRSSInstance& inst);

// Line-oriented trace format: `step <name>`, `budget_in <int>`,
// `budget_out <int>`, then one `role <name> <vertex-id>` line per
// mapping in canonical (allocation) order.
std::string serialize_trace(const ReductionTrace& trace);

// DOT rendering for offline inspection: forbidden vertices are red
// boxes, necessary vertices are triangles, witness vertices are filled.
std::string to_dot(const AnnotatedInstance& inst, const VertexSet* witness = nullptr);

}  // namespace oal
