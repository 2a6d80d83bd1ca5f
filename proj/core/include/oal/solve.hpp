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
#include <optional>
#include <vector>

#include "oal/alliance.hpp"
#include "oal/mrss.hpp"

namespace oal {

// Work limits for the exact enumerative solvers.
struct ComputeCap {
    // Upper bound on the projected number of enumerated subsets,
    // estimated before the search starts.
    std::uint64_t max_candidates = 100'000'000;
    // Largest instance (vertex count) accepted, and the bound checked by
    // reductions whose output size is predictable up front.
    std::int64_t max_vertices = 1'000'000;
};

struct SolveOutcome {
    bool yes = false;
    // Present iff yes. The first satisfying set in (size, lexicographic)
    // order, i.e. the lexicographically smallest among the minimum-size
    // witnesses in at_most mode.
    std::optional<VertexSet> witness;
    // Candidate sets evaluated in this run. Informational; under
    // multi-threaded runs the exact value depends on scheduling.
    std::uint64_t explored = 0;
};

struct MRSSOutcome {
    bool yes = false;
    std::optional<std::vector<int>> witness;  // vector indices, ascending
    std::uint64_t explored = 0;
};

// Exact constrained search. Forces `necessary` into the candidate,
// excludes `forbidden`, and enumerates subsets of the remaining free
// vertices of size 0..budget-|necessary| (exact mode: exactly
// budget-|necessary|) in increasing size, then lexicographic order over
// ascending ids. Returns the first satisfying set; answers no only when
// enumeration completed. Throws CapExceeded when the projected candidate
// count exceeds cap.max_candidates or the graph exceeds
// cap.max_vertices — a cap error is never a "no".
//
// threads > 1 partitions the enumeration across workers; the returned
// outcome (answer and witness) is identical to a single-threaded run.
SolveOutcome solve(const AnnotatedInstance& inst, const ComputeCap& cap = {}, int threads = 1);

// Independent oracle for cross-validation: enumerates every subset of
// V(G) in (size, lexicographic) order and filters all constraints after
// the fact, sharing no search machinery with solve(). Requires
// |V| <= 25.
SolveOutcome naive_solve(const AnnotatedInstance& inst, const ComputeCap& cap = {});

// Enumerates index subsets of size 0..kprime in (size, lexicographic)
// order; yes iff some subset's coordinatewise sum dominates the target.
MRSSOutcome mrss_solve(const MRSSInstance& inst, const ComputeCap& cap = {});

}  // namespace oal
