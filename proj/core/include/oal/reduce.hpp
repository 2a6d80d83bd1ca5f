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
#include <utility>
#include <vector>

#include "oal/alliance.hpp"
#include "oal/mrss.hpp"
#include "oal/solve.hpp"

namespace oal {

// The four gadget constructions, named after the steps of the hardness
// chain they realize:
//   lemma2     MRSS -> strong offensive alliance with forbidden and
//              necessary vertices
//   corollary1 collapses the necessary set to a single vertex
//   lemma3     eliminates the necessary vertex, dropping the margin from
//              strong (+2) to plain (+1)
//   theorem1   eliminates the forbidden set
enum class ReductionStep { lemma2, corollary1, lemma3, theorem1 };

const char* to_string(ReductionStep step);

// Bookkeeping emitted by every reduction: which role each gadget vertex
// plays, the budget arithmetic, and the closed-form size check. Source
// vertices keep their ids; gadget vertices are appended in a fixed role
// order, which `roles` records (it is injective and lists vertices in
// allocation order).
struct ReductionTrace {
    ReductionStep step = ReductionStep::lemma2;
    std::vector<std::pair<std::string, Vertex>> roles;
    int budget_in = 0;
    int budget_out = 0;
    // Closed-form predictions vs. counts of the built graph. The
    // constructors verify these match; both sides are kept so tests and
    // tooling can audit the formulas.
    std::int64_t expected_vertices = 0;
    std::int64_t actual_vertices = 0;
    std::int64_t expected_edges = 0;
    std::int64_t actual_edges = 0;

    bool has_role(const std::string& name) const;
    Vertex role(const std::string& name) const;  // throws InvalidInput if absent
};

// MRSS source -> strong offensive alliance instance with forbidden and
// necessary vertices (at_most mode). Requires every coordinate i to
// satisfy sum_s s(i) >= target(i) and sum_s s(i) >= 1; otherwise the
// gadget's pendant counts would be negative or the forbidden-structure
// condition would break downstream, and the construction throws
// UnrepresentableInstance (such sources are trivially answerable
// directly). The attachment of u_i to "s(i) many" tree vertices is
// resolved deterministically as the first s(i) in index order.
std::pair<AnnotatedInstance, ReductionTrace> lemma2_reduce(const MRSSInstance& inst);

// The alliance that the forward direction of the lemma2 equivalence
// plants for a chosen vector subset (0-based indices into inst.vectors):
// the necessary set, plus A_s ∪ B_s ∪ {x_s} for the chosen vectors and
// C_s for the rest. Lets tests check witnesses without solving.
VertexSet lemma2_witness(const MRSSInstance& inst, const std::vector<int>& chosen,
                         const AnnotatedInstance& reduced, const ReductionTrace& trace);

// Collapses |necessary| = ℓ >= 2 down to a single fresh necessary vertex
// by giving the old necessary set a common forbidden neighbor x with
// ℓ-1 forbidden pendants and one necessary pendant y; budget + 1.
// Identity when ℓ = 1 already. Requires the strong kind; ℓ = 0 is an
// error.
std::pair<AnnotatedInstance, ReductionTrace> corollary1_reduce(const AnnotatedInstance& inst);

// Eliminates the single necessary vertex at the cost of the margin:
// strong offensive in, plain offensive out, budget + 4n. Requires
// |necessary| = 1 and the forbidden-structure condition on the input.
std::pair<AnnotatedInstance, ReductionTrace> lemma3_reduce(const AnnotatedInstance& inst);

// Eliminates the forbidden set: hangs a two-level tree of 4r children
// with 4r leaves each off every degree-one forbidden vertex, making any
// solution that touches a formerly-forbidden region blow past the
// budget. Budget unchanged. Output is a plain instance. Throws
// CapExceeded when the projected output size exceeds cap.max_vertices
// (the trees are quartic in r, so this is the expected outcome for
// non-tiny inputs).
std::pair<AnnotatedInstance, ReductionTrace> theorem1_reduce(const AnnotatedInstance& inst,
                                                             const ComputeCap& cap = {});

// lemma2 -> corollary1 -> lemma3 -> theorem1 in order, stopping after
// `stop_after`. Checks that every intermediate instance satisfies its
// consumer's precondition; traces accumulate per step.
std::pair<AnnotatedInstance, std::vector<ReductionTrace>> pipeline_reduce(
    const MRSSInstance& inst, ReductionStep stop_after, const ComputeCap& cap = {});

// True iff solving `reduced` under `cap` reproduces the source answer.
// CapExceeded propagates: an inconclusive check never silently passes.
bool verify_equivalence(bool source_yes, const AnnotatedInstance& reduced,
                        const ComputeCap& cap = {}, int threads = 1);

}  // namespace oal
