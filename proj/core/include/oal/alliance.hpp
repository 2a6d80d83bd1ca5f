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

#include "oal/graph.hpp"

namespace oal {

// A nonempty S is an offensive alliance when every boundary vertex
// v ∈ N(S) has d_S(v) >= d_{S^c}(v) + 1; the strong variant raises the
// margin to +2. The defensive variant instead asks every member v ∈ S
// for d_S(v) + 1 >= d_{S^c}(v). The defensive predicate exists for
// completeness and cross-testing; no solver pipeline is built around it.
enum class AllianceKind { offensive, strong_offensive, defensive };

enum class CardinalityMode { at_most, exact };

// 1 for offensive, 2 for strong_offensive. Defensive has no margin
// threshold; asking for one is an error.
int threshold(AllianceKind kind);

const char* to_string(AllianceKind kind);
const char* to_string(CardinalityMode mode);

// The universal instance shape for all problem variants. Plain problems
// have empty forbidden/necessary sets; the annotated variants force
// forbidden vertices out of the solution and necessary vertices in.
struct AnnotatedInstance {
    Graph graph;
    VertexSet forbidden;   // V□: the solution must avoid these
    VertexSet necessary;   // V△: the solution must contain these
    int budget = 1;        // k (or r): size bound on the solution
    AllianceKind kind = AllianceKind::offensive;
    CardinalityMode cardinality = CardinalityMode::at_most;

    // Throws InvalidInput on out-of-range ids, forbidden/necessary
    // overlap, budget < 1, or |necessary| > budget.
    void validate() const;

    friend bool operator==(const AnnotatedInstance&, const AnnotatedInstance&) = default;
};

struct Violation {
    Vertex vertex;
    int margin;  // always negative

    friend bool operator==(const Violation&, const Violation&) = default;
};

// True iff s is an alliance of the given kind. Vacuously true when the
// quantified set (N(S), or S itself for defensive) imposes no
// constraint. Throws EmptyCandidate when s is empty.
bool check_alliance(const Graph& g, const VertexSet& s, AllianceKind kind);

// Every quantified vertex whose margin is negative, in ascending id
// order. Empty exactly when check_alliance holds.
std::vector<Violation> violations(const Graph& g, const VertexSet& s, AllianceKind kind);

// Full feasibility check: s is nonempty, satisfies the cardinality mode
// against the budget, avoids forbidden, contains necessary, and is an
// alliance of the instance's kind.
bool check_solution(const AnnotatedInstance& inst, const VertexSet& s);

// The structural side condition on forbidden sets: every degree-one
// forbidden vertex is adjacent to another forbidden vertex, and every
// forbidden vertex of degree greater than one is adjacent to a
// degree-one forbidden vertex. Degree-zero forbidden vertices are
// unconstrained (both clauses quantify past them).
bool validate_forbidden_structure(const Graph& g, const VertexSet& forbidden);

}  // namespace oal
