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
#include "oal/solve.hpp"

namespace oal {

// Height of a tree under the root that minimizes it: the minimum over
// root choices of the maximum root-to-leaf edge count (equivalently, the
// tree's radius). Requires g to be one connected acyclic component;
// throws NotATree otherwise. A single vertex has height 0.
int component_height(const Graph& g);

struct ComponentInfo {
    Vertex representative = 0;  // smallest id in the component
    int height = -1;            // -1 when the component is not a tree
    bool is_tree = false;

    friend bool operator==(const ComponentInfo&, const ComponentInfo&) = default;
};

// Witness that removing `deleted` leaves a forest whose components all
// have height <= height_bound. This is a strictly stronger certificate
// than a feedback vertex set: height-h trees have treedepth at most
// h+1 (tested) and pathwidth/treewidth at most h, so a small deletion
// set into bounded-height trees bounds all of those parameters at
// once. Computing treewidth or pathwidth directly is out of scope.
struct DeletionSetCertificate {
    bool ok = false;
    VertexSet deleted;
    int height_bound = 0;
    std::vector<ComponentInfo> components;  // ordered by representative
};

// Checks whether d is a vertex deletion set into trees of height at most
// h. The certificate lists every remaining component with its height.
DeletionSetCertificate check_deletion_set(const Graph& g, const VertexSet& d, int h);

// Minimum-cardinality deletion set into trees of height <= h, ties
// broken lexicographically. Enumerates by increasing size; |V| <= 20.
VertexSet min_deletion_set(const Graph& g, int h, const ComputeCap& cap = {});

// Minimum-cardinality vertex set whose removal leaves a forest,
// lexicographic tie-break. |V| <= 20.
VertexSet fvs_exact(const Graph& g, const ComputeCap& cap = {});

// Exact treedepth via the delete-a-vertex recursion with memoization on
// vertex subsets: td of a single vertex is 1, a disconnected graph takes
// the max over components, and a connected graph is 1 + min over v of
// td(G - v). Note the convention td(K1) = 1 (height counted in
// vertices), which is what makes the recursion close; the off-by-one
// differs across the literature. |V| <= 12.
int treedepth_exact(const Graph& g, const ComputeCap& cap = {});

}  // namespace oal
