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

#include "oal/alliance.hpp"

#include <string>

namespace oal {

int threshold(AllianceKind kind) {
    switch (kind) {
        case AllianceKind::offensive: return 1;
        case AllianceKind::strong_offensive: return 2;
        case AllianceKind::defensive: break;
    }
    throw InvalidInput("defensive alliances have no margin threshold");
}

const char* to_string(AllianceKind kind) {
    switch (kind) {
        case AllianceKind::offensive: return "offensive";
        case AllianceKind::strong_offensive: return "strong";
        case AllianceKind::defensive: return "defensive";
    }
    return "?";
}

const char* to_string(CardinalityMode mode) {
    return mode == CardinalityMode::at_most ? "atmost" : "exact";
}

void AnnotatedInstance::validate() const {
    for (Vertex v : forbidden) graph.check_vertex(v);
    for (Vertex v : necessary) graph.check_vertex(v);
    if (intersects(forbidden, necessary))
        throw InvalidInput("forbidden and necessary sets overlap");
    if (budget < 1)
        throw InvalidInput("budget must be at least 1, got " + std::to_string(budget));
    if (necessary.size() > budget)
        throw InvalidInput("necessary set larger than the budget (" +
                           std::to_string(necessary.size()) + " > " + std::to_string(budget) + ")");
}

namespace {

// Shared walk for check_alliance / violations. Margin of a quantified
// vertex: offensive kinds d_S(v) - d_{S^c}(v) - threshold over v in
// N(S); defensive d_S(v) + 1 - d_{S^c}(v) over v in S.
void for_each_margin(const Graph& g, const VertexSet& s, AllianceKind kind, auto&& emit) {
    if (s.empty())
        throw EmptyCandidate("alliances are non-empty by definition");
    for (Vertex v : s) g.check_vertex(v);

    if (kind == AllianceKind::defensive) {
        for (Vertex v : s) {
            int ds = deg_in(g, s, v);
            int dc = g.degree(v) - ds;
            emit(v, ds + 1 - dc);
        }
        return;
    }
    int thr = threshold(kind);
    for (Vertex v : boundary(g, s)) {
        int ds = deg_in(g, s, v);
        int dc = g.degree(v) - ds;
        emit(v, ds - dc - thr);
    }
}

}  // namespace

bool check_alliance(const Graph& g, const VertexSet& s, AllianceKind kind) {
    bool ok = true;
    for_each_margin(g, s, kind, [&](Vertex, int margin) {
        if (margin < 0) ok = false;
    });
    return ok;
}

std::vector<Violation> violations(const Graph& g, const VertexSet& s, AllianceKind kind) {
    std::vector<Violation> out;
    for_each_margin(g, s, kind, [&](Vertex v, int margin) {
        if (margin < 0) out.push_back({v, margin});
    });
    // boundary()/VertexSet iteration is ascending already
    return out;
}

bool check_solution(const AnnotatedInstance& inst, const VertexSet& s) {
    inst.validate();
    if (s.empty())
        throw EmptyCandidate("candidate solution is empty");
    for (Vertex v : s) inst.graph.check_vertex(v);

    if (inst.cardinality == CardinalityMode::at_most) {
        if (s.size() > inst.budget) return false;
    } else {
        if (s.size() != inst.budget) return false;
    }
    if (intersects(s, inst.forbidden)) return false;
    for (Vertex v : inst.necessary)
        if (!s.contains(v)) return false;
    return check_alliance(inst.graph, s, inst.kind);
}

bool validate_forbidden_structure(const Graph& g, const VertexSet& forbidden) {
    for (Vertex v : forbidden) g.check_vertex(v);
    for (Vertex v : forbidden) {
        int d = g.degree(v);
        if (d == 1) {
            if (!forbidden.contains(g.neighbors(v)[0])) return false;
        } else if (d > 1) {
            bool has_pendant_partner = false;
            for (Vertex w : g.neighbors(v))
                if (g.degree(w) == 1 && forbidden.contains(w)) {
                    has_pendant_partner = true;
                    break;
                }
            if (!has_pendant_partner) return false;
        }
        // degree 0: both clauses quantify past it
    }
    return true;
}

}  // namespace oal
