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

#include "oal/graph.hpp"

#include <algorithm>
#include <string>

namespace oal {

Graph::Graph(int n) {
    if (n < 0)
        throw InvalidInput("graph size must be nonnegative, got " + std::to_string(n));
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n())
        throw InvalidInput("vertex id " + std::to_string(v) + " out of range [0, " +
                           std::to_string(n()) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InvalidInput("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw InvalidInput("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(a.size() + b.size()));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool intersects(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib)
            ++ia;
        else
            ++ib;
    }
    return false;
}

VertexSet complement(const Graph& g, const VertexSet& s) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(g.n() - s.size()));
    for (Vertex v = 0; v < g.n(); ++v)
        if (!s.contains(v)) out.push_back(v);
    return VertexSet(std::move(out));
}

VertexSet boundary(const Graph& g, const VertexSet& s) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : s) g.check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)] && !s.contains(w)) {
                seen[static_cast<std::size_t>(w)] = 1;
                out.push_back(w);
            }
        }
    return VertexSet(std::move(out));
}

int deg_in(const Graph& g, const VertexSet& s, Vertex v) {
    g.check_vertex(v);
    for (Vertex u : s) g.check_vertex(u);
    int d = 0;
    for (Vertex w : g.neighbors(v))
        if (s.contains(w)) ++d;
    return d;
}

}  // namespace oal
