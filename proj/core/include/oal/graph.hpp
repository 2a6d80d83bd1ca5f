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
#include <initializer_list>
#include <vector>

#include "oal/errors.hpp"

namespace oal {

using Vertex = int;

// Simple undirected graph over dense vertex ids 0..n-1.
//
// Adjacency lists are kept sorted, so iteration order (and everything
// downstream that breaks ties by vertex id) is deterministic. Gadget
// graphs can get large, which is why vertices are plain integers;
// human-readable gadget role names live in ReductionTrace. A Graph is
// immutable after construction; add_edge is only called while building,
// single-threaded, after which instances can be shared freely across
// threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return static_cast<int>(adj_.size()); }
    std::int64_t m() const { return m_; }

    // Rejects self-loops, out-of-range ids and parallel edges.
    void add_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;

    // Throws InvalidInput unless 0 <= v < n.
    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::int64_t m_ = 0;
};

// A set of vertex ids with set semantics, stored sorted and unique.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);  // sorts and dedups

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }

    // Ascending.
    const std::vector<Vertex>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);

// V(g) minus s.
VertexSet complement(const Graph& g, const VertexSet& s);

// N(S): the vertices outside s with at least one neighbor in s.
VertexSet boundary(const Graph& g, const VertexSet& s);

// |N(v) ∩ s|. v's own membership in s never counts.
int deg_in(const Graph& g, const VertexSet& s, Vertex v);

}  // namespace oal
