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

#include "oal/structparams.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace oal {

namespace {

// BFS inside the subgraph induced by !removed, starting at src. Returns
// the visited vertices (in visit order) and the farthest one.
struct BfsResult {
    std::vector<Vertex> visited;
    Vertex farthest;
    int dist;
};

BfsResult bfs_masked(const Graph& g, Vertex src, const std::vector<char>& removed,
                     std::vector<int>& dist_buf) {
    BfsResult res{{src}, src, 0};
    dist_buf[static_cast<std::size_t>(src)] = 0;
    for (std::size_t head = 0; head < res.visited.size(); ++head) {
        Vertex v = res.visited[head];
        int dv = dist_buf[static_cast<std::size_t>(v)];
        for (Vertex w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)] || dist_buf[static_cast<std::size_t>(w)] >= 0)
                continue;
            dist_buf[static_cast<std::size_t>(w)] = dv + 1;
            res.visited.push_back(w);
            if (dv + 1 > res.dist) {
                res.dist = dv + 1;
                res.farthest = w;
            }
        }
    }
    for (Vertex v : res.visited) dist_buf[static_cast<std::size_t>(v)] = -1;
    return res;
}

// Height of the tree component containing rep: the radius, computed by
// the double sweep (farthest vertex from rep, then farthest from that);
// for a tree the diameter endpoints are found exactly, and the optimal
// root sits at the middle, so height = ceil(diameter / 2).
int tree_height(const Graph& g, Vertex rep, const std::vector<char>& removed,
                std::vector<int>& dist_buf) {
    BfsResult first = bfs_masked(g, rep, removed, dist_buf);
    BfsResult second = bfs_masked(g, first.farthest, removed, dist_buf);
    return (second.dist + 1) / 2;
}

}  // namespace

int component_height(const Graph& g) {
    if (g.n() == 0)
        throw NotATree("empty graph is not a tree component");
    std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    BfsResult reach = bfs_masked(g, 0, removed, dist);
    if (static_cast<int>(reach.visited.size()) != g.n())
        throw NotATree("graph is disconnected");
    if (g.m() != g.n() - 1)
        throw NotATree("component has a cycle");
    return tree_height(g, 0, removed, dist);
}

DeletionSetCertificate check_deletion_set(const Graph& g, const VertexSet& d, int h) {
    for (Vertex v : d) g.check_vertex(v);
    if (h < 0)
        throw InvalidInput("height bound must be nonnegative, got " + std::to_string(h));

    DeletionSetCertificate cert;
    cert.deleted = d;
    cert.height_bound = h;
    cert.ok = true;

    std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : d) removed[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);

    for (Vertex v = 0; v < g.n(); ++v) {
        if (removed[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
        BfsResult comp = bfs_masked(g, v, removed, dist);
        std::int64_t internal_degree_sum = 0;
        for (Vertex w : comp.visited) {
            seen[static_cast<std::size_t>(w)] = 1;
            for (Vertex x : g.neighbors(w))
                if (!removed[static_cast<std::size_t>(x)]) ++internal_degree_sum;
        }
        ComponentInfo info;
        info.representative = v;  // ascending scan: first hit is the smallest id
        info.is_tree =
            internal_degree_sum == 2 * (static_cast<std::int64_t>(comp.visited.size()) - 1);
        info.height = info.is_tree ? tree_height(g, v, removed, dist) : -1;
        if (!info.is_tree || info.height > h) cert.ok = false;
        cert.components.push_back(info);
    }
    return cert;
}

namespace {

bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < n - k + i) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// First (increasing size, then lexicographic) subset satisfying `good`.
// The empty search space cannot occur: the full vertex set always works
// for both searches below.
template <typename Pred>
VertexSet smallest_good_subset(const Graph& g, const ComputeCap& cap, int hard_limit,
                               const char* what, Pred good) {
    const int n = g.n();
    if (n > hard_limit)
        throw CapExceeded(std::string(what) + " search accepts at most " +
                          std::to_string(hard_limit) + " vertices, got " + std::to_string(n));
    if (n < 64 && (1ULL << n) > cap.max_candidates)
        throw CapExceeded(std::string(what) + " search would enumerate 2^" + std::to_string(n) +
                          " subsets, over the cap");

    for (int size = 0; size <= n; ++size) {
        std::vector<int> comb(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
        do {
            VertexSet d(std::vector<Vertex>(comb.begin(), comb.end()));
            if (good(d)) return d;
        } while (size > 0 && next_combination(comb, n));
    }
    throw std::logic_error("subset search fell through");
}

bool leaves_forest(const Graph& g, const VertexSet& d) {
    std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : d) removed[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (removed[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
        BfsResult comp = bfs_masked(g, v, removed, dist);
        std::int64_t internal_degree_sum = 0;
        for (Vertex w : comp.visited) {
            seen[static_cast<std::size_t>(w)] = 1;
            for (Vertex x : g.neighbors(w))
                if (!removed[static_cast<std::size_t>(x)]) ++internal_degree_sum;
        }
        if (internal_degree_sum != 2 * (static_cast<std::int64_t>(comp.visited.size()) - 1))
            return false;
    }
    return true;
}

}  // namespace

VertexSet min_deletion_set(const Graph& g, int h, const ComputeCap& cap) {
    if (h < 0)
        throw InvalidInput("height bound must be nonnegative, got " + std::to_string(h));
    return smallest_good_subset(g, cap, 20, "deletion-set",
                                [&](const VertexSet& d) { return check_deletion_set(g, d, h).ok; });
}

VertexSet fvs_exact(const Graph& g, const ComputeCap& cap) {
    return smallest_good_subset(g, cap, 20, "feedback-vertex-set",
                                [&](const VertexSet& d) { return leaves_forest(g, d); });
}

namespace {

using Mask = std::uint32_t;

// Splits the induced subgraph g[mask] into connected component masks.
std::vector<Mask> component_masks(const Graph& g, Mask mask) {
    std::vector<Mask> comps;
    Mask unseen = mask;
    while (unseen) {
        Mask comp = 0;
        Mask frontier = unseen & (~unseen + 1);  // lowest unseen bit
        while (frontier) {
            comp |= frontier;
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                for (Vertex w : g.neighbors(v)) {
                    Mask wb = Mask{1} << w;
                    if ((mask & wb) && !(comp & wb)) next |= wb;
                }
            }
            frontier = next & ~comp;
        }
        comps.push_back(comp);
        unseen &= ~comp;
    }
    return comps;
}

int td_rec(const Graph& g, Mask mask, std::vector<signed char>& memo) {
    if (mask == 0) return 0;
    signed char& slot = memo[mask];
    if (slot >= 0) return slot;

    int result;
    auto comps = component_masks(g, mask);
    if (comps.size() > 1) {
        result = 0;
        for (Mask c : comps) result = std::max(result, td_rec(g, c, memo));
    } else if (std::popcount(mask) == 1) {
        result = 1;
    } else {
        result = g.n() + 1;
        Mask m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            result = std::min(result, 1 + td_rec(g, mask & ~(Mask{1} << v), memo));
        }
    }
    slot = static_cast<signed char>(result);
    return result;
}

}  // namespace

int treedepth_exact(const Graph& g, const ComputeCap& cap) {
    const int n = g.n();
    if (n > 12)
        throw CapExceeded("treedepth recursion accepts at most 12 vertices, got " +
                          std::to_string(n));
    if (n == 0) return 0;
    if ((1ULL << n) > cap.max_candidates)
        throw CapExceeded("treedepth memo table of 2^" + std::to_string(n) +
                          " subsets is over the cap");
    std::vector<signed char> memo(std::size_t{1} << n, -1);
    return td_rec(g, (Mask{1} << n) - 1, memo);
}

}  // namespace oal
