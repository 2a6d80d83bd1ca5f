#pragma once

#include <random>
#include <vector>

#include "oal/alliance.hpp"
#include "oal/graph.hpp"

// Small deterministic helpers shared by the test files.
namespace testutil {

inline oal::Graph path(int n) {
    oal::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline oal::Graph cycle(int n) {
    oal::Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline oal::Graph complete(int n) {
    oal::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// center 0, leaves 1..n
inline oal::Graph star(int leaves) {
    oal::Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }
    int irange(int lo, int hi) {
        return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool chance(int percent) { return next(100) < static_cast<std::uint64_t>(percent); }

private:
    std::mt19937_64 eng_;
};

inline oal::Graph random_graph(Rng& rng, int n, int edge_percent) {
    oal::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent)) g.add_edge(u, v);
    return g;
}

inline oal::VertexSet random_subset(Rng& rng, int n, int member_percent) {
    std::vector<oal::Vertex> ids;
    for (int v = 0; v < n; ++v)
        if (rng.chance(member_percent)) ids.push_back(v);
    return oal::VertexSet(std::move(ids));
}

}  // namespace testutil
