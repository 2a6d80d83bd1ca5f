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

#include "oal/gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace oal {

namespace {

// mt19937_64 consumed through fixed arithmetic only, so outputs are
// identical across platforms and standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, bound)
    std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }
    int irange(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool chance(int percent) { return next(100) < static_cast<std::uint64_t>(percent); }

private:
    std::mt19937_64 eng_;
};

Graph random_graph(Rng& rng, int n, int edge_percent) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent)) g.add_edge(u, v);
    return g;
}

AllianceKind random_kind(Rng& rng) {
    switch (rng.irange(0, 2)) {
        case 0: return AllianceKind::offensive;
        case 1: return AllianceKind::strong_offensive;
        default: return AllianceKind::defensive;
    }
}

AnnotatedInstance gen_plain(Rng& rng) {
    AnnotatedInstance inst;
    const int n = rng.irange(4, 12);
    inst.graph = random_graph(rng, n, 30);
    inst.kind = random_kind(rng);
    inst.cardinality = rng.chance(50) ? CardinalityMode::at_most : CardinalityMode::exact;
    inst.budget = rng.irange(1, 3);
    inst.validate();
    return inst;
}

// Forbidden vertices are planted as hub+pendant pairs: each chosen hub
// gets a fresh pendant neighbor, both forbidden. A degree-one hub is
// then adjacent to its forbidden pendant and the pendant to its
// forbidden hub; a higher-degree hub has the pendant as its degree-one
// forbidden neighbor. Either way the structural condition holds.
AnnotatedInstance gen_annotated(Rng& rng, bool strong_multi_necessary) {
    AnnotatedInstance inst;
    const int base = strong_multi_necessary ? rng.irange(5, 8) : rng.irange(4, 9);
    const int hubs = strong_multi_necessary ? 1 : rng.irange(1, 2);
    Graph g = random_graph(rng, base, 35);

    Graph grown(base + hubs);
    for (Vertex u = 0; u < base; ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) grown.add_edge(u, v);

    std::vector<Vertex> forbidden;
    VertexSet taken;
    for (int i = 0; i < hubs; ++i) {
        Vertex hub = rng.irange(0, base - 1);
        while (taken.contains(hub)) hub = rng.irange(0, base - 1);
        taken.insert(hub);
        Vertex pendant = base + i;
        grown.add_edge(hub, pendant);
        forbidden.push_back(hub);
        forbidden.push_back(pendant);
    }
    inst.graph = std::move(grown);
    inst.forbidden = VertexSet(std::move(forbidden));

    std::vector<Vertex> pool;
    for (Vertex v = 0; v < base; ++v)
        if (!inst.forbidden.contains(v)) pool.push_back(v);

    const int want = strong_multi_necessary ? rng.irange(2, 4)
                                            : rng.irange(0, std::min<int>(2, static_cast<int>(pool.size())));
    std::vector<Vertex> necessary;
    for (int i = 0; i < want && !pool.empty(); ++i) {
        std::size_t idx = static_cast<std::size_t>(rng.next(pool.size()));
        necessary.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    inst.necessary = VertexSet(std::move(necessary));

    if (strong_multi_necessary) {
        inst.kind = AllianceKind::strong_offensive;
        inst.cardinality = CardinalityMode::at_most;
        inst.budget = inst.necessary.size() + rng.irange(0, 3);
    } else {
        inst.kind = random_kind(rng);
        inst.cardinality = rng.chance(50) ? CardinalityMode::at_most : CardinalityMode::exact;
        inst.budget = std::max(1, inst.necessary.size() + rng.irange(0, 2));
    }
    inst.validate();
    if (!validate_forbidden_structure(inst.graph, inst.forbidden))
        throw std::logic_error("generator postcondition failed: forbidden structure invalid");
    return inst;
}

MRSSInstance gen_mrss(Rng& rng) {
    // resample until every column sum reaches max(target, 1) and no
    // vector is all-zero; converges fast at these sizes
    for (;;) {
        MRSSInstance inst;
        inst.dim = rng.irange(1, 2);
        inst.kprime = rng.irange(1, 2);
        const int nvec = rng.irange(1, 2);
        for (int s = 0; s < nvec; ++s) {
            std::vector<long long> vec;
            for (int i = 0; i < inst.dim; ++i) vec.push_back(rng.irange(0, 2));
            inst.vectors.push_back(std::move(vec));
        }
        for (int i = 0; i < inst.dim; ++i) inst.target.push_back(rng.irange(1, 2));

        bool in_domain = true;
        for (int i = 0; i < inst.dim && in_domain; ++i) {
            long long colsum = 0;
            for (const auto& vec : inst.vectors) colsum += vec[static_cast<std::size_t>(i)];
            if (colsum < std::max(inst.target[static_cast<std::size_t>(i)], 1LL))
                in_domain = false;
        }
        for (const auto& vec : inst.vectors)
            if (*std::max_element(vec.begin(), vec.end()) < 1) in_domain = false;
        if (in_domain) {
            inst.validate();
            return inst;
        }
    }
}

}  // namespace

GeneratedInstance gen_random(std::uint64_t seed, const std::string& profile) {
    Rng rng(seed);
    if (profile == "plain-small") return gen_plain(rng);
    if (profile == "annotated-small") return gen_annotated(rng, false);
    if (profile == "soafn-small") return gen_annotated(rng, true);
    if (profile == "mrss-small") return gen_mrss(rng);
    throw InvalidInput("unknown generator profile '" + profile + "'");
}

}  // namespace oal
