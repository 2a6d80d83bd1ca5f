// Acceptance suite: runs every shipped correctness criterion end to end
// and prints one PASS/FAIL line per criterion. Exit code is the number
// of failed criteria. An optional numeric argument selects a single
// criterion.
//
//  1  subset-sum gadget equivalence over the exhaustive small family
//  2  planted forward witnesses: feasibility and exact size arithmetic
//  3  necessary-set collapse preserves answers, budget +1
//  4  necessary-vertex elimination preserves answers under default caps
//  5  forbidden-set elimination preserves answers, exact size growth
//  6  deletion-set certificates transfer along the whole chain
//  7  pipeline composition: sizes, budgets, speed, and the expected
//     cap refusal of the tower stage
//  8  solver vs. independent naive oracle on mixed random instances
//  9  parameter solvers vs. independent full-enumeration references
// 10  format round-trips, generator and solver determinism

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oal/gen.hpp"
#include "oal/io.hpp"
#include "oal/reduce.hpp"
#include "oal/solve.hpp"
#include "oal/structparams.hpp"

using namespace oal;

namespace {

struct CriterionFailure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw CriterionFailure{message};
}

int solver_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 4u));
}

// Enough headroom for the largest family members (~1.6e8 candidates);
// the default candidate cap is deliberately tighter than this family.
ComputeCap family_cap() {
    ComputeCap cap;
    cap.max_candidates = 1'000'000'000ULL;
    return cap;
}

// ---------------------------------------------------------------------
// criterion 1/2/6 share the exhaustive subset-sum family

struct FamilyEntry {
    MRSSInstance source;
    bool source_yes = false;
    std::vector<int> source_witness;
    AnnotatedInstance reduced;
    ReductionTrace trace;
};

// Every instance with dim in {1,2}, 1..2 vectors over entries {0,1,2},
// target entries in {1,2}, kprime in {1,2}, restricted to the
// construction's domain: no all-zero vector and every column sum at
// least max(target, 1).
std::vector<MRSSInstance> build_family_sources() {
    std::vector<MRSSInstance> sources;
    for (int dim = 1; dim <= 2; ++dim) {
        std::vector<std::vector<long long>> pool;
        int codes = 1;
        for (int i = 0; i < dim; ++i) codes *= 3;
        for (int code = 1; code < codes; ++code) {  // code 0 is the all-zero vector
            std::vector<long long> v;
            int c = code;
            for (int i = 0; i < dim; ++i) {
                v.push_back(c % 3);
                c /= 3;
            }
            pool.push_back(std::move(v));
        }
        for (int nvec = 1; nvec <= 2; ++nvec) {
            std::vector<std::vector<int>> tuples;
            if (nvec == 1) {
                for (std::size_t a = 0; a < pool.size(); ++a) tuples.push_back({static_cast<int>(a)});
            } else {
                for (std::size_t a = 0; a < pool.size(); ++a)
                    for (std::size_t b = 0; b < pool.size(); ++b)
                        tuples.push_back({static_cast<int>(a), static_cast<int>(b)});
            }
            int tcodes = 1;
            for (int i = 0; i < dim; ++i) tcodes *= 2;
            for (const auto& tuple : tuples)
                for (int tcode = 0; tcode < tcodes; ++tcode) {
                    std::vector<long long> target;
                    int c = tcode;
                    for (int i = 0; i < dim; ++i) {
                        target.push_back(1 + c % 2);
                        c /= 2;
                    }
                    for (int kprime = 1; kprime <= 2; ++kprime) {
                        MRSSInstance inst;
                        inst.dim = dim;
                        inst.kprime = kprime;
                        for (int idx : tuple) inst.vectors.push_back(pool[static_cast<std::size_t>(idx)]);
                        inst.target = target;
                        bool in_domain = true;
                        for (int i = 0; i < dim && in_domain; ++i) {
                            long long colsum = 0;
                            for (const auto& v : inst.vectors) colsum += v[static_cast<std::size_t>(i)];
                            if (colsum < std::max(inst.target[static_cast<std::size_t>(i)], 1LL))
                                in_domain = false;
                        }
                        if (in_domain) sources.push_back(std::move(inst));
                    }
                }
        }
    }
    return sources;
}

// Sources, their answers and their reductions are cheap and shared;
// solving the reduced instances is criterion 1's own (dominant) work.
const std::vector<FamilyEntry>& family() {
    static std::vector<FamilyEntry> entries = [] {
        std::vector<FamilyEntry> out;
        for (MRSSInstance& src : build_family_sources()) {
            FamilyEntry e;
            auto outcome = mrss_solve(src);
            e.source_yes = outcome.yes;
            if (outcome.yes) e.source_witness = *outcome.witness;
            auto [reduced, trace] = lemma2_reduce(src);
            e.reduced = std::move(reduced);
            e.trace = std::move(trace);
            e.source = std::move(src);
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

// ---------------------------------------------------------------------
// criteria 3-6 families: crafted deterministic instances

std::vector<AnnotatedInstance> collapse_family() {  // criterion 3
    std::vector<AnnotatedInstance> out;
    for (std::uint64_t seed = 1; out.size() < 50; ++seed) {
        auto inst = std::get<AnnotatedInstance>(gen_random(seed, "soafn-small"));
        if (inst.graph.n() <= 10 && inst.necessary.size() >= 2 && inst.necessary.size() <= 4)
            out.push_back(std::move(inst));
    }
    return out;
}

// Strong instances with one necessary vertex, |V| <= 6 and r <= 3,
// shaped so the eliminated instance stays under the default candidate
// cap: its free pool is free(input) + 4n <= 26.
std::vector<AnnotatedInstance> elimination_family() {  // criterion 4
    std::vector<AnnotatedInstance> out;
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&state](std::uint64_t bound) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state % bound;
    };
    while (out.size() < 30) {
        const int n = 4 + static_cast<int>(next(3));  // 4..6
        AnnotatedInstance inst;
        Graph g(n);
        // vertex 0 is the necessary vertex and vertex 1 a forbidden hub
        // with forbidden pendants after it; n = 6 gets three pendants so
        // that the eliminated instance's solution pool (which regains
        // the necessary vertex and adds the 4n tower) stays at <= 26,
        // under the default candidate cap
        const int pendants = n == 6 ? 3 : 1;
        std::vector<Vertex> forbidden{1};
        for (int p = 0; p < pendants; ++p) {
            g.add_edge(1, 2 + p);
            forbidden.push_back(2 + p);
        }
        const int first_free = 2 + pendants;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (v >= 2 && v < first_free) continue;  // keep pendants pendant
                if (u >= 2 && u < first_free) continue;
                if (g.has_edge(u, v)) continue;
                if (next(100) < 55) g.add_edge(u, v);
            }
        inst.graph = std::move(g);
        inst.forbidden = VertexSet(std::move(forbidden));
        inst.necessary = VertexSet{0};
        inst.budget = 1 + static_cast<int>(next(3));  // 1..3
        inst.kind = AllianceKind::strong_offensive;
        if (!validate_forbidden_structure(inst.graph, inst.forbidden)) continue;
        inst.validate();
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<AnnotatedInstance> tower_family() {  // criterion 5
    std::vector<AnnotatedInstance> out;
    std::uint64_t state = 0xc2b2ae3d27d4eb4fULL;
    auto next = [&state](std::uint64_t bound) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state % bound;
    };
    while (out.size() < 20) {
        const int n = 5 + static_cast<int>(next(4));  // 5..8
        Graph g(n);
        g.add_edge(0, 1);  // forbidden hub 0 with pendant 1
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (v == 1) continue;  // keep the pendant degree-one
                if (g.has_edge(u, v)) continue;
                if (next(100) < 45) g.add_edge(u, v);
            }
        AnnotatedInstance inst;
        inst.graph = std::move(g);
        inst.forbidden = VertexSet{0, 1};
        inst.budget = 1 + static_cast<int>(next(2));  // 1..2
        inst.kind = AllianceKind::offensive;
        if (!validate_forbidden_structure(inst.graph, inst.forbidden)) continue;
        inst.validate();
        out.push_back(std::move(inst));
    }
    return out;
}

// ---------------------------------------------------------------------
// independent references for criterion 9 (no shared machinery with the
// library: union-find, all-roots eccentricity, full-mask scans, vertex
// rankings)

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    bool unite(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[static_cast<std::size_t>(ru)] = rv;
        return true;
    }
};

bool ref_is_forest(const Graph& g, unsigned keep) {
    UnionFind uf(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
        if (!(keep >> u & 1)) continue;
        for (Vertex v : g.neighbors(u))
            if (v > u && (keep >> v & 1) && !uf.unite(u, v)) return false;
    }
    return true;
}

int ref_eccentricity(const Graph& g, unsigned keep, Vertex root) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    int ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
            if (!(keep >> w & 1) || dist[static_cast<std::size_t>(w)] >= 0) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            ecc = std::max(ecc, dist[static_cast<std::size_t>(w)]);
            queue.push_back(w);
        }
    }
    return ecc;
}

bool ref_bounded_forest(const Graph& g, unsigned keep, int h) {
    if (!ref_is_forest(g, keep)) return false;
    UnionFind uf(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
        if (!(keep >> u & 1)) continue;
        for (Vertex v : g.neighbors(u))
            if (v > u && (keep >> v & 1)) uf.unite(u, v);
    }
    for (Vertex rep = 0; rep < g.n(); ++rep) {
        if (!(keep >> rep & 1) || uf.find(rep) != rep) continue;
        int best = g.n();
        for (Vertex root = 0; root < g.n(); ++root)
            if ((keep >> root & 1) && uf.find(root) == rep)
                best = std::min(best, ref_eccentricity(g, keep, root));
        if (best > h) return false;
    }
    return true;
}

template <typename Pred>
VertexSet ref_smallest(const Graph& g, Pred good) {
    const unsigned full = (1u << g.n()) - 1;
    bool found = false;
    std::vector<Vertex> best;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (!good(full & ~mask)) continue;
        std::vector<Vertex> removed;
        for (Vertex v = 0; v < g.n(); ++v)
            if (mask >> v & 1) removed.push_back(v);
        if (!found || removed.size() < best.size() ||
            (removed.size() == best.size() &&
             std::lexicographical_compare(removed.begin(), removed.end(), best.begin(),
                                          best.end()))) {
            found = true;
            best = std::move(removed);
        }
    }
    require(found, "reference subset search found nothing");
    return VertexSet(best);
}

bool ranking_valid(const Graph& g, const std::vector<int>& rank, int d) {
    for (int r = 1; r <= d; ++r) {
        unsigned keep = 0;
        for (Vertex v = 0; v < g.n(); ++v)
            if (rank[static_cast<std::size_t>(v)] <= r) keep |= 1u << v;
        UnionFind uf(g.n());
        for (Vertex u = 0; u < g.n(); ++u) {
            if (!(keep >> u & 1)) continue;
            for (Vertex v : g.neighbors(u))
                if (v > u && (keep >> v & 1)) uf.unite(u, v);
        }
        std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
        for (Vertex v = 0; v < g.n(); ++v) {
            if (rank[static_cast<std::size_t>(v)] != r) continue;
            if (++count[static_cast<std::size_t>(uf.find(v))] > 1) return false;
        }
    }
    return true;
}

// treedepth via its vertex-ranking characterization
int ref_treedepth(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    for (int d = 1; d <= n; ++d) {
        std::vector<int> rank(static_cast<std::size_t>(n), 1);
        for (;;) {
            if (ranking_valid(g, rank, d)) return d;
            int pos = 0;
            while (pos < n && rank[static_cast<std::size_t>(pos)] == d) {
                rank[static_cast<std::size_t>(pos)] = 1;
                ++pos;
            }
            if (pos == n) break;
            ++rank[static_cast<std::size_t>(pos)];
        }
    }
    return n;
}

// ---------------------------------------------------------------------
// the criteria

std::string criterion1() {
    const ComputeCap cap = family_cap();
    const int threads = solver_threads();
    int yes = 0, no = 0;
    for (const auto& e : family()) {
        const bool reduced_yes = solve(e.reduced, cap, threads).yes;
        require(e.source_yes == reduced_yes,
                "answer flipped for source " + serialize_mrss(e.source));
        (e.source_yes ? yes : no) += 1;
    }
    std::ostringstream note;
    note << family().size() << " instances (" << yes << " yes, " << no << " no)";
    return note.str();
}

std::string criterion2() {
    int checked = 0;
    for (const auto& e : family()) {
        if (!e.source_yes) continue;
        ++checked;
        VertexSet witness = lemma2_witness(e.source, e.source_witness, e.reduced, e.trace);
        require(check_solution(e.reduced, witness),
                "planted witness infeasible for " + serialize_mrss(e.source));

        // |witness| = sum_i 2(colsum(i)-t(i)+1)
        //           + sum_{chosen} (2 max(s)+3) + sum_{rest} (2 max(s)+2)
        //           + 5n + 3, and it fits the budget
        long long expected = 0;
        for (int i = 0; i < e.source.dim; ++i) {
            long long colsum = 0;
            for (const auto& v : e.source.vectors) colsum += v[static_cast<std::size_t>(i)];
            expected += 2 * (colsum - e.source.target[static_cast<std::size_t>(i)] + 1);
        }
        for (int s = 0; s < e.source.n(); ++s) {
            long long mx = *std::max_element(e.source.vectors[static_cast<std::size_t>(s)].begin(),
                                             e.source.vectors[static_cast<std::size_t>(s)].end());
            bool chosen = std::find(e.source_witness.begin(), e.source_witness.end(), s) !=
                          e.source_witness.end();
            expected += chosen ? 2 * mx + 3 : 2 * mx + 2;
        }
        expected += 5LL * e.source.n() + 3;
        require(witness.size() == expected, "witness size formula diverged for " +
                                                serialize_mrss(e.source) + " got " +
                                                std::to_string(witness.size()) + " expected " +
                                                std::to_string(expected));
        require(witness.size() <= e.reduced.budget, "witness exceeds the budget");
    }
    return std::to_string(checked) + " planted witnesses checked";
}

std::string criterion3() {
    auto instances = collapse_family();
    int yes = 0, no = 0;
    for (const auto& inst : instances) {
        auto [reduced, trace] = corollary1_reduce(inst);
        require(trace.budget_out == trace.budget_in + 1, "budget must grow by exactly 1");
        require(reduced.necessary.size() == 1, "collapsed instance must have one necessary vertex");
        bool before = solve(inst).yes;
        bool after = solve(reduced).yes;
        require(before == after, "answer flipped by the collapse on " + serialize_instance(inst));
        (before ? yes : no) += 1;
    }
    std::ostringstream note;
    note << instances.size() << " instances (" << yes << " yes, " << no << " no)";
    return note.str();
}

std::string criterion4() {
    auto instances = elimination_family();
    int yes = 0, no = 0;
    for (const auto& inst : instances) {
        auto [reduced, trace] = lemma3_reduce(inst);
        const int n = inst.graph.n();
        require(trace.budget_out == trace.budget_in + 4 * n, "budget must grow by exactly 4n");
        require(validate_forbidden_structure(reduced.graph, reduced.forbidden),
                "output violates the forbidden-structure condition");
        require(reduced.graph.n() - reduced.forbidden.size() ==
                    inst.graph.n() - inst.forbidden.size() + 4 * n,
                "solution pool must grow by exactly the 4n tower vertices");
        // both sides under the default cap; a cap error here is a failure
        bool before = solve(inst).yes;
        bool after = solve(reduced).yes;
        require(before == after, "answer flipped by necessary-vertex elimination on " +
                                     serialize_instance(inst));
        (before ? yes : no) += 1;
    }
    std::ostringstream note;
    note << instances.size() << " instances (" << yes << " yes, " << no << " no)";
    return note.str();
}

std::string criterion5() {
    auto instances = tower_family();
    int yes = 0, no = 0;
    for (const auto& inst : instances) {
        auto [reduced, trace] = theorem1_reduce(inst);
        std::int64_t anchors = 0;
        for (Vertex v : inst.forbidden)
            if (inst.graph.degree(v) == 1) ++anchors;
        const std::int64_t r = inst.budget;
        require(reduced.graph.n() - inst.graph.n() == anchors * 4 * r * (4 * r + 1),
                "vertex increase must be exactly sum_u 4r(4r+1)");
        require(reduced.budget == inst.budget, "budget must be unchanged");
        bool before = solve(inst).yes;
        bool after = solve(reduced).yes;  // size-bounded: subsets of size <= r
        require(before == after,
                "answer flipped by forbidden-set elimination on " + serialize_instance(inst));
        (before ? yes : no) += 1;
    }
    std::ostringstream note;
    note << instances.size() << " instances (" << yes << " yes, " << no << " no)";
    return note.str();
}

std::string criterion6() {
    // subset-sum gadget outputs: removing the coordinate vertices and
    // the hub leaves trees of height <= 5
    for (const auto& e : family()) {
        std::vector<Vertex> d;
        for (int i = 1; i <= e.source.dim; ++i) d.push_back(e.trace.role("u_" + std::to_string(i)));
        d.push_back(e.trace.role("a"));
        auto cert = check_deletion_set(e.reduced.graph, VertexSet(d), 5);
        require(cert.ok, "coordinate-plus-hub deletion set failed on " + serialize_mrss(e.source));
        require(static_cast<int>(d.size()) == e.source.dim + 1, "deletion set must have k+1 vertices");
    }
    // necessary-vertex elimination: the input's height-5 set plus the
    // two new hubs certifies height 5 in the output
    for (const auto& inst : elimination_family()) {
        VertexSet h = min_deletion_set(inst.graph, 5);
        require(check_deletion_set(inst.graph, h, 5).ok, "input certificate failed");
        auto [reduced, trace] = lemma3_reduce(inst);
        VertexSet grown = h;
        grown.insert(trace.role("t_box"));
        grown.insert(trace.role("x_box"));
        require(check_deletion_set(reduced.graph, grown, 5).ok,
                "input set plus the two hubs must certify height 5 on the output");
    }
    // forbidden-set elimination: the input's height-5 set still
    // certifies height 7 on the output (towers add two levels)
    for (const auto& inst : tower_family()) {
        VertexSet h = min_deletion_set(inst.graph, 5);
        auto [reduced, trace] = theorem1_reduce(inst);
        require(check_deletion_set(reduced.graph, h, 7).ok,
                "input set must certify height 7 on the tower output");
    }
    return "certificates transfer across all three gadget stages";
}

std::string criterion7() {
    MRSSInstance m1;
    m1.dim = 1;
    m1.kprime = 1;
    m1.vectors = {{1}};
    m1.target = {1};

    const auto start = std::chrono::steady_clock::now();

    // staged run, checking every consumer precondition along the way
    auto [after2, t2] = lemma2_reduce(m1);
    require(after2.kind == AllianceKind::strong_offensive && !after2.necessary.empty(),
            "stage 1 output violates the collapse precondition");
    auto [after_c1, tc1] = corollary1_reduce(after2);
    require(after_c1.necessary.size() == 1 &&
                validate_forbidden_structure(after_c1.graph, after_c1.forbidden),
            "stage 2 output violates the elimination precondition");
    auto [after3, t3] = lemma3_reduce(after_c1);
    require(after3.kind == AllianceKind::offensive && after3.necessary.empty() &&
                validate_forbidden_structure(after3.graph, after3.forbidden),
            "stage 3 output violates the tower precondition");

    // the composed pipeline agrees with the staged run
    auto [piped, traces] = pipeline_reduce(m1, ReductionStep::lemma3);
    require(piped == after3, "pipeline output differs from the staged chain");
    require(traces.size() == 3, "pipeline must emit one trace per stage");
    require(piped.graph.n() == 412, "pipeline output must have exactly 412 vertices, got " +
                                        std::to_string(piped.graph.n()));
    require(piped.budget == 180,
            "pipeline budget must be exactly 180, got " + std::to_string(piped.budget));

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(elapsed < 1.0,
            "pipeline construction took " + std::to_string(elapsed) + "s, the bound is 1s");

    // the tower stage must refuse under the default vertex cap
    bool refused = false;
    try {
        pipeline_reduce(m1, ReductionStep::theorem1);
    } catch (const CapExceeded&) {
        refused = true;
    }
    require(refused, "the tower stage must exceed the default vertex cap");

    std::ostringstream note;
    note << "412 vertices, budget 180, " << elapsed << "s; tower stage refused as documented";
    return note.str();
}

std::string criterion8() {
    const int threads = solver_threads();
    int yes = 0, no = 0;
    for (int i = 0; i < 500; ++i) {
        auto seed = static_cast<std::uint64_t>(40'000 + i);
        auto gen = gen_random(seed, i % 2 == 0 ? "plain-small" : "annotated-small");
        const auto& inst = std::get<AnnotatedInstance>(gen);
        auto fast = solve(inst, {}, threads);
        auto oracle = naive_solve(inst);
        require(fast.yes == oracle.yes, "solver disagrees with the naive oracle on seed " +
                                            std::to_string(seed) + ":\n" +
                                            serialize_instance(inst));
        if (fast.yes) {
            require(*fast.witness == *oracle.witness,
                    "witness is not the order-minimal one on seed " + std::to_string(seed));
            require(check_solution(inst, *fast.witness), "witness fails check_solution");
            ++yes;
        } else {
            ++no;
        }
    }
    std::ostringstream note;
    note << "500 instances (" << yes << " yes, " << no << " no), witnesses identical";
    return note.str();
}

std::string criterion9() {
    // random edge sets over 1..7 vertices
    std::uint64_t state = 0x243f6a8885a308d3ULL;
    auto next = [&state](std::uint64_t bound) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state % bound;
    };
    int graphs = 0;
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 1 + static_cast<int>(next(7));
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (next(100) < 50) g.add_edge(u, v);
        ++graphs;

        require(fvs_exact(g) ==
                    ref_smallest(g, [&](unsigned keep) { return ref_is_forest(g, keep); }),
                "feedback vertex set diverged from the reference");
        for (int h : {0, 1, 2, 3})
            require(min_deletion_set(g, h) ==
                        ref_smallest(g,
                                     [&](unsigned keep) { return ref_bounded_forest(g, keep, h); }),
                    "bounded-height deletion set diverged from the reference");
        require(treedepth_exact(g) == ref_treedepth(g),
                "treedepth diverged from the vertex-ranking reference");
    }

    // known closed forms
    const int path_td[] = {1, 2, 2, 3, 3, 3, 3};  // td of P_1..P_7
    for (int n = 1; n <= 7; ++n) {
        Graph p(n);
        for (int v = 0; v + 1 < n; ++v) p.add_edge(v, v + 1);
        require(treedepth_exact(p) == path_td[n - 1], "td(P_" + std::to_string(n) + ") wrong");
    }
    for (int n = 1; n <= 5; ++n) {
        Graph k(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) k.add_edge(u, v);
        require(treedepth_exact(k) == n, "td(K_" + std::to_string(n) + ") wrong");
    }
    return std::to_string(graphs) + " random graphs vs. references, plus path/clique closed forms";
}

std::string criterion10() {
    // format round-trips
    for (std::uint64_t seed = 0; seed < 800; ++seed) {
        const char* profile = seed % 3 == 0   ? "plain-small"
                              : seed % 3 == 1 ? "annotated-small"
                                              : "soafn-small";
        const auto inst = std::get<AnnotatedInstance>(gen_random(seed, profile));
        require(parse_instance(serialize_instance(inst)) == inst,
                "instance round-trip failed at seed " + std::to_string(seed));
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = std::get<MRSSInstance>(gen_random(seed, "mrss-small"));
        require(parse_mrss(serialize_mrss(inst)) == inst,
                "mrss round-trip failed at seed " + std::to_string(seed));
    }

    // generator determinism
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        for (const char* profile : {"plain-small", "annotated-small", "soafn-small"})
            require(std::get<AnnotatedInstance>(gen_random(seed, profile)) ==
                        std::get<AnnotatedInstance>(gen_random(seed, profile)),
                    "generator output differs across identical seeds");

    // solver determinism across repeats and worker counts
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto inst = std::get<AnnotatedInstance>(gen_random(seed, "annotated-small"));
        auto once = solve(inst, {}, 1);
        auto again = solve(inst, {}, 1);
        auto wide = solve(inst, {}, 4);
        require(once.yes == again.yes && once.yes == wide.yes,
                "answer differs across runs at seed " + std::to_string(seed));
        require(once.explored == again.explored, "single-threaded explored count must be stable");
        if (once.yes)
            require(*once.witness == *again.witness && *once.witness == *wide.witness,
                    "witness differs across worker counts at seed " + std::to_string(seed));
    }
    return "1000 round-trips, 300 generator replays, 60 solver replays with 1 and 4 workers";
}

struct Criterion {
    int id;
    const char* name;
    std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "subset-sum gadget equivalence, exhaustive family", criterion1},
        {2, "planted forward witnesses: feasibility and size arithmetic", criterion2},
        {3, "necessary-set collapse preserves answers, budget +1", criterion3},
        {4, "necessary-vertex elimination preserves answers under default caps", criterion4},
        {5, "forbidden-set elimination preserves answers, exact growth", criterion5},
        {6, "deletion-set certificates transfer along the chain", criterion6},
        {7, "pipeline composition: sizes, budget, speed, cap refusal", criterion7},
        {8, "solver agrees with the independent naive oracle", criterion8},
        {9, "parameter solvers match independent references", criterion9},
        {10, "round-trips and determinism", criterion10},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        try {
            std::string note = c.run();
            std::cout << "[PASS] criterion " << c.id << ": " << c.name;
            if (!note.empty()) std::cout << " -- " << note;
            std::cout << std::endl;
        } catch (const CriterionFailure& f) {
            ++failures;
            std::cout << "[FAIL] criterion " << c.id << ": " << c.name << "\n        " << f.message
                      << std::endl;
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << c.id << ": " << c.name
                      << "\n        unexpected error: " << e.what() << std::endl;
        }
    }
    return failures;
}
