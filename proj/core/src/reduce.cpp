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

#include "oal/reduce.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace oal {

namespace {

std::string fmt_role(const std::string& base, std::initializer_list<std::pair<const char*, int>> kv) {
    std::string out = base + "[";
    bool first = true;
    for (const auto& [key, value] : kv) {
        if (!first) out += ",";
        first = false;
        out += key;
        out += "=";
        out += std::to_string(value);
    }
    out += "]";
    return out;
}

// Accumulates fresh vertices with their role names, then materializes
// the Graph. Ids are dense, allocated in call order; that order is the
// canonical one the trace documents.
class GadgetBuilder {
public:
    explicit GadgetBuilder(const Graph* base = nullptr) {
        if (base) {
            next_ = base->n();
            for (Vertex u = 0; u < base->n(); ++u)
                for (Vertex v : base->neighbors(u))
                    if (u < v) edges_.emplace_back(u, v);
        }
    }

    Vertex add(std::string role) {
        roles_.emplace_back(std::move(role), next_);
        return next_++;
    }

    void connect(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

    Graph build() const {
        Graph g(next_);
        for (auto [u, v] : edges_) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return next_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    std::vector<std::pair<std::string, Vertex>> take_roles() { return std::move(roles_); }

private:
    int next_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::pair<std::string, Vertex>> roles_;
};

void check_size_formulas(const ReductionTrace& trace) {
    if (trace.expected_vertices != trace.actual_vertices ||
        trace.expected_edges != trace.actual_edges)
        throw std::logic_error(std::string("size closed form diverged for step ") +
                               to_string(trace.step) + ": vertices " +
                               std::to_string(trace.expected_vertices) + " vs " +
                               std::to_string(trace.actual_vertices) + ", edges " +
                               std::to_string(trace.expected_edges) + " vs " +
                               std::to_string(trace.actual_edges));
}

int checked_budget(std::int64_t value) {
    if (value < 1 || value > std::numeric_limits<int>::max())
        throw CapExceeded("budget " + std::to_string(value) + " out of range");
    return static_cast<int>(value);
}

}  // namespace

const char* to_string(ReductionStep step) {
    switch (step) {
        case ReductionStep::lemma2: return "lemma2";
        case ReductionStep::corollary1: return "corollary1";
        case ReductionStep::lemma3: return "lemma3";
        case ReductionStep::theorem1: return "theorem1";
    }
    return "?";
}

bool ReductionTrace::has_role(const std::string& name) const {
    for (const auto& [role_name, _] : roles)
        if (role_name == name) return true;
    return false;
}

Vertex ReductionTrace::role(const std::string& name) const {
    for (const auto& [role_name, id] : roles)
        if (role_name == name) return id;
    throw InvalidInput("no role named '" + name + "' in trace");
}

std::pair<AnnotatedInstance, ReductionTrace> lemma2_reduce(const MRSSInstance& inst) {
    inst.validate();
    const int dim = inst.dim;
    const int nvec = inst.n();

    std::vector<long long> colsum(static_cast<std::size_t>(dim), 0);
    for (const auto& vec : inst.vectors)
        for (int i = 0; i < dim; ++i) colsum[static_cast<std::size_t>(i)] += vec[static_cast<std::size_t>(i)];
    for (int i = 0; i < dim; ++i) {
        const long long cs = colsum[static_cast<std::size_t>(i)];
        const long long ti = inst.target[static_cast<std::size_t>(i)];
        if (cs < ti)
            throw UnrepresentableInstance(
                "coordinate " + std::to_string(i + 1) + " sums to " + std::to_string(cs) +
                " < target " + std::to_string(ti) +
                "; the source is trivially no, answer it directly");
        if (cs < 1)
            throw UnrepresentableInstance("coordinate " + std::to_string(i + 1) +
                                          " is all-zero; drop it before reducing");
    }

    std::vector<long long> vecmax(static_cast<std::size_t>(nvec), 0);
    for (int s = 0; s < nvec; ++s) {
        vecmax[static_cast<std::size_t>(s)] =
            *std::max_element(inst.vectors[static_cast<std::size_t>(s)].begin(),
                              inst.vectors[static_cast<std::size_t>(s)].end());
        // An all-zero vector never helps the source, but its tree gadget
        // has a C bank of only two vertices, which starves y_s on the
        // unchosen side and can flip a yes source to a no output
        // (witness: vectors {(0),(1)}, target (1), kprime 1). Zero
        // vectors must be dropped by the caller.
        if (vecmax[static_cast<std::size_t>(s)] < 1)
            throw UnrepresentableInstance("vector " + std::to_string(s + 1) +
                                          " is all-zero; drop it before reducing");
    }

    // closed forms, computed up front so absurd inputs fail before any
    // allocation: |V| = k + 5 + sum_s(6 max(s)+15) + sum_i colsum(i)
    //                 + sum_i(2 colsum(i) - 2 t(i) + 2)
    //             |E| = sum_s(10 max(s)+18) + 4 + sum_i(4 colsum(i) - 2 t(i) + 2)
    std::int64_t expected_v = dim + 5, expected_e = 4;
    for (int s = 0; s < nvec; ++s) {
        expected_v += 6 * vecmax[static_cast<std::size_t>(s)] + 15;
        expected_e += 10 * vecmax[static_cast<std::size_t>(s)] + 18;
    }
    for (int i = 0; i < dim; ++i) {
        const long long cs = colsum[static_cast<std::size_t>(i)];
        const long long ti = inst.target[static_cast<std::size_t>(i)];
        expected_v += 3 * cs - 2 * ti + 2;
        expected_e += 4 * cs - 2 * ti + 2;
    }
    if (expected_v > std::numeric_limits<int>::max() / 2)
        throw CapExceeded("construction would need " + std::to_string(expected_v) + " vertices");

    GadgetBuilder b;
    std::vector<Vertex> forbidden, necessary;

    // the k coordinate vertices u_i
    std::vector<Vertex> u(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        u[static_cast<std::size_t>(i)] = b.add("u_" + std::to_string(i + 1));
        forbidden.push_back(u[static_cast<std::size_t>(i)]);
    }

    // one tree per vector: rows of (a_box_i -- {b_box_i, a_i, b_i}) hang
    // off x_s, the z branch carries the necessary payload, and y_s fans
    // out to the C bank
    std::vector<std::vector<Vertex>> a_of(static_cast<std::size_t>(nvec)),
        b_of(static_cast<std::size_t>(nvec)), c_of(static_cast<std::size_t>(nvec));
    std::vector<Vertex> x_of(static_cast<std::size_t>(nvec));
    for (int s = 0; s < nvec; ++s) {
        const int mx = static_cast<int>(vecmax[static_cast<std::size_t>(s)]);
        const int rows = mx + 1;
        std::vector<Vertex> as, bs, abox, bbox, cs, znec;
        for (int i = 1; i <= rows; ++i) as.push_back(b.add(fmt_role("a", {{"s", s + 1}, {"i", i}})));
        for (int i = 1; i <= rows; ++i) bs.push_back(b.add(fmt_role("b", {{"s", s + 1}, {"i", i}})));
        for (int i = 1; i <= rows; ++i)
            abox.push_back(b.add(fmt_role("a_box", {{"s", s + 1}, {"i", i}})));
        for (int i = 1; i <= rows; ++i)
            bbox.push_back(b.add(fmt_role("b_box", {{"s", s + 1}, {"i", i}})));
        for (int i = 1; i <= 2 * mx + 2; ++i)
            cs.push_back(b.add(fmt_role("c", {{"s", s + 1}, {"i", i}})));
        for (int i = 1; i <= 5; ++i)
            znec.push_back(b.add(fmt_role("z_nec", {{"s", s + 1}, {"i", i}})));
        Vertex zbox = b.add(fmt_role("z_box", {{"s", s + 1}}));
        Vertex xs = b.add("x_s[" + std::to_string(s + 1) + "]");
        Vertex ys = b.add("y_s[" + std::to_string(s + 1) + "]");
        Vertex zs = b.add("z_s[" + std::to_string(s + 1) + "]");

        for (int i = 0; i < rows; ++i) {
            b.connect(abox[static_cast<std::size_t>(i)], bbox[static_cast<std::size_t>(i)]);
            b.connect(abox[static_cast<std::size_t>(i)], as[static_cast<std::size_t>(i)]);
            b.connect(abox[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(i)]);
            b.connect(xs, abox[static_cast<std::size_t>(i)]);
        }
        for (Vertex z : znec) b.connect(zs, z);
        b.connect(zs, zbox);
        b.connect(xs, zs);
        b.connect(zs, ys);
        for (Vertex c : cs) b.connect(ys, c);

        for (Vertex v : abox) forbidden.push_back(v);
        for (Vertex v : bbox) forbidden.push_back(v);
        forbidden.push_back(zs);
        forbidden.push_back(zbox);
        for (Vertex v : znec) necessary.push_back(v);

        a_of[static_cast<std::size_t>(s)] = std::move(as);
        b_of[static_cast<std::size_t>(s)] = std::move(bs);
        c_of[static_cast<std::size_t>(s)] = std::move(cs);
        x_of[static_cast<std::size_t>(s)] = xs;
    }

    // the hub a with its three necessary companions and one forbidden one
    Vertex hub = b.add("a");
    forbidden.push_back(hub);
    for (int j = 1; j <= 3; ++j) {
        Vertex v = b.add("a_nec[" + std::to_string(j) + "]");
        necessary.push_back(v);
        b.connect(hub, v);
    }
    Vertex hub_box = b.add("a_box");
    forbidden.push_back(hub_box);
    b.connect(hub, hub_box);

    // u_i attaches to the first s(i) vertices of each A_s, and the hub
    // to every A_s, B_s and C_s vertex
    for (int i = 0; i < dim; ++i)
        for (int s = 0; s < nvec; ++s) {
            const long long si = inst.vectors[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
            for (long long j = 0; j < si; ++j)
                b.connect(u[static_cast<std::size_t>(i)],
                          a_of[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]);
        }
    for (int s = 0; s < nvec; ++s) {
        for (Vertex v : a_of[static_cast<std::size_t>(s)]) b.connect(hub, v);
        for (Vertex v : b_of[static_cast<std::size_t>(s)]) b.connect(hub, v);
        for (Vertex v : c_of[static_cast<std::size_t>(s)]) b.connect(hub, v);
    }

    // pendant banks on each u_i: colsum(i) forbidden, 2*colsum(i)-2t(i)+2 necessary
    for (int i = 0; i < dim; ++i) {
        const long long cs = colsum[static_cast<std::size_t>(i)];
        const long long ti = inst.target[static_cast<std::size_t>(i)];
        for (long long j = 1; j <= cs; ++j) {
            Vertex v = b.add(fmt_role("u_box", {{"i", i + 1}, {"j", static_cast<int>(j)}}));
            forbidden.push_back(v);
            b.connect(u[static_cast<std::size_t>(i)], v);
        }
        for (long long j = 1; j <= 2 * cs - 2 * ti + 2; ++j) {
            Vertex v = b.add(fmt_role("u_nec", {{"i", i + 1}, {"j", static_cast<int>(j)}}));
            necessary.push_back(v);
            b.connect(u[static_cast<std::size_t>(i)], v);
        }
    }

    // budget: sum_i 2(colsum(i)-t(i)+1) + sum_s 2(max(s)+1) + 5n + 3 + k'
    std::int64_t budget = 0;
    for (int i = 0; i < dim; ++i)
        budget += 2 * (colsum[static_cast<std::size_t>(i)] - inst.target[static_cast<std::size_t>(i)] + 1);
    for (int s = 0; s < nvec; ++s) budget += 2 * (vecmax[static_cast<std::size_t>(s)] + 1);
    budget += 5LL * nvec + 3 + inst.kprime;

    ReductionTrace trace;
    trace.step = ReductionStep::lemma2;
    trace.budget_in = inst.kprime;
    trace.budget_out = checked_budget(budget);
    trace.expected_vertices = expected_v;
    trace.actual_vertices = b.vertex_count();
    trace.expected_edges = expected_e;
    trace.actual_edges = b.edge_count();

    AnnotatedInstance out;
    out.graph = b.build();
    out.forbidden = VertexSet(std::move(forbidden));
    out.necessary = VertexSet(std::move(necessary));
    out.budget = trace.budget_out;
    out.kind = AllianceKind::strong_offensive;
    out.cardinality = CardinalityMode::at_most;
    out.validate();

    trace.roles = b.take_roles();
    check_size_formulas(trace);
    return {std::move(out), std::move(trace)};
}

VertexSet lemma2_witness(const MRSSInstance& inst, const std::vector<int>& chosen,
                         const AnnotatedInstance& reduced, const ReductionTrace& trace) {
    if (trace.step != ReductionStep::lemma2)
        throw InvalidInput("witness construction needs a lemma2 trace");
    std::vector<char> in_chosen(static_cast<std::size_t>(inst.n()), 0);
    for (int s : chosen) {
        if (s < 0 || s >= inst.n())
            throw InvalidInput("chosen vector index " + std::to_string(s) + " out of range");
        in_chosen[static_cast<std::size_t>(s)] = 1;
    }

    std::vector<Vertex> ids(reduced.necessary.ids());
    for (int s = 0; s < inst.n(); ++s) {
        const long long mx = *std::max_element(inst.vectors[static_cast<std::size_t>(s)].begin(),
                                               inst.vectors[static_cast<std::size_t>(s)].end());
        if (in_chosen[static_cast<std::size_t>(s)]) {
            for (int i = 1; i <= mx + 1; ++i) {
                ids.push_back(trace.role(fmt_role("a", {{"s", s + 1}, {"i", i}})));
                ids.push_back(trace.role(fmt_role("b", {{"s", s + 1}, {"i", i}})));
            }
            ids.push_back(trace.role("x_s[" + std::to_string(s + 1) + "]"));
        } else {
            for (int i = 1; i <= 2 * mx + 2; ++i)
                ids.push_back(trace.role(fmt_role("c", {{"s", s + 1}, {"i", i}})));
        }
    }
    return VertexSet(std::move(ids));
}

std::pair<AnnotatedInstance, ReductionTrace> corollary1_reduce(const AnnotatedInstance& inst) {
    inst.validate();
    if (inst.kind != AllianceKind::strong_offensive)
        throw InvalidInput("necessary-set collapse applies to the strong kind only");
    const int ell = inst.necessary.size();
    if (ell == 0)
        throw InvalidInput("instance has no necessary vertices; nothing to collapse");

    if (ell == 1) {
        ReductionTrace trace;
        trace.step = ReductionStep::corollary1;
        trace.budget_in = trace.budget_out = inst.budget;
        trace.expected_vertices = trace.actual_vertices = inst.graph.n();
        trace.expected_edges = trace.actual_edges = inst.graph.m();
        return {inst, std::move(trace)};
    }

    GadgetBuilder b(&inst.graph);
    std::vector<Vertex> forbidden(inst.forbidden.ids());

    Vertex x = b.add("x");
    forbidden.push_back(x);
    Vertex y = b.add("y");
    b.connect(x, y);
    for (Vertex v : inst.necessary) b.connect(x, v);
    for (int j = 1; j <= ell - 1; ++j) {
        Vertex p = b.add("x_box[" + std::to_string(j) + "]");
        forbidden.push_back(p);
        b.connect(x, p);
    }

    ReductionTrace trace;
    trace.step = ReductionStep::corollary1;
    trace.budget_in = inst.budget;
    trace.budget_out = checked_budget(static_cast<std::int64_t>(inst.budget) + 1);
    trace.expected_vertices = static_cast<std::int64_t>(inst.graph.n()) + ell + 1;
    trace.actual_vertices = b.vertex_count();
    trace.expected_edges = inst.graph.m() + 2LL * ell;
    trace.actual_edges = b.edge_count();

    AnnotatedInstance out;
    out.graph = b.build();
    out.forbidden = VertexSet(std::move(forbidden));
    out.necessary = VertexSet{y};
    out.budget = trace.budget_out;
    out.kind = inst.kind;
    out.cardinality = inst.cardinality;
    out.validate();

    trace.roles = b.take_roles();
    check_size_formulas(trace);
    return {std::move(out), std::move(trace)};
}

std::pair<AnnotatedInstance, ReductionTrace> lemma3_reduce(const AnnotatedInstance& inst) {
    inst.validate();
    if (inst.kind != AllianceKind::strong_offensive)
        throw InvalidInput("necessary-vertex elimination applies to the strong kind only");
    if (inst.necessary.size() != 1)
        throw InvalidInput("necessary-vertex elimination needs exactly one necessary vertex, got " +
                           std::to_string(inst.necessary.size()));
    if (!validate_forbidden_structure(inst.graph, inst.forbidden))
        throw InvalidInput("input violates the forbidden-structure condition");

    const int n = inst.graph.n();
    const Vertex x = inst.necessary.ids()[0];

    // F: the degree-one forbidden vertices of the input. The x_box hub
    // attaches to everything else, which is what drops the required
    // margin from +2 to +1 without ever feeding a solution vertex.
    VertexSet degree_one_forbidden;
    for (Vertex v : inst.forbidden)
        if (inst.graph.degree(v) == 1) degree_one_forbidden.insert(v);

    GadgetBuilder b(&inst.graph);
    std::vector<Vertex> forbidden(inst.forbidden.ids());

    Vertex t_box = b.add("t_box");
    forbidden.push_back(t_box);
    Vertex x_box = b.add("x_box");
    forbidden.push_back(x_box);
    for (int j = 1; j <= 4 * n; ++j) {
        Vertex p = b.add("t_box_pendant[" + std::to_string(j) + "]");
        forbidden.push_back(p);
        b.connect(t_box, p);
    }
    for (int j = 1; j <= n; ++j) {
        Vertex p = b.add("x_box_pendant[" + std::to_string(j) + "]");
        forbidden.push_back(p);
        b.connect(x_box, p);
    }
    for (int j = 1; j <= 4 * n; ++j) {
        Vertex tj = b.add("T[" + std::to_string(j) + "]");
        b.connect(t_box, tj);
        b.connect(x_box, tj);
    }
    b.connect(x, t_box);
    for (Vertex v = 0; v < n; ++v)
        if (!degree_one_forbidden.contains(v)) b.connect(x_box, v);

    ReductionTrace trace;
    trace.step = ReductionStep::lemma3;
    trace.budget_in = inst.budget;
    trace.budget_out = checked_budget(static_cast<std::int64_t>(inst.budget) + 4LL * n);
    trace.expected_vertices = static_cast<std::int64_t>(n) + 9LL * n + 2;
    trace.actual_vertices = b.vertex_count();
    trace.expected_edges = inst.graph.m() + 14LL * n + 1 - degree_one_forbidden.size();
    trace.actual_edges = b.edge_count();

    AnnotatedInstance out;
    out.graph = b.build();
    out.forbidden = VertexSet(std::move(forbidden));
    out.necessary = VertexSet{};
    out.budget = trace.budget_out;
    out.kind = AllianceKind::offensive;
    out.cardinality = inst.cardinality;
    out.validate();

    trace.roles = b.take_roles();
    check_size_formulas(trace);
    return {std::move(out), std::move(trace)};
}

std::pair<AnnotatedInstance, ReductionTrace> theorem1_reduce(const AnnotatedInstance& inst,
                                                             const ComputeCap& cap) {
    inst.validate();
    if (inst.kind != AllianceKind::offensive)
        throw InvalidInput("forbidden-set elimination applies to the plain offensive kind");
    if (!inst.necessary.empty())
        throw InvalidInput("forbidden-set elimination requires an empty necessary set");
    if (!validate_forbidden_structure(inst.graph, inst.forbidden))
        throw InvalidInput("input violates the forbidden-structure condition");

    const std::int64_t r = inst.budget;
    std::vector<Vertex> anchors;
    for (Vertex v : inst.forbidden)
        if (inst.graph.degree(v) == 1) anchors.push_back(v);

    const std::int64_t per_anchor = 4 * r * (4 * r + 1);
    const std::int64_t projected =
        inst.graph.n() + per_anchor * static_cast<std::int64_t>(anchors.size());
    if (projected > cap.max_vertices)
        throw CapExceeded("projected output of " + std::to_string(projected) +
                          " vertices exceeds cap of " + std::to_string(cap.max_vertices));

    GadgetBuilder b(&inst.graph);
    for (Vertex anchor : anchors) {
        for (int j = 1; j <= 4 * r; ++j) {
            Vertex child = b.add(fmt_role("Tu", {{"u", anchor}, {"j", j}}));
            b.connect(anchor, child);
            for (int l = 1; l <= 4 * r; ++l) {
                Vertex leaf = b.add(fmt_role("Tu", {{"u", anchor}, {"j", j}, {"i", l}}));
                b.connect(child, leaf);
            }
        }
    }

    ReductionTrace trace;
    trace.step = ReductionStep::theorem1;
    trace.budget_in = inst.budget;
    trace.budget_out = inst.budget;
    trace.expected_vertices = projected;
    trace.actual_vertices = b.vertex_count();
    trace.expected_edges = inst.graph.m() + per_anchor * static_cast<std::int64_t>(anchors.size());
    trace.actual_edges = b.edge_count();

    AnnotatedInstance out;
    out.graph = b.build();
    out.forbidden = VertexSet{};
    out.necessary = VertexSet{};
    out.budget = inst.budget;
    out.kind = AllianceKind::offensive;
    out.cardinality = inst.cardinality;
    out.validate();

    trace.roles = b.take_roles();
    check_size_formulas(trace);
    return {std::move(out), std::move(trace)};
}

std::pair<AnnotatedInstance, std::vector<ReductionTrace>> pipeline_reduce(
    const MRSSInstance& inst, ReductionStep stop_after, const ComputeCap& cap) {
    std::vector<ReductionTrace> traces;

    auto [current, trace2] = lemma2_reduce(inst);
    traces.push_back(std::move(trace2));
    if (stop_after == ReductionStep::lemma2) return {std::move(current), std::move(traces)};

    if (current.necessary.empty())
        throw std::logic_error("lemma2 output lost its necessary set");
    auto [collapsed, trace_c1] = corollary1_reduce(current);
    traces.push_back(std::move(trace_c1));
    if (stop_after == ReductionStep::corollary1) return {std::move(collapsed), std::move(traces)};

    if (collapsed.necessary.size() != 1 ||
        !validate_forbidden_structure(collapsed.graph, collapsed.forbidden))
        throw std::logic_error("corollary1 output fails the lemma3 precondition");
    auto [plain, trace3] = lemma3_reduce(collapsed);
    traces.push_back(std::move(trace3));
    if (stop_after == ReductionStep::lemma3) return {std::move(plain), std::move(traces)};

    if (!plain.necessary.empty() || plain.kind != AllianceKind::offensive ||
        !validate_forbidden_structure(plain.graph, plain.forbidden))
        throw std::logic_error("lemma3 output fails the theorem1 precondition");
    auto [final_inst, trace_t1] = theorem1_reduce(plain, cap);
    traces.push_back(std::move(trace_t1));
    return {std::move(final_inst), std::move(traces)};
}

bool verify_equivalence(bool source_yes, const AnnotatedInstance& reduced, const ComputeCap& cap,
                        int threads) {
    return solve(reduced, cap, threads).yes == source_yes;
}

}  // namespace oal
