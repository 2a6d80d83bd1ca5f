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

#include "oal/solve.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

namespace oal {

namespace {

constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

// C(n, k), saturating at kUnbounded.
std::uint64_t binom_saturating(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > kUnbounded / 2) return kUnbounded;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t sum_saturating(std::uint64_t a, std::uint64_t b) {
    return (a > kUnbounded - b) ? kUnbounded : a + b;
}

// Sum of C(n, j) for j in [lo, hi], saturating.
std::uint64_t projected_candidates(std::int64_t n, std::int64_t lo, std::int64_t hi) {
    std::uint64_t total = 0;
    for (std::int64_t j = std::max<std::int64_t>(lo, 0); j <= hi; ++j)
        total = sum_saturating(total, binom_saturating(n, j));
    return total;
}

// Flat adjacency, shared read-only by all workers.
struct Csr {
    std::vector<std::int64_t> offsets;
    std::vector<Vertex> targets;

    explicit Csr(const Graph& g) {
        offsets.reserve(static_cast<std::size_t>(g.n()) + 1);
        offsets.push_back(0);
        for (Vertex v = 0; v < g.n(); ++v) {
            const auto& nb = g.neighbors(v);
            targets.insert(targets.end(), nb.begin(), nb.end());
            offsets.push_back(static_cast<std::int64_t>(targets.size()));
        }
    }
};

// Incremental bookkeeping of the alliance condition while the candidate
// set S changes one vertex at a time: d_S(v) per vertex and the count of
// quantified vertices whose margin is negative. S satisfies the
// predicate exactly when num_bad == 0 (vacuous truths included).
//
// The margin conditions collapse to a per-vertex window on d_S(v):
//   offensive kinds   v is bad iff v not in S and 1 <= d_S(v) <= hi(v),
//                     hi(v) = floor((deg(v) + thr - 1) / 2)
//                     (d_S < deg - d_S + thr  <=>  2 d_S < deg + thr)
//   defensive         v is bad iff v in S and d_S(v) <= hi(v),
//                     hi(v) = floor((deg(v) - 2) / 2), -1 when deg < 2
//                     (d_S + 1 < deg - d_S  <=>  2 d_S < deg - 1)
// which makes the hot update branch-free.
// Per-vertex state packed into one word so the hot update is a single
// load/modify/store: bits 0..23 d_S(v), bits 24..47 hi(v)+1 (so the
// comparison is ds < hip1 even for hi = -1), bit 48 membership, bit 49
// the cached badness.
template <bool Defensive>
class MarginCounters {
public:
    MarginCounters(const Graph& g, const Csr& csr, AllianceKind kind) : csr_(csr) {
        const int thr = Defensive ? 0 : threshold(kind);
        state_.reserve(static_cast<std::size_t>(g.n()));
        for (Vertex v = 0; v < g.n(); ++v) {
            const int deg = g.degree(v);
            const int hi = Defensive ? (deg >= 2 ? (deg - 2) / 2 : -1) : (deg + thr - 1) / 2;
            state_.push_back(static_cast<std::uint64_t>(hi + 1) << kHiShift);
        }
    }

    void push(Vertex v) {
        set_membership(static_cast<std::size_t>(v), 1);
        const auto i = static_cast<std::size_t>(v);
        for (std::int64_t e = csr_.offsets[i]; e < csr_.offsets[i + 1]; ++e)
            bump<+1>(static_cast<std::size_t>(csr_.targets[static_cast<std::size_t>(e)]));
    }

    void pop(Vertex v) {
        set_membership(static_cast<std::size_t>(v), 0);
        const auto i = static_cast<std::size_t>(v);
        for (std::int64_t e = csr_.offsets[i]; e < csr_.offsets[i + 1]; ++e)
            bump<-1>(static_cast<std::size_t>(csr_.targets[static_cast<std::size_t>(e)]));
    }

    bool alliance_ok() const { return num_bad_ == 0; }

    // Read-only probe: would S ∪ {v} satisfy the predicate? Saves the
    // store-and-undo round trip on the deepest enumeration level.
    bool alliance_ok_with(Vertex v) const {
        const auto i = static_cast<std::size_t>(v);
        long long nb = num_bad_;
        {
            const std::uint64_t s = state_[i];
            const std::uint64_t hip1 = (s >> kHiShift) & kDsMask;
            nb += static_cast<long long>(badness(1, s & kDsMask, hip1)) -
                  static_cast<long long>((s >> kBadShift) & 1);
        }
        for (std::int64_t e = csr_.offsets[i]; e < csr_.offsets[i + 1]; ++e) {
            const auto w = static_cast<std::size_t>(csr_.targets[static_cast<std::size_t>(e)]);
            const std::uint64_t s = state_[w];
            const std::uint64_t hip1 = (s >> kHiShift) & kDsMask;
            nb += static_cast<long long>(badness((s >> kInSShift) & 1, (s & kDsMask) + 1, hip1)) -
                  static_cast<long long>((s >> kBadShift) & 1);
        }
        return nb == 0;
    }

private:
    static constexpr int kHiShift = 24;
    static constexpr int kInSShift = 48;
    static constexpr int kBadShift = 49;
    static constexpr std::uint64_t kDsMask = (std::uint64_t{1} << kHiShift) - 1;

    static std::uint64_t badness(std::uint64_t in_s, std::uint64_t ds, std::uint64_t hip1) {
        if constexpr (Defensive) return in_s & (ds < hip1);
        return (in_s ^ 1) & (ds >= 1) & (ds < hip1);
    }

    template <int Delta>
    void bump(std::size_t i) {
        std::uint64_t s = state_[i];
        const std::uint64_t ds = (s & kDsMask) + static_cast<std::uint64_t>(Delta);
        const std::uint64_t hip1 = (s >> kHiShift) & kDsMask;
        const std::uint64_t nb = badness((s >> kInSShift) & 1, ds, hip1);
        num_bad_ += static_cast<long long>(nb) - static_cast<long long>((s >> kBadShift) & 1);
        state_[i] = (s & ~(kDsMask | (std::uint64_t{1} << kBadShift))) | ds | (nb << kBadShift);
    }

    void set_membership(std::size_t i, std::uint64_t in_s) {
        std::uint64_t s = state_[i];
        const std::uint64_t ds = s & kDsMask;
        const std::uint64_t hip1 = (s >> kHiShift) & kDsMask;
        const std::uint64_t nb = badness(in_s, ds, hip1);
        num_bad_ += static_cast<long long>(nb) - static_cast<long long>((s >> kBadShift) & 1);
        s &= ~((std::uint64_t{1} << kInSShift) | (std::uint64_t{1} << kBadShift));
        state_[i] = s | (in_s << kInSShift) | (nb << kBadShift);
    }

    const Csr& csr_;
    std::vector<std::uint64_t> state_;
    long long num_bad_ = 0;
};

struct WorkerResult {
    bool found = false;
    std::vector<Vertex> picks;  // chosen free vertices, ascending
    std::uint64_t explored = 0;
};

// (size, lexicographic) order on pick vectors; both ascending.
bool better(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Work units handed out by an atomic counter. With pair scheduling a
// unit is a (first, second) pick pair, which keeps workers balanced
// (the subtree under low first picks holds most of the enumeration);
// with first scheduling (huge free lists) a unit is a first pick.
struct Schedule {
    bool pairs = false;
    std::uint64_t total_units = 0;
    std::vector<std::uint64_t> row_start;  // pair units before first pick i
};

Schedule make_schedule(std::size_t f, int max_picks) {
    Schedule s;
    s.pairs = max_picks >= 2 && f >= 2 && f <= 4096;
    if (s.pairs) {
        s.row_start.reserve(f);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < f; ++i) {
            s.row_start.push_back(acc);
            acc += f - 1 - i;
        }
        s.total_units = acc;
    } else {
        s.total_units = f;
    }
    return s;
}

// Enumerates subsets of `free` in (size, lexicographic) candidate order
// split across workers. The worker's own sequence is lex-ordered within
// each size, so the depth cap may shrink to (own best size - 1) after a
// find; the shared cap tracks the best size found anywhere but stays
// inclusive, because another worker's equal-size witness can be
// lexicographically smaller. Only candidates provably worse in the
// (size, lex) order are ever skipped.
template <bool Defensive>
class Worker {
public:
    Worker(const Graph& g, const Csr& csr, AllianceKind kind, const std::vector<Vertex>& free,
           int max_picks, bool exact, int necessary_size, const Schedule& schedule,
           std::atomic<std::uint64_t>& next_unit, std::atomic<int>& shared_cap)
        : counters_(g, csr, kind),
          free_(free),
          max_picks_(max_picks),
          exact_(exact),
          necessary_size_(necessary_size),
          schedule_(schedule),
          next_unit_(next_unit),
          shared_cap_(shared_cap) {
        picks_.reserve(static_cast<std::size_t>(std::max(max_picks, 1)));
    }

    WorkerResult run(const VertexSet& necessary, bool lead_worker) {
        for (Vertex v : necessary) counters_.push(v);
        own_cap_ = max_picks_;
        if (schedule_.pairs) {
            // pair units cover exactly the candidates with >= 2 picks;
            // the leader owns the root and the singles, which are too
            // cheap to be worth a unit each
            if (lead_worker) {
                evaluate();
                if (!exact_) {
                    for (std::size_t i = 0; i < free_.size() && depth_cap() >= 1; ++i) {
                        enter(i);
                        evaluate();
                        leave(i);
                    }
                }
            }
            run_pairs();
        } else {
            // first-pick units cover all candidates with >= 1 pick
            if (lead_worker) evaluate();
            run_firsts();
        }
        return std::move(result_);
    }

private:
    int depth_cap() const {
        return std::min(own_cap_, shared_cap_.load(std::memory_order_relaxed));
    }

    // Enough free vertices at or after index i to finish an exact-size
    // candidate once depth - 1 picks are already placed?
    bool can_complete(std::size_t i, int depth) const {
        return static_cast<std::int64_t>(free_.size() - i) >=
               static_cast<std::int64_t>(max_picks_ - depth + 1);
    }

    void enter(std::size_t i) {
        picks_.push_back(free_[i]);
        counters_.push(free_[i]);
    }

    void leave(std::size_t i) {
        counters_.pop(free_[i]);
        picks_.pop_back();
    }

    // Caps only ever shrink, so once the cap rules out the unit depth
    // every remaining unit is provably worse and the worker can stop.
    // A unit grabbed and then dropped is sound for the same reason: its
    // candidates are at least unit-depth deep and units arrive in
    // lexicographic order, so they cannot beat the witness behind the
    // cap.
    void run_pairs() {
        std::size_t row = 0;
        for (;;) {
            if (exact_ && result_.found) return;
            const std::uint64_t unit = next_unit_.fetch_add(1, std::memory_order_relaxed);
            if (unit >= schedule_.total_units) return;
            if (depth_cap() < 2) return;
            while (row + 1 < schedule_.row_start.size() && schedule_.row_start[row + 1] <= unit)
                ++row;
            const std::size_t i = row;
            const std::size_t j = i + 1 + static_cast<std::size_t>(unit - schedule_.row_start[row]);
            if (exact_ && (!can_complete(i, 1) || !can_complete(j, 2))) continue;
            enter(i);
            enter(j);
            descend(j + 1);
            leave(j);
            leave(i);
        }
    }

    void run_firsts() {
        for (;;) {
            if (exact_ && result_.found) return;
            const std::uint64_t unit = next_unit_.fetch_add(1, std::memory_order_relaxed);
            if (unit >= schedule_.total_units) return;
            if (depth_cap() < 1) return;
            const std::size_t i = static_cast<std::size_t>(unit);
            if (exact_ && !can_complete(i, 1)) return;
            enter(i);
            descend(i + 1);
            leave(i);
        }
    }

    void evaluate() {
        const int depth = static_cast<int>(picks_.size());
        if (exact_ && depth != max_picks_) return;
        if (necessary_size_ + depth == 0) return;  // empty set is never a candidate
        ++result_.explored;
        if (!counters_.alliance_ok()) return;
        if (result_.found && !better(picks_, result_.picks)) return;
        result_.found = true;
        result_.picks = picks_;
        if (!exact_) {
            own_cap_ = depth - 1;
            int cur = shared_cap_.load(std::memory_order_relaxed);
            while (cur > depth &&
                   !shared_cap_.compare_exchange_weak(cur, depth, std::memory_order_relaxed)) {
            }
        }
    }

    void descend(std::size_t next) {
        evaluate();
        if (exact_ && result_.found) return;
        descend_children(next, static_cast<int>(picks_.size()));
    }

    void descend_children(std::size_t next, int depth) {
        int cap = depth_cap();
        if (depth >= cap) return;
        if (depth + 1 == cap) {
            scan_deepest(next, depth);
            return;
        }
        for (std::size_t i = next; i < free_.size(); ++i) {
            if (exact_ && !can_complete(i, depth + 1)) break;
            enter(i);
            descend(i + 1);
            leave(i);
            cap = depth_cap();
            if (depth >= cap) return;
            if (depth + 1 == cap) {
                scan_deepest(i + 1, depth);
                return;
            }
            if (exact_ && result_.found) return;
        }
    }

    // The deepest level holds a third of all nodes; probe them without
    // mutating the counters. Semantically identical to enter +
    // evaluate + leave for each i in order.
    void scan_deepest(std::size_t next, int depth) {
        for (std::size_t i = next; i < free_.size(); ++i) {
            if (exact_ && depth + 1 != max_picks_) break;  // these are not candidates
            ++result_.explored;
            if (!counters_.alliance_ok_with(free_[i])) continue;
            picks_.push_back(free_[i]);
            if (!result_.found || better(picks_, result_.picks)) {
                result_.found = true;
                result_.picks = picks_;
            }
            picks_.pop_back();
            if (!exact_) {
                own_cap_ = depth;
                int cur = shared_cap_.load(std::memory_order_relaxed);
                while (cur > depth + 1 && !shared_cap_.compare_exchange_weak(
                                              cur, depth + 1, std::memory_order_relaxed)) {
                }
            }
            return;  // later probes at this level are lex-greater, deeper is capped off
        }
    }

    MarginCounters<Defensive> counters_;
    const std::vector<Vertex>& free_;
    int max_picks_;
    bool exact_;
    int necessary_size_;
    const Schedule& schedule_;
    std::atomic<std::uint64_t>& next_unit_;
    std::atomic<int>& shared_cap_;
    std::vector<Vertex> picks_;
    int own_cap_ = 0;
    WorkerResult result_;
};

}  // namespace

SolveOutcome solve(const AnnotatedInstance& inst, const ComputeCap& cap, int threads) {
    inst.validate();
    if (cap.max_candidates == 0 || cap.max_vertices <= 0)
        throw InvalidInput("compute cap bounds must be positive");
    if (inst.graph.n() > cap.max_vertices)
        throw CapExceeded("instance has " + std::to_string(inst.graph.n()) +
                          " vertices, cap accepts " + std::to_string(cap.max_vertices));

    std::vector<Vertex> free;
    free.reserve(static_cast<std::size_t>(inst.graph.n()));
    for (Vertex v = 0; v < inst.graph.n(); ++v)
        if (!inst.forbidden.contains(v) && !inst.necessary.contains(v)) free.push_back(v);

    const bool exact = inst.cardinality == CardinalityMode::exact;
    const int slack = inst.budget - inst.necessary.size();
    const int max_picks = exact ? slack : std::min<int>(slack, static_cast<int>(free.size()));

    const std::uint64_t projected = projected_candidates(
        static_cast<std::int64_t>(free.size()), exact ? max_picks : 0, max_picks);
    if (projected > cap.max_candidates)
        throw CapExceeded("projected " + std::to_string(projected) +
                          " candidates exceeds cap of " + std::to_string(cap.max_candidates));

    // exact mode with more required picks than free vertices: the
    // enumeration is empty, which is an ordinary certified no.
    if (exact && max_picks > static_cast<int>(free.size()))
        return {false, std::nullopt, 0};

    int worker_count = std::clamp(threads, 1, 64);
    worker_count = std::min<int>(worker_count, std::max<int>(1, static_cast<int>(free.size())));

    const Csr csr(inst.graph);
    const Schedule schedule = make_schedule(free.size(), max_picks);
    std::atomic<std::uint64_t> next_unit{0};
    std::atomic<int> shared_cap{max_picks};
    std::vector<WorkerResult> results(static_cast<std::size_t>(worker_count));
    const bool defensive = inst.kind == AllianceKind::defensive;

    auto run_worker = [&](int id) {
        if (defensive) {
            Worker<true> w(inst.graph, csr, inst.kind, free, max_picks, exact,
                           inst.necessary.size(), schedule, next_unit, shared_cap);
            results[static_cast<std::size_t>(id)] = w.run(inst.necessary, id == 0);
        } else {
            Worker<false> w(inst.graph, csr, inst.kind, free, max_picks, exact,
                            inst.necessary.size(), schedule, next_unit, shared_cap);
            results[static_cast<std::size_t>(id)] = w.run(inst.necessary, id == 0);
        }
    };

    if (worker_count == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int id = 0; id < worker_count; ++id) pool.emplace_back(run_worker, id);
        for (auto& t : pool) t.join();
    }

    SolveOutcome out;
    const WorkerResult* best = nullptr;
    for (const auto& r : results) {
        out.explored += r.explored;
        if (r.found && (!best || better(r.picks, best->picks))) best = &r;
    }
    if (best) {
        out.yes = true;
        std::vector<Vertex> ids(inst.necessary.ids());
        ids.insert(ids.end(), best->picks.begin(), best->picks.end());
        out.witness = VertexSet(std::move(ids));
    }
    return out;
}

namespace {

// Lexicographically ordered combinations of {0..n-1} of a fixed size.
// Returns false when exhausted.
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

std::vector<int> first_combination(int k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    return comb;
}

}  // namespace

SolveOutcome naive_solve(const AnnotatedInstance& inst, const ComputeCap& cap) {
    inst.validate();
    const int n = inst.graph.n();
    if (n > 25)
        throw CapExceeded("naive enumeration accepts at most 25 vertices, got " +
                          std::to_string(n));
    if (projected_candidates(n, 0, n) > cap.max_candidates)
        throw CapExceeded("projected 2^" + std::to_string(n) + " candidates exceeds cap of " +
                          std::to_string(cap.max_candidates));

    SolveOutcome out;
    for (int size = 1; size <= n; ++size) {
        if (inst.cardinality == CardinalityMode::at_most && size > inst.budget) break;
        if (inst.cardinality == CardinalityMode::exact && size != inst.budget) continue;
        auto comb = first_combination(size);
        do {
            ++out.explored;
            VertexSet s(std::vector<Vertex>(comb.begin(), comb.end()));
            if (intersects(s, inst.forbidden)) continue;
            bool has_necessary = true;
            for (Vertex v : inst.necessary)
                if (!s.contains(v)) {
                    has_necessary = false;
                    break;
                }
            if (!has_necessary) continue;
            if (check_alliance(inst.graph, s, inst.kind)) {
                out.yes = true;
                out.witness = std::move(s);
                return out;
            }
        } while (next_combination(comb, n));
    }
    return out;
}

MRSSOutcome mrss_solve(const MRSSInstance& inst, const ComputeCap& cap) {
    inst.validate();
    const int n = inst.n();
    const int max_picks = std::min(inst.kprime, n);
    if (projected_candidates(n, 0, max_picks) > cap.max_candidates)
        throw CapExceeded("projected candidate count exceeds cap of " +
                          std::to_string(cap.max_candidates));

    MRSSOutcome out;
    std::vector<long long> sum(static_cast<std::size_t>(inst.dim));
    auto dominates_target = [&](const std::vector<int>& comb) {
        std::fill(sum.begin(), sum.end(), 0);
        for (int idx : comb)
            for (int i = 0; i < inst.dim; ++i)
                sum[static_cast<std::size_t>(i)] +=
                    inst.vectors[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)];
        for (int i = 0; i < inst.dim; ++i)
            if (sum[static_cast<std::size_t>(i)] < inst.target[static_cast<std::size_t>(i)])
                return false;
        return true;
    };

    for (int size = 0; size <= max_picks; ++size) {
        auto comb = first_combination(size);
        do {
            ++out.explored;
            if (dominates_target(comb)) {
                out.yes = true;
                out.witness = comb;
                return out;
            }
        } while (size > 0 && next_combination(comb, n));
    }
    return out;
}

}  // namespace oal
