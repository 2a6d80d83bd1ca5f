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

#include "oal/io.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <vector>

namespace oal {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string_view line(text.data() + pos, eol - pos);
        ++number;
        Line out;
        out.number = number;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) out.tokens.push_back(line.substr(start, i - start));
        }
        if (!out.tokens.empty() && out.tokens[0] != "c") lines.push_back(std::move(out));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return lines;
}

long long parse_int(std::string_view tok, int line, long long lo, long long hi,
                    const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected an integer ") + what + ", got '" +
                                   std::string(tok) + "'");
    if (value < lo || value > hi)
        throw ParseError(line, std::string(what) + " " + std::to_string(value) +
                                   " out of range [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
    return value;
}

}  // namespace

AnnotatedInstance parse_instance(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(0, "empty instance: expected a 'p oa <n> <m>' line");

    const Line& header = lines[0];
    if (header.tokens.size() != 4 || header.tokens[0] != "p" || header.tokens[1] != "oa")
        throw ParseError(header.number, "expected 'p oa <n> <m>'");
    const int n = static_cast<int>(parse_int(header.tokens[2], header.number, 0, 50'000'000,
                                             "vertex count"));
    const long long m = parse_int(header.tokens[3], header.number, 0, 1'000'000'000, "edge count");

    AnnotatedInstance inst;
    inst.graph = Graph(n);
    bool saw_k = false, saw_mode = false, saw_card = false;
    long long edges_seen = 0;

    auto vertex_arg = [&](const Line& line, std::size_t idx) {
        return static_cast<Vertex>(
            parse_int(line.tokens[idx], line.number, 0, n - 1, "vertex id"));
    };

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        std::string_view head = line.tokens[0];
        if (head == "p") {
            throw ParseError(line.number, "duplicate 'p' line");
        } else if (head == "k") {
            if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'k <budget>'");
            if (saw_k) throw ParseError(line.number, "duplicate 'k' line");
            saw_k = true;
            inst.budget = static_cast<int>(
                parse_int(line.tokens[1], line.number, 1, 1'000'000'000, "budget"));
        } else if (head == "mode") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "expected 'mode offensive|strong|defensive'");
            if (saw_mode) throw ParseError(line.number, "duplicate 'mode' line");
            saw_mode = true;
            if (line.tokens[1] == "offensive")
                inst.kind = AllianceKind::offensive;
            else if (line.tokens[1] == "strong")
                inst.kind = AllianceKind::strong_offensive;
            else if (line.tokens[1] == "defensive")
                inst.kind = AllianceKind::defensive;
            else
                throw ParseError(line.number,
                                 "unknown mode '" + std::string(line.tokens[1]) + "'");
        } else if (head == "card") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "expected 'card atmost|exact'");
            if (saw_card) throw ParseError(line.number, "duplicate 'card' line");
            saw_card = true;
            if (line.tokens[1] == "atmost")
                inst.cardinality = CardinalityMode::at_most;
            else if (line.tokens[1] == "exact")
                inst.cardinality = CardinalityMode::exact;
            else
                throw ParseError(line.number,
                                 "unknown cardinality '" + std::string(line.tokens[1]) + "'");
        } else if (head == "e") {
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'e <u> <v>'");
            Vertex u = vertex_arg(line, 1), v = vertex_arg(line, 2);
            if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
            if (inst.graph.has_edge(u, v))
                throw ParseError(line.number, "duplicate edge (" + std::to_string(u) + ", " +
                                                  std::to_string(v) + ")");
            inst.graph.add_edge(u, v);
            ++edges_seen;
        } else if (head == "f") {
            if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'f <v>'");
            Vertex v = vertex_arg(line, 1);
            if (inst.forbidden.contains(v))
                throw ParseError(line.number, "duplicate forbidden vertex " + std::to_string(v));
            inst.forbidden.insert(v);
        } else if (head == "nn") {
            if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'nn <v>'");
            Vertex v = vertex_arg(line, 1);
            if (inst.necessary.contains(v))
                throw ParseError(line.number, "duplicate necessary vertex " + std::to_string(v));
            inst.necessary.insert(v);
        } else {
            throw ParseError(line.number, "unknown directive '" + std::string(head) + "'");
        }
    }

    if (edges_seen != m)
        throw ParseError(0, "header announces " + std::to_string(m) + " edges, found " +
                                std::to_string(edges_seen));
    if (intersects(inst.forbidden, inst.necessary))
        throw ParseError(0, "forbidden and necessary sets overlap");
    try {
        inst.validate();
    } catch (const InvalidInput& e) {
        throw ParseError(0, e.what());
    }
    return inst;
}

std::string serialize_instance(const AnnotatedInstance& inst) {
    std::ostringstream out;
    out << "p oa " << inst.graph.n() << ' ' << inst.graph.m() << '\n';
    out << "k " << inst.budget << '\n';
    out << "mode " << to_string(inst.kind) << '\n';
    out << "card " << to_string(inst.cardinality) << '\n';
    for (Vertex u = 0; u < inst.graph.n(); ++u)
        for (Vertex v : inst.graph.neighbors(u))
            if (u < v) out << "e " << u << ' ' << v << '\n';
    for (Vertex v : inst.forbidden) out << "f " << v << '\n';
    for (Vertex v : inst.necessary) out << "nn " << v << '\n';
    return out.str();
}

MRSSInstance parse_mrss(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(0, "empty instance: expected a 'mrss <dim> <n> <kprime>' line");

    const Line& header = lines[0];
    if (header.tokens.size() != 4 || header.tokens[0] != "mrss")
        throw ParseError(header.number, "expected 'mrss <dim> <n> <kprime>'");
    MRSSInstance inst;
    inst.dim =
        static_cast<int>(parse_int(header.tokens[1], header.number, 1, 1'000'000, "dimension"));
    const int nvec =
        static_cast<int>(parse_int(header.tokens[2], header.number, 1, 1'000'000, "vector count"));
    inst.kprime = static_cast<int>(
        parse_int(header.tokens[3], header.number, 0, 1'000'000'000, "cardinality bound"));

    auto read_row = [&](const Line& line, const char* what) {
        if (static_cast<int>(line.tokens.size()) - 1 != inst.dim)
            throw ParseError(line.number, std::string(what) + " has " +
                                              std::to_string(line.tokens.size() - 1) +
                                              " entries, expected " + std::to_string(inst.dim));
        std::vector<long long> row;
        row.reserve(static_cast<std::size_t>(inst.dim));
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            row.push_back(parse_int(line.tokens[i], line.number, 0,
                                    1'000'000'000'000LL, "entry"));
        return row;
    };

    bool saw_target = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] == "t") {
            if (saw_target) throw ParseError(line.number, "duplicate 't' line");
            saw_target = true;
            inst.target = read_row(line, "target");
        } else if (line.tokens[0] == "s") {
            if (!saw_target)
                throw ParseError(line.number, "vector line before the 't' line");
            inst.vectors.push_back(read_row(line, "vector"));
        } else {
            throw ParseError(line.number,
                             "unknown directive '" + std::string(line.tokens[0]) + "'");
        }
    }
    if (!saw_target) throw ParseError(0, "missing 't' line");
    if (inst.n() != nvec)
        throw ParseError(0, "header announces " + std::to_string(nvec) + " vectors, found " +
                                std::to_string(inst.n()));
    inst.validate();
    return inst;
}

std::string serialize_mrss(const MRSSInstance& inst) {
    std::ostringstream out;
    out << "mrss " << inst.dim << ' ' << inst.n() << ' ' << inst.kprime << '\n';
    out << "t";
    for (long long t : inst.target) out << ' ' << t;
    out << '\n';
    for (const auto& vec : inst.vectors) {
        out << "s";
        for (long long e : vec) out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

std::string serialize_trace(const ReductionTrace& trace) {
    std::ostringstream out;
    out << "step " << to_string(trace.step) << '\n';
    out << "budget_in " << trace.budget_in << '\n';
    out << "budget_out " << trace.budget_out << '\n';
    for (const auto& [name, id] : trace.roles) out << "role " << name << ' ' << id << '\n';
    return out.str();
}

std::string to_dot(const AnnotatedInstance& inst, const VertexSet* witness) {
    std::ostringstream out;
    out << "graph oa {\n";
    for (Vertex v = 0; v < inst.graph.n(); ++v) {
        out << "  " << v << " [";
        if (inst.forbidden.contains(v))
            out << "shape=box color=red";
        else if (inst.necessary.contains(v))
            out << "shape=triangle color=blue";
        else
            out << "shape=circle";
        if (witness && witness->contains(v)) out << " style=filled fillcolor=lightblue";
        out << "];\n";
    }
    for (Vertex u = 0; u < inst.graph.n(); ++u)
        for (Vertex v : inst.graph.neighbors(u))
            if (u < v) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace oal
