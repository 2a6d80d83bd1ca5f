// Command-line front end: solving, verification, gadget reductions,
// structural parameters and instance generation over the text formats
// documented in oal/io.hpp. Exit codes: 0 yes/ok, 1 no (or a failed
// verification / diverged equivalence), 2 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oal/gen.hpp"
#include "oal/io.hpp"
#include "oal/reduce.hpp"
#include "oal/solve.hpp"
#include "oal/structparams.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw oal::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw oal::Error("cannot write '" + path + "'");
    out << content;
}

std::vector<oal::Vertex> parse_id_list(const std::string& csv) {
    std::vector<oal::Vertex> ids;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ids.push_back(std::stoi(item));
    }
    return ids;
}

void print_witness(const oal::VertexSet& witness) {
    std::cout << "yes";
    for (oal::Vertex v : witness) std::cout << ' ' << v;
    std::cout << '\n';
}

struct StepArg {
    oal::ReductionStep single;       // when !pipeline
    bool pipeline = false;
    oal::ReductionStep stop = oal::ReductionStep::theorem1;
};

StepArg parse_step(const std::string& name) {
    auto single = [](const std::string& s) -> std::optional<oal::ReductionStep> {
        if (s == "lemma2") return oal::ReductionStep::lemma2;
        if (s == "cor1") return oal::ReductionStep::corollary1;
        if (s == "lemma3") return oal::ReductionStep::lemma3;
        if (s == "thm1") return oal::ReductionStep::theorem1;
        return std::nullopt;
    };
    StepArg arg;
    if (name == "pipeline") {
        arg.pipeline = true;
        return arg;
    }
    if (name.starts_with("pipeline:")) {
        arg.pipeline = true;
        auto stop = single(name.substr(9));
        if (!stop) throw oal::InvalidInput("unknown pipeline stop '" + name.substr(9) + "'");
        arg.stop = *stop;
        return arg;
    }
    auto step = single(name);
    if (!step)
        throw oal::InvalidInput("unknown step '" + name +
                                "' (expected lemma2|cor1|lemma3|thm1|pipeline[:stop])");
    arg.single = *step;
    return arg;
}

int cmd_verify(const std::string& path, const std::string& set_csv) {
    auto inst = oal::parse_instance(read_file(path));
    oal::VertexSet s(parse_id_list(set_csv));
    if (oal::check_solution(inst, s)) {
        std::cout << "ok\n";
        return kExitYes;
    }
    std::cout << "invalid\n";
    if (!oal::intersects(s, inst.forbidden) && !s.empty()) {
        for (const auto& v : oal::violations(inst.graph, s, inst.kind))
            std::cout << "violation " << v.vertex << " margin " << v.margin << '\n';
    }
    return kExitNo;
}

int cmd_solve(const std::string& path, bool naive, const oal::ComputeCap& cap, int threads,
              const std::string& dot_path) {
    auto inst = oal::parse_instance(read_file(path));
    oal::SolveOutcome out = naive ? oal::naive_solve(inst, cap) : oal::solve(inst, cap, threads);
    if (!dot_path.empty())
        write_file(dot_path, oal::to_dot(inst, out.yes ? &*out.witness : nullptr));
    if (out.yes) {
        print_witness(*out.witness);
        return kExitYes;
    }
    std::cout << "no\n";
    return kExitNo;
}

int cmd_solve_mrss(const std::string& path, const oal::ComputeCap& cap) {
    auto inst = oal::parse_mrss(read_file(path));
    auto out = oal::mrss_solve(inst, cap);
    if (out.yes) {
        std::cout << "yes";
        for (int idx : *out.witness) std::cout << ' ' << idx;
        std::cout << '\n';
        return kExitYes;
    }
    std::cout << "no\n";
    return kExitNo;
}

int cmd_reduce(const std::string& in_path, const std::string& step_name,
               const std::string& out_path, const std::string& trace_path,
               const std::string& dot_path, const oal::ComputeCap& cap) {
    StepArg step = parse_step(step_name);
    std::string text = read_file(in_path);

    oal::AnnotatedInstance reduced;
    std::vector<oal::ReductionTrace> traces;
    if (step.pipeline || step.single == oal::ReductionStep::lemma2) {
        auto mrss = oal::parse_mrss(text);
        if (step.pipeline) {
            auto [inst, trs] = oal::pipeline_reduce(mrss, step.stop, cap);
            reduced = std::move(inst);
            traces = std::move(trs);
        } else {
            auto [inst, tr] = oal::lemma2_reduce(mrss);
            reduced = std::move(inst);
            traces.push_back(std::move(tr));
        }
    } else {
        auto inst = oal::parse_instance(text);
        auto [out, tr] = step.single == oal::ReductionStep::corollary1
                             ? oal::corollary1_reduce(inst)
                         : step.single == oal::ReductionStep::lemma3
                             ? oal::lemma3_reduce(inst)
                             : oal::theorem1_reduce(inst, cap);
        reduced = std::move(out);
        traces.push_back(std::move(tr));
    }

    write_file(out_path, oal::serialize_instance(reduced));
    if (!trace_path.empty()) {
        std::string all;
        for (const auto& tr : traces) all += oal::serialize_trace(tr);
        write_file(trace_path, all);
    }
    if (!dot_path.empty()) write_file(dot_path, oal::to_dot(reduced));
    std::cout << "reduced n=" << reduced.graph.n() << " m=" << reduced.graph.m()
              << " budget=" << reduced.budget << '\n';
    return kExitYes;
}

int cmd_equiv(const std::string& src_path, const std::string& step_name,
              const oal::ComputeCap& cap, int threads) {
    StepArg step = parse_step(step_name);
    std::string text = read_file(src_path);

    bool source_yes;
    oal::AnnotatedInstance reduced;
    if (step.pipeline || step.single == oal::ReductionStep::lemma2) {
        auto mrss = oal::parse_mrss(text);
        source_yes = oal::mrss_solve(mrss, cap).yes;
        if (step.pipeline)
            reduced = oal::pipeline_reduce(mrss, step.stop, cap).first;
        else
            reduced = oal::lemma2_reduce(mrss).first;
    } else {
        auto inst = oal::parse_instance(text);
        source_yes = oal::solve(inst, cap, threads).yes;
        reduced = step.single == oal::ReductionStep::corollary1 ? oal::corollary1_reduce(inst).first
                  : step.single == oal::ReductionStep::lemma3   ? oal::lemma3_reduce(inst).first
                                                                : oal::theorem1_reduce(inst, cap).first;
    }

    if (oal::verify_equivalence(source_yes, reduced, cap, threads)) {
        std::cout << "EQUIVALENT (source " << (source_yes ? "yes" : "no") << ")\n";
        return kExitYes;
    }
    std::cout << "DIVERGED\n";
    return kExitNo;
}

int cmd_param(const std::string& path, int deletion_height, const std::string& set_csv, bool fvs,
              bool treedepth, const oal::ComputeCap& cap) {
    auto inst = oal::parse_instance(read_file(path));
    const oal::Graph& g = inst.graph;
    if (fvs) {
        auto s = oal::fvs_exact(g, cap);
        std::cout << "fvs " << s.size();
        for (oal::Vertex v : s) std::cout << ' ' << v;
        std::cout << '\n';
        return kExitYes;
    }
    if (treedepth) {
        std::cout << "treedepth " << oal::treedepth_exact(g, cap) << '\n';
        return kExitYes;
    }
    if (deletion_height < 0)
        throw oal::InvalidInput("pass --deletion-height H, --fvs or --treedepth");
    if (!set_csv.empty()) {
        auto cert = oal::check_deletion_set(g, oal::VertexSet(parse_id_list(set_csv)),
                                            deletion_height);
        for (const auto& comp : cert.components)
            std::cout << "component " << comp.representative
                      << (comp.is_tree ? " height " + std::to_string(comp.height)
                                       : std::string(" not-a-tree"))
                      << '\n';
        std::cout << (cert.ok ? "ok" : "invalid") << '\n';
        return cert.ok ? kExitYes : kExitNo;
    }
    auto s = oal::min_deletion_set(g, deletion_height, cap);
    std::cout << "deletion-set " << s.size();
    for (oal::Vertex v : s) std::cout << ' ' << v;
    std::cout << '\n';
    return kExitYes;
}

int cmd_gen(const std::string& profile, std::uint64_t seed, const std::string& out_path) {
    auto generated = oal::gen_random(seed, profile);
    std::string text = std::holds_alternative<oal::MRSSInstance>(generated)
                           ? oal::serialize_mrss(std::get<oal::MRSSInstance>(generated))
                           : oal::serialize_instance(std::get<oal::AnnotatedInstance>(generated));
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"offensive-alliance solvers, gadget reductions and structural parameters"};
    app.require_subcommand(1);

    std::uint64_t cap_candidates = oal::ComputeCap{}.max_candidates;
    std::int64_t cap_vertices = oal::ComputeCap{}.max_vertices;
    int threads = 1;
    app.add_option("--cap", cap_candidates, "max enumerated candidates")->capture_default_str();
    app.add_option("--max-vertices", cap_vertices, "max instance size")->capture_default_str();
    app.add_option("--threads", threads, "solver worker threads")->capture_default_str();

    std::string in_path, out_path, trace_path, dot_path, set_csv, step_name, profile = "plain-small";
    bool naive = false, fvs = false, treedepth = false;
    int deletion_height = -1;
    std::uint64_t seed = 1;

    auto* verify = app.add_subcommand("verify", "check a candidate solution");
    verify->add_option("instance", in_path)->required();
    verify->add_option("--set", set_csv, "comma-separated vertex ids")->required();

    auto* solve_cmd = app.add_subcommand("solve", "exact constrained search");
    solve_cmd->add_option("instance", in_path)->required();
    solve_cmd->add_flag("--naive", naive, "full-subset oracle enumeration");
    solve_cmd->add_option("--dot", dot_path, "write a DOT rendering with the witness marked");

    auto* solve_mrss = app.add_subcommand("solve-mrss", "solve a subset-sum source instance");
    solve_mrss->add_option("instance", in_path)->required();

    auto* reduce = app.add_subcommand("reduce", "run a gadget construction");
    reduce->add_option("input", in_path)->required();
    reduce->add_option("--step", step_name, "lemma2|cor1|lemma3|thm1|pipeline[:stop]")->required();
    reduce->add_option("-o,--output", out_path)->required();
    reduce->add_option("--trace", trace_path, "write the role/budget trace");
    reduce->add_option("--dot", dot_path, "write a DOT rendering of the output");

    auto* equiv = app.add_subcommand("equiv", "solve both sides of a reduction step");
    equiv->add_option("source", in_path)->required();
    equiv->add_option("--step", step_name, "lemma2|cor1|lemma3|thm1|pipeline[:stop]")->required();

    auto* param = app.add_subcommand("param", "structural parameter checks");
    param->add_option("instance", in_path)->required();
    param->add_option("--deletion-height", deletion_height, "height bound H");
    param->add_option("--set", set_csv, "candidate deletion set to certify");
    param->add_flag("--fvs", fvs, "minimum feedback vertex set");
    param->add_flag("--treedepth", treedepth, "exact treedepth");

    auto* gen = app.add_subcommand("gen", "deterministic instance generation");
    gen->add_option("--profile", profile,
                    "plain-small|annotated-small|soafn-small|mrss-small")
        ->capture_default_str();
    gen->add_option("--seed", seed)->capture_default_str();
    gen->add_option("-o,--output", out_path, "output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitError;
    }

    oal::ComputeCap cap{cap_candidates, cap_vertices};
    try {
        if (verify->parsed()) return cmd_verify(in_path, set_csv);
        if (solve_cmd->parsed()) return cmd_solve(in_path, naive, cap, threads, dot_path);
        if (solve_mrss->parsed()) return cmd_solve_mrss(in_path, cap);
        if (reduce->parsed())
            return cmd_reduce(in_path, step_name, out_path, trace_path, dot_path, cap);
        if (equiv->parsed()) return cmd_equiv(in_path, step_name, cap, threads);
        if (param->parsed())
            return cmd_param(in_path, deletion_height, set_csv, fvs, treedepth, cap);
        if (gen->parsed()) return cmd_gen(profile, seed, out_path);
    } catch (const oal::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const oal::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
