#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "kernelkit/exact.hpp"
#include "kernelkit/instance_gen.hpp"
#include "kernelkit/io.hpp"
#include "kernelkit/kernel.hpp"

using namespace kernelkit;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string problem;
    std::string input;
    int k = 0;
    int cap = 10;
    std::uint64_t seed = 0;
    std::string format;
    std::string out;
    bool trace = false;
    bool timing = false;
    std::string csv;
    int jobs = 1;
    // gen
    std::string family = "planted";
    std::string figure;
    int n = 10;
    double edge_prob = 0.5;
};

ProblemKind problem_of(const std::string& s) {
    auto p = parse_problem(s);
    if (!p) throw CLI::ValidationError("problem", "unknown problem '" + s + "'");
    return *p;
}

std::optional<GraphFormat> format_of(const Options& o) {
    if (o.format.empty()) return std::nullopt;
    return parse_format(o.format);
}

std::string pairs_text(const std::vector<EdgePair>& es) {
    std::string s;
    for (const auto& e : es) s += to_string(e) + "\n";
    return s;
}

double millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void append_csv(const std::string& path, const std::vector<std::string>& rows) {
    const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw input_error("cannot open " + path);
    if (fresh) out << kCsvHeader << '\n';
    for (const auto& r : rows) out << r << '\n';
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    if (!out) throw input_error("cannot write " + p.string());
    out << text;
}

int cmd_kernelize(const Options& o) {
    const ProblemKind p = problem_of(o.problem);
    ParsedGraph in = read_graph_file(o.input, format_of(o));
    Instance inst{in.graph, o.k, p};
    const auto t0 = std::chrono::steady_clock::now();
    KernelOutcome out = kernelize(inst);
    const double ms = millis_since(t0);

    RunReport report = make_report(inst, out);
    report.config = {{"input", o.input}, {"format", std::string(name(in.format))}, {"seed", o.seed}};
    if (o.timing) report.millis = ms;
    const std::string report_text = to_json(report).dump(2) + "\n";
    const std::string trace_text = trace_json(inst, out).dump(2) + "\n";

    if (o.out.empty()) {
        std::cout << report_text;
        if (o.trace) std::cout << trace_text;
    } else {
        fs::create_directories(o.out);
        write_file(fs::path(o.out) / "report.json", report_text);
        if (o.trace) write_file(fs::path(o.out) / "trace.json", trace_text);
        if (out.verdict == Verdict::Kernel) {
            std::ostringstream g;
            write_graph(g, out.kernel.graph, in.format);
            write_file(fs::path(o.out) / (in.format == GraphFormat::Dimacs ? "kernel.dimacs" : "kernel.el"), g.str());
        }
        std::cout << report.outcome << '\n';
    }
    if (!o.csv.empty()) {
        report.millis = ms;
        append_csv(o.csv, {csv_row(report)});
    }
    return 0;
}

int cmd_exact(const Options& o) {
    const ProblemKind p = problem_of(o.problem);
    Graph g = read_graph_file(o.input, format_of(o)).graph;
    ExactResult r = solve_exact(p, g, o.cap);
    if (!r.opt) {
        std::cout << "opt > " << o.cap << '\n';
        return 0;
    }
    std::cout << "opt " << *r.opt << '\n' << pairs_text(r.witness);
    return 0;
}

int cmd_check(const Options& o) {
    const ProblemKind p = problem_of(o.problem);
    Graph g = read_graph_file(o.input, format_of(o)).graph;
    Instance inst{g, o.k, p};
    KernelOutcome out = kernelize(inst);
    std::vector<EdgePair> witness;
    bool yes = false;
    if (out.verdict == Verdict::TrivialYes) {
        yes = true;
        witness = out.yes_witness;
    } else if (out.verdict == Verdict::Kernel && out.kernel.k >= 0) {
        ExactResult r = solve_exact(p, out.kernel.graph, out.kernel.k);
        if (r.opt) {
            yes = true;
            witness = r.witness;
        }
    }
    std::cout << name(out.verdict) << '\n';
    if (!yes) {
        std::cout << "no\n";
        return 0;
    }
    LiftResult lifted = lift_solution(inst, out, witness);
    const bool valid = static_cast<int>(lifted.solution.size()) <= o.k && is_solution(p, g, lifted.solution);
    std::cout << "yes\n" << pairs_text(lifted.solution);
    if (!valid) {
        std::cerr << "lifted solution failed validation\n";
        return 1;
    }
    return 0;
}

struct BenchJob {
    GenSpec spec;
};

int cmd_bench(const Options& o) {
    std::ifstream f(o.input);
    if (!f) throw input_error("cannot open " + o.input);
    json spec;
    try {
        spec = json::parse(f);
    } catch (const json::parse_error& e) {
        throw input_error(o.input + ": " + e.what());
    }
    const std::uint64_t seed = spec.value("seed", o.seed);
    const int reps = spec.value("reps", 1);
    std::vector<BenchJob> jobs;
    for (const auto& run : spec.at("runs")) {
        const ProblemKind p = problem_of(run.at("problem").get<std::string>());
        auto fam = parse_family(run.value("family", std::string("planted")));
        if (!fam) throw input_error("unknown family in " + o.input);
        auto list = [&](const char* key) {
            const json& v = run.at(key);
            return v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
        };
        for (int n : list("n"))
            for (int k : list("k"))
                for (int r = 0; r < reps; ++r) {
                    GenSpec g;
                    g.seed = seed + jobs.size();
                    g.n = n;
                    g.k = k;
                    g.problem = p;
                    g.family = *fam;
                    g.edge_prob = run.value("edge_prob", 0.5);
                    g.figure = run.value("figure", std::string());
                    jobs.push_back({g});
                }
    }

    // Each worker takes every jobs-th spec; rows land by spec index.
    std::vector<std::string> rows(jobs.size());
    std::vector<std::string> errors(jobs.size());
    const int workers = std::max(1, std::min<int>(o.jobs, static_cast<int>(jobs.size())));
    auto work = [&](int w) {
        for (std::size_t i = w; i < jobs.size(); i += workers) {
            try {
                Instance inst = generate(jobs[i].spec);
                const auto t0 = std::chrono::steady_clock::now();
                KernelOutcome out = kernelize(inst);
                RunReport r = make_report(inst, out);
                r.millis = millis_since(t0);
                rows[i] = csv_row(r);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();

    std::vector<std::string> done;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << "spec " << i << ": " << errors[i] << '\n';
            continue;
        }
        done.push_back(rows[i]);
    }
    if (o.csv.empty()) {
        std::cout << kCsvHeader << '\n';
        for (const auto& r : done) std::cout << r << '\n';
    } else {
        append_csv(o.csv, done);
    }
    return 0;
}

int cmd_gen(const Options& o) {
    GenSpec g;
    g.seed = o.seed;
    g.n = o.n;
    g.k = o.k;
    g.problem = problem_of(o.problem);
    auto fam = parse_family(o.family);
    if (!fam) throw CLI::ValidationError("family", "unknown family '" + o.family + "'");
    g.family = *fam;
    g.edge_prob = o.edge_prob;
    g.figure = o.figure;
    Instance inst = generate(g);
    write_graph(std::cout, inst.graph, format_of(o).value_or(GraphFormat::EdgeList));
    return 0;
}

std::uint64_t env_seed() {
    const char* s = std::getenv("KERNELKIT_SEED");
    if (!s || !*s) return 0;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        std::cerr << "ignoring KERNELKIT_SEED='" << s << "'\n";
        return 0;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernelization toolkit for edge modification problems"};
    app.require_subcommand(1);
    Options o;
    o.seed = env_seed();
    const std::string problems = "cluster-del, stc, tpc, split-del, split-comp, pseudo-del, pseudo-comp";

    auto add_common = [&](CLI::App* sub, bool with_k) {
        sub->add_option("problem", o.problem, problems)->required();
        sub->add_option("input", o.input, "graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--format", o.format, "el or dimacs (default: detect)")->check(CLI::IsMember({"el", "dimacs"}));
        if (with_k) sub->add_option("--k", o.k, "budget")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", o.seed, "seed (default: $KERNELKIT_SEED or 0)");
    };

    auto* kz = app.add_subcommand("kernelize", "kernelize an instance");
    add_common(kz, true);
    kz->add_option("--out", o.out, "directory for report.json, trace.json and the kernel graph");
    kz->add_flag("--trace", o.trace, "emit the JSON trace");
    kz->add_flag("--timing", o.timing, "include wall time in the report");
    kz->add_option("--csv", o.csv, "append a CSV row");

    auto* ex = app.add_subcommand("exact", "exact optimum by branching");
    add_common(ex, false);
    ex->add_option("--cap", o.cap, "largest solution size searched")->check(CLI::NonNegativeNumber);

    auto* ck = app.add_subcommand("check", "kernelize, solve the kernel, lift the solution");
    add_common(ck, true);

    auto* bn = app.add_subcommand("bench", "sweep generator specs from a JSON file");
    bn->add_option("spec", o.input, "bench spec file")->required()->check(CLI::ExistingFile);
    bn->add_option("--csv", o.csv, "append rows here instead of printing");
    bn->add_option("--seed", o.seed, "base seed when the spec has none");
    bn->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* gn = app.add_subcommand("gen", "print a generated instance");
    gn->add_option("problem", o.problem, problems)->required();
    gn->add_option("--family", o.family, "planted, uniform-random or figure");
    gn->add_option("--figure", o.figure, "clique-crown or c5-chord");
    gn->add_option("--n", o.n, "vertices");
    gn->add_option("--k", o.k, "budget / perturbations");
    gn->add_option("--p", o.edge_prob, "edge probability (uniform-random)");
    gn->add_option("--seed", o.seed, "seed (default: $KERNELKIT_SEED or 0)");
    gn->add_option("--format", o.format, "el or dimacs")->check(CLI::IsMember({"el", "dimacs"}));

    try {
        app.parse(argc, argv);
        if (kz->parsed()) return cmd_kernelize(o);
        if (ex->parsed()) return cmd_exact(o);
        if (ck->parsed()) return cmd_check(o);
        if (bn->parsed()) return cmd_bench(o);
        if (gn->parsed()) return cmd_gen(o);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
