#include "kernelkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace kernelkit {

using nlohmann::json;

std::string_view name(GraphFormat f) { return f == GraphFormat::EdgeList ? "el" : "dimacs"; }

std::optional<GraphFormat> parse_format(std::string_view s) {
    if (s == "el") return GraphFormat::EdgeList;
    if (s == "dimacs") return GraphFormat::Dimacs;
    return std::nullopt;
}

parse_error::parse_error(const std::string& source, int line, const std::string& what)
    : input_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

class Reader {
public:
    Reader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    // Next line that is neither blank nor a comment, already tokenised.
    bool next(std::vector<std::string_view>& tokens, bool dimacs) {
        while (std::getline(in_, line_)) {
            ++lineno_;
            tokens = split_ws(line_);
            if (tokens.empty() || tokens[0][0] == '#') continue;
            if (dimacs && tokens[0] == "c") continue;
            return true;
        }
        return false;
    }

    long long number(std::string_view tok, const char* what) const {
        long long v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            fail(std::string("expected an integer for ") + what + ", got '" + std::string(tok) + "'");
        return v;
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(source_, lineno_, what); }
    int line() const { return lineno_; }

private:
    std::istream& in_;
    std::string source_;
    std::string line_;
    int lineno_ = 0;
};

Graph read_body(Reader& r, long long n, long long m, bool dimacs) {
    if (n < 0 || m < 0) r.fail("negative vertex or edge count");
    if (n > 1'000'000) r.fail("vertex count too large");
    Graph g(static_cast<int>(n));
    const long long base = dimacs ? 1 : 0;
    std::vector<std::string_view> t;
    long long seen = 0;
    while (r.next(t, dimacs)) {
        if (dimacs) {
            if (t[0] != "e") r.fail("expected an 'e u v' line");
            t.erase(t.begin());
        }
        if (t.size() != 2) r.fail("expected two endpoints");
        const long long u = r.number(t[0], "an endpoint") - base;
        const long long v = r.number(t[1], "an endpoint") - base;
        if (u < 0 || v < 0 || u >= n || v >= n) r.fail("endpoint out of range");
        if (u == v) r.fail("self loop");
        if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) r.fail("duplicate edge");
        ++seen;
    }
    if (seen != m)
        r.fail("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return g;
}

json labels_json(std::span<const Label> ls) { return json(std::vector<Label>(ls.begin(), ls.end())); }

json pairs_json(const std::vector<EdgePair>& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back({e.first, e.second});
    return a;
}

std::vector<EdgePair> pairs_from(const json& a) {
    std::vector<EdgePair> out;
    for (const auto& p : a) out.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return out;
}

}  // namespace

ParsedGraph read_graph(std::istream& in, std::optional<GraphFormat> format, const std::string& source) {
    Reader r(in, source);
    std::vector<std::string_view> t;
    // Leave 'c' lines for the DIMACS check below; the first content line decides.
    if (!r.next(t, false)) throw parse_error(source, r.line(), "empty input");
    const bool looks_dimacs = t[0] == "p" || t[0] == "c";
    const GraphFormat fmt = format.value_or(looks_dimacs ? GraphFormat::Dimacs : GraphFormat::EdgeList);
    ParsedGraph out;
    out.format = fmt;
    if (fmt == GraphFormat::Dimacs) {
        if (t[0] == "c" && !r.next(t, true)) r.fail("missing 'p edge' line");
        if (t.size() != 4 || t[0] != "p" || (t[1] != "edge" && t[1] != "col"))
            r.fail("expected 'p edge <n> <m>'");
        out.graph = read_body(r, r.number(t[2], "the vertex count"), r.number(t[3], "the edge count"), true);
    } else {
        if (t.size() != 2) r.fail("expected header 'n m'");
        out.graph = read_body(r, r.number(t[0], "the vertex count"), r.number(t[1], "the edge count"), false);
    }
    return out;
}

ParsedGraph read_graph_file(const std::string& path, std::optional<GraphFormat> format) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_graph(in, format, path);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
    const auto edges = g.edges();
    if (format == GraphFormat::Dimacs) {
        out << "p edge " << g.size() << ' ' << edges.size() << '\n';
        for (const auto& e : edges) out << "e " << e.first + 1 << ' ' << e.second + 1 << '\n';
    } else {
        out << g.size() << ' ' << edges.size() << '\n';
        for (const auto& e : edges) out << e.first << ' ' << e.second << '\n';
    }
}

json to_json(const ReductionStep& s) {
    return json{{"rule", s.rule},
                {"k_before", s.k_before},
                {"k_after", s.k_after},
                {"removed_vertices", labels_json(s.removed_vertices)},
                {"added_vertices", labels_json(s.added_vertices)},
                {"removed_edges", pairs_json(s.removed_edges)},
                {"added_edges", pairs_json(s.added_edges)},
                {"marked", labels_json(s.marked)},
                {"unmarked", labels_json(s.unmarked)}};
}

ReductionStep step_from_json(const json& j) {
    ReductionStep s;
    s.rule = j.at("rule").get<std::string>();
    s.k_before = j.at("k_before").get<int>();
    s.k_after = j.at("k_after").get<int>();
    s.removed_vertices = j.at("removed_vertices").get<std::vector<Label>>();
    s.added_vertices = j.at("added_vertices").get<std::vector<Label>>();
    s.removed_edges = pairs_from(j.at("removed_edges"));
    s.added_edges = pairs_from(j.at("added_edges"));
    s.marked = j.at("marked").get<std::vector<Label>>();
    s.unmarked = j.at("unmarked").get<std::vector<Label>>();
    return s;
}

json trace_json(const Instance& input, const KernelOutcome& outcome) {
    json steps = json::array();
    for (const auto& s : outcome.trace) steps.push_back(to_json(s));
    const Graph& kg = outcome.kernel.graph;
    return json{{"schema", 1},
                {"problem", std::string(cli_name(input.problem))},
                {"k", input.k},
                {"outcome", std::string(name(outcome.verdict))},
                {"decided_by", outcome.decided_by},
                {"steps", steps},
                {"kernel",
                 {{"labels", labels_json(kg.labels())},
                  {"edges", pairs_json(kg.label_edges())},
                  {"k", outcome.kernel.k},
                  {"marked", labels_json(outcome.marked)}}}};
}

RunReport make_report(const Instance& input, const KernelOutcome& outcome) {
    RunReport r;
    r.problem = std::string(cli_name(input.problem));
    r.n = input.graph.size();
    r.m = static_cast<long long>(input.graph.num_edges());
    r.k = input.k;
    r.outcome = std::string(name(outcome.verdict));
    r.decided_by = outcome.decided_by;
    // A trivial verdict stands for a constant-size instance, so only a real
    // kernel reports its sizes.
    if (outcome.verdict == Verdict::Kernel) {
        r.n_kernel = outcome.kernel.graph.size();
        r.m_kernel = static_cast<long long>(outcome.kernel.graph.num_edges());
        r.k_kernel = outcome.kernel.k;
    }
    for (const auto& s : outcome.trace) {
        ++r.rule_counts[s.rule];
        r.gadget_vertices += static_cast<int>(s.added_vertices.size());
    }
    r.bound = vertex_bound(input.problem, input.k);
    return r;
}

json to_json(const RunReport& r) {
    json j{{"problem", r.problem},
           {"input", {{"n", r.n}, {"m", r.m}, {"k", r.k}}},
           {"outcome", r.outcome},
           {"decided_by", r.decided_by},
           {"kernel", {{"n", r.n_kernel}, {"m", r.m_kernel}, {"k", r.k_kernel}}},
           {"gadget_vertices", r.gadget_vertices},
           {"bound", r.bound},
           {"rule_counts", r.rule_counts},
           {"config", r.config.is_null() ? json::object() : r.config}};
    if (r.millis) j["millis"] = *r.millis;
    return j;
}

std::string csv_row(const RunReport& r) {
    std::ostringstream out;
    out << r.problem << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.outcome << ',' << r.n_kernel << ','
        << r.m_kernel << ',' << r.k_kernel << ',' << r.bound << ',' << (r.n_kernel <= r.bound ? "true" : "false")
        << ',' << std::fixed << std::setprecision(3) << r.millis.value_or(0.0);
    return out.str();
}

}  // namespace kernelkit
