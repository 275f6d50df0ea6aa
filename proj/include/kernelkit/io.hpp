#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kernelkit/kernel.hpp"

namespace kernelkit {

enum class GraphFormat { EdgeList, Dimacs };

std::string_view name(GraphFormat f);
std::optional<GraphFormat> parse_format(std::string_view s);

/// Malformed graph text; the message starts with "source:line:".
class parse_error : public input_error {
public:
    parse_error(const std::string& source, int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

struct ParsedGraph {
    Graph graph;
    GraphFormat format = GraphFormat::EdgeList;
};

/// Edge list: "n m" then m lines "u v" (0-based). DIMACS: "p edge n m" then
/// "e u v" (1-based). Blank lines and comments ('#', or 'c' in DIMACS) are
/// skipped. Without an explicit format, a first line starting with 'p' or
/// 'c' selects DIMACS.
ParsedGraph read_graph(std::istream& in, std::optional<GraphFormat> format = std::nullopt,
                       const std::string& source = "<input>");
ParsedGraph read_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt);

/// Writes ids 0..n-1; labels are not part of either format.
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

nlohmann::json to_json(const ReductionStep& step);
ReductionStep step_from_json(const nlohmann::json& j);

/// {"schema": 1, "problem", "k", "steps": [...], "kernel": {...}}. The kernel
/// lists its labels so that edge-list ids can be mapped back.
nlohmann::json trace_json(const Instance& input, const KernelOutcome& outcome);

struct RunReport {
    std::string problem;
    int n = 0;
    long long m = 0;
    int k = 0;
    std::string outcome;
    std::string decided_by;
    int n_kernel = 0;
    long long m_kernel = 0;
    int k_kernel = 0;
    /// Vertices introduced by merge and clean-up gadgets.
    int gadget_vertices = 0;
    long long bound = 0;
    std::map<std::string, int> rule_counts;
    std::optional<double> millis;
    nlohmann::json config;
};

RunReport make_report(const Instance& input, const KernelOutcome& outcome);
nlohmann::json to_json(const RunReport& r);

inline constexpr std::string_view kCsvHeader = "problem,n,m,k,outcome,n_kernel,m_kernel,k_kernel,bound,ok,millis";

/// One CSV row matching kCsvHeader; ok is whether n_kernel <= bound.
std::string csv_row(const RunReport& r);

}  // namespace kernelkit
