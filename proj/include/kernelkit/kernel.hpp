#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kernelkit/graph.hpp"
#include "kernelkit/problem.hpp"

namespace kernelkit {

enum class Verdict { TrivialYes, TrivialNo, Kernel };

/// trivial-yes, trivial-no, kernel
std::string_view name(Verdict v);

/// One applied reduction, in original labels. Replaying a step applies, in
/// this order: edge removals, vertex removals, vertex additions (which must
/// receive the listed fresh labels), edge additions, unmarking, marking. A
/// step with rule "complement" replaces the graph by its complement.
struct ReductionStep {
    std::string rule;
    std::vector<Label> removed_vertices;
    std::vector<Label> added_vertices;
    std::vector<EdgePair> removed_edges;
    std::vector<EdgePair> added_edges;
    std::vector<Label> marked;
    std::vector<Label> unmarked;
    int k_before = 0;
    int k_after = 0;

    bool operator==(const ReductionStep&) const = default;
};

/// Result of a kernelization.
///
/// For Kernel, `kernel` is the output instance. For TrivialYes it is the
/// reduced instance at the moment of decision and `yes_witness` solves it
/// (respecting `marked`); lifting that witness gives a solution of the input.
/// `decided_by` names the rule or gate that ended the pipeline.
struct KernelOutcome {
    Verdict verdict = Verdict::TrivialNo;
    Instance kernel;
    std::vector<ReductionStep> trace;
    std::vector<Label> marked;
    std::vector<EdgePair> yes_witness;
    std::string decided_by;
};

/// Graph, marked labels and budget before each step, plus the final state.
struct ReplayState {
    Graph graph;
    std::vector<Label> marked;
    int k = 0;
};

/// Re-applies the trace to (g, k). Throws input_error if a step does not fit.
std::vector<ReplayState> replay(const Graph& g, int k, const std::vector<ReductionStep>& trace);

struct LiftResult {
    std::vector<EdgePair> solution;  // labels of the input graph
    /// Reverse steps where the direct mapping overshot and an exact search
    /// on the intermediate instance was used instead.
    std::vector<std::string> fallbacks;
};

/// Maps a solution of outcome.kernel back to a solution of `input` with at
/// most input.k modifications. Throws input_error if the witness does not
/// solve the kernel within its budget.
LiftResult lift_solution(const Instance& input, const KernelOutcome& outcome,
                         const std::vector<EdgePair>& kernel_witness);

/// Runs the kernelization matching input.problem.
KernelOutcome kernelize(const Instance& input);

/// Upper bound on the kernel's vertex count for the problem and budget.
long long vertex_bound(ProblemKind p, int k);

/// (6k + ceil(sqrt(2k)) + 3) * n: edge budget of an n-vertex completion kernel.
long long completion_edge_bound(int k, int n);

/// Smallest s with s*s >= x.
long long ceil_sqrt(long long x);

}  // namespace kernelkit
