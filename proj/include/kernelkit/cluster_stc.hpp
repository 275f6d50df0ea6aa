#pragma once

#include <optional>
#include <utility>

#include "kernelkit/kernel.hpp"

namespace kernelkit {

/// Lowest-label simplicial v with d(N[v]) <= deg(v): removes N[v] and charges
/// d(N[v]) to the budget. The cut edges are listed as removed edges; they are
/// deleted (cluster deletion) or weak (strong triadic closure) in the lift.
std::optional<std::pair<Instance, ReductionStep>> rule_cluster_simplicial(const Instance& inst);

/// 2k-vertex kernel for cluster edge deletion and strong triadic closure.
KernelOutcome kernelize_cluster_stc(const Instance& inst);

}  // namespace kernelkit
