#pragma once

#include <optional>
#include <utility>

#include "kernelkit/kernel.hpp"

namespace kernelkit {

/// Removes the lowest-label vertex that lies in no induced P4 or C4.
std::optional<std::pair<Instance, ReductionStep>> rule_remove_unobstructed(const Instance& inst);

/// Adds the lowest non-edge that is a candidate edge of at least k+1 P4s and
/// C4s, and decrements k.
std::optional<std::pair<Instance, ReductionStep>> rule_add_forced_edge(const Instance& inst);

/// (2k^2+2k)-vertex kernel for trivially perfect completion.
KernelOutcome kernelize_tpc(const Instance& inst);

}  // namespace kernelkit
