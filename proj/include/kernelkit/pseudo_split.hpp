#pragma once

#include "kernelkit/split.hpp"

namespace kernelkit {

/// True (a no-instance) iff |M| > 4k+5 or p + q + 2 max(r-1, 0) > k, where
/// p, q, r count the packing's 2K2s, C4s and C5s.
bool modulator_gate(const ModulatorPacking& packing, int k);

KernelOutcome kernelize_pseudo_split_deletion(const Instance& inst);
KernelOutcome kernelize_pseudo_split_completion(const Instance& inst);

}  // namespace kernelkit
