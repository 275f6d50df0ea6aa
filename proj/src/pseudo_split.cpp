#include "kernelkit/pseudo_split.hpp"

#include <algorithm>

namespace kernelkit {

bool modulator_gate(const ModulatorPacking& packing, int k) {
    const long long m = static_cast<long long>(packing.vertices().size());
    const long long p = packing.count(ObstructionKind::TwoK2);
    const long long q = packing.count(ObstructionKind::C4);
    const long long r = packing.count(ObstructionKind::C5);
    // At most one C5 survives as the cycle part; every other one costs two.
    return m > 4LL * k + 5 || p + q + 2 * std::max(r - 1, 0LL) > k;
}

KernelOutcome kernelize_pseudo_split_deletion(const Instance& inst) {
    if (inst.problem != ProblemKind::PseudoSplitDeletion) throw input_error("expected a pseudo-split deletion instance");
    return kernelize_split_family(inst, SplitVariant::PseudoSplit);
}

KernelOutcome kernelize_pseudo_split_completion(const Instance& inst) {
    if (inst.problem != ProblemKind::PseudoSplitCompletion)
        throw input_error("expected a pseudo-split completion instance");
    return complement_wrapped(inst, ProblemKind::PseudoSplitDeletion, SplitVariant::PseudoSplit);
}

}  // namespace kernelkit
