#pragma once

#include "dicke/witness.hpp"
#include "dicke/xstate.hpp"

namespace dicke {

// Everything the CLI prints for a single state: the X parameters, the
// partial-transpose analysis, the squeezing parameters, and the spectral
// probabilities.
struct WitnessReport {
    XStateParams state;
    EntanglementReport entanglement;
    SqueezingResult squeezing;
    SpectralDecomposition spectrum;
};

inline WitnessReport analyze_state(const XStateParams& p) {
    return {p, entanglement_report(p), squeezing_ku(p), spectral_decompose(p)};
}

}  // namespace dicke
