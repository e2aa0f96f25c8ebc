#pragma once

#include "gwkit/root_system.hpp"

#include <string>
#include <vector>

namespace gwkit {

// Reduced descendent bracket on an ADE resolution: genus, curve class, the
// tau_{a_k}(1) entries (a_k >= 1) and the tau_{b_l}(omega_{label}) entries
// (b_l >= 0).
struct InvariantSpec {
    long genus = 0;
    CurveClass beta;
    std::vector<long> id_descendents;
    std::vector<std::pair<long, int>> div_descendents;
};

enum class VanishingReason { none, not_root_multiple, dimension, zero_prefactor };

struct InvariantValue {
    mpq_class value = 0;
    VanishingReason reason = VanishingReason::none;
};

const char* to_string(VanishingReason r);

// Closed-form evaluation: prod_{i=1}^{r}(2g+s-3+i) * d^{2g+s-3}
//   * prod_k (a_k-1)!/(2a_k-1)! (-1/2)^{a_k-1}
//   * prod_l b_l!/(2b_l+1)! (-1/2)^{b_l} (alpha . omega_{l}),
// where beta = d*alpha for a positive root alpha; otherwise zero. The
// factorial-ratio prefactor is the rising product, defined for every genus.
InvariantValue reduced_invariant(const SurfaceModel& s, const InvariantSpec& spec);

// Same formula on a D or E lattice (pairings from the Cartan data).
InvariantValue de_invariant(const SurfaceModel& s, const InvariantSpec& spec);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample, empty when pass
};

// Structural identities of the closed formula: d-scaling, root-independence,
// stationary multiplicativity, dimension vanishing, dilaton and divisor
// compatibility.
std::vector<CheckResult> consistency_suite();

} // namespace gwkit
