#pragma once

#include "gwkit/partition.hpp"
#include "gwkit/series.hpp"

namespace gwkit {

struct HurwitzQuery {
    long m = 1;
    Partition rho;
    Partition lambda;
    long genus = 0;

    // Simple branch points demanded by Riemann-Hurwitz.
    long branch_count() const {
        return 2 * genus - 2 + static_cast<long>(rho.length() + lambda.length());
    }
};

// Disconnected double Hurwitz number by brute-force element-level counting:
// (1/m!)·#{(σ, τ_1..τ_r): σ of type ρ, τ_i transpositions, σ·τ_1···τ_r of
// type λ}. Tractability guard: m <= 3 or branch count <= 6 (and m <= 8).
mpq_class hurwitz_enumerate(const HurwitzQuery& q);

// Same number through the class algebra: the count vector lives on conjugacy
// classes and each simple branch point multiplies by the transposition
// class-sum matrix (the cut-and-join operator). Guard: m <= 8, genus <= 5.
mpq_class hurwitz_class_algebra(const HurwitzQuery& q);

// Σ_g (−1)^g · m^{1−r}/r! · H^g_{ρ,λ} · u^{2g} through the exclusive u-order,
// class-algebra backed. H^g here counts covers with labeled ramification
// points over 0 and ∞, i.e. |Aut ρ|·|Aut λ| times the tuple-count oracles;
// this is the normalization under which the one-part closed form holds.
// The (−1)^g places the series in the sin convention.
Series signed_hurwitz_series(const Partition& rho, const Partition& lambda, int u_order);

// One-part closed form ∏_i S(ρ_i u)/S(u), sin convention.
Series one_part_series(const Partition& rho, int u_order);

// Stationary series of P^1 relative to two partitions:
//   ∏_i S(μ_i u) ∏_j S(ν_j u) / (|Aut μ| |Aut ν| S(u)),
// cross-checked coefficientwise against the Hurwitz-side assembly
//   H_{μ,(m)}(u)·H_{ν,(m)}(u)·S(u)/(|Aut μ||Aut ν|)
// built from signed_hurwitz_series. Throws if the constructions disagree.
Series stationary_p1_series(const Partition& mu, const Partition& nu, int u_order);

} // namespace gwkit
