#pragma once

#include "gwkit/fock.hpp"
#include "gwkit/qfit.hpp"
#include "gwkit/root_system.hpp"
#include "gwkit/series.hpp"

namespace gwkit {

// Rubber three-point input over an ADE resolution: curve degree beta = d * root,
// boundary conditions mu, nu (weighted partitions of equal size).
struct RubberSpec {
    SurfaceModel surface;
    CurveClass root;
    long d = 1;
    WeightedPartition mu;
    WeightedPartition nu;
};

// Closed-form rubber series
//   (t1+t2) d^{l(mu)+l(nu)-3} / (|Aut mu| |Aut nu|)
//     * prod_i (alpha.gamma_i) S(d mu_i u) * prod_j (alpha.eta_j) S(d nu_j u) / S(du)^2
// where beta = d * root is rewritten as a multiple of a positive root alpha.
// Returns the zero series when beta is not a positive-root multiple, or when any
// boundary label is the identity class or pairs to zero with alpha.
Series rubber_series(const RubberSpec& spec, int u_order);

// Connected relative three-point generating function: sum over positive roots
// alpha and d >= 1 of the rubber contribution times u^{l(mu)+l(nu)-2} s^{d alpha},
// truncated to total s-degree s_cap and exclusive u-order u_order.
Series theta_connected(const SurfaceModel& s, const WeightedPartition& mu,
                       const WeightedPartition& nu, int u_order, int s_cap);

// Disconnected counterpart: sum over common subpartitions rho of (mu, nu) of
// (-1)^{|rho|-l(rho)} <rho|rho> theta_connected(mu \ rho, nu \ rho).
Series theta_disconnected(const SurfaceModel& s, const WeightedPartition& mu,
                          const WeightedPartition& nu, int u_order, int s_cap);

// Midpoint insertions padded with unit parts to size m.
WeightedPartition double_point_operator(long m);    // (2, 1, ..., 1)
WeightedPartition divisor_operator(long m, int k);  // ((1, omega_k), 1, ..., 1)
WeightedPartition identity_operator(long m);        // (1, ..., 1)

// Nonzero-degree sector of the disconnected relative partition function for a
// midpoint insertion rho of size m = |mu| = |nu|:
//   (2, 1^{m-2})          u^{1-l(mu)-l(nu)} d/du theta_disconnected
//   ((1, omega_k), 1^{m-1}) u^{-l(mu)-l(nu)} s_k d/ds_k theta_disconnected
//   (1^m)                 identically zero
// Any other rho needs the degree-zero cap theory and is rejected.
Series divisor_partition_function(const SurfaceModel& s, const WeightedPartition& mu,
                                  const WeightedPartition& nu, const WeightedPartition& rho,
                                  int u_order, int s_cap);

// Structure constant <mu, nu * rho> = (-iu)^{-m + l(mu) + l(nu) + l(rho)} Z' for
// the midpoint insertions above; the identity insertion yields the Poincare
// pairing <mu|nu> as a constant series.
Series ring_structure_constant(const SurfaceModel& s, const WeightedPartition& mu,
                               const WeightedPartition& nu, const WeightedPartition& rho,
                               int u_order, int s_cap);

// Per-monomial rational-function fit in q = -exp(iu). degree_used is the
// smallest budget (doubling from 1, capped at max_degree) whose fit left no
// spare-row residual.
struct MonomialFit {
    std::vector<int> monomial;
    int degree_used = 0;
    RationalFitResult fit;
};

struct QRationalityReport {
    std::vector<MonomialFit> monomials;
    bool all_pass = true;
    long min_matched = 0;  // least spare matched count over the monomials
};

// Fits every s-monomial slice of z as a rational function in q; all_pass is
// true when every slice fits exactly within the degree budget.
QRationalityReport q_rationality_check(const Series& z, int max_degree);

} // namespace gwkit
