#pragma once

#include "gwkit/partition.hpp"
#include "gwkit/root_system.hpp"

#include <map>

namespace gwkit {

// Linear combination of normalized creation-monomial basis vectors, indexed
// by cohomology-weighted partitions. The basis vector for mu carries the
// normalization 1/(prod mu_i * |Aut(mu)|) relative to raw creation monomials;
// the empty partition is the vacuum.
using FockVector = std::map<WeightedPartition, Scalar>;

FockVector fock_basis(const WeightedPartition& p);

// (|Aut|, z-factor = prod of parts * |Aut|).
std::pair<mpz_class, Scalar> aut_and_gluing(const WeightedPartition& p);

// Pairing of the label classes: index 0 is the identity, k >= 1 is omega_k.
// Computed by equivariant localization, so the surface must be A-type.
Scalar label_pairing(const SurfaceModel& s, int a, int b);

Scalar fock_basis_pairing(const SurfaceModel& s, const WeightedPartition& mu,
                          const WeightedPartition& nu);

Scalar fock_pairing(const SurfaceModel& s, const FockVector& a, const FockVector& b);

// p_k(label) acting on v: creation for k < 0, annihilation for k > 0.
FockVector apply_heisenberg(const SurfaceModel& s, long k, int label, const FockVector& v);

// Cohomological degree 2(m - l(mu)) + sum of label degrees.
long nakajima_degree(const WeightedPartition& p);

// Dual basis at grading m: duals[b] pairs to delta_{b,c} against every basis
// vector c of size m. Throws if a Gram block is singular.
std::map<WeightedPartition, FockVector> dual_basis(const SurfaceModel& s, long m);

} // namespace gwkit
