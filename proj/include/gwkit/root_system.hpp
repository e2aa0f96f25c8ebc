#pragma once

#include "gwkit/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gwkit {

enum class SurfaceKind { A, D, E };

// ADE lattice data plus, for A-type, the toric fixed-point tangent weights of
// the minimal resolution. Roots are integer vectors in the E_1..E_n basis.
struct SurfaceModel {
    SurfaceKind kind = SurfaceKind::A;
    int rank = 0;
    std::vector<std::vector<long>> cartan;
    std::vector<std::vector<mpq_class>> cartan_inv;
    std::vector<std::vector<long>> positive_roots;
    // A-type only: tangent weight pair at p_1..p_{n+1}; first = weight normal
    // to E_{i} at its left end (along E_{i-1} direction), second = weight
    // along E_i toward p_{i+1}.
    std::vector<std::pair<Poly2, Poly2>> fixed_points;

    bool is_a_type() const { return kind == SurfaceKind::A; }
};

SurfaceModel build_surface(SurfaceKind kind, int n);

// Curve class with integer coefficients over E_1..E_n.
struct CurveClass {
    std::vector<long> e;
};

// Cohomology class over the basis {1, omega_1..omega_n}.
struct CohClass {
    Scalar id;
    std::vector<Scalar> omega;

    static CohClass identity(int n);
    static CohClass omega_basis(int k, int n); // omega_k, 1-based
};

// Sum c_i E_i rewritten over {omega_i} (E = -C omega).
CohClass divisor_class(const SurfaceModel& s, const CurveClass& c);

// alpha_{ij} = E_i + ... + E_{j-1} for 1 <= i < j <= n+1 (A-type roots).
CurveClass chain_root(const SurfaceModel& s, int i, int j);

// Intersection pairing: E_i . E_j = -C_ij, omega_i . E_j = delta_ij,
// omega_i . omega_j = -(C^-1)_ij. Classes with an identity component are
// rejected (only compactly supported classes pair here).
Scalar intersection(const SurfaceModel& s, const CurveClass& a, const CurveClass& b);
Scalar intersection(const SurfaceModel& s, const CurveClass& a, const CohClass& b);
Scalar intersection(const SurfaceModel& s, const CohClass& a, const CohClass& b);

// Atiyah-Bott fixed-point sum over the A-type resolution; lifts: 1 -> 1,
// E_i -> its normal weight at the two fixed points on it, 0 elsewhere.
Scalar equivariant_pairing(const SurfaceModel& s, const CohClass& a, const CohClass& b);

// Exponent vector of s^beta: s_i gets beta . omega_i = coefficient of E_i.
std::vector<int> s_monomial(const CurveClass& beta);

// beta = d * alpha for a positive root alpha and d >= 1, if such exist.
std::optional<std::pair<CurveClass, long>> is_root_multiple(const SurfaceModel& s,
                                                            const CurveClass& beta);

} // namespace gwkit
