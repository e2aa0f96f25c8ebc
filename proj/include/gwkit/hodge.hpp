#pragma once

#include "gwkit/series.hpp"
#include "gwkit/surface_invariants.hpp"

#include <utility>
#include <vector>

namespace gwkit {

// f0(u) = 1/S(u)^2, the no-insertion lambda_g series.
Series f0_series(int u_order);

// A_k(u) = sum_{j=1}^{k} j! C(k-1,k-j) k^{-j} S(ju) S(u)^{j-2}, k >= 1.
Series a_series(long k, int u_order);

// B_l(u) = S((l+1)u) / S(u)^{l+1}, l >= 0.
Series b_series(long l, int u_order);

// C_{k,l}(u) = A_k(u) B_l(u) / f0(u).
Series c_series(long k, long l, int u_order);

struct HodgeSeriesBundle {
    Series f0;
    std::vector<Series> a;              // a[k-1] = A_k
    std::vector<Series> b;              // b[l] = B_l
    std::vector<std::vector<Series>> c; // c[k-1][l] = C_{k,l}
};

HodgeSeriesBundle make_hodge_bundle(long k_max, long l_max, int u_order);

// Hodge series with r stationary insertions in curve degree d, as a series in
// u and z_1..z_r (total z-degree capped at z_order):
//   F_d(u, z) = d^{-3} S(du)^{2r-2} prod_k (1/iu)[G(w+_k, z_k) - G(w-_k, z_k)],
//   w+-_k = +-i d z_k u / (1 - e^{-+idu}),  G(w,z) = sum w^m / (z(z+1)..(z+m)).
// For d = 1 the single-slot bracket is checked against the inversion form
//   (1/z) sum_{k>=1} z^k S(ku)/((k-1)! S(u)^k) prod_{i<=k} (1+z/i)^{-1},
// and for d > 1 the result is checked against the d^{r-3}, u -> du rescaling
// of the degree-one series; a mismatch throws.
Series f_series(int r, long d, int u_order, int z_order);

// Verifies, for every m <= m_max, the A-binomial identity
//   S(mu) S(u)^{m-2} = (1/m!) sum_a (-1)^{m-a} A_a(u) C(m,a) a^m,
// the elementary-symmetric expansion of B_m over F_0..F_m, and the
// complete-symmetric inversion recovering F_m from B_0..B_m.
std::vector<CheckResult> inversion_identities(long m_max, int u_order);

// (lhs, rhs) of the rooted-forest sum over rho |- m-a:
//   sum_rho (1/|Aut rho|) prod rho_i^{rho_i - 1}/rho_i! (-m)^{l(rho)}
//     = -m (-a)^{m-a-1} / (m-a)!.
std::pair<mpq_class, mpq_class> tree_sum_identity(long m, long a);

} // namespace gwkit
