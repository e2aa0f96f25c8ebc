#include "gwkit/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gwkit {

namespace {

std::vector<std::vector<long>> cartan_matrix(SurfaceKind kind, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
    case SurfaceKind::A:
        if (n < 1) throw std::invalid_argument("build_surface: A(n) needs n >= 1");
        for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
        break;
    case SurfaceKind::D:
        if (n < 3) throw std::invalid_argument("build_surface: D(n) needs n >= 3");
        for (int i = 1; i < n - 2; ++i) edges.push_back({i, i + 1});
        edges.push_back({n - 2, n - 1});
        edges.push_back({n - 2, n});
        break;
    case SurfaceKind::E:
        if (n < 6 || n > 8) throw std::invalid_argument("build_surface: E(n) needs n in {6,7,8}");
        edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
        if (n >= 7) edges.push_back({6, 7});
        if (n >= 8) edges.push_back({7, 8});
        break;
    }
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (auto [i, j] : edges) c[i - 1][j - 1] = c[j - 1][i - 1] = -1;
    return c;
}

std::vector<std::vector<mpq_class>> invert_rational(const std::vector<std::vector<long>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) {
        inv[i][i] = 1;
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    }
    for (int c = 0; c < n; ++c) {
        int pr = c;
        while (pr < n && m[pr][c] == 0) ++pr;
        if (pr == n) throw std::domain_error("invert_rational: singular matrix");
        std::swap(m[c], m[pr]);
        std::swap(inv[c], inv[pr]);
        mpq_class d = m[c][c];
        for (int k = 0; k < n; ++k) {
            m[c][k] /= d;
            inv[c][k] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (int k = 0; k < n; ++k) {
                m[i][k] -= f * m[c][k];
                inv[i][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

// Closure of the simple roots under simple reflections, keeping only
// nonnegative vectors; reaches every positive root.
std::vector<std::vector<long>> positive_root_closure(const std::vector<std::vector<long>>& c) {
    const int n = static_cast<int>(c.size());
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<long> v = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += c[i][j] * v[j];
            std::vector<long> w = v;
            w[i] -= pairing;
            if (w[i] < 0) continue;
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

void check_rank(const SurfaceModel& s, size_t len, const char* what) {
    if (static_cast<int>(len) != s.rank)
        throw std::invalid_argument(std::string(what) + ": wrong coefficient count");
}

} // namespace

SurfaceModel build_surface(SurfaceKind kind, int n) {
    SurfaceModel s;
    s.kind = kind;
    s.rank = n;
    s.cartan = cartan_matrix(kind, n);
    s.cartan_inv = invert_rational(s.cartan);
    s.positive_roots = positive_root_closure(s.cartan);
    if (kind == SurfaceKind::A) {
        for (int i = 1; i <= n + 1; ++i) {
            Poly2 wl = Poly2::t1() * GaussRat(n + 2 - i) - Poly2::t2() * GaussRat(i - 1);
            Poly2 wr = Poly2::t1() * GaussRat(i - n - 1) + Poly2::t2() * GaussRat(i);
            s.fixed_points.push_back({wl, wr});
        }
    }
    return s;
}

CohClass CohClass::identity(int n) {
    CohClass c;
    c.id = Scalar(1);
    c.omega.assign(n, Scalar());
    return c;
}

CohClass CohClass::omega_basis(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("CohClass::omega_basis: index out of range");
    CohClass c;
    c.omega.assign(n, Scalar());
    c.omega[k - 1] = Scalar(1);
    return c;
}

CohClass divisor_class(const SurfaceModel& s, const CurveClass& c) {
    check_rank(s, c.e.size(), "divisor_class");
    CohClass r;
    r.omega.assign(s.rank, Scalar());
    // E_j = -sum_k C_jk omega_k
    for (int k = 0; k < s.rank; ++k) {
        long acc = 0;
        for (int j = 0; j < s.rank; ++j) acc -= c.e[j] * s.cartan[j][k];
        r.omega[k] = Scalar(acc);
    }
    return r;
}

CurveClass chain_root(const SurfaceModel& s, int i, int j) {
    if (!s.is_a_type()) throw std::invalid_argument("chain_root: A-type only");
    if (!(1 <= i && i < j && j <= s.rank + 1))
        throw std::invalid_argument("chain_root: need 1 <= i < j <= n+1");
    CurveClass c;
    c.e.assign(s.rank, 0);
    for (int k = i; k < j; ++k) c.e[k - 1] = 1;
    return c;
}

Scalar intersection(const SurfaceModel& s, const CurveClass& a, const CurveClass& b) {
    check_rank(s, a.e.size(), "intersection");
    check_rank(s, b.e.size(), "intersection");
    long acc = 0;
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j) acc -= a.e[i] * s.cartan[i][j] * b.e[j];
    return Scalar(acc);
}

Scalar intersection(const SurfaceModel& s, const CurveClass& a, const CohClass& b) {
    check_rank(s, a.e.size(), "intersection");
    check_rank(s, b.omega.size(), "intersection");
    if (!b.id.is_zero())
        throw std::invalid_argument("intersection: identity component present; use equivariant_pairing");
    Scalar acc;
    for (int i = 0; i < s.rank; ++i) acc += Scalar(a.e[i]) * b.omega[i];
    return acc;
}

Scalar intersection(const SurfaceModel& s, const CohClass& a, const CohClass& b) {
    check_rank(s, a.omega.size(), "intersection");
    check_rank(s, b.omega.size(), "intersection");
    if (!a.id.is_zero() || !b.id.is_zero())
        throw std::invalid_argument("intersection: identity component present; use equivariant_pairing");
    Scalar acc;
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j)
            acc -= a.omega[i] * b.omega[j] * Scalar(mpq_class(s.cartan_inv[i][j]));
    return acc;
}

Scalar equivariant_pairing(const SurfaceModel& s, const CohClass& a, const CohClass& b) {
    if (!s.is_a_type())
        throw std::invalid_argument("equivariant_pairing: fixed-point data exists only for A-type");
    check_rank(s, a.omega.size(), "equivariant_pairing");
    check_rank(s, b.omega.size(), "equivariant_pairing");

    // restriction of E_j (1-based) at p_i: normal weight at its two points
    auto edge_at = [&](int j, int i) -> Poly2 {
        if (i == j) return s.fixed_points[i - 1].first;       // p_j, weight along E_{j-1} side
        if (i == j + 1) return s.fixed_points[i - 1].second;  // p_{j+1}, weight along E_{j+1} side
        return Poly2();
    };
    auto restrict_class = [&](const CohClass& c, int i) {
        Scalar r = c.id;
        for (int k = 1; k <= s.rank; ++k) {
            if (c.omega[k - 1].is_zero()) continue;
            Poly2 lift; // omega_k = -sum_j (C^-1)_kj E_j
            for (int j = std::max(1, i - 1); j <= std::min(s.rank, i); ++j) {
                mpq_class coef = -s.cartan_inv[k - 1][j - 1];
                lift += edge_at(j, i) * GaussRat(coef);
            }
            r += c.omega[k - 1] * Scalar(lift);
        }
        return r;
    };

    Scalar acc;
    for (int i = 1; i <= s.rank + 1; ++i) {
        const auto& [wl, wr] = s.fixed_points[i - 1];
        acc += restrict_class(a, i) * restrict_class(b, i) / Scalar(wl * wr);
    }
    return acc;
}

std::vector<int> s_monomial(const CurveClass& beta) {
    std::vector<int> m;
    m.reserve(beta.e.size());
    for (long c : beta.e) {
        if (c < 0) throw std::domain_error("s_monomial: class is not effective");
        m.push_back(static_cast<int>(c));
    }
    return m;
}

std::optional<std::pair<CurveClass, long>> is_root_multiple(const SurfaceModel& s,
                                                            const CurveClass& beta) {
    check_rank(s, beta.e.size(), "is_root_multiple");
    long d = 0;
    for (long c : beta.e) {
        if (c < 0) return std::nullopt;
        d = std::gcd(d, c);
    }
    if (d == 0) return std::nullopt;
    std::vector<long> base(beta.e);
    for (long& c : base) c /= d;
    if (!std::binary_search(s.positive_roots.begin(), s.positive_roots.end(), base))
        return std::nullopt;
    return std::make_pair(CurveClass{base}, d);
}

} // namespace gwkit
