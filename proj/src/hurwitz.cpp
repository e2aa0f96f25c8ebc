#include "gwkit/hurwitz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gwkit {

namespace {

using Perm = std::vector<int>; // p[i] = image of i

long validate(const HurwitzQuery& q) {
    if (q.m < 1) throw std::invalid_argument("hurwitz: m must be positive");
    if (q.genus < 0) throw std::invalid_argument("hurwitz: genus must be nonnegative");
    if (q.rho.size() != q.m || q.lambda.size() != q.m)
        throw std::invalid_argument("hurwitz: profiles must partition m");
    return q.branch_count();
}

Partition cycle_type(const Perm& p) {
    std::vector<long> parts;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            ++len;
            j = static_cast<size_t>(p[j]);
        }
        parts.push_back(len);
    }
    return Partition::make(parts);
}

// Consecutive cycles, e.g. (3,2) on {0..4} maps to (0 1 2)(3 4).
Perm representative(const Partition& type) {
    Perm p(static_cast<size_t>(type.size()));
    long pos = 0;
    for (long part : type.parts) {
        for (long k = 0; k < part; ++k) p[pos + k] = static_cast<int>(pos + (k + 1) % part);
        pos += part;
    }
    return p;
}

std::vector<Perm> transpositions(int m) {
    std::vector<Perm> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Perm t(m);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[i], t[j]);
            out.push_back(t);
        }
    return out;
}

Perm compose(const Perm& a, const Perm& b) { // apply b first
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

} // namespace

mpq_class hurwitz_enumerate(const HurwitzQuery& q) {
    long r = validate(q);
    if (r < 0) return 0;
    if (q.m > 8 || (q.m > 3 && r > 6))
        throw std::domain_error(
            "hurwitz_enumerate: beyond the brute-force range (need m <= 3 or branch count <= 6, "
            "m <= 8); use hurwitz_class_algebra");

    const int m = static_cast<int>(q.m);
    std::vector<Perm> elements;
    Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        elements.push_back(p);
    } while (std::next_permutation(p.begin(), p.end())); // lex order: index by binary search

    auto index_of = [&](const Perm& x) {
        return static_cast<size_t>(
            std::lower_bound(elements.begin(), elements.end(), x) - elements.begin());
    };

    const std::vector<Perm> taus = transpositions(m);
    std::vector<std::vector<size_t>> neighbor(elements.size());
    for (size_t i = 0; i < elements.size(); ++i) {
        neighbor[i].reserve(taus.size());
        for (const Perm& t : taus) neighbor[i].push_back(index_of(compose(elements[i], t)));
    }

    // count[x] after k steps = #{(sigma, tau_1..tau_k) : x = sigma*tau_k*..*tau_1}
    std::vector<mpz_class> count(elements.size());
    for (size_t i = 0; i < elements.size(); ++i)
        if (cycle_type(elements[i]) == q.rho) count[i] = 1;
    for (long step = 0; step < r; ++step) {
        std::vector<mpz_class> next(elements.size());
        for (size_t i = 0; i < elements.size(); ++i)
            for (size_t j : neighbor[i]) next[i] += count[j];
        count = std::move(next);
    }

    mpz_class total = 0;
    for (size_t i = 0; i < elements.size(); ++i)
        if (cycle_type(elements[i]) == q.lambda) total += count[i];
    return rat(total, factorial(q.m));
}

mpq_class hurwitz_class_algebra(const HurwitzQuery& q) {
    long r = validate(q);
    if (r < 0) return 0;
    if (q.m > 8 || q.genus > 5)
        throw std::domain_error("hurwitz_class_algebra: guard is m <= 8, genus <= 5");

    const std::vector<Partition> classes = partitions_of(q.m);
    auto class_index = [&](const Partition& t) {
        return static_cast<size_t>(std::find(classes.begin(), classes.end(), t) -
                                   classes.begin());
    };

    // step[to][from]: composing a fixed element of class `to` with one
    // transposition lands in class `from` this many ways; v then tracks the
    // per-element tuple count as a class function.
    const std::vector<Perm> taus = transpositions(static_cast<int>(q.m));
    std::vector<std::vector<long>> step(classes.size(), std::vector<long>(classes.size(), 0));
    for (size_t c = 0; c < classes.size(); ++c) {
        Perm h = representative(classes[c]);
        for (const Perm& t : taus) ++step[c][class_index(cycle_type(compose(h, t)))];
    }

    std::vector<mpz_class> v(classes.size());
    v[class_index(q.rho)] = 1;
    for (long k = 0; k < r; ++k) {
        std::vector<mpz_class> next(classes.size());
        for (size_t to = 0; to < classes.size(); ++to)
            for (size_t from = 0; from < classes.size(); ++from)
                if (step[to][from] != 0) next[to] += step[to][from] * v[from];
        v = std::move(next);
    }
    return rat(v[class_index(q.lambda)], q.lambda.z_factor());
}

Series signed_hurwitz_series(const Partition& rho, const Partition& lambda, int u_order) {
    if (rho.size() != lambda.size() || rho.size() < 1)
        throw std::invalid_argument("signed_hurwitz_series: profiles must partition the same m");
    const long m = rho.size();
    const mpz_class cover_labelings = rho.aut() * lambda.aut();
    constexpr long max_genus = 5; // class-algebra guard; window records the cut

    Series out = Series::zero(0);
    out.u_lo = 0;
    out.u_hi = std::min<long>(u_order, 2 * (max_genus + 1));
    for (long g = 0; 2 * g < u_order && g <= max_genus; ++g) {
        HurwitzQuery q{m, rho, lambda, g};
        long r = q.branch_count();
        mpq_class h = hurwitz_class_algebra(q);
        if (h == 0) continue;
        // Covers with labeled ramification points over 0 and infinity.
        mpq_class c = pow_rat(mpq_class(m), 1 - r) / mpq_class(factorial(r));
        c *= mpq_class(cover_labelings);
        c *= h;
        if (g % 2 != 0) c = -c;
        out.set(SeriesKey{static_cast<int>(2 * g), {}}, Scalar(c));
    }
    return out;
}

Series one_part_series(const Partition& rho, int u_order) {
    Series num = Series::constant(Scalar(1), 0).with_u_hi(u_order);
    for (long part : rho.parts)
        num = num * s_function(static_cast<int>(part), SConvention::sin, u_order);
    return num / s_function(1, SConvention::sin, u_order);
}

Series stationary_p1_series(const Partition& mu, const Partition& nu, int u_order) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("stationary_p1_series: |mu| and |nu| must agree");
    if (mu.size() < 1) throw std::invalid_argument("stationary_p1_series: empty profiles");
    const long m = mu.size();
    const mpz_class auts = mu.aut() * nu.aut();
    const Scalar aut_scale(rat(mpz_class(1), auts));

    Series direct = Series::constant(Scalar(1), 0).with_u_hi(u_order);
    for (long part : mu.parts)
        direct = direct * s_function(static_cast<int>(part), SConvention::sin, u_order);
    for (long part : nu.parts)
        direct = direct * s_function(static_cast<int>(part), SConvention::sin, u_order);
    direct = direct / s_function(1, SConvention::sin, u_order) * aut_scale;

    const Partition totally_ramified = Partition::make({m});
    Series assembled = signed_hurwitz_series(mu, totally_ramified, u_order) *
                       signed_hurwitz_series(nu, totally_ramified, u_order) *
                       s_function(1, SConvention::sin, u_order) * aut_scale;

    if (!equal_on_common_window(direct, assembled))
        throw std::runtime_error("stationary_p1_series: direct and Hurwitz-side constructions "
                                 "disagree");
    return direct;
}

} // namespace gwkit
