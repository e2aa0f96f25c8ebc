#include "gwkit/fock.hpp"

#include "gwkit/qfit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gwkit {

namespace {

CohClass label_class(const SurfaceModel& s, int label) {
    return label == 0 ? CohClass::identity(s.rank) : CohClass::omega_basis(label, s.rank);
}

void check_labels(const SurfaceModel& s, const WeightedPartition& p) {
    for (const auto& wp : p.parts)
        if (wp.label > s.rank)
            throw std::invalid_argument("fock: label omega_k outside surface rank");
}

void add_scaled(FockVector& acc, const FockVector& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [p, x] : v) {
        Scalar& slot = acc[p];
        slot += x * c;
        if (slot.is_zero()) acc.erase(p);
    }
}

// Permanent of a square Scalar matrix by Ryser's formula over subsets.
Scalar permanent(const std::vector<std::vector<Scalar>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Scalar(1);
    Scalar total;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Scalar prod(1);
        for (int i = 0; i < n; ++i) {
            Scalar row_sum;
            for (int j = 0; j < n; ++j)
                if (mask & (1u << j)) row_sum += m[i][j];
            prod *= row_sum;
        }
        int bits = __builtin_popcount(mask);
        if ((n - bits) % 2 != 0) prod = -prod;
        total += prod;
    }
    return total;
}

} // namespace

FockVector fock_basis(const WeightedPartition& p) { return {{p, Scalar(1)}}; }

std::pair<mpz_class, Scalar> aut_and_gluing(const WeightedPartition& p) {
    mpz_class aut = p.aut();
    return {aut, Scalar(mpz_class(p.parts_product() * aut))};
}

Scalar label_pairing(const SurfaceModel& s, int a, int b) {
    return equivariant_pairing(s, label_class(s, a), label_class(s, b));
}

Scalar fock_basis_pairing(const SurfaceModel& s, const WeightedPartition& mu,
                          const WeightedPartition& nu) {
    check_labels(s, mu);
    check_labels(s, nu);
    if (mu.underlying() != nu.underlying()) return Scalar();

    // Group positions by part size; the sum over creation/annihilation
    // matchings factors into a permanent per size block.
    Scalar total(1);
    size_t i = 0;
    while (i < mu.parts.size()) {
        size_t j = i;
        while (j < mu.parts.size() && mu.parts[j].size == mu.parts[i].size) ++j;
        const long part = mu.parts[i].size;
        const int count = static_cast<int>(j - i);
        std::vector<std::vector<Scalar>> block(count, std::vector<Scalar>(count));
        for (int a = 0; a < count; ++a)
            for (int b = 0; b < count; ++b)
                block[a][b] = Scalar(part) *
                              label_pairing(s, mu.parts[i + a].label, nu.parts[i + b].label);
        total *= permanent(block);
        i = j;
    }
    Scalar norm = Scalar(mpz_class(mu.parts_product() * mu.aut())) *
                  Scalar(mpz_class(nu.parts_product() * nu.aut()));
    return total / norm;
}

Scalar fock_pairing(const SurfaceModel& s, const FockVector& a, const FockVector& b) {
    Scalar acc;
    for (const auto& [mu, x] : a)
        for (const auto& [nu, y] : b) {
            if (mu.size() != nu.size()) continue;
            acc += x * y * fock_basis_pairing(s, mu, nu);
        }
    return acc;
}

FockVector apply_heisenberg(const SurfaceModel& s, long k, int label, const FockVector& v) {
    if (k == 0) throw std::invalid_argument("apply_heisenberg: k must be nonzero");
    if (label < 0 || label > s.rank) throw std::invalid_argument("apply_heisenberg: bad label");
    FockVector out;
    for (const auto& [mu, c] : v) {
        check_labels(s, mu);
        if (k < 0) {
            // creation: append the part; the normalization shifts by
            // k * (new multiplicity of the part).
            WeightedPart np{-k, label};
            std::vector<WeightedPart> parts = mu.parts;
            parts.push_back(np);
            WeightedPartition grown = WeightedPartition::make(std::move(parts));
            long mult = static_cast<long>(
                std::count(grown.parts.begin(), grown.parts.end(), np));
            add_scaled(out, fock_basis(grown), c * Scalar(-k) * Scalar(mult));
        } else {
            // annihilation: remove one copy of each distinct part of size k.
            size_t i = 0;
            while (i < mu.parts.size()) {
                size_t j = i;
                while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
                if (mu.parts[i].size == k) {
                    std::vector<WeightedPart> parts = mu.parts;
                    parts.erase(parts.begin() + i);
                    Scalar w = Scalar(0) - label_pairing(s, label, mu.parts[i].label);
                    add_scaled(out, fock_basis(WeightedPartition::make(std::move(parts))), c * w);
                }
                i = j;
            }
        }
    }
    return out;
}

long nakajima_degree(const WeightedPartition& p) {
    long deg = 2 * (p.size() - p.length());
    for (const auto& wp : p.parts)
        if (wp.label != 0) deg += 2;
    return deg;
}

std::map<WeightedPartition, FockVector> dual_basis(const SurfaceModel& s, long m) {
    std::map<WeightedPartition, FockVector> out;
    std::vector<WeightedPartition> all = weighted_partitions_of(m, s.rank + 1);
    // the Gram matrix is block diagonal by underlying partition
    std::map<Partition, std::vector<WeightedPartition>> blocks;
    for (const auto& wp : all) blocks[wp.underlying()].push_back(wp);
    for (const auto& [base, members] : blocks) {
        const int n = static_cast<int>(members.size());
        std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                gram[i][j] = gram[j][i] = fock_basis_pairing(s, members[i], members[j]);
        auto inv = invert_matrix(gram);
        for (int k = 0; k < n; ++k) {
            FockVector dual;
            for (int j = 0; j < n; ++j)
                if (!inv[j][k].is_zero()) dual[members[j]] = inv[j][k];
            out[members[k]] = std::move(dual);
        }
    }
    return out;
}

} // namespace gwkit
