#pragma once

#include <gmpxx.h>

#include <compare>
#include <vector>

namespace gwkit {

// Integer partition with parts kept non-increasing.
struct Partition {
    std::vector<long> parts;

    static Partition make(std::vector<long> p);

    long size() const;
    int length() const { return static_cast<int>(parts.size()); }
    mpz_class aut() const;           // product of multiplicity factorials
    mpz_class parts_product() const; // product of all parts
    mpz_class z_factor() const { return parts_product() * aut(); }

    auto operator<=>(const Partition&) const = default;
};

std::vector<Partition> partitions_of(long m);

// Partition part carrying a cohomology label: 0 is the identity class,
// k >= 1 is omega_k.
struct WeightedPart {
    long size = 0;
    int label = 0;
    auto operator<=>(const WeightedPart&) const = default;
};

// Cohomology-weighted partition, canonically sorted (size descending, label
// ascending within a size).
struct WeightedPartition {
    std::vector<WeightedPart> parts;

    static WeightedPartition make(std::vector<WeightedPart> p);
    // All parts carry the same label.
    static WeightedPartition uniform(const Partition& p, int label);

    long size() const;
    int length() const { return static_cast<int>(parts.size()); }
    mpz_class aut() const;
    mpz_class parts_product() const;
    Partition underlying() const;

    auto operator<=>(const WeightedPartition&) const = default;
};

// All weighted partitions of m with labels in {0..label_count-1}.
std::vector<WeightedPartition> weighted_partitions_of(long m, int label_count);

// Every labeled multiset intersection rho of mu and nu, with the leftovers:
// (rho, mu \ rho, nu \ rho). Includes the empty and the maximal intersection.
struct SubpartitionSplit {
    WeightedPartition common, mu_rest, nu_rest;
};
std::vector<SubpartitionSplit> common_subpartitions(const WeightedPartition& mu,
                                                    const WeightedPartition& nu);

} // namespace gwkit
