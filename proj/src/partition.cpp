#include "gwkit/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gwkit {

namespace {

template <typename Parts>
mpz_class multiplicity_factorials(const Parts& parts) {
    mpz_class aut = 1;
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
        aut *= f;
        i = j;
    }
    return aut;
}

void enumerate_parts(long remaining, long max_part, std::vector<long>& acc,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{acc});
        return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_parts(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

// Multisets of `count` labels drawn from {0..label_count-1}, non-decreasing.
void label_multisets(int count, int label_count, int min_label, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (count == 0) {
        out.push_back(acc);
        return;
    }
    for (int l = min_label; l < label_count; ++l) {
        acc.push_back(l);
        label_multisets(count - 1, label_count, l, acc, out);
        acc.pop_back();
    }
}

} // namespace

Partition Partition::make(std::vector<long> p) {
    for (long x : p)
        if (x <= 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition{std::move(p)};
}

long Partition::size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

mpz_class Partition::aut() const { return multiplicity_factorials(parts); }

mpz_class Partition::parts_product() const {
    mpz_class r = 1;
    for (long p : parts) r *= p;
    return r;
}

std::vector<Partition> partitions_of(long m) {
    if (m < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<long> acc;
    enumerate_parts(m, m == 0 ? 1 : m, acc, out);
    return out;
}

WeightedPartition WeightedPartition::make(std::vector<WeightedPart> p) {
    for (const auto& wp : p) {
        if (wp.size <= 0) throw std::invalid_argument("WeightedPartition: parts must be positive");
        if (wp.label < 0) throw std::invalid_argument("WeightedPartition: bad label");
    }
    std::sort(p.begin(), p.end(), [](const WeightedPart& a, const WeightedPart& b) {
        return a.size != b.size ? a.size > b.size : a.label < b.label;
    });
    return WeightedPartition{std::move(p)};
}

WeightedPartition WeightedPartition::uniform(const Partition& p, int label) {
    std::vector<WeightedPart> parts;
    parts.reserve(p.parts.size());
    for (long x : p.parts) parts.push_back({x, label});
    return make(std::move(parts));
}

long WeightedPartition::size() const {
    long s = 0;
    for (const auto& p : parts) s += p.size;
    return s;
}

mpz_class WeightedPartition::aut() const { return multiplicity_factorials(parts); }

mpz_class WeightedPartition::parts_product() const {
    mpz_class r = 1;
    for (const auto& p : parts) r *= p.size;
    return r;
}

Partition WeightedPartition::underlying() const {
    std::vector<long> p;
    p.reserve(parts.size());
    for (const auto& wp : parts) p.push_back(wp.size);
    return Partition::make(std::move(p));
}

std::vector<WeightedPartition> weighted_partitions_of(long m, int label_count) {
    if (label_count < 1) throw std::invalid_argument("weighted_partitions_of: need labels");
    std::vector<WeightedPartition> out;
    for (const Partition& base : partitions_of(m)) {
        // group equal part sizes and label each group independently
        std::vector<std::pair<long, int>> groups; // (part size, multiplicity)
        size_t i = 0;
        while (i < base.parts.size()) {
            size_t j = i;
            while (j < base.parts.size() && base.parts[j] == base.parts[i]) ++j;
            groups.push_back({base.parts[i], static_cast<int>(j - i)});
            i = j;
        }
        std::vector<std::vector<std::vector<int>>> choices(groups.size());
        for (size_t g = 0; g < groups.size(); ++g) {
            std::vector<int> acc;
            label_multisets(groups[g].second, label_count, 0, acc, choices[g]);
        }
        std::vector<size_t> idx(groups.size(), 0);
        while (true) {
            std::vector<WeightedPart> parts;
            for (size_t g = 0; g < groups.size(); ++g)
                for (int l : choices[g][idx[g]]) parts.push_back({groups[g].first, l});
            out.push_back(WeightedPartition::make(std::move(parts)));
            size_t g = 0;
            while (g < groups.size() && ++idx[g] == choices[g].size()) idx[g++] = 0;
            if (g == groups.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SubpartitionSplit> common_subpartitions(const WeightedPartition& mu,
                                                    const WeightedPartition& nu) {
    // multiplicity of each distinct labeled part on both sides
    std::map<WeightedPart, std::pair<int, int>> mult;
    for (const auto& p : mu.parts) mult[p].first++;
    for (const auto& p : nu.parts) mult[p].second++;
    std::vector<std::pair<WeightedPart, int>> shared; // (part, min multiplicity)
    for (const auto& [p, m] : mult) {
        int c = std::min(m.first, m.second);
        if (c > 0) shared.push_back({p, c});
    }

    std::vector<SubpartitionSplit> out;
    std::vector<int> take(shared.size(), 0);
    while (true) {
        std::map<WeightedPart, int> taken;
        std::vector<WeightedPart> common;
        for (size_t k = 0; k < shared.size(); ++k) {
            taken[shared[k].first] = take[k];
            for (int c = 0; c < take[k]; ++c) common.push_back(shared[k].first);
        }
        auto leftover = [&](const WeightedPartition& w) {
            std::map<WeightedPart, int> t = taken;
            std::vector<WeightedPart> rest;
            for (const auto& p : w.parts) {
                auto it = t.find(p);
                if (it != t.end() && it->second > 0)
                    --it->second;
                else
                    rest.push_back(p);
            }
            return WeightedPartition::make(std::move(rest));
        };
        out.push_back({WeightedPartition::make(common), leftover(mu), leftover(nu)});
        size_t k = 0;
        while (k < shared.size() && ++take[k] > shared[k].second) take[k++] = 0;
        if (k == shared.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const SubpartitionSplit& a, const SubpartitionSplit& b) {
        return a.common < b.common;
    });
    return out;
}

} // namespace gwkit
