#include "gwkit/surface_invariants.hpp"

#include "gwkit/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gwkit {

namespace {

mpq_class id_descendent_factor(long a) {
    // (a-1)!/(2a-1)! * (-1/2)^{a-1}
    return rat(factorial(a - 1), factorial(2 * a - 1)) * pow_rat(rat(-1, 2), a - 1);
}

mpq_class div_descendent_factor(long b) {
    // b!/(2b+1)! * (-1/2)^{b}
    return rat(factorial(b), factorial(2 * b + 1)) * pow_rat(rat(-1, 2), b);
}

std::string spec_string(const InvariantSpec& spec) {
    std::ostringstream os;
    os << "g=" << spec.genus << " beta=(";
    for (size_t i = 0; i < spec.beta.e.size(); ++i) os << (i ? "," : "") << spec.beta.e[i];
    os << ") a=[";
    for (size_t i = 0; i < spec.id_descendents.size(); ++i)
        os << (i ? "," : "") << spec.id_descendents[i];
    os << "] b=[";
    for (size_t i = 0; i < spec.div_descendents.size(); ++i)
        os << (i ? "," : "") << spec.div_descendents[i].first << ":w"
           << spec.div_descendents[i].second;
    os << "]";
    return os.str();
}

} // namespace

const char* to_string(VanishingReason r) {
    switch (r) {
    case VanishingReason::none: return "none";
    case VanishingReason::not_root_multiple: return "not-root-multiple";
    case VanishingReason::dimension: return "dimension";
    case VanishingReason::zero_prefactor: return "zero-prefactor";
    }
    return "?";
}

InvariantValue reduced_invariant(const SurfaceModel& s, const InvariantSpec& spec) {
    if (spec.genus < 0) throw std::invalid_argument("reduced_invariant: negative genus");
    for (long a : spec.id_descendents)
        if (a < 1) throw std::invalid_argument("reduced_invariant: identity descendent needs a >= 1");
    for (const auto& [b, label] : spec.div_descendents) {
        if (b < 0) throw std::invalid_argument("reduced_invariant: negative divisor descendent");
        if (label < 1 || label > s.rank)
            throw std::invalid_argument("reduced_invariant: divisor label out of range");
    }

    auto rm = is_root_multiple(s, spec.beta);
    if (!rm) return {0, VanishingReason::not_root_multiple};
    const CurveClass& alpha = rm->first;
    const long d = rm->second;

    const long g = spec.genus;
    const long r = static_cast<long>(spec.id_descendents.size());
    const long sd = static_cast<long>(spec.div_descendents.size());
    long total = 0;
    for (long a : spec.id_descendents) total += a;
    for (const auto& [b, label] : spec.div_descendents) total += b;
    if (total != g + r) return {0, VanishingReason::dimension};

    mpq_class rising = 1;
    for (long i = 1; i <= r; ++i) rising *= 2 * g + sd - 3 + i;
    if (rising == 0) return {0, VanishingReason::zero_prefactor};

    mpq_class value = rising * pow_rat(mpq_class(d), 2 * g + sd - 3);
    for (long a : spec.id_descendents) value *= id_descendent_factor(a);
    for (const auto& [b, label] : spec.div_descendents) {
        value *= div_descendent_factor(b);
        value *= intersection(s, alpha, CohClass::omega_basis(label, s.rank)).rational_value();
    }
    return {value, VanishingReason::none};
}

InvariantValue de_invariant(const SurfaceModel& s, const InvariantSpec& spec) {
    if (s.is_a_type())
        throw std::invalid_argument("de_invariant: expects a D- or E-type surface");
    return reduced_invariant(s, spec);
}

std::vector<CheckResult> consistency_suite() {
    std::vector<CheckResult> out;
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    SurfaceModel a3 = build_surface(SurfaceKind::A, 3);

    auto fail = [](CheckResult& c, const std::string& detail) {
        if (c.pass) {
            c.pass = false;
            c.detail = detail;
        }
    };

    // enumeration grids shared by several checks
    const std::vector<std::vector<long>> a_lists = {{}, {1}, {2}, {3}, {1, 1}, {2, 1}, {2, 2}};
    const std::vector<std::vector<long>> b_lists = {{},        {0},       {1},       {2},
                                                    {0, 0},    {1, 0},    {1, 1},    {2, 1},
                                                    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1},
                                                    {2, 1, 0}, {2, 1, 1}, {2, 2, 1}};

    auto make_spec = [&](long g, long d, std::vector<long> a, const std::vector<long>& b) {
        InvariantSpec spec;
        spec.genus = g;
        spec.beta = CurveClass{{d}};
        spec.id_descendents = std::move(a);
        for (long bl : b) spec.div_descendents.push_back({bl, 1});
        return spec;
    };

    {
        CheckResult c{"d-scaling"};
        for (long g = 0; g <= 3 && c.pass; ++g)
            for (const auto& a : a_lists)
                for (const auto& b : b_lists) {
                    InvariantSpec base = make_spec(g, 1, a, b);
                    mpq_class v1 = reduced_invariant(a1, base).value;
                    if (v1 == 0) continue;
                    long e = 2 * g + static_cast<long>(b.size()) - 3;
                    for (long d = 2; d <= 6; ++d) {
                        mpq_class vd = reduced_invariant(a1, make_spec(g, d, a, b)).value;
                        if (vd != v1 * pow_rat(mpq_class(d), e))
                            fail(c, spec_string(base) + " d=" + std::to_string(d));
                    }
                }
        out.push_back(c);
    }

    {
        CheckResult c{"root-independence"};
        for (long g = 1; g <= 2 && c.pass; ++g) {
            // s = 1 family: tau_{g}(omega_1); s = 2 family: tau_{g-1} tau_1
            std::vector<std::vector<std::pair<long, int>>> fams = {{{g, 1}}};
            if (g >= 1) fams.push_back({{g - 1, 1}, {1, 2}});
            for (const auto& fam : fams) {
                mpq_class reference;
                bool have_ref = false;
                for (int i = 1; i <= 4 && c.pass; ++i)
                    for (int j = i + 1; j <= 4; ++j) {
                        CurveClass alpha = chain_root(a3, i, j);
                        mpq_class pairing_product = 1;
                        for (const auto& [b, label] : fam)
                            pairing_product *=
                                intersection(a3, alpha, CohClass::omega_basis(label, 3))
                                    .rational_value();
                        if (pairing_product == 0) continue;
                        InvariantSpec spec;
                        spec.genus = g;
                        spec.beta = alpha;
                        spec.div_descendents = fam;
                        mpq_class v = reduced_invariant(a3, spec).value / pairing_product;
                        if (!have_ref) {
                            reference = v;
                            have_ref = true;
                        } else if (v != reference) {
                            fail(c, spec_string(spec));
                        }
                    }
            }
        }
        out.push_back(c);
    }

    {
        CheckResult c{"stationary-multiplicativity"};
        for (long g = 0; g <= 4 && c.pass; ++g)
            for (const Partition& p : partitions_of(g)) {
                InvariantSpec spec = make_spec(g, 1, {}, p.parts);
                mpq_class direct = 1;
                for (long b : p.parts) direct *= div_descendent_factor(b);
                if (reduced_invariant(a1, spec).value != direct) fail(c, spec_string(spec));
            }
        out.push_back(c);
    }

    {
        CheckResult c{"dimension-vanishing"};
        for (long g = 0; g <= 3 && c.pass; ++g)
            for (const auto& a : a_lists)
                for (const auto& b : b_lists) {
                    long total = 0;
                    for (long x : a) total += x;
                    for (long x : b) total += x;
                    if (total == g + static_cast<long>(a.size())) continue;
                    InvariantValue v = reduced_invariant(a1, make_spec(g, 2, a, b));
                    if (v.value != 0 || v.reason != VanishingReason::dimension)
                        fail(c, spec_string(make_spec(g, 2, a, b)));
                }
        out.push_back(c);
    }

    {
        CheckResult c{"dilaton"};
        for (long g = 0; g <= 3 && c.pass; ++g)
            for (long d = 1; d <= 3; ++d)
                for (const auto& a : a_lists)
                    for (const auto& b : b_lists) {
                        InvariantSpec x = make_spec(g, d, a, b);
                        InvariantSpec lhs = x;
                        lhs.id_descendents.insert(lhs.id_descendents.begin(), 1);
                        long n = static_cast<long>(a.size() + b.size());
                        mpq_class want = mpq_class(2 * g - 2 + n) * reduced_invariant(a1, x).value;
                        if (reduced_invariant(a1, lhs).value != want) fail(c, spec_string(x));
                    }
        out.push_back(c);
    }

    {
        // With an unconstrained identity insertion both sides of the string
        // equation vanish by the dimension axiom: the insertion adds a point
        // but no cohomology degree, and each removal term drops one degree
        // below the constraint. Verify every in-domain removal term is
        // dimension-excluded.
        CheckResult c{"string"};
        for (long g = 0; g <= 3 && c.pass; ++g)
            for (long d = 1; d <= 2; ++d)
                for (const auto& a : a_lists)
                    for (const auto& b : b_lists) {
                        long total = 0;
                        for (long x : a) total += x;
                        for (long x : b) total += x;
                        if (total != g + static_cast<long>(a.size())) continue;
                        InvariantSpec x = make_spec(g, d, a, b);
                        std::vector<InvariantSpec> lowered;
                        for (size_t i = 0; i < a.size(); ++i) {
                            if (a[i] < 2) continue; // drops to an unconstrained identity insertion
                            InvariantSpec t = x;
                            t.id_descendents[i] -= 1;
                            lowered.push_back(t);
                        }
                        for (size_t j = 0; j < b.size(); ++j) {
                            if (b[j] < 1) continue; // negative descendents vanish
                            InvariantSpec t = x;
                            t.div_descendents[j].first -= 1;
                            lowered.push_back(t);
                        }
                        for (const InvariantSpec& t : lowered) {
                            InvariantValue v = reduced_invariant(a1, t);
                            if (v.value != 0 || v.reason != VanishingReason::dimension)
                                fail(c, spec_string(t));
                        }
                    }
        out.push_back(c);
    }

    {
        CheckResult c{"divisor"};
        for (long g = 0; g <= 2 && c.pass; ++g)
            for (long d = 1; d <= 3; ++d)
                for (const auto& a : a_lists)
                    for (const auto& b : b_lists) {
                        InvariantSpec x = make_spec(g, d, a, b);
                        InvariantSpec lhs = x;
                        lhs.div_descendents.push_back({0, 1});
                        mpq_class rhs = mpq_class(d) * reduced_invariant(a1, x).value;
                        for (size_t i = 0; i < a.size(); ++i) {
                            InvariantSpec corr = x;
                            corr.id_descendents.erase(corr.id_descendents.begin() + i);
                            corr.div_descendents.push_back({a[i] - 1, 1});
                            rhs += reduced_invariant(a1, corr).value;
                        }
                        if (reduced_invariant(a1, lhs).value != rhs) fail(c, spec_string(x));
                    }
        out.push_back(c);
    }

    return out;
}

} // namespace gwkit
