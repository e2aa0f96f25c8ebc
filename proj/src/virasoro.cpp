#include "gwkit/virasoro.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gwkit {

namespace {

const SurfaceModel& a1_surface() {
    static const SurfaceModel s = build_surface(SurfaceKind::A, 1);
    return s;
}

BracketTarget with_id(BracketTarget t, long a) {
    t.id_descendents.push_back(a);
    std::sort(t.id_descendents.begin(), t.id_descendents.end(), std::greater<>());
    return t;
}

BracketTarget with_div(BracketTarget t, long b) {
    t.div_descendents.push_back(b);
    std::sort(t.div_descendents.begin(), t.div_descendents.end(), std::greater<>());
    return t;
}

BracketTarget without_index(BracketTarget t, bool id_list, size_t i) {
    auto& v = id_list ? t.id_descendents : t.div_descendents;
    v.erase(v.begin() + i);
    return t;
}

// The five right-hand lines, each without its printed leading sign. With
// rescale_line_one the first line carries the extra factor [1/2]^a_0.
std::array<mpq_class, 5> rhs_terms(long a, const BracketTarget& rest, bool genus_drop,
                                   bool rescale_line_one,
                                   const std::function<mpq_class(const BracketTarget&)>& eval) {
    std::array<mpq_class, 5> t{};
    const auto& as = rest.id_descendents;
    const auto& bs = rest.div_descendents;

    t[0] = mpq_class(2 * a + 2) * eval(with_div(rest, a));
    if (rescale_line_one) t[0] *= bracket(rat(1, 2), a, 0);

    for (size_t i = 0; i < as.size(); ++i) {
        BracketTarget dropped = without_index(rest, true, i);
        t[1] += bracket(rat(2 * as[i] - 1, 2), a, 0) * eval(with_id(dropped, as[i] + a));
        t[2] += (bracket(rat(2 * as[i] + 1, 2), a, 0) - bracket(rat(2 * as[i] - 1, 2), a, 0)) *
                eval(with_div(dropped, as[i] + a - 1));
    }

    for (size_t j = 0; j < bs.size(); ++j)
        t[3] += bracket(rat(2 * bs[j] + 1, 2), a, 0) *
                eval(with_div(without_index(rest, false, j), bs[j] + a));

    for (long m = 0; m <= a - 1; ++m) {
        BracketTarget two = with_div(with_div(rest, m), a - m - 1);
        two.genus = rest.genus - (genus_drop ? 1 : 0);
        mpq_class term = bracket(rat(-2 * m - 1, 2), a, 0) * eval(two);
        if (m % 2 != 0) term = -term;
        t[4] += term;
    }
    return t;
}

} // namespace

mpq_class bracket(const mpq_class& alpha, long p, long q) {
    if (p < 0 || q < 0 || q > p + 1) throw std::invalid_argument("bracket: need 0 <= q <= p+1");
    // coefficients of prod_{j=0}^{p} (x + alpha + j), built incrementally
    std::vector<mpq_class> coef{1};
    for (long j = 0; j <= p; ++j) {
        std::vector<mpq_class> next(coef.size() + 1, 0);
        mpq_class c = alpha + j;
        for (size_t k = 0; k < coef.size(); ++k) {
            next[k] += coef[k] * c;
            next[k + 1] += coef[k];
        }
        coef = std::move(next);
    }
    return coef[q];
}

std::vector<ConventionChoice> all_conventions() {
    std::vector<ConventionChoice> out;
    for (int mask = 0; mask < 32; ++mask)
        for (int drop = 0; drop <= 1; ++drop)
            for (int f = 1; f <= 2; ++f) {
                ConventionChoice c;
                for (int l = 0; l < 5; ++l) c.line_signs[l] = (mask >> l) & 1 ? 1 : -1;
                c.final_line_genus_drop = drop != 0;
                c.lhs_factor = f;
                out.push_back(c);
            }
    return out;
}

mpq_class closed_form_value(const BracketTarget& t) {
    if (t.genus < 0) return 0;
    InvariantSpec spec;
    spec.genus = t.genus;
    spec.beta = CurveClass{{1}};
    spec.id_descendents = t.id_descendents;
    for (long b : t.div_descendents) spec.div_descendents.push_back({b, 1});
    return reduced_invariant(a1_surface(), spec).value;
}

mpq_class virasoro_residual(long a, const BracketTarget& rest, const ConventionChoice& conv) {
    if (a < 0) throw std::invalid_argument("virasoro_residual: a must be >= 0");
    mpq_class lhs = mpq_class(conv.lhs_factor) * bracket(rat(1, 2), a, 0) *
                    closed_form_value(with_id(rest, a + 1));
    auto terms = rhs_terms(a, rest, conv.final_line_genus_drop, false, closed_form_value);
    mpq_class rhs = 0;
    for (int l = 0; l < 5; ++l) rhs += mpq_class(conv.line_signs[l]) * terms[l];
    return lhs - rhs;
}

mpq_class virasoro_residual_amended(long a, const BracketTarget& rest) {
    if (a < 0) throw std::invalid_argument("virasoro_residual_amended: a must be >= 0");
    const ConventionChoice printed{{-1, 1, 1, 1, 1}, true, 1};
    mpq_class lhs = bracket(rat(1, 2), a, 0) * closed_form_value(with_id(rest, a + 1));
    auto terms = rhs_terms(a, rest, true, true, closed_form_value);
    mpq_class rhs = 0;
    for (int l = 0; l < 5; ++l) rhs += mpq_class(printed.line_signs[l]) * terms[l];
    return lhs - rhs;
}

namespace {

// Dimension-valid removal instances with g <= 3, r <= 2, s <= 2.
std::vector<std::pair<long, BracketTarget>> residual_grid() {
    const std::vector<std::vector<long>> a_lists = {{}, {1}, {2}, {3}, {1, 1},
                                                    {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
    const std::vector<std::vector<long>> b_lists = {{}, {0}, {1}, {2}, {0, 0},
                                                    {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
    std::vector<std::pair<long, BracketTarget>> grid;
    for (long g = 0; g <= 3; ++g)
        for (long a = 0; a <= 3; ++a)
            for (const auto& as : a_lists)
                for (const auto& bs : b_lists) {
                    long total = a;
                    for (long x : as) total += x;
                    for (long x : bs) total += x;
                    if (total != g + static_cast<long>(as.size())) continue;
                    BracketTarget rest;
                    rest.genus = g;
                    rest.id_descendents = as;
                    rest.div_descendents = bs;
                    std::sort(rest.id_descendents.begin(), rest.id_descendents.end(),
                              std::greater<>());
                    std::sort(rest.div_descendents.begin(), rest.div_descendents.end(),
                              std::greater<>());
                    grid.push_back({a, rest});
                }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace

ConventionReport resolve_convention() {
    ConventionReport report;
    auto grid = residual_grid();
    report.grid_size = static_cast<long>(grid.size());

    const ConventionChoice paper_literal{};
    std::vector<ConventionChoice> field = all_conventions();
    report.conventions_tested = static_cast<long>(field.size());

    long best_failures = -1;
    for (const ConventionChoice& conv : field) {
        std::vector<ResidualEntry> failures;
        for (const auto& [a, rest] : grid) {
            mpq_class r = virasoro_residual(a, rest, conv);
            if (r != 0) failures.push_back({a, rest, r});
        }
        if (conv == paper_literal) report.paper_literal_failures = failures;
        if (failures.empty()) ++report.residual_free_count;
        if (best_failures < 0 || static_cast<long>(failures.size()) < best_failures) {
            best_failures = static_cast<long>(failures.size());
            report.best = conv;
            report.failures = failures;
        }
    }
    report.nonzero_residuals = best_failures;
    report.residual_free = best_failures == 0;
    return report;
}

RemovalSolver RemovalSolver::amended() {
    return RemovalSolver(ConventionChoice{{-1, 1, 1, 1, 1}, true, 1}, true);
}

mpq_class RemovalSolver::solve(const BracketTarget& target) {
    BracketTarget t = target;
    std::sort(t.id_descendents.begin(), t.id_descendents.end(), std::greater<>());
    std::sort(t.div_descendents.begin(), t.div_descendents.end(), std::greater<>());
    if (t.genus < 0) return 0;
    if (t.id_descendents.empty()) {
        // stationary base case
        long total = 0;
        for (long b : t.div_descendents) total += b;
        if (total != t.genus) return 0;
        mpq_class v = 1;
        for (long b : t.div_descendents)
            v *= rat(factorial(b), factorial(2 * b + 1)) * pow_rat(rat(-1, 2), b);
        return v;
    }
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;

    // remove the largest tau(1) insertion
    BracketTarget rest = t;
    long a = rest.id_descendents.front() - 1;
    rest.id_descendents.erase(rest.id_descendents.begin());
    auto terms = rhs_terms(a, rest, conv_.final_line_genus_drop, rescale_line_one_,
                           [this](const BracketTarget& x) { return solve(x); });
    mpq_class rhs = 0;
    for (int l = 0; l < 5; ++l) rhs += mpq_class(conv_.line_signs[l]) * terms[l];
    mpq_class denom = mpq_class(conv_.lhs_factor) * bracket(rat(1, 2), a, 0);
    if (denom == 0) throw std::domain_error("RemovalSolver: zero left-hand bracket");
    mpq_class value = rhs / denom;
    memo_[t] = value;
    return value;
}

} // namespace gwkit
