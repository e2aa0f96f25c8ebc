#pragma once

#include "gwkit/surface_invariants.hpp"

#include <array>
#include <map>

namespace gwkit {

// Coefficient of x^q in (x+alpha)(x+alpha+1)...(x+alpha+p). Needs 0 <= q <= p+1.
mpq_class bracket(const mpq_class& alpha, long p, long q);

// The level -2 removal relation has five right-hand lines. The printed form
// leaves sign, index-range, and genus choices ambiguous, so the relation is
// explored as a finite family: a sign per line, the genus of the two-point
// line (g or g-1), and a global left-hand factor.
struct ConventionChoice {
    std::array<int, 5> line_signs = {-1, 1, 1, 1, 1}; // as printed
    bool final_line_genus_drop = false;               // false: genus g, true: g-1
    int lhs_factor = 1;

    auto operator<=>(const ConventionChoice&) const = default;
};

std::vector<ConventionChoice> all_conventions();

// Degree-1 rank-1 bracket target: genus plus tau_{a}(1) and tau_{b}(omega)
// descendent lists.
struct BracketTarget {
    long genus = 0;
    std::vector<long> id_descendents;
    std::vector<long> div_descendents;

    auto operator<=>(const BracketTarget&) const = default;
};

// Closed-form value of the target via the degree-1 rank-1 case of the
// reduced-invariant formula.
mpq_class closed_form_value(const BracketTarget& t);

// LHS - RHS of the removal relation applied to tau_{a+1}(1) against the rest
// of the target (`rest` = target without that insertion), under the given
// convention. Every bracket is evaluated by the closed formula.
mpq_class virasoro_residual(long a, const BracketTarget& rest, const ConventionChoice& conv);

// Residual of the amended relation: printed signs, two-point line at genus
// g-1, and the first right-hand line rescaled by the left bracket [1/2]^a_0.
// No member of the enumerated convention family can express that rescaling;
// this is the unique completion consistent with the closed formula (the
// rescaled relation collapses to an identity of rising factorials once each
// invariant is factored into its per-insertion weights).
mpq_class virasoro_residual_amended(long a, const BracketTarget& rest);

struct ResidualEntry {
    long a = 0;
    BracketTarget rest;
    mpq_class residual;
};

struct ConventionReport {
    ConventionChoice best;
    bool residual_free = false;
    long grid_size = 0;
    long nonzero_residuals = 0;     // for best
    long conventions_tested = 0;
    long residual_free_count = 0;
    std::vector<ResidualEntry> failures;           // for best
    std::vector<ResidualEntry> paper_literal_failures;
};

// Exhaustive search over the convention family on the fixed grid
// (g <= 3, r <= 2, s <= 2, dimension-valid targets).
ConventionReport resolve_convention();

// Forward solver: computes the target by repeatedly removing the largest
// tau(1) insertion with the relation, bottoming out at the stationary closed
// form. Throws if the convention leaves a zero LHS bracket (cannot happen for
// rational alpha = 1/2).
class RemovalSolver {
public:
    explicit RemovalSolver(ConventionChoice conv, bool rescale_line_one = false)
        : conv_(conv), rescale_line_one_(rescale_line_one) {}
    // Solver under the amended relation (see virasoro_residual_amended).
    static RemovalSolver amended();
    mpq_class solve(const BracketTarget& t);

private:
    ConventionChoice conv_;
    bool rescale_line_one_ = false;
    std::map<BracketTarget, mpq_class> memo_;
};

} // namespace gwkit
