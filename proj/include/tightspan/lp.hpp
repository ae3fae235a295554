#pragma once

// Exact linear programming: a dense two-phase simplex over the rationals with
// Bland's rule, plus a feasibility front end that supports strict
// inequalities and returns checkable certificates either way.

#include "tightspan/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tightspan {

enum class Relation { GreaterEqual, Equal };

/// coeffs · x  REL  rhs.
struct LinearInequality {
    RationalVector coeffs;
    Rational rhs;
    Relation rel = Relation::GreaterEqual;

    int dimension() const { return static_cast<int>(coeffs.size()); }
    /// coeffs · x - rhs.
    Rational slack(const RationalVector& x) const;
    bool holds(const RationalVector& x) const;
    bool holds_strictly(const RationalVector& x) const;

    /// Positive rescaling to coprime integers (an equality also gets its first
    /// nonzero coefficient made positive). Equal inequalities normalize equally.
    LinearInequality normalized() const;

    friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

/// Multipliers y (y_i >= 0 on GreaterEqual rows) with sum_i y_i a_i = 0 and
/// either y · b > 0, or y · b = 0 with positive weight on some strict row.
/// Either way summing y_i (a_i · x - b_i) yields a contradiction.
struct InfeasibilityCertificate {
    RationalVector multipliers;
    bool uses_strictness = false;

    bool verify(std::span<const LinearInequality> system, const std::vector<bool>& strict) const;
};

struct FeasibilityResult {
    bool feasible = false;
    RationalVector witness;
    std::optional<InfeasibilityCertificate> certificate;
};

/// Finds x satisfying every row, strictly where `strict[i]` is set (an empty
/// mask means no strict rows). Strictness is obtained by maximizing a common
/// slack capped at 1 and requiring a positive optimum.
FeasibilityResult lp_feasible(std::span<const LinearInequality> system, const std::vector<bool>& strict = {},
                              bool with_certificate = true);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RationalVector x;
};

/// Maximizes objective · x over the rows (x free, dimension = objective.size()).
LpResult lp_maximize(const RationalVector& objective, std::span<const LinearInequality> system);

}  // namespace tightspan
