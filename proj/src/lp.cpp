#include "tightspan/lp.hpp"

#include <stdexcept>

namespace tightspan {

Rational LinearInequality::slack(const RationalVector& x) const { return dot(coeffs, x) - rhs; }

bool LinearInequality::holds(const RationalVector& x) const {
    int s = sgn(slack(x));
    return rel == Relation::Equal ? s == 0 : s >= 0;
}

bool LinearInequality::holds_strictly(const RationalVector& x) const {
    return rel == Relation::GreaterEqual && sgn(slack(x)) > 0;
}

LinearInequality LinearInequality::normalized() const {
    RationalVector all = coeffs;
    all.push_back(rhs);
    IntVector p = primitive(all);
    if (rel == Relation::Equal) {
        for (const auto& v : p) {
            if (sgn(v) == 0) continue;
            if (sgn(v) < 0)
                for (auto& w : p) w = -w;
            break;
        }
    }
    LinearInequality out;
    out.rel = rel;
    out.rhs = p.back();
    p.pop_back();
    out.coeffs = to_rational(p);
    return out;
}

namespace {

// Standard form: maximize c·y subject to A y = b, y >= 0, b >= 0.
// Dense tableau; Bland's rule for both entering and leaving choices.
class Simplex {
public:
    Simplex(std::vector<RationalVector> a, RationalVector b, RationalVector c)
        : m_(a.size()), n_(c.size()), c_(std::move(c)) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (sgn(b[i]) < 0) {
                for (auto& v : a[i]) v = -v;
                b[i] = -b[i];
            }
        }
        // Columns: n_ structural, m_ artificial, then rhs.
        rows_.assign(m_, RationalVector(n_ + m_ + 1, Rational(0)));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = a[i][j];
            rows_[i][n_ + i] = 1;
            rows_[i][n_ + m_] = b[i];
        }
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
        allowed_.assign(n_ + m_, true);
    }

    LpStatus solve() {
        // Phase 1: maximize -sum(artificials).
        cost_.assign(n_ + m_ + 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j) cost_[j] += rows_[i][j];
        for (std::size_t i = 0; i < m_; ++i) cost_[n_ + m_] += rows_[i][n_ + m_];
        // cost_[rhs] holds -(objective value); objective = -sum b initially.
        if (!iterate()) throw std::logic_error("phase 1 cannot be unbounded");
        if (sgn(cost_[n_ + m_]) != 0) return LpStatus::Infeasible;

        // Drive remaining artificials out of the basis.
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(rows_[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col == n_) {
                rows_.erase(rows_.begin() + i);
                basis_.erase(basis_.begin() + i);
                continue;
            }
            pivot(i, col);
            ++i;
        }
        for (std::size_t j = n_; j < n_ + m_; ++j) allowed_[j] = false;

        // Phase 2.
        cost_.assign(n_ + m_ + 1, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = c_[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = c_[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= n_ + m_; ++j)
                if (sgn(rows_[i][j]) != 0) cost_[j] -= cb * rows_[i][j];
        }
        if (!iterate()) return LpStatus::Unbounded;
        return LpStatus::Optimal;
    }

    Rational value() const { return -cost_[n_ + m_]; }

    RationalVector solution() const {
        RationalVector y(n_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_) y[basis_[i]] = rows_[i][n_ + m_];
        return y;
    }

private:
    // Returns false on unboundedness.
    bool iterate() {
        const std::size_t rhs = n_ + m_;
        for (;;) {
            std::size_t enter = rhs;
            for (std::size_t j = 0; j < n_ + m_; ++j)
                if (allowed_[j] && sgn(cost_[j]) > 0) {
                    enter = j;
                    break;
                }
            if (enter == rhs) return true;
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (sgn(rows_[i][enter]) <= 0) continue;
                Rational ratio = rows_[i][rhs] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t col) {
        const std::size_t width = n_ + m_ + 1;
        Rational inv = 1 / rows_[r][col];
        for (std::size_t j = 0; j < width; ++j)
            if (sgn(rows_[r][j]) != 0) rows_[r][j] *= inv;
        auto eliminate = [&](RationalVector& row) {
            if (sgn(row[col]) == 0) return;
            Rational f = row[col];
            for (std::size_t j = 0; j < width; ++j)
                if (sgn(rows_[r][j]) != 0) row[j] -= f * rows_[r][j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r) eliminate(rows_[i]);
        eliminate(cost_);
        basis_[r] = col;
    }

    std::size_t m_;
    std::size_t n_;
    RationalVector c_;
    std::vector<RationalVector> rows_;
    RationalVector cost_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
};

// Free variables x split as x = u - v; each GreaterEqual row gets a surplus.
LpResult maximize_free(const RationalVector& objective, std::span<const LinearInequality> system) {
    const std::size_t dim = objective.size();
    std::size_t surplus = 0;
    for (const auto& row : system) {
        if (row.dimension() != static_cast<int>(dim)) throw std::invalid_argument("lp: inconsistent dimension");
        if (row.rel == Relation::GreaterEqual) ++surplus;
    }
    const std::size_t cols = 2 * dim + surplus;
    std::vector<RationalVector> a;
    RationalVector b;
    std::size_t s = 0;
    for (const auto& row : system) {
        RationalVector r(cols, Rational(0));
        for (std::size_t k = 0; k < dim; ++k) {
            r[2 * k] = row.coeffs[k];
            r[2 * k + 1] = -row.coeffs[k];
        }
        if (row.rel == Relation::GreaterEqual) r[2 * dim + s++] = -1;
        a.push_back(std::move(r));
        b.push_back(row.rhs);
    }
    RationalVector c(cols, Rational(0));
    for (std::size_t k = 0; k < dim; ++k) {
        c[2 * k] = objective[k];
        c[2 * k + 1] = -objective[k];
    }
    Simplex simplex(std::move(a), std::move(b), std::move(c));
    LpResult result;
    result.status = simplex.solve();
    if (result.status != LpStatus::Optimal) return result;
    result.value = simplex.value();
    auto y = simplex.solution();
    result.x.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) result.x[k] = y[2 * k] - y[2 * k + 1];
    return result;
}

std::optional<InfeasibilityCertificate> find_certificate(std::span<const LinearInequality> system,
                                                         const std::vector<bool>& strict) {
    const std::size_t m = system.size();
    const std::size_t dim = system.empty() ? 0 : system.front().coeffs.size();
    std::vector<LinearInequality> alt;
    for (std::size_t k = 0; k < dim; ++k) {
        LinearInequality eq{RationalVector(m, Rational(0)), 0, Relation::Equal};
        for (std::size_t i = 0; i < m; ++i) eq.coeffs[i] = system[i].coeffs[k];
        alt.push_back(std::move(eq));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (system[i].rel != Relation::GreaterEqual) continue;
        LinearInequality nonneg{RationalVector(m, Rational(0)), 0, Relation::GreaterEqual};
        nonneg.coeffs[i] = 1;
        alt.push_back(std::move(nonneg));
    }
    LinearInequality weight{RationalVector(m, Rational(0)), 1, Relation::Equal};
    for (std::size_t i = 0; i < m; ++i) weight.coeffs[i] = system[i].rhs;

    alt.push_back(weight);
    auto plain = lp_feasible(alt, {}, false);
    if (plain.feasible) return InfeasibilityCertificate{plain.witness, false};

    bool any_strict = false;
    for (bool s : strict) any_strict = any_strict || s;
    if (!any_strict) return std::nullopt;
    alt.back().rhs = 0;
    alt.back().rel = Relation::GreaterEqual;
    LinearInequality strict_mass{RationalVector(m, Rational(0)), 1, Relation::Equal};
    for (std::size_t i = 0; i < m; ++i)
        if (i < strict.size() && strict[i]) strict_mass.coeffs[i] = 1;
    alt.push_back(std::move(strict_mass));
    auto via_strict = lp_feasible(alt, {}, false);
    if (via_strict.feasible) return InfeasibilityCertificate{via_strict.witness, true};
    return std::nullopt;
}

}  // namespace

bool InfeasibilityCertificate::verify(std::span<const LinearInequality> system,
                                      const std::vector<bool>& strict) const {
    if (multipliers.size() != system.size()) return false;
    const std::size_t dim = system.empty() ? 0 : system.front().coeffs.size();
    RationalVector combo(dim, Rational(0));
    Rational rhs = 0;
    Rational strict_mass = 0;
    for (std::size_t i = 0; i < system.size(); ++i) {
        const auto& y = multipliers[i];
        if (system[i].rel == Relation::GreaterEqual && sgn(y) < 0) return false;
        if (sgn(y) == 0) continue;
        for (std::size_t k = 0; k < dim; ++k) combo[k] += y * system[i].coeffs[k];
        rhs += y * system[i].rhs;
        if (i < strict.size() && strict[i]) {
            if (system[i].rel != Relation::GreaterEqual) return false;
            strict_mass += y;
        }
    }
    for (const auto& v : combo)
        if (sgn(v) != 0) return false;
    if (sgn(rhs) > 0) return true;
    return uses_strictness && sgn(rhs) == 0 && sgn(strict_mass) > 0;
}

FeasibilityResult lp_feasible(std::span<const LinearInequality> system, const std::vector<bool>& strict,
                              bool with_certificate) {
    FeasibilityResult result;
    const std::size_t dim = system.empty() ? 0 : system.front().coeffs.size();
    bool any_strict = false;
    for (std::size_t i = 0; i < strict.size(); ++i) {
        if (!strict[i]) continue;
        if (i >= system.size() || system[i].rel != Relation::GreaterEqual)
            throw std::invalid_argument("lp_feasible: strict flag on an equality row");
        any_strict = true;
    }

    if (!any_strict) {
        auto lp = maximize_free(RationalVector(dim, Rational(0)), system);
        if (lp.status == LpStatus::Optimal) {
            result.feasible = true;
            result.witness = std::move(lp.x);
            return result;
        }
    } else {
        // Extra variable t: strict rows become a·x - t >= b; 0 <= t <= 1.
        std::vector<LinearInequality> lifted;
        lifted.reserve(system.size() + 2);
        for (std::size_t i = 0; i < system.size(); ++i) {
            LinearInequality row = system[i];
            row.coeffs.push_back(i < strict.size() && strict[i] ? Rational(-1) : Rational(0));
            lifted.push_back(std::move(row));
        }
        RationalVector t(dim + 1, Rational(0));
        t[dim] = 1;
        lifted.push_back({t, 0, Relation::GreaterEqual});
        t[dim] = -1;
        lifted.push_back({t, -1, Relation::GreaterEqual});
        RationalVector objective(dim + 1, Rational(0));
        objective[dim] = 1;
        auto lp = maximize_free(objective, lifted);
        if (lp.status == LpStatus::Optimal && sgn(lp.value) > 0) {
            result.feasible = true;
            lp.x.pop_back();
            result.witness = std::move(lp.x);
            return result;
        }
    }
    if (with_certificate) result.certificate = find_certificate(system, strict);
    return result;
}

LpResult lp_maximize(const RationalVector& objective, std::span<const LinearInequality> system) {
    return maximize_free(objective, system);
}

}  // namespace tightspan
