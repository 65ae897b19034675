#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "persuasion/errors.hpp"
#include "persuasion/rational.hpp"

namespace persuasion {

/// max objective . x  subject to  ub_rows . x <= ub_rhs,  eq_rows . x = eq_rhs,  x >= 0.
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> ub_rows;
    std::vector<Rational> ub_rhs;
    std::vector<std::vector<Rational>> eq_rows;
    std::vector<Rational> eq_rhs;
};

struct LpSolution {
    Rational value;
    std::vector<Rational> x;
};

/// Exact two-phase primal simplex over rationals. Bland's rule on both the
/// entering and leaving choice: deterministic and cycle-free, at the price of
/// more pivots; fine at the sizes the oracles produce.
inline LpSolution simplex_solve(const LinearProgram& lp) {
    const int n = lp.num_vars;
    const int m_ub = static_cast<int>(lp.ub_rows.size());
    const int m_eq = static_cast<int>(lp.eq_rows.size());
    const int m = m_ub + m_eq;

    // Rows normalized to nonnegative rhs. A <= row with negative rhs flips to
    // a >= row; such rows and all equalities carry an artificial variable.
    enum class Kind { le, ge, eq };
    std::vector<std::vector<Rational>> coeff(m, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> rhs(m);
    std::vector<Kind> kind(m);
    for (int i = 0; i < m_ub; ++i) {
        coeff[i] = lp.ub_rows[i];
        rhs[i] = lp.ub_rhs[i];
        kind[i] = Kind::le;
    }
    for (int i = 0; i < m_eq; ++i) {
        coeff[m_ub + i] = lp.eq_rows[i];
        rhs[m_ub + i] = lp.eq_rhs[i];
        kind[m_ub + i] = Kind::eq;
    }
    for (int i = 0; i < m; ++i) {
        if (rhs[i] < Rational(0)) {
            rhs[i] = -rhs[i];
            for (auto& c : coeff[i]) c = -c;
            if (kind[i] == Kind::le) kind[i] = Kind::ge;
            else if (kind[i] == Kind::ge) kind[i] = Kind::le;
        }
    }

    int cols = n;
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (kind[i] != Kind::eq) slack_col[i] = cols++;
    const int first_art = cols;
    for (int i = 0; i < m; ++i)
        if (kind[i] != Kind::le) art_col[i] = cols++;

    // tableau[i] has `cols` coefficients followed by the rhs
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<int> basis(m, -1);
    bool need_phase1 = false;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab[i][j] = coeff[i][j];
        tab[i][cols] = rhs[i];
        if (slack_col[i] >= 0) tab[i][slack_col[i]] = kind[i] == Kind::le ? Rational(1) : Rational(-1);
        if (art_col[i] >= 0) {
            tab[i][art_col[i]] = Rational(1);
            basis[i] = art_col[i];
            need_phase1 = true;
        } else {
            basis[i] = slack_col[i];
        }
    }

    auto pivot = [&](int row, int col, std::vector<Rational>& obj) {
        const Rational p = tab[row][col];
        for (auto& v : tab[row]) v /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row || tab[i][col].is_zero()) continue;
            const Rational f = tab[i][col];
            for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[row][j];
        }
        if (!obj[col].is_zero()) {
            const Rational f = obj[col];
            for (int j = 0; j <= cols; ++j) obj[j] -= f * tab[row][j];
        }
        basis[row] = col;
    };

    // Bland: entering = lowest eligible column; leaving = among the minimum
    // ratios, the row whose basic variable has the lowest index.
    auto run = [&](std::vector<Rational>& obj, int col_limit) -> bool {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < col_limit; ++j)
                if (obj[j] > Rational(0)) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;  // optimal
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m; ++i) {
                if (tab[i][enter] <= Rational(0)) continue;
                Rational ratio = tab[i][cols] / tab[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded in this direction
            pivot(leave, enter, obj);
        }
    };

    if (need_phase1) {
        // maximize -sum(artificials); reduced-cost row starts as the sum of
        // the artificial-basic rows.
        std::vector<Rational> obj1(cols + 1, Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] >= first_art)
                for (int j = 0; j <= cols; ++j)
                    if (j < first_art || j == cols) obj1[j] += tab[i][j];
        run(obj1, first_art);
        if (!obj1[cols].is_zero()) throw Error(Errc::infeasible, "phase-1 optimum is nonzero");
        // Drive leftover artificials out of the (degenerate) basis.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < first_art) continue;
            int col = -1;
            for (int j = 0; j < first_art; ++j)
                if (!tab[i][j].is_zero()) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                std::vector<Rational> dummy(cols + 1, Rational(0));
                pivot(i, col, dummy);
            } else {
                basis[i] = -2;  // redundant row; rhs is zero, ignore it
            }
        }
    }

    std::vector<Rational> obj2(cols + 1, Rational(0));
    for (int j = 0; j < n; ++j) obj2[j] = lp.objective[j];
    for (int i = 0; i < m; ++i) {
        if (basis[i] < 0 || basis[i] >= n) continue;
        if (obj2[basis[i]].is_zero()) continue;
        const Rational f = obj2[basis[i]];
        for (int j = 0; j <= cols; ++j) obj2[j] -= f * tab[i][j];
    }
    if (!run(obj2, first_art)) throw Error(Errc::unbounded, "objective unbounded above");

    LpSolution sol;
    sol.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] >= 0 && basis[i] < n) sol.x[basis[i]] = tab[i][cols];
    sol.value = Rational(0);
    for (int j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];
    return sol;
}

} // namespace persuasion
