#include "milnor/lp.hpp"

#include <algorithm>

namespace milnor {

void LPProblem::add_constraint(std::vector<Rational> coeffs, LPRelation rel, Rational rhs)
{
    if (coeffs.size() != n_) throw precondition_error("lp: coefficient length mismatch");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LPProblem::set_objective_max(std::vector<Rational> coeffs)
{
    if (coeffs.size() != n_) throw precondition_error("lp: objective length mismatch");
    objective_ = std::move(coeffs);
}

namespace {

struct Tableau {
    // rows x cols, last column is rhs; basis[i] = variable index of row i
    std::vector<std::vector<Rational>> a;
    std::vector<std::size_t> basis;
    std::size_t ncols = 0; // structural+slack+artificial count (without rhs)

    void pivot(std::size_t pr, std::size_t pc)
    {
        auto& prow = a[pr];
        const Rational pv = prow[pc];
        for (auto& v : prow) v /= pv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == pr) continue;
            const Rational f = a[r][pc];
            if (f == 0) continue;
            for (std::size_t cidx = 0; cidx < prow.size(); ++cidx) a[r][cidx] -= f * prow[cidx];
        }
        basis[pr] = pc;
    }

    /// Bland's rule simplex minimizing cost; returns false on unbounded.
    bool run(const std::vector<Rational>& cost, Rational& value)
    {
        const std::size_t m = a.size();
        while (true) {
            // reduced costs: c_j - c_B B^-1 A_j (computed directly)
            std::vector<Rational> red(ncols, Rational(0));
            for (std::size_t j = 0; j < ncols; ++j) {
                Rational v = cost[j];
                for (std::size_t r = 0; r < m; ++r) v -= cost[basis[r]] * a[r][j];
                red[j] = v;
            }
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j)
                if (red[j] < 0) { enter = j; break; } // Bland: smallest index
            if (enter == ncols) break;
            // ratio test, Bland tie-break on basis variable index
            std::size_t leave = m;
            Rational best;
            for (std::size_t r = 0; r < m; ++r) {
                if (a[r][enter] <= 0) continue;
                const Rational ratio = a[r][ncols] / a[r][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == m) return false; // unbounded
            pivot(leave, enter);
        }
        value = 0;
        for (std::size_t r = 0; r < m; ++r) value += cost[basis[r]] * a[r][ncols];
        return true;
    }
};

} // namespace

LPProblem::Result LPProblem::solve() const
{
    const std::size_t m = rows_.size();
    // layout: [structural n_][slack/surplus s][artificial t][rhs]
    std::size_t nslack = 0;
    for (const auto& r : rows_)
        if (r.rel != LPRelation::eq) ++nslack;

    Tableau tab;
    tab.a.assign(m, {});
    tab.basis.assign(m, 0);

    std::size_t nart = 0;
    // first pass: decide which rows need artificials
    std::vector<std::size_t> row_slack(m, SIZE_MAX);
    std::vector<bool> needs_art(m, false);
    {
        std::size_t s = 0;
        for (std::size_t i = 0; i < m; ++i) {
            Rational b = rows_[i].b;
            const bool bneg = b < 0;
            switch (rows_[i].rel) {
            case LPRelation::le:
                row_slack[i] = n_ + s++;
                needs_art[i] = bneg; // slack coefficient +1 but rhs negative
                break;
            case LPRelation::ge:
                row_slack[i] = n_ + s++;
                needs_art[i] = !bneg;
                break;
            case LPRelation::eq:
                needs_art[i] = true;
                break;
            }
        }
        nslack = s;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (needs_art[i]) ++nart;

    tab.ncols = n_ + nslack + nart;
    std::size_t art_at = n_ + nslack;

    for (std::size_t i = 0; i < m; ++i) {
        auto& row = tab.a[i];
        row.assign(tab.ncols + 1, Rational(0));
        Rational sign = 1;
        if (rows_[i].b < 0) sign = -1; // normalize rhs >= 0
        for (std::size_t j = 0; j < n_; ++j) row[j] = sign * rows_[i].a[j];
        row[tab.ncols] = sign * rows_[i].b;
        if (row_slack[i] != SIZE_MAX) {
            Rational sc = (rows_[i].rel == LPRelation::le) ? Rational(1) : Rational(-1);
            row[row_slack[i]] = sign * sc;
        }
        if (needs_art[i]) {
            row[art_at] = 1;
            tab.basis[i] = art_at;
            ++art_at;
        } else {
            tab.basis[i] = row_slack[i]; // slack enters the basis with +1
        }
    }

    // phase I: minimize sum of artificials
    if (nart > 0) {
        std::vector<Rational> cost(tab.ncols, Rational(0));
        for (std::size_t j = n_ + nslack; j < tab.ncols; ++j) cost[j] = 1;
        Rational v;
        if (!tab.run(cost, v)) throw precondition_error("lp: phase I unbounded");
        if (v != 0) return {LPStatus::infeasible, Rational(0), {}};
        // drive remaining artificials out of the basis; rows that cannot
        // pivot are redundant and get dropped with the artificial columns
        for (std::size_t r = 0; r < tab.a.size(); ++r) {
            if (tab.basis[r] < n_ + nslack) continue;
            std::size_t pc = tab.ncols;
            for (std::size_t j = 0; j < n_ + nslack; ++j)
                if (tab.a[r][j] != 0) { pc = j; break; }
            if (pc != tab.ncols) tab.pivot(r, pc);
        }
        const std::size_t full = tab.ncols;
        std::vector<std::vector<Rational>> rows2;
        std::vector<std::size_t> basis2;
        for (std::size_t r = 0; r < tab.a.size(); ++r) {
            if (tab.basis[r] >= n_ + nslack) continue; // redundant zero row
            std::vector<Rational> row(n_ + nslack + 1);
            for (std::size_t j = 0; j < n_ + nslack; ++j) row[j] = tab.a[r][j];
            row[n_ + nslack] = tab.a[r][full];
            rows2.push_back(std::move(row));
            basis2.push_back(tab.basis[r]);
        }
        tab.a = std::move(rows2);
        tab.basis = std::move(basis2);
        tab.ncols = n_ + nslack;
    }

    // phase II: minimize -objective (we maximize)
    std::vector<Rational> cost(tab.ncols, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = -objective_[j];
    Rational v;
    if (!tab.run(cost, v)) return {LPStatus::unbounded, Rational(0), {}};

    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t r = 0; r < tab.a.size(); ++r)
        if (tab.basis[r] < n_) x[tab.basis[r]] = tab.a[r][tab.ncols];
    return {LPStatus::optimal, -v, std::move(x)};
}

} // namespace milnor
