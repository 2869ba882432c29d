#ifndef MILNOR_LP_HPP
#define MILNOR_LP_HPP

#include "milnor/rational.hpp"

#include <vector>

namespace milnor {

enum class LPRelation { le, ge, eq };
enum class LPStatus { optimal, infeasible, unbounded };

/// Exact rational linear program over nonnegative variables.
///
/// Two-phase simplex with Bland's rule; every pivot is exact, so the
/// answers are decisions, not approximations. Intended for the small
/// feasibility systems of the Newton-boundary code (tens of rows).
class LPProblem {
public:
    explicit LPProblem(std::size_t nvars) : n_(nvars), objective_(nvars, Rational(0)) {}

    void add_constraint(std::vector<Rational> coeffs, LPRelation rel, Rational rhs);
    /// Objective is maximized; leave unset for pure feasibility.
    void set_objective_max(std::vector<Rational> coeffs);

    struct Result {
        LPStatus status;
        Rational objective;
        std::vector<Rational> x;
    };
    Result solve() const;

private:
    std::size_t n_;
    std::vector<Rational> objective_;
    struct Row {
        std::vector<Rational> a;
        LPRelation rel;
        Rational b;
    };
    std::vector<Row> rows_;
};

} // namespace milnor

#endif
