#ifndef MILNOR_POLY_HPP
#define MILNOR_POLY_HPP

#include "milnor/coeff.hpp"
#include "milnor/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace milnor {

/// Exponent vector of a monomial; length = ambient variable count (2..8).
using ExponentVector = std::vector<std::int64_t>;

/// Graded-lexicographic order, highest first: compare by total degree
/// descending, ties broken lexicographically descending on the exponents.
/// Map iteration under this comparator is the canonical print order.
struct GrlexDesc {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const
    {
        std::int64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

/// Exact multivariate polynomial over the rationals.
///
/// Invariants: no stored zero coefficients; all exponent vectors have the
/// same length as the variable list; term order is graded-lex (canonical).
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexDesc>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial zero(std::vector<std::string> vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(std::vector<std::string> vars, const Rational& c);
    static Polynomial monomial(std::vector<std::string> vars, ExponentVector ev, const Rational& c);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial (zero when absent).
    Rational coeff(const ExponentVector& ev) const;

    void add_term(const ExponentVector& ev, const Rational& c);

    std::int64_t total_degree() const; // -1 for the zero polynomial
    bool has_constant_term() const;
    Rational constant_term() const;

    /// True when every term has the same total degree d (d reported);
    /// the zero polynomial is not considered homogeneous.
    bool is_homogeneous(std::int64_t& degree_out) const;

    /// Minimal exponent of variable `vi` over all terms (0 for zero poly).
    std::int64_t min_exponent(std::size_t vi) const;
    /// Maximal exponent of variable `vi` over all terms.
    std::int64_t max_exponent(std::size_t vi) const;

    /// Divide exactly by x_vi^k (requires min_exponent(vi) >= k).
    Polynomial shift_down(std::size_t vi, std::int64_t k) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(std::int64_t k) const;

    /// Canonical printing; parse(print(p)) == p.
    std::string str() const;

private:
    void check_compatible(const Polynomial& other) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Parse an expression over the given variables.
///
/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*; term := factor ('*'? factor)*;
/// factor := base ('^' uint)?; base := var | rational | '(' expr ')';
/// rational := int ('/' uint)?; var := [A-Za-z][A-Za-z0-9]*. Whitespace is
/// insignificant and juxtaposition multiplies ("2xy"). An identifier that is
/// not a declared variable is split greedily into declared variable names.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

/// Exact formal partial derivative.
Polynomial differentiate(const Polynomial& p, const std::string& var);

enum class ArithOp { add, sub, mul };
Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// Horner-style evaluation at a complex point.
std::complex<double> evaluate_complex(const Polynomial& p,
                                      const std::vector<std::complex<double>>& point);

/// Evaluation with exact fast path (all-exact inputs stay exact).
Coeff evaluate_coeff(const Polynomial& p, const std::vector<Coeff>& point);

} // namespace milnor

#endif
