#include "milnor/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace milnor {

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c)
{
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_[ExponentVector(p.nvars(), 0)] = c;
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, ExponentVector ev, const Rational& c)
{
    Polynomial p(std::move(vars));
    if (ev.size() != p.nvars()) throw precondition_error("monomial: exponent length mismatch");
    if (c != 0) p.terms_[std::move(ev)] = c;
    return p;
}

Rational Polynomial::coeff(const ExponentVector& ev) const
{
    auto it = terms_.find(ev);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& ev, const Rational& c)
{
    if (ev.size() != nvars()) throw precondition_error("add_term: exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(ev);
    if (it == terms_.end()) {
        terms_.emplace(ev, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t Polynomial::total_degree() const
{
    if (terms_.empty()) return -1;
    // first term under grlex-descending has the maximal total degree
    std::int64_t d = 0;
    for (auto e : terms_.begin()->first) d += e;
    return d;
}

bool Polynomial::has_constant_term() const
{
    return terms_.count(ExponentVector(nvars(), 0)) > 0;
}

Rational Polynomial::constant_term() const
{
    return coeff(ExponentVector(nvars(), 0));
}

bool Polynomial::is_homogeneous(std::int64_t& degree_out) const
{
    if (terms_.empty()) return false;
    std::int64_t d = -1;
    for (const auto& [ev, c] : terms_) {
        std::int64_t s = 0;
        for (auto e : ev) s += e;
        if (d < 0) d = s;
        else if (s != d) return false;
    }
    degree_out = d;
    return true;
}

std::int64_t Polynomial::min_exponent(std::size_t vi) const
{
    std::int64_t m = 0;
    bool first = true;
    for (const auto& [ev, c] : terms_) {
        if (first || ev[vi] < m) m = ev[vi];
        first = false;
    }
    return first ? 0 : m;
}

std::int64_t Polynomial::max_exponent(std::size_t vi) const
{
    std::int64_t m = 0;
    for (const auto& [ev, c] : terms_) m = std::max(m, ev[vi]);
    return m;
}

Polynomial Polynomial::shift_down(std::size_t vi, std::int64_t k) const
{
    Polynomial r(vars_);
    for (const auto& [ev, c] : terms_) {
        if (ev[vi] < k) throw precondition_error("shift_down: not divisible");
        ExponentVector e2 = ev;
        e2[vi] -= k;
        r.terms_[std::move(e2)] = c;
    }
    return r;
}

void Polynomial::check_compatible(const Polynomial& other) const
{
    if (vars_ != other.vars_) throw precondition_error("variable-list mismatch");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial r = a;
    for (const auto& [ev, c] : b.terms_) r.add_term(ev, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial r = a;
    for (const auto& [ev, c] : b.terms_) r.add_term(ev, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExponentVector e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(vars_);
    for (const auto& [ev, c] : terms_) r.terms_[ev] = -c;
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [ev, k] : terms_) r.terms_[ev] = k * c;
    return r;
}

Polynomial Polynomial::pow(std::int64_t k) const
{
    if (k < 0) throw precondition_error("pow: negative exponent");
    Polynomial r = Polynomial::constant(vars_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

std::string Polynomial::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [ev, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        for (auto e : ev)
            if (e > 0) any_var = true;
        if (!any_var) {
            out << to_string(a);
            continue;
        }
        if (a != 1) {
            if (!is_integer(a))
                out << "(" << to_string(a) << ")";
            else
                out << to_string(a);
        }
        for (std::size_t i = 0; i < ev.size(); ++i) {
            if (ev[i] == 0) continue;
            out << vars_[i];
            if (ev[i] > 1) out << "^" << ev[i];
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eof()
    {
        skip_ws();
        return pos >= s.size();
    }
};

constexpr std::int64_t kMaxExponent = std::int64_t(1) << 31;

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lex_{text}, vars_(vars)
    {
        if (vars.empty()) throw precondition_error("parse: empty variable list");
        for (std::size_t i = 0; i < vars.size(); ++i) {
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw precondition_error("parse: duplicate variable name");
        }
    }

    Polynomial run()
    {
        Polynomial p = expr();
        if (!lex_.eof())
            throw parse_error("syntax error: trailing input", lex_.pos);
        return p;
    }

private:
    Lexer lex_;
    const std::vector<std::string>& vars_;

    Polynomial expr()
    {
        bool neg = false;
        char c = lex_.peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++lex_.pos;
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            c = lex_.peek();
            if (c == '+' || c == '-') {
                ++lex_.pos;
                Polynomial t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (true) {
            char c = lex_.peek();
            if (c == '*') {
                ++lex_.pos;
                acc = acc * factor();
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                acc = acc * factor(); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor()
    {
        Polynomial b = base();
        if (lex_.peek() == '^') {
            ++lex_.pos;
            std::int64_t e = parse_uint();
            b = b.pow(e);
        }
        return b;
    }

    Polynomial base()
    {
        char c = lex_.peek();
        if (c == '(') {
            ++lex_.pos;
            Polynomial p = expr();
            if (lex_.peek() != ')') throw parse_error("syntax error: expected ')'", lex_.pos);
            ++lex_.pos;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable_product();
        throw parse_error("syntax error: unexpected character", lex_.pos);
    }

    std::int64_t parse_uint()
    {
        lex_.skip_ws();
        std::size_t start = lex_.pos;
        Integer v = 0;
        while (lex_.pos < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.pos]))) {
            v = v * 10 + (lex_.s[lex_.pos] - '0');
            if (v > kMaxExponent) throw parse_error("exponent overflow", start);
            ++lex_.pos;
        }
        if (lex_.pos == start) throw parse_error("syntax error: expected integer", start);
        return v.convert_to<std::int64_t>();
    }

    Polynomial rational_literal()
    {
        lex_.skip_ws();
        std::size_t start = lex_.pos;
        std::string digits;
        while (lex_.pos < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.pos]))) {
            digits += lex_.s[lex_.pos];
            ++lex_.pos;
        }
        if (digits.empty()) throw parse_error("syntax error: expected number", start);
        Integer num(digits);
        Integer den = 1;
        if (lex_.peek() == '/') {
            ++lex_.pos;
            lex_.skip_ws();
            std::string d2;
            while (lex_.pos < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.pos]))) {
                d2 += lex_.s[lex_.pos];
                ++lex_.pos;
            }
            if (d2.empty()) throw parse_error("syntax error: expected denominator", lex_.pos);
            den = Integer(d2);
            if (den == 0) throw parse_error("zero denominator", start);
        }
        return Polynomial::constant(vars_, Rational(num, den));
    }

    /// An identifier token; if it is not a declared variable, split it
    /// greedily into a product of declared variable names ("xy" -> x*y).
    Polynomial variable_product()
    {
        lex_.skip_ws();
        std::size_t start = lex_.pos;
        std::string ident;
        while (lex_.pos < lex_.s.size() &&
               std::isalnum(static_cast<unsigned char>(lex_.s[lex_.pos]))) {
            ident += lex_.s[lex_.pos];
            ++lex_.pos;
        }
        // whole token is a variable
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == ident) return var_poly(i);
        // greedy longest-prefix split into declared variables
        std::vector<std::size_t> split;
        std::size_t at = 0;
        while (at < ident.size()) {
            std::size_t best = vars_.size();
            std::size_t best_len = 0;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                const auto& v = vars_[i];
                if (v.size() > best_len && ident.compare(at, v.size(), v) == 0) {
                    best = i;
                    best_len = v.size();
                }
            }
            if (best == vars_.size())
                throw parse_error("unknown variable '" + ident + "'", start);
            split.push_back(best);
            at += best_len;
        }
        // a following '^' binds to the last variable of the run ("xy^2" is x*y^2)
        Polynomial last = var_poly(split.back());
        if (split.size() > 1 && lex_.peek() == '^') {
            ++lex_.pos;
            last = last.pow(parse_uint());
        }
        Polynomial acc = var_poly(split[0]);
        for (std::size_t k = 1; k + 1 < split.size(); ++k) acc = acc * var_poly(split[k]);
        return split.size() > 1 ? acc * last : last;
    }

    Polynomial var_poly(std::size_t idx)
    {
        ExponentVector ev(vars_.size(), 0);
        ev[idx] = 1;
        return Polynomial::monomial(vars_, std::move(ev), 1);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables)
{
    return Parser(text, variables).run();
}

Polynomial differentiate(const Polynomial& p, const std::string& var)
{
    const auto& vars = p.variables();
    std::size_t vi = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == var) vi = i;
    if (vi == vars.size()) throw precondition_error("differentiate: unknown variable '" + var + "'");
    Polynomial r(vars);
    for (const auto& [ev, c] : p.terms()) {
        if (ev[vi] == 0) continue;
        ExponentVector e2 = ev;
        e2[vi] -= 1;
        r.add_term(e2, c * Rational(ev[vi]));
    }
    return r;
}

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
    }
    throw precondition_error("arith: bad op");
}

namespace {

/// Recursive Horner evaluation over variable `vi`.
template <typename Scalar, typename Convert>
Scalar horner_eval(const Polynomial& p, const std::vector<Scalar>& point, Convert to_scalar)
{
    // group terms by exponent of variable 0, recurse on the remaining block;
    // at the last variable fall through to plain Horner
    struct Rec {
        const std::vector<Scalar>& pt;
        Convert conv;
        Scalar eval(const std::vector<std::pair<ExponentVector, Rational>>& terms,
                    std::size_t vi, std::size_t nv)
        {
            if (terms.empty()) return Scalar(Rational(0));
            if (vi + 1 == nv) {
                // univariate Horner in the last variable
                std::map<std::int64_t, Scalar> by_exp;
                for (const auto& [ev, c] : terms) {
                    auto it = by_exp.find(ev[vi]);
                    if (it == by_exp.end()) by_exp.emplace(ev[vi], conv(c));
                    else it->second += conv(c);
                }
                Scalar acc = Scalar(Rational(0));
                std::int64_t prev = -1;
                for (auto it = by_exp.rbegin(); it != by_exp.rend(); ++it) {
                    if (prev >= 0)
                        for (std::int64_t k = it->first; k < prev; ++k) acc = acc * pt[vi];
                    acc = acc + it->second;
                    prev = it->first;
                }
                for (std::int64_t k = 0; k < prev; ++k) acc = acc * pt[vi];
                return acc;
            }
            std::map<std::int64_t, std::vector<std::pair<ExponentVector, Rational>>> groups;
            for (const auto& t : terms) groups[t.first[vi]].push_back(t);
            Scalar acc = Scalar(Rational(0));
            std::int64_t prev = -1;
            for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
                if (prev >= 0)
                    for (std::int64_t k = it->first; k < prev; ++k) acc = acc * pt[vi];
                acc = acc + eval(it->second, vi + 1, nv);
                prev = it->first;
            }
            for (std::int64_t k = 0; k < prev; ++k) acc = acc * pt[vi];
            return acc;
        }
    };
    std::vector<std::pair<ExponentVector, Rational>> terms(p.terms().begin(), p.terms().end());
    Rec rec{point, to_scalar};
    return rec.eval(terms, 0, p.nvars());
}

struct CxOfRational {
    std::complex<double> operator()(const Rational& q) const { return {to_double(q), 0.0}; }
};
struct CoeffOfRational {
    Coeff operator()(const Rational& q) const { return Coeff(q); }
};

} // namespace

std::complex<double> evaluate_complex(const Polynomial& p,
                                      const std::vector<std::complex<double>>& point)
{
    if (point.size() != p.nvars()) throw precondition_error("evaluate: point length mismatch");
    if (p.is_zero()) return {0.0, 0.0};
    struct Cx {
        std::complex<double> v;
        Cx(const Rational& q) : v(to_double(q), 0.0) {}
        Cx(std::complex<double> z) : v(z) {}
        Cx operator+(const Cx& o) const { return Cx(v + o.v); }
        Cx& operator+=(const Cx& o) { v += o.v; return *this; }
        Cx operator*(const Cx& o) const { return Cx(v * o.v); }
    };
    std::vector<Cx> pt;
    for (auto z : point) pt.emplace_back(z);
    struct Conv {
        Cx operator()(const Rational& q) const { return Cx(q); }
    };
    return horner_eval<Cx>(p, pt, Conv{}).v;
}

Coeff evaluate_coeff(const Polynomial& p, const std::vector<Coeff>& point)
{
    if (point.size() != p.nvars()) throw precondition_error("evaluate: point length mismatch");
    if (p.is_zero()) return Coeff(Rational(0));
    return horner_eval<Coeff>(p, point, CoeffOfRational{});
}

} // namespace milnor
