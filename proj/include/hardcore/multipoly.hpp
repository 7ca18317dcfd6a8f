#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hardcore/rational.hpp"

namespace hardcore {

/// Ordered list of variable names shared by every MultiPoly built over it.
/// Binary operations require both operands to use the same list.
using VariableList = std::vector<std::string>;

/// Sparse multivariate polynomial with rational coefficients. No zero coefficients are stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(VariableList vars);

    static MultiPoly constant(const VariableList& vars, const Rational& c);
    static MultiPoly variable(const VariableList& vars, std::string_view name);

    const VariableList& variables() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term.
    Rational constant_term() const;
    int total_degree() const;
    Rational coefficient(const Exponents& e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(std::string_view var) const;

    /// Replaces each listed variable by a constant; throws for names not in the list.
    MultiPoly substitute(const std::map<std::string, Rational>& values) const;
    /// Full evaluation; every variable must be assigned.
    Rational evaluate(const std::map<std::string, Rational>& values) const;
    /// Replaces `var` by the polynomial `replacement` (same variable list).
    MultiPoly compose(std::string_view var, const MultiPoly& replacement) const;

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    /// Graded lexicographic order, highest first, e.g. "18*d_u^2*d_v + 96*d_u*d_v^2 - 42*d_u*d_v".
    std::string to_string() const;

private:
    std::size_t index_of(std::string_view var) const;
    void check_compatible(const MultiPoly& o) const;
    void add_term(const Exponents& e, const Rational& c);

    VariableList vars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace hardcore
