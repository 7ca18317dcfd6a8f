#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hardcore/graph.hpp"
#include "hardcore/multipoly.hpp"

namespace hardcore {

/// Power series in lambda truncated after lambda^K, with MultiPoly coefficients over a
/// shared variable list. Nothing beyond order K is ever read or produced.
class MultiSeries {
public:
    MultiSeries(VariableList vars, int order);
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    MultiSeries(VariableList vars, int order, std::vector<MultiPoly> coeffs);
    static MultiSeries from_rationals(const VariableList& vars, int order, const std::vector<Rational>& coeffs);
    static MultiSeries constant(const VariableList& vars, int order, const MultiPoly& c);
    /// The series lambda.
    static MultiSeries lambda(const VariableList& vars, int order);

    int order() const { return order_; }
    const VariableList& variables() const { return vars_; }
    /// Zero polynomial for k > order.
    MultiPoly coefficient(int k) const;
    MultiSeries truncate(int order) const;

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator-(const MultiSeries& a);
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const MultiPoly& c, const MultiSeries& a);
    friend MultiSeries operator*(const Rational& c, const MultiSeries& a);
    /// Throws std::domain_error unless b's constant term is a nonzero constant.
    friend MultiSeries operator/(const MultiSeries& a, const MultiSeries& b);
    MultiSeries inverse() const;
    MultiSeries pow(unsigned e) const;

    /// sum_k outer[k] * inner^k; the inner constant term must vanish.
    static MultiSeries compose(const std::vector<Rational>& outer, const MultiSeries& inner);
    /// Division by lambda, order drops by one; the constant term must vanish.
    MultiSeries divided_by_lambda() const;
    /// Coefficient-wise substitution of a variable by a polynomial.
    MultiSeries substitute(std::string_view var, const MultiPoly& replacement) const;
    /// Coefficient-wise assignment of variables to constants.
    MultiSeries assign(const std::map<std::string, Rational>& values) const;
    /// Value of the truncated polynomial at lambda; all coefficients must be constant.
    Rational evaluate(const Rational& lambda) const;

    bool operator==(const MultiSeries& o) const;

private:
    void check_compatible(const MultiSeries& o) const;

    VariableList vars_;
    int order_;
    std::vector<MultiPoly> c_;
};

/// log(1+lambda) to the given order.
MultiSeries log1p_series(const VariableList& vars, int order);
/// Coefficients (-(n+1))^n/(n+1)! of W(x)/x for n = 0..order.
std::vector<Rational> lambert_w_over_x_coefficients(int order);
/// g(d) = (lambda/(1+lambda)) W(dL)/(dL), L = log(1+lambda), with d a polynomial in the
/// degree variables. Orders above 8 are rejected.
MultiSeries g_series(const MultiPoly& d, int order);
MultiSeries g_series(const std::string& dvar, int order);

/// t = (g(d_v-1) - g(d_v)) / g(d_u) over variables {d_u, d_v}.
MultiSeries t_series(int order);
/// t' = g(d_w - d_uw) - g(d_w) over variables {d_w, d_uw}.
MultiSeries tprime_series(int order);
/// t'' = g(d_v - 1) over variables {d_v}.
MultiSeries tdoubleprime_series(int order);

/// Parses a polynomial over `vars` written with + - * / ^, integers and parentheses,
/// e.g. "(3+d_u-d_u^2)/2".
MultiPoly parse_multipoly(const VariableList& vars, std::string_view text);

struct SeriesCheck {
    std::string id;
    bool ok = false;
    std::string detail;
    /// Sampled checks outside the range where the claim is asserted.
    bool exploratory = false;
};

struct SeriesReport {
    std::string name;
    std::vector<SeriesCheck> checks;
    /// True when every non-exploratory check passed.
    bool ok() const;
};

nlohmann::json to_json(const SeriesReport& report);

SeriesReport verify_t_coefficients();
SeriesReport verify_tprime_coefficients();
SeriesReport verify_tdoubleprime_coefficients();
SeriesReport verify_fidentity();
/// Certified sampled inequalities for the three truncations at lambda = 1/(50 Delta) and
/// 1/(4 Delta) on integer degree grids up to `max_delta`.
SeriesReport verify_sampled_truncations(int max_delta = 12);

struct BCoefficients {
    std::vector<Rational> b;  // b_0..b_3 from the series expansion
    Rational closed_form;     // -(1/2n) sum_u [d_u + 7 sum_v (d_u - d_v)^2]
};

/// Requires a triangle-free graph with minimum degree >= 1.
BCoefficients b_coefficients(const Graph& g);
SeriesReport verify_b_coefficients(const Graph& g);

}  // namespace hardcore
