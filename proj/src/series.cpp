#include "hardcore/series.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "hardcore/bounds.hpp"
#include "hardcore/sturm.hpp"

namespace hardcore {

MultiSeries::MultiSeries(VariableList vars, int order) : vars_(std::move(vars)), order_(order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    c_.assign(static_cast<std::size_t>(order) + 1, MultiPoly(vars_));
}

MultiSeries::MultiSeries(VariableList vars, int order, std::vector<MultiPoly> coeffs) : MultiSeries(std::move(vars), order)
{
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) {
        if (coeffs[k].variables() != vars_)
            throw std::invalid_argument("series coefficient uses a different variable list");
        c_[k] = std::move(coeffs[k]);
    }
}

MultiSeries MultiSeries::from_rationals(const VariableList& vars, int order, const std::vector<Rational>& coeffs)
{
    std::vector<MultiPoly> c;
    for (const auto& r : coeffs)
        c.push_back(MultiPoly::constant(vars, r));
    return MultiSeries(vars, order, std::move(c));
}

MultiSeries MultiSeries::constant(const VariableList& vars, int order, const MultiPoly& c)
{
    return MultiSeries(vars, order, {c});
}

MultiSeries MultiSeries::lambda(const VariableList& vars, int order)
{
    return from_rationals(vars, order, {Rational(0), Rational(1)});
}

MultiPoly MultiSeries::coefficient(int k) const
{
    if (k < 0 || k > order_)
        return MultiPoly(vars_);
    return c_[static_cast<std::size_t>(k)];
}

MultiSeries MultiSeries::truncate(int order) const
{
    return MultiSeries(vars_, order, std::vector<MultiPoly>(c_.begin(), c_.begin() + std::min(order, order_) + 1));
}

void MultiSeries::check_compatible(const MultiSeries& o) const
{
    if (vars_ != o.vars_)
        throw std::invalid_argument("series operands use different variable lists");
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o)
{
    check_compatible(o);
    if (o.order_ < order_)
        *this = truncate(o.order_);
    for (int k = 0; k <= order_; ++k)
        c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o)
{
    return *this += -o;
}

MultiSeries operator-(const MultiSeries& a)
{
    return Rational(-1) * a;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b)
{
    a.check_compatible(b);
    int order = std::min(a.order_, b.order_);
    MultiSeries out(a.vars_, order);
    for (int i = 0; i <= order; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; i + j <= order; ++j)
            out.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return out;
}

MultiSeries operator*(const MultiPoly& c, const MultiSeries& a)
{
    MultiSeries out = a;
    for (auto& x : out.c_)
        x = c * x;
    return out;
}

MultiSeries operator*(const Rational& c, const MultiSeries& a)
{
    MultiSeries out = a;
    for (auto& x : out.c_)
        x *= c;
    return out;
}

MultiSeries MultiSeries::inverse() const
{
    const MultiPoly& c0 = c_[0];
    if (!c0.is_constant() || c0.is_zero())
        throw std::domain_error("series inverse needs a nonzero constant leading coefficient");
    Rational inv = 1 / c0.constant_term();
    MultiSeries out(vars_, order_);
    out.c_[0] = MultiPoly::constant(vars_, inv);
    for (int k = 1; k <= order_; ++k) {
        MultiPoly acc(vars_);
        for (int j = 1; j <= k; ++j)
            acc += c_[static_cast<std::size_t>(j)] * out.c_[static_cast<std::size_t>(k - j)];
        out.c_[static_cast<std::size_t>(k)] = acc * Rational(-inv);
    }
    return out;
}

MultiSeries operator/(const MultiSeries& a, const MultiSeries& b)
{
    return a * b.inverse();
}

MultiSeries MultiSeries::pow(unsigned e) const
{
    MultiSeries out = constant(vars_, order_, MultiPoly::constant(vars_, Rational(1)));
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

MultiSeries MultiSeries::compose(const std::vector<Rational>& outer, const MultiSeries& inner)
{
    if (!inner.c_[0].is_zero())
        throw std::domain_error("series composition needs an inner series without constant term");
    MultiSeries out(inner.vars_, inner.order_);
    for (auto k = outer.size(); k-- > 0;) {
        out = out * inner;
        out.c_[0] += MultiPoly::constant(inner.vars_, outer[k]);
    }
    return out;
}

MultiSeries MultiSeries::divided_by_lambda() const
{
    if (!c_[0].is_zero())
        throw std::domain_error("division by lambda needs a vanishing constant term");
    if (order_ == 0)
        throw std::domain_error("division by lambda of an order-0 series");
    return MultiSeries(vars_, order_ - 1, std::vector<MultiPoly>(c_.begin() + 1, c_.end()));
}

MultiSeries MultiSeries::substitute(std::string_view var, const MultiPoly& replacement) const
{
    MultiSeries out = *this;
    for (auto& x : out.c_)
        x = x.compose(var, replacement);
    return out;
}

MultiSeries MultiSeries::assign(const std::map<std::string, Rational>& values) const
{
    MultiSeries out = *this;
    for (auto& x : out.c_)
        x = x.substitute(values);
    return out;
}

Rational MultiSeries::evaluate(const Rational& lambda) const
{
    Rational acc = 0;
    for (auto k = c_.size(); k-- > 0;) {
        if (!c_[k].is_constant())
            throw std::invalid_argument("evaluate: series coefficients are not constant");
        acc = acc * lambda + c_[k].constant_term();
    }
    return acc;
}

bool MultiSeries::operator==(const MultiSeries& o) const
{
    return vars_ == o.vars_ && order_ == o.order_ && c_ == o.c_;
}

MultiSeries log1p_series(const VariableList& vars, int order)
{
    std::vector<Rational> c{Rational(0)};
    for (int k = 1; k <= order; ++k) {
        Rational r(k % 2 ? 1 : -1, k);
        r.canonicalize();
        c.push_back(r);
    }
    return MultiSeries::from_rationals(vars, order, c);
}

std::vector<Rational> lambert_w_over_x_coefficients(int order)
{
    std::vector<Rational> out;
    Integer factorial = 1;
    for (int n = 0; n <= order; ++n) {
        factorial *= n + 1;
        Integer num;
        mpz_pow_ui(num.get_mpz_t(), Integer(n + 1).get_mpz_t(), static_cast<unsigned long>(n));
        if (n % 2)
            num = -num;
        Rational r(num, factorial);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

MultiSeries g_series(const MultiPoly& d, int order)
{
    if (order > 8)
        throw std::invalid_argument("g_series supports orders up to 8");
    const VariableList& vars = d.variables();
    MultiSeries x = d * log1p_series(vars, order);
    MultiSeries w = MultiSeries::compose(lambert_w_over_x_coefficients(order), x);
    std::vector<Rational> prefactor{Rational(0)};
    for (int k = 1; k <= order; ++k)
        prefactor.emplace_back(k % 2 ? 1 : -1);
    return MultiSeries::from_rationals(vars, order, prefactor) * w;
}

MultiSeries g_series(const std::string& dvar, int order)
{
    VariableList vars{dvar};
    return g_series(MultiPoly::variable(vars, dvar), order);
}

namespace {

const VariableList t_vars{"d_u", "d_v"};
const VariableList tprime_vars{"d_w", "d_uw"};
const VariableList tdoubleprime_vars{"d_v"};

class PolyParser {
public:
    PolyParser(const VariableList& vars, std::string_view text) : vars_(vars), text_(text) {}

    MultiPoly parse()
    {
        MultiPoly p = expression();
        skip();
        if (pos_ != text_.size())
            fail("unexpected character");
        return p;
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    MultiPoly expression()
    {
        MultiPoly acc(vars_);
        bool negate = accept('-');
        if (!negate)
            accept('+');
        MultiPoly t = term();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = factor();
        while (true) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                MultiPoly d = factor();
                if (!d.is_constant() || d.is_zero())
                    fail("division by a non-constant or zero polynomial");
                acc *= Rational(1 / d.constant_term());
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor()
    {
        MultiPoly base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected an exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MultiPoly atom()
    {
        skip();
        if (accept('(')) {
            MultiPoly inner = expression();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return MultiPoly::constant(vars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            fail("expected a number, variable or '('");
        return MultiPoly::variable(vars_, text_.substr(start, pos_ - start));
    }

    const VariableList& vars_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

void add(SeriesReport& r, std::string id, bool ok, std::string detail, bool exploratory = false)
{
    r.checks.push_back({std::move(id), ok, std::move(detail), exploratory});
}

void add_equality(SeriesReport& r, std::string id, const MultiPoly& computed, const MultiPoly& displayed)
{
    bool ok = computed == displayed;
    std::string detail = ok ? displayed.to_string() : "computed " + computed.to_string() + " vs displayed " + displayed.to_string();
    add(r, std::move(id), ok, std::move(detail));
}

MultiPoly var(const VariableList& vars, const char* name)
{
    return MultiPoly::variable(vars, name);
}

MultiPoly constant(const VariableList& vars, long c)
{
    return MultiPoly::constant(vars, Rational(c));
}

Rational rat(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// Rational functions in several variables as (num, den) pairs; enough for the identity check.
struct Fraction {
    MultiPoly num;
    MultiPoly den;
};

Fraction operator-(const Fraction& a, const Fraction& b)
{
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

Fraction operator+(const Fraction& a, const Fraction& b)
{
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

Fraction operator*(const Fraction& a, const Fraction& b)
{
    return {a.num * b.num, a.den * b.den};
}

Fraction operator/(const Fraction& a, const Fraction& b)
{
    return {a.num * b.den, a.den * b.num};
}

}  // namespace

MultiPoly parse_multipoly(const VariableList& vars, std::string_view text)
{
    return PolyParser(vars, text).parse();
}

MultiSeries t_series(int order)
{
    MultiPoly du = var(t_vars, "d_u"), dv = var(t_vars, "d_v");
    int k = order + 1;
    MultiSeries num = g_series(dv - constant(t_vars, 1), k) - g_series(dv, k);
    return num.divided_by_lambda() / g_series(du, k).divided_by_lambda();
}

MultiSeries tprime_series(int order)
{
    MultiPoly dw = var(tprime_vars, "d_w"), duw = var(tprime_vars, "d_uw");
    return g_series(dw - duw, order) - g_series(dw, order);
}

MultiSeries tdoubleprime_series(int order)
{
    return g_series(var(tdoubleprime_vars, "d_v") - constant(tdoubleprime_vars, 1), order);
}

bool SeriesReport::ok() const
{
    for (const auto& c : checks)
        if (!c.exploratory && !c.ok)
            return false;
    return true;
}

nlohmann::json to_json(const SeriesReport& report)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json j{{"id", c.id}, {"status", c.ok ? "holds" : "fails"}, {"detail", c.detail}};
        if (c.exploratory)
            j["exploratory"] = true;
        checks.push_back(j);
    }
    return {{"report", report.name}, {"status", report.ok() ? "holds" : "fails"}, {"checks", checks}};
}

SeriesReport verify_t_coefficients()
{
    SeriesReport r{"t_coefficients", {}};
    MultiSeries t = t_series(4);
    add_equality(r, "a0", t.coefficient(0), constant(t_vars, 0));
    add_equality(r, "a1", t.coefficient(1), constant(t_vars, 1));
    add_equality(r, "a2", t.coefficient(2), parse_multipoly(t_vars, "d_u + 1 - 3*d_v"));
    add_equality(r, "a3", t.coefficient(3),
                 parse_multipoly(t_vars, "(3 + d_u - d_u^2 - 10*d_v - 6*d_u*d_v + 16*d_v^2)/2"));
    MultiPoly a4_12 = parse_multipoly(t_vars, "18*d_u^2*d_v + 96*d_u*d_v^2 - 42*d_u*d_v + 8*d_u^3 + 16*d_u"
                                              " - 250*d_v^3 + 231*d_v^2 - 139*d_v + 28");
    add_equality(r, "12a4", t.coefficient(4) * Rational(12), a4_12);

    MultiPoly dropped = parse_multipoly(t_vars, "-42*d_u*d_v - 250*d_v^3 - 139*d_v");
    MultiPoly rest = a4_12 - dropped;
    bool nonneg_terms = true;
    for (const auto& [e, c] : rest.terms())
        nonneg_terms = nonneg_terms && c > 0;
    add(r, "12a4.drop_positive_terms", nonneg_terms, "remaining terms " + rest.to_string());

    bool grid_ok = true;
    std::string worst;
    for (int delta = 1; delta <= 12; ++delta)
        for (int du = 1; du <= delta; ++du)
            for (int dv = 1; dv <= delta; ++dv) {
                std::map<std::string, Rational> at{{"d_u", Rational(du)}, {"d_v", Rational(dv)}};
                Rational reduced = dropped.evaluate(at);
                Rational full = a4_12.evaluate(at);
                Rational floor = Rational(-431) * delta * delta * delta;
                if (full < reduced || reduced < floor) {
                    grid_ok = false;
                    worst = "Delta=" + std::to_string(delta) + " d_u=" + std::to_string(du) + " d_v=" + std::to_string(dv);
                }
            }
    add(r, "12a4.lower_bound_grid", grid_ok,
        grid_ok ? "12a4 >= -42 d_u d_v - 250 d_v^3 - 139 d_v >= -431 Delta^3 for 1 <= d_u, d_v <= Delta <= 12" : worst);
    add(r, "431/12+1<37", rat(431, 12) + 1 < 37, "431/12 + 1 = " + to_string(rat(431, 12) + 1));
    add(r, "constant.drift_37_vs_36", true,
        "the t lower bound uses -37 Delta^3 lambda^4; the later displayed sum writes -36 Delta^3 lambda^4; "
        "b_0..b_3 do not depend on this constant",
        true);
    return r;
}

SeriesReport verify_tprime_coefficients()
{
    SeriesReport r{"tprime_coefficients", {}};
    MultiSeries tp = tprime_series(4);
    add_equality(r, "a'0", tp.coefficient(0), constant(tprime_vars, 0));
    add_equality(r, "a'1", tp.coefficient(1), constant(tprime_vars, 0));
    add_equality(r, "a'2", tp.coefficient(2), var(tprime_vars, "d_uw"));
    MultiPoly a3 = parse_multipoly(tprime_vars, "-3*(-d_uw^2 + 2*d_w*d_uw + d_uw)/2");
    add_equality(r, "a'3", tp.coefficient(3), a3);
    MultiPoly a4 = parse_multipoly(tprime_vars,
                                   "8*d_uw^3/3 - 8*d_w*d_uw^2 - 3*d_uw^2 + 8*d_w^2*d_uw + 6*d_w*d_uw + 11*d_uw/6");
    add_equality(r, "a'4", tp.coefficient(4), a4);
    add_equality(r, "a'4.derivative", a4.derivative("d_uw"),
                 parse_multipoly(tprime_vars, "11/6 + 8*(d_w - d_uw)^2 + 6*(d_w - d_uw)"));

    MultiPoly at_one = a4.compose("d_uw", constant(tprime_vars, 1));
    add_equality(r, "a'4.at_duw_1_minus_11/8", at_one - constant(tprime_vars, 1) * rat(11, 8),
                 parse_multipoly(tprime_vars, "8*(d_w - 1/8)^2"));

    Rational min_value;
    bool first = true;
    for (int dw = 1; dw <= 12; ++dw)
        for (int duw = 1; duw <= dw; ++duw) {
            Rational v = a4.evaluate({{"d_w", Rational(dw)}, {"d_uw", Rational(duw)}});
            if (first || v < min_value)
                min_value = v;
            first = false;
        }
    add(r, "a'4.grid_min", min_value >= rat(11, 8), "minimum over 1 <= d_uw <= d_w <= 12 is " + to_string(min_value));

    MultiPoly lam2 = tp.coefficient(2), lam3 = tp.coefficient(3);
    MultiPoly relaxed3 = parse_multipoly(tprime_vars, "-3*d_w*d_uw");
    add_equality(r, "relaxation.lambda2", lam2, var(tprime_vars, "d_uw"));
    MultiPoly gap = lam3 - relaxed3;
    add_equality(r, "relaxation.lambda3_gap", gap, parse_multipoly(tprime_vars, "3*d_uw*(d_uw - 1)/2"));
    return r;
}

SeriesReport verify_tdoubleprime_coefficients()
{
    SeriesReport r{"tdoubleprime_coefficients", {}};
    MultiSeries tpp = tdoubleprime_series(3);
    add_equality(r, "t''.lambda0", tpp.coefficient(0), constant(tdoubleprime_vars, 0));
    add_equality(r, "t''.lambda1", tpp.coefficient(1), constant(tdoubleprime_vars, 1));
    add_equality(r, "t''.lambda2", tpp.coefficient(2), parse_multipoly(tdoubleprime_vars, "-d_v"));
    add_equality(r, "t''.lambda3", tpp.coefficient(3), parse_multipoly(tdoubleprime_vars, "(3*d_v^2 - 3*d_v + 2)/2"));

    // The cubic is below lambda when (3 d_v^2 - 3 d_v + 2) lambda / 2 <= d_v.
    bool ok = true;
    for (int delta = 1; delta <= 12; ++delta) {
        Rational lambda = rat(1, 4 * delta);
        for (int dv = 1; dv <= delta; ++dv) {
            Rational cubic = lambda - dv * lambda * lambda + rat(3 * dv * dv - 3 * dv + 2, 2) * lambda * lambda * lambda;
            ok = ok && cubic < lambda;
        }
    }
    add(r, "t''.below_lambda", ok, "cubic < lambda at lambda = 1/(4 Delta), 1 <= d_v <= Delta <= 12");

    MultiSeries g0 = g_series(MultiPoly::constant(tdoubleprime_vars, Rational(0)), 6);
    std::vector<Rational> expect{Rational(0)};
    for (int k = 1; k <= 6; ++k)
        expect.emplace_back(k % 2 ? 1 : -1);
    add(r, "g(0).series", g0 == MultiSeries::from_rationals(tdoubleprime_vars, 6, expect),
        "d = 0 gives lambda/(1+lambda)");
    return r;
}

SeriesReport verify_fidentity()
{
    SeriesReport r{"fidentity", {}};
    const VariableList vars{"lambda", "d_u", "d_v"};
    MultiPoly lambda = var(vars, "lambda"), du = var(vars, "d_u"), dv = var(vars, "d_v");
    MultiPoly one = constant(vars, 1);
    auto f = [&](const MultiPoly& d) { return Fraction{lambda, one + (d + one) * lambda}; };
    Fraction lhs = (f(dv - one) - f(dv)) / f(du);
    Fraction rhs = f(dv - one) + Fraction{du - dv, one} * f(dv - one) * f(dv);
    MultiPoly cross = lhs.num * rhs.den - rhs.num * lhs.den;
    add(r, "fidentity.cross_multiplied", cross.is_zero(),
        cross.is_zero() ? "zero polynomial in lambda, d_u, d_v" : "residual " + cross.to_string());

    std::map<std::string, Rational> at{{"lambda", rat(1, 3)}, {"d_u", Rational(2)}, {"d_v", Rational(1)}};
    Rational l = lhs.num.evaluate(at) / lhs.den.evaluate(at);
    Rational rr = rhs.num.evaluate(at) / rhs.den.evaluate(at);
    add(r, "fidentity.spot_2_1_1/3", l == rr, "both sides " + to_string(l) + " and " + to_string(rr));

    MultiPoly diag = cross.compose("d_u", dv);
    add(r, "fidentity.diagonal", diag.is_zero(), "d_u = d_v");
    return r;
}

namespace {

RationalInterval g_cached(std::map<std::pair<int, Rational>, RationalInterval>& cache, int d, const Rational& lambda,
                          const Rational& tol)
{
    auto key = std::make_pair(d, lambda);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    return cache.emplace(key, g_tf_interval(d, lambda, tol)).first->second;
}

}  // namespace

SeriesReport verify_sampled_truncations(int max_delta)
{
    SeriesReport r{"sampled_truncations", {}};
    std::map<std::pair<int, Rational>, RationalInterval> cache;
    Rational tol(1, 10);
    tol = pow(tol, 28);
    for (int pass = 0; pass < 2; ++pass) {
        bool exploratory = pass == 1;
        std::string where = exploratory ? "1/(4 Delta)" : "1/(50 Delta)";
        bool t_ok = true, tp_ok = true, tpp_ok = true;
        std::string t_bad, tp_bad, tpp_bad;
        for (int delta = 1; delta <= max_delta; ++delta) {
            Rational lambda = exploratory ? rat(1, 4 * delta) : rat(1, 50 * delta);
            Rational l2 = lambda * lambda, l3 = l2 * lambda, l4 = l3 * lambda;
            Rational cube = Rational(delta) * delta * delta;
            for (int du = 1; du <= delta; ++du)
                for (int dv = 1; dv <= delta; ++dv) {
                    RationalInterval t = (g_cached(cache, dv - 1, lambda, tol) - g_cached(cache, dv, lambda, tol)) /
                                         g_cached(cache, du, lambda, tol);
                    Rational bound = lambda + (du + 1 - 3 * dv) * l2 +
                                     rat(3 + du - du * du - 10 * dv - 6 * du * dv + 16 * dv * dv, 2) * l3 -
                                     37 * cube * l4;
                    if (!(t.lo() >= bound) && t_ok) {
                        t_ok = false;
                        t_bad = "Delta=" + std::to_string(delta) + " d_u=" + std::to_string(du) + " d_v=" + std::to_string(dv);
                    }
                }
            for (int dw = 1; dw <= delta; ++dw)
                for (int duw = 1; duw <= dw; ++duw) {
                    RationalInterval tp = g_cached(cache, dw - duw, lambda, tol) - g_cached(cache, dw, lambda, tol);
                    Rational bound = Rational(duw) * (l2 - 3 * dw * l3);
                    if (!(tp.lo() >= bound) && tp_ok) {
                        tp_ok = false;
                        tp_bad = "Delta=" + std::to_string(delta) + " d_w=" + std::to_string(dw) + " d_uw=" + std::to_string(duw);
                    }
                }
            for (int dv = 1; dv <= delta; ++dv) {
                RationalInterval tpp = g_cached(cache, dv - 1, lambda, tol);
                Rational bound = lambda - dv * l2 + rat(3 * dv * dv - 3 * dv + 2, 2) * l3;
                if (!(tpp.hi() <= bound) && tpp_ok) {
                    tpp_ok = false;
                    tpp_bad = "Delta=" + std::to_string(delta) + " d_v=" + std::to_string(dv);
                }
            }
        }
        std::string grid = " at lambda = " + where + ", Delta <= " + std::to_string(max_delta);
        add(r, "t.lower@" + where, t_ok, t_ok ? "certified" + grid : "not certified at " + t_bad + grid, exploratory);
        add(r, "t'.lower@" + where, tp_ok, tp_ok ? "certified" + grid : "not certified at " + tp_bad + grid, exploratory);
        add(r, "t''.upper@" + where, tpp_ok, tpp_ok ? "certified" + grid : "not certified at " + tpp_bad + grid,
            exploratory);
    }
    return r;
}

BCoefficients b_coefficients(const Graph& g)
{
    if (!is_triangle_free(g))
        throw std::invalid_argument("b coefficients need a triangle-free graph");
    if (g.order() == 0 || g.min_degree() < 1)
        throw std::invalid_argument("b coefficients need minimum degree at least 1");
    const int n = g.order();
    const int order = 3;
    const VariableList vars;
    const std::vector<int> deg = g.degrees();
    const Rational delta_cubed = pow(Rational(g.max_degree()), 3);
    auto series = [&](std::vector<Rational> c) { return MultiSeries::from_rationals(vars, order, c); };

    MultiSeries total(vars, order);
    for (int u = 0; u < n; ++u) {
        const int du = deg[static_cast<std::size_t>(u)];
        NeighborhoodData nd = neighborhood_data(g, u);
        MultiSeries x(vars, order), y(vars, order);
        for (VertexSet s = nd.open; s; s &= s - 1) {
            const int dv = deg[static_cast<std::size_t>(lowest_vertex(s))];
            x += series({Rational(0), Rational(1), Rational(du + 1 - 3 * dv),
                         rat(3 + du - du * du - 10 * dv - 6 * du * dv + 16 * dv * dv, 2), -37 * delta_cubed});
            y += series({Rational(0), Rational(1), Rational(-dv), rat(3 * dv * dv - 3 * dv + 2, 2)});
        }
        for (const auto& [w, duw] : nd.codegrees) {
            const int dw = deg[static_cast<std::size_t>(w)];
            y -= series({Rational(0), Rational(0), Rational(duw), Rational(-3 * dw * duw)});
        }
        MultiSeries one = series({Rational(1)});
        MultiSeries geometric = one + y + y.pow(2) + y.pow(3) + Rational(2) * y.pow(4) + Rational(2) * y.pow(5);
        total += (one - x) * geometric;
    }
    BCoefficients out;
    for (int k = 0; k <= order; ++k)
        out.b.push_back(total.coefficient(k).constant_term() / n);

    Rational sum = 0;
    for (int u = 0; u < n; ++u) {
        const int du = deg[static_cast<std::size_t>(u)];
        Rational inner = du;
        for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
            const int dv = deg[static_cast<std::size_t>(lowest_vertex(s))];
            inner += 7 * (du - dv) * (du - dv);
        }
        sum += inner;
    }
    out.closed_form = -sum / (2 * n);
    return out;
}

SeriesReport verify_b_coefficients(const Graph& g)
{
    SeriesReport r{"b_coefficients:" + (g.label().empty() ? encode_graph6(g) : g.label()), {}};
    BCoefficients b = b_coefficients(g);
    add(r, "b0", b.b[0] == 1, "b0 = " + to_string(b.b[0]));
    add(r, "b1", b.b[1] == 0, "b1 = " + to_string(b.b[1]));
    add(r, "b2", b.b[2] == 0, "b2 = " + to_string(b.b[2]));
    add(r, "b3.closed_form", b.b[3] == b.closed_form,
        "series " + to_string(b.b[3]) + ", closed form " + to_string(b.closed_form));
    add(r, "b3.at_most_-1/2", b.closed_form <= rat(-1, 2), "closed form " + to_string(b.closed_form));

    bool counts = true;
    for (int u = 0; u < g.order(); ++u)
        counts = counts && tf_edge_count_identity(g, u);
    add(r, "tf_edge_counts", counts, "sum of neighbour degrees = d_u + sum of codegrees at every vertex");

    // Second displayed form of y_u, which relies on the edge-count identity.
    bool y_forms = true;
    const std::vector<int> deg = g.degrees();
    for (int u = 0; u < g.order(); ++u) {
        NeighborhoodData nd = neighborhood_data(g, u);
        const int du = deg[static_cast<std::size_t>(u)];
        Rational first2 = 0, first3 = 0, second2 = du, second3 = 0;
        for (VertexSet s = nd.open; s; s &= s - 1) {
            const int dv = deg[static_cast<std::size_t>(lowest_vertex(s))];
            first2 -= dv;
            first3 += rat(3 * dv * dv - 3 * dv + 2, 2);
            second2 -= 2 * dv;
            second3 += rat(3 * dv * dv - 3 * dv + 2, 2);
        }
        for (const auto& [w, duw] : nd.codegrees) {
            const int dw = deg[static_cast<std::size_t>(w)];
            first2 -= duw;
            first3 += 3 * dw * duw;
            second3 += 3 * dw * duw;
        }
        y_forms = y_forms && first2 == second2 && first3 == second3;
    }
    add(r, "y_u.second_form", y_forms, "both displayed forms of y_u agree at every vertex");

    // (1-y)(1 + y + y^2 + y^3 + 2y^4 + 2y^5) - 1 >= 0 on [-1/2, 1/2].
    RatPoly y = RatPoly::x();
    RatPoly one{Rational(1)};
    RatPoly geometric = one + y + y.pow(2) + y.pow(3) + y.pow(4) * Rational(2) + y.pow(5) * Rational(2);
    RatPoly cleared = (one - y) * geometric - one;
    Verdict v = sturm_nonneg_on_interval(cleared, rat(-1, 2), rat(1, 2));
    add(r, "geometric_bound", v.ok(), "(1-y)(1+y+y^2+y^3+2y^4+2y^5) - 1 = " + to_pretty(cleared, "y") + " on [-1/2, 1/2]");
    return r;
}

}  // namespace hardcore
