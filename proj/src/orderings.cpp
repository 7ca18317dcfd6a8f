#include "hardcore/orderings.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hardcore/sturm.hpp"

namespace hardcore {

namespace {

void check_pair(const IntPoly& p, const IntPoly& q)
{
    for (const IntPoly* poly : {&p, &q}) {
        if (poly->is_zero() || (*poly)[0] != 1)
            throw std::invalid_argument("ordering operands must have constant term 1");
        for (const auto& c : poly->coefficients())
            if (c < 0)
                throw std::invalid_argument("ordering operands must have nonnegative coefficients");
    }
}

IntPoly var_numerator(const IntPoly& p)
{
    IntPoly d1 = p.derivative(), d2 = d1.derivative();
    return (d2.shifted(2) + d1.shifted(1)) * p - (d1 * d1).shifted(2);
}

IntPoly var_certificate_int(const IntPoly& p, const IntPoly& q)
{
    return var_numerator(p) * q * q - var_numerator(q) * p * p;
}

Verdict coefficientwise(const IntPoly& p, const IntPoly& q)
{
    std::size_t n = std::max(p.size(), q.size());
    std::optional<Rational> slack;
    for (std::size_t k = 1; k < n; ++k) {
        Rational diff(p[k] - q[k]);
        if (diff < 0)
            return Verdict::fails(CoefficientIndex{static_cast<int>(k)}, diff);
        if (!slack || diff < *slack)
            slack = diff;
    }
    return Verdict::holds(slack);
}

Verdict free_volume(const IntPoly& p, const IntPoly& q)
{
    std::size_t n = std::max(p.size(), q.size());
    std::optional<Rational> slack;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        Rational diff(q[k] * p[k + 1] - p[k] * q[k + 1]);
        if (diff < 0)
            return Verdict::fails(CoefficientIndex{static_cast<int>(k)}, diff);
        if (!slack || diff < *slack)
            slack = diff;
    }
    return Verdict::holds(slack);
}

}  // namespace

std::string to_string(OrderingKind kind)
{
    switch (kind) {
    case OrderingKind::count:
        return "COUNT";
    case OrderingKind::part:
        return "PART";
    case OrderingKind::coef:
        return "COEF";
    case OrderingKind::occ:
        return "OCC";
    case OrderingKind::max:
        return "MAX";
    case OrderingKind::fv:
        return "FV";
    case OrderingKind::var:
        return "VAR";
    }
    return "?";
}

OrderingKind parse_ordering_kind(std::string_view text)
{
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (OrderingKind k : all_orderings)
        if (to_string(k) == upper)
            return k;
    throw std::invalid_argument("unknown ordering '" + std::string(text) + "' (expected COUNT, PART, COEF, OCC, MAX, FV or VAR)");
}

Verdict compare(OrderingKind kind, const IntPoly& p, const IntPoly& q)
{
    check_pair(p, q);
    switch (kind) {
    case OrderingKind::count: {
        Rational diff(p.coefficient_sum() - q.coefficient_sum());
        return diff >= 0 ? Verdict::holds(diff) : Verdict::fails(Rational(1), diff);
    }
    case OrderingKind::max: {
        std::size_t top = std::max(p.size(), q.size()) - 1;
        Rational diff(p[top] - q[top]);
        return diff >= 0 ? Verdict::holds(diff) : Verdict::fails(CoefficientIndex{static_cast<int>(top)}, diff);
    }
    case OrderingKind::coef:
        return coefficientwise(p, q);
    case OrderingKind::fv:
        return free_volume(p, q);
    case OrderingKind::part:
        return sturm_nonneg_on_halfline(to_rat(p - q));
    case OrderingKind::occ: {
        IntPoly cross = (p.derivative() * q - p * q.derivative()).shifted(1);
        return sturm_nonneg_on_halfline(to_rat(cross));
    }
    case OrderingKind::var:
        return sturm_nonneg_on_halfline(to_rat(var_certificate_int(p, q)));
    }
    throw std::logic_error("unhandled ordering kind");
}

RatPoly var_difference_certificate(const IntPoly& p, const IntPoly& q)
{
    check_pair(p, q);
    return to_rat(var_certificate_int(p, q));
}

ImplicationReport implication_web_check(const IntPoly& p, const IntPoly& q)
{
    ImplicationReport report;
    for (OrderingKind k : all_orderings)
        report.verdicts.emplace(k, compare(k, p, q));
    for (const auto& imp : implication_web)
        if (report.verdicts.at(imp.premise).ok() && !report.verdicts.at(imp.conclusion).ok())
            report.violations.push_back(to_string(imp.premise) + "=>" + to_string(imp.conclusion));
    return report;
}

nlohmann::json to_json(const ImplicationReport& report)
{
    nlohmann::json verdicts = nlohmann::json::object();
    for (const auto& [k, v] : report.verdicts)
        verdicts[to_string(k)] = to_json(v);
    return {{"verdicts", verdicts}, {"violations", report.violations}};
}

}  // namespace hardcore
