#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hardcore/poly.hpp"
#include "hardcore/verdict.hpp"

namespace hardcore {

enum class OrderingKind { count, part, coef, occ, max, fv, var };

inline constexpr std::array<OrderingKind, 7> all_orderings{
    OrderingKind::count, OrderingKind::part, OrderingKind::coef, OrderingKind::occ,
    OrderingKind::max,   OrderingKind::fv,   OrderingKind::var};

std::string to_string(OrderingKind kind);
/// Case-insensitive: COUNT, PART, COEF, OCC, MAX, FV, VAR.
OrderingKind parse_ordering_kind(std::string_view text);

/// Decides P >=_kind Q. Both polynomials must have constant term 1 and nonnegative
/// coefficients; they are compared as if padded to a common length.
Verdict compare(OrderingKind kind, const IntPoly& p, const IntPoly& q);

/// P^2 Q^2 (V_P - V_Q) as a polynomial.
RatPoly var_difference_certificate(const IntPoly& p, const IntPoly& q);

/// An implication between orderings: `premise` holding must force `conclusion`.
struct Implication {
    OrderingKind premise;
    OrderingKind conclusion;
};

inline constexpr std::array<Implication, 7> implication_web{{
    {OrderingKind::var, OrderingKind::occ},
    {OrderingKind::fv, OrderingKind::occ},
    {OrderingKind::fv, OrderingKind::coef},
    {OrderingKind::coef, OrderingKind::part},
    {OrderingKind::occ, OrderingKind::part},
    {OrderingKind::part, OrderingKind::count},
    {OrderingKind::part, OrderingKind::max},
}};

struct ImplicationReport {
    std::map<OrderingKind, Verdict> verdicts;
    /// Broken implications, e.g. "VAR=>OCC". Any entry indicates an implementation defect.
    std::vector<std::string> violations;
};

ImplicationReport implication_web_check(const IntPoly& p, const IntPoly& q);

nlohmann::json to_json(const ImplicationReport& report);

}  // namespace hardcore
