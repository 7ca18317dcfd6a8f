#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "hardcore/interval.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

enum class Status { holds, fails, inconclusive };

std::string to_string(Status s);

/// Failing coefficient index for coefficient-wise orderings.
struct CoefficientIndex {
    int k = 0;
    bool operator==(const CoefficientIndex&) const = default;
};

/// Overlapping enclosures of the two sides of a comparison.
struct EnclosurePair {
    RationalInterval lhs;
    RationalInterval rhs;
    bool operator==(const EnclosurePair&) const = default;
};

/// Free-form location, e.g. "u=3 F={1,4}".
struct Location {
    std::string text;
    bool operator==(const Location&) const = default;
};

using Witness = std::variant<std::monostate, CoefficientIndex, Rational, EnclosurePair, Location>;

/// Outcome of a decision procedure.
struct Verdict {
    Status status = Status::holds;
    Witness witness;
    std::optional<Rational> margin;
    std::string note;

    static Verdict holds(std::optional<Rational> margin = std::nullopt);
    static Verdict fails(Witness w, std::optional<Rational> margin = std::nullopt);
    static Verdict inconclusive(EnclosurePair enclosures);

    bool ok() const { return status == Status::holds; }
    bool has_witness() const { return !std::holds_alternative<std::monostate>(witness); }
};

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json to_json(const Verdict& v);

/// fails dominates inconclusive, which dominates holds.
Status combine(Status a, Status b);

/// CLI exit code for an aggregate status: 0 holds, 2 fails, 3 inconclusive.
int exit_code(Status s);

}  // namespace hardcore
