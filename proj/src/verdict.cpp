#include "hardcore/verdict.hpp"

namespace hardcore {

std::string to_string(Status s)
{
    switch (s) {
    case Status::holds:
        return "holds";
    case Status::fails:
        return "fails";
    case Status::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

Verdict Verdict::holds(std::optional<Rational> margin)
{
    Verdict v;
    v.status = Status::holds;
    v.margin = std::move(margin);
    return v;
}

Verdict Verdict::fails(Witness w, std::optional<Rational> margin)
{
    Verdict v;
    v.status = Status::fails;
    v.witness = std::move(w);
    v.margin = std::move(margin);
    return v;
}

Verdict Verdict::inconclusive(EnclosurePair enclosures)
{
    Verdict v;
    v.status = Status::inconclusive;
    v.witness = std::move(enclosures);
    return v;
}

nlohmann::json witness_to_json(const Witness& w)
{
    using nlohmann::json;
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return nullptr;
            else if constexpr (std::is_same_v<T, CoefficientIndex>)
                return json{{"k", x.k}};
            else if constexpr (std::is_same_v<T, Rational>)
                return json{{"x", to_string(x)}};
            else if constexpr (std::is_same_v<T, EnclosurePair>)
                return json{{"lhs", x.lhs.to_string()}, {"rhs", x.rhs.to_string()}};
            else
                return json{{"at", x.text}};
        },
        w);
}

nlohmann::json to_json(const Verdict& v)
{
    nlohmann::json j{{"status", to_string(v.status)}};
    if (v.has_witness())
        j["witness"] = witness_to_json(v.witness);
    if (v.margin)
        j["margin"] = to_string(*v.margin);
    if (!v.note.empty())
        j["note"] = v.note;
    return j;
}

Status combine(Status a, Status b)
{
    if (a == Status::fails || b == Status::fails)
        return Status::fails;
    if (a == Status::inconclusive || b == Status::inconclusive)
        return Status::inconclusive;
    return Status::holds;
}

int exit_code(Status s)
{
    switch (s) {
    case Status::holds:
        return 0;
    case Status::fails:
        return 2;
    case Status::inconclusive:
        return 3;
    }
    return 1;
}

}  // namespace hardcore
