#include "hardcore/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hardcore {

MultiPoly::MultiPoly(VariableList vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(const VariableList& vars, const Rational& c)
{
    MultiPoly p(vars);
    p.add_term(Exponents(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const VariableList& vars, std::string_view name)
{
    MultiPoly p(vars);
    Exponents e(vars.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

std::size_t MultiPoly::index_of(std::string_view var) const
{
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        throw std::invalid_argument("undeclared variable '" + std::string(var) + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::check_compatible(const MultiPoly& o) const
{
    if (vars_ != o.vars_)
        throw std::invalid_argument("MultiPoly operands use different variable lists");
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](int k) { return k == 0; }));
}

Rational MultiPoly::constant_term() const
{
    return coefficient(Exponents(vars_.size(), 0));
}

int MultiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Rational MultiPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_compatible(b);
    MultiPoly out(a.vars_);
    MultiPoly::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(vars_, Rational(1)), base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::string_view var) const
{
    std::size_t i = index_of(var);
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0)
            continue;
        Exponents f = e;
        --f[i];
        out.add_term(f, c * e[i]);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Rational>& values) const
{
    std::vector<std::pair<std::size_t, Rational>> assigned;
    for (const auto& [name, v] : values)
        assigned.emplace_back(index_of(name), v);
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        Rational coeff = c;
        for (const auto& [i, v] : assigned) {
            coeff *= hardcore::pow(v, f[i]);
            f[i] = 0;
        }
        out.add_term(f, coeff);
    }
    return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const
{
    MultiPoly reduced = substitute(values);
    if (!reduced.is_constant())
        throw std::invalid_argument("evaluate: not every variable was assigned");
    return reduced.constant_term();
}

MultiPoly MultiPoly::compose(std::string_view var, const MultiPoly& replacement) const
{
    check_compatible(replacement);
    std::size_t i = index_of(var);
    std::vector<MultiPoly> powers{constant(vars_, Rational(1))};
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[i])
            powers.push_back(powers.back() * replacement);
        Exponents f = e;
        f[i] = 0;
        MultiPoly mono(vars_);
        mono.add_term(f, c);
        out += mono * powers[static_cast<std::size_t>(e[i])];
    }
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db)
            return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += hardcore::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += hardcore::to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace hardcore
