#include "hardcore/sturm.hpp"

#include <optional>
#include <stdexcept>

namespace hardcore {

namespace {

// Divides by the positive content, keeping the sign of every coefficient.
IntPoly remove_content(const IntPoly& p)
{
    Integer g = 0;
    for (const auto& c : p.coefficients())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g <= 1)
        return p;
    std::vector<Integer> out;
    out.reserve(p.size());
    for (const auto& c : p.coefficients())
        out.push_back(c / g);
    return IntPoly(std::move(out));
}

// A positive multiple of (a mod b).
IntPoly positive_prem(IntPoly a, const IntPoly& b)
{
    const Integer& lb = b.leading();
    int steps = 0;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(a.degree() - b.degree());
        Integer la = a.leading();
        a = a * lb - b.shifted(shift) * la;
        ++steps;
    }
    if (lb < 0 && steps % 2 == 1)
        a = -a;
    return a;
}

int sign_of_leading_at(const IntPoly& p, bool negative_infinity)
{
    int s = sign(p.leading());
    if (negative_infinity && p.degree() % 2 == 1)
        s = -s;
    return s;
}

int count_variations(const std::vector<int>& signs)
{
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

class Isolator {
public:
    explicit Isolator(const IntPoly& q) : q_(q), chain_(q) {}

    std::vector<IsolatingInterval> run(const Rational& lo, const Rational& hi)
    {
        std::vector<IsolatingInterval> out;
        if (q_.degree() < 1)
            return out;
        split(lo, hi, chain_.variations_at(lo), chain_.variations_at(hi), out);
        return out;
    }

private:
    void split(const Rational& a, const Rational& b, int va, int vb, std::vector<IsolatingInterval>& out)
    {
        int count = va - vb;
        if (count <= 0)
            return;
        if (count == 1) {
            if (sign_at(q_, b) == 0) {
                out.push_back({b, b});
                return;
            }
            if (sign_at(q_, a) != 0) {
                out.push_back({a, b});
                return;
            }
        }
        Rational m = (a + b) / 2;
        int vm = chain_.variations_at(m);
        split(a, m, va, vm, out);
        split(m, b, vm, vb, out);
    }

    const IntPoly& q_;
    SturmChain chain_;
};

IsolatingInterval refine_with(const IntPoly& q, IsolatingInterval iv, const Rational& width)
{
    if (iv.exact())
        return iv;
    int sa = sign_at(q, iv.lo);
    while (iv.width() > width) {
        Rational m = (iv.lo + iv.hi) / 2;
        int s = sign_at(q, m);
        if (s == 0)
            return {m, m};
        if (s == sa)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

Rational refinement_width(const IsolatingInterval& iv)
{
    Rational scale = abs(iv.hi) > 1 ? Rational(abs(iv.hi)) : Rational(1);
    return scale / 1024;
}

// Cheap pass over small-denominator points before the exact procedure.
std::optional<Rational> quick_negative_sample(const RatPoly& p, const Rational& lo, const std::optional<Rational>& hi)
{
    static const int probes[][2] = {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {4, 1}, {1, 4}, {8, 1}, {1, 8},
                                    {16, 1}, {32, 1}, {64, 1}, {128, 1}, {1024, 1}};
    for (const auto& pr : probes) {
        Rational x(pr[0], pr[1]);
        x.canonicalize();
        if (x < lo || (hi && x > *hi))
            continue;
        if (p.evaluate(x) < 0)
            return x;
    }
    return std::nullopt;
}

// Samples p once in each maximal root-free region of [lo, hi] (hi absent: [lo, inf)).
std::optional<Rational> scan_regions(const RatPoly& p, const IntPoly& q, const std::vector<IsolatingInterval>& roots,
                                     const Rational& lo, const std::optional<Rational>& hi)
{
    auto probe = [&](const Rational& a, const Rational& b) -> std::optional<Rational> {
        bool a_root = sign_at(q, a) == 0, b_root = sign_at(q, b) == 0;
        Rational s;
        if (a == b) {
            if (a_root)
                return std::nullopt;
            s = a;
        } else {
            Rational quarter = (b - a) / 4;
            s = simplest_in(a_root ? Rational(a + quarter) : a, b_root ? Rational(b - quarter) : b);
        }
        if (p.evaluate(s) < 0)
            return s;
        return std::nullopt;
    };
    Rational start = lo;
    for (const auto& iv : roots) {
        if (start <= iv.lo)
            if (auto w = probe(start, iv.lo))
                return w;
        start = iv.hi;
    }
    if (hi) {
        if (start <= *hi)
            return probe(start, *hi);
        return std::nullopt;
    }
    Rational s(floor(start) + 1);
    if (p.evaluate(s) < 0)
        return s;
    return std::nullopt;
}

Verdict nonneg_decision(const RatPoly& p, const Rational& lo, const std::optional<Rational>& hi)
{
    if (p.is_zero())
        return Verdict::holds();
    Rational at_lo = p.evaluate(lo);
    if (at_lo < 0)
        return Verdict::fails(lo, at_lo);
    if (hi) {
        Rational at_hi = p.evaluate(*hi);
        if (at_hi < 0)
            return Verdict::fails(*hi, at_hi);
    }
    if (lo >= 0) {
        bool all_nonneg = true;
        for (const auto& c : p.coefficients())
            all_nonneg = all_nonneg && c >= 0;
        if (all_nonneg)
            return Verdict::holds();
    }
    if (auto w = quick_negative_sample(p, lo, hi))
        return Verdict::fails(*w, p.evaluate(*w));
    IntPoly q = square_free_integer(p);
    Rational upper = hi ? *hi : root_bound(q);
    if (upper < lo)
        upper = lo;
    auto roots = Isolator(q).run(lo, upper);
    for (auto& iv : roots)
        iv = refine_with(q, iv, refinement_width(iv));
    if (auto w = scan_regions(p, q, roots, lo, hi))
        return Verdict::fails(*w, p.evaluate(*w));
    return Verdict::holds();
}

}  // namespace

SturmChain::SturmChain(const IntPoly& square_free)
{
    if (square_free.is_zero())
        throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(square_free);
    IntPoly d = square_free.derivative();
    if (d.is_zero())
        return;
    chain_.push_back(remove_content(d));
    while (true) {
        IntPoly r = positive_prem(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero())
            break;
        chain_.push_back(remove_content(-r));
    }
}

int SturmChain::variations_at(const Rational& x) const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_)
        signs.push_back(sign_at(p, x));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const
{
    std::vector<int> signs;
    for (const auto& p : chain_)
        signs.push_back(sign_of_leading_at(p, false));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const
{
    std::vector<int> signs;
    for (const auto& p : chain_)
        signs.push_back(sign_of_leading_at(p, true));
    return count_variations(signs);
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const
{
    if (a > b)
        throw std::invalid_argument("count_roots requires a <= b");
    return variations_at(a) - variations_at(b);
}

int sign_at(const IntPoly& p, const Rational& x)
{
    if (p.is_zero())
        return 0;
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer acc = p.leading(), bp = 1;
    for (int k = p.degree() - 1; k >= 0; --k) {
        bp *= b;
        acc = acc * a + p[static_cast<std::size_t>(k)] * bp;
    }
    return sign(acc);
}

IntPoly square_free_integer(const RatPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("square-free part of the zero polynomial");
    if (p.degree() == 0)
        return IntPoly{Integer(1)};
    return primitive_part(square_free_part(p)).first;
}

Rational root_bound(const IntPoly& p)
{
    if (p.degree() < 1)
        return Rational(1);
    Rational best = 0;
    Integer lead = abs(p.leading());
    for (int k = 0; k < p.degree(); ++k) {
        Rational r(abs(p[static_cast<std::size_t>(k)]), lead);
        r.canonicalize();
        if (r > best)
            best = r;
    }
    return best + 1;
}

std::vector<IsolatingInterval> isolate_roots_in(const RatPoly& p, const Rational& lo, const Rational& hi)
{
    if (lo > hi)
        throw std::invalid_argument("isolate_roots_in requires lo <= hi");
    IntPoly q = square_free_integer(p);
    return Isolator(q).run(lo, hi);
}

std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p)
{
    IntPoly q = square_free_integer(p);
    Rational b = root_bound(q);
    return Isolator(q).run(-b, b);
}

std::vector<IsolatingInterval> isolate_positive_roots(const RatPoly& p)
{
    IntPoly q = square_free_integer(p);
    return Isolator(q).run(Rational(0), root_bound(q));
}

IsolatingInterval refine_root(const RatPoly& p, IsolatingInterval iv, const Rational& width)
{
    if (width <= 0)
        throw std::invalid_argument("refine_root requires a positive width");
    return refine_with(square_free_integer(p), std::move(iv), width);
}

Verdict sturm_nonneg_on_halfline(const RatPoly& p)
{
    return nonneg_decision(p, Rational(0), std::nullopt);
}

Verdict sturm_nonneg_on_interval(const RatPoly& p, const Rational& lo, const Rational& hi)
{
    if (lo > hi)
        throw std::invalid_argument("sturm_nonneg_on_interval requires lo <= hi");
    return nonneg_decision(p, lo, hi);
}

}  // namespace hardcore
