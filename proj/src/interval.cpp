#include "hardcore/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardcore {

namespace {

Rational scale2(const Rational& x, long k)
{
    Rational out = x;
    if (k >= 0)
        mpq_mul_2exp(out.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    else
        mpq_div_2exp(out.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    return out;
}

Rational round_down(const Rational& x, unsigned bits)
{
    if (x.get_den() == 1)
        return x;
    return scale2(Rational(floor(scale2(x, bits))), -static_cast<long>(bits));
}

Rational round_up(const Rational& x, unsigned bits)
{
    if (x.get_den() == 1)
        return x;
    return scale2(Rational(ceil(scale2(x, bits))), -static_cast<long>(bits));
}

long bit_length(const Integer& v)
{
    return v == 0 ? 0 : static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

Rational two_pow(long k)
{
    return scale2(Rational(1), k);
}

// atanh on 0 <= zl <= zh <= 1/2 with absolute error about 2^-bits.
RationalInterval atanh_nonneg(const Rational& zl, const Rational& zh, unsigned bits)
{
    const unsigned work = bits + 8;
    const Rational eps = two_pow(-static_cast<long>(bits) - 4);
    Rational z2l = round_down(zl * zl, work), z2h = round_up(zh * zh, work);
    Rational pl = zl, ph = zh, suml = 0, sumh = 0;
    for (long j = 0;; ++j) {
        Rational denom(2 * j + 1);
        suml += round_down(pl / denom, work);
        sumh += round_up(ph / denom, work);
        pl = round_down(pl * z2l, work);
        ph = round_up(ph * z2h, work);
        // Tail sum_{i>j} z^(2i+1)/(2i+1) <= ph / ((2j+3)(1 - z^2)).
        Rational tail = ph / (Rational(2 * j + 3) * (1 - z2h));
        if (tail <= eps) {
            sumh += round_up(tail, work);
            break;
        }
    }
    return RationalInterval(suml, sumh);
}

RationalInterval atanh_interval(const Rational& z, unsigned bits)
{
    if (z == 0)
        return RationalInterval(Rational(0));
    const unsigned work = bits + 8;
    if (z > 0)
        return atanh_nonneg(round_down(z, work), round_up(z, work), bits);
    Rational m = -z;
    return -atanh_nonneg(round_down(m, work), round_up(m, work), bits);
}

RationalInterval log2_interval(unsigned bits)
{
    auto a = atanh_interval(Rational(1, 3), bits + 1);
    return RationalInterval(2 * a.lo(), 2 * a.hi());
}

RationalInterval log_at_bits(const Rational& y, unsigned bits)
{
    if (y <= 0)
        throw std::domain_error("log of a non-positive number");
    if (y == 1)
        return RationalInterval(Rational(0));
    long k = bit_length(y.get_num()) - bit_length(y.get_den());
    Rational m = scale2(y, -k);
    while (m > Rational(4, 3)) {
        m = scale2(m, -1);
        ++k;
    }
    while (m < Rational(2, 3)) {
        m = scale2(m, 1);
        --k;
    }
    Rational z = (m - 1) / (m + 1);
    auto at = atanh_interval(z, bits + 2);
    RationalInterval log_m(2 * at.lo(), 2 * at.hi());
    if (k == 0)
        return log_m.rounded(bits + 2);
    auto guard = static_cast<unsigned>(bit_length(Integer(k < 0 ? -k : k)));
    RationalInterval l2 = log2_interval(bits + guard + 2);
    RationalInterval scaled = RationalInterval(Rational(k)) * l2;
    return (scaled + log_m).rounded(bits + 2);
}

// e^y for 0 <= y <= 1/2, relative error about 2^-bits.
RationalInterval exp_small(const Rational& y, unsigned bits)
{
    const unsigned work = bits + 8;
    const Rational eps = two_pow(-static_cast<long>(bits) - 4);
    Rational tl = 1, th = 1, suml = 0, sumh = 0;
    Rational yl = round_down(y, work), yh = round_up(y, work);
    for (long k = 1;; ++k) {
        suml += tl;
        sumh += th;
        tl = round_down(tl * yl / k, work);
        th = round_up(th * yh / k, work);
        // Remaining tail <= t_k / (1 - y/(k+1)) <= 2 t_k.
        if (th <= eps) {
            sumh += 2 * th;
            break;
        }
    }
    return RationalInterval(suml, sumh);
}

RationalInterval exp_at_bits(const Rational& x, unsigned bits)
{
    if (x == 0)
        return RationalInterval(Rational(1));
    Rational ax = x < 0 ? Rational(-x) : x;
    long s = 0;
    while (scale2(ax, -s) > Rational(1, 2))
        ++s;
    const unsigned work = bits + static_cast<unsigned>(s) + 8;
    RationalInterval v = exp_small(scale2(ax, -s), work);
    for (long i = 0; i < s; ++i)
        v = RationalInterval(round_down(v.lo() * v.lo(), work), round_up(v.hi() * v.hi(), work));
    if (x < 0)
        v = RationalInterval(round_down(1 / v.hi(), work), round_up(1 / v.lo(), work));
    return v;
}

template <class F>
RationalInterval refine_until(const Rational& tol, F&& compute)
{
    if (tol <= 0)
        throw std::invalid_argument("tolerance must be positive");
    unsigned bits = bits_for_tolerance(tol) + 8;
    for (int attempt = 0; attempt < 64; ++attempt, bits += 32) {
        RationalInterval r = compute(bits);
        if (r.width() <= tol)
            return r;
    }
    throw std::runtime_error("interval refinement did not reach the requested tolerance");
}

}  // namespace

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_)
        throw std::invalid_argument("interval with lo > hi");
}

RationalInterval RationalInterval::rounded(unsigned bits) const
{
    return RationalInterval(round_down(lo_, bits), round_up(hi_, bits));
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b)
{
    return RationalInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

RationalInterval operator-(const RationalInterval& a)
{
    return RationalInterval(-a.hi_, -a.lo_);
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b)
{
    return RationalInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b)
{
    Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    auto [mn, mx] = std::minmax_element(p, p + 4);
    return RationalInterval(*mn, *mx);
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b)
{
    if (b.contains_zero())
        throw std::domain_error("interval division by an interval containing zero");
    return a * RationalInterval(1 / b.hi_, 1 / b.lo_);
}

RationalInterval RationalInterval::pow(unsigned e) const
{
    RationalInterval out(Rational(1));
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    if (e % 2 == 0 && contains_zero())
        out = RationalInterval(Rational(0), out.hi_);
    return out;
}

std::string RationalInterval::to_string() const
{
    return "[" + hardcore::to_string(lo_) + ", " + hardcore::to_string(hi_) + "]";
}

std::string RationalInterval::to_decimal(int digits) const
{
    return "[" + hardcore::to_decimal(lo_, digits) + ", " + hardcore::to_decimal(hi_, digits) + "]";
}

std::string to_decimal(const Rational& x, int digits)
{
    if (x == 0)
        return "0";
    mpf_class f(x, 512);
    char* buf = nullptr;
    int len = gmp_asprintf(&buf, "%.*Fe", digits - 1, f.get_mpf_t());
    std::string s(buf);
    void (*free_fn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(buf, static_cast<size_t>(len) + 1);
    return s;
}

unsigned bits_for_tolerance(const Rational& tol)
{
    if (tol <= 0)
        throw std::invalid_argument("tolerance must be positive");
    if (tol >= 1)
        return 1;
    Integer inv = ceil(1 / tol);
    return static_cast<unsigned>(mpz_sizeinbase(inv.get_mpz_t(), 2)) + 1;
}

Rational tolerance_floor()
{
    return Rational(Integer(1), pow(Integer(10), 30));
}

RationalInterval log_interval(const Rational& x, const Rational& tol)
{
    if (x <= 0)
        throw std::domain_error("log of a non-positive number");
    if (x == 1)
        return RationalInterval(Rational(0));
    return refine_until(tol, [&](unsigned bits) { return log_at_bits(x, bits); });
}

RationalInterval log1p_interval(const Rational& x, const Rational& tol)
{
    if (x <= -1)
        throw std::domain_error("log1p requires x > -1");
    return log_interval(Rational(1 + x), tol);
}

RationalInterval log_interval(const RationalInterval& x, const Rational& tol)
{
    Rational half = tol / 2;
    return RationalInterval(log_interval(x.lo(), half).lo(), log_interval(x.hi(), half).hi());
}

RationalInterval exp_interval(const Rational& x, const Rational& tol)
{
    return refine_until(tol, [&](unsigned bits) {
        // Absolute width scales with e^x, so add bits for the magnitude.
        Integer mag = ceil(x > 0 ? Rational(x * 3 / 2) : Rational(0));
        return exp_at_bits(x, bits + static_cast<unsigned>(mag.get_ui()));
    });
}

RationalInterval lambert_w_interval(const Rational& x, const Rational& tol)
{
    if (x < 0)
        throw std::domain_error("lambert_w_interval requires x >= 0");
    if (tol <= 0)
        throw std::invalid_argument("tolerance must be positive");
    if (x == 0)
        return RationalInterval(Rational(0));
    Rational lo = 0, hi = x > 1 ? x : Rational(1);
    unsigned bits = bits_for_tolerance(tol) + 16;
    // Invariant: lo*e^lo <= x <= hi*e^hi, certified.
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        for (int attempt = 0;; ++attempt) {
            RationalInterval f = RationalInterval(mid) * exp_at_bits(mid, bits);
            if (f.hi() < x) {
                lo = mid;
                break;
            }
            if (f.lo() > x) {
                hi = mid;
                break;
            }
            if (attempt > 32)
                throw std::runtime_error("lambert_w_interval: could not separate w*e^w from x");
            bits += 32;
        }
    }
    return RationalInterval(lo, hi);
}

RationalInterval lambert_w_over_x_interval(const RationalInterval& x, const Rational& tol)
{
    if (x.lo() < 0)
        throw std::domain_error("lambert_w_over_x_interval requires x >= 0");
    if (x.hi() == 0)
        return RationalInterval(Rational(1));
    if (x.lo() == 0)
        return RationalInterval(lambert_w_interval(x.hi(), tol * x.hi() / 4).lo() / x.hi(), Rational(1));
    Rational lo = lambert_w_interval(x.hi(), tol * x.hi() / 4).lo() / x.hi();
    Rational hi = lambert_w_interval(x.lo(), tol * x.lo() / 4).hi() / x.lo();
    return RationalInterval(lo, hi);
}

RationalInterval entropy_interval(const Rational& x, const Rational& tol)
{
    if (x < 0 || x > 1)
        throw std::domain_error("entropy_interval requires 0 <= x <= 1");
    if (x == 0 || x == 1)
        return RationalInterval(Rational(0));
    Rational y = 1 - x;
    Rational part = tol / 4;
    RationalInterval a = RationalInterval(Rational(-x)) * log_interval(x, part);
    RationalInterval b = RationalInterval(Rational(-y)) * log_interval(y, part);
    return a + b;
}

RationalInterval free_energy_interval(const IntPoly& z, int n, const Rational& lambda, const Rational& tol)
{
    if (n < 1)
        throw std::invalid_argument("free_energy_interval requires n >= 1");
    Rational value = z.evaluate(lambda);
    if (value <= 0)
        throw std::domain_error("free_energy_interval: Z(lambda) must be positive");
    RationalInterval l = log_interval(value, tol * n);
    return RationalInterval(l.lo() / n, l.hi() / n);
}

}  // namespace hardcore
