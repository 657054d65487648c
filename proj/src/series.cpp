#include "lieloop/series.hpp"

#include <algorithm>
#include <cstdlib>

namespace lieloop {

HilbertSeries::HilbertSeries(int cutoff, std::vector<long long> coeffs)
    : c_(std::move(coeffs))
{
    c_.resize(static_cast<std::size_t>(cutoff) + 1, 0);
}

HilbertSeries HilbertSeries::one(int cutoff)
{
    HilbertSeries s(cutoff);
    s.c_[0] = 1;
    return s;
}

HilbertSeries HilbertSeries::monomial(int cutoff, int dim, long long coeff)
{
    HilbertSeries s(cutoff);
    if (dim <= cutoff)
        s.c_[static_cast<std::size_t>(dim)] = coeff;
    return s;
}

HilbertSeries HilbertSeries::truncated(int cutoff) const
{
    HilbertSeries s(cutoff);
    for (int n = 0; n <= cutoff && n <= this->cutoff(); ++n)
        s.c_[static_cast<std::size_t>(n)] = at(n);
    return s;
}

bool HilbertSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
}

bool HilbertSeries::nonnegative() const { return first_negative() == -1; }

int HilbertSeries::first_difference(const HilbertSeries& o) const
{
    int n_max = std::min(cutoff(), o.cutoff());
    for (int n = 0; n <= n_max; ++n)
        if (at(n) != o.at(n))
            return n;
    return -1;
}

int HilbertSeries::first_negative() const
{
    for (int n = 0; n <= cutoff(); ++n)
        if (at(n) < 0)
            return n;
    return -1;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const
{
    HilbertSeries s(std::min(cutoff(), o.cutoff()));
    for (int n = 0; n <= s.cutoff(); ++n)
        s.c_[static_cast<std::size_t>(n)] = at(n) + o.at(n);
    return s;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const
{
    return *this + o.scaled(-1);
}

HilbertSeries HilbertSeries::operator*(const HilbertSeries& o) const
{
    HilbertSeries s(std::min(cutoff(), o.cutoff()));
    for (int n = 0; n <= s.cutoff(); ++n) {
        long long acc = 0;
        for (int i = 0; i <= n; ++i)
            acc += at(i) * o.at(n - i);
        s.c_[static_cast<std::size_t>(n)] = acc;
    }
    return s;
}

HilbertSeries HilbertSeries::scaled(long long k) const
{
    HilbertSeries s(cutoff());
    for (int n = 0; n <= cutoff(); ++n)
        s.c_[static_cast<std::size_t>(n)] = k * at(n);
    return s;
}

HilbertSeries HilbertSeries::shifted(int k) const
{
    HilbertSeries s(cutoff());
    for (int n = k; n <= cutoff(); ++n)
        s.c_[static_cast<std::size_t>(n)] = at(n - k);
    return s;
}

HilbertSeries HilbertSeries::inverse() const
{
    long long a0 = at(0);
    if (a0 != 1 && a0 != -1)
        throw error("NonUnitConstantTerm", "cannot invert series with constant term " + std::to_string(a0));
    HilbertSeries s(cutoff());
    s.c_[0] = a0; // 1/a0 = a0 for a0 = +-1
    for (int n = 1; n <= cutoff(); ++n) {
        long long acc = 0;
        for (int i = 1; i <= n; ++i)
            acc += at(i) * s.at(n - i);
        s.c_[static_cast<std::size_t>(n)] = -acc * a0;
    }
    return s;
}

std::string HilbertSeries::str() const
{
    std::string out;
    bool first = true;
    for (int n = 0; n <= cutoff(); ++n) {
        long long c = at(n);
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long a = std::llabs(c);
        if (n == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1)
                out += std::to_string(a) + " ";
            out += n == 1 ? "z" : "z^" + std::to_string(n);
        }
    }
    if (first)
        out = "0";
    out += " (+O(z^" + std::to_string(cutoff() + 1) + "))";
    return out;
}

HilbertSeries series_mul(const HilbertSeries& a, const HilbertSeries& b) { return a * b; }

HilbertSeries series_inverse(const HilbertSeries& a) { return a.inverse(); }

HilbertSeries coproduct_inverse(const HilbertSeries& a, const HilbertSeries& b)
{
    return coproduct_inverse(std::vector<HilbertSeries>{a, b});
}

HilbertSeries coproduct_inverse(const std::vector<HilbertSeries>& factors)
{
    if (factors.empty())
        throw error("EmptyCoproduct", "coproduct of no factors");
    int cutoff = factors[0].cutoff();
    for (const auto& f : factors)
        cutoff = std::min(cutoff, f.cutoff());
    HilbertSeries acc(cutoff);
    acc.set(0, 1 - static_cast<long long>(factors.size()));
    for (const auto& f : factors) {
        if (f.at(0) != 1)
            throw error("NonUnitConstantTerm", "coproduct factor must have constant term 1");
        acc = acc + f.inverse();
    }
    return acc.inverse();
}

namespace {

// (1 + s z^n)^e truncated, for s = +-1 and any integer e.
HilbertSeries binomial_factor(int cutoff, int n, int sign, long long e)
{
    HilbertSeries base(cutoff);
    base.set(0, 1);
    if (n <= cutoff)
        base.set(n, sign);
    bool invert = e < 0;
    unsigned long long k = static_cast<unsigned long long>(invert ? -e : e);
    HilbertSeries acc = HilbertSeries::one(cutoff);
    HilbertSeries pw = base;
    while (k) {
        if (k & 1)
            acc = acc * pw;
        pw = pw * pw;
        k >>= 1;
    }
    return invert ? acc.inverse() : acc;
}

} // namespace

HilbertSeries pbw_series(const HilbertSeries& lie_dims)
{
    if (lie_dims.at(0) != 0)
        throw error("NotConnected", "Lie dimensions must vanish in dimension 0");
    if (int n = lie_dims.first_negative(); n != -1)
        throw error("NegativeDimension",
                    "negative Lie dimension " + std::to_string(lie_dims.at(n)) + " at dimension " + std::to_string(n));
    int cutoff = lie_dims.cutoff();
    HilbertSeries u = HilbertSeries::one(cutoff);
    for (int n = 1; n <= cutoff; ++n) {
        long long l = lie_dims.at(n);
        if (l == 0)
            continue;
        u = u * (n % 2 == 1 ? binomial_factor(cutoff, n, +1, l)
                            : binomial_factor(cutoff, n, -1, -l));
    }
    return u;
}

HilbertSeries witt_solve(const HilbertSeries& u)
{
    if (u.at(0) != 1)
        throw error("NonUnitConstantTerm", "enveloping series must have constant term 1");
    int cutoff = u.cutoff();
    HilbertSeries l(cutoff);
    HilbertSeries residual = u;
    for (int n = 1; n <= cutoff; ++n) {
        long long ln = residual.at(n);
        l.set(n, ln);
        if (ln == 0)
            continue;
        // strip the dimension-n factor
        residual = residual * (n % 2 == 1 ? binomial_factor(cutoff, n, +1, -ln)
                                          : binomial_factor(cutoff, n, -1, ln));
    }
    return l;
}

HilbertSeries free_generator_counts(const HilbertSeries& lie_dims)
{
    return HilbertSeries::one(lie_dims.cutoff()) - pbw_series(lie_dims).inverse();
}

HilbertSeries free_lie_dims_on_module(const HilbertSeries& w)
{
    return witt_solve((HilbertSeries::one(w.cutoff()) - w).inverse());
}

BigradedSeries BigradedSeries::concentrated(HilbertSeries d0)
{
    HilbertSeries zero(d0.cutoff());
    return BigradedSeries(std::move(d0), zero);
}

BigradedSeries BigradedSeries::operator*(const BigradedSeries& o) const
{
    return BigradedSeries(deg0 * o.deg0, deg0 * o.deg1 + deg1 * o.deg0);
}

BigradedSeries BigradedSeries::inverse() const
{
    HilbertSeries inv0 = deg0.inverse();
    return BigradedSeries(inv0, (inv0 * deg1 * inv0).scaled(-1));
}

BigradedSeries coproduct_inverse(const std::vector<BigradedSeries>& factors)
{
    if (factors.empty())
        throw error("EmptyCoproduct", "coproduct of no factors");
    int cutoff = factors[0].deg0.cutoff();
    for (const auto& f : factors)
        cutoff = std::min({cutoff, f.deg0.cutoff(), f.deg1.cutoff()});
    BigradedSeries acc(HilbertSeries(cutoff), HilbertSeries(cutoff));
    acc.deg0.set(0, 1 - static_cast<long long>(factors.size()));
    for (const auto& f : factors) {
        BigradedSeries inv = f.inverse();
        acc.deg0 = acc.deg0 + inv.deg0;
        acc.deg1 = acc.deg1 + inv.deg1;
    }
    return acc.inverse();
}

} // namespace lieloop
