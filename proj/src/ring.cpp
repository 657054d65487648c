#include "lieloop/ring.hpp"

#include <algorithm>

namespace lieloop {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

RingSpec RingSpec::prime_field(std::uint32_t p)
{
    if (!is_prime(p) || p <= 3)
        throw error("InvalidRing", "prime field requires a prime p > 3, got " + std::to_string(p));
    RingSpec r;
    r.kind = Kind::PrimeField;
    r.p = p;
    return r;
}

RingSpec RingSpec::localization(std::vector<std::uint32_t> inverted)
{
    for (auto p : inverted)
        if (!is_prime(p))
            throw error("InvalidRing", std::to_string(p) + " is not prime");
    inverted.push_back(2);
    inverted.push_back(3);
    std::sort(inverted.begin(), inverted.end());
    inverted.erase(std::unique(inverted.begin(), inverted.end()), inverted.end());
    RingSpec r;
    r.kind = Kind::Localization;
    r.inverted_primes = std::move(inverted);
    return r;
}

bool RingSpec::denominator_allowed(const mpz_class& den) const
{
    if (kind != Kind::Localization)
        return true;
    mpz_class d = abs(den);
    for (auto p : inverted_primes)
        while (d % p == 0)
            d /= p;
    return d == 1;
}

std::vector<Field> RingSpec::run_fields(const std::vector<std::uint32_t>& tested_primes) const
{
    switch (kind) {
    case Kind::Rationals:
        return {Field{0}};
    case Kind::PrimeField:
        return {Field{p}};
    case Kind::Localization: {
        std::vector<Field> fields{Field{0}};
        for (auto q : tested_primes) {
            if (!is_prime(q) || q <= 3)
                throw error("InvalidPrime", "tested primes must be primes > 3, got " + std::to_string(q));
            if (std::find(inverted_primes.begin(), inverted_primes.end(), q) != inverted_primes.end())
                continue; // invertible primes are not in nP
            fields.push_back(Field{q});
        }
        return fields;
    }
    }
    return {Field{0}};
}

std::string RingSpec::name() const
{
    switch (kind) {
    case Kind::Rationals:
        return "Q";
    case Kind::PrimeField:
        return "F" + std::to_string(p);
    case Kind::Localization: {
        std::string s = "Z[";
        for (std::size_t i = 0; i < inverted_primes.size(); ++i) {
            if (i)
                s += ",";
            s += "1/" + std::to_string(inverted_primes[i]);
        }
        return s + "]";
    }
    }
    return "Q";
}

Scalar Scalar::one(Field f)
{
    Scalar s(f);
    if (f.rational())
        s.q_ = 1;
    else
        s.r_ = 1;
    return s;
}

Scalar Scalar::from_integer(long v, Field f)
{
    Scalar s(f);
    if (f.rational()) {
        s.q_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0)
            m += f.p;
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p)
{
    if (a == 0)
        throw error("DivisionByZero", "inverse of 0 in F" + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

std::uint64_t mod_of_mpz(const mpz_class& z, std::uint64_t p)
{
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0)
        m += static_cast<unsigned long>(p);
    return m.get_ui();
}

} // namespace

Scalar Scalar::from_rational(const mpq_class& q, Field f)
{
    Scalar s(f);
    if (f.rational()) {
        s.q_ = q;
        s.q_.canonicalize();
    } else {
        std::uint64_t num = mod_of_mpz(q.get_num(), f.p);
        std::uint64_t den = mod_of_mpz(q.get_den(), f.p);
        if (den == 0)
            throw error("DivisionByZero",
                        "denominator of " + q.get_str() + " vanishes in F" + std::to_string(f.p));
        s.r_ = num * mod_inverse(den, f.p) % f.p;
    }
    return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const
{
    if (p_ != o.p_)
        throw error("FieldMismatch", "scalars over " + field().name() + " and " + o.field().name());
}

Scalar Scalar::operator-() const
{
    Scalar s(field());
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same_field(o);
    Scalar s(field());
    if (p_ == 0)
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % p_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same_field(o);
    Scalar s(field());
    if (p_ == 0)
        s.q_ = q_ * o.q_;
    else
        s.r_ = r_ * o.r_ % p_;
    return s;
}

Scalar Scalar::inverse() const
{
    Scalar s(field());
    if (p_ == 0) {
        if (q_ == 0)
            throw error("DivisionByZero", "inverse of 0");
        s.q_ = 1 / q_;
    } else {
        s.r_ = mod_inverse(r_, p_);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    check_same_field(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const
{
    if (p_ != o.p_)
        return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const
{
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

} // namespace lieloop
