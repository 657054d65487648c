#pragma once

#include "lieloop/error.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lieloop {

// A single run of the linear algebra always happens over an honest field:
// the rationals (p == 0) or F_p with p > 3.  Localized coefficient rings are
// handled one level up by running over Q and over each tested prime field.
struct Field {
    std::uint32_t p = 0;

    bool rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

bool is_prime(std::uint64_t n);

// Coefficient ring requested by the user.
//  - Rationals                     : F_0 = Q
//  - PrimeField(p), p > 3          : F_p
//  - Localization(inverted)        : Z[P^-1], 2 and 3 always inverted
struct RingSpec {
    enum class Kind { Rationals, PrimeField, Localization };

    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;                        // PrimeField only
    std::vector<std::uint32_t> inverted_primes; // Localization only, ascending

    static RingSpec rationals() { return RingSpec{}; }
    static RingSpec prime_field(std::uint32_t p);
    static RingSpec localization(std::vector<std::uint32_t> inverted);

    // Checks a rational coefficient appearing in input expressions: over a
    // localization the denominator may only involve inverted primes.
    bool denominator_allowed(const mpz_class& den) const;

    // Fields the analysis actually runs over.  For Q and F_p this is the
    // single field; for a localization it is Q followed by every tested
    // prime field.
    std::vector<Field> run_fields(const std::vector<std::uint32_t>& tested_primes) const;

    std::string name() const;
    bool operator==(const RingSpec&) const = default;
};

// Exact scalar of one run: a rational when field.p == 0, otherwise a residue
// in [0, p).  Arithmetic never leaves the field and never touches floating
// point.
class Scalar {
public:
    Scalar() = default; // rational zero
    explicit Scalar(Field f) : p_(f.p) {}

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f);
    static Scalar from_integer(long v, Field f);
    // Reduces num/den into the field.  Over F_p a denominator divisible by p
    // raises DivisionByZero.
    static Scalar from_rational(const mpq_class& q, Field f);

    Field field() const { return Field{p_}; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rational value (valid only over Q).
    const mpq_class& rational() const { return q_; }
    // Residue (valid only over F_p).
    std::uint64_t residue() const { return r_; }

    // "3", "-3/2" over Q; the residue as a decimal over F_p.
    std::string str() const;

private:
    void check_same_field(const Scalar& o) const;

    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint32_t p_ = 0;
};

} // namespace lieloop
