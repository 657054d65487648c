#pragma once

#include "lieloop/error.hpp"

#include <string>
#include <vector>

namespace lieloop {

// Integer-coefficient power series truncated at a dimension cutoff.  All
// arithmetic on two series first truncates to the smaller cutoff; every
// result in this artifact is only claimed "up to dimension N".
class HilbertSeries {
public:
    HilbertSeries() = default;
    explicit HilbertSeries(int cutoff) : c_(static_cast<std::size_t>(cutoff) + 1, 0) {}
    HilbertSeries(int cutoff, std::vector<long long> coeffs);

    static HilbertSeries one(int cutoff);
    // The series z^dim (dim > cutoff gives 0).
    static HilbertSeries monomial(int cutoff, int dim, long long coeff = 1);

    int cutoff() const { return static_cast<int>(c_.size()) - 1; }
    long long at(int n) const { return n >= 0 && n <= cutoff() ? c_[static_cast<std::size_t>(n)] : 0; }
    void set(int n, long long v) { c_.at(static_cast<std::size_t>(n)) = v; }
    const std::vector<long long>& coeffs() const { return c_; }

    HilbertSeries truncated(int cutoff) const;

    bool operator==(const HilbertSeries& o) const { return c_ == o.c_; }
    bool is_zero() const;
    bool nonnegative() const;
    // Smallest n with coefficient != that of `o` (comparing up to the common
    // cutoff); -1 if they agree.
    int first_difference(const HilbertSeries& o) const;
    int first_negative() const; // -1 if none

    HilbertSeries operator+(const HilbertSeries& o) const;
    HilbertSeries operator-(const HilbertSeries& o) const;
    HilbertSeries operator*(const HilbertSeries& o) const;
    HilbertSeries scaled(long long k) const;
    HilbertSeries shifted(int k) const; // multiply by z^k

    // Multiplicative inverse; requires constant term +-1 (NonUnitConstantTerm).
    HilbertSeries inverse() const;

    // Renders as "c0 + c1 z + c2 z^2 + ... (+O(z^{N+1}))".
    std::string str() const;

private:
    std::vector<long long> c_{0};
};

HilbertSeries series_mul(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries series_inverse(const HilbertSeries& a);

// Hilbert series of the coproduct A ⨿ B of connected algebras:
// (A ⨿ B)(z) = (A(z)^-1 + B(z)^-1 - 1)^-1.  Both constant terms must be 1.
HilbertSeries coproduct_inverse(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries coproduct_inverse(const std::vector<HilbertSeries>& factors);

// Hilbert series of the universal enveloping algebra of a graded Lie algebra
// with the given module dimensions (PBW):
//   UL(z) = prod_{n odd} (1+z^n)^{l_n} * prod_{n even} (1-z^n)^{-l_n}.
// Requires l_0 = 0 and l_n >= 0 (NegativeDimension).
HilbertSeries pbw_series(const HilbertSeries& lie_dims);

// Inverse of pbw_series: the unique integer sequence l with pbw(l) = u up to
// the cutoff, computed dimension by dimension.  Entries may come out
// negative; a negative entry signals that u is not the enveloping series of
// any graded Lie algebra, which callers interpret as a refutation.
HilbertSeries witt_solve(const HilbertSeries& u);

// Generator counts of a free Lie algebra with the given module dimensions:
// if J = L(W) then U(J) = T(W), so W(z) = 1 - pbw(J)(z)^-1.  A negative
// entry refutes freeness of a Lie algebra with those dimensions.
HilbertSeries free_generator_counts(const HilbertSeries& lie_dims);

// Module dimensions of the free Lie algebra on a graded module W:
// dims L(W) = witt_solve(1/(1 - W(z))).
HilbertSeries free_lie_dims_on_module(const HilbertSeries& w);

// Series of a bigraded object truncated at homological degree 1: deg0 + t*deg1
// with t^2 = 0.  Enough to assemble (HEL)_1 of a coproduct from per-factor
// data, since the paper only ever consumes degrees 0 and 1.
struct BigradedSeries {
    HilbertSeries deg0;
    HilbertSeries deg1;

    BigradedSeries() = default;
    BigradedSeries(HilbertSeries d0, HilbertSeries d1)
        : deg0(std::move(d0)), deg1(std::move(d1)) {}
    static BigradedSeries concentrated(HilbertSeries d0);

    BigradedSeries operator*(const BigradedSeries& o) const;
    BigradedSeries inverse() const;
};

BigradedSeries coproduct_inverse(const std::vector<BigradedSeries>& factors);

} // namespace lieloop
