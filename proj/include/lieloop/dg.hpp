#pragma once

#include "lieloop/present.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lieloop {

// The differential of the extension, extended to a derivation of the whole
// quotient algebra by the signed Leibniz rule (signs use dimension only).
// Degree-0 generators map to 0; degree-1 generators map to their d' value.
class Differential {
public:
    Differential(Arena& arena, const Presentation& p);
    // Arbitrary generator images, for programmatically constructed tables.
    Differential(Arena& arena, std::map<GenId, TensorElement> images);

    const TensorElement& image(GenId g) const { return images_.at(g); }
    TensorElement apply_word(const Word& w) const;
    TensorElement apply(const TensorElement& e) const; // reduced result

    struct DSquaredFailure {
        GenId gen;
        TensorElement value;
    };
    // First generator (declaration order) with d(d(g)) != 0.
    std::optional<DSquaredFailure> check_d_squared() const;
    // Throws DSquaredNonzero naming the offending generator.
    void require_d_squared_zero() const;

    // Images of the quotient basis words of block (dim, degree), as
    // coordinates in block (dim-1, degree-1).
    const std::vector<SparseVec>& matrix(int dim, int degree);
    long long rank(int dim, int degree);

private:
    Arena* arena_;
    std::map<GenId, TensorElement> images_;
    std::map<std::pair<int, int>, std::vector<SparseVec>> matrices_;
    std::map<std::pair<int, int>, long long> ranks_;
};

// Bigraded homology data of EL (degrees 0 and 1) up to `cutoff`, with
// deterministic cycle representatives, plus the cycle/boundary dimensions
// the rank-nullity assertions need.
struct LieHomology {
    int cutoff = 0;
    std::vector<long long> h0, h1;     // per dimension 0..cutoff
    std::vector<long long> z1, b1, b0; // cycle / boundary dimensions
    std::vector<std::vector<TensorElement>> reps0, reps1;

    HilbertSeries h0_series() const;
    HilbertSeries h1_series() const;
};

LieHomology lie_homology(Arena& arena, Differential& d, int cutoff);

// Boundary space of (EL)_1 in dimension n: d(lie(n+1, 2)) inside the
// quotient coordinates of block (n, 1).
RowSpace lie_boundaries_deg1(Arena& arena, Differential& d, int dim);

// Homology dimensions of the full U(EL) per (dimension, degree), dimensions
// 0..cutoff.  Entry [n][k] is dim H_{n,k}.
std::vector<std::vector<long long>> full_homology_dims(Arena& arena, Differential& d, int cutoff);

// Per-dimension totals of full_homology_dims.
HilbertSeries full_homology_series(Arena& arena, Differential& d, int cutoff);

} // namespace lieloop
