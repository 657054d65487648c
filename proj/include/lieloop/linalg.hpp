#pragma once

#include "lieloop/ring.hpp"

#include <utility>
#include <vector>

namespace lieloop {

// Sparse vector over column indices, sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sv_scaled(const SparseVec& a, const Scalar& c);
// a + c*b
SparseVec sv_add_scaled(const SparseVec& a, const SparseVec& b, const Scalar& c);
const Scalar* sv_at(const SparseVec& a, int col);

// A subspace kept in reduced row echelon form: rows sorted by pivot column,
// pivots normalized to 1 and eliminated from every other row.  The RREF of a
// subspace is unique, so bases and coset representatives derived from it are
// deterministic regardless of insertion order.
class RowSpace {
public:
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    bool has_pivot(int col) const;

    // Residue of v modulo the subspace (fully reduced, canonical).
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    // Inserts v; returns true when the rank grew.
    bool insert(SparseVec v);

private:
    std::vector<SparseVec> rows_;
    std::vector<int> pivots_;
};

// Kernel of the linear map sending basis vector i to vecs[i]: returns
// coefficient combinations c (sparse over i) with sum_i c_i vecs[i] = 0.
std::vector<SparseVec> kernel_combos(const std::vector<SparseVec>& vecs, Field f);

} // namespace lieloop
