#pragma once

#include "lieloop/linalg.hpp"
#include "lieloop/ring.hpp"
#include "lieloop/series.hpp"
#include "lieloop/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieloop {

struct FactorBlock {
    std::string name;
    bool targets = false;
};

// A finitely presented dga extension: UL0 = TV0/(relations) in degree 0,
// degree-1 generators V1 with differential images d' in L0.
struct Presentation {
    RingSpec ring;
    int cutoff = 0;
    GenTable gens;
    std::vector<LieExpr> relations;                      // degree-0 Lie relations
    std::vector<std::pair<GenId, LieExpr>> differentials; // degree-1 generator -> d' image
    std::vector<FactorBlock> factors;                    // empty when not a coproduct

    bool has_factors() const { return !factors.empty(); }
    int targets_factor() const; // -1 when absent

    std::vector<GenId> degree0_gens() const;
    std::vector<GenId> degree1_gens() const;
    const LieExpr* differential_of(GenId g) const;

    // Structural validation: generator dims/degrees, relation homogeneity and
    // degree, d-image dimensions, factor discipline, localized coefficient
    // denominators.  Field-independent (runs expression checks over Q).
    void validate() const;

    // Marked-factor sub-presentation: the degree-0 generators of `factor`
    // plus (optionally) every degree-1 generator, with the relations and
    // differentials they carry.
    Presentation factor_slice(int factor, bool with_cells) const;

    // Hilbert series of the degree-1 module, up to `cutoff`.
    HilbertSeries v1_series() const;
};

// Whether the degree-0 part of `factor` (-1 = the whole presentation) is
// presented without relations.
bool factor_relation_free(const Presentation& p, int factor);

// The ambient computational arena for one field: canonical word bases of
// TV/(relations) per (dimension, degree), the relation ideal in reduced row
// echelon form, canonical reduction, and Lie components.  Dimensions are
// materialized lazily in ascending order; `top` bounds what may ever be
// materialized (callers use cutoff + 1 so homology at the cutoff sees its
// boundaries).
class Arena {
public:
    Arena(const Presentation& p, Field f, int top, long long max_words);

    const Presentation& presentation() const { return *pres_; }
    const GenTable& gens() const { return pres_->gens; }
    Field field() const { return field_; }
    int top() const { return top_; }
    long long max_words() const { return max_words_; }

    // Saturating count of ambient words of dimension n (no materialization).
    unsigned long long count_words(int dim) const;

    const std::vector<Word>& words(int dim, int degree);
    const std::vector<int>& degrees_at(int dim);

    const RowSpace& ideal(int dim, int degree);
    long long ideal_dim(int dim, int degree);
    // Indices (into words(dim, degree)) of the coset representative words.
    const std::vector<int>& quotient_words(int dim, int degree);
    long long quotient_dim(int dim, int degree);
    long long quotient_dim(int dim);
    // Hilbert series of the degree-0 quotient subalgebra UL0 up to `cutoff`.
    HilbertSeries ul0_series(int cutoff);

    // Canonical representative modulo the two-sided relation ideal.  The
    // element must be homogeneous in dimension; degrees may mix.
    TensorElement reduce(const TensorElement& e);

    // Coordinates of a reduced element in the quotient word basis of one
    // (dim, degree) block.
    SparseVec coords(const TensorElement& reduced, int dim, int degree);
    TensorElement element_of(const SparseVec& coords, int dim, int degree);
    // Coordinates across all degrees of one dimension, blocks concatenated.
    SparseVec mixed_coords(const TensorElement& reduced, int dim);
    TensorElement element_of_mixed(const SparseVec& coords, int dim);
    int block_offset(int dim, int degree);
    // Filtration level (count of letters in `marked`) below which a mixed
    // coordinate column lives; used by the subalgebra machinery.

    // Lie component: the span of left-normed generator brackets of total
    // (dim, degree), reduced modulo the relation ideal.
    const RowSpace& lie_space(int dim, int degree);
    std::vector<TensorElement> lie_basis(int dim, int degree);
    long long lie_dim(int dim, int degree);
    // Spanning elements kept during saturation (span the same subspace as
    // lie_basis; cheaper to bracket against).
    const std::vector<TensorElement>& lie_spanning(int dim, int degree);

    TensorElement bracket(const TensorElement& a, const TensorElement& b);
    TensorElement gen_element(GenId g) const { return TensorElement::generator(g, field_); }

private:
    struct Block {
        std::vector<Word> words;
        std::map<Word, int, WordLess> index;
        RowSpace ideal;
        std::vector<int> quotient;
        std::map<int, int> quotient_pos;
    };
    struct LieBlock {
        RowSpace space;
        std::vector<TensorElement> spanning;
    };

    void materialize(int dim);
    Block& block(int dim, int degree);
    LieBlock& lie_block(int dim, int degree);
    SparseVec coords_raw(const TensorElement& e, const Block& b);
    TensorElement element_raw(const SparseVec& v, const Block& b);

    const Presentation* pres_;
    Field field_;
    int top_;
    long long max_words_;
    std::vector<std::pair<TensorElement, int>> relation_values_; // value, dim
    int materialized_ = -1;
    std::vector<std::vector<Word>> words_by_dim_;
    std::map<std::pair<int, int>, Block> blocks_;
    std::map<int, std::vector<int>> degrees_;
    std::map<std::pair<int, int>, LieBlock> lie_blocks_;
};

// The Lie ideal [seeds] inside the presented L0, saturated dimension by
// dimension (brackets with the degree-0 generators suffice for closure).
// Seeds must be homogeneous degree-0 Lie elements (NotLieElement otherwise).
class LieIdealSpan {
public:
    LieIdealSpan(Arena& arena, std::vector<TensorElement> seeds);

    const RowSpace& at(int dim);
    long long dim_at(int dim);
    std::vector<TensorElement> basis(int dim);
    HilbertSeries dims_series(int cutoff);

private:
    void ensure(int dim);

    Arena* arena_;
    std::vector<std::pair<TensorElement, int>> seeds_; // reduced, dim
    int done_ = 0;
    std::map<int, RowSpace> rows_;
    std::map<int, std::vector<TensorElement>> spanning_;
};

// Module dimensions of the presented degree-0 Lie algebra up to `cutoff`,
// materializing linear algebra only while it can still be nonzero: a
// connected graded Lie algebra generated in dimensions <= D vanishes above n
// whenever it vanishes on the window [n-D+1, n], so a full zero window seals
// every higher dimension at no cost.
HilbertSeries lie_dims_with_stabilization(const Presentation& deg0, Field f,
                                          int cutoff, long long max_words);

} // namespace lieloop
