#pragma once

#include "lieloop/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieloop {

using GenId = std::uint16_t;

struct GradedGenerator {
    std::string name;
    int dim = 0;    // >= 1, the algebra is connected
    int degree = 0; // 0 or 1
    int factor = -1; // index of the coproduct factor, -1 when no factors
};

class GenTable {
public:
    GenId add(GradedGenerator g);
    std::size_t size() const { return gens_.size(); }
    const GradedGenerator& operator[](GenId id) const { return gens_[id]; }
    const std::vector<GradedGenerator>& all() const { return gens_; }
    std::optional<GenId> find(const std::string& name) const;

    int min_dim() const;
    int max_dim() const;

private:
    std::vector<GradedGenerator> gens_;
    std::map<std::string, GenId> by_name_;
};

// A word in the tensor algebra: a sequence of generator ids.  The empty word
// is the unit.  Words are ordered length-lexicographically with letters
// compared by declaration order, which makes every stored element canonical.
using Word = std::vector<GenId>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

int word_dim(const Word& w, const GenTable& t);
int word_degree(const Word& w, const GenTable& t);
std::string word_str(const Word& w, const GenTable& t); // "x*y*x", "1" for the unit

// Finite scalar combination of words; the ambient computational arena TV.
// No zero coefficients are ever stored.
class TensorElement {
public:
    TensorElement() = default;

    static TensorElement zero() { return TensorElement(); }
    static TensorElement generator(GenId g, Field f);
    static TensorElement unit(Field f); // the empty word

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    void add_term(const Word& w, const Scalar& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(const Scalar& c) const;

    // Concatenation product in TV.
    TensorElement mul(const TensorElement& o) const;

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

    // Dimension when homogeneous; nullopt for 0 or mixed.
    std::optional<int> dim(const GenTable& t) const;
    bool homogeneous_dim(const GenTable& t) const;
    // Degree when homogeneous in degree.
    std::optional<int> degree(const GenTable& t) const;
    // Largest count of letters from `marked` over all words (filtration level);
    // -1 for the zero element.
    int filtration(const std::vector<bool>& marked) const;

    std::string str(const GenTable& t) const;

private:
    std::map<Word, Scalar, WordLess> terms_;
};

// Signed commutator [a, b] = ab - (-1)^{|a||b|} ba.  Both operands must be
// homogeneous in dimension (the Koszul sign only sees dimension, never the
// homological degree); the result dimension must not exceed the cutoff.
TensorElement commutator(const TensorElement& a, const TensorElement& b,
                         const GenTable& t, int cutoff);

// Abstract syntax for the paper's bracket expressions.  Brackets are
// left-normed: [a1,...,an] means [[...[a1,a2],...],an].
struct LieExpr {
    enum class Kind { Ident, Scale, Sum, Bracket };

    Kind kind = Kind::Ident;
    std::string name;           // Ident
    mpq_class coef;             // Scale
    std::vector<LieExpr> args;  // Scale (1), Sum (>=1), Bracket (>=2)

    static LieExpr ident(std::string n);
    static LieExpr scale(mpq_class c, LieExpr e);
    static LieExpr sum(std::vector<LieExpr> parts);
    static LieExpr bracket(std::vector<LieExpr> parts);

    std::string str() const;
};

// Evaluates a Lie expression in TV.  Unknown identifiers raise
// UnboundIdentifier; brackets whose result dimension exceeds the cutoff raise
// CutoffExceeded; brackets of dimensionally mixed operands raise
// InhomogeneousOperand.
TensorElement eval_expr(const LieExpr& e, const GenTable& t, Field f, int cutoff);

} // namespace lieloop
