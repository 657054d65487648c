#include "lieloop/dg.hpp"

#include <algorithm>

namespace lieloop {

Differential::Differential(Arena& arena, const Presentation& p) : arena_(&arena)
{
    for (GenId g = 0; g < p.gens.size(); ++g)
        images_[g] = TensorElement::zero();
    for (const auto& [g, e] : p.differentials)
        images_[g] = arena.reduce(eval_expr(e, p.gens, arena.field(), arena.top()));
}

Differential::Differential(Arena& arena, std::map<GenId, TensorElement> images)
    : arena_(&arena), images_(std::move(images))
{
    for (GenId g = 0; g < arena.gens().size(); ++g)
        if (!images_.count(g))
            images_[g] = TensorElement::zero();
    for (auto& [g, v] : images_)
        v = arena.reduce(v);
}

TensorElement Differential::apply_word(const Word& w) const
{
    Field f = arena_->field();
    TensorElement acc;
    int sign_dim = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const TensorElement& dg = images_.at(w[i]);
        if (!dg.is_zero()) {
            TensorElement prefix = TensorElement::unit(f);
            for (std::size_t j = 0; j < i; ++j)
                prefix = prefix.mul(TensorElement::generator(w[j], f));
            TensorElement suffix = TensorElement::unit(f);
            for (std::size_t j = i + 1; j < w.size(); ++j)
                suffix = suffix.mul(TensorElement::generator(w[j], f));
            TensorElement term = prefix.mul(dg).mul(suffix);
            if (sign_dim % 2)
                term = term.scaled(-Scalar::one(f));
            acc = acc + term;
        }
        sign_dim += arena_->gens()[w[i]].dim;
    }
    return acc;
}

TensorElement Differential::apply(const TensorElement& e) const
{
    TensorElement acc;
    for (const auto& [w, c] : e.terms())
        acc = acc + apply_word(w).scaled(c);
    return acc.is_zero() ? acc : arena_->reduce(acc);
}

std::optional<Differential::DSquaredFailure> Differential::check_d_squared() const
{
    for (GenId g = 0; g < arena_->gens().size(); ++g) {
        const TensorElement& dg = images_.at(g);
        if (dg.is_zero())
            continue;
        TensorElement dd = apply(dg);
        if (!dd.is_zero())
            return DSquaredFailure{g, dd};
    }
    return std::nullopt;
}

void Differential::require_d_squared_zero() const
{
    if (auto fail = check_d_squared())
        throw error("DSquaredNonzero", "d^2 != 0 at generator " + arena_->gens()[fail->gen].name +
                                           ": d(d(" + arena_->gens()[fail->gen].name +
                                           ")) = " + fail->value.str(arena_->gens()));
}

const std::vector<SparseVec>& Differential::matrix(int dim, int degree)
{
    auto key = std::make_pair(dim, degree);
    auto it = matrices_.find(key);
    if (it != matrices_.end())
        return it->second;
    std::vector<SparseVec>& rows = matrices_[key];
    const std::vector<Word>& ws = arena_->words(dim, degree);
    for (int qi : arena_->quotient_words(dim, degree)) {
        TensorElement e;
        e.add_term(ws[static_cast<std::size_t>(qi)], Scalar::one(arena_->field()));
        TensorElement img = apply(e);
        rows.push_back(img.is_zero() ? SparseVec{} : arena_->coords(img, dim - 1, degree - 1));
    }
    RowSpace span;
    long long rank = 0;
    for (const SparseVec& r : rows)
        if (span.insert(r))
            ++rank;
    ranks_[key] = rank;
    return rows;
}

long long Differential::rank(int dim, int degree)
{
    matrix(dim, degree);
    return ranks_.at({dim, degree});
}

RowSpace lie_boundaries_deg1(Arena& arena, Differential& d, int dim)
{
    RowSpace b;
    if (dim + 1 <= arena.top())
        for (const TensorElement& e : arena.lie_basis(dim + 1, 2)) {
            TensorElement v = d.apply(e);
            if (!v.is_zero())
                b.insert(arena.coords(v, dim, 1));
        }
    return b;
}

LieHomology lie_homology(Arena& arena, Differential& d, int cutoff)
{
    LieHomology h;
    h.cutoff = cutoff;
    h.h0.assign(static_cast<std::size_t>(cutoff) + 1, 0);
    h.h1.assign(static_cast<std::size_t>(cutoff) + 1, 0);
    h.z1.assign(static_cast<std::size_t>(cutoff) + 1, 0);
    h.b1.assign(static_cast<std::size_t>(cutoff) + 1, 0);
    h.b0.assign(static_cast<std::size_t>(cutoff) + 1, 0);
    h.reps0.resize(static_cast<std::size_t>(cutoff) + 1);
    h.reps1.resize(static_cast<std::size_t>(cutoff) + 1);

    for (int n = 1; n <= cutoff; ++n) {
        // degree 0: every element is a cycle; boundaries come from degree 1
        RowSpace b0;
        if (n + 1 <= arena.top())
            for (const TensorElement& e : arena.lie_basis(n + 1, 1)) {
                TensorElement v = d.apply(e);
                if (!v.is_zero())
                    b0.insert(arena.coords(v, n, 0));
            }
        h.b0[static_cast<std::size_t>(n)] = b0.rank();
        RowSpace cover0 = b0;
        for (const SparseVec& row : arena.lie_space(n, 0).rows()) {
            SparseVec residue = cover0.reduce(row);
            if (!residue.empty()) {
                cover0.insert(residue);
                h.reps0[static_cast<std::size_t>(n)].push_back(arena.element_of(residue, n, 0));
            }
        }
        h.h0[static_cast<std::size_t>(n)] =
            static_cast<long long>(h.reps0[static_cast<std::size_t>(n)].size());

        // degree 1: cycles of d: lie(n,1) -> lie(n-1,0), boundaries from degree 2
        std::vector<TensorElement> basis1 = arena.lie_basis(n, 1);
        std::vector<SparseVec> images;
        images.reserve(basis1.size());
        for (const TensorElement& e : basis1) {
            TensorElement v = d.apply(e);
            images.push_back(v.is_zero() ? SparseVec{} : arena.coords(v, n - 1, 0));
        }
        std::vector<SparseVec> combos = kernel_combos(images, arena.field());
        h.z1[static_cast<std::size_t>(n)] = static_cast<long long>(combos.size());

        RowSpace b1 = lie_boundaries_deg1(arena, d, n);
        h.b1[static_cast<std::size_t>(n)] = b1.rank();
        RowSpace cover1 = b1;
        for (const SparseVec& combo : combos) {
            TensorElement z;
            for (const auto& [i, c] : combo)
                z = z + basis1[static_cast<std::size_t>(i)].scaled(c);
            SparseVec residue = cover1.reduce(arena.coords(z, n, 1));
            if (!residue.empty()) {
                cover1.insert(residue);
                h.reps1[static_cast<std::size_t>(n)].push_back(arena.element_of(residue, n, 1));
            }
        }
        h.h1[static_cast<std::size_t>(n)] =
            static_cast<long long>(h.reps1[static_cast<std::size_t>(n)].size());
    }
    return h;
}

HilbertSeries LieHomology::h0_series() const
{
    HilbertSeries s(cutoff);
    for (int n = 0; n <= cutoff; ++n)
        s.set(n, h0[static_cast<std::size_t>(n)]);
    return s;
}

HilbertSeries LieHomology::h1_series() const
{
    HilbertSeries s(cutoff);
    for (int n = 0; n <= cutoff; ++n)
        s.set(n, h1[static_cast<std::size_t>(n)]);
    return s;
}

std::vector<std::vector<long long>> full_homology_dims(Arena& arena, Differential& d, int cutoff)
{
    std::vector<std::vector<long long>> h(static_cast<std::size_t>(cutoff) + 1);
    for (int n = 0; n <= cutoff; ++n) {
        int max_deg = arena.degrees_at(n).empty() ? 0 : arena.degrees_at(n).back();
        if (n + 1 <= arena.top() && !arena.degrees_at(n + 1).empty())
            max_deg = std::max(max_deg, arena.degrees_at(n + 1).back() - 1);
        h[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(max_deg) + 1, 0);
        for (int k = 0; k <= max_deg; ++k) {
            long long dim = arena.quotient_dim(n, k);
            long long rank_out = k > 0 && n > 0 ? d.rank(n, k) : 0;
            long long rank_in = n + 1 <= arena.top() ? d.rank(n + 1, k + 1) : 0;
            h[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = dim - rank_out - rank_in;
        }
    }
    return h;
}

HilbertSeries full_homology_series(Arena& arena, Differential& d, int cutoff)
{
    auto table = full_homology_dims(arena, d, cutoff);
    HilbertSeries s(cutoff);
    for (int n = 0; n <= cutoff; ++n) {
        long long acc = 0;
        for (long long v : table[static_cast<std::size_t>(n)])
            acc += v;
        s.set(n, acc);
    }
    return s;
}

} // namespace lieloop
