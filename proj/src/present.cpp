#include "lieloop/present.hpp"

#include <algorithm>
#include <functional>

namespace lieloop {

int Presentation::targets_factor() const
{
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].targets)
            return static_cast<int>(i);
    return -1;
}

std::vector<GenId> Presentation::degree0_gens() const
{
    std::vector<GenId> v;
    for (GenId g = 0; g < gens.size(); ++g)
        if (gens[g].degree == 0)
            v.push_back(g);
    return v;
}

std::vector<GenId> Presentation::degree1_gens() const
{
    std::vector<GenId> v;
    for (GenId g = 0; g < gens.size(); ++g)
        if (gens[g].degree == 1)
            v.push_back(g);
    return v;
}

const LieExpr* Presentation::differential_of(GenId g) const
{
    for (const auto& [id, e] : differentials)
        if (id == g)
            return &e;
    return nullptr;
}

namespace {

void collect_coefficients(const LieExpr& e, std::vector<mpq_class>& out)
{
    if (e.kind == LieExpr::Kind::Scale)
        out.push_back(e.coef);
    for (const auto& a : e.args)
        collect_coefficients(a, out);
}

void collect_idents(const LieExpr& e, std::vector<std::string>& out)
{
    if (e.kind == LieExpr::Kind::Ident)
        out.push_back(e.name);
    for (const auto& a : e.args)
        collect_idents(a, out);
}

} // namespace

void Presentation::validate() const
{
    if (cutoff < 0)
        throw error("InvalidCutoff", "cutoff must be >= 0");
    Field q{0};
    int tf = targets_factor();
    if (has_factors() && tf == -1)
        throw error("FactorViolation", "factors given but none is flagged 'targets'");

    auto factor_of_ident = [&](const std::string& name) {
        auto id = gens.find(name);
        if (!id)
            throw error("UnboundIdentifier", "unknown generator " + name);
        return gens[*id].factor;
    };
    auto check_single_factor = [&](const LieExpr& e, const char* what) {
        if (!has_factors())
            return;
        std::vector<std::string> ids;
        collect_idents(e, ids);
        int f = -2;
        for (const auto& n : ids) {
            int fn = factor_of_ident(n);
            if (f == -2)
                f = fn;
            else if (f != fn)
                throw error("FactorViolation",
                            std::string(what) + " " + e.str() + " mixes generators of different factors");
        }
    };
    auto check_denominators = [&](const LieExpr& e) {
        if (ring.kind != RingSpec::Kind::Localization)
            return;
        std::vector<mpq_class> coefs;
        collect_coefficients(e, coefs);
        for (const auto& c : coefs)
            if (!ring.denominator_allowed(c.get_den()))
                throw error("NonInvertedDenominator",
                            "coefficient " + c.get_str() + " has a denominator not inverted in " + ring.name());
    };

    for (GenId g = 0; g < gens.size(); ++g) {
        const auto& gen = gens[g];
        if (has_factors() && (gen.factor < 0 || gen.factor >= static_cast<int>(factors.size())))
            throw error("FactorViolation", "generator " + gen.name + " belongs to no factor");
        if (has_factors() && gen.degree == 1 && gen.factor != tf)
            throw error("FactorViolation",
                        "degree-1 generator " + gen.name + " must live in the 'targets' factor");
    }

    for (const auto& r : relations) {
        check_denominators(r);
        check_single_factor(r, "relation");
        std::vector<std::string> ids;
        collect_idents(r, ids);
        for (const auto& n : ids) {
            auto id = gens.find(n);
            if (!id)
                throw error("UnboundIdentifier", "unknown generator " + n + " in relation " + r.str());
            if (gens[*id].degree != 0)
                throw error("DegreeViolation",
                            "relation " + r.str() + " mentions degree-1 generator " + n);
        }
        TensorElement v = eval_expr(r, gens, q, cutoff + 1);
        if (!v.homogeneous_dim(gens))
            throw error("InhomogeneousRelation", "relation " + r.str() + " is not homogeneous");
    }

    std::vector<bool> seen(gens.size(), false);
    for (const auto& [g, e] : differentials) {
        if (gens[g].degree != 1)
            throw error("DegreeViolation", "d defined on degree-0 generator " + gens[g].name);
        if (seen[g])
            throw error("DuplicateDifferential", "d " + gens[g].name + " given twice");
        seen[g] = true;
        check_denominators(e);
        if (has_factors())
            check_single_factor(e, "differential image");
        std::vector<std::string> ids;
        collect_idents(e, ids);
        for (const auto& n : ids) {
            if (!gens.find(n))
                throw error("UnboundIdentifier", "unknown generator " + n + " in d " + gens[g].name);
            if (has_factors() && factor_of_ident(n) != tf)
                throw error("FactorViolation",
                            "d " + gens[g].name + " has its image outside the 'targets' factor");
        }
        TensorElement v = eval_expr(e, gens, q, cutoff + 1);
        if (!v.is_zero()) {
            auto d = v.dim(gens);
            if (!d)
                throw error("InhomogeneousDifferential", "d " + gens[g].name + " is not homogeneous");
            if (*d != gens[g].dim - 1)
                throw error("DimensionMismatch",
                            "d " + gens[g].name + " has dimension " + std::to_string(*d) + ", expected " +
                                std::to_string(gens[g].dim - 1));
        }
    }
}

Presentation Presentation::factor_slice(int factor, bool with_cells) const
{
    Presentation s;
    s.ring = ring;
    s.cutoff = cutoff;
    std::vector<bool> keep(gens.size(), false);
    for (GenId g = 0; g < gens.size(); ++g) {
        const auto& gen = gens[g];
        bool take = gen.degree == 0 ? gen.factor == factor : with_cells;
        if (!take)
            continue;
        keep[g] = true;
        GradedGenerator copy = gen;
        copy.factor = -1;
        s.gens.add(copy);
    }
    auto mentions_only_kept = [&](const LieExpr& e) {
        std::vector<std::string> ids;
        collect_idents(e, ids);
        for (const auto& n : ids) {
            auto id = gens.find(n);
            if (!id || !keep[*id])
                return false;
        }
        return true;
    };
    for (const auto& r : relations)
        if (mentions_only_kept(r))
            s.relations.push_back(r);
    for (const auto& [g, e] : differentials)
        if (keep[g] && mentions_only_kept(e))
            s.differentials.emplace_back(*s.gens.find(gens[g].name), e);
    return s;
}

HilbertSeries Presentation::v1_series() const
{
    HilbertSeries v(cutoff);
    for (GenId g = 0; g < gens.size(); ++g)
        if (gens[g].degree == 1 && gens[g].dim <= cutoff)
            v.set(gens[g].dim, v.at(gens[g].dim) + 1);
    return v;
}

bool factor_relation_free(const Presentation& p, int factor)
{
    Field q{0};
    for (const auto& r : p.relations) {
        TensorElement v = eval_expr(r, p.gens, q, p.cutoff + 2);
        if (v.is_zero())
            continue;
        if (factor == -1)
            return false;
        for (const auto& [w, c] : v.terms())
            for (GenId g : w)
                if (p.gens[g].factor == factor)
                    return false;
    }
    return true;
}

Arena::Arena(const Presentation& p, Field f, int top, long long max_words)
    : pres_(&p), field_(f), top_(top), max_words_(max_words)
{
    for (const auto& r : p.relations) {
        TensorElement v = eval_expr(r, p.gens, f, top_ + 1);
        if (v.is_zero())
            continue;
        int dim = *v.dim(p.gens);
        if (dim <= top_)
            relation_values_.emplace_back(std::move(v), dim);
    }
    words_by_dim_.resize(static_cast<std::size_t>(top_) + 1);
    words_by_dim_[0].push_back(Word{});
    degrees_[0] = {0};
    Block& b = blocks_[{0, 0}];
    b.words.push_back(Word{});
    b.index[Word{}] = 0;
    b.quotient.push_back(0);
    b.quotient_pos[0] = 0;
    materialized_ = 0;
}

unsigned long long Arena::count_words(int dim) const
{
    constexpr unsigned long long cap = 1ull << 62;
    std::vector<unsigned long long> cnt(static_cast<std::size_t>(dim) + 1, 0);
    cnt[0] = 1;
    for (int n = 1; n <= dim; ++n) {
        unsigned long long acc = 0;
        for (const auto& g : pres_->gens.all())
            if (g.dim <= n) {
                unsigned long long add = cnt[static_cast<std::size_t>(n - g.dim)];
                acc = acc > cap - add ? cap : acc + add;
            }
        cnt[static_cast<std::size_t>(n)] = acc;
    }
    return cnt[static_cast<std::size_t>(dim)];
}

void Arena::materialize(int dim)
{
    if (dim > top_)
        throw error("CutoffExceeded",
                    "dimension " + std::to_string(dim) + " beyond materialization bound " + std::to_string(top_));
    for (int n = materialized_ + 1; n <= dim; ++n) {
        if (count_words(n) > static_cast<unsigned long long>(max_words_))
            throw error("WordBlowUp",
                        "word basis at dimension " + std::to_string(n) + " exceeds " +
                            std::to_string(max_words_) + " words; raise --max-words to override");
        // words of dimension n, by first letter
        std::vector<Word>& out = words_by_dim_[static_cast<std::size_t>(n)];
        for (GenId g = 0; g < pres_->gens.size(); ++g) {
            int gd = pres_->gens[g].dim;
            if (gd > n)
                continue;
            for (const Word& w : words_by_dim_[static_cast<std::size_t>(n - gd)]) {
                Word nw;
                nw.reserve(w.size() + 1);
                nw.push_back(g);
                nw.insert(nw.end(), w.begin(), w.end());
                out.push_back(std::move(nw));
            }
        }
        std::sort(out.begin(), out.end(), WordLess{});

        std::vector<int> degs;
        for (const Word& w : out) {
            int k = word_degree(w, pres_->gens);
            Block& b = blocks_[{n, k}];
            b.index[w] = static_cast<int>(b.words.size());
            b.words.push_back(w);
            if (degs.empty() || std::find(degs.begin(), degs.end(), k) == degs.end())
                degs.push_back(k);
        }
        std::sort(degs.begin(), degs.end());
        degrees_[n] = degs;

        // two-sided ideal per degree block, generated upward:
        //   I(n,k) = rels(n) [k=0]  +  sum_g g*I(n-|g|, k-deg g) + I(n-|g|, k-deg g)*g
        for (int k : degs) {
            Block& b = blocks_[{n, k}];
            if (k == 0)
                for (const auto& [v, vd] : relation_values_)
                    if (vd == n)
                        b.ideal.insert(coords_raw(v, b));
            for (GenId g = 0; g < pres_->gens.size(); ++g) {
                int gd = pres_->gens[g].dim;
                int gk = pres_->gens[g].degree;
                if (gd > n || gk > k)
                    continue;
                auto lower = blocks_.find({n - gd, k - gk});
                if (lower == blocks_.end())
                    continue;
                TensorElement ge = gen_element(g);
                for (const SparseVec& row : lower->second.ideal.rows()) {
                    TensorElement e = element_raw(row, lower->second);
                    b.ideal.insert(coords_raw(ge.mul(e), b));
                    b.ideal.insert(coords_raw(e.mul(ge), b));
                }
            }
            for (int i = 0; i < static_cast<int>(b.words.size()); ++i)
                if (!b.ideal.has_pivot(i)) {
                    b.quotient_pos[i] = static_cast<int>(b.quotient.size());
                    b.quotient.push_back(i);
                }
        }
        materialized_ = n;
    }
}

// coordinates in the raw word basis of a block (not the quotient basis)
SparseVec Arena::coords_raw(const TensorElement& e, const Block& b)
{
    SparseVec v;
    for (const auto& [w, c] : e.terms()) {
        auto it = b.index.find(w);
        if (it == b.index.end())
            throw error("Internal", "word outside block in coords_raw");
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    return v;
}

TensorElement Arena::element_raw(const SparseVec& v, const Block& b)
{
    TensorElement e;
    for (const auto& [i, c] : v)
        e.add_term(b.words[static_cast<std::size_t>(i)], c);
    return e;
}

Arena::Block& Arena::block(int dim, int degree)
{
    materialize(dim);
    return blocks_[{dim, degree}]; // creates an empty block when absent
}

const std::vector<Word>& Arena::words(int dim, int degree) { return block(dim, degree).words; }

const std::vector<int>& Arena::degrees_at(int dim)
{
    materialize(dim);
    return degrees_[dim];
}

const RowSpace& Arena::ideal(int dim, int degree) { return block(dim, degree).ideal; }

long long Arena::ideal_dim(int dim, int degree) { return block(dim, degree).ideal.rank(); }

const std::vector<int>& Arena::quotient_words(int dim, int degree)
{
    return block(dim, degree).quotient;
}

long long Arena::quotient_dim(int dim, int degree)
{
    return static_cast<long long>(block(dim, degree).quotient.size());
}

long long Arena::quotient_dim(int dim)
{
    materialize(dim);
    long long acc = 0;
    for (int k : degrees_[dim])
        acc += quotient_dim(dim, k);
    return acc;
}

HilbertSeries Arena::ul0_series(int cutoff)
{
    HilbertSeries s(cutoff);
    for (int n = 0; n <= cutoff; ++n)
        s.set(n, quotient_dim(n, 0));
    return s;
}

TensorElement Arena::reduce(const TensorElement& e)
{
    if (e.is_zero())
        return e;
    auto d = e.dim(pres_->gens);
    if (!d)
        throw error("InhomogeneousOperand", "reduce needs a dimension-homogeneous element");
    materialize(*d);
    // split terms by degree block, reduce each part
    std::map<int, TensorElement> parts;
    for (const auto& [w, c] : e.terms())
        parts[word_degree(w, pres_->gens)].add_term(w, c);
    TensorElement out;
    for (auto& [k, part] : parts) {
        Block& b = blocks_[{*d, k}];
        SparseVec v = b.ideal.reduce(coords_raw(part, b));
        out = out + element_raw(v, b);
    }
    return out;
}

SparseVec Arena::coords(const TensorElement& reduced, int dim, int degree)
{
    Block& b = block(dim, degree);
    SparseVec v;
    for (const auto& [w, c] : reduced.terms()) {
        auto it = b.index.find(w);
        if (it == b.index.end())
            throw error("Internal", "word outside block in coords");
        auto qp = b.quotient_pos.find(it->second);
        if (qp == b.quotient_pos.end())
            throw error("Internal", "unreduced element in coords");
        v.emplace_back(qp->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    return v;
}

TensorElement Arena::element_of(const SparseVec& v, int dim, int degree)
{
    Block& b = block(dim, degree);
    TensorElement e;
    for (const auto& [i, c] : v)
        e.add_term(b.words[static_cast<std::size_t>(b.quotient[static_cast<std::size_t>(i)])], c);
    return e;
}

int Arena::block_offset(int dim, int degree)
{
    materialize(dim);
    int off = 0;
    for (int k : degrees_[dim]) {
        if (k == degree)
            return off;
        off += static_cast<int>(quotient_dim(dim, k));
    }
    return off;
}

SparseVec Arena::mixed_coords(const TensorElement& reduced, int dim)
{
    materialize(dim);
    std::map<int, TensorElement> parts;
    for (const auto& [w, c] : reduced.terms())
        parts[word_degree(w, pres_->gens)].add_term(w, c);
    SparseVec out;
    for (auto& [k, part] : parts) {
        int off = block_offset(dim, k);
        for (auto& [i, c] : coords(part, dim, k))
            out.emplace_back(off + i, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

TensorElement Arena::element_of_mixed(const SparseVec& v, int dim)
{
    materialize(dim);
    TensorElement e;
    for (const auto& [col, c] : v) {
        int off = 0;
        for (int k : degrees_[dim]) {
            int len = static_cast<int>(quotient_dim(dim, k));
            if (col < off + len) {
                e = e + element_of({{col - off, c}}, dim, k);
                break;
            }
            off += len;
        }
    }
    return e;
}

Arena::LieBlock& Arena::lie_block(int dim, int degree)
{
    auto key = std::make_pair(dim, degree);
    auto it = lie_blocks_.find(key);
    if (it != lie_blocks_.end())
        return it->second;
    materialize(dim);
    LieBlock& lb = lie_blocks_[key];
    if (dim == 0 || degree < 0)
        return lb;
    // single generators of this bidegree
    for (GenId g = 0; g < pres_->gens.size(); ++g)
        if (pres_->gens[g].dim == dim && pres_->gens[g].degree == degree) {
            TensorElement v = reduce(gen_element(g));
            if (!v.is_zero() && lb.space.insert(coords(v, dim, degree)))
                lb.spanning.push_back(v);
        }
    // left-normed brackets [w, g] with w of bidegree (dim - |g|, degree - deg g)
    for (GenId g = 0; g < pres_->gens.size(); ++g) {
        int gd = pres_->gens[g].dim;
        int gk = pres_->gens[g].degree;
        if (gd >= dim || gk > degree)
            continue;
        TensorElement ge = gen_element(g);
        const std::vector<TensorElement>& lower = lie_spanning(dim - gd, degree - gk);
        for (const TensorElement& e : lower) {
            TensorElement v = reduce(commutator(e, ge, pres_->gens, top_));
            if (!v.is_zero() && lb.space.insert(coords(v, dim, degree)))
                lb.spanning.push_back(v);
        }
    }
    return lb;
}

const RowSpace& Arena::lie_space(int dim, int degree) { return lie_block(dim, degree).space; }

std::vector<TensorElement> Arena::lie_basis(int dim, int degree)
{
    LieBlock& lb = lie_block(dim, degree);
    std::vector<TensorElement> basis;
    basis.reserve(lb.space.rows().size());
    for (const SparseVec& row : lb.space.rows())
        basis.push_back(element_of(row, dim, degree));
    return basis;
}

long long Arena::lie_dim(int dim, int degree) { return lie_block(dim, degree).space.rank(); }

const std::vector<TensorElement>& Arena::lie_spanning(int dim, int degree)
{
    return lie_block(dim, degree).spanning;
}

TensorElement Arena::bracket(const TensorElement& a, const TensorElement& b)
{
    return reduce(commutator(a, b, pres_->gens, top_));
}

LieIdealSpan::LieIdealSpan(Arena& arena, std::vector<TensorElement> seeds) : arena_(&arena)
{
    for (auto& s : seeds) {
        if (s.is_zero())
            continue;
        TensorElement r = arena.reduce(s);
        if (r.is_zero())
            continue;
        auto d = r.dim(arena.gens());
        auto k = r.degree(arena.gens());
        if (!d || !k || *k != 0)
            throw error("NotLieElement", "seed " + s.str(arena.gens()) + " is not homogeneous of degree 0");
        if (!arena.lie_space(*d, 0).contains(arena.coords(r, *d, 0)))
            throw error("NotLieElement", "seed " + s.str(arena.gens()) + " is not in the Lie part");
        seeds_.emplace_back(std::move(r), *d);
    }
}

void LieIdealSpan::ensure(int dim)
{
    for (int n = done_ + 1; n <= dim; ++n) {
        RowSpace& rows = rows_[n];
        std::vector<TensorElement>& spanning = spanning_[n];
        for (const auto& [s, d] : seeds_)
            if (d == n && rows.insert(arena_->coords(s, n, 0)))
                spanning.push_back(s);
        for (GenId g = 0; g < arena_->gens().size(); ++g) {
            const auto& gen = arena_->gens()[g];
            if (gen.degree != 0 || gen.dim >= n)
                continue;
            TensorElement ge = arena_->gen_element(g);
            for (const TensorElement& e : spanning_[n - gen.dim]) {
                TensorElement v = arena_->bracket(e, ge);
                if (!v.is_zero() && rows.insert(arena_->coords(v, n, 0)))
                    spanning.push_back(v);
            }
        }
        done_ = n;
    }
}

const RowSpace& LieIdealSpan::at(int dim)
{
    ensure(dim);
    return rows_[dim];
}

long long LieIdealSpan::dim_at(int dim) { return at(dim).rank(); }

std::vector<TensorElement> LieIdealSpan::basis(int dim)
{
    ensure(dim);
    std::vector<TensorElement> out;
    for (const SparseVec& row : rows_[dim].rows())
        out.push_back(arena_->element_of(row, dim, 0));
    return out;
}

HilbertSeries LieIdealSpan::dims_series(int cutoff)
{
    HilbertSeries s(cutoff);
    for (int n = 1; n <= cutoff; ++n)
        s.set(n, dim_at(n));
    return s;
}

HilbertSeries lie_dims_with_stabilization(const Presentation& deg0, Field f,
                                          int cutoff, long long max_words)
{
    HilbertSeries dims(cutoff);
    int window = 0;
    for (const auto& g : deg0.gens.all())
        window = std::max(window, g.dim);
    if (window == 0)
        return dims;
    Arena arena(deg0, f, cutoff, max_words);
    int zero_run = 0;
    for (int n = 1; n <= cutoff; ++n) {
        if (zero_run >= window)
            break; // generated in dims <= window: zero stays zero
        long long d = arena.lie_dim(n, 0);
        dims.set(n, d);
        zero_run = d == 0 ? zero_run + 1 : 0;
    }
    return dims;
}

} // namespace lieloop
