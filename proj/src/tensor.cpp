#include "lieloop/tensor.hpp"

#include <algorithm>

namespace lieloop {

GenId GenTable::add(GradedGenerator g)
{
    if (g.dim < 1)
        throw error("InvalidGenerator", "generator " + g.name + " must have dimension >= 1");
    if (g.degree != 0 && g.degree != 1)
        throw error("InvalidGenerator", "generator " + g.name + " must have degree 0 or 1");
    if (by_name_.count(g.name))
        throw error("DuplicateGenerator", "generator " + g.name + " declared twice");
    GenId id = static_cast<GenId>(gens_.size());
    by_name_[g.name] = id;
    gens_.push_back(std::move(g));
    return id;
}

std::optional<GenId> GenTable::find(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

int GenTable::min_dim() const
{
    int m = 0;
    for (const auto& g : gens_)
        m = m == 0 ? g.dim : std::min(m, g.dim);
    return m;
}

int GenTable::max_dim() const
{
    int m = 0;
    for (const auto& g : gens_)
        m = std::max(m, g.dim);
    return m;
}

int word_dim(const Word& w, const GenTable& t)
{
    int d = 0;
    for (GenId g : w)
        d += t[g].dim;
    return d;
}

int word_degree(const Word& w, const GenTable& t)
{
    int d = 0;
    for (GenId g : w)
        d += t[g].degree;
    return d;
}

std::string word_str(const Word& w, const GenTable& t)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += "*";
        s += t[w[i]].name;
    }
    return s;
}

TensorElement TensorElement::generator(GenId g, Field f)
{
    TensorElement e;
    e.add_term(Word{g}, Scalar::one(f));
    return e;
}

TensorElement TensorElement::unit(Field f)
{
    TensorElement e;
    e.add_term(Word{}, Scalar::one(f));
    return e;
}

void TensorElement::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

TensorElement TensorElement::operator+(const TensorElement& o) const
{
    TensorElement r = *this;
    for (const auto& [w, c] : o.terms_)
        r.add_term(w, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const
{
    TensorElement r = *this;
    for (const auto& [w, c] : o.terms_)
        r.add_term(w, -c);
    return r;
}

TensorElement TensorElement::scaled(const Scalar& c) const
{
    TensorElement r;
    if (c.is_zero())
        return r;
    for (const auto& [w, k] : terms_)
        r.terms_.emplace(w, k * c);
    return r;
}

TensorElement TensorElement::mul(const TensorElement& o) const
{
    TensorElement r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

std::optional<int> TensorElement::dim(const GenTable& t) const
{
    std::optional<int> d;
    for (const auto& [w, c] : terms_) {
        int wd = word_dim(w, t);
        if (!d)
            d = wd;
        else if (*d != wd)
            return std::nullopt;
    }
    return d;
}

bool TensorElement::homogeneous_dim(const GenTable& t) const
{
    return terms_.empty() || dim(t).has_value();
}

std::optional<int> TensorElement::degree(const GenTable& t) const
{
    std::optional<int> d;
    for (const auto& [w, c] : terms_) {
        int wd = word_degree(w, t);
        if (!d)
            d = wd;
        else if (*d != wd)
            return std::nullopt;
    }
    return d;
}

int TensorElement::filtration(const std::vector<bool>& marked) const
{
    int f = -1;
    for (const auto& [w, c] : terms_) {
        int count = 0;
        for (GenId g : w)
            if (g < marked.size() && marked[g])
                ++count;
        f = std::max(f, count);
    }
    return f;
}

std::string TensorElement::str(const GenTable& t) const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coef = c.str();
        bool neg = !coef.empty() && coef[0] == '-';
        if (neg)
            coef = coef.substr(1);
        if (first) {
            if (neg)
                s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (w.empty()) {
            s += coef;
        } else {
            if (coef != "1")
                s += coef + " ";
            s += word_str(w, t);
        }
    }
    return s;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b,
                         const GenTable& t, int cutoff)
{
    if (a.is_zero() || b.is_zero())
        return TensorElement::zero();
    auto da = a.dim(t);
    auto db = b.dim(t);
    if (!da || !db)
        throw error("InhomogeneousOperand", "commutator of dimensionally mixed elements");
    if (*da + *db > cutoff)
        throw error("CutoffExceeded",
                    "bracket of dimension " + std::to_string(*da + *db) + " exceeds cutoff " + std::to_string(cutoff));
    TensorElement ab = a.mul(b);
    TensorElement ba = b.mul(a);
    bool odd = (*da % 2) && (*db % 2);
    return odd ? ab + ba : ab - ba;
}

LieExpr LieExpr::ident(std::string n)
{
    LieExpr e;
    e.kind = Kind::Ident;
    e.name = std::move(n);
    return e;
}

LieExpr LieExpr::scale(mpq_class c, LieExpr sub)
{
    LieExpr e;
    e.kind = Kind::Scale;
    e.coef = std::move(c);
    e.args.push_back(std::move(sub));
    return e;
}

LieExpr LieExpr::sum(std::vector<LieExpr> parts)
{
    LieExpr e;
    e.kind = Kind::Sum;
    e.args = std::move(parts);
    return e;
}

LieExpr LieExpr::bracket(std::vector<LieExpr> parts)
{
    if (parts.size() < 2)
        throw error("InvalidExpression", "bracket needs at least two entries");
    LieExpr e;
    e.kind = Kind::Bracket;
    e.args = std::move(parts);
    return e;
}

std::string LieExpr::str() const
{
    switch (kind) {
    case Kind::Ident:
        return name;
    case Kind::Scale: {
        std::string c = coef.get_str();
        std::string sub = args[0].str();
        if (coef == -1)
            return "-" + sub;
        return c + " " + sub;
    }
    case Kind::Sum: {
        std::string s;
        for (std::size_t i = 0; i < args.size(); ++i) {
            std::string part = args[i].str();
            if (i == 0) {
                s = part;
            } else if (!part.empty() && part[0] == '-') {
                s += " - " + part.substr(1);
            } else {
                s += " + " + part;
            }
        }
        return s;
    }
    case Kind::Bracket: {
        std::string s = "[";
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i)
                s += ",";
            s += args[i].str();
        }
        return s + "]";
    }
    }
    return "";
}

TensorElement eval_expr(const LieExpr& e, const GenTable& t, Field f, int cutoff)
{
    switch (e.kind) {
    case LieExpr::Kind::Ident: {
        auto id = t.find(e.name);
        if (!id)
            throw error("UnboundIdentifier", "unknown generator " + e.name);
        return TensorElement::generator(*id, f);
    }
    case LieExpr::Kind::Scale:
        return eval_expr(e.args[0], t, f, cutoff).scaled(Scalar::from_rational(e.coef, f));
    case LieExpr::Kind::Sum: {
        TensorElement acc;
        for (const auto& a : e.args)
            acc = acc + eval_expr(a, t, f, cutoff);
        return acc;
    }
    case LieExpr::Kind::Bracket: {
        TensorElement acc = eval_expr(e.args[0], t, f, cutoff);
        for (std::size_t i = 1; i < e.args.size(); ++i)
            acc = commutator(acc, eval_expr(e.args[i], t, f, cutoff), t, cutoff);
        return acc;
    }
    }
    return TensorElement::zero();
}

} // namespace lieloop
