// Independent brute-force oracles used by the tests.  Everything here stays
// deliberately separate from the library's linear algebra: dense elimination
// over mpq_class, words as plain strings, signs recomputed from scratch.
#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// rank of a dense matrix of rationals
inline int dense_rank(std::vector<std::vector<mpq_class>> m)
{
    int rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < m.size() && m[pivot][c] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const std::vector<mpq_class>& prow = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0)
                continue;
            mpq_class f = m[r][c] / prow[c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * prow[k];
        }
        ++rank;
        if (rank == static_cast<int>(m.size()))
            break;
    }
    return rank;
}

// free linear combinations of words (strings of letters), exact coefficients
using Elt = std::map<std::string, mpq_class>;

inline Elt add(const Elt& a, const Elt& b)
{
    Elt r = a;
    for (const auto& [w, c] : b) {
        r[w] += c;
        if (r[w] == 0)
            r.erase(w);
    }
    return r;
}

inline Elt scale(const Elt& a, const mpq_class& c)
{
    Elt r;
    if (c == 0)
        return r;
    for (const auto& [w, k] : a)
        r[w] = k * c;
    return r;
}

inline Elt concat(const Elt& a, const Elt& b)
{
    Elt r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            r[wa + wb] += ca * cb;
            if (r[wa + wb] == 0)
                r.erase(wa + wb);
        }
    return r;
}

// [a, b] with the Koszul sign taken from the given dimensions
inline Elt bracket(const Elt& a, int dim_a, const Elt& b, int dim_b)
{
    Elt ab = concat(a, b);
    Elt ba = concat(b, a);
    bool odd = (dim_a % 2) && (dim_b % 2);
    return add(ab, scale(ba, odd ? 1 : -1));
}

// dimension of the span of elements inside the space of words of one size
inline int span_dim(const std::vector<Elt>& elts)
{
    std::map<std::string, std::size_t> col;
    for (const auto& e : elts)
        for (const auto& [w, c] : e)
            if (!col.count(w)) {
                std::size_t next = col.size();
                col[w] = next;
            }
    std::vector<std::vector<mpq_class>> m;
    for (const auto& e : elts) {
        std::vector<mpq_class> row(col.size(), 0);
        for (const auto& [w, c] : e)
            row[col[w]] = c;
        m.push_back(std::move(row));
    }
    return dense_rank(std::move(m));
}

// dimensions, per total dimension 1..cutoff, of the free Lie algebra on
// letters with the given dimensions, computed by brute-force spanning of
// left-normed brackets inside the tensor algebra
inline std::vector<int> free_lie_dims(const std::vector<int>& letter_dims, int cutoff)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < letter_dims.size(); ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    // spanning elements per dimension
    std::vector<std::vector<std::pair<Elt, int>>> span(static_cast<std::size_t>(cutoff) + 1);
    for (std::size_t i = 0; i < letter_dims.size(); ++i)
        if (letter_dims[i] <= cutoff) {
            Elt e{{names[i], 1}};
            span[static_cast<std::size_t>(letter_dims[i])].push_back({e, letter_dims[i]});
        }
    for (int n = 1; n <= cutoff; ++n)
        for (std::size_t i = 0; i < letter_dims.size(); ++i) {
            int gd = letter_dims[i];
            if (gd >= n)
                continue;
            Elt g{{names[i], 1}};
            for (const auto& [e, ed] : span[static_cast<std::size_t>(n - gd)])
                span[static_cast<std::size_t>(n)].push_back({bracket(e, ed, g, gd), n});
        }
    std::vector<int> dims(static_cast<std::size_t>(cutoff) + 1, 0);
    for (int n = 1; n <= cutoff; ++n) {
        std::vector<Elt> elts;
        for (const auto& [e, ed] : span[static_cast<std::size_t>(n)])
            elts.push_back(e);
        dims[static_cast<std::size_t>(n)] = span_dim(elts);
    }
    return dims;
}

// number of words of total dimension n over letters of the given dimensions
inline long long word_count(const std::vector<int>& letter_dims, int n)
{
    std::vector<long long> cnt(static_cast<std::size_t>(n) + 1, 0);
    cnt[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int d : letter_dims)
            if (d <= m)
                cnt[static_cast<std::size_t>(m)] += cnt[static_cast<std::size_t>(m - d)];
    return cnt[static_cast<std::size_t>(n)];
}

} // namespace oracle
