#include "lieloop/linalg.hpp"

#include <algorithm>

namespace lieloop {

SparseVec sv_scaled(const SparseVec& a, const Scalar& c)
{
    SparseVec r;
    if (c.is_zero())
        return r;
    r.reserve(a.size());
    for (const auto& [i, v] : a)
        r.emplace_back(i, v * c);
    return r;
}

SparseVec sv_add_scaled(const SparseVec& a, const SparseVec& b, const Scalar& c)
{
    if (c.is_zero())
        return a;
    SparseVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar v = b[j].second * c;
            if (!v.is_zero())
                r.emplace_back(b[j].first, v);
            ++j;
        } else {
            Scalar v = a[i].second + b[j].second * c;
            if (!v.is_zero())
                r.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return r;
}

const Scalar* sv_at(const SparseVec& a, int col)
{
    auto it = std::lower_bound(a.begin(), a.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == a.end() || it->first != col)
        return nullptr;
    return &it->second;
}

bool RowSpace::has_pivot(int col) const
{
    return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

SparseVec RowSpace::reduce(SparseVec v) const
{
    // rows_ is sorted by pivot, and v stays sorted, so one sweep suffices
    for (std::size_t r = 0; r < rows_.size() && !v.empty(); ++r) {
        const Scalar* c = sv_at(v, pivots_[r]);
        if (c)
            v = sv_add_scaled(v, rows_[r], -*c);
    }
    return v;
}

bool RowSpace::insert(SparseVec v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    int pivot = v[0].first;
    v = sv_scaled(v, v[0].second.inverse());
    // keep the other rows fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar* c = sv_at(rows_[r], pivot);
        if (c)
            rows_[r] = sv_add_scaled(rows_[r], v, -*c);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

std::vector<SparseVec> kernel_combos(const std::vector<SparseVec>& vecs, Field f)
{
    struct AugRow {
        SparseVec img;
        SparseVec combo;
        int pivot = -1;
    };
    std::vector<AugRow> accepted;
    std::vector<SparseVec> kernels;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        SparseVec img = vecs[i];
        SparseVec combo{{static_cast<int>(i), Scalar::one(f)}};
        for (const auto& row : accepted) {
            const Scalar* c = sv_at(img, row.pivot);
            if (c) {
                Scalar k = -*c;
                img = sv_add_scaled(img, row.img, k);
                combo = sv_add_scaled(combo, row.combo, k);
            }
        }
        if (img.empty()) {
            kernels.push_back(std::move(combo));
        } else {
            Scalar inv = img[0].second.inverse();
            AugRow row{sv_scaled(img, inv), sv_scaled(combo, inv), img[0].first};
            accepted.push_back(std::move(row));
            std::sort(accepted.begin(), accepted.end(),
                      [](const AugRow& a, const AugRow& b) { return a.pivot < b.pivot; });
        }
    }
    return kernels;
}

} // namespace lieloop
