#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "torelli/isocomplex.hpp"

namespace torelli {

namespace {

using I64 = std::int64_t;
using Row = std::vector<I64>;

bool canonical_primitive(const Row& v)
{
    I64 g = 0;
    bool sign_seen = false;
    for (I64 x : v) {
        if (!sign_seen && x != 0) {
            if (x < 0)
                return false;
            sign_seen = true;
        }
        g = std::gcd(g, x);
    }
    return g == 1;
}

// Odometer over the box prod [-c_i, c_i].
template <class F>
void for_each_in_box(const std::vector<I64>& c, F&& f)
{
    std::size_t k = c.size();
    Row x(k);
    for (std::size_t i = 0; i < k; ++i)
        x[i] = -c[i];
    for (;;) {
        f(x);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (x[i] < c[i]) {
                ++x[i];
                break;
            }
            x[i] = -c[i];
            if (i == 0)
                return;
        }
        if (k == 0)
            return;
    }
}

std::vector<Row> slice_vertices(std::size_t g, long long bound,
                                const std::optional<std::vector<Vec>>& W)
{
    std::size_t n = 2 * g;
    std::vector<Row> out;
    if (!W) {
        for_each_in_box(std::vector<I64>(n, bound), [&](const Row& v) {
            if (canonical_primitive(v))
                out.push_back(v);
        });
    } else {
        for (const auto& w : *W)
            if (w.size() != n)
                throw Error("dimension-mismatch", "W basis vector " + to_string(w));
        IntMatrix L = left_inverse(*W);
        std::size_t k = W->size();
        std::vector<I64> box(k);
        double cells = 1;
        for (std::size_t i = 0; i < k; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += abs(L(j, i));
            s *= bound;
            if (s > kMaxSliceBound * 64)
                throw Error("slice-too-large", "W basis is too skewed for this bound");
            box[i] = static_cast<I64>(s);
            cells *= 2.0 * static_cast<double>(box[i]) + 1;
        }
        if (cells > 5e7)
            throw Error("slice-too-large", "coefficient box has too many cells");
        std::vector<Row> wi;
        for (const auto& w : *W) {
            if (!fits(w, kMaxSliceBound * 64))
                throw Error("slice-too-large", "W basis entries too large");
            wi.push_back(to_i64(w));
        }
        Row v(n);
        for_each_in_box(box, [&](const Row& c) {
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t i = 0; i < k; ++i)
                if (c[i] != 0)
                    for (std::size_t j = 0; j < n; ++j)
                        v[j] += c[i] * wi[i][j];
            for (I64 x : v)
                if (x > bound || x < -bound)
                    return;
            if (canonical_primitive(v))
                out.push_back(v);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> find_row(const std::vector<Row>& vs, const Row& r)
{
    auto it = std::lower_bound(vs.begin(), vs.end(), r);
    if (it == vs.end() || *it != r)
        return std::nullopt;
    return static_cast<std::size_t>(it - vs.begin());
}

Row canonical_row(Row v)
{
    I64 g = 0;
    for (I64 x : v)
        g = std::gcd(g, x);
    if (g == 0)
        return v;
    for (I64 x : v)
        if (x != 0) {
            if (x < 0)
                g = -g;
            break;
        }
    for (auto& x : v)
        x /= g;
    return v;
}

ComplexSlice build(std::size_t g, long long bound, const std::optional<std::vector<Vec>>& W,
                   bool parallel)
{
    if (bound < 1)
        throw Error("bad-bound", "bound must be at least 1");
    if (bound > kMaxSliceBound)
        throw Error("bad-bound", "bound exceeds " + std::to_string(kMaxSliceBound));
    std::size_t n = 2 * g;
    std::vector<Row> vs = slice_vertices(g, bound, W);
    std::size_t nv = vs.size();

    // Upper adjacency lists; each i owns its slot, so the loop is race-free.
    std::vector<std::vector<std::size_t>> up(nv);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            if (pairing_i64(vs[i].data(), vs[j].data(), n) == 0 &&
                summand2_i64(vs[i].data(), vs[j].data(), n))
                up[i].push_back(j);

    std::vector<std::vector<std::array<std::size_t, 3>>> tri(nv);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::size_t i = 0; i < nv; ++i) {
        const auto& ni = up[i];
        for (std::size_t a = 0; a < ni.size(); ++a)
            for (std::size_t b = a + 1; b < ni.size(); ++b) {
                std::size_t j = ni[a], k = ni[b];
                if (!std::binary_search(up[j].begin(), up[j].end(), k))
                    continue;
                if (summand3_i64(vs[i].data(), vs[j].data(), vs[k].data(), n))
                    tri[i].push_back({i, j, k});
            }
    }

    ComplexSlice s;
    s.g = g;
    s.bound = bound;
    s.W = W;
    s.vertices.reserve(nv);
    for (const auto& v : vs) {
        Vec x(v.size());
        for (std::size_t t = 0; t < v.size(); ++t)
            x[t] = v[t];
        s.vertices.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j : up[i])
            s.edges.push_back({i, j});
    for (auto& t : tri)
        s.triangles.insert(s.triangles.end(), t.begin(), t.end());

    std::set<std::array<std::size_t, 3>> seen;
    Row m(n);
    for (const auto& e : s.edges)
        for (int sign : {1, -1}) {
            for (std::size_t t = 0; t < n; ++t)
                m[t] = vs[e[0]][t] + sign * vs[e[1]][t];
            auto idx = find_row(vs, canonical_row(m));
            if (!idx)
                continue;
            std::array<std::size_t, 3> key{e[0], e[1], *idx};
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second)
                s.aug_triangles.push_back({e[0], *idx, e[1]});
        }
    return s;
}

}  // namespace

ComplexSlice enumerate_slice(std::size_t g, long long bound, const std::optional<std::vector<Vec>>& W)
{
    return build(g, bound, W, true);
}

ComplexSlice enumerate_slice_serial(std::size_t g, long long bound,
                                    const std::optional<std::vector<Vec>>& W)
{
    return build(g, bound, W, false);
}

}  // namespace torelli
