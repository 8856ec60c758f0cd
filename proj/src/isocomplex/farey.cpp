#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "torelli/isocomplex.hpp"

namespace torelli {

FareyVertex farey_vertex(const Int& a, const Int& b)
{
    FareyVertex v{a, b};
    if (is_zero(v) || content(v) != 1)
        throw Error("not-coprime", to_string(v));
    return canonical_line(v);
}

bool farey_adjacent(const FareyVertex& u, const FareyVertex& v)
{
    if (u.size() != 2 || v.size() != 2)
        throw Error("dimension-mismatch", "Farey vertices are pairs");
    return abs(u[0] * v[1] - u[1] * v[0]) == 1;
}

bool farey_triangle(const FareyVertex& u, const FareyVertex& v, const FareyVertex& w)
{
    return farey_adjacent(u, v) && farey_adjacent(v, w) && farey_adjacent(u, w);
}

namespace {

using I64 = std::int64_t;
using P = std::array<I64, 2>;

P canonical_pair(I64 x, I64 y)
{
    if (x < 0 || (x == 0 && y < 0))
        return {-x, -y};
    return {x, y};
}

FareyReport check(const std::vector<Vec>& W, long long bound, bool parallel)
{
    if (W.size() != 2 || W[0].size() != 4 || W[1].size() != 4)
        throw Error("not-isotropic-summand", "W must be two vectors in genus 2");
    if (symplectic_pairing(W[0], W[1], 2) != 0)
        throw Error("not-isotropic-summand", "W is not isotropic");
    if (!is_unimodular_summand(W))
        throw Error("not-isotropic-summand", "W is not a summand");

    ComplexSlice s = parallel ? enumerate_slice(2, bound, W) : enumerate_slice_serial(2, bound, W);
    IntMatrix L = left_inverse(W);

    // Independent model: coprime pairs in W-coordinates whose ambient image fits the window.
    std::vector<I64> box(2);
    for (std::size_t i = 0; i < 2; ++i) {
        Int t = 0;
        for (std::size_t j = 0; j < 4; ++j)
            t += abs(L(j, i));
        box[i] = static_cast<I64>(t * bound);
    }
    auto w0 = to_i64(W[0]), w1 = to_i64(W[1]);
    std::vector<P> fv;
    for (I64 x = 0; x <= box[0]; ++x)
        for (I64 y = -box[1]; y <= box[1]; ++y) {
            if (x == 0 && y != 1)
                continue;
            if (std::gcd(x, y) != 1)
                continue;
            bool inside = true;
            for (std::size_t j = 0; j < 4 && inside; ++j) {
                I64 c = x * w0[j] + y * w1[j];
                inside = c <= bound && c >= -bound;
            }
            if (inside)
                fv.push_back({x, y});
        }
    std::sort(fv.begin(), fv.end());
    std::size_t nf = fv.size();

    std::vector<std::vector<std::size_t>> up(nf);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::size_t i = 0; i < nf; ++i)
        for (std::size_t j = i + 1; j < nf; ++j) {
            I64 d = fv[i][0] * fv[j][1] - fv[i][1] * fv[j][0];
            if (d == 1 || d == -1)
                up[i].push_back(j);
        }
    std::set<std::array<std::size_t, 2>> fedges;
    std::set<std::array<std::size_t, 3>> ftris;
    for (std::size_t i = 0; i < nf; ++i)
        for (std::size_t a = 0; a < up[i].size(); ++a) {
            fedges.insert({i, up[i][a]});
            for (std::size_t b = a + 1; b < up[i].size(); ++b) {
                std::size_t j = up[i][a], k = up[i][b];
                if (std::binary_search(up[j].begin(), up[j].end(), k))
                    ftris.insert({i, j, k});
            }
        }

    FareyReport r;
    r.bound = bound;
    r.slice_vertices = s.vertices.size();
    r.farey_vertices = nf;
    r.slice_edges = s.edges.size();
    r.farey_edges = fedges.size();
    r.slice_triangles = s.aug_triangles.size() + s.triangles.size();
    r.farey_triangles = ftris.size();
    auto note = [&](const std::string& msg) {
        ++r.mismatches;
        if (r.details.size() < 20)
            r.details.push_back(msg);
    };

    std::vector<std::size_t> image(s.vertices.size());
    std::vector<int> hit(nf, 0);
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        Vec c = row_times(s.vertices[i], L);
        P p = canonical_pair(static_cast<I64>(c[0]), static_cast<I64>(c[1]));
        auto it = std::lower_bound(fv.begin(), fv.end(), p);
        if (it == fv.end() || *it != p) {
            note("vertex " + to_string(s.vertices[i]) + " has no Farey image");
            image[i] = nf;
            continue;
        }
        image[i] = static_cast<std::size_t>(it - fv.begin());
        ++hit[image[i]];
    }
    for (std::size_t k = 0; k < nf; ++k)
        if (hit[k] != 1)
            note("Farey vertex (" + std::to_string(fv[k][0]) + "," + std::to_string(fv[k][1]) +
                 ") hit " + std::to_string(hit[k]) + " times");

    std::set<std::array<std::size_t, 2>> sedges;
    for (const auto& e : s.edges) {
        std::size_t a = image[e[0]], b = image[e[1]];
        if (a == nf || b == nf)
            continue;
        sedges.insert({std::min(a, b), std::max(a, b)});
    }
    std::set<std::array<std::size_t, 3>> stris;
    for (const auto& t : s.aug_triangles) {
        std::array<std::size_t, 3> k{image[t[0]], image[t[1]], image[t[2]]};
        if (k[0] == nf || k[1] == nf || k[2] == nf)
            continue;
        std::sort(k.begin(), k.end());
        stris.insert(k);
    }
    if (!s.triangles.empty())
        note("rank-2 window carries " + std::to_string(s.triangles.size()) + " L-triangles");
    for (const auto& e : sedges)
        if (!fedges.count(e))
            note("slice edge without Farey edge");
    for (const auto& e : fedges)
        if (!sedges.count(e))
            note("Farey edge without slice edge");
    if (sedges.size() != s.edges.size())
        note("edge map not injective");
    for (const auto& t : stris)
        if (!ftris.count(t))
            note("augmented triangle without Farey triangle");
    for (const auto& t : ftris)
        if (!stris.count(t))
            note("Farey triangle without augmented triangle");
    if (stris.size() != s.aug_triangles.size())
        note("triangle map not injective");
    return r;
}

}  // namespace

FareyReport farey_iso_check(const std::vector<Vec>& W, long long bound)
{
    return check(W, bound, true);
}

FareyReport farey_iso_check_serial(const std::vector<Vec>& W, long long bound)
{
    return check(W, bound, false);
}

}  // namespace torelli
