#include <algorithm>
#include <map>

#include "torelli/contraction.hpp"

namespace torelli {

H1Diagnostic slice_h1_diagnostic(const ComplexSlice& s)
{
    H1Diagnostic d;
    std::size_t nv = s.vertices.size(), ne = s.edges.size();
    d.vertices = nv;
    d.edges = ne;
    std::map<std::array<std::size_t, 2>, std::size_t> eidx;
    for (std::size_t k = 0; k < ne; ++k)
        eidx[s.edges[k]] = k;
    std::vector<std::array<std::size_t, 3>> faces = s.triangles;
    for (const auto& t : s.aug_triangles) {
        std::array<std::size_t, 3> k = t;
        std::sort(k.begin(), k.end());
        faces.push_back(k);
    }
    d.faces = faces.size();

    std::size_t r1 = 0;
    if (nv > 0 && ne > 0) {
        IntMatrix b1(ne, nv);
        for (std::size_t k = 0; k < ne; ++k) {
            b1(k, s.edges[k][0]) = -1;
            b1(k, s.edges[k][1]) = 1;
        }
        r1 = smith_normal_form(b1).rank;
    }
    std::size_t r2 = 0;
    if (!faces.empty() && ne > 0) {
        IntMatrix b2(faces.size(), ne);
        for (std::size_t f = 0; f < faces.size(); ++f) {
            auto [i, j, k] = faces[f];
            auto edge = [&](std::size_t a, std::size_t b) {
                auto it = eidx.find({a, b});
                if (it == eidx.end())
                    throw Error("slice-broken", "face without boundary edge");
                return it->second;
            };
            b2(f, edge(i, j)) += 1;
            b2(f, edge(j, k)) += 1;
            b2(f, edge(i, k)) -= 1;
        }
        SmithDecomposition sd = smith_normal_form(b2);
        r2 = sd.rank;
        for (const auto& x : sd.invariants)
            if (x > 1)
                d.torsion.push_back(x);
    }
    d.b0 = nv - r1;
    d.b1 = ne - r1 - r2;
    return d;
}

}  // namespace torelli
