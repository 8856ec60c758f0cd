#include "torelli/isocomplex.hpp"

namespace torelli {

Line make_line(const Vec& v) { return canonical_line(v); }

bool is_simplex(const std::vector<Line>& lines, std::size_t g)
{
    for (const auto& l : lines) {
        if (l.size() != 2 * g)
            throw Error("dimension-mismatch", "line " + to_string(l));
        if (is_zero(l))
            return false;
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (symplectic_pairing(lines[i], lines[j], g) != 0)
                return false;
    return is_unimodular_summand(lines);
}

bool is_edge(const Line& x, const Line& y, std::size_t g) { return is_simplex({x, y}, g); }

bool is_aug_triangle(const Line& x, const Line& m, const Line& y, std::size_t g)
{
    if (!is_edge(x, y, g) || m.size() != x.size() || is_zero(m))
        return false;
    Line cm = canonical_line(m);
    for (int s : {1, -1}) {
        Vec c = axpy(s, y, x);
        if (!is_zero(c) && canonical_line(c) == cm)
            return true;
    }
    return false;
}

Int rank_of_line(const Line& l, std::size_t index)
{
    if (index >= l.size())
        throw Error("bad-index", std::to_string(index));
    return abs(l[index]);
}

std::optional<std::size_t> ComplexSlice::index_of(const Line& l) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), l);
    if (it == vertices.end() || *it != l)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

ComplexSlice link_of(const Line& l, const ComplexSlice& s)
{
    Line c = canonical_line(l);
    if (!s.index_of(c))
        throw Error("missing-vertex", to_string(c));
    ComplexSlice out;
    out.g = s.g;
    out.bound = s.bound;
    out.W = s.W;
    std::vector<std::optional<std::size_t>> remap(s.vertices.size());
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        if (s.vertices[i] != c && is_simplex({c, s.vertices[i]}, s.g)) {
            remap[i] = out.vertices.size();
            out.vertices.push_back(s.vertices[i]);
        }
    for (const auto& e : s.edges)
        if (remap[e[0]] && remap[e[1]] && is_simplex({c, s.vertices[e[0]], s.vertices[e[1]]}, s.g))
            out.edges.push_back({*remap[e[0]], *remap[e[1]]});
    return out;
}

IntMatrix left_inverse(const std::vector<Vec>& W)
{
    if (W.empty())
        throw Error("not-a-summand", "empty basis");
    std::size_t n = W[0].size(), k = W.size();
    SmithDecomposition s = smith_normal_form(IntMatrix::from_rows(W, n));
    if (s.rank != k)
        throw Error("not-a-summand", "basis vectors are dependent");
    for (const auto& d : s.invariants)
        if (d != 1)
            throw Error("not-a-summand", "span is not saturated");
    // W = Uinv [I 0] Vinv  =>  L = V [I;0] U
    IntMatrix L(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t)
                L(i, j) += s.V(i, t) * s.U(t, j);
    return L;
}

std::vector<Vec> realize_simplex_as_basis(const std::vector<Line>& lines, std::size_t g)
{
    if (!is_simplex(lines, g))
        throw Error("not-a-simplex");
    return complete_symplectic_basis(lines, {}, g);
}

}  // namespace torelli
