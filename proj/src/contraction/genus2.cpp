#include "torelli/contraction.hpp"

namespace torelli {

namespace {

struct Plane {
    Vec p1, p2;
    IntMatrix L;
};

Line to_ambient(const Plane& pl, const Line& f)
{
    return canonical_line(axpy(f[0], pl.p1, scale(f[1], pl.p2)));
}

Line to_farey(const Plane& pl, const Line& v)
{
    return canonical_line(row_times(v, pl.L));
}

std::optional<Plane> planar_span(const std::vector<Line>& vs, std::size_t g)
{
    SmithDecomposition s = smith_normal_form(IntMatrix::from_rows(vs, 2 * g));
    if (s.rank != 2)
        return std::nullopt;
    Plane pl{s.Vinv.row(0), s.Vinv.row(1), {}};
    if (symplectic_pairing(pl.p1, pl.p2, g) != 0)
        return std::nullopt;
    pl.L = left_inverse({pl.p1, pl.p2});
    return pl;
}

// Contracts the closed sub-loop cur[s..e] (cur[s] == cur[e]) inside a plane.
void contract_in_plane(MoveTrace& t, PathInComplex& cur, std::size_t s, std::size_t e,
                       const Plane& pl)
{
    PathInComplex f{0, EdgeMode::Farey, true, {}};
    for (std::size_t i = s; i <= e; ++i)
        f.vertices.push_back(to_farey(pl, cur.vertices[i]));
    MoveTrace ft = farey_contract(f);
    for (const auto& m : ft.moves) {
        Move a = m;
        a.pos += s;
        for (auto& x : a.payload)
            x = to_ambient(pl, x);
        push_move(t, cur, a);
    }
}

bool greedy_step(MoveTrace& t, PathInComplex& cur)
{
    auto& v = cur.vertices;
    std::size_t g = cur.g;
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        if (v[i] == v[i + 2]) {
            push_move(t, cur, Move{MoveKind::Backtrack, i, {v[i + 1]}, false});
            return true;
        }
        if (is_edge(v[i], v[i + 2], g) &&
            (is_aug_triangle(v[i], v[i + 1], v[i + 2], g) || is_simplex({v[i], v[i + 1], v[i + 2]}, g))) {
            MoveKind k = is_aug_triangle(v[i], v[i + 1], v[i + 2], g) ? MoveKind::AugTriangle
                                                                        : MoveKind::EdgeTriangle;
            push_move(t, cur, Move{k, i, {v[i + 1]}, true});
            return true;
        }
    }
    return false;
}

}  // namespace

MoveTrace genus2_contract(const PathInComplex& loop, const Genus2Options& opt)
{
    if (loop.mode != EdgeMode::Isotropic || loop.g != 2)
        throw Error("bad-mode", "genus-2 contraction needs an isotropic loop in genus 2");
    if (!loop.closed)
        throw Error("not-closed", "genus-2 contraction needs a loop");
    validate_path(loop);
    for (const auto& v : loop.vertices)
        if (v[3] != 0)
            throw Error("outside-w", to_string(v) + " has nonzero b2");
    MoveTrace t;
    t.initial = loop;
    PathInComplex cur = loop;
    const Line a2 = vec_of({0, 0, 1, 0});
    while (cur.vertices.size() > 1) {
        if (auto pl = planar_span(cur.vertices, 2)) {
            contract_in_plane(t, cur, 0, cur.vertices.size() - 1, *pl);
            break;
        }
        const auto& v = cur.vertices;
        if (v.front()[1] != 0)
            throw Error("base-outside", "base vertex has nonzero b1");
        std::size_t s = 1;
        while (v[s][1] == 0)
            ++s;
        std::size_t e = s;
        while (v[e + 1][1] != 0)
            ++e;
        if (v[s - 1] != a2 || v[e + 1] != a2)
            throw Error("flank-check-failed", "run is not flanked by the a2 line");
        Vec p{v[s][0], v[s][1], 0, 0};
        p = canonical_line(p);
        bool parallel = true;
        for (std::size_t i = s; i <= e; ++i)
            if (v[i][0] * p[1] - v[i][1] * p[0] != 0)
                parallel = false;
        if (parallel) {
            Plane pl{p, a2, left_inverse({p, a2})};
            contract_in_plane(t, cur, s - 1, e + 1, pl);
            continue;
        }
        t.notes.push_back("disk-filling fallback fired");
        std::size_t budget = opt.fallback_budget;
        while (cur.vertices.size() > 1) {
            if (budget-- == 0 || !greedy_step(t, cur))
                throw SearchExhausted("search-exhausted", "disk-filling fallback ran out");
        }
    }
    t.final_path = cur;
    return t;
}

}  // namespace torelli
