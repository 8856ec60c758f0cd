#include <algorithm>

#include "torelli/contraction.hpp"

namespace torelli {

namespace {

Int max_rank(const PathInComplex& p, std::size_t axis)
{
    Int r = 0;
    for (const auto& v : p.vertices)
        r = std::max(r, rank_of_line(v, axis));
    return r;
}

int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

void check_isotropic(const PathInComplex& p)
{
    if (p.mode != EdgeMode::Isotropic)
        throw Error("bad-mode", "operation needs an isotropic-mode path");
    validate_path(p);
}

void append(MoveTrace& into, const MoveTrace& t)
{
    into.moves.insert(into.moves.end(), t.moves.begin(), t.moves.end());
    into.notes.insert(into.notes.end(), t.notes.begin(), t.notes.end());
}

}  // namespace

MoveTrace split_equal_rank_neighbors(const PathInComplex& p, std::size_t axis)
{
    check_isotropic(p);
    if (axis >= p.dim())
        throw Error("bad-index", std::to_string(axis));
    MoveTrace t;
    t.initial = p;
    PathInComplex cur = p;
    Int R = max_rank(p, axis);
    if (R != 0) {
        for (std::size_t i = cur.vertices.size() - 1; i-- > 0;) {
            const Line& x = cur.vertices[i];
            const Line& y = cur.vertices[i + 1];
            if (rank_of_line(x, axis) != R || rank_of_line(y, axis) != R)
                continue;
            int s = sign_of(x[axis]) * sign_of(y[axis]);
            Line m = canonical_line(axpy(-s, y, x));
            push_move(t, cur, Move{MoveKind::AugTriangle, i, {m}, false});
        }
    }
    t.final_path = cur;
    return t;
}

MoveTrace reduce_rank(const PathInComplex& p, std::size_t axis, const ReduceOptions& opt)
{
    check_isotropic(p);
    std::size_t g = p.g;
    if (axis >= p.dim())
        throw Error("bad-index", std::to_string(axis));
    for (const auto& v : p.vertices) {
        for (std::size_t k : opt.zero_axes)
            if (k >= p.dim() || v[k] != 0)
                throw Error("zero-axis-violated", to_string(v));
        if (opt.within_link && !is_edge(v, *opt.within_link, g))
            throw Error("not-in-link", to_string(v));
    }
    MoveTrace t;
    t.initial = p;
    PathInComplex cur = p;
    for (;;) {
        Int R = max_rank(cur, axis);
        if (R == 0)
            break;
        const auto& vs = cur.vertices;
        if (rank_of_line(vs.front(), axis) == R || rank_of_line(vs.back(), axis) == R)
            throw Error(cur.closed ? "base-at-peak" : "endpoint-at-peak",
                        "rank " + R.str() + " is attained at an endpoint");
        MoveTrace sp = split_equal_rank_neighbors(cur, axis);
        append(t, sp);
        cur = sp.final_path;
        for (std::size_t i = cur.vertices.size() - 1; i-- > 1;) {
            if (rank_of_line(cur.vertices[i], axis) != R)
                continue;
            Line X = cur.vertices[i - 1], A = cur.vertices[i], Y = cur.vertices[i + 1];
            if (X == Y) {
                push_move(t, cur, Move{MoveKind::Backtrack, i - 1, {A}, false});
                continue;
            }
            std::vector<Vec> core{A};
            if (opt.within_link)
                core.push_back(*opt.within_link);
            QuotientLattice q = make_quotient(g, core, opt.zero_axes, core);
            auto xq = q.coords(X), yq = q.coords(Y);
            if (!xq || !yq)
                throw Error("not-in-link", "neighbour leaves the link of " + to_string(A));
            std::string diag;
            auto path = link_path(q, *xq, *yq, opt.search, &diag);
            if (!path)
                throw SearchExhausted("search-exhausted",
                                      "link of " + to_string(A) + ": " + diag);
            Vec sa = A[axis] > 0 ? A : neg(A);
            Move m{MoveKind::StarReplace, i - 1, {A}, false};
            for (std::size_t j = 1; j + 1 < path->size(); ++j) {
                Vec z = q.lift((*path)[j]);
                Int c = z[axis] / R;  // truncates toward zero
                if (z[axis] - c * R < 0)
                    --c;
                if (2 * (z[axis] - c * R) > R)
                    ++c;
                z = axpy(-c, sa, z);
                m.payload.push_back(canonical_line(z));
            }
            push_move(t, cur, m);
        }
    }
    t.final_path = cur;
    return t;
}

MoveTrace cone_contract_wprime(const PathInComplex& loop)
{
    check_isotropic(loop);
    if (!loop.closed)
        throw Error("not-closed", "cone contraction needs a loop");
    std::size_t g = loop.g;
    if (g < 2)
        throw Error("genus-too-small", "W' is empty below genus 2");
    for (const auto& v : loop.vertices)
        if (v[2 * g - 2] != 0 || v[2 * g - 1] != 0)
            throw Error("outside-wprime", to_string(v));
    MoveTrace t;
    t.initial = loop;
    PathInComplex cur = loop;
    Line c = unit_vec(2 * g, 2 * g - 2);
    std::size_t len = loop.length();
    for (std::size_t i = 0; i < len; ++i)
        push_move(t, cur, Move{MoveKind::Cone, 2 * i, {c}, false});
    // Loop is now base, C, v1, C, ..., C, base: peel the spurs.
    while (cur.vertices.size() > 3)
        push_move(t, cur, Move{MoveKind::Backtrack, 1, {cur.vertices[2]}, false});
    if (cur.vertices.size() == 3)
        push_move(t, cur, Move{MoveKind::Backtrack, 0, {cur.vertices[1]}, false});
    t.final_path = cur;
    return t;
}

MoveTrace contract_g3_pipeline(const PathInComplex& loop, const SearchOptions& opt)
{
    check_isotropic(loop);
    if (!loop.closed)
        throw Error("not-closed", "pipeline contracts loops");
    std::size_t g = loop.g;
    if (g < 3)
        throw Error("genus-too-small", "pipeline needs genus at least 3");
    MoveTrace t;
    t.initial = loop;
    ReduceOptions r1;
    r1.search = opt;
    MoveTrace s1 = reduce_rank(loop, 2 * g - 1, r1);
    append(t, s1);
    ReduceOptions r2;
    r2.search = opt;
    r2.zero_axes = {2 * g - 1};
    MoveTrace s2 = reduce_rank(s1.final_path, 2 * g - 2, r2);
    append(t, s2);
    MoveTrace s3 = cone_contract_wprime(s2.final_path);
    append(t, s3);
    t.final_path = s3.final_path;
    return t;
}

}  // namespace torelli
