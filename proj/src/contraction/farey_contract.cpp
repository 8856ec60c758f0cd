#include "torelli/contraction.hpp"

namespace torelli {

Int farey_depth(const FareyVertex& v)
{
    if (v.size() != 2)
        throw Error("dimension-mismatch", "Farey vertices are pairs");
    Int x = abs(v[1]), y = abs(v[0]);
    if (x == 0 || y == 0)
        return 0;
    Int s = 0;
    while (y != 0) {
        s += x / y;
        Int r = x % y;
        x = y;
        y = r;
    }
    return s;
}

namespace {

Int mod_inverse(Int b, const Int& m)
{
    Int r0 = m, r1 = b % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw Error("not-coprime", "no inverse");
    s0 %= m;
    if (s0 < 0)
        s0 += m;
    return s0;
}

}  // namespace

std::pair<FareyVertex, FareyVertex> farey_parents(const FareyVertex& v)
{
    FareyVertex c = farey_vertex(v[0], v[1]);
    if (farey_depth(c) == 0)
        throw Error("no-parents", to_string(c) + " is a root of the Farey tree");
    Int a = c[0], b = abs(c[1]);
    int s = c[1] < 0 ? -1 : 1;
    FareyVertex p, q;
    if (a == 1) {
        p = {Int(1), s * (b - 1)};
        q = {Int(0), Int(1)};
    } else {
        Int a1 = mod_inverse(b, a);
        Int b1 = (b * a1 - 1) / a;
        p = {a1, s * b1};
        q = {a - a1, s * (b - b1)};
    }
    return {canonical_line(p), canonical_line(q)};
}

namespace {

// Contracts a loop of Farey vertices; returns moves relative to this loop.
std::vector<Move> contract_loop(std::vector<Line> cur)
{
    std::vector<Move> moves;
    PathInComplex p{0, EdgeMode::Farey, true, cur};
    auto apply = [&](const Move& m) {
        p = apply_move(p, m);
        moves.push_back(m);
    };
    while (p.vertices.size() > 1) {
        auto& v = p.vertices;
        bool done = false;
        for (std::size_t i = 0; i + 2 < v.size(); ++i)
            if (v[i] == v[i + 2]) {
                apply(Move{MoveKind::Backtrack, i, {v[i + 1]}, false});
                done = true;
                break;
            }
        if (done)
            continue;
        std::size_t best = 1;
        Int bd = -1;
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
            Int d = farey_depth(v[i]);
            if (d > bd) {
                bd = d;
                best = i;
            }
        }
        Int base_depth = farey_depth(v[0]);
        if (bd > base_depth) {
            apply(Move{MoveKind::AugTriangle, best - 1, {v[best]}, true});
            continue;
        }
        if (base_depth == 0)
            throw Error("farey-contract-stuck", "reduced loop among depth-0 vertices");
        std::size_t n = v.size();
        Line u1 = v[1];
        if (u1 != v[n - 2])
            apply(Move{MoveKind::AugTriangle, n - 2, {u1}, false});
        std::vector<Line> inner(p.vertices.begin() + 1, p.vertices.end() - 1);
        for (Move m : contract_loop(inner)) {
            m.pos += 1;
            apply(m);
        }
        apply(Move{MoveKind::Backtrack, 0, {p.vertices[1]}, false});
    }
    return moves;
}

}  // namespace

MoveTrace farey_contract(const PathInComplex& loop)
{
    if (loop.mode != EdgeMode::Farey)
        throw Error("bad-mode", "Farey contraction needs a Farey-mode loop");
    if (!loop.closed)
        throw Error("not-closed", "Farey contraction needs a loop");
    validate_path(loop);
    MoveTrace t;
    t.initial = loop;
    PathInComplex cur = loop;
    for (const auto& m : contract_loop(loop.vertices))
        push_move(t, cur, m);
    t.final_path = cur;
    return t;
}

}  // namespace torelli
