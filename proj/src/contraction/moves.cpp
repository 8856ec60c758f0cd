#include "torelli/contraction.hpp"

namespace torelli {

const char* to_string(EdgeMode m) { return m == EdgeMode::Farey ? "farey" : "isotropic"; }

const char* to_string(MoveKind k)
{
    switch (k) {
    case MoveKind::Backtrack: return "Backtrack";
    case MoveKind::EdgeTriangle: return "EdgeTriangle";
    case MoveKind::StarReplace: return "StarReplace";
    case MoveKind::AugTriangle: return "AugTriangle";
    case MoveKind::Cone: return "Cone";
    }
    return "?";
}

EdgeMode edge_mode_from(const std::string& s)
{
    if (s == "farey")
        return EdgeMode::Farey;
    if (s == "isotropic")
        return EdgeMode::Isotropic;
    throw Error("bad-mode", s);
}

MoveKind move_kind_from(const std::string& s)
{
    for (MoveKind k : {MoveKind::Backtrack, MoveKind::EdgeTriangle, MoveKind::StarReplace,
                       MoveKind::AugTriangle, MoveKind::Cone})
        if (s == to_string(k))
            return k;
    throw Error("bad-move-kind", s);
}

Move inverted(const Move& m)
{
    Move r = m;
    r.inverse = !m.inverse;
    return r;
}

namespace {

[[noreturn]] void fail(const std::string& pred, const Move& m)
{
    throw Error("invalid-move", std::string(to_string(m.kind)) + (m.inverse ? " (inverse)" : "") +
                                    " at " + std::to_string(m.pos) + ": " + pred);
}

bool simplex_ok(const PathInComplex& p, const std::vector<Line>& ls)
{
    if (p.mode == EdgeMode::Farey)
        return false;
    return is_simplex(ls, p.g);
}

bool aug_ok(const PathInComplex& p, const Line& x, const Line& m, const Line& y)
{
    if (p.mode == EdgeMode::Isotropic)
        return is_aug_triangle(x, m, y, p.g);
    if (!farey_adjacent(x, y))
        return false;
    for (int s : {1, -1}) {
        Vec c = axpy(s, y, x);
        if (!is_zero(c) && canonical_line(c) == m)
            return true;
    }
    return false;
}

void check_payload(const PathInComplex& p, const Move& m, std::size_t min_size)
{
    if (m.payload.size() < min_size)
        fail("payload too short", m);
    for (const auto& v : m.payload) {
        if (v.size() != p.dim())
            fail("payload dimension", m);
        if (is_zero(v) || canonical_line(v) != v)
            fail("payload vertex not canonical", m);
    }
}

}  // namespace

bool edge_ok(const PathInComplex& p, const Line& x, const Line& y)
{
    if (p.mode == EdgeMode::Farey)
        return farey_adjacent(x, y);
    return is_edge(x, y, p.g);
}

void validate_path(const PathInComplex& p)
{
    if (p.vertices.empty())
        throw Error("invalid-path", "no vertices");
    for (const auto& v : p.vertices) {
        if (v.size() != p.dim())
            throw Error("invalid-path", "vertex dimension " + to_string(v));
        if (is_zero(v) || canonical_line(v) != v)
            throw Error("invalid-path", "vertex not canonical " + to_string(v));
    }
    if (p.closed && p.vertices.front() != p.vertices.back())
        throw Error("invalid-path", "closed path does not return to its base");
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!edge_ok(p, p.vertices[i], p.vertices[i + 1]))
            throw Error("invalid-path", "no edge between " + to_string(p.vertices[i]) + " and " +
                                            to_string(p.vertices[i + 1]));
}

PathInComplex apply_move(const PathInComplex& p, const Move& m)
{
    PathInComplex out = p;
    auto& v = out.vertices;
    std::size_t i = m.pos, n = v.size();
    switch (m.kind) {
    case MoveKind::Backtrack:
        check_payload(p, m, 1);
        if (!m.inverse) {
            if (i + 2 >= n)
                fail("position out of range", m);
            if (v[i] != v[i + 2])
                fail("X-Y-X pattern", m);
            if (v[i + 1] != m.payload[0])
                fail("spur vertex mismatch", m);
            v.erase(v.begin() + i + 1, v.begin() + i + 3);
        } else {
            if (i >= n)
                fail("position out of range", m);
            if (!edge_ok(p, v[i], m.payload[0]))
                fail("spur is not an edge", m);
            Line x = v[i];
            v.insert(v.begin() + i + 1, {m.payload[0], x});
        }
        break;
    case MoveKind::EdgeTriangle:
    case MoveKind::Cone:
    case MoveKind::AugTriangle: {
        check_payload(p, m, 1);
        const Line& z = m.payload[0];
        if (m.kind == MoveKind::Cone) {
            if (p.mode != EdgeMode::Isotropic || p.g == 0)
                fail("cone needs isotropic mode", m);
            if (z != unit_vec(2 * p.g, 2 * p.g - 2))
                fail("cone vertex must be the last a-axis", m);
        }
        auto pred = [&](const Line& x, const Line& y) {
            if (m.kind == MoveKind::AugTriangle)
                return aug_ok(p, x, z, y);
            return simplex_ok(p, {x, y, z});
        };
        if (!m.inverse) {
            if (i + 1 >= n)
                fail("position out of range", m);
            if (!pred(v[i], v[i + 1]))
                fail(m.kind == MoveKind::AugTriangle ? "is_aug_triangle" : "is_simplex", m);
            v.insert(v.begin() + i + 1, z);
        } else {
            if (i + 2 >= n)
                fail("position out of range", m);
            if (v[i + 1] != z)
                fail("removed vertex mismatch", m);
            if (!pred(v[i], v[i + 2]))
                fail(m.kind == MoveKind::AugTriangle ? "is_aug_triangle" : "is_simplex", m);
            v.erase(v.begin() + i + 1);
        }
        break;
    }
    case MoveKind::StarReplace: {
        check_payload(p, m, 1);
        const Line& a = m.payload[0];
        std::vector<Line> zs(m.payload.begin() + 1, m.payload.end());
        std::size_t k = zs.size();
        std::size_t span = m.inverse ? k : 1;  // vertices strictly between X and Y now
        if (i + span + 1 >= n)
            fail("position out of range", m);
        if (!m.inverse) {
            if (v[i + 1] != a)
                fail("star centre mismatch", m);
        } else {
            for (std::size_t t = 0; t < k; ++t)
                if (v[i + 1 + t] != zs[t])
                    fail("replaced chain mismatch", m);
        }
        std::vector<Line> chain{v[i]};
        chain.insert(chain.end(), zs.begin(), zs.end());
        chain.push_back(v[i + span + 1]);
        for (std::size_t t = 0; t + 1 < chain.size(); ++t)
            if (!simplex_ok(p, {chain[t], a, chain[t + 1]}))
                fail("is_simplex with star centre", m);
        v.erase(v.begin() + i + 1, v.begin() + i + 1 + span);
        if (!m.inverse)
            v.insert(v.begin() + i + 1, zs.begin(), zs.end());
        else
            v.insert(v.begin() + i + 1, a);
        break;
    }
    }
    return out;
}

bool verify_trace(const MoveTrace& t, std::string* why)
{
    try {
        if (t.initial.g != t.final_path.g || t.initial.mode != t.final_path.mode ||
            t.initial.closed != t.final_path.closed)
            throw Error("trace-mismatch", "initial and final paths live in different spaces");
        validate_path(t.initial);
        PathInComplex cur = t.initial;
        for (const auto& m : t.moves)
            cur = apply_move(cur, m);
        validate_path(cur);
        if (!(cur == t.final_path))
            throw Error("trace-mismatch", "replay does not reach the recorded final path");
        return true;
    } catch (const Error& e) {
        if (why)
            *why = e.what();
        return false;
    }
}

void push_move(MoveTrace& t, PathInComplex& cur, const Move& m)
{
    cur = apply_move(cur, m);
    t.moves.push_back(m);
}

}  // namespace torelli
