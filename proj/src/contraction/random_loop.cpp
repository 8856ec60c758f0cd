#include <algorithm>
#include <random>

#include "torelli/contraction.hpp"

namespace torelli {

namespace {

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Random vertex z with {core..., z} a simplex and |z| <= bound.
std::optional<Line> sample_link(Rng& rng, std::size_t g, const std::vector<Vec>& core,
                                long long bound, const std::vector<Line>& avoid)
{
    QuotientLattice q = make_quotient(g, core, {}, core);
    std::size_t d = q.qdim();
    if (d == 0)
        return std::nullopt;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec w(d);
        for (auto& x : w)
            x = uniform(rng, -2, 2);
        if (is_zero(w) || content(w) != 1)
            continue;
        Vec z = q.lift(w);
        for (const auto& c : core)
            z = axpy(uniform(rng, -2, 2), c, z);
        if (sup_norm(z) > bound)
            continue;
        Line l = canonical_line(z);
        std::vector<Line> s = core;
        s.push_back(l);
        if (std::find(avoid.begin(), avoid.end(), l) != avoid.end() || !is_simplex(s, g))
            continue;
        return l;
    }
    return std::nullopt;
}

}  // namespace

RandomLoop random_contractible_loop(std::size_t g, std::uint64_t seed, std::size_t target_length,
                                    long long bound)
{
    if (g < 1)
        throw Error("genus-too-small", "need genus at least 1");
    if (bound < 1)
        throw Error("bad-bound", "bound must be at least 1");
    Rng rng(seed);
    PathInComplex cur{g, EdgeMode::Isotropic, true, {unit_vec(2 * g, 0)}};
    std::vector<Move> gen;
    auto apply = [&](const Move& m) {
        cur = apply_move(cur, m);
        gen.push_back(m);
    };
    std::size_t stall = 0;
    while (cur.length() < target_length && stall < 400 * (target_length + 1)) {
        ++stall;
        auto& v = cur.vertices;
        std::size_t n = v.size();
        int kind = static_cast<int>(uniform(rng, 0, 99));
        if (n == 1 || kind < 30) {
            if (cur.length() + 2 > target_length && n > 1)
                continue;
            std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
            auto y = sample_link(rng, g, {v[i]}, bound, {});
            if (y)
                apply(Move{MoveKind::Backtrack, i, {*y}, true});
            continue;
        }
        std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 2));
        const Line x = v[i], y = v[i + 1];
        if (kind < 55) {
            auto z = sample_link(rng, g, {x, y}, bound, {});
            if (z)
                apply(Move{MoveKind::EdgeTriangle, i, {*z}, false});
        } else if (kind < 80) {
            Vec m = uniform(rng, 0, 1) ? add(x, y) : sub(x, y);
            if (sup_norm(m) <= bound)
                apply(Move{MoveKind::AugTriangle, i, {canonical_line(m)}, false});
        } else if (i + 2 < n) {
            // Swap the middle of x-a-y for another common neighbour in the star of a.
            const Line a = v[i + 1], yy = v[i + 2];
            auto z = sample_link(rng, g, {a, x}, bound, {a});
            if (z && is_simplex({*z, a, yy}, g))
                apply(Move{MoveKind::StarReplace, i, {a, *z}, false});
        }
    }
    RandomLoop r;
    r.loop = cur;
    r.certificate.initial = cur;
    PathInComplex back = cur;
    for (auto it = gen.rbegin(); it != gen.rend(); ++it)
        push_move(r.certificate, back, inverted(*it));
    r.certificate.final_path = back;
    return r;
}

PathInComplex random_farey_loop(std::uint64_t seed, std::size_t target_length, long long bound)
{
    Rng rng(seed);
    PathInComplex cur{0, EdgeMode::Farey, true, {vec_of({1, 0})}};
    std::size_t stall = 0;
    while (cur.length() < target_length && stall < 400 * (target_length + 1)) {
        ++stall;
        auto& v = cur.vertices;
        std::size_t n = v.size();
        bool spur = n == 1 || uniform(rng, 0, 1) == 0;
        if (spur) {
            if (cur.length() + 2 > target_length && n > 1)
                continue;
            std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
            const Vec& x = v[i];
            // Extended Euclid: x0*d - x1*c = 1.
            Int r0 = x[0], r1 = x[1], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                Int q = r0 / r1, tmp = r0 - q * r1;
                r0 = r1;
                r1 = tmp;
                tmp = s0 - q * s1;
                s0 = s1;
                s1 = tmp;
                tmp = t0 - q * t1;
                t0 = t1;
                t1 = tmp;
            }
            // s0*x0 + t0*x1 = r0 = +-1, so (c, d) = (-t0, s0) * r0 pairs to 1.
            Vec y{-t0 * r0, s0 * r0};
            y = axpy(uniform(rng, -3, 3), x, y);
            if (sup_norm(y) > bound)
                continue;
            cur = apply_move(cur, Move{MoveKind::Backtrack, i, {canonical_line(y)}, true});
        } else {
            std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 2));
            Vec m = uniform(rng, 0, 1) ? add(v[i], v[i + 1]) : sub(v[i], v[i + 1]);
            if (sup_norm(m) > bound)
                continue;
            cur = apply_move(cur, Move{MoveKind::AugTriangle, i, {canonical_line(m)}, false});
        }
    }
    return cur;
}

PathInComplex embed_farey_loop(const PathInComplex& farey, std::size_t g, const Vec& p1,
                               const Vec& p2)
{
    if (farey.mode != EdgeMode::Farey)
        throw Error("bad-mode", "expected a Farey-mode loop");
    if (p1.size() != 2 * g || p2.size() != 2 * g)
        throw Error("dimension-mismatch", "plane basis");
    if (symplectic_pairing(p1, p2, g) != 0 || !is_unimodular_summand({p1, p2}))
        throw Error("not-isotropic-summand", "plane basis");
    PathInComplex out{g, EdgeMode::Isotropic, farey.closed, {}};
    for (const auto& f : farey.vertices)
        out.vertices.push_back(canonical_line(axpy(f[0], p1, scale(f[1], p2))));
    validate_path(out);
    return out;
}

}  // namespace torelli
