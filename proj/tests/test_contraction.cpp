#include <algorithm>

#include "support.hpp"
#include "torelli/contraction.hpp"

using namespace torelli;

namespace {

Vec v6(std::initializer_list<long long> xs) { return make_line(vec_of(xs)); }

const Vec A1 = vec_of({1, 0, 0, 0, 0, 0});
const Vec B1 = vec_of({0, 1, 0, 0, 0, 0});
const Vec A2 = vec_of({0, 0, 1, 0, 0, 0});
const Vec A3 = vec_of({0, 0, 0, 0, 1, 0});
const Vec B3 = vec_of({0, 0, 0, 0, 0, 1});

PathInComplex loop3(std::vector<Line> vs) { return {3, EdgeMode::Isotropic, true, std::move(vs)}; }
PathInComplex farey(std::vector<Line> vs) { return {0, EdgeMode::Farey, true, std::move(vs)}; }
PathInComplex loop2(std::vector<Line> vs) { return {2, EdgeMode::Isotropic, true, std::move(vs)}; }

Int max_rank(const PathInComplex& p, std::size_t axis)
{
    Int r = 0;
    for (const auto& v : p.vertices)
        r = std::max(r, rank_of_line(v, axis));
    return r;
}

Int max_depth(const PathInComplex& p)
{
    Int d = 0;
    for (const auto& v : p.vertices)
        d = std::max(d, farey_depth(v));
    return d;
}

void check_contracted(const MoveTrace& t)
{
    std::string why;
    CHECK_MESSAGE(verify_trace(t, &why), why);
    CHECK(t.final_path.vertices.size() == 1);
}

}  // namespace

TEST_CASE("elementary moves")
{
    Vec a1 = A1, a2 = A2;
    PathInComplex p = loop3({a1, a2, a1});
    PathInComplex q = apply_move(p, {MoveKind::Backtrack, 0, {a2}, false});
    CHECK(q.vertices == std::vector<Line>{a1});
    CHECK(apply_move(q, {MoveKind::Backtrack, 0, {a2}, true}) == p);

    PathInComplex aug = apply_move(p, {MoveKind::AugTriangle, 0, {make_line(add(a1, a2))}, false});
    CHECK(aug.vertices == std::vector<Line>{a1, make_line(add(a1, a2)), a2, a1});
    CHECK_CODE(apply_move(p, {MoveKind::AugTriangle, 0, {v6({1, 0, 2, 0, 0, 0})}, false}),
               "invalid-move");

    PathInComplex tri = apply_move(p, {MoveKind::EdgeTriangle, 0, {A3}, false});
    CHECK(tri.vertices == std::vector<Line>{a1, A3, a2, a1});
    CHECK_CODE(apply_move(p, {MoveKind::EdgeTriangle, 0, {B1}, false}), "invalid-move");

    // X - A - Y with A = a2: replace by a link path through a3.
    PathInComplex star = loop3({a1, a2, A3, a1});
    PathInComplex rep = apply_move(star, {MoveKind::StarReplace, 0, {a2, v6({1, 0, 0, 0, 1, 0})}, false});
    CHECK(rep.vertices[1] == v6({1, 0, 0, 0, 1, 0}));
    CHECK_CODE(apply_move(star, {MoveKind::StarReplace, 0, {a2, B1}, false}), "invalid-move");

    PathInComplex cone = apply_move(loop3({a1, a2, a1}), {MoveKind::Cone, 0, {A3}, false});
    CHECK(cone.vertices[1] == A3);
    CHECK_CODE(apply_move(loop3({a1, a2, a1}), {MoveKind::Cone, 0, {B3}, false}), "invalid-move");
    CHECK_CODE(validate_path(loop3({a1, B1, a1})), "invalid-path");
    CHECK_CODE(validate_path(loop3({a1, a2})), "invalid-path");
}

TEST_CASE("inverted moves undo forward moves")
{
    PathInComplex p = loop3({A1, A2, A1});
    std::vector<Move> ms{{MoveKind::Backtrack, 0, {A2}, true},
                         {MoveKind::EdgeTriangle, 1, {A3}, false},
                         {MoveKind::AugTriangle, 0, {make_line(add(A1, A2))}, false}};
    for (const auto& m : ms) {
        PathInComplex q = apply_move(p, m);
        CHECK(apply_move(q, inverted(m)) == p);
    }
}

TEST_CASE("trace verification catches tampering")
{
    MoveTrace t;
    t.initial = loop3({A1, A2, A1});
    PathInComplex cur = t.initial;
    push_move(t, cur, {MoveKind::Backtrack, 0, {A2}, false});
    t.final_path = cur;
    CHECK(verify_trace(t));
    MoveTrace bad = t;
    bad.final_path.vertices = {A2};
    std::string why;
    CHECK_FALSE(verify_trace(bad, &why));
    CHECK_FALSE(why.empty());
    bad = t;
    bad.moves[0].payload = {A3};
    CHECK_FALSE(verify_trace(bad));
}

TEST_CASE("splitting equal-rank neighbours")
{
    Vec x = v6({1, 0, 0, 0, 0, 1}), y = v6({0, 0, 1, 0, 0, 1});
    PathInComplex p{3, EdgeMode::Isotropic, false, {x, y}};
    MoveTrace t = split_equal_rank_neighbors(p, 5);
    REQUIRE(t.moves.size() == 1);
    CHECK(t.moves[0].payload[0] == v6({1, 0, -1, 0, 0, 0}));
    CHECK(rank_of_line(t.moves[0].payload[0], 5) == 0);
    CHECK(verify_trace(t));
    CHECK(split_equal_rank_neighbors(loop3({A1, A2, A1}), 5).moves.empty());
}

TEST_CASE("rank reduction examples")
{
    CHECK(reduce_rank(loop3({A1, A2, A1}), 5).moves.empty());

    PathInComplex p = loop3({A1, v6({0, 0, 1, 0, 0, 1}), A2, A1});
    MoveTrace t = reduce_rank(p, 5);
    CHECK(verify_trace(t));
    CHECK(max_rank(t.final_path, 5) == 0);
    CHECK(t.final_path.vertices.front() == A1);
    CHECK(t.final_path.vertices.back() == A1);
}

TEST_CASE("rank reduction on random loops")
{
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        RandomLoop r = random_contractible_loop(3, seed, 16, 4);
        for (std::size_t axis : {std::size_t{5}, std::size_t{4}}) {
            Int before = max_rank(r.loop, axis);
            MoveTrace t = reduce_rank(r.loop, axis);
            CHECK(verify_trace(t));
            CHECK(t.final_path.vertices.front() == r.loop.vertices.front());
            CHECK(t.final_path.closed);
            if (before > 0)
                CHECK(max_rank(t.final_path, axis) < before);
        }
    }
}

TEST_CASE("rank reduction keeps open endpoints")
{
    PathInComplex p{3, EdgeMode::Isotropic, false, {A1, v6({0, 0, 1, 0, 0, 1}), A2}};
    MoveTrace t = reduce_rank(p, 5);
    CHECK(verify_trace(t));
    CHECK(t.final_path.vertices.front() == A1);
    CHECK(t.final_path.vertices.back() == A2);
    CHECK(max_rank(t.final_path, 5) == 0);

    PathInComplex bad{3, EdgeMode::Isotropic, false, {v6({0, 0, 1, 0, 0, 1}), A1}};
    CHECK_CODE(reduce_rank(bad, 5), "endpoint-at-peak");
}

TEST_CASE("cone contraction")
{
    CHECK(cone_contract_wprime(loop3({A1})).moves.empty());
    MoveTrace t = cone_contract_wprime(loop3({A1, A2, make_line(add(A1, A2)), A1}));
    check_contracted(t);
    CHECK_CODE(cone_contract_wprime(loop3({A1, A3, A1})), "outside-wprime");
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RandomLoop r = random_contractible_loop(3, seed, 30, 8);
        MoveTrace pre = contract_g3_pipeline(r.loop);
        check_contracted(pre);
    }
}

TEST_CASE("Farey contraction examples")
{
    FareyVertex zero = farey_vertex(1, 0), inf = farey_vertex(0, 1), one = farey_vertex(1, 1);
    MoveTrace t = farey_contract(farey({zero, inf, one, zero}));
    check_contracted(t);
    CHECK(t.moves.size() <= 3);
    MoveTrace b = farey_contract(farey({zero, inf, zero}));
    check_contracted(b);
    REQUIRE(b.moves.size() == 1);
    CHECK(b.moves[0].kind == MoveKind::Backtrack);
    CHECK_CODE(farey_contract(farey({zero, farey_vertex(1, 2), zero})), "invalid-path");
}

TEST_CASE("Farey depth and parents")
{
    CHECK(farey_depth(farey_vertex(1, 0)) == 0);
    CHECK(farey_depth(farey_vertex(0, 1)) == 0);
    CHECK(farey_depth(farey_vertex(1, 1)) == 1);
    CHECK(farey_depth(farey_vertex(3, 5)) == 4);  // 5/3 = [1;1,2]
    auto [p, q] = farey_parents(farey_vertex(3, 5));
    CHECK(farey_adjacent(p, q));
    CHECK(farey_triangle(p, q, farey_vertex(3, 5)));
    CHECK(farey_depth(p) < 4);
    CHECK(farey_depth(q) < 4);
}

TEST_CASE("Farey contraction of random loops")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        PathInComplex l = random_farey_loop(seed, 40, 20);
        validate_path(l);
        MoveTrace t = farey_contract(l);
        check_contracted(t);
        // Only shallower parents are ever inserted.
        Int start = max_depth(l);
        PathInComplex cur = l;
        for (const auto& m : t.moves) {
            cur = apply_move(cur, m);
            CHECK(max_depth(cur) <= start);
        }
    }
}

TEST_CASE("genus-two contraction examples")
{
    Vec a1 = vec_of({1, 0, 0, 0}), b1 = vec_of({0, 1, 0, 0}), a2 = vec_of({0, 0, 1, 0});
    MoveTrace p = genus2_contract(loop2({a1, a2, make_line(add(a1, a2)), a1}));
    check_contracted(p);

    MoveTrace q = genus2_contract(loop2({a2, b1, make_line(add(a2, b1)), a2}));
    check_contracted(q);
    CHECK(std::find(q.notes.begin(), q.notes.end(), "disk-filling fallback fired") == q.notes.end());

    MoveTrace r = genus2_contract(loop2({a2, make_line(add(a1, b1)), a2}));
    check_contracted(r);

    CHECK_CODE(genus2_contract(loop2({a1, vec_of({0, 0, 0, 1}), a1})), "outside-w");
    CHECK_CODE(genus2_contract(farey({farey_vertex(1, 0)})), "bad-mode");
}

TEST_CASE("genus-two contraction of embedded Farey loops")
{
    Vec a1 = vec_of({1, 0, 0, 0}), b1 = vec_of({0, 1, 0, 0}), a2 = vec_of({0, 0, 1, 0});
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        PathInComplex f = random_farey_loop(seed, 30, 10);
        check_contracted(genus2_contract(embed_farey_loop(f, 2, a1, a2)));
        check_contracted(genus2_contract(embed_farey_loop(f, 2, a2, b1)));
    }
    CHECK_CODE(embed_farey_loop(random_farey_loop(1, 4, 3), 2, a1, b1), "not-isotropic-summand");
}

TEST_CASE("random contractible loops")
{
    RandomLoop z = random_contractible_loop(3, 7, 0, 8);
    CHECK(z.loop.vertices.size() == 1);
    CHECK(z.certificate.moves.empty());

    RandomLoop r1 = random_contractible_loop(3, 11, 30, 8);
    RandomLoop r2 = random_contractible_loop(3, 11, 30, 8);
    CHECK(r1.loop == r2.loop);
    CHECK(r1.certificate == r2.certificate);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        RandomLoop r = random_contractible_loop(3, seed, 40, 8);
        validate_path(r.loop);
        CHECK(r.loop.length() <= 40);
        CHECK(sup_norm(r.loop.vertices[0]) <= 8);
        for (const auto& v : r.loop.vertices)
            CHECK(sup_norm(v) <= 8);
        CHECK(r.certificate.initial == r.loop);
        check_contracted(r.certificate);
    }
}

TEST_CASE("first homology diagnostics of windows")
{
    ComplexSlice tri;
    tri.g = 3;
    tri.vertices = {A3, A2, A1};
    std::sort(tri.vertices.begin(), tri.vertices.end());
    tri.edges = {{0, 1}, {0, 2}, {1, 2}};
    tri.triangles = {{0, 1, 2}};
    H1Diagnostic d = slice_h1_diagnostic(tri);
    CHECK(d.b0 == 1);
    CHECK(d.b1 == 0);
    CHECK(d.torsion.empty());

    ComplexSlice two;
    two.g = 3;
    two.vertices = {A3, A2, A1, B1};
    two.edges = {{0, 1}, {2, 3}};
    H1Diagnostic e = slice_h1_diagnostic(two);
    CHECK(e.b0 == 2);
    CHECK(e.b1 == 0);

    ComplexSlice hollow = tri;
    hollow.triangles.clear();
    CHECK(slice_h1_diagnostic(hollow).b1 == 1);

    ComplexSlice f = enumerate_slice(2, 1, std::vector<Vec>{vec_of({1, 0, 0, 0}), vec_of({0, 0, 1, 0})});
    H1Diagnostic h = slice_h1_diagnostic(f);
    CHECK(h.vertices == 4);
    CHECK(h.edges == 5);
    CHECK(h.faces == 2);
    CHECK(h.b0 == 1);
    CHECK(h.b1 == 0);
}
