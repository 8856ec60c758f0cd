#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "torelli/intlinalg.hpp"

using namespace torelli;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows)
{
    std::vector<Vec> rs;
    std::size_t c = 0;
    for (auto r : rows) {
        rs.push_back(vec_of(r));
        c = r.size();
    }
    return IntMatrix::from_rows(rs, c);
}

bool is_diagonal_chain(const SmithDecomposition& s)
{
    const IntMatrix& D = s.D;
    for (std::size_t i = 0; i < D.rows; ++i)
        for (std::size_t j = 0; j < D.cols; ++j)
            if (i != j && D(i, j) != 0)
                return false;
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i)
        if (s.invariants[i] <= 0 || s.invariants[i + 1] % s.invariants[i] != 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("smith: worked 2x2 example against cofactor and minor oracles")
{
    IntMatrix m = mat({{2, 4}, {6, 8}});
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.D == mat({{2, 0}, {0, 4}}));
    CHECK(abs(oracle::cofactor_det(m)) == 8);
    CHECK(oracle::minor_gcd(m, 1) == 2);
    CHECK(s.invariants == oracle::invariants(m));
}

TEST_CASE("smith: identity and zero")
{
    SmithDecomposition s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.D == IntMatrix::identity(3));
    SmithDecomposition z = smith_normal_form(IntMatrix(2, 2));
    CHECK(z.D == IntMatrix(2, 2));
    CHECK(z.rank == 0);
}

TEST_CASE("smith: random matrices satisfy UMV = D with unimodular U, V")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> sz(1, 6);
    for (int it = 0; it < 300; ++it) {
        std::size_t r = sz(rng), c = sz(rng);
        IntMatrix m = oracle::random_matrix(rng, r, c, -9, 9);
        SmithDecomposition s = smith_normal_form(m);
        REQUIRE(s.U * m * s.V == s.D);
        CHECK(abs(oracle::cofactor_det(s.U)) == 1);
        CHECK(abs(oracle::cofactor_det(s.V)) == 1);
        CHECK(s.U * s.Uinv == IntMatrix::identity(r));
        CHECK(s.V * s.Vinv == IntMatrix::identity(c));
        CHECK(is_diagonal_chain(s));
        if (r <= 4 && c <= 4)
            CHECK(s.invariants == oracle::invariants(m));
    }
}

TEST_CASE("determinant matches cofactor expansion")
{
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int it = 0; it < 20; ++it) {
            IntMatrix m = oracle::random_matrix(rng, n, n, -9, 9);
            CHECK(determinant(m) == oracle::cofactor_det(m));
        }
}

TEST_CASE("solves and kernels")
{
    std::mt19937_64 rng(8);
    for (int it = 0; it < 100; ++it) {
        IntMatrix m = oracle::random_matrix(rng, 3, 5, -5, 5);
        Vec c = oracle::random_vec(rng, 3, -4, 4);
        Vec x = row_times(c, m);
        auto back = solve_left(m, x);
        REQUIRE(back);
        CHECK(row_times(*back, m) == x);
        Vec t = oracle::random_vec(rng, 5, -4, 4);
        Vec y = times_col(m, t);
        auto sol = solve_right(m, y);
        REQUIRE(sol);
        CHECK(times_col(m, *sol) == y);
        for (const auto& k : right_kernel(m))
            CHECK(is_zero(times_col(m, k)));
    }
    CHECK_FALSE(solve_left(mat({{2, 0}, {0, 2}}), vec_of({1, 0})).has_value());
}

TEST_CASE("primitivity and canonical lines")
{
    CHECK_FALSE(is_primitive(vec_of({2, 4})));
    CHECK(is_primitive(vec_of({0, 0, 1, 0})));
    CHECK(is_primitive(vec_of({3, 5})));
    CHECK(canonical_line(vec_of({-2, -4})) == vec_of({1, 2}));
    CHECK(canonical_line(vec_of({0, 3})) == vec_of({0, 1}));
    CHECK(canonical_line(vec_of({5, -7})) == vec_of({5, -7}));
    CHECK_CODE(canonical_line(vec_of({0, 0})), "zero-vector");
    CHECK_CODE(is_primitive(vec_of({0, 0})), "zero-vector");
}

TEST_CASE("unimodular summands agree with the minor oracle")
{
    CHECK(is_unimodular_summand({vec_of({1, 0, 0, 0})}));
    CHECK(is_unimodular_summand({vec_of({1, 1, 0, 0}), vec_of({0, 2, 1, 0})}));
    CHECK_FALSE(is_unimodular_summand({vec_of({2, 0})}));
    std::mt19937_64 rng(3);
    for (int it = 0; it < 400; ++it) {
        std::size_t k = 1 + it % 4;
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < k; ++i)
            vs.push_back(oracle::random_vec(rng, 5, -3, 3));
        CHECK(is_unimodular_summand(vs) == oracle::summand(vs));
        if (k == 1 && !is_zero(vs[0]))
            CHECK(is_unimodular_summand(vs) == is_primitive(vs[0]));
    }
}

TEST_CASE("int64 kernels agree with exact ones")
{
    std::mt19937_64 rng(4);
    for (int it = 0; it < 500; ++it) {
        Vec u = oracle::random_vec(rng, 6, -20, 20), v = oracle::random_vec(rng, 6, -20, 20),
            w = oracle::random_vec(rng, 6, -20, 20);
        auto ui = to_i64(u), vi = to_i64(v), wi = to_i64(w);
        CHECK(summand2_i64(ui.data(), vi.data(), 6) == oracle::summand({u, v}));
        CHECK(summand3_i64(ui.data(), vi.data(), wi.data(), 6) == oracle::summand({u, v, w}));
        CHECK(Int(pairing_i64(ui.data(), vi.data(), 6)) == oracle::pairing(u, v));
    }
}

TEST_CASE("symplectic pairing conventions")
{
    Vec a1 = vec_of({1, 0}), b1 = vec_of({0, 1});
    CHECK(symplectic_pairing(a1, b1) == 1);
    CHECK(symplectic_pairing(b1, a1) == -1);
    CHECK(symplectic_pairing(vec_of({1, 1, 0, 0}), vec_of({0, 2, 1, 0}), 2) == 2);
    IntMatrix J = form_matrix(2);
    CHECK(J.transpose() == [&] {
        IntMatrix n = J;
        for (auto& x : n.entries)
            x = -x;
        return n;
    }());
    CHECK(abs(determinant(J)) == 1);
}

TEST_CASE("transvections")
{
    Vec a1 = vec_of({1, 0}), b1 = vec_of({0, 1});
    CHECK(transvection(a1, a1, 1) == a1);
    CHECK(transvection(a1, b1, 1) == vec_of({-1, 1}));
    CHECK(transvection(vec_of({0, 0}), b1, 1) == b1);

    std::mt19937_64 rng(9);
    for (int it = 0; it < 300; ++it) {
        Vec c = oracle::random_vec(rng, 6, -4, 4);
        if (is_zero(c))
            continue;
        c = canonical_line(c);
        Vec x = oracle::random_vec(rng, 6, -6, 6), y = oracle::random_vec(rng, 6, -6, 6);
        CHECK(symplectic_pairing(transvection(c, x, 3), transvection(c, y, 3), 3) ==
              oracle::pairing(x, y));
        long long e1 = static_cast<long long>(rng() % 7) - 3, e2 = static_cast<long long>(rng() % 7) - 3;
        CHECK(transvection(c, transvection(c, x, 3, e1), 3, e2) == transvection(c, x, 3, e1 + e2));
    }
}

TEST_CASE("symplectic completion")
{
    auto gram_is_J = [](const std::vector<Vec>& basis, std::size_t g) {
        IntMatrix G(2 * g, 2 * g);
        for (std::size_t i = 0; i < 2 * g; ++i)
            for (std::size_t j = 0; j < 2 * g; ++j)
                G(i, j) = oracle::pairing(basis[i], basis[j]);
        return G == form_matrix(g);
    };
    auto b = complete_symplectic_basis({vec_of({1, 0})}, {}, 1);
    CHECK(b == std::vector<Vec>{vec_of({1, 0}), vec_of({0, 1})});
    auto b2 = complete_symplectic_basis({vec_of({1, 0, 2, 0})}, {}, 2);
    CHECK(b2[0] == vec_of({1, 0, 2, 0}));
    CHECK(gram_is_J(b2, 2));
    CHECK(abs(oracle::cofactor_det(IntMatrix::from_rows(b2, 4))) == 1);
    CHECK_CODE(complete_symplectic_basis({vec_of({1, 0, 0, 0})}, {vec_of({0, 0, 1, 0})}, 2),
               "not-extendable-input");
    CHECK_CODE(complete_symplectic_basis({vec_of({2, 0, 0, 0})}, {}, 2), "not-extendable-input");
}
