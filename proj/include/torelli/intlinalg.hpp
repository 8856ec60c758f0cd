#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torelli/error.hpp"

namespace torelli {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<Vec>& rs, std::size_t ncols);

    Int& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    std::vector<Vec> row_list() const;
    IntMatrix transpose() const;

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
Vec row_times(const Vec& x, const IntMatrix& m);  // x * M
Vec times_col(const IntMatrix& m, const Vec& x);  // M * x

// Fraction-free Bareiss elimination.
Int determinant(const IntMatrix& m);

struct SmithDecomposition {
    IntMatrix U, D, V;        // U * M * V = D
    IntMatrix Uinv, Vinv;     // kept alongside so solves never re-invert
    std::vector<Int> invariants;  // nonzero diagonal, d1 | d2 | ...
    std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// c with c * M = x, if any.
std::optional<Vec> solve_left(const SmithDecomposition& s, const Vec& x);
std::optional<Vec> solve_left(const IntMatrix& m, const Vec& x);
// x with M * x = t, if any.
std::optional<Vec> solve_right(const SmithDecomposition& s, const Vec& t);
std::optional<Vec> solve_right(const IntMatrix& m, const Vec& t);
// Basis (as rows) of {x : M x = 0}; always a saturated lattice.
std::vector<Vec> right_kernel(const IntMatrix& m);

// ---- vectors ----
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Int& k, const Vec& a);
Vec axpy(const Int& k, const Vec& x, const Vec& y);  // y + k x
Vec neg(const Vec& a);
Int dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
Int sup_norm(const Vec& a);
Int content(const Vec& a);  // gcd of coordinates
std::string to_string(const Vec& a);
Vec vec_of(std::initializer_list<long long> xs);

bool is_primitive(const Vec& v);
Vec canonical_line(const Vec& v);
bool is_unimodular_summand(const std::vector<Vec>& vs);

// ---- symplectic space with basis a1,b1,...,ag,bg ----
IntMatrix form_matrix(std::size_t g);
Int symplectic_pairing(const Vec& u, const Vec& v, std::size_t g);
Int symplectic_pairing(const Vec& u, const Vec& v);  // g = dim/2
Vec transvection(const Vec& c, const Vec& h, std::size_t g, const Int& e = 1);
IntMatrix gram_matrix(const std::vector<Vec>& vs);

std::vector<Vec> complete_symplectic_basis(const std::vector<Vec>& partial_a,
                                           const std::vector<Vec>& partial_b, std::size_t g);

// ---- small-integer fast paths ----
// True when every coordinate has |x| <= limit.
bool fits(const Vec& v, std::int64_t limit);
bool fits(const std::vector<Vec>& vs, std::int64_t limit);
std::vector<std::int64_t> to_i64(const Vec& v);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
// gcd of 2x2 minors of two length-n vectors equals 1; caller guarantees |x| <= 2^24.
bool summand2_i64(const std::int64_t* u, const std::int64_t* v, std::size_t n);
// gcd of 3x3 minors equals 1; caller guarantees |x| <= 2^16.
bool summand3_i64(const std::int64_t* u, const std::int64_t* v, const std::int64_t* w,
                  std::size_t n);
std::int64_t pairing_i64(const std::int64_t* u, const std::int64_t* v, std::size_t n);

}  // namespace torelli
