#include "torelli/intlinalg.hpp"

#include <numeric>
#include <sstream>

namespace torelli {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rs, std::size_t ncols)
{
    IntMatrix m(rs.size(), ncols);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].size() != ncols)
            throw Error("dimension-mismatch", "row length " + std::to_string(rs[i].size()));
        for (std::size_t j = 0; j < ncols; ++j)
            m(i, j) = rs[i][j];
    }
    return m;
}

Vec IntMatrix::row(std::size_t i) const
{
    return Vec(entries.begin() + i * cols, entries.begin() + (i + 1) * cols);
}

Vec IntMatrix::col(std::size_t j) const
{
    Vec c(rows);
    for (std::size_t i = 0; i < rows; ++i)
        c[i] = (*this)(i, j);
    return c;
}

std::vector<Vec> IntMatrix::row_list() const
{
    std::vector<Vec> out;
    out.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i)
        out.push_back(row(i));
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols != b.rows)
        throw Error("dimension-mismatch", "matrix product");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c(i, j) += x * b(k, j);
        }
    return c;
}

Vec row_times(const Vec& x, const IntMatrix& m)
{
    if (x.size() != m.rows)
        throw Error("dimension-mismatch", "row vector times matrix");
    Vec out(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            out[j] += x[i] * m(i, j);
    }
    return out;
}

Vec times_col(const IntMatrix& m, const Vec& x)
{
    if (x.size() != m.cols)
        throw Error("dimension-mismatch", "matrix times column vector");
    Vec out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out[i] += m(i, j) * x[j];
    return out;
}

Int determinant(const IntMatrix& m)
{
    if (m.rows != m.cols)
        throw Error("dimension-mismatch", "determinant of non-square matrix");
    std::size_t n = m.rows;
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v(n);
    v.at(i) = 1;
    return v;
}

static void check_same(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw Error("dimension-mismatch",
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

Vec add(const Vec& a, const Vec& b)
{
    check_same(a, b);
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

Vec sub(const Vec& a, const Vec& b)
{
    check_same(a, b);
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] - b[i];
    return c;
}

Vec scale(const Int& k, const Vec& a)
{
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = k * a[i];
    return c;
}

Vec axpy(const Int& k, const Vec& x, const Vec& y)
{
    check_same(x, y);
    Vec c = y;
    if (k != 0)
        for (std::size_t i = 0; i < x.size(); ++i)
            c[i] += k * x[i];
    return c;
}

Vec neg(const Vec& a)
{
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = -a[i];
    return c;
}

Int dot(const Vec& a, const Vec& b)
{
    check_same(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& a)
{
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

Int sup_norm(const Vec& a)
{
    Int m = 0;
    for (const auto& x : a) {
        Int y = abs(x);
        if (y > m)
            m = y;
    }
    return m;
}

Int content(const Vec& a)
{
    Int g = 0;
    for (const auto& x : a)
        g = gcd(g, x);
    return abs(g);
}

std::string to_string(const Vec& a)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}

Vec vec_of(std::initializer_list<long long> xs)
{
    Vec v;
    v.reserve(xs.size());
    for (long long x : xs)
        v.emplace_back(x);
    return v;
}

bool fits(const Vec& v, std::int64_t limit)
{
    for (const auto& x : v)
        if (x > limit || x < -limit)
            return false;
    return true;
}

bool fits(const std::vector<Vec>& vs, std::int64_t limit)
{
    for (const auto& v : vs)
        if (!fits(v, limit))
            return false;
    return true;
}

std::vector<std::int64_t> to_i64(const Vec& v)
{
    std::vector<std::int64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = static_cast<std::int64_t>(v[i]);
    return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

bool summand2_i64(const std::int64_t* u, const std::int64_t* v, std::size_t n)
{
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            g = std::gcd(g, u[i] * v[j] - u[j] * v[i]);
            if (g == 1)
                return true;
        }
    return false;
}

bool summand3_i64(const std::int64_t* u, const std::int64_t* v, const std::int64_t* w,
                  std::size_t n)
{
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::int64_t mij = v[i] * w[j] - v[j] * w[i];
            for (std::size_t k = j + 1; k < n; ++k) {
                std::int64_t d = u[i] * (v[j] * w[k] - v[k] * w[j]) -
                                 u[j] * (v[i] * w[k] - v[k] * w[i]) + u[k] * mij;
                g = std::gcd(g, d);
                if (g == 1)
                    return true;
            }
        }
    return false;
}

std::int64_t pairing_i64(const std::int64_t* u, const std::int64_t* v, std::size_t n)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i + 1 < n; i += 2)
        s += u[i] * v[i + 1] - u[i + 1] * v[i];
    return s;
}

}  // namespace torelli
