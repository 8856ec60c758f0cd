#include "torelli/intlinalg.hpp"

namespace torelli {

namespace {

// Working state: D = U * M * V, with inverses tracked through every elementary operation.
struct Smith {
    IntMatrix D, U, Uinv, V, Vinv;

    explicit Smith(const IntMatrix& m)
        : D(m), U(IntMatrix::identity(m.rows)), Uinv(IntMatrix::identity(m.rows)),
          V(IntMatrix::identity(m.cols)), Vinv(IntMatrix::identity(m.cols))
    {
    }

    // row i += q * row j
    void row_add(std::size_t i, std::size_t j, const Int& q)
    {
        for (std::size_t c = 0; c < D.cols; ++c)
            D(i, c) += q * D(j, c);
        for (std::size_t c = 0; c < U.cols; ++c)
            U(i, c) += q * U(j, c);
        for (std::size_t r = 0; r < Uinv.rows; ++r)
            Uinv(r, j) -= q * Uinv(r, i);
    }

    void row_swap(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < D.cols; ++c)
            std::swap(D(i, c), D(j, c));
        for (std::size_t c = 0; c < U.cols; ++c)
            std::swap(U(i, c), U(j, c));
        for (std::size_t r = 0; r < Uinv.rows; ++r)
            std::swap(Uinv(r, i), Uinv(r, j));
    }

    void row_negate(std::size_t i)
    {
        for (std::size_t c = 0; c < D.cols; ++c)
            D(i, c) = -D(i, c);
        for (std::size_t c = 0; c < U.cols; ++c)
            U(i, c) = -U(i, c);
        for (std::size_t r = 0; r < Uinv.rows; ++r)
            Uinv(r, i) = -Uinv(r, i);
    }

    // col j += q * col i
    void col_add(std::size_t j, std::size_t i, const Int& q)
    {
        for (std::size_t r = 0; r < D.rows; ++r)
            D(r, j) += q * D(r, i);
        for (std::size_t r = 0; r < V.rows; ++r)
            V(r, j) += q * V(r, i);
        for (std::size_t c = 0; c < Vinv.cols; ++c)
            Vinv(i, c) -= q * Vinv(j, c);
    }

    void col_swap(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < D.rows; ++r)
            std::swap(D(r, i), D(r, j));
        for (std::size_t r = 0; r < V.rows; ++r)
            std::swap(V(r, i), V(r, j));
        for (std::size_t c = 0; c < Vinv.cols; ++c)
            std::swap(Vinv(i, c), Vinv(j, c));
    }

    void run()
    {
        std::size_t n = std::min(D.rows, D.cols);
        for (std::size_t t = 0; t < n; ++t) {
            if (!pick_global_pivot(t))
                return;
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < D.rows; ++i)
                    if (D(i, t) != 0) {
                        row_add(i, t, -(D(i, t) / D(t, t)));
                        if (D(i, t) != 0)
                            clean = false;
                    }
                for (std::size_t j = t + 1; j < D.cols; ++j)
                    if (D(t, j) != 0) {
                        col_add(j, t, -(D(t, j) / D(t, t)));
                        if (D(t, j) != 0)
                            clean = false;
                    }
                if (!clean) {
                    pick_cross_pivot(t);
                    continue;
                }
                bool divisible = true;
                for (std::size_t i = t + 1; i < D.rows && divisible; ++i)
                    for (std::size_t j = t + 1; j < D.cols; ++j)
                        if (D(i, j) % D(t, t) != 0) {
                            row_add(t, i, 1);
                            divisible = false;
                            break;
                        }
                if (divisible)
                    break;
            }
            if (D(t, t) < 0)
                row_negate(t);
        }
    }

    // Smallest nonzero |entry| in the trailing block, ties broken by (row, col).
    bool pick_global_pivot(std::size_t t)
    {
        bool found = false;
        std::size_t bi = 0, bj = 0;
        Int best;
        for (std::size_t i = t; i < D.rows; ++i)
            for (std::size_t j = t; j < D.cols; ++j) {
                if (D(i, j) == 0)
                    continue;
                Int a = abs(D(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        if (!found)
            return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    // After a partial sweep: smallest nonzero in column t (rows >= t) or row t (cols > t).
    void pick_cross_pivot(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        Int best = abs(D(t, t));
        bool have = D(t, t) != 0;
        for (std::size_t i = t + 1; i < D.rows; ++i)
            if (D(i, t) != 0 && (!have || abs(D(i, t)) < best)) {
                best = abs(D(i, t));
                bi = i;
                bj = t;
                have = true;
            }
        for (std::size_t j = t + 1; j < D.cols; ++j)
            if (D(t, j) != 0 && (!have || abs(D(t, j)) < best)) {
                best = abs(D(t, j));
                bi = t;
                bj = j;
                have = true;
            }
        row_swap(t, bi);
        col_swap(t, bj);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    Smith s(m);
    s.run();
    SmithDecomposition out;
    out.U = std::move(s.U);
    out.D = std::move(s.D);
    out.V = std::move(s.V);
    out.Uinv = std::move(s.Uinv);
    out.Vinv = std::move(s.Vinv);
    std::size_t n = std::min(out.D.rows, out.D.cols);
    for (std::size_t i = 0; i < n && out.D(i, i) != 0; ++i)
        out.invariants.push_back(out.D(i, i));
    out.rank = out.invariants.size();
    return out;
}

std::optional<Vec> solve_left(const SmithDecomposition& s, const Vec& x)
{
    // c M = x  <=>  (c Uinv) D = x V
    Vec xv = row_times(x, s.V);
    Vec y(s.D.rows);
    for (std::size_t j = 0; j < xv.size(); ++j) {
        if (j < s.rank) {
            if (xv[j] % s.invariants[j] != 0)
                return std::nullopt;
            y[j] = xv[j] / s.invariants[j];
        } else if (xv[j] != 0) {
            return std::nullopt;
        }
    }
    return row_times(y, s.U);
}

std::optional<Vec> solve_left(const IntMatrix& m, const Vec& x)
{
    return solve_left(smith_normal_form(m), x);
}

std::optional<Vec> solve_right(const SmithDecomposition& s, const Vec& t)
{
    // M x = t  <=>  D (Vinv x) = U t
    Vec ut = times_col(s.U, t);
    Vec z(s.D.cols);
    for (std::size_t i = 0; i < ut.size(); ++i) {
        if (i < s.rank) {
            if (ut[i] % s.invariants[i] != 0)
                return std::nullopt;
            z[i] = ut[i] / s.invariants[i];
        } else if (ut[i] != 0) {
            return std::nullopt;
        }
    }
    return times_col(s.V, z);
}

std::optional<Vec> solve_right(const IntMatrix& m, const Vec& t)
{
    return solve_right(smith_normal_form(m), t);
}

std::vector<Vec> right_kernel(const IntMatrix& m)
{
    SmithDecomposition s = smith_normal_form(m);
    std::vector<Vec> out;
    for (std::size_t j = s.rank; j < m.cols; ++j)
        out.push_back(s.V.col(j));
    return out;
}

}  // namespace torelli
