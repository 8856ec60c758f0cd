#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "torelli/contraction.hpp"

namespace torelli {

namespace {

// Nearest-integer Gauss reduction of each row against the others; stops when nothing shrinks.
void size_reduce(std::vector<Vec>& rows, const std::vector<Vec>& fixed)
{
    for (int pass = 0; pass < 200; ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto reduce_by = [&](const Vec& u) {
                Int nu = dot(u, u);
                if (nu == 0)
                    return;
                Int d = dot(rows[i], u);
                if (2 * abs(d) <= nu)
                    return;
                Int q = (2 * abs(d) + nu) / (2 * nu);
                if (d < 0)
                    q = -q;
                if (q == 0)
                    return;
                rows[i] = axpy(-q, u, rows[i]);
                changed = true;
            };
            for (const auto& u : fixed)
                reduce_by(u);
            for (std::size_t j = 0; j < rows.size(); ++j)
                if (j != i)
                    reduce_by(rows[j]);
        }
        if (!changed)
            return;
    }
}

void pairing_row(const Vec& u, Vec& row)
{
    std::size_t g = u.size() / 2;
    for (std::size_t i = 0; i < g; ++i) {
        row[2 * i + 1] = u[2 * i];
        row[2 * i] = -u[2 * i + 1];
    }
}

}  // namespace

std::optional<Vec> QuotientLattice::coords(const Vec& x) const
{
    auto c = solve_left(full, x);
    if (!c)
        return std::nullopt;
    return Vec(c->begin() + static_cast<std::ptrdiff_t>(core.size()), c->end());
}

Vec QuotientLattice::lift(const Vec& w) const
{
    Vec z = zero_vec(n);
    for (std::size_t t = 0; t < w.size(); ++t)
        if (w[t] != 0)
            z = axpy(w[t], complement[t], z);
    return z;
}

QuotientLattice make_quotient(std::size_t g, const std::vector<Vec>& orth,
                              const std::vector<std::size_t>& zero_axes,
                              const std::vector<Vec>& core)
{
    std::size_t n = 2 * g;
    std::vector<Vec> rows;
    for (const auto& u : orth) {
        if (u.size() != n)
            throw Error("dimension-mismatch", "orthogonality vector");
        Vec r(n);
        pairing_row(u, r);
        rows.push_back(r);
    }
    for (std::size_t k : zero_axes) {
        if (k >= n)
            throw Error("bad-index", std::to_string(k));
        rows.push_back(unit_vec(n, k));
    }
    IntMatrix F = rows.empty() ? IntMatrix(0, n) : IntMatrix::from_rows(rows, n);
    std::vector<Vec> K = right_kernel(F);
    size_reduce(K, {});
    IntMatrix Km = IntMatrix::from_rows(K, n);
    SmithDecomposition ks = smith_normal_form(Km);

    std::vector<Vec> C;
    for (const auto& c : core) {
        auto coords = solve_left(ks, c);
        if (!coords)
            throw Error("core-outside", to_string(c));
        C.push_back(*coords);
    }
    QuotientLattice q;
    q.n = n;
    q.core = core;
    std::vector<Vec> comp;
    if (C.empty()) {
        comp = K;
    } else {
        SmithDecomposition cs = smith_normal_form(IntMatrix::from_rows(C, K.size()));
        if (cs.rank != C.size())
            throw Error("core-not-summand", "core vectors are dependent");
        for (const auto& d : cs.invariants)
            if (d != 1)
                throw Error("core-not-summand", "core does not split off");
        IntMatrix Kp = cs.Vinv * Km;
        for (std::size_t i = C.size(); i < K.size(); ++i)
            comp.push_back(Kp.row(i));
    }
    size_reduce(comp, core);
    q.complement = comp;
    std::vector<Vec> all = core;
    all.insert(all.end(), comp.begin(), comp.end());
    q.full = smith_normal_form(IntMatrix::from_rows(all, n));
    if (q.full.rank != all.size())
        throw Error("quotient-broken", "basis lost rank");
    q.gram = IntMatrix(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp.size(); ++j)
            q.gram(i, j) = symplectic_pairing(comp[i], comp[j], g);
    return q;
}

namespace {

using I64 = std::int64_t;

struct Node {
    Vec w;
    std::vector<I64> wi;  // small copy
    std::vector<I64> hi;  // gram * w, small copy
    Vec h;                // gram * w, exact
    bool small = false;
};

struct Graph {
    const QuotientLattice& q;
    std::vector<Node> nodes;
    std::map<Vec, std::size_t> index;
    bool gram_small = false;

    explicit Graph(const QuotientLattice& ql) : q(ql)
    {
        gram_small = q.qdim() <= 8;
        for (const auto& x : q.gram.entries)
            if (x > 1024 || x < -1024)
                gram_small = false;
    }

    std::size_t add(const Vec& w)
    {
        auto it = index.find(w);
        if (it != index.end())
            return it->second;
        Node nd;
        nd.w = w;
        nd.h = times_col(q.gram, w);
        nd.small = gram_small && fits(w, 1 << 20);
        if (nd.small) {
            nd.wi = to_i64(w);
            nd.hi = to_i64(nd.h);
        }
        index.emplace(w, nodes.size());
        nodes.push_back(std::move(nd));
        return nodes.size() - 1;
    }

    bool adjacent(std::size_t i, std::size_t j) const
    {
        const Node& a = nodes[i];
        const Node& b = nodes[j];
        std::size_t d = a.w.size();
        if (a.small && b.small) {
            I64 s = 0;
            for (std::size_t t = 0; t < d; ++t)
                s += a.wi[t] * b.hi[t];
            if (s != 0)
                return false;
            return summand2_i64(a.wi.data(), b.wi.data(), d);
        }
        if (dot(a.w, b.h) != 0)
            return false;
        return is_unimodular_summand({a.w, b.w});
    }
};

void box_nodes(Graph& gr, std::size_t d, I64 c)
{
    std::vector<I64> x(d, -c);
    for (;;) {
        bool canon = false, zero = true;
        I64 g = 0;
        for (I64 v : x) {
            if (v != 0 && zero) {
                canon = v > 0;
                zero = false;
            }
            g = std::gcd(g, v);
        }
        if (!zero && canon && g == 1) {
            Vec w(d);
            for (std::size_t t = 0; t < d; ++t)
                w[t] = x[t];
            gr.add(w);
        }
        std::size_t i = d;
        bool done = true;
        while (i > 0) {
            --i;
            if (x[i] < c) {
                ++x[i];
                done = false;
                break;
            }
            x[i] = -c;
        }
        if (done)
            return;
    }
}

double box_size(std::size_t d, I64 c)
{
    double s = 1;
    for (std::size_t t = 0; t < d; ++t)
        s *= 2.0 * static_cast<double>(c) + 1;
    return s / 2;
}

}  // namespace

std::optional<std::vector<Vec>> link_path(const QuotientLattice& q, const Vec& x, const Vec& y,
                                          const SearchOptions& opt, std::string* diag)
{
    std::size_t d = q.qdim();
    if (x.size() != d || y.size() != d)
        throw Error("dimension-mismatch", "quotient coordinates");
    if (is_zero(x) || is_zero(y) || content(x) != 1 || content(y) != 1)
        throw Error("not-in-link", "endpoint does not span a simplex with the core");
    Vec xs = canonical_line(x), ys = canonical_line(y);
    std::ostringstream log;
    log << "quotient dim " << d;
    I64 c = std::max<I64>(1, opt.start_box);
    for (;;) {
        if (box_size(d, c) > static_cast<double>(opt.max_nodes))
            break;
        Graph gr(q);
        std::size_t sx = gr.add(xs), sy = gr.add(ys);
        box_nodes(gr, d, c);
        std::size_t nn = gr.nodes.size();
        log << "; box " << c << " nodes " << nn;
        if (sx == sy) {
            for (std::size_t j = 0; j < nn; ++j)
                if (j != sx && gr.adjacent(sx, j))
                    return std::vector<Vec>{x, gr.nodes[j].w, y};
            c *= 2;
            continue;
        }
        std::vector<std::size_t> prev(nn, nn);
        std::vector<char> seen(nn, 0);
        std::deque<std::size_t> dq{sx};
        seen[sx] = 1;
        bool found = false;
        while (!dq.empty() && !found) {
            std::size_t u = dq.front();
            dq.pop_front();
            for (std::size_t v = 0; v < nn; ++v) {
                if (seen[v] || !gr.adjacent(u, v))
                    continue;
                seen[v] = 1;
                prev[v] = u;
                if (v == sy) {
                    found = true;
                    break;
                }
                dq.push_back(v);
            }
        }
        if (found) {
            std::vector<Vec> path;
            for (std::size_t v = sy; v != sx; v = prev[v])
                path.push_back(gr.nodes[v].w);
            path.push_back(xs);
            std::reverse(path.begin(), path.end());
            path.front() = x;
            path.back() = y;
            return path;
        }
        c *= 2;
    }
    if (diag)
        *diag = log.str();
    return std::nullopt;
}

}  // namespace torelli
