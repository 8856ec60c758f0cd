#include "torelli/intlinalg.hpp"

namespace torelli {

bool is_primitive(const Vec& v)
{
    if (is_zero(v))
        throw Error("zero-vector");
    return content(v) == 1;
}

Vec canonical_line(const Vec& v)
{
    if (is_zero(v))
        throw Error("zero-vector");
    Int g = content(v);
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    for (const auto& x : out)
        if (x != 0) {
            if (x < 0)
                for (auto& y : out)
                    y = -y;
            break;
        }
    return out;
}

bool is_unimodular_summand(const std::vector<Vec>& vs)
{
    if (vs.empty())
        return true;
    std::size_t n = vs[0].size();
    for (const auto& v : vs)
        if (v.size() != n)
            throw Error("dimension-mismatch", "summand test");
    if (vs.size() > n)
        return false;
    if (vs.size() == 1)
        return !is_zero(vs[0]) && content(vs[0]) == 1;
    if (vs.size() == 2 && fits(vs, std::int64_t(1) << 24)) {
        auto u = to_i64(vs[0]), v = to_i64(vs[1]);
        return summand2_i64(u.data(), v.data(), n);
    }
    if (vs.size() == 3 && fits(vs, std::int64_t(1) << 16)) {
        auto u = to_i64(vs[0]), v = to_i64(vs[1]), w = to_i64(vs[2]);
        return summand3_i64(u.data(), v.data(), w.data(), n);
    }
    SmithDecomposition s = smith_normal_form(IntMatrix::from_rows(vs, n));
    if (s.rank != vs.size())
        return false;
    for (const auto& d : s.invariants)
        if (d != 1)
            return false;
    return true;
}

IntMatrix form_matrix(std::size_t g)
{
    IntMatrix j(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        j(2 * i, 2 * i + 1) = 1;
        j(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

Int symplectic_pairing(const Vec& u, const Vec& v, std::size_t g)
{
    if (u.size() != 2 * g || v.size() != 2 * g)
        throw Error("dimension-mismatch", "pairing expects dimension " + std::to_string(2 * g));
    Int s = 0;
    for (std::size_t i = 0; i < g; ++i)
        s += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
    return s;
}

Int symplectic_pairing(const Vec& u, const Vec& v)
{
    if (u.size() % 2 != 0)
        throw Error("dimension-mismatch", "odd dimension");
    return symplectic_pairing(u, v, u.size() / 2);
}

Vec transvection(const Vec& c, const Vec& h, std::size_t g, const Int& e)
{
    if (c.size() != 2 * g)
        throw Error("dimension-mismatch", "transvection class");
    return axpy(e * symplectic_pairing(h, c, g), c, h);
}

IntMatrix gram_matrix(const std::vector<Vec>& vs)
{
    IntMatrix m(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            m(i, j) = symplectic_pairing(vs[i], vs[j]);
    return m;
}

namespace {

// x with <v_i, x> = t_i for every constraint row.
Vec solve_pairings(const std::vector<Vec>& vs, const std::vector<Int>& targets, std::size_t g)
{
    IntMatrix f(vs.size(), 2 * g);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t i = 0; i < g; ++i) {
            // <v, x> = sum v_a x_b - v_b x_a
            f(r, 2 * i + 1) = vs[r][2 * i];
            f(r, 2 * i) = -vs[r][2 * i + 1];
        }
    auto x = solve_right(f, Vec(targets.begin(), targets.end()));
    if (!x)
        throw Error("not-extendable-input", "no integral dual partner");
    return *x;
}

}  // namespace

std::vector<Vec> complete_symplectic_basis(const std::vector<Vec>& partial_a,
                                           const std::vector<Vec>& partial_b, std::size_t g)
{
    std::size_t k = std::max(partial_a.size(), partial_b.size());
    if (k > g)
        throw Error("not-extendable-input", "more inputs than genus");
    std::vector<Vec> inputs;
    for (const auto* list : {&partial_a, &partial_b})
        for (const auto& v : *list) {
            if (v.size() != 2 * g)
                throw Error("not-extendable-input", "dimension mismatch");
            if (is_zero(v) || content(v) != 1)
                throw Error("not-extendable-input", "non-primitive input " + to_string(v));
            inputs.push_back(v);
        }
    auto pair = [&](const Vec& u, const Vec& v) { return symplectic_pairing(u, v, g); };
    for (std::size_t i = 0; i < partial_a.size(); ++i)
        for (std::size_t j = 0; j < partial_a.size(); ++j)
            if (pair(partial_a[i], partial_a[j]) != 0)
                throw Error("not-extendable-input", "a-vectors not isotropic");
    for (std::size_t i = 0; i < partial_b.size(); ++i)
        for (std::size_t j = 0; j < partial_b.size(); ++j)
            if (pair(partial_b[i], partial_b[j]) != 0)
                throw Error("not-extendable-input", "b-vectors not isotropic");
    for (std::size_t i = 0; i < partial_a.size(); ++i)
        for (std::size_t j = 0; j < partial_b.size(); ++j)
            if (pair(partial_a[i], partial_b[j]) != (i == j ? 1 : 0))
                throw Error("not-extendable-input",
                            "<a" + std::to_string(i + 1) + ",b" + std::to_string(j + 1) + "> wrong");
    if (!is_unimodular_summand(inputs))
        throw Error("not-extendable-input", "inputs do not span a summand");

    std::vector<std::optional<Vec>> slot(2 * g);
    for (std::size_t i = 0; i < partial_a.size(); ++i)
        slot[2 * i] = partial_a[i];
    for (std::size_t i = 0; i < partial_b.size(); ++i)
        slot[2 * i + 1] = partial_b[i];

    auto filled = [&](std::size_t skip) {
        std::vector<Vec> out;
        for (std::size_t s = 0; s < slot.size(); ++s)
            if (s != skip && slot[s])
                out.push_back(*slot[s]);
        return out;
    };

    for (std::size_t i = 0; i < k; ++i) {
        bool ha = bool(slot[2 * i]), hb = bool(slot[2 * i + 1]);
        if (ha && hb)
            continue;
        std::size_t known = ha ? 2 * i : 2 * i + 1;
        std::vector<Vec> cons{*slot[known]};
        std::vector<Int> tgt{ha ? Int(1) : Int(-1)};
        for (auto& v : filled(known)) {
            cons.push_back(v);
            tgt.push_back(0);
        }
        slot[ha ? 2 * i + 1 : 2 * i] = solve_pairings(cons, tgt, g);
    }
    for (std::size_t i = k; i < g; ++i) {
        std::vector<Vec> used = filled(slot.size());
        IntMatrix f(used.size(), 2 * g);
        for (std::size_t r = 0; r < used.size(); ++r)
            for (std::size_t c = 0; c < g; ++c) {
                f(r, 2 * c + 1) = used[r][2 * c];
                f(r, 2 * c) = -used[r][2 * c + 1];
            }
        std::vector<Vec> ker = right_kernel(f);
        if (ker.empty())
            throw Error("not-extendable-input", "empty complement");
        Vec a = ker[0];
        std::vector<Vec> cons{a};
        std::vector<Int> tgt{1};
        for (auto& v : used) {
            cons.push_back(v);
            tgt.push_back(0);
        }
        slot[2 * i] = a;
        slot[2 * i + 1] = solve_pairings(cons, tgt, g);
    }

    std::vector<Vec> basis;
    for (auto& s : slot)
        basis.push_back(*s);
    if (!(gram_matrix(basis) == form_matrix(g)))
        throw Error("completion-broken", "Gram check");
    return basis;
}

}  // namespace torelli
