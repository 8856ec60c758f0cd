#include <algorithm>
#include <functional>
#include <set>

#include "torelli/psurface.hpp"

namespace torelli {

std::size_t PartitionedSurface::ambient_dim() const
{
    std::size_t nb = n();
    return 2 * static_cast<std::size_t>(genus) + nb + (nb > 0 ? nb - 1 : 0);
}

std::size_t PartitionedSurface::position(Label b) const
{
    auto it = std::find(boundaries.begin(), boundaries.end(), b);
    if (it == boundaries.end())
        throw Error("unknown-label", std::to_string(b));
    return static_cast<std::size_t>(it - boundaries.begin());
}

bool PartitionedSurface::has_label(Label b) const
{
    return std::find(boundaries.begin(), boundaries.end(), b) != boundaries.end();
}

std::size_t PartitionedSurface::block_index(Label b) const
{
    for (std::size_t i = 0; i < partition.size(); ++i)
        if (std::find(partition[i].begin(), partition[i].end(), b) != partition[i].end())
            return i;
    throw Error("unknown-label", std::to_string(b));
}

std::size_t PartitionedSurface::beta_index(Label b) const
{
    return 2 * static_cast<std::size_t>(genus) + position(b);
}

std::optional<std::size_t> PartitionedSurface::h_index(Label b) const
{
    std::size_t p = position(b);
    if (p == 0)
        return std::nullopt;
    return 2 * static_cast<std::size_t>(genus) + n() + p - 1;
}

Partition normalize_partition(const std::vector<Label>& order, Partition p)
{
    auto pos = [&](Label b) {
        auto it = std::find(order.begin(), order.end(), b);
        if (it == order.end())
            throw Error("invalid-surface", "label " + std::to_string(b) + " not a boundary");
        return it - order.begin();
    };
    for (auto& blk : p)
        std::sort(blk.begin(), blk.end(), [&](Label x, Label y) { return pos(x) < pos(y); });
    std::sort(p.begin(), p.end(), [&](const Block& x, const Block& y) {
        if (x.empty() || y.empty())
            return x.size() < y.size();
        return pos(x.front()) < pos(y.front());
    });
    return p;
}

PartitionedSurface make_surface(int genus, std::vector<Label> boundaries, Partition partition)
{
    if (genus < 0)
        throw Error("invalid-surface", "negative genus");
    std::set<Label> seen(boundaries.begin(), boundaries.end());
    if (seen.size() != boundaries.size())
        throw Error("invalid-surface", "duplicate boundary label");
    std::set<Label> covered;
    for (const auto& blk : partition) {
        if (blk.empty())
            throw Error("invalid-surface", "empty block");
        for (Label b : blk) {
            if (!seen.count(b))
                throw Error("invalid-surface", "label " + std::to_string(b) + " not a boundary");
            if (!covered.insert(b).second)
                throw Error("invalid-surface", "label " + std::to_string(b) + " in two blocks");
        }
    }
    if (covered.size() != seen.size())
        throw Error("invalid-surface", "partition does not cover the boundary");
    PartitionedSurface s;
    s.genus = genus;
    s.partition = normalize_partition(boundaries, std::move(partition));
    s.boundaries = std::move(boundaries);
    return s;
}

void check_dim(const PartitionedSurface& s, const Vec& x)
{
    if (x.size() != s.ambient_dim())
        throw Error("dimension-mismatch", "class has " + std::to_string(x.size()) +
                                              " coordinates, surface needs " +
                                              std::to_string(s.ambient_dim()));
}

Vec class_a(const PartitionedSurface& s, std::size_t i)
{
    return unit_vec(s.ambient_dim(), s.a_index(i));
}

Vec class_b(const PartitionedSurface& s, std::size_t i)
{
    return unit_vec(s.ambient_dim(), s.b_index(i));
}

Vec class_beta(const PartitionedSurface& s, Label j)
{
    return unit_vec(s.ambient_dim(), s.beta_index(j));
}

Vec class_h(const PartitionedSurface& s, Label j)
{
    auto k = s.h_index(j);
    return k ? unit_vec(s.ambient_dim(), *k) : zero_vec(s.ambient_dim());
}

Vec block_sum(const PartitionedSurface& s, const Block& p)
{
    Vec r = zero_vec(s.ambient_dim());
    for (Label j : p)
        r[s.beta_index(j)] += 1;
    return r;
}

bool is_closed(const PartitionedSurface& s, const Vec& x)
{
    check_dim(s, x);
    for (std::size_t k = 2 * s.genus + s.n(); k < x.size(); ++k)
        if (x[k] != 0)
            return false;
    return true;
}

Int omega(const PartitionedSurface& s, const Vec& x, const Vec& y)
{
    check_dim(s, x);
    check_dim(s, y);
    Int r = 0;
    std::size_t g = s.genus;
    for (std::size_t i = 0; i < g; ++i)
        r += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
    std::size_t nb = s.n();
    if (nb < 2)
        return r;
    std::size_t beta0 = 2 * g, h0 = 2 * g + nb;
    // Omega(h_j, beta_m) = [m = j] - [m = anchor]
    for (std::size_t p = 1; p < nb; ++p) {
        const Int& xh = x[h0 + p - 1];
        const Int& yh = y[h0 + p - 1];
        if (xh != 0)
            r += xh * (y[beta0 + p] - y[beta0]);
        if (yh != 0)
            r -= yh * (x[beta0 + p] - x[beta0]);
    }
    return r;
}

IntMatrix omega_matrix(const PartitionedSurface& s)
{
    std::size_t d = s.ambient_dim();
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = omega(s, unit_vec(d, i), unit_vec(d, j));
    return m;
}

PartitionedSurface induced_partition_cap_boundary(const PartitionedSurface& s, Label b)
{
    if (!s.has_label(b))
        throw Error("unknown-label", std::to_string(b));
    std::vector<Label> bd;
    for (Label x : s.boundaries)
        if (x != b)
            bd.push_back(x);
    Partition p;
    for (const auto& blk : s.partition) {
        Block nb;
        for (Label x : blk)
            if (x != b)
                nb.push_back(x);
        if (!nb.empty())
            p.push_back(nb);
    }
    return make_surface(s.genus, bd, p);
}

std::vector<Partition> all_partitions(const std::vector<Label>& labels)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == labels.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t k = 0; k < cur.size(); ++k) {
            cur[k].push_back(labels[i]);
            rec(i + 1);
            cur[k].pop_back();
        }
        cur.push_back({labels[i]});
        rec(i + 1);
        cur.pop_back();
    };
    rec(0);
    return out;
}

}  // namespace torelli
