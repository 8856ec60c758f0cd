#include <algorithm>
#include <numeric>
#include <set>

#include "torelli/tsur.hpp"

namespace torelli {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

bool meets(const std::vector<Label>& a, const std::vector<Label>& b)
{
    for (Label x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
            return true;
    return false;
}

bool subset(const std::vector<Label>& a, const std::vector<Label>& b)
{
    for (Label x : a)
        if (std::find(b.begin(), b.end(), x) == b.end())
            return false;
    return true;
}

const Block* containing_block(const Partition& p, const std::vector<Label>& labels)
{
    for (const auto& blk : p)
        if (subset(labels, blk))
            return &blk;
    return nullptr;
}

void check_partition(const std::vector<Label>& labels, const Partition& p, const char* what)
{
    try {
        make_surface(0, labels, p);
    } catch (const Error& e) {
        throw Error("label-mismatch", std::string(what) + ": " + e.what());
    }
}

}  // namespace

long long euler_characteristic(const SurfaceShell& s)
{
    return 2 - 2LL * s.genus - static_cast<long long>(s.boundaries.size());
}

long long euler_characteristic(const Component& c)
{
    return 2 - 2LL * c.genus - static_cast<long long>(c.B.size() + c.Bprime.size());
}

void validate(const EmbeddingCombinatorics& e)
{
    auto distinct = [](const std::vector<Label>& v) {
        return std::set<Label>(v.begin(), v.end()).size() == v.size();
    };
    if (e.source.genus < 0 || e.target.genus < 0)
        throw Error("invalid-embedding", "negative genus");
    if (!distinct(e.source.boundaries) || !distinct(e.target.boundaries))
        throw Error("invalid-embedding", "duplicate boundary label");
    std::multiset<Label> bp, b;
    long long chi = euler_characteristic(e.source);
    for (const auto& c : e.components) {
        if (c.genus < 0)
            throw Error("invalid-embedding", "negative component genus");
        bp.insert(c.Bprime.begin(), c.Bprime.end());
        b.insert(c.B.begin(), c.B.end());
        chi += euler_characteristic(c);
    }
    if (std::vector<Label>(bp.begin(), bp.end()) !=
        [&] {
            auto v = e.source.boundaries;
            std::sort(v.begin(), v.end());
            return v;
        }())
        throw Error("invalid-embedding", "B' sets must partition the source boundary");
    if (std::vector<Label>(b.begin(), b.end()) !=
        [&] {
            auto v = e.target.boundaries;
            std::sort(v.begin(), v.end());
            return v;
        }())
        throw Error("invalid-embedding", "B sets must partition the target boundary");
    if (chi != euler_characteristic(e.target))
        throw Error("invalid-embedding", "Euler characteristics do not add up");
}

EmbeddingCombinatorics normalized(EmbeddingCombinatorics e)
{
    for (auto& c : e.components) {
        std::sort(c.B.begin(), c.B.end());
        std::sort(c.Bprime.begin(), c.Bprime.end());
    }
    std::sort(e.components.begin(), e.components.end(), [](const Component& x, const Component& y) {
        return std::tie(x.Bprime, x.B, x.genus) < std::tie(y.Bprime, y.B, y.genus);
    });
    return e;
}

bool is_tsur_morphism(const EmbeddingCombinatorics& e, const Partition& p1, const Partition& p2)
{
    validate(e);
    check_partition(e.source.boundaries, p1, "P1");
    check_partition(e.target.boundaries, p2, "P2");
    for (const auto& c : e.components)
        if (!c.Bprime.empty() && !containing_block(p1, c.Bprime))
            return false;
    for (const auto& q : p2) {
        std::vector<Label> u;
        std::size_t touching = 0;
        for (const auto& c : e.components)
            if (meets(c.B, q)) {
                ++touching;
                u.insert(u.end(), c.Bprime.begin(), c.Bprime.end());
            }
        if (touching > 1 && !u.empty() && !containing_block(p1, u))
            return false;
    }
    return true;
}

RetractionMap retraction_map(const EmbeddingCombinatorics& e, const Partition& p1,
                             const Partition& p2)
{
    if (!is_tsur_morphism(e, p1, p2))
        throw Error("not-a-morphism");
    Partition n1 = normalize_partition(e.source.boundaries, p1);
    Partition n2 = normalize_partition(e.target.boundaries, p2);
    RetractionMap out;
    for (const auto& q : n2) {
        std::vector<Label> u;
        for (const auto& c : e.components)
            if (meets(c.B, q))
                u.insert(u.end(), c.Bprime.begin(), c.Bprime.end());
        if (u.empty())
            continue;
        out.emplace_back(q, *containing_block(n1, u));
    }
    return out;
}

Partition induced_partition_from_embedding(const EmbeddingCombinatorics& e)
{
    validate(e);
    Partition p;
    for (const auto& c : e.components)
        if (!c.Bprime.empty())
            p.push_back(c.Bprime);
    return normalize_partition(e.source.boundaries, p);
}

Partition restriction_partition(const EmbeddingCombinatorics& e, const Partition& p2)
{
    validate(e);
    check_partition(e.target.boundaries, p2, "P2");
    UnionFind uf(e.components.size());
    for (const auto& q : p2) {
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < e.components.size(); ++i)
            if (meets(e.components[i].B, q)) {
                if (first)
                    uf.unite(*first, i);
                else
                    first = i;
            }
    }
    std::map<std::size_t, Block> groups;
    for (std::size_t i = 0; i < e.components.size(); ++i) {
        auto& blk = groups[uf.find(i)];
        blk.insert(blk.end(), e.components[i].Bprime.begin(), e.components[i].Bprime.end());
    }
    Partition p;
    for (auto& [_, blk] : groups)
        if (!blk.empty())
            p.push_back(blk);
    return normalize_partition(e.source.boundaries, p);
}

EmbeddingCombinatorics compose(const EmbeddingCombinatorics& first,
                               const EmbeddingCombinatorics& second)
{
    validate(first);
    validate(second);
    if (!(first.target == second.source))
        throw Error("shell-mismatch", "middle surfaces differ");
    std::size_t n1 = first.components.size(), n2 = second.components.size();
    UnionFind uf(n1 + n2);
    for (Label m : first.target.boundaries) {
        std::size_t i = n1, j = n2;
        for (std::size_t k = 0; k < n1; ++k)
            if (std::find(first.components[k].B.begin(), first.components[k].B.end(), m) !=
                first.components[k].B.end())
                i = k;
        for (std::size_t k = 0; k < n2; ++k)
            if (std::find(second.components[k].Bprime.begin(), second.components[k].Bprime.end(),
                          m) != second.components[k].Bprime.end())
                j = k;
        uf.unite(i, n1 + j);
    }
    struct Acc {
        long long chi = 0;
        Component c;
    };
    std::map<std::size_t, Acc> groups;
    for (std::size_t k = 0; k < n1 + n2; ++k) {
        const Component& c = k < n1 ? first.components[k] : second.components[k - n1];
        auto& acc = groups[uf.find(k)];
        acc.chi += euler_characteristic(c);
        if (k < n1)
            acc.c.Bprime.insert(acc.c.Bprime.end(), c.Bprime.begin(), c.Bprime.end());
        else
            acc.c.B.insert(acc.c.B.end(), c.B.begin(), c.B.end());
    }
    EmbeddingCombinatorics out;
    out.source = first.source;
    out.target = second.target;
    for (auto& [_, acc] : groups) {
        long long twice = 2 - acc.chi - static_cast<long long>(acc.c.B.size() + acc.c.Bprime.size());
        if (twice < 0 || twice % 2 != 0)
            throw Error("invalid-embedding", "merged component has no valid genus");
        acc.c.genus = static_cast<int>(twice / 2);
        out.components.push_back(acc.c);
    }
    out = normalized(out);
    validate(out);
    return out;
}

EmbeddingCombinatorics identity_embedding(const SurfaceShell& s)
{
    EmbeddingCombinatorics e;
    e.source = e.target = s;
    for (Label j : s.boundaries)
        e.components.push_back({0, {j}, {j}});
    return e;
}

EmbeddingCombinatorics capping_embedding(const PartitionedSurface& s)
{
    EmbeddingCombinatorics e;
    e.source = {s.genus, s.boundaries};
    int g = s.genus;
    for (const auto& blk : s.partition) {
        g += static_cast<int>(blk.size()) - 1;
        e.components.push_back({0, {}, blk});
    }
    e.target = {g, {}};
    return e;
}

EmbeddingCombinatorics disc_capping(const SurfaceShell& s, Label b)
{
    if (std::find(s.boundaries.begin(), s.boundaries.end(), b) == s.boundaries.end())
        throw Error("unknown-label", std::to_string(b));
    EmbeddingCombinatorics e;
    e.source = s;
    e.target.genus = s.genus;
    for (Label j : s.boundaries)
        if (j != b) {
            e.target.boundaries.push_back(j);
            e.components.push_back({0, {j}, {j}});
        }
    e.components.push_back({0, {}, {b}});
    return e;
}

TwistWord CompositeModel::push(const TwistWord& w) const
{
    TwistWord out = push_word(capping, w);
    for (auto& f : out.factors)
        f.cls.resize(2 * closed_genus);
    return out;
}

CompositeModel composite_model(const EmbeddingCombinatorics& e, const Partition& p2)
{
    CompositeModel m;
    m.restricted = restriction_partition(e, p2);
    PartitionedSurface src = make_surface(e.source.genus, e.source.boundaries, m.restricted);
    m.capping = standard_capping(src);
    long long chi = euler_characteristic(e.target);
    for (const auto& q : p2)
        chi += 2 - static_cast<long long>(q.size());
    long long twice = 2 - chi;
    if (twice < 0 || twice % 2 != 0)
        throw Error("invalid-embedding", "capped target has no valid genus");
    m.closed_genus = static_cast<std::size_t>(twice / 2);
    if (m.closed_genus < m.capping.closed_genus)
        throw Error("invalid-embedding", "capped target smaller than the source model");
    m.extra_genus = m.closed_genus - m.capping.closed_genus;
    return m;
}

std::optional<FunctorialityWitness> find_witness(const EmbeddingCombinatorics& e,
                                                 const Partition& p1, const Partition& p2)
{
    check_partition(e.source.boundaries, p1, "P1");
    CompositeModel model = composite_model(e, p2);
    PartitionedSurface s1 = make_surface(e.source.genus, e.source.boundaries, p1);
    H1PModule m1(s1);
    H1PModule closed(closed_surface(model.closed_genus));
    for (const auto& blk : s1.partition) {
        TwistWord w = single_twist(block_sum(s1, blk));
        if (!acts_trivially(w, m1))
            continue;
        if (!acts_trivially(model.push(w), closed))
            return FunctorialityWitness{w, blk};
    }
    return std::nullopt;
}

}  // namespace torelli
