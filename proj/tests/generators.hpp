#pragma once

// Random surfaces, classes and twist words shared by property tests and the acceptance run.

#include <random>

#include "torelli/mapclass.hpp"

namespace gen {

using namespace torelli;
using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Partition random_partition(Rng& rng, const std::vector<Label>& labels)
{
    Partition p;
    for (Label l : labels) {
        std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(p.size())));
        if (k == p.size())
            p.push_back({l});
        else
            p[k].push_back(l);
    }
    return p;
}

inline PartitionedSurface random_surface(Rng& rng, int max_g, int min_n, int max_n)
{
    int g = static_cast<int>(uniform(rng, 0, max_g));
    int n = static_cast<int>(uniform(rng, min_n, max_n));
    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i)
        labels.push_back(i);
    return make_surface(g, labels, random_partition(rng, labels));
}

// Random integer combination of a, b and beta coordinates.
inline Vec random_closed(Rng& rng, const PartitionedSurface& s, long long r = 2)
{
    Vec c = zero_vec(s.ambient_dim());
    for (int i = 0; i < 2 * s.genus; ++i)
        c[i] = uniform(rng, -r, r);
    for (Label b : s.boundaries)
        c[s.beta_index(b)] = uniform(rng, -r, r);
    return c;
}

// Combination of block boundary sums: zero in the module.
inline Vec random_relation(Rng& rng, const PartitionedSurface& s, long long r = 2)
{
    Vec c = zero_vec(s.ambient_dim());
    for (const auto& p : s.partition)
        c = axpy(uniform(rng, -r, r), block_sum(s, p), c);
    return c;
}

inline TwistWord separating_twist(Rng& rng, const PartitionedSurface& s)
{
    return single_twist(random_relation(rng, s), uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1));
}

inline TwistWord bounding_pair_word(Rng& rng, const PartitionedSurface& s)
{
    Vec c1 = random_closed(rng, s);
    Vec c2 = add(c1, random_relation(rng, s));
    Int e = uniform(rng, 1, 3);
    TwistWord w;
    w.factors = {{c1, e}, {c2, -e}};
    w.assertions.disjoint_pairs = {{0, 1}};
    return w;
}

// c2 is drawn until it is algebraically disjoint from c1.
inline TwistWord random_sip(Rng& rng, const PartitionedSurface& s)
{
    Vec c1 = random_closed(rng, s);
    for (;;) {
        Vec c2 = random_closed(rng, s);
        if (omega(s, c1, c2) == 0)
            return sip_commutator(s, c1, c2);
        // Project c2 off c1 where possible: a two-term combination with zero pairing.
        Vec d = random_closed(rng, s);
        Int p = omega(s, c1, c2), q = omega(s, c1, d);
        Vec e = sub(scale(q, c2), scale(p, d));
        if (!is_zero(e) && omega(s, c1, e) == 0)
            return sip_commutator(s, c1, e);
    }
}

inline TwistWord random_torelli_word(Rng& rng, const PartitionedSurface& s)
{
    switch (uniform(rng, 0, 2)) {
    case 0: return separating_twist(rng, s);
    case 1: return bounding_pair_word(rng, s);
    default: return random_sip(rng, s);
    }
}

inline TwistWord random_word(Rng& rng, const PartitionedSurface& s, std::size_t max_len = 4)
{
    TwistWord w;
    std::size_t len = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_len)));
    for (std::size_t i = 0; i < len; ++i) {
        Int e = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
        w.factors.push_back({random_closed(rng, s), e});
    }
    return w;
}

// Mix of Torelli products, conjugated Torelli words and unconstrained words.
inline TwistWord mixed_word(Rng& rng, const PartitionedSurface& s)
{
    switch (uniform(rng, 0, 3)) {
    case 0: return random_torelli_word(rng, s) * random_torelli_word(rng, s);
    case 1: {
        TwistWord a = random_word(rng, s, 2), ainv;
        for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it)
            ainv.factors.push_back({it->cls, -it->exp});
        return a * random_torelli_word(rng, s) * ainv;
    }
    case 2: return random_word(rng, s);
    default: return random_torelli_word(rng, s) * random_word(rng, s, 1);
    }
}

}  // namespace gen
