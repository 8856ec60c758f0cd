#include "torelli/psurface.hpp"

namespace torelli {

CappingMap standard_capping(const PartitionedSurface& s)
{
    CappingMap cm;
    cm.source = s;
    std::size_t g = s.genus;
    std::size_t gp = g;
    for (const auto& blk : s.partition)
        gp += blk.size() - 1;
    cm.closed_genus = gp;
    cm.iota = IntMatrix(s.ambient_dim(), 2 * gp);
    for (std::size_t i = 0; i < 2 * g; ++i)
        cm.iota(i, i) = 1;

    // Handle pairs (a^p_t, b^p_t), t = 1..|p|-1, numbered consecutively after the surface genus.
    std::size_t next = g;
    for (const auto& blk : s.partition) {
        std::size_t k = blk.size();
        auto a_col = [&](std::size_t t) { return 2 * (next + t - 1); };
        auto b_col = [&](std::size_t t) { return 2 * (next + t - 1) + 1; };
        for (std::size_t t = 1; t <= k; ++t) {
            std::size_t row = s.beta_index(blk[t - 1]);
            if (t < k)
                cm.iota(row, a_col(t)) += 1;
            if (t > 1)
                cm.iota(row, a_col(t - 1)) -= 1;
            if (auto h = s.h_index(blk[t - 1]))
                for (std::size_t u = 1; u < t; ++u)
                    cm.iota(*h, b_col(u)) = 1;
        }
        next += k - 1;
    }

    // Invariants: relations die, the module embeds unimodularly, pairings agree.
    for (const auto& blk : s.partition)
        if (!is_zero(cm.apply(block_sum(s, blk))))
            throw Error("capping-model-broken", "relation survives");
    H1PModule m(s);
    std::vector<Vec> img;
    for (const auto& v : m.basis())
        img.push_back(cm.apply(v));
    if (m.rank() != 2 * gp || (!img.empty() && !is_unimodular_summand(img)))
        throw Error("capping-model-broken", "not injective");
    std::vector<Vec> closed;
    for (const auto& x : m.generators())
        if (is_closed(s, x))
            closed.push_back(x);
    for (const auto& x : m.generators())
        for (const auto& c : closed)
            if (omega(s, x, c) != symplectic_pairing(cm.apply(x), cm.apply(c), gp))
                throw Error("capping-model-broken", "pairing mismatch");
    return cm;
}

}  // namespace torelli
