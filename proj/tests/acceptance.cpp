// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "torelli/contraction.hpp"
#include "torelli/tsur.hpp"

using namespace torelli;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
void sweep(int max_g, int min_n, int max_n, F&& f)
{
    for (int g = 0; g <= max_g; ++g)
        for (int n = min_n; n <= max_n; ++n) {
            std::vector<Label> labels;
            for (int i = 1; i <= n; ++i)
                labels.push_back(i);
            for (const auto& p : all_partitions(labels))
                f(make_surface(g, labels, p));
        }
}

Outcome rank_formula()
{
    auto t0 = Clock::now();
    std::size_t surfaces = 0, bad = 0;
    sweep(3, 0, 6, [&](const PartitionedSurface& s) {
        ++surfaces;
        std::size_t expect = 2 * s.genus + 2 * (s.n() - s.partition.size());
        H1PModule m = build_h1p(s);
        bad += m.rank() != expect || !m.torsion_free();
    });
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << surfaces << " surfaces, " << bad << " mismatches, " << dt << " s";
    return {bad == 0 && dt < 30.0, os.str()};
}

Outcome pairing_defined()
{
    std::size_t checks = 0, bad = 0;
    sweep(3, 0, 6, [&](const PartitionedSurface& s) {
        H1PModule m = build_h1p(s);
        for (const auto& blk : s.partition) {
            Vec r = block_sum(s, blk);
            for (const auto& x : m.generators()) {
                ++checks;
                bad += omega(s, r, x) != 0;
            }
        }
    });
    std::ostringstream os;
    os << checks << " pairings, " << bad << " violations";
    return {bad == 0, os.str()};
}

Outcome torelli_generators()
{
    gen::Rng rng(1001);
    std::size_t bad = 0, trivial = 0, nontrivial = 0;
    while (trivial < 1000) {
        auto s = gen::random_surface(rng, 3, 0, 5);
        bad += !acts_trivially(gen::random_torelli_word(rng, s), build_h1p(s));
        ++trivial;
    }
    while (nontrivial < 1000) {
        auto s = gen::random_surface(rng, 3, 0, 5);
        H1PModule m = build_h1p(s);
        Vec c = gen::random_closed(rng, s);
        if (is_zero(m.canonical_form(c)))
            continue;
        Int e = gen::uniform(rng, 1, 3) * (gen::uniform(rng, 0, 1) ? 1 : -1);
        bad += acts_trivially(single_twist(c, e), m);
        ++nontrivial;
    }
    std::ostringstream os;
    os << trivial << " Torelli words, " << nontrivial << " nonzero twists, " << bad << " failures";
    return {bad == 0, os.str()};
}

Outcome capping_equivalence()
{
    auto t0 = Clock::now();
    gen::Rng rng(1002);
    std::size_t surfaces = 0, words = 0, bad = 0, trivial = 0;
    sweep(2, 0, 5, [&](const PartitionedSurface& s) {
        ++surfaces;
        H1PModule m = build_h1p(s);
        CappingMap cm = standard_capping(s);
        H1PModule closed = build_h1p(closed_surface(cm.closed_genus));
        for (int i = 0; i < 500; ++i) {
            TwistWord w = gen::mixed_word(rng, s);
            bool a = acts_trivially(w, m);
            bool b = acts_trivially(push_word(cm, w), closed);
            ++words;
            trivial += a;
            bad += a != b;
        }
    });
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << surfaces << " surfaces, " << words << " words (" << trivial << " trivial), " << bad
       << " disagreements, " << dt << " s";
    return {bad == 0 && dt < 60.0, os.str()};
}

Outcome point_push()
{
    gen::Rng rng(1003);
    std::size_t bad = 0;
    for (int it = 0; it < 500; ++it) {
        auto s = gen::random_surface(rng, 2, 1, 5);
        Label b = s.boundaries[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long long>(s.n()) - 1))];
        auto small = induced_partition_cap_boundary(s, b);
        Vec gamma = gen::random_closed(rng, small);
        PushSpec tmp = make_push_spec(s, b, gamma);
        Vec lift = axpy(gen::uniform(rng, -2, 2), class_beta(s, b), reread(tmp, gamma));
        PushSpec spec = make_push_spec(s, b, gamma, lift);
        H1PModule q = push_quotient(spec);
        TwistWord w = pointpush_word(spec);
        for (const auto& x : q.basis())
            bad += q.canonical_form(act_ambient(s, w, x)) != pointpush_action(spec, x);
    }
    std::size_t shift_bad = 0;
    gen::Rng rng2(1004);
    for (int it = 0; it < 50; ++it) {
        auto s = gen::random_surface(rng2, 2, 2, 5);
        for (Label b : s.boundaries) {
            auto h = s.h_index(b);
            if (!h)
                continue;
            Vec hb = unit_vec(s.ambient_dim(), *h), beta = class_beta(s, b);
            for (long long k = -5; k <= 5; ++k)
                shift_bad += act_ambient(s, single_twist(beta, k), hb) != axpy(k, beta, hb);
        }
    }
    std::ostringstream os;
    os << "500 specs, " << bad << " basis disagreements; shift law " << shift_bad << " failures";
    return {bad == 0 && shift_bad == 0, os.str()};
}

Outcome kernel_identities()
{
    std::size_t cases = 0, bad = 0;
    sweep(2, 1, 5, [&](const PartitionedSurface& s) {
        for (Label b : s.boundaries) {
            auto small = induced_partition_cap_boundary(s, b);
            PushSpec spec = make_push_spec(s, b, zero_vec(small.ambient_dim()));
            for (const auto& q : small.partition) {
                PushDecomposition d = decompose_push(spec, q);
                ++cases;
                bad += !(d.separating_ok && d.bounding_ok && d.identity_ok);
            }
        }
    });
    std::ostringstream os;
    os << cases << " decompositions, " << bad << " failures";
    return {bad == 0, os.str()};
}

Outcome farey_iso()
{
    auto t0 = Clock::now();
    std::vector<Vec> W{vec_of({1, 0, 0, 0}), vec_of({0, 0, 1, 0})};
    std::size_t mismatches = 0, vertices = 0;
    for (long long B = 1; B <= 50; ++B) {
        FareyReport r = farey_iso_check(W, B);
        mismatches += r.mismatches;
        vertices = r.slice_vertices;
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "B <= 50, " << mismatches << " mismatches, " << vertices << " vertices at B=50, " << dt
       << " s";
    return {mismatches == 0 && dt < 120.0, os.str()};
}

Outcome contraction()
{
    std::size_t ok3 = 0, ok2 = 0;
    double worst = 0;
    std::string first_failure;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto t0 = Clock::now();
        try {
            RandomLoop r = random_contractible_loop(3, seed, 40, 8);
            MoveTrace t = contract_g3_pipeline(r.loop);
            double dt = seconds_since(t0);
            worst = std::max(worst, dt);
            if (verify_trace(t) && t.initial == r.loop && t.final_path.vertices.size() == 1 && dt <= 60.0)
                ++ok3;
            else if (first_failure.empty())
                first_failure = "g=3 seed " + std::to_string(seed);
        } catch (const Error& e) {
            if (first_failure.empty())
                first_failure = "g=3 seed " + std::to_string(seed) + ": " + e.what();
        }
    }
    Vec a1 = vec_of({1, 0, 0, 0}), b1 = vec_of({0, 1, 0, 0}), a2 = vec_of({0, 0, 1, 0});
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        try {
            PathInComplex f = random_farey_loop(seed, 40, 8);
            PathInComplex l = seed % 2 ? embed_farey_loop(f, 2, a1, a2) : embed_farey_loop(f, 2, a2, b1);
            MoveTrace t = genus2_contract(l);
            if (verify_trace(t) && t.initial == l && t.final_path.vertices.size() == 1)
                ++ok2;
            else if (first_failure.empty())
                first_failure = "g=2 seed " + std::to_string(seed);
        } catch (const Error& e) {
            if (first_failure.empty())
                first_failure = "g=2 seed " + std::to_string(seed) + ": " + e.what();
        }
    }
    std::ostringstream os;
    os << ok3 << "/200 genus-3 loops, " << ok2 << "/100 genus-2 loops, slowest " << worst << " s";
    if (!first_failure.empty())
        os << "; first failure " << first_failure;
    return {ok3 == 200 && ok2 == 100, os.str()};
}

std::vector<Vec> random_symplectic_basis(gen::Rng& rng, std::size_t g)
{
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < 2 * g; ++i)
        basis.push_back(unit_vec(2 * g, i));
    for (int k = 0; k < 6; ++k) {
        Vec c = zero_vec(2 * g);
        for (auto& x : c)
            x = gen::uniform(rng, -1, 1);
        if (is_zero(c))
            continue;
        Int e = gen::uniform(rng, 0, 1) ? 1 : -1;
        for (auto& v : basis)
            v = transvection(c, v, g, e);
    }
    return basis;
}

Outcome completion()
{
    gen::Rng rng(1009);
    std::size_t bad = 0;
    for (int it = 0; it < 500; ++it) {
        std::size_t g = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        auto basis = random_symplectic_basis(rng, g);
        std::size_t ka = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long long>(g)));
        std::size_t kb = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long long>(ka)));
        std::vector<Vec> pa, pb;
        for (std::size_t i = 0; i < ka; ++i)
            pa.push_back(basis[2 * i]);
        for (std::size_t i = 0; i < kb; ++i)
            pb.push_back(basis[2 * i + 1]);
        try {
            auto out = complete_symplectic_basis(pa, pb, g);
            bool ok = gram_matrix(out) == form_matrix(g);
            for (std::size_t i = 0; i < ka; ++i)
                ok = ok && out[2 * i] == pa[i];
            for (std::size_t i = 0; i < kb; ++i)
                ok = ok && out[2 * i + 1] == pb[i];
            bad += !ok;
        } catch (const Error&) {
            ++bad;
        }
    }
    auto rejected = [](const std::function<void()>& f) {
        try {
            f();
        } catch (const Error& e) {
            return std::string(e.code()) == "not-extendable-input";
        }
        return false;
    };
    std::size_t reject_bad = 0;
    reject_bad += !rejected([] { complete_symplectic_basis({vec_of({2, 0, 0, 0})}, {}, 2); });
    reject_bad += !rejected([] { complete_symplectic_basis({vec_of({1, 0, 0, 0}), vec_of({0, 1, 0, 0})}, {}, 2); });
    reject_bad += !rejected([] { complete_symplectic_basis({vec_of({1, 0, 0, 0})}, {vec_of({0, 0, 1, 0})}, 2); });
    reject_bad += !rejected([] { complete_symplectic_basis({vec_of({1, 0}), vec_of({0, 1})}, {}, 1); });
    reject_bad += !rejected([] { complete_symplectic_basis({vec_of({1, 0, 0})}, {}, 2); });
    reject_bad += !rejected([] {
        complete_symplectic_basis({vec_of({1, 0, 0, 0}), vec_of({1, 0, 0, 0})}, {}, 2);
    });
    std::ostringstream os;
    os << "500 completions, " << bad << " failures; " << reject_bad << " invalid inputs accepted";
    return {bad == 0 && reject_bad == 0, os.str()};
}

Outcome tsur_conditions()
{
    EmbeddingCombinatorics e;
    e.source = {0, {1, 2, 3, 4}};
    e.target = {2, {}};
    e.components = {{0, {}, {1, 3}}, {0, {}, {2, 4}}};
    Partition p1{{1, 2}, {3, 4}};
    bool rejected = !is_tsur_morphism(e, p1, {});
    bool witnessed = false;
    if (auto w = find_witness(e, p1, {})) {
        CompositeModel model = composite_model(e, {});
        witnessed = acts_trivially(w->word, build_h1p(make_surface(0, {1, 2, 3, 4}, p1))) &&
                    !acts_trivially(model.push(w->word), build_h1p(closed_surface(model.closed_genus)));
    }
    std::size_t caps = 0, cap_bad = 0;
    sweep(2, 0, 5, [&](const PartitionedSurface& s) {
        ++caps;
        EmbeddingCombinatorics c = capping_embedding(s);
        bool ok = is_tsur_morphism(c, s.partition, {}) && retraction_map(c, s.partition, {}).empty() &&
                  induced_partition_from_embedding(c) == s.partition;
        SurfaceShell sh{s.genus, s.boundaries};
        RetractionMap id = retraction_map(identity_embedding(sh), s.partition, s.partition);
        ok = ok && id.size() == s.partition.size();
        for (const auto& [q, p] : id)
            ok = ok && q == p;
        cap_bad += !ok;
    });
    std::ostringstream os;
    os << "violator " << (rejected ? "rejected" : "accepted") << ", witness "
       << (witnessed ? "valid" : "missing") << "; " << caps << " cappings, " << cap_bad << " failures";
    return {rejected && witnessed && cap_bad == 0, os.str()};
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion all[] = {
        {"rank formula", rank_formula},
        {"pairing well-defined", pairing_defined},
        {"Torelli generators", torelli_generators},
        {"capping equivalence", capping_equivalence},
        {"point-push consistency", point_push},
        {"push kernel identities", kernel_identities},
        {"Farey isomorphism", farey_iso},
        {"contraction soundness", contraction},
        {"symplectic completion", completion},
        {"embedding conditions", tsur_conditions},
    };
    int failures = 0, k = 0;
    for (const auto& c : all) {
        ++k;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("AC%-2d %s  %-24s %s\n", k, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
