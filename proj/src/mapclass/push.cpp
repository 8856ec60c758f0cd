#include <algorithm>

#include "torelli/mapclass.hpp"

namespace torelli {

PushSpec make_push_spec(const PartitionedSurface& large, Label b, Vec gamma,
                        std::optional<Vec> lift)
{
    PushSpec spec;
    spec.large = large;
    spec.b = b;
    spec.small = induced_partition_cap_boundary(large, b);
    if (!is_closed(spec.small, gamma))
        throw Error("not-closed", "gamma must be a closed class on the capped surface");
    spec.gamma = std::move(gamma);
    if (lift && !is_closed(large, *lift))
        throw Error("bad-lift", "lift is not a closed class");
    spec.lift = std::move(lift);
    return spec;
}

Vec reread(const PushSpec& spec, const Vec& small_class)
{
    if (!is_closed(spec.small, small_class))
        throw Error("not-closed", to_string(small_class));
    Vec out = zero_vec(spec.large.ambient_dim());
    for (int i = 0; i < 2 * spec.large.genus; ++i)
        out[i] = small_class[i];
    for (Label j : spec.small.boundaries)
        out[spec.large.beta_index(j)] = small_class[spec.small.beta_index(j)];
    return out;
}

Vec restrict_closed(const PushSpec& spec, const Vec& large_class)
{
    if (!is_closed(spec.large, large_class))
        throw Error("not-closed", to_string(large_class));
    Vec out = zero_vec(spec.small.ambient_dim());
    for (int i = 0; i < 2 * spec.large.genus; ++i)
        out[i] = large_class[i];
    for (Label j : spec.small.boundaries)
        out[spec.small.beta_index(j)] = large_class[spec.large.beta_index(j)];
    return out;
}

H1PModule push_quotient(const PushSpec& spec)
{
    return H1PModule(spec.large, {class_beta(spec.large, spec.b)});
}

Vec pointpush_action(const PushSpec& spec, const Vec& x)
{
    H1PModule q = push_quotient(spec);
    if (!q.admissible(x))
        throw Error("inadmissible-class", to_string(x));
    Int k = omega(spec.large, x, class_beta(spec.large, spec.b));
    return q.canonical_form(axpy(-k, reread(spec, spec.gamma), x));
}

TwistWord pointpush_word(const PushSpec& spec)
{
    if (!spec.lift)
        throw Error("bad-lift", "no lift class supplied");
    if (restrict_closed(spec, *spec.lift) != spec.gamma)
        throw Error("bad-lift", "lift does not restrict to gamma");
    TwistWord w;
    w.factors = {{*spec.lift, 1}, {add(*spec.lift, class_beta(spec.large, spec.b)), -1}};
    return w;
}

PushDecomposition decompose_push(const PushSpec& spec, const Block& q)
{
    Block qs = q;
    std::sort(qs.begin(), qs.end());
    bool found = false;
    for (auto blk : spec.small.partition) {
        std::sort(blk.begin(), blk.end());
        if (blk == qs)
            found = true;
    }
    if (!found)
        throw Error("not-a-block", "q is not a block of the capped partition");

    const auto& L = spec.large;
    Block rest;
    for (Label x : L.block_of(spec.b))
        if (x != spec.b)
            rest.push_back(x);
    std::sort(rest.begin(), rest.end());

    PushDecomposition d;
    Vec beta_b = class_beta(L, spec.b);
    d.eta1 = block_sum(L, q);
    d.eta2 = add(d.eta1, beta_b);
    d.complementary_case = (rest == qs);
    if (!d.complementary_case) {
        d.word.factors = {{d.eta1, 1}, {beta_b, 1}, {d.eta2, -1}};
        d.separating = d.eta1;
        d.bounding = {beta_b, d.eta2};
        d.tb_exponent = 1;
    } else {
        d.word.factors = {{d.eta1, 1}, {beta_b, -1}, {d.eta2, -1}};
        d.separating = d.eta2;
        d.bounding = {d.eta1, beta_b};
        d.tb_exponent = -1;
    }

    H1PModule m(L);
    d.separating_ok = m.is_p_separating(d.separating);
    d.bounding_ok = m.is_p_bounding_pair(d.bounding.first, d.bounding.second) ||
                    (m.is_p_separating(d.bounding.first) && m.is_p_separating(d.bounding.second));

    PushSpec ps = make_push_spec(L, spec.b, restrict_closed(spec, d.eta1), d.eta1);
    d.reference = pointpush_word(ps) * single_twist(beta_b, d.tb_exponent);
    d.identity_ok = true;
    for (const auto& x : m.basis())
        if (m.canonical_form(act_ambient(L, d.word, x)) !=
            m.canonical_form(act_ambient(L, d.reference, x))) {
            d.identity_ok = false;
            break;
        }
    return d;
}

KernelReport birman_kernel_report(const PartitionedSurface& s, Label b)
{
    if (!s.has_label(b))
        throw Error("unknown-label", std::to_string(b));
    if (s.genus == 1 && s.n() == 1)
        throw Error("degenerate-case", "(g,n) = (1,1) is excluded");
    KernelReport r;
    r.capped = induced_partition_cap_boundary(s, b);
    r.h1p_prime_rank = build_h1p(r.capped).rank();
    if (s.block_of(b).size() == 1) {
        r.case_tag = "full-unit-tangent";
        r.notes.push_back("kernel is the fundamental group of the unit tangent bundle of the capped surface");
    } else {
        r.case_tag = "graph-over-kernel";
        r.notes.push_back("kernel is the graph of a homomorphism from the subgroup acting trivially on the capped module to Z");
        r.notes.push_back("the homomorphism exists but has no canonical value and is not evaluated");
    }
    return r;
}

}  // namespace torelli
