#include "torelli/psurface.hpp"

namespace torelli {

Subquotient::Subquotient(std::size_t dim, std::vector<Vec> generators, std::vector<Vec> relations)
    : dim_(dim)
{
    gens_ = smith_normal_form(IntMatrix::from_rows(generators, dim));
    std::size_t r = gens_.rank;
    std::vector<Vec> rel_coords;
    for (const auto& rel : relations) {
        auto c = [&]() -> std::optional<Vec> {
            Vec xv = row_times(rel, gens_.V);
            Vec out(r);
            for (std::size_t j = 0; j < xv.size(); ++j) {
                if (j < r) {
                    if (xv[j] % gens_.invariants[j] != 0)
                        return std::nullopt;
                    out[j] = xv[j] / gens_.invariants[j];
                } else if (xv[j] != 0) {
                    return std::nullopt;
                }
            }
            return out;
        }();
        if (!c)
            throw Error("relation-outside-module", to_string(rel));
        rel_coords.push_back(*c);
    }
    rels_ = smith_normal_form(IntMatrix::from_rows(rel_coords, r));
    for (const auto& d : rels_.invariants) {
        if (d == 1)
            ++killed_;
        else
            torsion_.push_back(d);
    }
    free_ = r - rels_.rank;
    for (std::size_t i = killed_; i < r; ++i) {
        Vec c = rels_.Vinv.row(i);
        Vec amb = zero_vec(dim);
        for (std::size_t j = 0; j < r; ++j)
            if (c[j] != 0)
                amb = axpy(c[j] * gens_.invariants[j], gens_.Vinv.row(j), amb);
        basis_.push_back(amb);
    }
}

std::optional<Vec> Subquotient::try_canonical_coords(const Vec& x) const
{
    if (x.size() != dim_)
        throw Error("dimension-mismatch", "class length " + std::to_string(x.size()));
    std::size_t r = gens_.rank;
    Vec xv = row_times(x, gens_.V);
    Vec c(r);
    for (std::size_t j = 0; j < xv.size(); ++j) {
        if (j < r) {
            if (xv[j] % gens_.invariants[j] != 0)
                return std::nullopt;
            c[j] = xv[j] / gens_.invariants[j];
        } else if (xv[j] != 0) {
            return std::nullopt;
        }
    }
    Vec y = row_times(c, rels_.V);
    Vec out;
    out.reserve(r - killed_);
    for (std::size_t i = killed_; i < r; ++i) {
        if (i < rels_.rank) {
            Int d = rels_.invariants[i];
            Int m = y[i] % d;
            if (m < 0)
                m += d;
            out.push_back(m);
        } else {
            out.push_back(y[i]);
        }
    }
    return out;
}

std::optional<Vec> Subquotient::try_canonical(const Vec& x) const
{
    return try_canonical_coords(x);
}

Vec Subquotient::canonical_form(const Vec& x) const
{
    auto c = try_canonical_coords(x);
    if (!c)
        throw Error("inadmissible-class", to_string(x));
    return *c;
}

H1PModule::H1PModule(PartitionedSurface s, std::vector<Vec> extra_relations)
    : surface_(std::move(s))
{
    const auto& S = surface_;
    for (int i = 0; i < S.genus; ++i) {
        generators_.push_back(class_a(S, i));
        generators_.push_back(class_b(S, i));
    }
    for (Label j : S.boundaries)
        generators_.push_back(class_beta(S, j));
    for (const auto& blk : S.partition)
        for (std::size_t u = 0; u < blk.size(); ++u)
            for (std::size_t v = u + 1; v < blk.size(); ++v)
                generators_.push_back(sub(class_h(S, blk[v]), class_h(S, blk[u])));
    for (const auto& blk : S.partition)
        relations_.push_back(block_sum(S, blk));
    for (auto& r : extra_relations) {
        check_dim(S, r);
        relations_.push_back(std::move(r));
    }
    quotient_ = Subquotient(S.ambient_dim(), generators_, relations_);
}

H1PModule build_h1p(const PartitionedSurface& s) { return H1PModule(s); }

bool H1PModule::admissible(const Vec& x) const
{
    check_dim(surface_, x);
    return quotient_.contains(x);
}

Vec H1PModule::canonical_form(const Vec& x) const
{
    check_dim(surface_, x);
    return quotient_.canonical_form(x);
}

Int H1PModule::pairing(const Vec& x, const Vec& c) const
{
    if (!admissible(x))
        throw Error("inadmissible-class", to_string(x));
    if (!is_closed(surface_, c))
        throw Error("not-closed", to_string(c));
    return omega(surface_, x, c);
}

bool H1PModule::is_p_separating(const Vec& c) const { return is_zero(canonical_form(c)); }

bool H1PModule::is_p_bounding_pair(const Vec& c1, const Vec& c2) const
{
    Vec f1 = canonical_form(c1), f2 = canonical_form(c2);
    if (is_zero(f1))
        return false;
    return f1 == f2 || f1 == neg(f2);
}

}  // namespace torelli
