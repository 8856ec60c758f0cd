#include "torelli/mapclass.hpp"

namespace torelli {

TwistWord operator*(const TwistWord& lhs, const TwistWord& rhs)
{
    TwistWord w;
    w.factors = lhs.factors;
    w.factors.insert(w.factors.end(), rhs.factors.begin(), rhs.factors.end());
    return w;
}

TwistWord single_twist(const Vec& c, const Int& e)
{
    TwistWord w;
    w.factors.push_back({c, e});
    return w;
}

void check_word(const PartitionedSurface& s, const TwistWord& w)
{
    for (const auto& f : w.factors)
        if (!is_closed(s, f.cls))
            throw Error("not-closed", "twist class " + to_string(f.cls));
    for (const auto& [i, j] : w.assertions.disjoint_pairs)
        if (i >= w.factors.size() || j >= w.factors.size())
            throw Error("invalid-word", "disjoint pair index out of range");
}

Vec act_ambient(const PartitionedSurface& s, const TwistWord& w, const Vec& x)
{
    check_dim(s, x);
    Vec h = x;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        check_dim(s, it->cls);
        Int k = omega(s, h, it->cls);
        if (k != 0)
            h = axpy(it->exp * k, it->cls, h);
    }
    return h;
}

Vec act(const TwistWord& w, const H1PModule& m, const Vec& x)
{
    if (!m.admissible(x))
        throw Error("inadmissible-class", to_string(x));
    check_word(m.surface(), w);
    return m.canonical_form(act_ambient(m.surface(), w, x));
}

TrivialityReport triviality_report(const TwistWord& w, const H1PModule& m)
{
    check_word(m.surface(), w);
    TrivialityReport r;
    const auto& basis = m.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vec img = act_ambient(m.surface(), w, basis[i]);
        if (m.canonical_form(img) != m.canonical_form(basis[i])) {
            r.trivial = false;
            r.first_moved = i;
            r.moved_class = basis[i];
            r.image = img;
            return r;
        }
    }
    return r;
}

bool acts_trivially(const TwistWord& w, const H1PModule& m)
{
    return triviality_report(w, m).trivial;
}

TwistWord sip_commutator(const PartitionedSurface& s, const Vec& c1, const Vec& c2)
{
    if (!is_closed(s, c1) || !is_closed(s, c2))
        throw Error("not-closed", "commutator classes");
    if (omega(s, c1, c2) != 0)
        throw Error("not-algebraically-disjoint");
    TwistWord w;
    w.factors = {{c1, 1}, {c2, 1}, {c1, -1}, {c2, -1}};
    return w;
}

PartitionedSurface closed_surface(std::size_t genus)
{
    return make_surface(static_cast<int>(genus), {}, {});
}

TwistWord push_word(const CappingMap& cm, const TwistWord& w)
{
    check_word(cm.source, w);
    TwistWord out;
    out.assertions = w.assertions;
    for (const auto& f : w.factors)
        out.factors.push_back({cm.apply(f.cls), f.exp});
    return out;
}

}  // namespace torelli
