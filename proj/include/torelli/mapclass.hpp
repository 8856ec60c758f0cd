#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torelli/psurface.hpp"

namespace torelli {

struct TwistFactor {
    Vec cls;  // closed ambient class
    Int exp = 1;
    bool operator==(const TwistFactor&) const = default;
};

// Geometric hypotheses are never checked; they travel with the word as caller assertions.
struct WordAssertions {
    bool simple = false;
    std::vector<std::pair<std::size_t, std::size_t>> disjoint_pairs;
    bool operator==(const WordAssertions&) const = default;
};

// Leftmost factor acts last.
struct TwistWord {
    std::vector<TwistFactor> factors;
    WordAssertions assertions;
    bool operator==(const TwistWord&) const = default;
};

TwistWord operator*(const TwistWord& lhs, const TwistWord& rhs);
TwistWord single_twist(const Vec& c, const Int& e = 1);

// Ambient action (no admissibility check, no reduction).
Vec act_ambient(const PartitionedSurface& s, const TwistWord& w, const Vec& x);
// Canonical coordinates of the image of an admissible class.
Vec act(const TwistWord& w, const H1PModule& m, const Vec& x);

struct TrivialityReport {
    bool trivial = true;
    std::optional<std::size_t> first_moved;  // index into m.basis()
    Vec moved_class;
    Vec image;
};

TrivialityReport triviality_report(const TwistWord& w, const H1PModule& m);
bool acts_trivially(const TwistWord& w, const H1PModule& m);
void check_word(const PartitionedSurface& s, const TwistWord& w);

TwistWord sip_commutator(const PartitionedSurface& s, const Vec& c1, const Vec& c2);

// Image of a word under a capping; lives on the closed surface of genus g'.
TwistWord push_word(const CappingMap& cm, const TwistWord& w);
PartitionedSurface closed_surface(std::size_t genus);

struct PushSpec {
    PartitionedSurface large;
    Label b = 0;
    PartitionedSurface small;
    Vec gamma;                // closed class on small
    std::optional<Vec> lift;  // closed class on large
};

PushSpec make_push_spec(const PartitionedSurface& large, Label b, Vec gamma,
                        std::optional<Vec> lift = std::nullopt);

// Re-read a small-surface class on the large surface (beta_b coordinate 0).
Vec reread(const PushSpec& spec, const Vec& small_class);
// Drop the beta_b coordinate of a large closed class.
Vec restrict_closed(const PushSpec& spec, const Vec& large_class);
// H1^P(large) / <beta_b>.
H1PModule push_quotient(const PushSpec& spec);

Vec pointpush_action(const PushSpec& spec, const Vec& x);
TwistWord pointpush_word(const PushSpec& spec);

struct PushDecomposition {
    TwistWord word;
    bool complementary_case = false;  // q == p \ {b}
    Vec eta1, eta2;
    Vec separating;                   // the factor certified P-separating
    std::pair<Vec, Vec> bounding;     // the pair certified P-bounding
    int tb_exponent = 1;
    TwistWord reference;              // pointpush word times T_b^{tb}
    bool separating_ok = false;
    bool bounding_ok = false;         // P-bounding, or both P-separating when beta_b dies
    bool identity_ok = false;
};

PushDecomposition decompose_push(const PushSpec& spec, const Block& q);

struct KernelReport {
    std::string case_tag;
    std::size_t h1p_prime_rank = 0;
    PartitionedSurface capped;
    std::vector<std::string> notes;
};

KernelReport birman_kernel_report(const PartitionedSurface& s, Label b);

}  // namespace torelli
