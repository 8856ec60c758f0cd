#pragma once

#include <optional>
#include <vector>

#include "torelli/intlinalg.hpp"

namespace torelli {

using Label = long long;
using Block = std::vector<Label>;
using Partition = std::vector<Block>;

// Genus, ordered boundary labels and a partition of them. Blocks are kept sorted by the
// position of their labels in the boundary list, so two surfaces compare equal iff they
// describe the same data.
struct PartitionedSurface {
    int genus = 0;
    std::vector<Label> boundaries;
    Partition partition;

    std::size_t n() const { return boundaries.size(); }
    std::size_t ambient_dim() const;
    std::size_t position(Label b) const;  // throws "unknown-label"
    bool has_label(Label b) const;
    std::size_t block_index(Label b) const;
    const Block& block_of(Label b) const { return partition[block_index(b)]; }

    // Coordinates: a1,b1,...,ag,bg, beta_j (boundary order), h_j for every label but the first.
    std::size_t a_index(std::size_t i) const { return 2 * i; }
    std::size_t b_index(std::size_t i) const { return 2 * i + 1; }
    std::size_t beta_index(Label b) const;
    std::optional<std::size_t> h_index(Label b) const;  // nullopt for the anchor label

    bool operator==(const PartitionedSurface&) const = default;
};

// Validates and normalizes block order; throws "invalid-surface".
PartitionedSurface make_surface(int genus, std::vector<Label> boundaries, Partition partition);
Partition normalize_partition(const std::vector<Label>& order, Partition p);

// Basic ambient classes.
Vec class_a(const PartitionedSurface& s, std::size_t i);
Vec class_b(const PartitionedSurface& s, std::size_t i);
Vec class_beta(const PartitionedSurface& s, Label j);
Vec class_h(const PartitionedSurface& s, Label j);  // zero for the anchor label
Vec block_sum(const PartitionedSurface& s, const Block& p);  // R_p
bool is_closed(const PartitionedSurface& s, const Vec& x);
void check_dim(const PartitionedSurface& s, const Vec& x);

// The ambient form Omega.
Int omega(const PartitionedSurface& s, const Vec& x, const Vec& y);
IntMatrix omega_matrix(const PartitionedSurface& s);

// Subquotient <generators> / <relations> of Z^dim with canonical coordinates.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(std::size_t dim, std::vector<Vec> generators, std::vector<Vec> relations);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return free_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool torsion_free() const { return torsion_.empty(); }
    // Representatives of the canonical coordinates: torsion generators first, then free ones.
    const std::vector<Vec>& basis() const { return basis_; }

    std::optional<Vec> try_canonical(const Vec& x) const;
    Vec canonical_form(const Vec& x) const;  // throws "inadmissible-class"
    bool contains(const Vec& x) const { return try_canonical_coords(x).has_value(); }

private:
    std::optional<Vec> try_canonical_coords(const Vec& x) const;

    std::size_t dim_ = 0;
    SmithDecomposition gens_;
    SmithDecomposition rels_;
    std::vector<Int> torsion_;
    std::size_t free_ = 0;
    std::size_t killed_ = 0;
    std::vector<Vec> basis_;
};

class H1PModule {
public:
    H1PModule() = default;
    explicit H1PModule(PartitionedSurface s, std::vector<Vec> extra_relations = {});

    const PartitionedSurface& surface() const { return surface_; }
    std::size_t rank() const { return quotient_.rank(); }
    bool torsion_free() const { return quotient_.torsion_free(); }
    const std::vector<Vec>& basis() const { return quotient_.basis(); }
    const std::vector<Vec>& generators() const { return generators_; }
    const std::vector<Vec>& relations() const { return relations_; }
    const Subquotient& quotient() const { return quotient_; }

    bool admissible(const Vec& x) const;
    Vec canonical_form(const Vec& x) const;
    Int pairing(const Vec& x, const Vec& c) const;
    bool is_p_separating(const Vec& c) const;
    bool is_p_bounding_pair(const Vec& c1, const Vec& c2) const;

private:
    PartitionedSurface surface_;
    std::vector<Vec> generators_;
    std::vector<Vec> relations_;
    Subquotient quotient_;
};

H1PModule build_h1p(const PartitionedSurface& s);

PartitionedSurface induced_partition_cap_boundary(const PartitionedSurface& s, Label b);

struct CappingMap {
    PartitionedSurface source;
    std::size_t closed_genus = 0;
    IntMatrix iota;  // ambient_dim x 2g'; image of x is x * iota

    Vec apply(const Vec& x) const { return row_times(x, iota); }
};

CappingMap standard_capping(const PartitionedSurface& s);

// Every set partition of the given labels, in a fixed order.
std::vector<Partition> all_partitions(const std::vector<Label>& labels);

}  // namespace torelli
