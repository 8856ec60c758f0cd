#pragma once

#include <map>
#include <optional>
#include <vector>

#include "torelli/mapclass.hpp"

namespace torelli {

struct SurfaceShell {
    int genus = 0;
    std::vector<Label> boundaries;
    bool operator==(const SurfaceShell&) const = default;
};

// One complementary piece S of the source inside the target.
struct Component {
    int genus = 0;
    std::vector<Label> B;       // target boundary labels lying in S
    std::vector<Label> Bprime;  // source boundary labels lying in S
    bool operator==(const Component&) const = default;
};

struct EmbeddingCombinatorics {
    SurfaceShell source;
    SurfaceShell target;
    std::vector<Component> components;
    bool operator==(const EmbeddingCombinatorics&) const = default;
};

long long euler_characteristic(const SurfaceShell& s);
long long euler_characteristic(const Component& c);

// Throws "invalid-embedding" on broken bookkeeping.
void validate(const EmbeddingCombinatorics& e);
// Sorted labels inside components, components sorted; equal embeddings normalize equally.
EmbeddingCombinatorics normalized(EmbeddingCombinatorics e);

bool is_tsur_morphism(const EmbeddingCombinatorics& e, const Partition& p1, const Partition& p2);

// P2-block -> P1-block.
using RetractionMap = std::vector<std::pair<Block, Block>>;
RetractionMap retraction_map(const EmbeddingCombinatorics& e, const Partition& p1,
                             const Partition& p2);

Partition induced_partition_from_embedding(const EmbeddingCombinatorics& e);
Partition restriction_partition(const EmbeddingCombinatorics& e, const Partition& p2);
EmbeddingCombinatorics compose(const EmbeddingCombinatorics& first,
                               const EmbeddingCombinatorics& second);

EmbeddingCombinatorics identity_embedding(const SurfaceShell& s);
// Genus-0 caps, one per block; target closed.
EmbeddingCombinatorics capping_embedding(const PartitionedSurface& s);
// Fill one boundary with a disc.
EmbeddingCombinatorics disc_capping(const SurfaceShell& s, Label b);

// Homology model of the source inside the target capped along P2: a capping of the source
// for the restriction partition, padded by the handles carried by the merged components.
struct CompositeModel {
    Partition restricted;
    CappingMap capping;
    std::size_t extra_genus = 0;
    std::size_t closed_genus = 0;
    TwistWord push(const TwistWord& w) const;  // lands on the closed surface of closed_genus
};

CompositeModel composite_model(const EmbeddingCombinatorics& e, const Partition& p2);

struct FunctorialityWitness {
    TwistWord word;
    Block block;  // P1-block whose boundary sum is twisted
};

// A P1-separating twist that survives in the target, if any.
std::optional<FunctorialityWitness> find_witness(const EmbeddingCombinatorics& e,
                                                 const Partition& p1, const Partition& p2);

}  // namespace torelli
