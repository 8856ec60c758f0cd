#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torelli/isocomplex.hpp"

namespace torelli {

enum class EdgeMode { Isotropic, Farey };
enum class MoveKind { Backtrack, EdgeTriangle, StarReplace, AugTriangle, Cone };

const char* to_string(EdgeMode m);
const char* to_string(MoveKind k);
EdgeMode edge_mode_from(const std::string& s);
MoveKind move_kind_from(const std::string& s);

// Closed paths repeat the base vertex at the end; a constant loop is a single vertex.
struct PathInComplex {
    std::size_t g = 0;
    EdgeMode mode = EdgeMode::Isotropic;
    bool closed = true;
    std::vector<Line> vertices;

    std::size_t dim() const { return mode == EdgeMode::Farey ? 2 : 2 * g; }
    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool operator==(const PathInComplex&) const = default;
};

// Payloads:
//   Backtrack     [Y]          forward removes X-Y-X at pos; inverse inserts the spur
//   EdgeTriangle  [Z]          forward inserts Z into edge pos; inverse removes it
//   AugTriangle   [M]          same, for the middle vertex of an augmented triangle
//   StarReplace   [A,Z1..Zk]   forward replaces A at pos+1 by Z1..Zk; inverse puts A back
//   Cone          [C]          as EdgeTriangle with C the last a-axis
struct Move {
    MoveKind kind = MoveKind::Backtrack;
    std::size_t pos = 0;
    std::vector<Line> payload;
    bool inverse = false;
    bool operator==(const Move&) const = default;
};

Move inverted(const Move& m);

struct MoveTrace {
    PathInComplex initial;
    std::vector<Move> moves;
    PathInComplex final_path;
    std::vector<std::string> notes;
    bool operator==(const MoveTrace&) const = default;
};

bool edge_ok(const PathInComplex& p, const Line& x, const Line& y);
void validate_path(const PathInComplex& p);  // throws "invalid-path"
PathInComplex apply_move(const PathInComplex& p, const Move& m);  // throws "invalid-move"
bool verify_trace(const MoveTrace& t, std::string* why = nullptr);

// Appends a move to a running trace, applying it to `cur`.
void push_move(MoveTrace& t, PathInComplex& cur, const Move& m);

// ---- quotient lattices M / core used by link searches and samplers ----
struct QuotientLattice {
    std::size_t n = 0;             // ambient dimension
    std::vector<Vec> core;
    std::vector<Vec> complement;   // basis of M / core, lifted
    IntMatrix gram;                // pairing on the complement
    SmithDecomposition full;       // of [core; complement]

    std::size_t qdim() const { return complement.size(); }
    std::optional<Vec> coords(const Vec& x) const;  // nullopt when x is outside M
    Vec lift(const Vec& w) const;
};

// M = { z : <z,u> = 0 for u in orth, z_k = 0 for k in zero_axes }.
QuotientLattice make_quotient(std::size_t g, const std::vector<Vec>& orth,
                              const std::vector<std::size_t>& zero_axes,
                              const std::vector<Vec>& core);

struct SearchOptions {
    std::int64_t start_box = 1;
    std::int64_t max_nodes = 250000;  // escalation stops once a box would exceed this
};

// Path x -> y in the link graph of the quotient (nodes primitive up to sign, edges isotropic
// unimodular pairs). Returned endpoints are the inputs' quotient coordinates.
std::optional<std::vector<Vec>> link_path(const QuotientLattice& q, const Vec& x, const Vec& y,
                                          const SearchOptions& opt, std::string* diag = nullptr);

struct ReduceOptions {
    std::optional<Line> within_link;
    std::vector<std::size_t> zero_axes;  // coordinates every vertex keeps at 0
    SearchOptions search;
};

MoveTrace split_equal_rank_neighbors(const PathInComplex& p, std::size_t axis);
MoveTrace reduce_rank(const PathInComplex& p, std::size_t axis, const ReduceOptions& opt = {});
MoveTrace cone_contract_wprime(const PathInComplex& loop);
// b_g reduction, then a_g reduction inside b_g = 0, then the cone.
MoveTrace contract_g3_pipeline(const PathInComplex& loop, const SearchOptions& opt = {});

// Stern-Brocot depth: sum of continued-fraction coefficients of |b|/a.
Int farey_depth(const FareyVertex& v);
std::pair<FareyVertex, FareyVertex> farey_parents(const FareyVertex& v);
MoveTrace farey_contract(const PathInComplex& loop);

struct Genus2Options {
    std::size_t fallback_budget = 10000;
};
MoveTrace genus2_contract(const PathInComplex& loop, const Genus2Options& opt = {});

struct RandomLoop {
    PathInComplex loop;
    MoveTrace certificate;
};
RandomLoop random_contractible_loop(std::size_t g, std::uint64_t seed, std::size_t target_length,
                                    long long bound);
// Farey-graph loop based at (1,0), grown by spurs and mediant insertions.
PathInComplex random_farey_loop(std::uint64_t seed, std::size_t target_length, long long bound);
// Embed a Farey loop into the plane spanned by p1, p2.
PathInComplex embed_farey_loop(const PathInComplex& farey, std::size_t g, const Vec& p1,
                               const Vec& p2);

struct H1Diagnostic {
    std::size_t vertices = 0, edges = 0, faces = 0;
    std::size_t b0 = 0, b1 = 0;
    std::vector<Int> torsion;
};
H1Diagnostic slice_h1_diagnostic(const ComplexSlice& s);

}  // namespace torelli
