#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torelli/intlinalg.hpp"

namespace torelli {

// Lines are carried by their canonical primitive representative.
using Line = Vec;

Line make_line(const Vec& v);  // canonical_line, "zero-vector" on 0

bool is_simplex(const std::vector<Line>& lines, std::size_t g);
bool is_edge(const Line& x, const Line& y, std::size_t g);
bool is_aug_triangle(const Line& x, const Line& m, const Line& y, std::size_t g);
Int rank_of_line(const Line& l, std::size_t index);

struct ComplexSlice {
    std::size_t g = 0;
    long long bound = 0;
    std::optional<std::vector<Vec>> W;
    std::vector<Line> vertices;                     // lexicographic
    std::vector<std::array<std::size_t, 2>> edges;  // i < j, lexicographic
    std::vector<std::array<std::size_t, 3>> triangles;      // L-triangles i < j < k
    std::vector<std::array<std::size_t, 3>> aug_triangles;  // (x, middle, y)

    std::optional<std::size_t> index_of(const Line& l) const;
    bool operator==(const ComplexSlice&) const = default;
};

// Largest bound accepted by slice enumeration; keeps every kernel inside int64.
inline constexpr long long kMaxSliceBound = 1LL << 16;

ComplexSlice enumerate_slice(std::size_t g, long long bound,
                             const std::optional<std::vector<Vec>>& W = std::nullopt);
// Single-threaded reference for the same enumeration.
ComplexSlice enumerate_slice_serial(std::size_t g, long long bound,
                                    const std::optional<std::vector<Vec>>& W = std::nullopt);

ComplexSlice link_of(const Line& l, const ComplexSlice& s);

// Integer left inverse L of a basis W of a summand (v = c W  =>  c = v L).
IntMatrix left_inverse(const std::vector<Vec>& W);

// ---- Farey model ----
using FareyVertex = Vec;  // canonical coprime (a, b), slope b/a

FareyVertex farey_vertex(const Int& a, const Int& b);
bool farey_adjacent(const FareyVertex& u, const FareyVertex& v);
bool farey_triangle(const FareyVertex& u, const FareyVertex& v, const FareyVertex& w);

struct FareyReport {
    long long bound = 0;
    std::size_t slice_vertices = 0, farey_vertices = 0;
    std::size_t slice_edges = 0, farey_edges = 0;
    std::size_t slice_triangles = 0, farey_triangles = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> details;  // first few mismatch descriptions
};

FareyReport farey_iso_check(const std::vector<Vec>& W, long long bound);
FareyReport farey_iso_check_serial(const std::vector<Vec>& W, long long bound);

std::vector<Vec> realize_simplex_as_basis(const std::vector<Line>& lines, std::size_t g);

}  // namespace torelli
