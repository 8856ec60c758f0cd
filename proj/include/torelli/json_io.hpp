#pragma once

#include <string>

#include <json.hpp>

#include "torelli/contraction.hpp"
#include "torelli/tsur.hpp"

namespace torelli::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers outside int64 travel as decimal strings.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json vecs_to_json(const std::vector<Vec>& vs);
std::vector<Vec> vecs_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json surface_to_json(const PartitionedSurface& s);
PartitionedSurface surface_from_json(const Json& j);

Json class_to_json(const PartitionedSurface& s, const Vec& x);
Vec class_from_json(const PartitionedSurface& s, const Json& j);

Json word_to_json(const PartitionedSurface& s, const TwistWord& w);
TwistWord word_from_json(const PartitionedSurface& s, const Json& j);

Json shell_to_json(const SurfaceShell& s);
SurfaceShell shell_from_json(const Json& j);
Json embedding_to_json(const EmbeddingCombinatorics& e);
EmbeddingCombinatorics embedding_from_json(const Json& j);

Json slice_to_json(const ComplexSlice& s);
ComplexSlice slice_from_json(const Json& j);

Json path_to_json(const PathInComplex& p);
PathInComplex path_from_json(const Json& j);
Json move_to_json(const Move& m);
Move move_from_json(const Json& j);
Json trace_to_json(const MoveTrace& t);
MoveTrace trace_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);

// Adds the schema_version field at top level.
Json stamped(Json j);
// Rejects documents carrying a different schema_version.
void check_schema(const Json& j);

// Parses a file or, when the argument starts with '{' or '[', the text itself.
Json load(const std::string& path_or_text);
Json parse(const std::string& text);

// Wraps JSON library failures into Error("malformed-json").
template <class F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed-json", e.what());
    }
}

}  // namespace torelli::io
