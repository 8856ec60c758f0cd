#include "torelli/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace torelli::io {

namespace {

const Int kI64Max = std::numeric_limits<std::int64_t>::max();
const Int kI64Min = std::numeric_limits<std::int64_t>::min();

Label label_from_key(const std::string& k)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(k, &used);
    } catch (const std::exception&) {
        throw Error("malformed-json", "label key '" + k + "'");
    }
    if (used != k.size())
        throw Error("malformed-json", "label key '" + k + "'");
    return v;
}

std::vector<Label> labels_from_json(const Json& j)
{
    std::vector<Label> out;
    for (const auto& x : j)
        out.push_back(x.get<Label>());
    return out;
}

std::vector<Line> lines_from_json(const Json& j)
{
    return vecs_from_json(j);
}

}  // namespace

Json int_to_json(const Int& x)
{
    if (x <= kI64Max && x >= kI64Min)
        return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

Int int_from_json(const Json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw Error("malformed-json", "integer string '" + s + "'");
        return Int(s);
    }
    throw Error("malformed-json", "expected an integer, got " + j.dump());
}

Json vec_to_json(const Vec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(int_to_json(x));
    return a;
}

Vec vec_from_json(const Json& j)
{
    if (!j.is_array())
        throw Error("malformed-json", "expected an integer array");
    Vec v;
    for (const auto& x : j)
        v.push_back(int_from_json(x));
    return v;
}

Json vecs_to_json(const std::vector<Vec>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs)
        a.push_back(vec_to_json(v));
    return a;
}

std::vector<Vec> vecs_from_json(const Json& j)
{
    if (!j.is_array())
        throw Error("malformed-json", "expected an array of vectors");
    std::vector<Vec> out;
    for (const auto& x : j)
        out.push_back(vec_from_json(x));
    return out;
}

Json partition_to_json(const Partition& p)
{
    Json a = Json::array();
    for (const auto& b : p)
        a.push_back(b);
    return a;
}

Partition partition_from_json(const Json& j)
{
    return guarded([&] {
        if (!j.is_array())
            throw Error("malformed-json", "partition must be an array of blocks");
        Partition p;
        for (const auto& b : j)
            p.push_back(labels_from_json(b));
        return p;
    });
}

Json surface_to_json(const PartitionedSurface& s)
{
    return Json{{"genus", s.genus}, {"boundaries", s.boundaries},
                {"partition", partition_to_json(s.partition)}};
}

PartitionedSurface surface_from_json(const Json& j)
{
    return guarded([&] {
        check_schema(j);
        std::vector<Label> bs = labels_from_json(j.at("boundaries"));
        Partition p = j.contains("partition") ? partition_from_json(j.at("partition")) : Partition{};
        return make_surface(j.at("genus").get<int>(), bs, p);
    });
}

Json class_to_json(const PartitionedSurface& s, const Vec& x)
{
    check_dim(s, x);
    Json a = Json::array(), b = Json::array(), beta = Json::object(), h = Json::object();
    for (std::size_t i = 0; i < static_cast<std::size_t>(s.genus); ++i) {
        a.push_back(int_to_json(x[s.a_index(i)]));
        b.push_back(int_to_json(x[s.b_index(i)]));
    }
    for (Label l : s.boundaries) {
        beta[std::to_string(l)] = int_to_json(x[s.beta_index(l)]);
        if (auto k = s.h_index(l))
            h[std::to_string(l)] = int_to_json(x[*k]);
    }
    return Json{{"a", a}, {"b", b}, {"beta", beta}, {"h", h}};
}

Vec class_from_json(const PartitionedSurface& s, const Json& j)
{
    return guarded([&] {
        if (!j.is_object())
            throw Error("malformed-json", "class must be an object");
        Vec x = zero_vec(s.ambient_dim());
        std::size_t g = static_cast<std::size_t>(s.genus);
        for (const char* key : {"a", "b"}) {
            if (!j.contains(key))
                continue;
            Vec v = vec_from_json(j.at(key));
            if (v.size() != g)
                throw Error("dimension-mismatch", std::string(key) + " needs " + std::to_string(g) +
                                                      " entries");
            for (std::size_t i = 0; i < g; ++i)
                x[key[0] == 'a' ? s.a_index(i) : s.b_index(i)] = v[i];
        }
        if (j.contains("beta"))
            for (const auto& [k, val] : j.at("beta").items())
                x[s.beta_index(label_from_key(k))] = int_from_json(val);
        if (j.contains("h"))
            for (const auto& [k, val] : j.at("h").items()) {
                Label l = label_from_key(k);
                Int c = int_from_json(val);
                auto idx = s.h_index(l);
                if (!idx) {
                    if (c != 0)
                        throw Error("anchor-arc", "the first boundary label carries no arc coordinate");
                    continue;
                }
                x[*idx] = c;
            }
        return x;
    });
}

Json word_to_json(const PartitionedSurface& s, const TwistWord& w)
{
    Json fs = Json::array();
    for (const auto& f : w.factors)
        fs.push_back(Json{{"class", class_to_json(s, f.cls)}, {"exp", int_to_json(f.exp)}});
    Json pairs = Json::array();
    for (const auto& [i, k] : w.assertions.disjoint_pairs)
        pairs.push_back(Json::array({i, k}));
    return Json{{"factors", fs},
                {"assertions", Json{{"simple", w.assertions.simple}, {"disjoint_pairs", pairs}}}};
}

TwistWord word_from_json(const PartitionedSurface& s, const Json& j)
{
    return guarded([&] {
        check_schema(j);
        TwistWord w;
        for (const auto& f : j.at("factors")) {
            TwistFactor t;
            t.cls = class_from_json(s, f.at("class"));
            t.exp = f.contains("exp") ? int_from_json(f.at("exp")) : Int(1);
            w.factors.push_back(t);
        }
        if (j.contains("assertions")) {
            const Json& a = j.at("assertions");
            w.assertions.simple = a.value("simple", false);
            if (a.contains("disjoint_pairs"))
                for (const auto& p : a.at("disjoint_pairs")) {
                    if (!p.is_array() || p.size() != 2)
                        throw Error("malformed-json", "disjoint pair must have two indices");
                    w.assertions.disjoint_pairs.emplace_back(p[0].get<std::size_t>(),
                                                             p[1].get<std::size_t>());
                }
        }
        return w;
    });
}

Json shell_to_json(const SurfaceShell& s)
{
    return Json{{"genus", s.genus}, {"boundaries", s.boundaries}};
}

SurfaceShell shell_from_json(const Json& j)
{
    return guarded([&] {
        return SurfaceShell{j.at("genus").get<int>(), labels_from_json(j.at("boundaries"))};
    });
}

Json embedding_to_json(const EmbeddingCombinatorics& e)
{
    Json cs = Json::array();
    for (const auto& c : e.components)
        cs.push_back(Json{{"genus", c.genus}, {"B", c.B}, {"Bprime", c.Bprime}});
    return Json{{"source", shell_to_json(e.source)}, {"target", shell_to_json(e.target)},
                {"components", cs}};
}

EmbeddingCombinatorics embedding_from_json(const Json& j)
{
    return guarded([&] {
        check_schema(j);
        EmbeddingCombinatorics e;
        e.source = shell_from_json(j.at("source"));
        e.target = shell_from_json(j.at("target"));
        for (const auto& c : j.at("components"))
            e.components.push_back(Component{c.at("genus").get<int>(), labels_from_json(c.at("B")),
                                             labels_from_json(c.at("Bprime"))});
        return e;
    });
}

Json slice_to_json(const ComplexSlice& s)
{
    Json j{{"g", s.g},
           {"bound", s.bound},
           {"w", s.W ? vecs_to_json(*s.W) : Json(nullptr)},
           {"vertices", vecs_to_json(s.vertices)},
           {"edges", s.edges},
           {"triangles", s.triangles},
           {"aug_triangles", s.aug_triangles}};
    return j;
}

ComplexSlice slice_from_json(const Json& j)
{
    return guarded([&] {
        check_schema(j);
        ComplexSlice s;
        s.g = j.at("g").get<std::size_t>();
        s.bound = j.at("bound").get<long long>();
        if (j.contains("w") && !j.at("w").is_null())
            s.W = vecs_from_json(j.at("w"));
        s.vertices = vecs_from_json(j.at("vertices"));
        s.edges = j.at("edges").get<std::vector<std::array<std::size_t, 2>>>();
        s.triangles = j.at("triangles").get<std::vector<std::array<std::size_t, 3>>>();
        s.aug_triangles = j.at("aug_triangles").get<std::vector<std::array<std::size_t, 3>>>();
        std::size_t nv = s.vertices.size();
        for (const auto& e : s.edges)
            for (auto i : e)
                if (i >= nv)
                    throw Error("malformed-json", "edge index out of range");
        for (const auto* ts : {&s.triangles, &s.aug_triangles})
            for (const auto& t : *ts)
                for (auto i : t)
                    if (i >= nv)
                        throw Error("malformed-json", "triangle index out of range");
        return s;
    });
}

Json path_to_json(const PathInComplex& p)
{
    return Json{{"g", p.g}, {"mode", to_string(p.mode)}, {"closed", p.closed},
                {"vertices", vecs_to_json(p.vertices)}};
}

PathInComplex path_from_json(const Json& j)
{
    return guarded([&] {
        check_schema(j);
        PathInComplex p;
        p.mode = edge_mode_from(j.value("mode", std::string("isotropic")));
        p.g = j.value("g", std::size_t{0});
        p.closed = j.value("closed", true);
        p.vertices = lines_from_json(j.at("vertices"));
        if (p.mode == EdgeMode::Isotropic && p.g == 0 && !p.vertices.empty())
            p.g = p.vertices.front().size() / 2;
        return p;
    });
}

Json move_to_json(const Move& m)
{
    return Json{{"kind", to_string(m.kind)}, {"pos", m.pos}, {"payload", vecs_to_json(m.payload)},
                {"inverse", m.inverse}};
}

Move move_from_json(const Json& j)
{
    return guarded([&] {
        Move m;
        m.kind = move_kind_from(j.at("kind").get<std::string>());
        m.pos = j.at("pos").get<std::size_t>();
        m.payload = lines_from_json(j.at("payload"));
        m.inverse = j.value("inverse", false);
        return m;
    });
}

Json trace_to_json(const MoveTrace& t)
{
    Json ms = Json::array();
    for (const auto& m : t.moves)
        ms.push_back(move_to_json(m));
    return Json{{"g", t.initial.g},
                {"mode", to_string(t.initial.mode)},
                {"closed", t.initial.closed},
                {"initial", vecs_to_json(t.initial.vertices)},
                {"moves", ms},
                {"final", vecs_to_json(t.final_path.vertices)},
                {"notes", t.notes}};
}

MoveTrace trace_from_json(const Json& j)
{
    return guarded([&] {
        check_schema(j);
        MoveTrace t;
        PathInComplex base;
        base.mode = edge_mode_from(j.value("mode", std::string("isotropic")));
        base.g = j.value("g", std::size_t{0});
        base.closed = j.value("closed", true);
        t.initial = base;
        t.final_path = base;
        t.initial.vertices = lines_from_json(j.at("initial"));
        t.final_path.vertices = lines_from_json(j.at("final"));
        if (base.mode == EdgeMode::Isotropic && base.g == 0 && !t.initial.vertices.empty()) {
            t.initial.g = t.final_path.g = t.initial.vertices.front().size() / 2;
        }
        for (const auto& m : j.at("moves"))
            t.moves.push_back(move_from_json(m));
        if (j.contains("notes"))
            t.notes = j.at("notes").get<std::vector<std::string>>();
        return t;
    });
}

Json matrix_to_json(const IntMatrix& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i)
        a.push_back(vec_to_json(m.row(i)));
    return a;
}

Json stamped(Json j)
{
    j["schema_version"] = kSchemaVersion;
    return j;
}

void check_schema(const Json& j)
{
    if (j.is_object() && j.contains("schema_version")) {
        const Json& v = j.at("schema_version");
        if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
            throw Error("schema-version", "unsupported schema_version " + v.dump());
    }
}

Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed-json", e.what());
    }
}

Json load(const std::string& path_or_text)
{
    auto first = path_or_text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (path_or_text[first] == '{' || path_or_text[first] == '['))
        return parse(path_or_text);
    std::ifstream in(path_or_text);
    if (!in)
        throw Error("io-error", "cannot open " + path_or_text);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace torelli::io
