#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "torelli/json_io.hpp"

using namespace torelli;
using io::Json;

namespace {

enum Status { kOk = 0, kPropertyFalse = 1, kInputError = 2, kSearchExhausted = 3 };

const char* status_name(int s)
{
    switch (s) {
    case kOk: return "ok";
    case kPropertyFalse: return "property-false";
    case kSearchExhausted: return "search-exhausted";
    default: return "input-error";
    }
}

int emit(Json payload, int status)
{
    payload["status"] = status_name(status);
    std::cout << io::stamped(std::move(payload)).dump(2) << "\n";
    return status;
}

void write_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error("io-error", "cannot write " + path);
    out << io::stamped(j).dump(2) << "\n";
}

std::vector<Vec> default_w() { return {vec_of({1, 0, 0, 0}), vec_of({0, 0, 1, 0})}; }

int cmd_h1p(const std::string& file)
{
    PartitionedSurface s = io::surface_from_json(io::load(file));
    H1PModule m = build_h1p(s);
    Json basis = Json::array();
    for (const auto& b : m.basis())
        basis.push_back(io::class_to_json(s, b));
    Json tors = Json::array();
    for (const auto& t : m.quotient().torsion())
        tors.push_back(io::int_to_json(t));
    return emit(Json{{"surface", io::surface_to_json(s)},
                     {"rank", m.rank()},
                     {"expected_rank", 2 * s.genus + 2 * (static_cast<long long>(s.n()) -
                                                          static_cast<long long>(s.partition.size()))},
                     {"torsion", tors},
                     {"basis", basis}},
                kOk);
}

int cmd_torelli(const std::string& sfile, const std::string& wfile)
{
    PartitionedSurface s = io::surface_from_json(io::load(sfile));
    TwistWord w = io::word_from_json(s, io::load(wfile));
    H1PModule m = build_h1p(s);
    TrivialityReport r = triviality_report(w, m);
    Json out{{"in_torelli", r.trivial}};
    if (!r.trivial) {
        out["first_moved"] = Json{{"index", *r.first_moved},
                                  {"class", io::class_to_json(s, r.moved_class)},
                                  {"image", io::class_to_json(s, r.image)}};
    }
    return emit(out, r.trivial ? kOk : kPropertyFalse);
}

int cmd_tsur(const std::string& efile, const std::string& p1s, const std::string& p2s)
{
    EmbeddingCombinatorics e = io::embedding_from_json(io::load(efile));
    Partition p1 = io::partition_from_json(io::load(p1s));
    Partition p2 = io::partition_from_json(io::load(p2s));
    bool ok = is_tsur_morphism(e, p1, p2);
    Json out{{"morphism", ok}};
    if (ok) {
        Json rm = Json::array();
        for (const auto& [q, p] : retraction_map(e, p1, p2))
            rm.push_back(Json{{"p2_block", q}, {"p1_block", p}});
        out["retraction"] = rm;
    } else if (auto w = find_witness(e, p1, p2)) {
        PartitionedSurface src = make_surface(e.source.genus, e.source.boundaries, p1);
        out["witness"] = Json{{"block", w->block}, {"word", io::word_to_json(src, w->word)}};
    }
    return emit(out, ok ? kOk : kPropertyFalse);
}

int cmd_complex(std::size_t g, long long bound, const std::string& wtext, const std::string& outp)
{
    std::optional<std::vector<Vec>> W;
    if (!wtext.empty())
        W = io::vecs_from_json(io::load(wtext));
    ComplexSlice s = enumerate_slice(g, bound, W);
    Json j = io::slice_to_json(s);
    if (!outp.empty()) {
        write_file(outp, j);
        return emit(Json{{"written", outp},
                         {"vertices", s.vertices.size()},
                         {"edges", s.edges.size()},
                         {"triangles", s.triangles.size()},
                         {"aug_triangles", s.aug_triangles.size()}},
                    kOk);
    }
    return emit(j, kOk);
}

int cmd_farey(long long bound, const std::string& wtext, bool diagnostic)
{
    std::vector<Vec> W = wtext.empty() ? default_w() : io::vecs_from_json(io::load(wtext));
    FareyReport r = farey_iso_check(W, bound);
    Json out{{"bound", r.bound},
             {"vertices", {{"slice", r.slice_vertices}, {"farey", r.farey_vertices}}},
             {"edges", {{"slice", r.slice_edges}, {"farey", r.farey_edges}}},
             {"triangles", {{"slice", r.slice_triangles}, {"farey", r.farey_triangles}}},
             {"mismatches", r.mismatches},
             {"details", r.details}};
    if (diagnostic) {
        H1Diagnostic d = slice_h1_diagnostic(enumerate_slice(2, bound, W));
        Json tors = Json::array();
        for (const auto& t : d.torsion)
            tors.push_back(io::int_to_json(t));
        out["h1"] = Json{{"b0", d.b0}, {"b1", d.b1}, {"torsion", tors}};
    }
    return emit(out, r.mismatches == 0 ? kOk : kPropertyFalse);
}

struct ContractArgs {
    std::string loop_file, verify_file, trace_file, emit_loop;
    std::int64_t budget = 0;
    bool random = false;
    std::size_t g = 3;
    std::uint64_t seed = 0;
    std::size_t length = 20;
    long long bound = 8;
};

MoveTrace run_contraction(const PathInComplex& p, std::int64_t budget)
{
    if (p.mode == EdgeMode::Farey)
        return farey_contract(p);
    if (p.g == 2) {
        Genus2Options o;
        if (budget > 0)
            o.fallback_budget = static_cast<std::size_t>(budget);
        return genus2_contract(p, o);
    }
    SearchOptions o;
    if (budget > 0)
        o.max_nodes = budget;
    return contract_g3_pipeline(p, o);
}

int cmd_contract(const ContractArgs& a)
{
    if (!a.verify_file.empty()) {
        MoveTrace t = io::trace_from_json(io::load(a.verify_file));
        std::string why;
        bool ok = verify_trace(t, &why);
        if (ok && !a.loop_file.empty()) {
            PathInComplex p = io::path_from_json(io::load(a.loop_file));
            if (!(p == t.initial)) {
                ok = false;
                why = "trace does not start at the given loop";
            }
        }
        Json out{{"verified", ok}, {"moves", t.moves.size()}};
        if (!ok)
            out["reason"] = why;
        return emit(out, ok ? kOk : kPropertyFalse);
    }
    PathInComplex p;
    if (a.random) {
        p = a.g == 2 ? embed_farey_loop(random_farey_loop(a.seed, a.length, a.bound), 2,
                                        vec_of({1, 0, 0, 0}), vec_of({0, 0, 1, 0}))
                     : random_contractible_loop(a.g, a.seed, a.length, a.bound).loop;
        if (!a.emit_loop.empty())
            write_file(a.emit_loop, io::path_to_json(p));
    } else {
        if (a.loop_file.empty())
            throw Error("missing-input", "give a loop file or --random");
        p = io::path_from_json(io::load(a.loop_file));
    }
    MoveTrace t = run_contraction(p, a.budget);
    bool ok = verify_trace(t) && t.final_path.vertices.size() == 1;
    if (!a.trace_file.empty())
        write_file(a.trace_file, io::trace_to_json(t));
    Json out{{"contracted", ok},
             {"length", p.length()},
             {"moves", t.moves.size()},
             {"final", io::vecs_to_json(t.final_path.vertices)},
             {"notes", t.notes}};
    if (a.trace_file.empty())
        out["trace"] = io::trace_to_json(t);
    return emit(out, ok ? kOk : kPropertyFalse);
}

int cmd_cap(const std::string& file)
{
    PartitionedSurface s = io::surface_from_json(io::load(file));
    CappingMap c = standard_capping(s);
    return emit(Json{{"surface", io::surface_to_json(s)},
                     {"closed_genus", c.closed_genus},
                     {"iota", io::matrix_to_json(c.iota)}},
                kOk);
}

int cmd_kernel(const std::string& file, Label b)
{
    PartitionedSurface s = io::surface_from_json(io::load(file));
    KernelReport k = birman_kernel_report(s, b);
    return emit(Json{{"case_tag", k.case_tag},
                     {"h1p_prime_rank", k.h1p_prime_rank},
                     {"capped", io::surface_to_json(k.capped)},
                     {"notes", k.notes}},
                kOk);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homology-level Torelli toolkit for partitioned surfaces"};
    app.require_subcommand(0, 1);
    bool schema = false;
    app.add_flag("--schema-version", schema, "Print the JSON schema version and exit");

    std::string f1, f2, p1, p2, wtext, outp;
    std::size_t g = 2;
    long long bound = 1;
    Label boundary = 0;
    bool check = false, diagnostic = false;
    ContractArgs ca;

    auto* h1p = app.add_subcommand("h1p", "Basis and rank of H1^P");
    h1p->add_option("surface", f1, "Surface JSON")->required();
    auto* tor = app.add_subcommand("torelli", "Torelli membership of a twist word");
    tor->add_option("surface", f1, "Surface JSON")->required();
    tor->add_option("word", f2, "Twist-word JSON")->required();
    auto* tsur = app.add_subcommand("tsur", "Morphism conditions for an embedding");
    tsur->add_option("embedding", f1, "Embedding JSON")->required();
    tsur->add_option("--p1", p1, "Source partition (JSON text or file)")->required();
    tsur->add_option("--p2", p2, "Target partition (JSON text or file)")->required();
    auto* cx = app.add_subcommand("complex", "Export a slice of the isotropic line complex");
    cx->add_option("--g", g, "Genus")->required();
    cx->add_option("--bound", bound, "Sup-norm window")->required();
    cx->add_option("--w", wtext, "Basis of a summand W (JSON text or file)");
    cx->add_option("--out", outp, "Write the slice to this file");
    auto* fa = app.add_subcommand("farey", "Compare a rank-2 slice with the Farey graph");
    fa->add_flag("--check", check, "Run the isomorphism check");
    fa->add_option("--bound", bound, "Sup-norm window")->required();
    fa->add_option("--w", wtext, "Isotropic rank-2 summand (default a1,a2)");
    fa->add_flag("--h1", diagnostic, "Also report H1 of the window");
    auto* co = app.add_subcommand("contract", "Contract or verify a loop");
    co->add_option("loop", ca.loop_file, "Loop JSON");
    co->add_option("--verify", ca.verify_file, "Replay a trace instead of contracting");
    co->add_option("--trace", ca.trace_file, "Write the contraction trace here");
    co->add_option("--budget", ca.budget, "Search node cap (g >= 3) or fallback move budget (g = 2)");
    co->add_flag("--random", ca.random, "Contract a random loop");
    co->add_option("--g", ca.g, "Genus of the random loop");
    co->add_option("--seed", ca.seed, "Seed of the random loop");
    co->add_option("--length", ca.length, "Target length of the random loop");
    co->add_option("--bound", ca.bound, "Sup-norm bound of the random loop");
    co->add_option("--emit-loop", ca.emit_loop, "Write the random loop here");
    auto* cap = app.add_subcommand("cap", "Standard capping matrix");
    cap->add_option("surface", f1, "Surface JSON")->required();
    auto* ker = app.add_subcommand("kernel", "Birman kernel report");
    ker->add_option("surface", f1, "Surface JSON")->required();
    ker->add_option("--boundary", boundary, "Boundary label to cap")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    if (schema) {
        std::cout << io::kSchemaVersion << "\n";
        return kOk;
    }
    try {
        if (*h1p)
            return cmd_h1p(f1);
        if (*tor)
            return cmd_torelli(f1, f2);
        if (*tsur)
            return cmd_tsur(f1, p1, p2);
        if (*cx)
            return cmd_complex(g, bound, wtext, outp);
        if (*fa) {
            if (!check)
                throw Error("missing-flag", "farey needs --check");
            return cmd_farey(bound, wtext, diagnostic);
        }
        if (*co)
            return cmd_contract(ca);
        if (*cap)
            return cmd_cap(f1);
        if (*ker)
            return cmd_kernel(f1, boundary);
        std::cout << app.help() << "\n";
        return kInputError;
    } catch (const SearchExhausted& e) {
        return emit(Json{{"error", e.code()}, {"detail", e.what()}}, kSearchExhausted);
    } catch (const Error& e) {
        return emit(Json{{"error", e.code()}, {"detail", e.what()}}, kInputError);
    } catch (const std::exception& e) {
        return emit(Json{{"error", "internal"}, {"detail", e.what()}}, kInputError);
    }
}
