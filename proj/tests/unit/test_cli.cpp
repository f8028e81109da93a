#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lattica/config.hpp"
#include "lattica/error.hpp"
#include "lattica/io.hpp"
#include "lattica/pipeline.hpp"
#include "lattica/scaling.hpp"
#include "oracle.hpp"

using namespace lattica;
namespace fs = std::filesystem;

namespace {
const std::string data = LATTICA_TEST_DATA;
const std::string matrix = data + "/toy_matrix.csv";
const std::string entities = data + "/toy_entities.json";

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "lattica");
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("lattica_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    return p;
}
}  // namespace

TEST_CASE("config defaults and round trip") {
    PipelineConfig d;
    CHECK(d.delta == 0.25);
    CHECK(d.topn == 10);
    CHECK(d.p == 2);
    CHECK(d.q == 8);
    CHECK(d.minsupp == Rational(3, 100));
    CHECK(d.minconf == Rational(1, 2));

    PipelineConfig c;
    c.matrix = "m \"quoted\".csv";
    c.deltas = {0.1, 0.3};
    c.ns = {5, 10};
    c.families = {"crown", "ordinal"};
    c.tulip = true;
    c.minsupp = Rational(1, 7);
    c.seed = 42;
    auto text = emit_config(c);
    CHECK(emit_config(parse_config(text)) == text);
    auto back = parse_config(text);
    CHECK(back.matrix == c.matrix);
    CHECK(back.minsupp == Rational(1, 7));
    CHECK(back.families == c.families);

    auto parsed = parse_config("# comment\ndelta = 0.3\nminsupp = 0.05\nnormalize = true\nns = [5, 10]\n");
    CHECK(parsed.delta == 0.3);
    CHECK(parsed.minsupp == Rational(1, 20));
    CHECK(parsed.normalize);
    CHECK(parsed.ns == std::vector<std::size_t>{5, 10});
    CHECK_THROWS_AS(parse_config("nonsense = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("[table]\n"), ParseError);
    CHECK_THROWS_AS(parse_config("delta = \"x\"\n"), ParseError);
}

TEST_CASE("scale then lattice matches the golden file and the oracle") {
    auto dir = scratch("golden");
    auto r = run({"scale", "--matrix", matrix, "--delta", "0.25", "-o", (dir / "s").string()});
    REQUIRE(r.code == 0);
    r = run({"lattice", "--context", (dir / "s" / "context.cxt").string(), "-o", (dir / "l").string()});
    REQUIRE(r.code == 0);
    auto got = read_file((dir / "l" / "lattice.json").string());
    auto golden = read_file(data + "/toy_lattice_d025.json");
    CHECK(got == golden);

    auto ctx = threshold_scale(parse_matrix_csv(read_file(matrix)), 0.25);
    auto j = nlohmann::json::parse(golden);
    std::set<oracle::Mask> intents;
    for (const auto& c : j["concepts"]) {
        oracle::Mask b = 0;
        for (const auto& a : c["intent"]) b |= oracle::Mask{1} << ctx.attribute_index(a.get<std::string>());
        intents.insert(b);
    }
    CHECK(intents == oracle::intents(oracle::plain(ctx)));
    CHECK(fs::exists(dir / "l" / "config.toml"));
}

TEST_CASE("reruns are byte-identical") {
    auto a = scratch("rerun_a"), b = scratch("rerun_b");
    for (const auto& d : {a, b}) {
        REQUIRE(run({"draw", "--kind", "geometric", "--matrix", matrix, "--seed", "5", "-o", d.string()}).code == 0);
        REQUIRE(run({"motifs", "--matrix", matrix, "-o", d.string()}).code == 0);
        REQUIRE(run({"rules", "--matrix", matrix, "--minsupp", "0.1", "-o", d.string()}).code == 0);
    }
    for (auto f : {"geometric.svg", "motifs.json", "diagnostics.json", "rules.tsv", "rules.json"})
        CHECK(read_file((a / f).string()) == read_file((b / f).string()));
}

TEST_CASE("every command writes its outputs and config") {
    auto dir = scratch("all");
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"vectorize", "--corpus", data + "/toy_corpus.jsonl"}, "tfidf.csv"},
        {{"scale", "--matrix", matrix}, "context.cxt"},
        {{"sweep", "--matrix", matrix, "--deltas", "0.1,0.2"}, "sweep.tsv"},
        {{"sweep", "--terms", matrix, "--ns", "1,2,3"}, "curve.tsv"},
        {{"lattice", "--matrix", matrix}, "lattice.json"},
        {{"core", "--matrix", matrix, "--p", "1", "--q", "2"}, "core.cxt"},
        {{"iceberg", "--matrix", matrix, "--minsupp", "1/10"}, "iceberg.json"},
        {{"rules", "--matrix", matrix}, "rules.tsv"},
        {{"motifs", "--matrix", matrix, "--families", "contranominal,ordinal"}, "motifs.json"},
        {{"temporal", "--matrix", matrix, "--entities", entities, "--periods", "a:1990-1999,b:2000-2020"},
         "temporal.json"},
        {{"zoom", "--matrix", matrix, "--attribute", "Semantic Web"}, "zoom.json"},
        {{"draw", "--matrix", matrix, "--tulip", "--labels", data + "/toy_labels.txt"}, "lattice.svg"},
        {{"draw", "--matrix", matrix, "--format", "dot"}, "lattice.dot"},
        {{"report", "--matrix", matrix, "--entities", entities, "--names", "Ada,Grace"}, "report.tsv"},
    };
    std::size_t i = 0;
    for (auto [args, file] : cases) {
        auto out = dir / std::to_string(i++);
        args.push_back("-o");
        args.push_back(out.string());
        auto r = run(args);
        CHECK_MESSAGE(r.code == 0, args[0], ": ", r.err);
        CHECK_MESSAGE(fs::exists(out / file), args[0]);
        CHECK(fs::exists(out / "config.toml"));
    }
    auto report = read_file((dir / "13" / "report.tsv").string());
    CHECK(report.rfind("entity\tobjects\tattributes\tdensity\tconcepts\tcore_concepts\tview_concepts\n", 0) == 0);
    CHECK(report.find("\nAda\t6\t4\t0.500\t") != std::string::npos);
}

TEST_CASE("entity restriction") {
    auto dir = scratch("entity");
    auto r = run({"scale", "--matrix", matrix, "--entities", entities, "--entity", "Grace", "-o", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(load_context((dir / "context.cxt").string()).object_count() == 4);
    CHECK(run({"scale", "--matrix", matrix, "--entities", entities, "--entity", "Nobody", "-o", dir.string()}).code ==
          exit_input_error);
}

TEST_CASE("config file, environment and flag precedence") {
    auto dir = scratch("precedence");
    fs::create_directories(dir);
    auto cfg = dir / "run.toml";
    write_file_atomic(cfg.string(), "delta = 0.5\nmax_concepts = 3\nmatrix = \"" + matrix + "\"\n");

    auto r = run({"scale", "--config", cfg.string(), "-o", (dir / "a").string()});
    REQUIRE(r.code == 0);
    CHECK(parse_config(read_file((dir / "a" / "config.toml").string())).delta == 0.5);
    r = run({"scale", "--config", cfg.string(), "--delta", "0.3", "-o", (dir / "b").string()});
    CHECK(parse_config(read_file((dir / "b" / "config.toml").string())).delta == 0.3);

    CHECK(run({"lattice", "--config", cfg.string(), "-o", (dir / "c").string()}).code == exit_ceiling);
    ::setenv("LATTICA_MAX_CONCEPTS", "1000", 1);
    CHECK(run({"lattice", "--config", cfg.string(), "-o", (dir / "d").string()}).code == exit_ok);
    auto flag = run({"lattice", "--config", cfg.string(), "--max-concepts", "2", "-o", (dir / "e").string()});
    CHECK(flag.code == exit_ceiling);
    CHECK(flag.err.find("lattice too large") != std::string::npos);
    ::setenv("LATTICA_MAX_CONCEPTS", "lots", 1);
    CHECK(run({"lattice", "--matrix", matrix, "-o", (dir / "f").string()}).code == exit_input_error);
    ::unsetenv("LATTICA_MAX_CONCEPTS");
}

TEST_CASE("input errors exit with code 2") {
    auto dir = scratch("errors").string();
    CHECK(run({"lattice", "--context", "/does/not/exist.cxt", "-o", dir}).code == exit_input_error);
    CHECK(run({"lattice", "-o", dir}).code == exit_input_error);
    CHECK(run({"scale", "--matrix", matrix, "--delta", "2", "-o", dir}).code == exit_input_error);
    CHECK(run({"lattice", "--bogus"}).code == exit_input_error);
    CHECK(run({"frobnicate"}).code == exit_input_error);
    CHECK(run({"zoom", "--matrix", matrix, "--attribute", "Nope", "-o", dir}).code == exit_input_error);
    CHECK(run({"motifs", "--matrix", matrix, "--families", "star", "-o", dir}).code == exit_input_error);
    auto bad = scratch("bad");
    fs::create_directories(bad);
    write_file_atomic((bad / "bad.cxt").string(), "B\n\n1\n1\n\ng\nm\nQ\n");
    auto r = run({"lattice", "--context", (bad / "bad.cxt").string(), "-o", dir});
    CHECK(r.code == exit_input_error);
    CHECK(r.err.find("line 8") != std::string::npos);
    CHECK(run({"--help"}).code == exit_ok);
}
