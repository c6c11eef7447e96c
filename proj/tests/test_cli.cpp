#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "symvec/cli.hpp"
#include "symvec/store_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = symvec::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const char* rel) {
    return (fs::path(SYMVEC_DATA_DIR) / rel).string();
}

struct TempDir {
    fs::path path;
    TempDir() {
        static std::atomic<int> serial{0};
        path = fs::temp_directory_path() /
               ("symvec_cli_" + std::to_string(::getpid()) + "_" + std::to_string(serial++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("sim prints the aggregate, or the whole story") {
    RunResult plain = run_cli({"--store", data_path("stores/fig2_store.json"), "sim", "--w1",
                               "automobile", "--w2", "car"});
    CHECK(plain.code == 0);
    CHECK(plain.out == "0.600000\n");

    RunResult cos = run_cli({"--store", data_path("stores/fig2_store.json"), "--measure",
                             "COSINE", "sim", "--w1", "automobile", "--w2", "car"});
    CHECK(cos.out == "0.750000\n");

    RunResult explained = run_cli({"--store", data_path("stores/fig2_store.json"), "sim", "--w1",
                                   "automobile", "--w2", "car", "--explain"});
    CHECK(explained.code == 0);
    CHECK(explained.out.find("OBJECT_OF jaccard=0.600000\n") != std::string::npos);
    CHECK(explained.out.find("aggregate=0.600000\n") != std::string::npos);
}

TEST_CASE("failures map to the documented exit codes") {
    // unknown word: domain
    RunResult domain = run_cli({"--store", data_path("stores/fig2_store.json"), "sim", "--w1",
                                "automobile", "--w2", "spaceship"});
    CHECK(domain.code == 1);
    CHECK(domain.err.find("error:") == 0);

    // missing store file: config
    RunResult config = run_cli({"--store", "/nonexistent/store.json", "sim", "--w1", "a",
                                "--w2", "b"});
    CHECK(config.code == 2);

    // no store configured at all: config
    CHECK(run_cli({"sim", "--w1", "a", "--w2", "b"}).code == 2);

    // unparseable flags: config, reported by the parser
    CHECK(run_cli({"sim", "--w1"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"--measure", "EUCLIDEAN", "sim", "--w1", "a", "--w2", "b", "--store",
                   data_path("stores/fig2_store.json")})
              .code == 2);

    // unrecorded prompt behind a fixture backend: backend
    TempDir dir;
    RunResult backend = run_cli({"--config", data_path("config/book_demo.json"), "acquire",
                                 "--word", "zeppelin", "--all", "--out",
                                 (dir.path / "z.json").string()});
    CHECK(backend.code == 3);
    CHECK(backend.err.find("fixture miss") != std::string::npos);
}

TEST_CASE("acquire builds a store and re-runs come out byte for byte") {
    TempDir dir;
    fs::path out_store = dir.path / "book.json";
    std::vector<std::string> args = {"--config", data_path("config/book_demo.json"), "acquire",
                                     "--word", "book", "--all", "--out", out_store.string()};

    RunResult first = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out.find("book HAS_PROP: 3 concepts\n") != std::string::npos);
    CHECK(first.out.find("wrote " + out_store.string() + "\n") != std::string::npos);
    REQUIRE(fs::exists(out_store));
    std::string bytes = symvec::read_file(out_store);

    // no temp or partial files stay behind
    std::size_t entries = 0;
    for (const auto& entry : fs::directory_iterator(dir.path)) {
        (void)entry;
        ++entries;
    }
    CHECK(entries == 1);

    RunResult second = run_cli(args);
    CHECK(second.code == 0);
    CHECK(symvec::read_file(out_store) == bytes);

    // the acquired profile scores exactly like the curated ontology store
    RunResult sim = run_cli({"--store", out_store.string(), "sim", "--w1", "book", "--w2",
                             "book"});
    CHECK(sim.out == "1.000000\n");
}

TEST_CASE("acquire can target a single dimension") {
    TempDir dir;
    fs::path out_store = dir.path / "props.json";
    RunResult r = run_cli({"--config", data_path("config/book_demo.json"), "acquire", "--word",
                           "book", "--dim", "HAS_PROP", "--out", out_store.string()});
    CHECK(r.code == 0);
    symvec::EmbeddingStore store = symvec::store_load(out_store);
    CHECK(store.at("book").has_dimension(symvec::Dimension::HasProp));
    CHECK_FALSE(store.at("book").has_dimension(symvec::Dimension::ObjectOf));

    CHECK(run_cli({"--config", data_path("config/book_demo.json"), "acquire", "--word", "book",
                   "--dim", "SIDEWAYS_OF", "--out", out_store.string()})
              .code == 2);
}

TEST_CASE("induce writes graphs and structures atomically") {
    TempDir dir;
    fs::path dot = dir.path / "lattice.dot";
    fs::path lattice = dir.path / "lattice.json";
    RunResult r = run_cli({"--store", data_path("stores/fig3_store.json"), "induce", "--out-dot",
                           dot.string(), "--out-lattice", lattice.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::string dot_text = symvec::read_file(dot);
    CHECK(dot_text.find("digraph lattice") != std::string::npos);
    CHECK(dot_text.find("\"T1\" -> \"T2\"") != std::string::npos);
    CHECK(symvec::read_file(lattice).find("\"top\"") != std::string::npos);

    // without output flags the graph goes to stdout
    RunResult to_stdout = run_cli({"--store", data_path("stores/fig3_store.json"), "induce"});
    CHECK(to_stdout.out == dot_text);
}

TEST_CASE("typesigs legend and signatures are stable") {
    RunResult r = run_cli({"--store", data_path("stores/ontology_facts_store.json"), "typesigs"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "types:\n"
          "  T1 = {book, car, person}\n"
          "  T2 = {book, car}\n"
          "  T3 = {book}\n"
          "  T4 = {car}\n"
          "  T5 = {person}\n"
          "  T6 = {}\n"
          "signatures:\n"
          "  BEAUTIFUL(T1)\n"
          "  BUYING(T5, T2)\n"
          "  DRIVING(T5, T4)\n"
          "  FAME(T1)\n"
          "  POPULARITY(T1)\n"
          "  READING(T5, T3)\n"
          "  REPAIRING(T4)\n"
          "  SELLING(T3)\n"
          "  WRITING(T5, T3)\n");
}

TEST_CASE("eval reports coverage and correlation from config paths") {
    RunResult r = run_cli({"--store", data_path("stores/eval_store.json"), "eval", "--benchmark",
                           data_path("benchmarks/eval_fixture_50.csv")});
    CHECK(r.code == 0);
    CHECK(r.out.find("pairs=50 covered=50 skipped=0\n") != std::string::npos);

    RunResult as_json = run_cli({"--store", data_path("stores/eval_store.json"), "eval",
                                 "--benchmark", data_path("benchmarks/eval_fixture_50.csv"),
                                 "--json"});
    CHECK(as_json.out.find("\"spearman\"") != std::string::npos);
}

TEST_CASE("generate replays a named template deterministically") {
    std::vector<std::string> args = {"--store", data_path("stores/generation_store.json"),
                                     "generate", "--template",
                                     data_path("templates/generation_fragments.json"), "--name",
                                     "fragment-1", "--seed", "7", "--count", "9"};
    RunResult first = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out.find("I enjoyed the interesting reading of the new book.\n") !=
          std::string::npos);
    CHECK(run_cli(args).out == first.out);

    CHECK(run_cli({"--store", data_path("stores/generation_store.json"), "generate",
                   "--template", data_path("templates/generation_fragments.json"), "--name",
                   "fragment-9"})
              .code == 2);
}

TEST_CASE("nominalize rewrites through the configured or built-in lexicon") {
    RunResult builtin = run_cli({"nominalize", "--sentence", "Olga is dancing"});
    CHECK(builtin.code == 0);
    CHECK(builtin.out == "(olga:person) —AGENT_OF— (dancing:activity)\n");

    RunResult from_config = run_cli({"--config", data_path("config/book_demo.json"),
                                     "nominalize", "--sentence", "Hamlet is inspiring"});
    CHECK(from_config.code == 0);
    CHECK(from_config.out == "(hamlet:book) —AGENT_OF— (inspiration:act)\n");

    CHECK(run_cli({"nominalize", "--sentence", "This makes no sense"}).code == 1);
}

TEST_CASE("config values yield to explicit flags") {
    // the config names the ontology store; the flag redirects to the
    // similarity fixture, where these words exist
    RunResult r = run_cli({"--config", data_path("config/book_demo.json"), "--store",
                           data_path("stores/fig2_store.json"), "sim", "--w1", "boy", "--w2",
                           "lad"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.486550\n");

    CHECK(run_cli({"--config", "/nonexistent/config.json", "sim", "--w1", "a", "--w2", "b"})
              .code == 2);
}
