#include <doctest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "symvec/evaluation.hpp"
#include "symvec/store_io.hpp"

using namespace symvec;
namespace fs = std::filesystem;

TEST_CASE("benchmark rows parse with or without a header") {
    std::string with_header = "Word 1,Word 2,Human (mean)\ncar,Automobile,8.94\nbook,novel,8.65\n";
    std::vector<BenchmarkPair> pairs = parse_benchmark(with_header);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].word1 == "car");
    CHECK(pairs[0].word2 == "automobile");
    CHECK(pairs[0].human == 8.94);

    // headerless and CRLF input parse the same way
    CHECK(parse_benchmark("car,automobile,8.94\r\n\r\nbook,novel,8.65\n").size() == 2);

    for (const char* bad : {"car,automobile\n", "car,automobile,loud\n", "car,automobile,11\n",
                            "car,automobile,-0.5\n", ",automobile,5\n"}) {
        CAPTURE(bad);
        std::string text = std::string("w1,w2,score\n") + bad;
        try {
            parse_benchmark(text);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Config);
        }
    }
}

TEST_CASE("average ranks share tie positions") {
    CHECK(average_ranks({10.0, 20.0, 30.0}) == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(average_ranks({30.0, 10.0, 20.0}) == std::vector<double>{3.0, 1.0, 2.0});
    // a two-way tie takes the mean of positions 2 and 3
    CHECK(average_ranks({1.0, 5.0, 5.0, 9.0}) == std::vector<double>{1.0, 2.5, 2.5, 4.0});
    CHECK(average_ranks({7.0, 7.0, 7.0}) == std::vector<double>{2.0, 2.0, 2.0});
    // against the counting oracle on random data with forced ties
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> value(0, 9);
    for (int round = 0; round < 50; ++round) {
        std::vector<double> xs;
        for (int i = 0; i < 20; ++i) xs.push_back(value(rng));
        CHECK(average_ranks(xs) == oracle::counting_ranks(xs));
    }
}

TEST_CASE("rank correlation hits the exact endpoints") {
    CHECK(spearman({1, 2, 3, 4, 5}, {10, 20, 30, 40, 50}) == 1.0);
    CHECK(spearman({1, 2, 3, 4, 5}, {3, 9, 27, 81, 243}) == 1.0);
    CHECK(spearman({1, 2, 3, 4, 5}, {50, 40, 30, 20, 10}) == -1.0);
    // monotone through ties on one side only is no longer perfect
    CHECK(spearman({1, 2, 2, 4}, {10, 20, 30, 40}) < 1.0);
}

TEST_CASE("rank correlation matches the counting oracle on noisy data") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> value(0, 12);
    for (int round = 0; round < 100; ++round) {
        std::vector<double> xs, ys;
        for (int i = 0; i < 30; ++i) {
            xs.push_back(value(rng));
            ys.push_back(value(rng));
        }
        // skip the degenerate constant draws, they are domain errors
        bool const_x = std::all_of(xs.begin(), xs.end(), [&](double v) { return v == xs[0]; });
        bool const_y = std::all_of(ys.begin(), ys.end(), [&](double v) { return v == ys[0]; });
        if (const_x || const_y) continue;
        CHECK(spearman(xs, ys) == doctest::Approx(oracle::spearman(xs, ys)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate correlation inputs are domain errors") {
    try {
        spearman({1, 2}, {1, 2, 3});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
    CHECK_THROWS_AS(spearman({1}, {1}), Error);
    CHECK_THROWS_AS(spearman({2, 2, 2}, {1, 2, 3}), Error);
    CHECK_THROWS_AS(spearman({1, 2, 3}, {5, 5, 5}), Error);
}

TEST_CASE("evaluation skips missing words and reports why") {
    EmbeddingStore store;
    auto set = [&](const char* w, const char* lemma, double weight) {
        store.set_dimension(w, Dimension::HasProp,
                            WeightedConceptSet::from_pairs({{lemma, weight}}));
    };
    set("car", "fast", 0.9);
    set("automobile", "fast", 0.8);
    set("book", "long", 0.9);
    set("novel", "long", 0.85);

    std::vector<BenchmarkPair> pairs = {{"car", "automobile", 9.0},
                                        {"book", "novel", 8.0},
                                        {"car", "spaceship", 5.0},
                                        {"car", "book", 1.0}};
    EvalReport report = evaluate(store, pairs, SimilarityConfig{});
    CHECK(report.covered == 3);
    CHECK(report.skipped == 1);
    REQUIRE(report.pairs.size() == 4);
    CHECK_FALSE(report.pairs[2].covered);
    CHECK(report.pairs[2].skip_reason.find("spaceship") != std::string::npos);
    CHECK(report.pairs[0].covered);
    CHECK(report.pairs[0].system == doctest::Approx(8.0 / 9.0).epsilon(1e-12));

    // fewer than two covered pairs cannot be correlated
    std::vector<BenchmarkPair> thin = {{"car", "automobile", 9.0}, {"car", "rocket", 2.0}};
    try {
        evaluate(store, thin, SimilarityConfig{});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
        CHECK(std::string(e.what()).find("1 of 2") != std::string::npos);
    }
}

TEST_CASE("the fifty-pair fixture is fully covered and correlates") {
    EmbeddingStore store = store_load(fs::path(SYMVEC_DATA_DIR) / "stores" / "eval_store.json");
    std::vector<BenchmarkPair> pairs =
        load_benchmark(fs::path(SYMVEC_DATA_DIR) / "benchmarks" / "eval_fixture_50.csv");
    REQUIRE(pairs.size() == 50);

    EvalReport report = evaluate(store, pairs, SimilarityConfig{});
    CHECK(report.covered == 50);
    CHECK(report.skipped == 0);

    std::vector<double> human, system;
    for (const PairOutcome& p : report.pairs) {
        human.push_back(p.human);
        system.push_back(p.system);
    }
    CHECK(report.spearman == doctest::Approx(oracle::spearman(human, system)).epsilon(1e-12));
    // the measure genuinely tracks the human judgments on this vocabulary
    CHECK(report.spearman > 0.6);

    std::string text = report_to_text(report);
    CHECK(text.find("pairs=50 covered=50 skipped=0\n") != std::string::npos);
    CHECK(text.find("spearman=") != std::string::npos);
    std::string json_text = report_to_json(report);
    CHECK(json_text.find("\"covered\": 50") != std::string::npos);
}
