#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "symvec/similarity.hpp"

namespace symvec {

// One human judgment row: two words and a mean rating on the 0..10 scale.
struct BenchmarkPair {
    std::string word1;
    std::string word2;
    double human = 0.0;

    bool operator==(const BenchmarkPair&) const = default;
};

// Reads the published comma-separated layout ("Word 1,Word 2,Human (mean)"),
// skipping the header when present and lowercasing words. Malformed rows and
// out-of-range scores are Config errors.
std::vector<BenchmarkPair> parse_benchmark(const std::string& text);
std::vector<BenchmarkPair> load_benchmark(const std::filesystem::path& source);

// Spearman rank correlation with averaged tie ranks. Domain errors on a
// length mismatch, fewer than two points, or an all-constant side.
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

// Average ranks (1-based) of the values, ties sharing their mean position.
std::vector<double> average_ranks(const std::vector<double>& values);

struct PairOutcome {
    std::string word1;
    std::string word2;
    double human = 0.0;
    double system = 0.0;       // meaningful only when covered
    double human_rank = 0.0;   // ranks over the covered pairs
    double system_rank = 0.0;
    bool covered = false;
    std::string skip_reason;   // empty when covered

    bool operator==(const PairOutcome&) const = default;
};

struct EvalReport {
    double spearman = 0.0;
    std::size_t covered = 0;
    std::size_t skipped = 0;
    std::vector<PairOutcome> pairs;  // benchmark order

    bool operator==(const EvalReport&) const = default;
};

// Scores every pair whose words are both in the store and correlates the
// system scores with the human ones. Pairs with missing words are skipped
// and reported, never zero-scored. Domain error when fewer than two pairs
// are covered.
EvalReport evaluate(const EmbeddingStore& store, const std::vector<BenchmarkPair>& pairs,
                    const SimilarityConfig& config);

std::string report_to_json(const EvalReport& report);
std::string report_to_text(const EvalReport& report);

}  // namespace symvec
