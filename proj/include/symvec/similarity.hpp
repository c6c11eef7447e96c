#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symvec/core.hpp"

namespace symvec {

enum class Measure { Cosine, WeightedJaccard };
enum class MissingPolicy { SkipRenormalize, Zero };

std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);
std::string_view missing_policy_name(MissingPolicy p);
std::optional<MissingPolicy> parse_missing_policy(std::string_view name);

struct SimilarityConfig {
    Measure measure = Measure::WeightedJaccard;
    // Dimension weights; defaults to 1 for all seven dimensions.
    std::map<Dimension, double> alpha = default_alpha();
    MissingPolicy policy = MissingPolicy::SkipRenormalize;

    static std::map<Dimension, double> default_alpha();
    // At least one alpha must be positive, none negative.
    void validate() const;
};

// Per-dimension outcome. BothMissing ("both-empty" in serialized reports)
// means neither embedding records the dimension; a present-but-empty set still
// counts as computed, scored by the empty-set rules.
enum class DimFlag { Computed, MissingLeft, MissingRight, BothMissing };

std::string_view dim_flag_name(DimFlag f);

struct DimScore {
    DimFlag flag = DimFlag::BothMissing;
    double score = 0.0;
    bool included = false;  // contributes to the aggregate under the policy
};

struct SimilarityReport {
    std::string word1;
    std::string word2;
    Measure measure = Measure::WeightedJaccard;
    MissingPolicy policy = MissingPolicy::SkipRenormalize;
    std::map<Dimension, double> alpha;
    std::map<Dimension, DimScore> dims;
    double aggregate = 0.0;
};

// Similarity of two fuzzy sets in [0,1]. Weighted Jaccard is sum-min over
// sum-max across the lemma union; cosine is the sparse dot product over the
// norms. Two empty sets score 1, exactly one empty scores 0.
double dim_similarity(const WeightedConceptSet& a, const WeightedConceptSet& b, Measure measure);

// Alpha-weighted mean of per-dimension scores over the dimensions the policy
// admits. Symmetric in the two words; throws Domain on an unknown word.
SimilarityReport similarity(const std::string& word1, const std::string& word2,
                            const EmbeddingStore& store, const SimilarityConfig& config);

// The k highest-scoring other words, ties broken lexicographically.
std::vector<std::pair<std::string, double>> nearest(const std::string& word,
                                                    const EmbeddingStore& store, int k,
                                                    const SimilarityConfig& config);

std::string report_to_json(const SimilarityReport& report);
// The --explain surface: one line per dimension plus the aggregate.
std::string report_to_text(const SimilarityReport& report);

}  // namespace symvec
