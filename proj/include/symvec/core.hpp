#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symvec/error.hpp"

namespace symvec {

// The seven dimensions along which a word's usage is profiled.
enum class Dimension {
    AgentOf,
    ObjectOf,
    HasProp,
    InState,
    PartOf,
    InProcess,
    OfType,
};

inline constexpr std::array<Dimension, 7> kAllDimensions = {
    Dimension::AgentOf,  Dimension::ObjectOf,  Dimension::HasProp,
    Dimension::InState,  Dimension::PartOf,    Dimension::InProcess,
    Dimension::OfType,
};

std::string_view dimension_name(Dimension d);
std::optional<Dimension> parse_dimension(std::string_view name);

// Ontological category of an abstract entity produced by nominalization.
enum class Category {
    Entity,
    Property,
    State,
    Activity,
    Process,
    Event,
    Act,
    TypeName,
};

std::string_view category_name(Category c);
std::optional<Category> parse_category(std::string_view name);

// Lowercases ASCII letters and strips surrounding whitespace.
// Throws Domain on an empty result.
std::string normalize_lemma(std::string_view raw);

struct ConceptTerm {
    std::string lemma;
    std::optional<Category> category;

    explicit ConceptTerm(std::string_view raw, std::optional<Category> cat = std::nullopt)
        : lemma(normalize_lemma(raw)), category(cat) {}

    bool operator==(const ConceptTerm&) const = default;
};

// Weights are stored quantized to 6 decimal digits so that in-memory values
// and their decimal-text file representation are always the same doubles.
double quantize_weight(double w);

// Formats a quantized weight as decimal text with up to 6 fractional digits,
// trailing zeros trimmed ("0.8", "0.456789", "1").
std::string format_weight(double w);

// A fuzzy set of concept lemmas with membership weights in [0,1].
// Keys are normalized lemmas; iteration order is lexicographic. Inserting an
// existing lemma keeps the larger weight.
class WeightedConceptSet {
public:
    WeightedConceptSet() = default;

    static WeightedConceptSet from_pairs(
        std::initializer_list<std::pair<std::string_view, double>> pairs);

    // Validates weight in [0,1] (Domain error otherwise), normalizes the
    // lemma, quantizes the weight, and max-merges duplicates.
    void insert(std::string_view lemma, double weight);

    bool contains(const std::string& lemma) const { return entries_.count(lemma) > 0; }
    double weight_or_zero(const std::string& lemma) const;

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    const std::map<std::string, double>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const WeightedConceptSet&) const = default;

private:
    std::map<std::string, double> entries_;
};

// Fuzzy union: lemma-wise max, absence treated as weight 0.
WeightedConceptSet merge_sets(const WeightedConceptSet& a, const WeightedConceptSet& b);

// One word's profile: per dimension, a weighted concept set. A dimension that
// is absent is distinct from one that is present with an empty set.
struct SymbolicEmbedding {
    std::string word;
    std::map<Dimension, WeightedConceptSet> dims;

    bool has_dimension(Dimension d) const { return dims.count(d) > 0; }
    const WeightedConceptSet* dimension(Dimension d) const;

    bool operator==(const SymbolicEmbedding&) const = default;
};

struct StoreMetadata {
    std::string created;     // ISO-8601 UTC
    std::string provenance;  // free-form acquisition note

    bool operator==(const StoreMetadata&) const = default;
};

// Persistent collection of symbolic embeddings, keyed by word. Treat a fully
// built store as an immutable snapshot: readers share it freely across
// threads, and mutation happens on a private copy before publication.
class EmbeddingStore {
public:
    EmbeddingStore() = default;

    const StoreMetadata& metadata() const { return metadata_; }
    StoreMetadata& metadata() { return metadata_; }

    bool contains(const std::string& word) const { return words_.count(word) > 0; }
    const SymbolicEmbedding* find(const std::string& word) const;

    // Word lookup that throws Domain on a miss.
    const SymbolicEmbedding& at(const std::string& word) const;

    // Creates a word entry with no dimension sets (no-op if present).
    void set_word(std::string_view word);

    // Replaces (or creates) a word's set for one dimension.
    void set_dimension(std::string_view word, Dimension d, WeightedConceptSet set);

    // Fuzzy-union merge into a word's set for one dimension; creates the word
    // or dimension as needed. Never lowers an existing weight.
    void merge_dimension(std::string_view word, Dimension d, const WeightedConceptSet& set);

    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    const std::map<std::string, SymbolicEmbedding>& words() const { return words_; }

    bool operator==(const EmbeddingStore&) const = default;

private:
    std::map<std::string, SymbolicEmbedding> words_;
    StoreMetadata metadata_;
};

}  // namespace symvec
