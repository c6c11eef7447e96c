#include "symvec/core.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace symvec {

std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::AgentOf:   return "AGENT_OF";
        case Dimension::ObjectOf:  return "OBJECT_OF";
        case Dimension::HasProp:   return "HAS_PROP";
        case Dimension::InState:   return "IN_STATE";
        case Dimension::PartOf:    return "PART_OF";
        case Dimension::InProcess: return "IN_PROCESS";
        case Dimension::OfType:    return "OF_TYPE";
    }
    return "";
}

std::optional<Dimension> parse_dimension(std::string_view name) {
    for (Dimension d : kAllDimensions) {
        if (dimension_name(d) == name) return d;
    }
    return std::nullopt;
}

std::string_view category_name(Category c) {
    switch (c) {
        case Category::Entity:   return "entity";
        case Category::Property: return "property";
        case Category::State:    return "state";
        case Category::Activity: return "activity";
        case Category::Process:  return "process";
        case Category::Event:    return "event";
        case Category::Act:      return "act";
        case Category::TypeName: return "type-name";
    }
    return "";
}

std::optional<Category> parse_category(std::string_view name) {
    static constexpr std::array<Category, 8> all = {
        Category::Entity, Category::Property, Category::State,  Category::Activity,
        Category::Process, Category::Event,   Category::Act,    Category::TypeName,
    };
    for (Category c : all) {
        if (category_name(c) == name) return c;
    }
    return std::nullopt;
}

std::string normalize_lemma(std::string_view raw) {
    std::size_t begin = 0;
    std::size_t end = raw.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
    if (begin == end) throw_domain("empty lemma");
    std::string out;
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i]))));
    }
    return out;
}

double quantize_weight(double w) {
    return static_cast<double>(std::llround(w * 1e6)) / 1e6;
}

std::string format_weight(double w) {
    long long micro = std::llround(w * 1e6);
    if (micro <= 0) return "0";
    if (micro >= 1000000) return "1";
    char buf[16];
    std::snprintf(buf, sizeof(buf), "0.%06lld", micro);
    std::string s(buf);
    while (s.back() == '0') s.pop_back();
    return s;
}

WeightedConceptSet WeightedConceptSet::from_pairs(
    std::initializer_list<std::pair<std::string_view, double>> pairs) {
    WeightedConceptSet set;
    for (const auto& [lemma, weight] : pairs) set.insert(lemma, weight);
    return set;
}

void WeightedConceptSet::insert(std::string_view lemma, double weight) {
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw_domain("weight out of range [0,1]: " + std::to_string(weight));
    }
    std::string key = normalize_lemma(lemma);
    double q = quantize_weight(weight);
    auto [it, inserted] = entries_.emplace(std::move(key), q);
    if (!inserted && q > it->second) it->second = q;
}

double WeightedConceptSet::weight_or_zero(const std::string& lemma) const {
    auto it = entries_.find(lemma);
    return it == entries_.end() ? 0.0 : it->second;
}

WeightedConceptSet merge_sets(const WeightedConceptSet& a, const WeightedConceptSet& b) {
    WeightedConceptSet out = a;
    for (const auto& [lemma, weight] : b) out.insert(lemma, weight);
    return out;
}

const WeightedConceptSet* SymbolicEmbedding::dimension(Dimension d) const {
    auto it = dims.find(d);
    return it == dims.end() ? nullptr : &it->second;
}

const SymbolicEmbedding* EmbeddingStore::find(const std::string& word) const {
    auto it = words_.find(word);
    return it == words_.end() ? nullptr : &it->second;
}

const SymbolicEmbedding& EmbeddingStore::at(const std::string& word) const {
    const SymbolicEmbedding* e = find(word);
    if (!e) throw_domain("unknown word: " + word);
    return *e;
}

void EmbeddingStore::set_word(std::string_view word) {
    std::string key = normalize_lemma(word);
    SymbolicEmbedding& e = words_[key];
    e.word = key;
}

void EmbeddingStore::set_dimension(std::string_view word, Dimension d, WeightedConceptSet set) {
    std::string key = normalize_lemma(word);
    SymbolicEmbedding& e = words_[key];
    e.word = key;
    e.dims[d] = std::move(set);
}

void EmbeddingStore::merge_dimension(std::string_view word, Dimension d,
                                     const WeightedConceptSet& set) {
    std::string key = normalize_lemma(word);
    SymbolicEmbedding& e = words_[key];
    e.word = key;
    auto it = e.dims.find(d);
    if (it == e.dims.end()) {
        e.dims.emplace(d, set);
    } else {
        it->second = merge_sets(it->second, set);
    }
}

}  // namespace symvec
