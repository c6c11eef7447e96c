#include "symvec/filtering.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "symvec/induction.hpp"
#include "symvec/store_io.hpp"

namespace symvec {

using nlohmann::json;

ApplicabilityIndex::ApplicabilityIndex(std::set<std::string> universe,
                                       std::map<std::string, std::set<std::string>> applicability)
    : universe_(std::move(universe)), applicability_(std::move(applicability)) {
    if (universe_.size() < 2) {
        throw_config("applicability universe must contain at least 2 type names");
    }
    for (const auto& [modifier, types] : applicability_) {
        if (types.empty()) {
            throw_config("empty applicability set for modifier '" + modifier + "'");
        }
        for (const std::string& t : types) {
            if (universe_.count(t) == 0) {
                throw_config("applicability of '" + modifier + "' names type '" + t +
                             "' outside the universe");
            }
        }
    }
}

ApplicabilityIndex ApplicabilityIndex::from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw_config(std::string("malformed applicability document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("universe") || !doc["universe"].is_array() ||
        !doc.contains("modifiers") || !doc["modifiers"].is_object()) {
        throw_config("applicability document must have 'universe' array and 'modifiers' object");
    }
    std::set<std::string> universe;
    for (const json& t : doc["universe"]) {
        universe.insert(normalize_lemma(t.get<std::string>()));
    }
    std::map<std::string, std::set<std::string>> applicability;
    for (const auto& [modifier, types] : doc["modifiers"].items()) {
        std::set<std::string> names;
        for (const json& t : types) {
            names.insert(normalize_lemma(t.get<std::string>()));
        }
        applicability[normalize_lemma(modifier)] = std::move(names);
    }
    return ApplicabilityIndex(std::move(universe), std::move(applicability));
}

ApplicabilityIndex ApplicabilityIndex::load(const std::filesystem::path& source) {
    return from_json(read_file(source));
}

ApplicabilityIndex applicability_from_lattice(const TypeLattice& lattice) {
    std::set<std::string> universe;
    for (const TypeNode& node : lattice.nodes()) {
        if (!node.extent.empty()) universe.insert(node.label);
    }
    std::map<std::string, std::set<std::string>> applicability;
    for (const AttributeKey& key : lattice.attributes()) {
        if (key.slot != Dimension::HasProp) continue;
        // The attribute's extent is the extent of the widest node whose
        // intent carries it (its attribute concept).
        const TypeNode* widest = nullptr;
        for (const TypeNode& node : lattice.nodes()) {
            if (std::find(node.intent.begin(), node.intent.end(), key) == node.intent.end())
                continue;
            if (!widest || node.extent.size() > widest->extent.size()) widest = &node;
        }
        if (!widest || widest->extent.empty()) continue;
        std::set<std::string> spanned;
        for (const TypeNode& node : lattice.nodes()) {
            if (node.extent.empty()) continue;
            if (std::includes(widest->extent.begin(), widest->extent.end(),
                              node.extent.begin(), node.extent.end()))
                spanned.insert(node.label);
        }
        if (!spanned.empty()) applicability[key.predicate] = std::move(spanned);
    }
    return ApplicabilityIndex(std::move(universe), std::move(applicability));
}

const std::set<std::string>& ApplicabilityIndex::types_for(const std::string& modifier) const {
    auto it = applicability_.find(modifier);
    if (it == applicability_.end()) throw_domain("unknown modifier: " + modifier);
    return it->second;
}

double information_content(const std::string& modifier, const ApplicabilityIndex& index) {
    const auto& types = index.types_for(modifier);
    const double n = static_cast<double>(types.size());
    const double N = static_cast<double>(index.universe_size());
    return 1.0 - std::log(n) / std::log(N);
}

WeightedConceptSet prune_generic(const WeightedConceptSet& set, const ApplicabilityIndex& index,
                                 double theta) {
    WeightedConceptSet out;
    for (const auto& [lemma, weight] : set) {
        if (!index.contains(lemma) || information_content(lemma, index) >= theta) {
            out.insert(lemma, weight);
        }
    }
    return out;
}

EmbeddingStore prune_store_has_prop(const EmbeddingStore& store, const ApplicabilityIndex& index,
                                    double theta) {
    EmbeddingStore out = store;
    for (const auto& [word, embedding] : store.words()) {
        if (const WeightedConceptSet* props = embedding.dimension(Dimension::HasProp)) {
            out.set_dimension(word, Dimension::HasProp, prune_generic(*props, index, theta));
        }
    }
    return out;
}

}  // namespace symvec
