#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symvec/induction.hpp"

namespace symvec {

// Outcome of asking whether a predication is category-appropriate. Truth is
// not at issue, only whether the combination makes sense.
struct SensibilityVerdict {
    bool sensible = false;
    std::string reason;  // empty exactly when sensible

    bool operator==(const SensibilityVerdict&) const = default;
};

// Sensible iff the context records the argument as incident to the
// (predicate, slot) attribute. Anything the context has no row or column
// for is judged not sensible.
SensibilityVerdict check_sensible(const std::string& predicate, Dimension slot,
                                  const std::string& argument, const FormalContext& context);

// Sensible iff some lattice node carries (predicate, slot) in its intent and
// the argument in its extent.
SensibilityVerdict check_sensible(const std::string& predicate, Dimension slot,
                                  const std::string& argument, const TypeLattice& lattice);

// How a template hole may be filled.
enum class ConstraintKind {
    NounOfType,             // nouns in the extent of a lattice node
    ModifierOf,             // modifiers a noun's HAS_PROP set licenses
    PredicateTakingObject,  // verbs a noun's OBJECT_OF set licenses
    AgentOf,                // nouns whose AGENT_OF set contains a verb
};

std::string_view constraint_kind_name(ConstraintKind kind);
std::optional<ConstraintKind> parse_constraint_kind(std::string_view name);

// One hole of a template. The target is a node label for NounOfType; for the
// other kinds it is either a fixed lemma or "slot:<hole>" referring to an
// earlier hole's filler. An explicit candidate list narrows the pool; every
// candidate still has to clear the constraint.
struct SlotSpec {
    std::string hole;
    ConstraintKind kind = ConstraintKind::ModifierOf;
    std::string target;
    std::vector<std::string> candidates;

    bool operator==(const SlotSpec&) const = default;
};

struct GenerationTemplate {
    std::string name;
    std::string text;  // holes written {hole}, each exactly once
    std::vector<SlotSpec> slots;

    bool operator==(const GenerationTemplate&) const = default;
};

// Shape checks: holes unique and matching the text one-for-one, slot
// references pointing at earlier holes only. Config errors name the template.
void validate_template(const GenerationTemplate& tmpl);

std::vector<GenerationTemplate> parse_generation_templates(const std::string& text);
std::vector<GenerationTemplate> load_generation_templates(const std::filesystem::path& source);

struct GeneratedSentence {
    std::string text;
    std::map<std::string, std::string> bindings;  // hole -> chosen lemma

    bool operator==(const GeneratedSentence&) const = default;
};

// Enumerates every constraint-satisfying filling, shuffles the enumeration
// with the seed, and returns up to count distinct sentences. Identical
// inputs give identical output lists. Domain error, naming the slot, when no
// complete filling exists.
std::vector<GeneratedSentence> generate(const GenerationTemplate& tmpl,
                                        const EmbeddingStore& store, const TypeLattice& lattice,
                                        std::uint64_t seed, int count);

}  // namespace symvec
