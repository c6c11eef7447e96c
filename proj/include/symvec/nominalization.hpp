#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "symvec/core.hpp"

namespace symvec {

enum class CopularPattern {
    AdjProperty,
    AdjState,
    PassiveParticiple,
    ProgressiveActivity,
    ProgressiveProcess,
};

std::string_view copular_pattern_name(CopularPattern p);

struct TypedLemma {
    std::string lemma;
    std::string type_name;

    bool operator==(const TypedLemma&) const = default;
};

// A copular sentence rewritten as a typed relation over an abstract entity,
// e.g. (john : person) -HAS_PROP- (fame : property).
struct NominalizedTriple {
    TypedLemma subject;
    Dimension relation;
    std::string object_lemma;
    Category object_category;

    bool operator==(const NominalizedTriple&) const = default;
};

// Throws Domain if the relation/category pairing is inconsistent
// (HAS_PROP->property, IN_STATE->state, OBJECT_OF->event,
// AGENT_OF->activity|act, IN_PROCESS->process).
void validate_triple(const NominalizedTriple& triple);

// Vocabulary the frame-based rewriter runs on: adjective classifications and
// nominal forms, verb-form nominals, and subject types.
class Lexicon {
public:
    enum class VerbForm { Passive, GerundActivity, GerundProcess, GerundAct };

    struct AdjectiveInfo {
        Category category;  // Property or State
        std::string nominal;
    };
    struct VerbInfo {
        VerbForm form;
        std::string nominal;
    };

    void add_adjective(std::string_view surface, Category category, std::string_view nominal);
    void add_verb(std::string_view surface, VerbForm form, std::string_view nominal);
    void add_subject(std::string_view lemma, std::string_view type_name);

    const AdjectiveInfo* adjective(const std::string& surface) const;
    const VerbInfo* verb(const std::string& surface) const;
    // Subject type lookup; "entity" when unknown.
    std::string subject_type(const std::string& lemma) const;

    // Inverse lookup nominal -> surface form, for regenerating copular text.
    const std::string* surface_for_nominal(const std::string& nominal) const;

    static Lexicon from_json(std::string_view text);
    static Lexicon load(const std::filesystem::path& source);
    // The bundled vocabulary, compiled in so the CLI works without a file.
    static const Lexicon& builtin();

private:
    std::map<std::string, AdjectiveInfo> adjectives_;
    std::map<std::string, VerbInfo> verbs_;
    std::map<std::string, std::string> subject_types_;
    std::map<std::string, std::string> nominal_to_surface_;
};

// Determines the pattern of a "<Subject> is <Complement>" sentence from
// complement morphology and the lexicon. Throws Domain when the sentence is
// not in the copular frame or the complement is undecidable.
CopularPattern classify_copular(const std::string& sentence, const Lexicon& lexicon);

NominalizedTriple nominalize(const std::string& sentence, const Lexicon& lexicon);

struct EmbeddingFact {
    std::string word;
    Dimension dimension;
    std::string concept_lemma;
    double weight;

    bool operator==(const EmbeddingFact&) const = default;
};

// Each triple becomes one asserted membership fact at weight 1.0.
std::vector<EmbeddingFact> triples_to_embedding_facts(const std::vector<NominalizedTriple>& triples);

void apply_facts(EmbeddingStore& store, const std::vector<EmbeddingFact>& facts);

// "(olga:person) —AGENT_OF— (dancing:activity)"
std::string format_triple(const NominalizedTriple& triple);

// English gloss, e.g. "john has the property of fame".
std::string gloss(const NominalizedTriple& triple);

// Regenerates the copular sentence via the inverse lexicon ("john is famous").
std::string to_copular(const NominalizedTriple& triple, const Lexicon& lexicon);

}  // namespace symvec
