#include "symvec/nominalization.hpp"

#include <algorithm>

#include <json.hpp>

#include "symvec/store_io.hpp"

namespace symvec {

using nlohmann::json;

std::string_view copular_pattern_name(CopularPattern p) {
    switch (p) {
        case CopularPattern::AdjProperty:         return "ADJ_PROPERTY";
        case CopularPattern::AdjState:            return "ADJ_STATE";
        case CopularPattern::PassiveParticiple:   return "PASSIVE_PARTICIPLE";
        case CopularPattern::ProgressiveActivity: return "PROGRESSIVE_ACTIVITY";
        case CopularPattern::ProgressiveProcess:  return "PROGRESSIVE_PROCESS";
    }
    return "";
}

void validate_triple(const NominalizedTriple& triple) {
    bool ok = false;
    switch (triple.relation) {
        case Dimension::HasProp:   ok = triple.object_category == Category::Property; break;
        case Dimension::InState:   ok = triple.object_category == Category::State; break;
        case Dimension::ObjectOf:  ok = triple.object_category == Category::Event; break;
        case Dimension::AgentOf:
            ok = triple.object_category == Category::Activity ||
                 triple.object_category == Category::Act;
            break;
        case Dimension::InProcess: ok = triple.object_category == Category::Process; break;
        default: ok = false; break;
    }
    if (!ok) {
        throw_domain(std::string("inconsistent triple: relation ") +
                     std::string(dimension_name(triple.relation)) + " with category " +
                     std::string(category_name(triple.object_category)));
    }
}

void Lexicon::add_adjective(std::string_view surface, Category category,
                            std::string_view nominal) {
    if (category != Category::Property && category != Category::State) {
        throw_config("adjective category must be property or state");
    }
    std::string key = normalize_lemma(surface);
    std::string nom = normalize_lemma(nominal);
    adjectives_[key] = AdjectiveInfo{category, nom};
    nominal_to_surface_.emplace(nom, key);
}

void Lexicon::add_verb(std::string_view surface, VerbForm form, std::string_view nominal) {
    std::string key = normalize_lemma(surface);
    std::string nom = normalize_lemma(nominal);
    verbs_[key] = VerbInfo{form, nom};
    nominal_to_surface_.emplace(nom, key);
}

void Lexicon::add_subject(std::string_view lemma, std::string_view type_name) {
    subject_types_[normalize_lemma(lemma)] = normalize_lemma(type_name);
}

const Lexicon::AdjectiveInfo* Lexicon::adjective(const std::string& surface) const {
    auto it = adjectives_.find(surface);
    return it == adjectives_.end() ? nullptr : &it->second;
}

const Lexicon::VerbInfo* Lexicon::verb(const std::string& surface) const {
    auto it = verbs_.find(surface);
    return it == verbs_.end() ? nullptr : &it->second;
}

std::string Lexicon::subject_type(const std::string& lemma) const {
    auto it = subject_types_.find(lemma);
    return it == subject_types_.end() ? std::string("entity") : it->second;
}

const std::string* Lexicon::surface_for_nominal(const std::string& nominal) const {
    auto it = nominal_to_surface_.find(nominal);
    return it == nominal_to_surface_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw_config(std::string("malformed lexicon document: ") + e.what());
    }
    Lexicon lex;
    if (doc.contains("adjectives")) {
        for (const auto& [surface, info] : doc["adjectives"].items()) {
            auto cat = parse_category(info.value("category", std::string()));
            if (!cat) throw_config("adjective '" + surface + "' has no valid category");
            lex.add_adjective(surface, *cat, info.value("nominal", surface));
        }
    }
    if (doc.contains("verbs")) {
        for (const auto& [surface, info] : doc["verbs"].items()) {
            const std::string form = info.value("form", std::string());
            VerbForm vf;
            if (form == "passive") vf = VerbForm::Passive;
            else if (form == "gerund-activity") vf = VerbForm::GerundActivity;
            else if (form == "gerund-process") vf = VerbForm::GerundProcess;
            else if (form == "gerund-act") vf = VerbForm::GerundAct;
            else throw_config("verb '" + surface + "' has unknown form '" + form + "'");
            lex.add_verb(surface, vf, info.value("nominal", surface));
        }
    }
    if (doc.contains("subjects")) {
        for (const auto& [lemma, type_name] : doc["subjects"].items()) {
            lex.add_subject(lemma, type_name.get<std::string>());
        }
    }
    return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& source) {
    return from_json(read_file(source));
}

const Lexicon& Lexicon::builtin() {
    static const Lexicon lex = [] {
        Lexicon l;
        l.add_adjective("famous", Category::Property, "fame");
        l.add_adjective("sad", Category::State, "sadness");
        l.add_adjective("desirable", Category::Property, "desirability");
        l.add_adjective("inevitable", Category::Property, "inevitability");
        l.add_adjective("popular", Category::Property, "popularity");
        l.add_adjective("beautiful", Category::Property, "beauty");
        l.add_adjective("happy", Category::State, "happiness");
        l.add_verb("recognized", VerbForm::Passive, "recognition");
        l.add_verb("admired", VerbForm::Passive, "admiration");
        l.add_verb("dancing", VerbForm::GerundActivity, "dancing");
        l.add_verb("reading", VerbForm::GerundActivity, "reading");
        l.add_verb("maturing", VerbForm::GerundProcess, "maturity");
        l.add_verb("aging", VerbForm::GerundProcess, "aging");
        l.add_verb("inspiring", VerbForm::GerundAct, "inspiration");
        l.add_subject("john", "person");
        l.add_subject("jim", "person");
        l.add_subject("maria", "person");
        l.add_subject("olga", "person");
        l.add_subject("sara", "person");
        l.add_subject("hamlet", "book");
        l.add_subject("fame", "property");
        l.add_subject("death", "state");
        return l;
    }();
    return lex;
}

namespace {

bool single_token(const std::string& s) {
    return !s.empty() && s.find_first_of(" \t") == std::string::npos;
}

// Splits "<Subject> is <Complement>" into normalized subject and complement
// lemmas. Throws Domain when the sentence is not in the copular frame.
std::pair<std::string, std::string> split_copular(const std::string& sentence) {
    std::string text = sentence;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    while (!text.empty() && (text.back() == '.' || text.back() == '!')) text.pop_back();

    std::string lowered;
    lowered.reserve(text.size());
    for (char c : text) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    const std::string marker = " is ";
    auto pos = lowered.find(marker);
    if (pos == std::string::npos || pos == 0) {
        throw_domain("sentence is not in the copular frame '<Subject> is <Complement>': " + sentence);
    }
    std::string subject = lowered.substr(0, pos);
    std::string complement = lowered.substr(pos + marker.size());
    auto trim = [](std::string& s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    };
    trim(subject);
    trim(complement);
    if (!single_token(subject) || !single_token(complement)) {
        throw_domain("copular frame requires a single-token subject and complement: " + sentence);
    }
    return {subject, complement};
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

CopularPattern classify_complement(const std::string& complement, const Lexicon& lexicon) {
    if (const auto* adj = lexicon.adjective(complement)) {
        return adj->category == Category::Property ? CopularPattern::AdjProperty
                                                  : CopularPattern::AdjState;
    }
    if (const auto* verb = lexicon.verb(complement)) {
        switch (verb->form) {
            case Lexicon::VerbForm::Passive:        return CopularPattern::PassiveParticiple;
            case Lexicon::VerbForm::GerundActivity: return CopularPattern::ProgressiveActivity;
            case Lexicon::VerbForm::GerundAct:      return CopularPattern::ProgressiveActivity;
            case Lexicon::VerbForm::GerundProcess:  return CopularPattern::ProgressiveProcess;
        }
    }
    // Morphological fallback for words outside the lexicon.
    if (ends_with(complement, "ed") || ends_with(complement, "en")) {
        return CopularPattern::PassiveParticiple;
    }
    if (ends_with(complement, "ing")) {
        return CopularPattern::ProgressiveActivity;
    }
    throw_domain("complement '" + complement + "' is not in the lexicon and not morphologically decidable");
}

}  // namespace

CopularPattern classify_copular(const std::string& sentence, const Lexicon& lexicon) {
    auto [subject, complement] = split_copular(sentence);
    (void)subject;
    return classify_complement(complement, lexicon);
}

NominalizedTriple nominalize(const std::string& sentence, const Lexicon& lexicon) {
    auto [subject, complement] = split_copular(sentence);
    CopularPattern pattern = classify_complement(complement, lexicon);

    NominalizedTriple triple;
    triple.subject = TypedLemma{subject, lexicon.subject_type(subject)};

    switch (pattern) {
        case CopularPattern::AdjProperty:
        case CopularPattern::AdjState: {
            const auto* adj = lexicon.adjective(complement);
            triple.relation = pattern == CopularPattern::AdjProperty ? Dimension::HasProp
                                                                    : Dimension::InState;
            triple.object_lemma = adj->nominal;
            triple.object_category =
                pattern == CopularPattern::AdjProperty ? Category::Property : Category::State;
            break;
        }
        case CopularPattern::PassiveParticiple: {
            const auto* verb = lexicon.verb(complement);
            if (!verb) throw_domain("no nominal form in lexicon for '" + complement + "'");
            triple.relation = Dimension::ObjectOf;
            triple.object_lemma = verb->nominal;
            triple.object_category = Category::Event;
            break;
        }
        case CopularPattern::ProgressiveActivity: {
            const auto* verb = lexicon.verb(complement);
            if (!verb) throw_domain("no nominal form in lexicon for '" + complement + "'");
            triple.relation = Dimension::AgentOf;
            triple.object_lemma = verb->nominal;
            triple.object_category =
                verb->form == Lexicon::VerbForm::GerundAct ? Category::Act : Category::Activity;
            break;
        }
        case CopularPattern::ProgressiveProcess: {
            const auto* verb = lexicon.verb(complement);
            if (!verb) throw_domain("no nominal form in lexicon for '" + complement + "'");
            triple.relation = Dimension::InProcess;
            triple.object_lemma = verb->nominal;
            triple.object_category = Category::Process;
            break;
        }
    }
    validate_triple(triple);
    return triple;
}

std::vector<EmbeddingFact> triples_to_embedding_facts(
    const std::vector<NominalizedTriple>& triples) {
    std::vector<EmbeddingFact> facts;
    facts.reserve(triples.size());
    for (const NominalizedTriple& t : triples) {
        validate_triple(t);
        facts.push_back(EmbeddingFact{t.subject.lemma, t.relation, t.object_lemma, 1.0});
    }
    return facts;
}

void apply_facts(EmbeddingStore& store, const std::vector<EmbeddingFact>& facts) {
    for (const EmbeddingFact& f : facts) {
        WeightedConceptSet set;
        set.insert(f.concept_lemma, f.weight);
        store.merge_dimension(f.word, f.dimension, set);
    }
}

std::string format_triple(const NominalizedTriple& triple) {
    return "(" + triple.subject.lemma + ":" + triple.subject.type_name + ") —" +
           std::string(dimension_name(triple.relation)) + "— (" + triple.object_lemma + ":" +
           std::string(category_name(triple.object_category)) + ")";
}

std::string gloss(const NominalizedTriple& triple) {
    switch (triple.relation) {
        case Dimension::HasProp:
            return triple.subject.lemma + " has the property of " + triple.object_lemma;
        case Dimension::InState:
            return triple.subject.lemma + " is in a state of " + triple.object_lemma;
        case Dimension::ObjectOf:
            return triple.subject.lemma + " is the object of " + triple.object_lemma;
        case Dimension::AgentOf:
            return triple.subject.lemma + " is the agent of " + triple.object_lemma;
        case Dimension::InProcess:
            return triple.subject.lemma + " is in a process of " + triple.object_lemma;
        default:
            return triple.subject.lemma + " relates to " + triple.object_lemma;
    }
}

std::string to_copular(const NominalizedTriple& triple, const Lexicon& lexicon) {
    const std::string* surface = lexicon.surface_for_nominal(triple.object_lemma);
    if (!surface) {
        throw_domain("no surface form in lexicon for nominal '" + triple.object_lemma + "'");
    }
    return triple.subject.lemma + " is " + *surface;
}

}  // namespace symvec
