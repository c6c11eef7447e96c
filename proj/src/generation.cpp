#include "symvec/generation.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "symvec/store_io.hpp"

namespace symvec {

using nlohmann::json;

namespace {

SensibilityVerdict no_evidence(const std::string& predicate, Dimension slot,
                               const std::string& argument) {
    SensibilityVerdict v;
    v.sensible = false;
    v.reason = "no evidence: " + argument + " as " + std::string(dimension_name(slot)) +
               " of " + predicate;
    return v;
}

}  // namespace

SensibilityVerdict check_sensible(const std::string& predicate, Dimension slot,
                                  const std::string& argument, const FormalContext& context) {
    auto i = context.object_index(argument);
    auto j = context.attribute_index({predicate, slot});
    if (!i || !j || !context.incident(*i, *j)) return no_evidence(predicate, slot, argument);
    return {true, ""};
}

SensibilityVerdict check_sensible(const std::string& predicate, Dimension slot,
                                  const std::string& argument, const TypeLattice& lattice) {
    const AttributeKey key{predicate, slot};
    for (const TypeNode& node : lattice.nodes()) {
        if (std::find(node.intent.begin(), node.intent.end(), key) == node.intent.end())
            continue;
        if (std::binary_search(node.extent.begin(), node.extent.end(), argument))
            return {true, ""};
    }
    return no_evidence(predicate, slot, argument);
}

std::string_view constraint_kind_name(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::NounOfType:            return "noun-of-type";
        case ConstraintKind::ModifierOf:            return "modifier-of";
        case ConstraintKind::PredicateTakingObject: return "predicate-taking-object";
        case ConstraintKind::AgentOf:               return "agent-of";
    }
    return "";
}

std::optional<ConstraintKind> parse_constraint_kind(std::string_view name) {
    for (ConstraintKind kind : {ConstraintKind::NounOfType, ConstraintKind::ModifierOf,
                                ConstraintKind::PredicateTakingObject, ConstraintKind::AgentOf}) {
        if (name == constraint_kind_name(kind)) return kind;
    }
    return std::nullopt;
}

namespace {

constexpr std::string_view kSlotPrefix = "slot:";

bool is_slot_reference(const std::string& target) {
    return target.rfind(kSlotPrefix, 0) == 0;
}

std::string slot_reference_name(const std::string& target) {
    return target.substr(kSlotPrefix.size());
}

// Hole names appearing in the text, with multiplicity.
std::vector<std::string> holes_in_text(const std::string& text, const std::string& tmpl_name) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while ((pos = text.find('{', pos)) != std::string::npos) {
        std::size_t end = text.find('}', pos);
        if (end == std::string::npos)
            throw_config("template '" + tmpl_name + "' has an unclosed hole");
        out.push_back(text.substr(pos + 1, end - pos - 1));
        pos = end + 1;
    }
    return out;
}

}  // namespace

void validate_template(const GenerationTemplate& tmpl) {
    if (tmpl.name.empty()) throw_config("template without a name");
    std::vector<std::string> text_holes = holes_in_text(tmpl.text, tmpl.name);
    std::set<std::string> declared;
    for (std::size_t i = 0; i < tmpl.slots.size(); ++i) {
        const SlotSpec& slot = tmpl.slots[i];
        if (slot.hole.empty())
            throw_config("template '" + tmpl.name + "' declares an unnamed hole");
        if (!declared.insert(slot.hole).second)
            throw_config("template '" + tmpl.name + "' declares hole '" + slot.hole +
                         "' twice");
        if (slot.target.empty())
            throw_config("template '" + tmpl.name + "' hole '" + slot.hole +
                         "' has no target");
        if (is_slot_reference(slot.target)) {
            if (slot.kind == ConstraintKind::NounOfType)
                throw_config("template '" + tmpl.name + "' hole '" + slot.hole +
                             "': noun-of-type takes a node label, not a slot");
            std::string ref = slot_reference_name(slot.target);
            bool earlier = false;
            for (std::size_t j = 0; j < i; ++j) {
                if (tmpl.slots[j].hole == ref) earlier = true;
            }
            if (!earlier)
                throw_config("template '" + tmpl.name + "' hole '" + slot.hole +
                             "' refers to '" + ref + "', which is not an earlier hole");
        }
        if (std::count(text_holes.begin(), text_holes.end(), slot.hole) != 1)
            throw_config("template '" + tmpl.name + "' text must use hole '" + slot.hole +
                         "' exactly once");
    }
    for (const std::string& name : text_holes) {
        if (declared.count(name) == 0)
            throw_config("template '" + tmpl.name + "' text uses undeclared hole '" + name +
                         "'");
    }
}

std::vector<GenerationTemplate> parse_generation_templates(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw_config("malformed template document");
    if (!doc.contains("version") || doc["version"] != "1")
        throw_config("template document has an unsupported version");
    if (!doc.contains("templates") || !doc["templates"].is_array())
        throw_config("template document needs a templates array");

    std::vector<GenerationTemplate> out;
    for (const json& entry : doc["templates"]) {
        if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string() ||
            !entry.contains("text") || !entry["text"].is_string())
            throw_config("each template needs a name and a text");
        GenerationTemplate tmpl;
        tmpl.name = entry["name"].get<std::string>();
        tmpl.text = entry["text"].get<std::string>();
        if (entry.contains("slots")) {
            if (!entry["slots"].is_array())
                throw_config("template '" + tmpl.name + "' slots must be an array");
            for (const json& s : entry["slots"]) {
                if (!s.is_object() || !s.contains("hole") || !s["hole"].is_string() ||
                    !s.contains("kind") || !s["kind"].is_string() || !s.contains("target") ||
                    !s["target"].is_string())
                    throw_config("template '" + tmpl.name +
                                 "' slots need hole, kind, and target");
                SlotSpec slot;
                slot.hole = s["hole"].get<std::string>();
                auto kind = parse_constraint_kind(s["kind"].get<std::string>());
                if (!kind)
                    throw_config("template '" + tmpl.name + "' hole '" + slot.hole +
                                 "' has unknown kind '" + s["kind"].get<std::string>() + "'");
                slot.kind = *kind;
                slot.target = s["target"].get<std::string>();
                if (s.contains("candidates")) {
                    if (!s["candidates"].is_array())
                        throw_config("template '" + tmpl.name + "' hole '" + slot.hole +
                                     "' candidates must be an array");
                    for (const json& c : s["candidates"]) {
                        if (!c.is_string())
                            throw_config("template '" + tmpl.name + "' hole '" + slot.hole +
                                         "' candidates must be strings");
                        slot.candidates.push_back(normalize_lemma(c.get<std::string>()));
                    }
                    std::sort(slot.candidates.begin(), slot.candidates.end());
                    slot.candidates.erase(
                        std::unique(slot.candidates.begin(), slot.candidates.end()),
                        slot.candidates.end());
                }
                tmpl.slots.push_back(std::move(slot));
            }
        }
        validate_template(tmpl);
        out.push_back(std::move(tmpl));
    }
    return out;
}

std::vector<GenerationTemplate> load_generation_templates(const std::filesystem::path& source) {
    return parse_generation_templates(read_file(source));
}

namespace {

std::string resolve_target(const SlotSpec& slot,
                           const std::map<std::string, std::string>& bindings) {
    if (is_slot_reference(slot.target)) return bindings.at(slot_reference_name(slot.target));
    return normalize_lemma(slot.target);
}

// Lemmas admissible for one hole given earlier choices, in sorted order.
std::vector<std::string> admissible_fillers(const SlotSpec& slot, const EmbeddingStore& store,
                                            const TypeLattice& lattice,
                                            const std::map<std::string, std::string>& bindings) {
    std::vector<std::string> pool;
    if (slot.kind == ConstraintKind::NounOfType) {
        auto index = lattice.index_of_label(slot.target);
        if (!index) throw_domain("unknown type label: " + slot.target);
        pool = lattice.node(*index).extent;
    } else if (slot.kind == ConstraintKind::AgentOf) {
        std::string verb = resolve_target(slot, bindings);
        for (const auto& [word, embedding] : store.words()) {
            const WeightedConceptSet* agents = embedding.dimension(Dimension::AgentOf);
            if (agents && agents->contains(verb)) pool.push_back(word);
        }
    } else {
        std::string noun = resolve_target(slot, bindings);
        Dimension dim = slot.kind == ConstraintKind::ModifierOf ? Dimension::HasProp
                                                                : Dimension::ObjectOf;
        if (const SymbolicEmbedding* embedding = store.find(noun)) {
            if (const WeightedConceptSet* set = embedding->dimension(dim)) {
                for (const auto& [lemma, weight] : *set) {
                    if (weight > 0.0) pool.push_back(lemma);
                }
            }
        }
    }
    if (!slot.candidates.empty()) {
        std::vector<std::string> narrowed;
        for (const std::string& lemma : pool) {
            if (std::binary_search(slot.candidates.begin(), slot.candidates.end(), lemma))
                narrowed.push_back(lemma);
        }
        pool = std::move(narrowed);
    }
    return pool;
}

std::string render(const std::string& text, const std::map<std::string, std::string>& bindings) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t open = text.find('{', pos);
        if (open == std::string::npos) {
            out.append(text, pos, std::string::npos);
            break;
        }
        out.append(text, pos, open - pos);
        std::size_t close = text.find('}', open);
        out += bindings.at(text.substr(open + 1, close - open - 1));
        pos = close + 1;
    }
    return out;
}

}  // namespace

std::vector<GeneratedSentence> generate(const GenerationTemplate& tmpl,
                                        const EmbeddingStore& store, const TypeLattice& lattice,
                                        std::uint64_t seed, int count) {
    validate_template(tmpl);
    if (count < 1) throw_domain("count must be at least 1");

    std::vector<std::map<std::string, std::string>> assignments;
    std::map<std::string, std::string> bindings;
    std::size_t dead_depth = 0;
    std::string dead_slot;

    auto descend = [&](auto&& self, std::size_t depth) -> void {
        if (depth == tmpl.slots.size()) {
            assignments.push_back(bindings);
            return;
        }
        const SlotSpec& slot = tmpl.slots[depth];
        std::vector<std::string> pool = admissible_fillers(slot, store, lattice, bindings);
        if (pool.empty() && depth >= dead_depth) {
            dead_depth = depth;
            dead_slot = slot.hole;
        }
        for (const std::string& lemma : pool) {
            bindings[slot.hole] = lemma;
            self(self, depth + 1);
            bindings.erase(slot.hole);
        }
    };
    descend(descend, 0);

    if (assignments.empty()) {
        if (dead_slot.empty() && !tmpl.slots.empty()) dead_slot = tmpl.slots.front().hole;
        throw_domain("unsatisfiable slot '" + dead_slot + "': no admissible filler");
    }

    // Seeded Fisher-Yates over the full enumeration, then the first `count`
    // distinct renderings. rng() % n keeps the draw identical across
    // standard library implementations.
    std::mt19937_64 rng(seed);
    for (std::size_t i = assignments.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(assignments[i], assignments[j]);
    }

    std::vector<GeneratedSentence> out;
    std::set<std::string> seen;
    for (const auto& assignment : assignments) {
        if (out.size() == static_cast<std::size_t>(count)) break;
        GeneratedSentence sentence;
        sentence.text = render(tmpl.text, assignment);
        sentence.bindings = assignment;
        if (seen.insert(sentence.text).second) out.push_back(std::move(sentence));
    }
    return out;
}

}  // namespace symvec
