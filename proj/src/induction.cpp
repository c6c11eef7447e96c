#include "symvec/induction.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace symvec {

using nlohmann::json;

bool AttributeKey::operator<(const AttributeKey& other) const {
    if (predicate != other.predicate) return predicate < other.predicate;
    return dimension_name(slot) < dimension_name(other.slot);
}

std::string attribute_key_to_string(const AttributeKey& key) {
    std::string out = key.predicate;
    out += ':';
    out += dimension_name(key.slot);
    return out;
}

namespace {

void check_tau(double tau) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw_config("threshold tau must lie in [0,1]");
}

void check_slot(Dimension slot) {
    if (slot == Dimension::OfType) throw_domain("OF_TYPE is not a predicate slot");
}

}  // namespace

FormalContext FormalContext::build(const EmbeddingStore& store, double tau,
                                   const std::set<Dimension>& slots) {
    check_tau(tau);
    for (Dimension d : slots) check_slot(d);

    std::set<AttributeKey> keys;
    for (const auto& [word, embedding] : store.words()) {
        (void)word;
        for (const auto& [dim, set] : embedding.dims) {
            if (slots.count(dim) == 0) continue;
            for (const auto& [lemma, weight] : set) {
                if (weight >= tau) keys.insert({lemma, dim});
            }
        }
    }

    FormalContext ctx;
    ctx.tau_ = tau;
    for (const auto& [word, embedding] : store.words()) {
        (void)embedding;
        ctx.objects_.push_back(word);
    }
    ctx.attributes_.assign(keys.begin(), keys.end());

    ctx.rows_.resize(ctx.objects_.size());
    for (std::size_t i = 0; i < ctx.objects_.size(); ++i) {
        const SymbolicEmbedding& embedding = store.at(ctx.objects_[i]);
        ctx.rows_[i].resize(ctx.attributes_.size(), false);
        for (std::size_t j = 0; j < ctx.attributes_.size(); ++j) {
            const AttributeKey& key = ctx.attributes_[j];
            const WeightedConceptSet* set = embedding.dimension(key.slot);
            if (set && set->weight_or_zero(key.predicate) >= tau) ctx.rows_[i][j] = true;
        }
    }
    return ctx;
}

FormalContext FormalContext::from_parts(std::vector<std::string> objects,
                                        std::vector<AttributeKey> attributes,
                                        std::vector<std::vector<bool>> incidence, double tau) {
    check_tau(tau);
    for (std::string& name : objects) name = normalize_lemma(name);
    for (AttributeKey& key : attributes) {
        check_slot(key.slot);
        key.predicate = normalize_lemma(key.predicate);
    }
    if (incidence.size() != objects.size())
        throw_domain("incidence must have one row per object");
    for (const auto& row : incidence) {
        if (row.size() != attributes.size())
            throw_domain("incidence rows must have one entry per attribute");
    }

    std::vector<std::size_t> object_order(objects.size());
    std::iota(object_order.begin(), object_order.end(), 0);
    std::sort(object_order.begin(), object_order.end(),
              [&](std::size_t a, std::size_t b) { return objects[a] < objects[b]; });
    std::vector<std::size_t> attribute_order(attributes.size());
    std::iota(attribute_order.begin(), attribute_order.end(), 0);
    std::sort(attribute_order.begin(), attribute_order.end(),
              [&](std::size_t a, std::size_t b) { return attributes[a] < attributes[b]; });

    FormalContext ctx;
    ctx.tau_ = tau;
    for (std::size_t i : object_order) {
        if (!ctx.objects_.empty() && ctx.objects_.back() == objects[i])
            throw_domain("duplicate object: " + objects[i]);
        ctx.objects_.push_back(objects[i]);
    }
    for (std::size_t j : attribute_order) {
        if (!ctx.attributes_.empty() && ctx.attributes_.back() == attributes[j])
            throw_domain("duplicate attribute: " + attribute_key_to_string(attributes[j]));
        ctx.attributes_.push_back(attributes[j]);
    }
    ctx.rows_.resize(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i) {
        ctx.rows_[i].resize(attributes.size(), false);
        for (std::size_t j = 0; j < attributes.size(); ++j) {
            ctx.rows_[i][j] = incidence[object_order[i]][attribute_order[j]];
        }
    }
    return ctx;
}

std::optional<std::size_t> FormalContext::object_index(const std::string& name) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
    if (it == objects_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> FormalContext::attribute_index(const AttributeKey& key) const {
    auto it = std::lower_bound(attributes_.begin(), attributes_.end(), key);
    if (it == attributes_.end() || !(*it == key)) return std::nullopt;
    return static_cast<std::size_t>(it - attributes_.begin());
}

std::vector<bool> FormalContext::extent_mask(const std::vector<bool>& attribute_mask) const {
    std::vector<bool> out(objects_.size(), true);
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        for (std::size_t j = 0; j < attributes_.size(); ++j) {
            if (attribute_mask[j] && !rows_[i][j]) {
                out[i] = false;
                break;
            }
        }
    }
    return out;
}

std::vector<bool> FormalContext::intent_mask(const std::vector<bool>& object_mask) const {
    std::vector<bool> out(attributes_.size(), true);
    for (std::size_t j = 0; j < attributes_.size(); ++j) {
        for (std::size_t i = 0; i < objects_.size(); ++i) {
            if (object_mask[i] && !rows_[i][j]) {
                out[j] = false;
                break;
            }
        }
    }
    return out;
}

std::set<std::string> derive_extent(const FormalContext& context,
                                    const std::set<AttributeKey>& attrs) {
    std::vector<bool> mask(context.attribute_count(), false);
    for (const AttributeKey& key : attrs) {
        auto j = context.attribute_index(key);
        if (!j) throw_domain("unknown attribute: " + attribute_key_to_string(key));
        mask[*j] = true;
    }
    std::vector<bool> extent = context.extent_mask(mask);
    std::set<std::string> out;
    for (std::size_t i = 0; i < extent.size(); ++i) {
        if (extent[i]) out.insert(context.objects()[i]);
    }
    return out;
}

std::set<AttributeKey> derive_intent(const FormalContext& context,
                                     const std::set<std::string>& objs) {
    std::vector<bool> mask(context.object_count(), false);
    for (const std::string& name : objs) {
        auto i = context.object_index(name);
        if (!i) throw_domain("unknown object: " + name);
        mask[*i] = true;
    }
    std::vector<bool> intent = context.intent_mask(mask);
    std::set<AttributeKey> out;
    for (std::size_t j = 0; j < intent.size(); ++j) {
        if (intent[j]) out.insert(context.attributes()[j]);
    }
    return out;
}

TypeLattice::TypeLattice(std::vector<std::string> objects, std::vector<AttributeKey> attributes,
                         std::vector<TypeNode> nodes, std::size_t top, std::size_t bottom)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      nodes_(std::move(nodes)),
      top_(top),
      bottom_(bottom) {}

std::optional<std::size_t> TypeLattice::index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].label == label) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> TypeLattice::index_of_extent(
    const std::vector<std::string>& extent) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].extent == extent) return i;
    }
    return std::nullopt;
}

namespace {

std::vector<bool> close_attrs(const FormalContext& ctx, const std::vector<bool>& attrs) {
    return ctx.intent_mask(ctx.extent_mask(attrs));
}

std::set<std::vector<bool>> closed_intents_brute_force(const FormalContext& ctx) {
    std::size_t a = ctx.attribute_count();
    if (a > 63) throw_domain("brute-force enumeration supports at most 63 attributes");
    std::set<std::vector<bool>> intents;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a); ++bits) {
        std::vector<bool> subset(a, false);
        for (std::size_t j = 0; j < a; ++j) subset[j] = (bits >> j) & 1;
        intents.insert(close_attrs(ctx, subset));
    }
    return intents;
}

std::set<std::vector<bool>> closed_intents_next_closure(const FormalContext& ctx) {
    std::size_t a = ctx.attribute_count();
    std::set<std::vector<bool>> intents;
    std::vector<bool> current = close_attrs(ctx, std::vector<bool>(a, false));
    intents.insert(current);
    const std::vector<bool> full(a, true);
    while (current != full) {
        bool stepped = false;
        for (std::size_t rev = 0; rev < a; ++rev) {
            std::size_t i = a - 1 - rev;
            if (current[i]) continue;
            std::vector<bool> seed(a, false);
            for (std::size_t t = 0; t < i; ++t) seed[t] = current[t];
            seed[i] = true;
            std::vector<bool> candidate = close_attrs(ctx, seed);
            bool canonical = true;
            for (std::size_t t = 0; t < i; ++t) {
                if (candidate[t] && !current[t]) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) {
                current = candidate;
                intents.insert(current);
                stepped = true;
                break;
            }
        }
        if (!stepped) break;
    }
    return intents;
}

std::size_t mask_count(const std::vector<bool>& mask) {
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

bool mask_subset(const std::vector<bool>& sub, const std::vector<bool>& super) {
    for (std::size_t i = 0; i < sub.size(); ++i) {
        if (sub[i] && !super[i]) return false;
    }
    return true;
}

}  // namespace

TypeLattice induce_lattice(const FormalContext& context, LatticeAlgorithm algorithm) {
    if (context.object_count() == 0)
        throw_domain("cannot induce a lattice from a context with no objects");

    if (algorithm == LatticeAlgorithm::Auto) {
        algorithm = context.attribute_count() <= 20 ? LatticeAlgorithm::BruteForce
                                                    : LatticeAlgorithm::NextClosure;
    }
    std::set<std::vector<bool>> intents = algorithm == LatticeAlgorithm::BruteForce
                                              ? closed_intents_brute_force(context)
                                              : closed_intents_next_closure(context);

    struct Rec {
        std::vector<bool> extent_mask;
        std::vector<bool> intent_mask;
        std::vector<std::string> extent;
        std::vector<AttributeKey> intent;
    };
    std::vector<Rec> recs;
    recs.reserve(intents.size());
    for (const std::vector<bool>& intent : intents) {
        Rec rec;
        rec.intent_mask = intent;
        rec.extent_mask = context.extent_mask(intent);
        for (std::size_t i = 0; i < rec.extent_mask.size(); ++i) {
            if (rec.extent_mask[i]) rec.extent.push_back(context.objects()[i]);
        }
        for (std::size_t j = 0; j < rec.intent_mask.size(); ++j) {
            if (rec.intent_mask[j]) rec.intent.push_back(context.attributes()[j]);
        }
        recs.push_back(std::move(rec));
    }
    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
        if (a.extent.size() != b.extent.size()) return a.extent.size() > b.extent.size();
        return a.extent < b.extent;
    });

    std::vector<TypeNode> nodes(recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        nodes[i].label = "T" + std::to_string(i + 1);
        nodes[i].extent = recs[i].extent;
        nodes[i].intent = recs[i].intent;
    }

    // Cover edges: j is covered by i when extent(j) ⊂ extent(i) with nothing
    // strictly between. Sorting by descending extent size puts any
    // intermediate node between i and j.
    for (std::size_t i = 0; i < recs.size(); ++i) {
        for (std::size_t j = i + 1; j < recs.size(); ++j) {
            if (recs[j].extent.size() == recs[i].extent.size()) continue;
            if (!mask_subset(recs[j].extent_mask, recs[i].extent_mask)) continue;
            bool covered = true;
            for (std::size_t k = i + 1; k < j && covered; ++k) {
                if (recs[k].extent.size() == recs[i].extent.size() ||
                    recs[k].extent.size() == recs[j].extent.size())
                    continue;
                if (mask_subset(recs[j].extent_mask, recs[k].extent_mask) &&
                    mask_subset(recs[k].extent_mask, recs[i].extent_mask))
                    covered = false;
            }
            if (covered) {
                nodes[j].parents.push_back(i);
                nodes[i].children.push_back(j);
            }
        }
    }

    std::size_t top = 0;
    std::size_t bottom = 0;
    std::vector<bool> bottom_extent = context.extent_mask(std::vector<bool>(
        context.attribute_count(), true));
    for (std::size_t i = 0; i < recs.size(); ++i) {
        if (recs[i].extent_mask == bottom_extent) bottom = i;
    }
    return TypeLattice(context.objects(), context.attributes(), std::move(nodes), top, bottom);
}

const TypeNode& least_common_subsumer(const TypeLattice& lattice,
                                      const std::set<std::string>& objs) {
    if (objs.empty()) throw_domain("least common subsumer of an empty object set");
    for (const std::string& name : objs) {
        if (!std::binary_search(lattice.objects().begin(), lattice.objects().end(), name))
            throw_domain("unknown object: " + name);
    }
    // Nodes run from largest extent to smallest, so walking backwards finds
    // the minimal extent containing the set first.
    for (std::size_t rev = 0; rev < lattice.size(); ++rev) {
        const TypeNode& node = lattice.node(lattice.size() - 1 - rev);
        bool contains_all = true;
        for (const std::string& name : objs) {
            if (!std::binary_search(node.extent.begin(), node.extent.end(), name)) {
                contains_all = false;
                break;
            }
        }
        if (contains_all) return lattice.node(lattice.size() - 1 - rev);
    }
    throw_domain("no subsuming node found");  // unreachable: top contains every object
}

std::vector<PredicateSignature> type_signatures(const FormalContext& context,
                                                const TypeLattice& lattice) {
    struct SlotInfo {
        Dimension slot;
        std::set<std::string> extent;
    };
    std::vector<PredicateSignature> out;

    std::size_t begin = 0;
    while (begin < context.attribute_count()) {
        const std::string& predicate = context.attributes()[begin].predicate;
        std::size_t end = begin;
        std::vector<SlotInfo> slots;
        while (end < context.attribute_count() &&
               context.attributes()[end].predicate == predicate) {
            std::vector<bool> mask(context.attribute_count(), false);
            mask[end] = true;
            std::vector<bool> extent = context.extent_mask(mask);
            SlotInfo info;
            info.slot = context.attributes()[end].slot;
            for (std::size_t i = 0; i < extent.size(); ++i) {
                if (extent[i]) info.extent.insert(context.objects()[i]);
            }
            if (!info.extent.empty()) slots.push_back(std::move(info));
            ++end;
        }

        auto find_slot = [&](Dimension d) -> const SlotInfo* {
            for (const SlotInfo& info : slots) {
                if (info.slot == d) return &info;
            }
            return nullptr;
        };
        const SlotInfo* agent = find_slot(Dimension::AgentOf);
        const SlotInfo* object = find_slot(Dimension::ObjectOf);
        if (agent && object) {
            PredicateSignature sig;
            sig.predicate = predicate;
            sig.slots = {Dimension::AgentOf, Dimension::ObjectOf};
            sig.args = {least_common_subsumer(lattice, agent->extent).label,
                        least_common_subsumer(lattice, object->extent).label};
            out.push_back(std::move(sig));
        }
        for (const SlotInfo& info : slots) {
            if (agent && object &&
                (info.slot == Dimension::AgentOf || info.slot == Dimension::ObjectOf))
                continue;
            PredicateSignature sig;
            sig.predicate = predicate;
            sig.slots = {info.slot};
            sig.args = {least_common_subsumer(lattice, info.extent).label};
            out.push_back(std::move(sig));
        }
        begin = end;
    }
    return out;
}

std::string format_signature(const PredicateSignature& signature) {
    std::string out;
    for (char c : signature.predicate) {
        out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    out += '(';
    for (std::size_t i = 0; i < signature.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += signature.args[i];
    }
    out += ')';
    return out;
}

namespace {

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ", ";
        out += names[i];
    }
    return out;
}

std::string join_keys(const std::vector<AttributeKey>& keys) {
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i > 0) out += ", ";
        out += attribute_key_to_string(keys[i]);
    }
    return out;
}

}  // namespace

std::string lattice_to_dot(const TypeLattice& lattice) {
    std::ostringstream out;
    out << "digraph lattice {\n";
    out << "  node [shape=box];\n";
    for (const TypeNode& node : lattice.nodes()) {
        std::string label = node.label + " {" + join_names(node.extent) + "}";
        if (!node.intent.empty()) label += " / " + join_keys(node.intent);
        out << "  \"" << dot_escape(node.label) << "\" [label=\"" << dot_escape(label)
            << "\"];\n";
    }
    for (const TypeNode& node : lattice.nodes()) {
        for (std::size_t child : node.children) {
            out << "  \"" << dot_escape(node.label) << "\" -> \""
                << dot_escape(lattice.node(child).label) << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

namespace {

json attribute_to_json(const AttributeKey& key) {
    return json::array({key.predicate, std::string(dimension_name(key.slot))});
}

AttributeKey attribute_from_json(const json& value) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_string() ||
        !value[1].is_string())
        throw_config("attribute entries must be [predicate, slot] pairs");
    auto slot = parse_dimension(value[1].get<std::string>());
    if (!slot) throw_config("unknown attribute slot: " + value[1].get<std::string>());
    if (*slot == Dimension::OfType) throw_config("OF_TYPE is not a predicate slot");
    return {value[0].get<std::string>(), *slot};
}

json parse_document(const std::string& text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw_config(std::string("malformed ") + what + " document");
    if (!doc.contains("version") || !doc["version"].is_string() || doc["version"] != "1")
        throw_config(std::string(what) + " document has an unsupported version");
    return doc;
}

std::vector<std::string> string_list(const json& value, const char* what) {
    if (!value.is_array()) throw_config(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const json& item : value) {
        if (!item.is_string()) throw_config(std::string(what) + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

std::string context_to_json(const FormalContext& context) {
    json doc;
    doc["version"] = "1";
    doc["tau"] = context.tau();
    doc["objects"] = context.objects();
    json attrs = json::array();
    for (const AttributeKey& key : context.attributes()) attrs.push_back(attribute_to_json(key));
    doc["attributes"] = std::move(attrs);
    json rows = json::array();
    for (std::size_t i = 0; i < context.object_count(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < context.attribute_count(); ++j) {
            row += context.incident(i, j) ? '1' : '0';
        }
        rows.push_back(row);
    }
    doc["incidence"] = std::move(rows);
    return doc.dump(2) + "\n";
}

FormalContext context_from_json(const std::string& text) {
    json doc = parse_document(text, "context");
    if (!doc.contains("tau") || !doc["tau"].is_number())
        throw_config("context document needs a numeric tau");
    if (!doc.contains("objects") || !doc.contains("attributes") || !doc.contains("incidence"))
        throw_config("context document needs objects, attributes, and incidence");

    std::vector<std::string> objects = string_list(doc["objects"], "objects");
    std::vector<AttributeKey> attributes;
    if (!doc["attributes"].is_array()) throw_config("attributes must be an array");
    for (const json& item : doc["attributes"]) attributes.push_back(attribute_from_json(item));
    std::vector<std::string> rows = string_list(doc["incidence"], "incidence");
    if (rows.size() != objects.size()) throw_config("incidence must have one row per object");
    std::vector<std::vector<bool>> incidence(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != attributes.size())
            throw_config("incidence rows must have one digit per attribute");
        incidence[i].resize(attributes.size());
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] != '0' && rows[i][j] != '1')
                throw_config("incidence rows must contain only 0 and 1");
            incidence[i][j] = rows[i][j] == '1';
        }
    }
    try {
        return FormalContext::from_parts(std::move(objects), std::move(attributes),
                                         std::move(incidence), doc["tau"].get<double>());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Domain) throw_config(e.what());
        throw;
    }
}

std::string lattice_to_json(const TypeLattice& lattice) {
    json doc;
    doc["version"] = "1";
    doc["objects"] = lattice.objects();
    json attrs = json::array();
    for (const AttributeKey& key : lattice.attributes()) attrs.push_back(attribute_to_json(key));
    doc["attributes"] = std::move(attrs);
    json nodes = json::array();
    for (const TypeNode& node : lattice.nodes()) {
        json entry;
        entry["label"] = node.label;
        entry["extent"] = node.extent;
        json intent = json::array();
        for (const AttributeKey& key : node.intent) intent.push_back(attribute_to_json(key));
        entry["intent"] = std::move(intent);
        json parents = json::array();
        for (std::size_t p : node.parents) parents.push_back(lattice.node(p).label);
        entry["parents"] = std::move(parents);
        json children = json::array();
        for (std::size_t c : node.children) children.push_back(lattice.node(c).label);
        entry["children"] = std::move(children);
        nodes.push_back(std::move(entry));
    }
    doc["nodes"] = std::move(nodes);
    doc["top"] = lattice.top().label;
    doc["bottom"] = lattice.bottom().label;
    return doc.dump(2) + "\n";
}

TypeLattice lattice_from_json(const std::string& text) {
    json doc = parse_document(text, "lattice");
    for (const char* key : {"objects", "attributes", "nodes", "top", "bottom"}) {
        if (!doc.contains(key))
            throw_config(std::string("lattice document needs a ") + key + " field");
    }
    std::vector<std::string> objects = string_list(doc["objects"], "objects");
    std::vector<AttributeKey> attributes;
    if (!doc["attributes"].is_array()) throw_config("attributes must be an array");
    for (const json& item : doc["attributes"]) attributes.push_back(attribute_from_json(item));

    if (!doc["nodes"].is_array()) throw_config("nodes must be an array");
    std::vector<TypeNode> nodes;
    std::map<std::string, std::size_t> index_by_label;
    for (const json& entry : doc["nodes"]) {
        if (!entry.is_object() || !entry.contains("label") || !entry["label"].is_string())
            throw_config("lattice nodes need a string label");
        TypeNode node;
        node.label = entry["label"].get<std::string>();
        if (index_by_label.count(node.label))
            throw_config("duplicate node label: " + node.label);
        node.extent = string_list(entry.value("extent", json::array()), "node extent");
        if (!entry.contains("intent") || !entry["intent"].is_array())
            throw_config("lattice nodes need an intent array");
        for (const json& item : entry["intent"]) node.intent.push_back(attribute_from_json(item));
        index_by_label[node.label] = nodes.size();
        nodes.push_back(std::move(node));
    }
    auto resolve = [&](const std::string& label) -> std::size_t {
        auto it = index_by_label.find(label);
        if (it == index_by_label.end()) throw_config("unknown node label: " + label);
        return it->second;
    };
    std::size_t i = 0;
    for (const json& entry : doc["nodes"]) {
        for (const std::string& label :
             string_list(entry.value("parents", json::array()), "node parents"))
            nodes[i].parents.push_back(resolve(label));
        for (const std::string& label :
             string_list(entry.value("children", json::array()), "node children"))
            nodes[i].children.push_back(resolve(label));
        ++i;
    }
    if (!doc["top"].is_string() || !doc["bottom"].is_string())
        throw_config("lattice top and bottom must be node labels");
    std::size_t top = resolve(doc["top"].get<std::string>());
    std::size_t bottom = resolve(doc["bottom"].get<std::string>());
    return TypeLattice(std::move(objects), std::move(attributes), std::move(nodes), top, bottom);
}

}  // namespace symvec
