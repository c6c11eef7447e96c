#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symvec/core.hpp"

namespace symvec {

// One column of a formal context: "can sensibly fill <slot> of <predicate>".
// OF_TYPE is not a predicate slot and is rejected wherever keys are built.
struct AttributeKey {
    std::string predicate;
    Dimension slot = Dimension::ObjectOf;

    bool operator==(const AttributeKey&) const = default;
    bool operator<(const AttributeKey& other) const;
};

// "driving:OBJECT_OF"
std::string attribute_key_to_string(const AttributeKey& key);

// Boolean incidence between noun objects and predicate-slot attributes,
// thresholded out of a store. Objects and attributes are kept in
// lexicographic order; the matrix is immutable after construction.
class FormalContext {
public:
    static FormalContext build(const EmbeddingStore& store, double tau,
                               const std::set<Dimension>& slots);

    // Assembles a context from explicit parts (test harnesses, context
    // files). Rows follow the order of `objects`; both lists are re-sorted
    // internally and must contain no duplicates.
    static FormalContext from_parts(std::vector<std::string> objects,
                                    std::vector<AttributeKey> attributes,
                                    std::vector<std::vector<bool>> incidence, double tau);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<AttributeKey>& attributes() const { return attributes_; }
    double tau() const { return tau_; }

    bool incident(std::size_t object_index, std::size_t attribute_index) const {
        return rows_[object_index][attribute_index];
    }

    std::optional<std::size_t> object_index(const std::string& name) const;
    std::optional<std::size_t> attribute_index(const AttributeKey& key) const;

    // Galois derivations at the index level. A mask covers the full object
    // or attribute range; the result is the derived mask on the other side.
    std::vector<bool> extent_mask(const std::vector<bool>& attribute_mask) const;
    std::vector<bool> intent_mask(const std::vector<bool>& object_mask) const;

    bool operator==(const FormalContext&) const = default;

private:
    std::vector<std::string> objects_;
    std::vector<AttributeKey> attributes_;
    std::vector<std::vector<bool>> rows_;
    double tau_ = 0.0;
};

// Name-level derivations. Unknown objects or attributes are Domain errors.
std::set<std::string> derive_extent(const FormalContext& context,
                                    const std::set<AttributeKey>& attrs);
std::set<AttributeKey> derive_intent(const FormalContext& context,
                                     const std::set<std::string>& objs);

struct TypeNode {
    std::string label;
    std::vector<std::string> extent;    // sorted object names
    std::vector<AttributeKey> intent;   // sorted attribute keys
    std::vector<std::size_t> parents;   // cover edges, node indices
    std::vector<std::size_t> children;

    bool operator==(const TypeNode&) const = default;
};

// All closed (extent, intent) pairs of a context, with cover edges. Node
// order is descending extent size, ties broken by lexicographic extent, and
// labels T1, T2, ... follow that order, so identical contexts always yield
// identical lattices.
class TypeLattice {
public:
    TypeLattice() = default;
    TypeLattice(std::vector<std::string> objects, std::vector<AttributeKey> attributes,
                std::vector<TypeNode> nodes, std::size_t top, std::size_t bottom);

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<AttributeKey>& attributes() const { return attributes_; }
    const std::vector<TypeNode>& nodes() const { return nodes_; }
    const TypeNode& node(std::size_t index) const { return nodes_[index]; }
    std::size_t size() const { return nodes_.size(); }

    std::size_t top_index() const { return top_; }
    std::size_t bottom_index() const { return bottom_; }
    const TypeNode& top() const { return nodes_[top_]; }
    const TypeNode& bottom() const { return nodes_[bottom_]; }

    std::optional<std::size_t> index_of_label(const std::string& label) const;
    std::optional<std::size_t> index_of_extent(const std::vector<std::string>& extent) const;

    bool operator==(const TypeLattice&) const = default;

private:
    std::vector<std::string> objects_;
    std::vector<AttributeKey> attributes_;
    std::vector<TypeNode> nodes_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;
};

enum class LatticeAlgorithm {
    Auto,        // brute force up to 20 attributes, lectic stepping beyond
    BruteForce,  // closure of every attribute subset
    NextClosure, // lexicographic closure stepping
};

// Enumerates every formal concept of the context. Domain error when the
// context has no objects.
TypeLattice induce_lattice(const FormalContext& context,
                           LatticeAlgorithm algorithm = LatticeAlgorithm::Auto);

// The node with the smallest extent containing all of `objs` (equivalently,
// the closure of `objs`). Domain errors on an empty set or unknown object.
const TypeNode& least_common_subsumer(const TypeLattice& lattice,
                                      const std::set<std::string>& objs);

// A predicate typed against lattice nodes: unary P(t1) for a lone slot,
// binary Q(t_subject, t_object) when the same predicate carries both an
// AGENT_OF and an OBJECT_OF attribute.
struct PredicateSignature {
    std::string predicate;
    std::vector<Dimension> slots;
    std::vector<std::string> args;  // node labels, aligned with slots

    bool operator==(const PredicateSignature&) const = default;
};

std::vector<PredicateSignature> type_signatures(const FormalContext& context,
                                                const TypeLattice& lattice);

// "DRIVE(T3, T5)"
std::string format_signature(const PredicateSignature& signature);

// Graphviz rendering: one box per node labeled with extent and intent, one
// edge per cover pair, parents above children.
std::string lattice_to_dot(const TypeLattice& lattice);

// Lossless structured exports. Imports validate shape and report Config
// errors with the offending key.
std::string lattice_to_json(const TypeLattice& lattice);
TypeLattice lattice_from_json(const std::string& text);
std::string context_to_json(const FormalContext& context);
FormalContext context_from_json(const std::string& text);

}  // namespace symvec
