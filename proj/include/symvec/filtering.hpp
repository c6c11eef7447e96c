#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>

#include "symvec/core.hpp"

namespace symvec {

// Records, per descriptive modifier, the set of type names it can sensibly be
// applied to, against a fixed universe of type names.
class ApplicabilityIndex {
public:
    ApplicabilityIndex(std::set<std::string> universe,
                       std::map<std::string, std::set<std::string>> applicability);

    static ApplicabilityIndex from_json(std::string_view text);
    static ApplicabilityIndex load(const std::filesystem::path& source);

    std::size_t universe_size() const { return universe_.size(); }
    const std::set<std::string>& universe() const { return universe_; }

    bool contains(const std::string& modifier) const { return applicability_.count(modifier) > 0; }
    const std::set<std::string>& types_for(const std::string& modifier) const;

    const std::map<std::string, std::set<std::string>>& applicability() const {
        return applicability_;
    }

private:
    std::set<std::string> universe_;
    std::map<std::string, std::set<std::string>> applicability_;
};

class TypeLattice;

// Builds the index out of an induced lattice. The universe is every node
// label with instances; a modifier (a HAS_PROP attribute) applies to the
// labels whose extents sit inside the modifier's own extent. Modifiers that
// span no type are left out.
ApplicabilityIndex applicability_from_lattice(const TypeLattice& lattice);

// Specificity of a modifier: 1 - log(n)/log(N) where n is the number of types
// the modifier applies to out of N in the universe. 1 at n=1, 0 at n=N,
// strictly decreasing in between.
double information_content(const std::string& modifier, const ApplicabilityIndex& index);

// Drops entries whose modifier is known to the index and has information
// content below theta. Unknown modifiers are kept; weights are unchanged.
WeightedConceptSet prune_generic(const WeightedConceptSet& set, const ApplicabilityIndex& index,
                                 double theta);

// Applies prune_generic to every word's HAS_PROP set; other dimensions pass
// through untouched.
EmbeddingStore prune_store_has_prop(const EmbeddingStore& store, const ApplicabilityIndex& index,
                                    double theta);

}  // namespace symvec
