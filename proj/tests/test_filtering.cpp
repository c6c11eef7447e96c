#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "symvec/filtering.hpp"
#include "symvec/induction.hpp"
#include "symvec/store_io.hpp"

using namespace symvec;
namespace fs = std::filesystem;

namespace {

ApplicabilityIndex bootstrap_index() {
    return ApplicabilityIndex::load(fs::path(SYMVEC_DATA_DIR) / "applicability" /
                                    "applicability_bootstrap.json");
}

}  // namespace

TEST_CASE("information content tracks how selective a modifier is") {
    ApplicabilityIndex index = bootstrap_index();
    REQUIRE(index.universe_size() == 8);

    // applies to everything: carries no information at all
    CHECK(information_content("beautiful", index) == 0.0);
    // applies to a single type: maximally informative
    CHECK(information_content("tasty", index) == 1.0);
    CHECK(information_content("articulate", index) == 1.0);
    // strictly between for partial coverage, against the closed form
    CHECK(information_content("popular", index) ==
          doctest::Approx(1.0 - std::log(5.0) / std::log(8.0)).epsilon(1e-12));
    CHECK(information_content("fast", index) ==
          doctest::Approx(1.0 - std::log(4.0) / std::log(8.0)).epsilon(1e-12));

    // monotone: wider applicability, less content
    CHECK(information_content("edible", index) > information_content("fast", index));
    CHECK(information_content("fast", index) > information_content("popular", index));

    // a modifier the index has never seen is a domain error
    CHECK_THROWS_AS(information_content("sparkly", index), Error);
    CHECK_THROWS_AS(index.types_for("sparkly"), Error);
}

TEST_CASE("pruning drops broadly applicable modifiers and keeps unknowns") {
    ApplicabilityIndex index = bootstrap_index();
    auto props = WeightedConceptSet::from_pairs({{"beautiful", 0.9},
                                                 {"interesting", 0.85},
                                                 {"tasty", 0.8},
                                                 {"sparkly", 0.7}});
    WeightedConceptSet pruned = prune_generic(props, index, 0.2);
    // beautiful (ic 0) and interesting (ic ~0.064) fall below theta
    CHECK_FALSE(pruned.contains("beautiful"));
    CHECK_FALSE(pruned.contains("interesting"));
    // tasty is highly informative, sparkly is unknown: both stay, unchanged
    CHECK(pruned.weight_or_zero("tasty") == 0.8);
    CHECK(pruned.weight_or_zero("sparkly") == 0.7);

    // theta 0 keeps even the fully generic modifier
    CHECK(prune_generic(props, index, 0.0).contains("beautiful"));
}

TEST_CASE("store-level pruning only touches the property dimension") {
    ApplicabilityIndex index = bootstrap_index();
    EmbeddingStore store;
    store.set_dimension("cake", Dimension::HasProp,
                        WeightedConceptSet::from_pairs({{"beautiful", 0.9}, {"tasty", 0.85}}));
    store.set_dimension("cake", Dimension::ObjectOf,
                        WeightedConceptSet::from_pairs({{"beautiful", 0.6}, {"eating", 0.9}}));

    EmbeddingStore pruned = prune_store_has_prop(store, index, 0.2);
    CHECK_FALSE(pruned.at("cake").dimension(Dimension::HasProp)->contains("beautiful"));
    CHECK(pruned.at("cake").dimension(Dimension::HasProp)->contains("tasty"));
    // OBJECT_OF passes through untouched, even for the same lemma
    CHECK(pruned.at("cake").dimension(Dimension::ObjectOf)->weight_or_zero("beautiful") == 0.6);
    CHECK(store.at("cake").dimension(Dimension::HasProp)->contains("beautiful"));
}

TEST_CASE("index construction rejects inconsistent inputs") {
    try {
        ApplicabilityIndex({"one"}, {});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
    }
    CHECK_THROWS_AS(ApplicabilityIndex({"a", "b"}, {{"mod", {}}}), Error);
    CHECK_THROWS_AS(ApplicabilityIndex({"a", "b"}, {{"mod", {"c"}}}), Error);
    CHECK_THROWS_AS(ApplicabilityIndex::from_json("{\"universe\":[\"a\",\"b\"]}"), Error);
}

TEST_CASE("an induced lattice doubles as an applicability index") {
    EmbeddingStore store =
        store_load(fs::path(SYMVEC_DATA_DIR) / "stores" / "fig3_store.json");
    std::set<Dimension> slots = {Dimension::ObjectOf, Dimension::HasProp};
    TypeLattice lattice = induce_lattice(FormalContext::build(store, 0.5, slots));
    ApplicabilityIndex index = applicability_from_lattice(lattice);

    // the universe is the populated types; both property modifiers live on
    // the narrower node only
    CHECK(index.universe() == std::set<std::string>{"T1", "T2"});
    CHECK(index.types_for("idle") == std::set<std::string>{"T2"});
    CHECK(index.types_for("on/off") == std::set<std::string>{"T2"});
    CHECK(information_content("idle", index) == 1.0);
}
