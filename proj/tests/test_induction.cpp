#include <doctest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "symvec/induction.hpp"
#include "symvec/store_io.hpp"

using namespace symvec;
namespace fs = std::filesystem;

namespace {

EmbeddingStore load_fixture(const char* name) {
    return store_load(fs::path(SYMVEC_DATA_DIR) / "stores" / name);
}

std::set<Dimension> predicate_slots() {
    return {Dimension::AgentOf, Dimension::ObjectOf, Dimension::HasProp,
            Dimension::InState,  Dimension::PartOf,  Dimension::InProcess};
}

// A random context plus its plain-parts mirror for the oracle.
struct RandomContext {
    FormalContext context;
    oracle::PlainContext plain;
};

RandomContext random_context(std::mt19937_64& rng, int max_objects, int max_attributes) {
    std::uniform_int_distribution<int> nobj(1, max_objects);
    std::uniform_int_distribution<int> nattr(1, max_attributes);
    std::bernoulli_distribution bit(0.45);

    int n = nobj(rng);
    int m = nattr(rng);
    std::vector<std::string> objects;
    for (int i = 0; i < n; ++i) objects.push_back("o" + std::to_string(i));
    std::vector<AttributeKey> attributes;
    for (int j = 0; j < m; ++j) {
        Dimension slot = (j % 2 == 0) ? Dimension::ObjectOf : Dimension::HasProp;
        attributes.push_back({"p" + std::to_string(j), slot});
    }
    std::vector<std::vector<bool>> incidence(n, std::vector<bool>(m));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) incidence[i][j] = bit(rng);
    }

    RandomContext rc{FormalContext::from_parts(objects, attributes, incidence, 0.5), {}};
    // mirror through the constructed context so both sides agree on ordering
    rc.plain.objects = rc.context.objects();
    for (const AttributeKey& key : rc.context.attributes()) {
        rc.plain.attributes.push_back(attribute_key_to_string(key));
    }
    for (std::size_t i = 0; i < rc.context.object_count(); ++i) {
        std::vector<bool> row;
        for (std::size_t j = 0; j < rc.context.attribute_count(); ++j) {
            row.push_back(rc.context.incident(i, j));
        }
        rc.plain.incidence.push_back(row);
    }
    return rc;
}

oracle::Concept as_concept(const TypeNode& node) {
    oracle::Concept c;
    c.first.insert(node.extent.begin(), node.extent.end());
    for (const AttributeKey& key : node.intent) c.second.insert(attribute_key_to_string(key));
    return c;
}

}  // namespace

TEST_CASE("thresholding a store yields the expected incidence") {
    EmbeddingStore store;
    store.set_dimension("car", Dimension::ObjectOf,
                        WeightedConceptSet::from_pairs({{"driving", 0.9}, {"pondering", 0.2}}));
    store.set_dimension("car", Dimension::OfType,
                        WeightedConceptSet::from_pairs({{"vehicle", 0.9}}));
    store.set_dimension("philosopher", Dimension::AgentOf,
                        WeightedConceptSet::from_pairs({{"pondering", 0.8}}));

    FormalContext context = FormalContext::build(store, 0.5, predicate_slots());
    // the low-weight filler and the whole OF_TYPE dimension stay out
    REQUIRE(context.attribute_count() == 2);
    CHECK(context.attributes()[0] == AttributeKey{"driving", Dimension::ObjectOf});
    CHECK(context.attributes()[1] == AttributeKey{"pondering", Dimension::AgentOf});
    CHECK(context.incident(*context.object_index("car"),
                           *context.attribute_index({"driving", Dimension::ObjectOf})));
    CHECK_FALSE(context.incident(*context.object_index("car"),
                                 *context.attribute_index({"pondering", Dimension::AgentOf})));

    // tau 0 admits every recorded entry, even the weak one
    FormalContext everything = FormalContext::build(store, 0.0, predicate_slots());
    CHECK(everything.attribute_count() == 3);

    // a threshold outside [0,1] is rejected
    CHECK_THROWS_AS(FormalContext::build(store, -0.1, predicate_slots()), Error);
    CHECK_THROWS_AS(FormalContext::build(store, 1.5, predicate_slots()), Error);
    // OF_TYPE cannot be asked for as a predicate slot
    CHECK_THROWS_AS(FormalContext::build(store, 0.5, {Dimension::OfType}), Error);
}

TEST_CASE("named derivations match hand-worked values") {
    FormalContext context =
        FormalContext::build(load_fixture("ontology_facts_store.json"), 0.5, predicate_slots());

    CHECK(derive_extent(context, {{"buying", Dimension::ObjectOf}}) ==
          std::set<std::string>{"book", "car"});
    CHECK(derive_extent(context, {{"buying", Dimension::ObjectOf},
                                  {"selling", Dimension::ObjectOf}}) ==
          std::set<std::string>{"book"});
    CHECK(derive_extent(context, {{"beautiful", Dimension::HasProp}}) ==
          std::set<std::string>{"book", "car", "person"});

    std::set<AttributeKey> common = derive_intent(context, {"book", "car"});
    CHECK(common == std::set<AttributeKey>{{"beautiful", Dimension::HasProp},
                                           {"buying", Dimension::ObjectOf},
                                           {"fame", Dimension::HasProp},
                                           {"popularity", Dimension::HasProp}});

    CHECK_THROWS_AS(derive_intent(context, {"ghost"}), Error);
    CHECK_THROWS_AS(derive_extent(context, {{"ghost", Dimension::ObjectOf}}), Error);
}

TEST_CASE("derivations form a Galois connection on random contexts") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        RandomContext rc = random_context(rng, 7, 9);
        const FormalContext& c = rc.context;
        std::bernoulli_distribution bit(0.5);

        std::vector<bool> attrs(c.attribute_count());
        for (std::size_t j = 0; j < attrs.size(); ++j) attrs[j] = bit(rng);
        std::vector<bool> objs = c.extent_mask(attrs);

        // closure is extensive and idempotent
        std::vector<bool> closed = c.intent_mask(objs);
        for (std::size_t j = 0; j < attrs.size(); ++j) {
            if (attrs[j]) CHECK(closed[j]);
        }
        CHECK(c.extent_mask(closed) == objs);

        // derivation is antitone: more attributes, fewer objects
        std::vector<bool> more = attrs;
        for (std::size_t j = 0; j < more.size(); ++j) more[j] = more[j] || bit(rng);
        std::vector<bool> fewer = c.extent_mask(more);
        for (std::size_t i = 0; i < fewer.size(); ++i) {
            if (fewer[i]) CHECK(objs[i]);
        }
    }
}

TEST_CASE("every concept is found, whichever algorithm runs") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        RandomContext rc = random_context(rng, 6, 8);

        TypeLattice brute = induce_lattice(rc.context, LatticeAlgorithm::BruteForce);
        TypeLattice lectic = induce_lattice(rc.context, LatticeAlgorithm::NextClosure);
        CHECK(brute == lectic);

        std::set<oracle::Concept> expected = oracle::all_concepts(rc.plain);
        std::set<oracle::Concept> got;
        for (const TypeNode& node : brute.nodes()) got.insert(as_concept(node));
        CHECK(got == expected);
        CHECK(brute.size() == expected.size());
    }
}

TEST_CASE("cover edges are the transitive reduction") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 15; ++round) {
        RandomContext rc = random_context(rng, 6, 7);
        TypeLattice lattice = induce_lattice(rc.context);

        std::set<oracle::Concept> concepts;
        for (const TypeNode& node : lattice.nodes()) concepts.insert(as_concept(node));
        std::set<std::pair<oracle::Concept, oracle::Concept>> expected =
            oracle::cover_pairs(concepts);

        std::set<std::pair<oracle::Concept, oracle::Concept>> got;
        for (const TypeNode& node : lattice.nodes()) {
            for (std::size_t child : node.children) {
                got.insert({as_concept(node), as_concept(lattice.node(child))});
            }
        }
        CHECK(got == expected);

        // parent and child lists mirror each other
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            for (std::size_t child : lattice.node(i).children) {
                const auto& parents = lattice.node(child).parents;
                CHECK(std::find(parents.begin(), parents.end(), i) != parents.end());
            }
        }
    }
}

TEST_CASE("node order and labels are deterministic") {
    TypeLattice lattice =
        induce_lattice(FormalContext::build(load_fixture("ontology_facts_store.json"), 0.5,
                                            predicate_slots()));
    REQUIRE(lattice.size() == 6);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        CHECK(lattice.node(i).label == "T" + std::to_string(i + 1));
        if (i > 0) {
            // descending extent size, lexicographic within a size class
            const auto& prev = lattice.node(i - 1);
            const auto& cur = lattice.node(i);
            bool ordered = prev.extent.size() > cur.extent.size() ||
                           (prev.extent.size() == cur.extent.size() && prev.extent < cur.extent);
            CHECK(ordered);
        }
    }
    CHECK(lattice.top_index() == 0);
    CHECK(lattice.top().extent == std::vector<std::string>{"book", "car", "person"});
    CHECK(lattice.bottom().extent.empty());
    CHECK(lattice.index_of_label("T2").has_value());
    CHECK_FALSE(lattice.index_of_label("T9").has_value());
    CHECK(*lattice.index_of_extent({"book", "car"}) == 1);
}

TEST_CASE("shared manufacturing profile collapses to a two-node ladder") {
    FormalContext context =
        FormalContext::build(load_fixture("fig3_store.json"), 0.5, predicate_slots());
    TypeLattice lattice = induce_lattice(context);

    REQUIRE(lattice.size() == 2);
    const TypeNode& top = lattice.top();
    const TypeNode& bottom = lattice.bottom();
    CHECK(top.extent == std::vector<std::string>{"car", "computer", "couch"});
    CHECK(top.intent == std::vector<AttributeKey>{{"assemble", Dimension::ObjectOf},
                                                  {"manufacture", Dimension::ObjectOf}});
    CHECK(bottom.extent == std::vector<std::string>{"car", "computer"});
    CHECK(bottom.intent == std::vector<AttributeKey>{{"assemble", Dimension::ObjectOf},
                                                     {"idle", Dimension::HasProp},
                                                     {"manufacture", Dimension::ObjectOf},
                                                     {"on/off", Dimension::HasProp}});
    CHECK(top.children == std::vector<std::size_t>{1});
    CHECK(bottom.parents == std::vector<std::size_t>{0});
}

TEST_CASE("least common subsumer picks the tightest node") {
    TypeLattice lattice =
        induce_lattice(FormalContext::build(load_fixture("ontology_facts_store.json"), 0.5,
                                            predicate_slots()));
    CHECK(least_common_subsumer(lattice, {"book"}).extent == std::vector<std::string>{"book"});
    CHECK(least_common_subsumer(lattice, {"book", "car"}).extent ==
          std::vector<std::string>{"book", "car"});
    CHECK(least_common_subsumer(lattice, {"book", "person"}).extent ==
          std::vector<std::string>{"book", "car", "person"});
    CHECK_THROWS_AS(least_common_subsumer(lattice, {}), Error);
    CHECK_THROWS_AS(least_common_subsumer(lattice, {"ghost"}), Error);

    // property check: the result contains the query and no smaller node does
    std::mt19937_64 rng(17);
    for (int round = 0; round < 20; ++round) {
        RandomContext rc = random_context(rng, 6, 7);
        TypeLattice random_lattice = induce_lattice(rc.context);
        std::set<std::string> query;
        std::uniform_int_distribution<std::size_t> pick(0, rc.context.object_count() - 1);
        query.insert(rc.context.objects()[pick(rng)]);
        query.insert(rc.context.objects()[pick(rng)]);
        const TypeNode& lcs = least_common_subsumer(random_lattice, query);
        CHECK(std::includes(lcs.extent.begin(), lcs.extent.end(), query.begin(), query.end()));
        for (const TypeNode& node : random_lattice.nodes()) {
            if (node.extent.size() < lcs.extent.size()) {
                CHECK_FALSE(std::includes(node.extent.begin(), node.extent.end(), query.begin(),
                                          query.end()));
            }
        }
    }
}

TEST_CASE("predicates are typed at the lattice level") {
    FormalContext context =
        FormalContext::build(load_fixture("ontology_facts_store.json"), 0.5, predicate_slots());
    TypeLattice lattice = induce_lattice(context);

    std::vector<std::string> rendered;
    for (const PredicateSignature& sig : type_signatures(context, lattice)) {
        rendered.push_back(format_signature(sig));
    }
    CHECK(rendered == std::vector<std::string>{
                          "BEAUTIFUL(T1)", "BUYING(T5, T2)", "DRIVING(T5, T4)", "FAME(T1)",
                          "POPULARITY(T1)", "READING(T5, T3)", "REPAIRING(T4)", "SELLING(T3)",
                          "WRITING(T5, T3)"});

    // the binary rows really pair agent and object slots
    for (const PredicateSignature& sig : type_signatures(context, lattice)) {
        if (sig.predicate == "driving") {
            REQUIRE(sig.slots.size() == 2);
            CHECK(sig.slots[0] == Dimension::AgentOf);
            CHECK(sig.slots[1] == Dimension::ObjectOf);
            CHECK(lattice.node(*lattice.index_of_label(sig.args[0])).extent ==
                  std::vector<std::string>{"person"});
            CHECK(lattice.node(*lattice.index_of_label(sig.args[1])).extent ==
                  std::vector<std::string>{"car"});
        }
    }
}

TEST_CASE("degenerate and oversized inputs are rejected") {
    // building over an empty store is legal and yields an empty context,
    // but induction over it has nothing to close over
    EmbeddingStore empty;
    FormalContext no_rows = FormalContext::build(empty, 0.5, predicate_slots());
    CHECK(no_rows.object_count() == 0);
    CHECK_THROWS_AS(induce_lattice(no_rows), Error);

    // no objects cannot induce anything
    try {
        induce_lattice(FormalContext::from_parts({}, {{"p", Dimension::ObjectOf}}, {}, 0.5));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }

    // brute force refuses more attributes than its counter can index
    std::vector<AttributeKey> many;
    for (int j = 0; j < 64; ++j) many.push_back({"p" + std::to_string(j), Dimension::ObjectOf});
    std::vector<std::vector<bool>> row(1, std::vector<bool>(64, false));
    FormalContext wide = FormalContext::from_parts({"o"}, many, row, 0.5);
    CHECK_THROWS_AS(induce_lattice(wide, LatticeAlgorithm::BruteForce), Error);
    // the lectic algorithm handles it
    CHECK(induce_lattice(wide, LatticeAlgorithm::NextClosure).size() == 2);

    // duplicate parts are caught
    CHECK_THROWS_AS(FormalContext::from_parts({"o", "o"}, {{"p", Dimension::ObjectOf}},
                                              {{true}, {true}}, 0.5),
                    Error);
}

TEST_CASE("context and lattice exports round-trip byte for byte") {
    FormalContext context =
        FormalContext::build(load_fixture("ontology_facts_store.json"), 0.5, predicate_slots());
    std::string ctx_text = context_to_json(context);
    CHECK(context_from_json(ctx_text) == context);
    CHECK(context_to_json(context_from_json(ctx_text)) == ctx_text);

    TypeLattice lattice = induce_lattice(context);
    std::string lat_text = lattice_to_json(lattice);
    CHECK(lattice_from_json(lat_text) == lattice);
    CHECK(lattice_to_json(lattice_from_json(lat_text)) == lat_text);

    // DOT output mentions every node label once in a box declaration
    std::string dot = lattice_to_dot(lattice);
    for (const TypeNode& node : lattice.nodes()) {
        CHECK(dot.find("\"" + node.label + "\" [label=") != std::string::npos);
    }

    CHECK_THROWS_AS(context_from_json("{}"), Error);
    CHECK_THROWS_AS(lattice_from_json("{\"version\":\"1\"}"), Error);
}
