#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symvec/core.hpp"

namespace symvec {

// A masking frame for one dimension. The pattern carries exactly one [MASK]
// token and at least one {word} placeholder.
struct PromptTemplate {
    Dimension dimension = Dimension::HasProp;
    std::string pattern;

    bool operator==(const PromptTemplate&) const = default;
};

void validate_prompt_template(const PromptTemplate& tmpl);

// What a backend answers: candidate mask fillers with raw scores, best first.
struct MaskFillResult {
    std::vector<std::pair<std::string, double>> fillers;

    bool empty() const { return fillers.empty(); }
    bool operator==(const MaskFillResult&) const = default;
};

// Tokens nonempty, scores nonnegative and nonincreasing. Domain error.
void validate_fill_result(const MaskFillResult& result);

struct AcquisitionConfig {
    std::map<Dimension, std::vector<PromptTemplate>> templates;
    int top_k = 10;
    double weight_ceiling = 0.95;
    std::set<std::string> stop_list = default_stop_list();
    int parallelism = 1;

    static std::set<std::string> default_stop_list();
    void validate() const;
};

AcquisitionConfig acquisition_config_from_json(const std::string& text);
AcquisitionConfig load_acquisition_config(const std::filesystem::path& source);

struct BackendEndpoint {
    enum class Kind { Fixture, Http };
    Kind kind = Kind::Fixture;
    std::string location;       // fixture file path, or http:// URL
    std::string auth_env;       // name of the env var holding a bearer token
    double timeout_seconds = 30.0;
};

class MaskBackend {
public:
    virtual ~MaskBackend() = default;
    virtual MaskFillResult fill(const std::string& prompt, int top_k) = 0;
};

// Fixture backends replay recorded fillers keyed by the prompt digest and
// never touch the network; http backends POST {prompt, top_k} and retry
// transient failures three times with exponential backoff.
std::unique_ptr<MaskBackend> make_backend(const BackendEndpoint& endpoint);

// 64-bit FNV-1a over the exact prompt bytes; hex form is the fixture key.
std::uint64_t prompt_digest(std::string_view prompt);
std::string prompt_digest_hex(std::string_view prompt);

// Substitutes every {word} with the word's lemma, leaving [MASK] alone.
std::string render_prompt(const PromptTemplate& tmpl, const ConceptTerm& word);

// Checks the prompt shape (exactly one [MASK]) and queries the backend,
// truncating to top_k fillers.
MaskFillResult fill_mask(MaskBackend& backend, const std::string& prompt, int top_k);

// ceiling-scaled max normalization: weight = ceiling * raw / max_raw. The
// top filler lands exactly on the ceiling; zero-scored fillers are dropped.
WeightedConceptSet scores_to_weights(const MaskFillResult& result, double ceiling);

// One word, one dimension: render every template for the dimension, query,
// drop stop-list and multi-token fillers, convert, and fuzzy-union the
// per-template sets. Backend errors propagate; filtering everything away
// yields an empty set.
WeightedConceptSet acquire(const ConceptTerm& word, Dimension dimension, MaskBackend& backend,
                           const AcquisitionConfig& config);

}  // namespace symvec
