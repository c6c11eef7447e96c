#include "symvec/acquisition.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "symvec/store_io.hpp"

namespace symvec {

using nlohmann::json;

namespace {

std::size_t count_occurrences(const std::string& text, std::string_view needle) {
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

void validate_prompt_template(const PromptTemplate& tmpl) {
    if (count_occurrences(tmpl.pattern, "[MASK]") != 1)
        throw_config("prompt template must contain exactly one [MASK]: " + tmpl.pattern);
    if (count_occurrences(tmpl.pattern, "{word}") == 0)
        throw_config("prompt template must contain at least one {word}: " + tmpl.pattern);
}

void validate_fill_result(const MaskFillResult& result) {
    double previous = -1.0;
    bool first = true;
    for (const auto& [token, score] : result.fillers) {
        if (token.empty()) throw_domain("mask filler with an empty token");
        if (score < 0.0) throw_domain("mask filler with a negative score");
        if (!first && score > previous) throw_domain("mask filler scores must be nonincreasing");
        previous = score;
        first = false;
    }
}

std::set<std::string> AcquisitionConfig::default_stop_list() {
    return {
        // articles
        "a", "an", "the",
        // pronouns
        "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them",
        "my", "your", "his", "its", "our", "their", "this", "that", "these", "those",
        // auxiliaries
        "am", "is", "are", "was", "were", "be", "been", "being", "do", "does", "did",
        "have", "has", "had", "will", "would", "shall", "should", "can", "could", "may",
        "might", "must",
    };
}

void AcquisitionConfig::validate() const {
    if (top_k < 1) throw_config("top_k must be at least 1");
    if (!(weight_ceiling > 0.0 && weight_ceiling <= 1.0))
        throw_config("weight_ceiling must lie in (0,1]");
    if (parallelism < 1) throw_config("parallelism must be at least 1");
    for (const auto& [dim, list] : templates) {
        if (list.empty())
            throw_config(std::string("no templates for dimension ") +
                         std::string(dimension_name(dim)));
        for (const PromptTemplate& tmpl : list) {
            if (tmpl.dimension != dim)
                throw_config(std::string("template filed under ") +
                             std::string(dimension_name(dim)) + " declares dimension " +
                             std::string(dimension_name(tmpl.dimension)));
            validate_prompt_template(tmpl);
        }
    }
}

AcquisitionConfig acquisition_config_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw_config("malformed acquisition config document");
    if (!doc.contains("version") || doc["version"] != "1")
        throw_config("acquisition config has an unsupported version");
    if (!doc.contains("templates") || !doc["templates"].is_object())
        throw_config("acquisition config needs a templates object");

    AcquisitionConfig config;
    if (doc.contains("top_k")) {
        if (!doc["top_k"].is_number_integer())
            throw_config("top_k must be an integer");
        config.top_k = doc["top_k"].get<int>();
    }
    if (doc.contains("weight_ceiling")) {
        if (!doc["weight_ceiling"].is_number())
            throw_config("weight_ceiling must be a number");
        config.weight_ceiling = doc["weight_ceiling"].get<double>();
    }
    if (doc.contains("parallelism")) {
        if (!doc["parallelism"].is_number_integer())
            throw_config("parallelism must be an integer");
        config.parallelism = doc["parallelism"].get<int>();
    }
    if (doc.contains("stop_list")) {
        if (!doc["stop_list"].is_array())
            throw_config("stop_list must be an array of tokens");
        config.stop_list.clear();
        for (const json& token : doc["stop_list"]) {
            if (!token.is_string()) throw_config("stop_list entries must be strings");
            config.stop_list.insert(normalize_lemma(token.get<std::string>()));
        }
    }
    for (const auto& [name, patterns] : doc["templates"].items()) {
        auto dim = parse_dimension(name);
        if (!dim) throw_config("unknown dimension in acquisition config: " + name);
        if (!patterns.is_array())
            throw_config("templates for " + name + " must be an array");
        for (const json& pattern : patterns) {
            if (!pattern.is_string())
                throw_config("templates for " + name + " must be strings");
            config.templates[*dim].push_back({*dim, pattern.get<std::string>()});
        }
    }
    config.validate();
    return config;
}

AcquisitionConfig load_acquisition_config(const std::filesystem::path& source) {
    return acquisition_config_from_json(read_file(source));
}

std::uint64_t prompt_digest(std::string_view prompt) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : prompt) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string prompt_digest_hex(std::string_view prompt) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(prompt_digest(prompt)));
    return buf;
}

namespace {

class FixtureBackend : public MaskBackend {
public:
    explicit FixtureBackend(const std::filesystem::path& source) : source_(source.string()) {
        json doc = json::parse(read_file(source), nullptr, false);
        if (doc.is_discarded() || !doc.is_object())
            throw_config("malformed fixture document: " + source_);
        if (!doc.contains("version") || doc["version"] != "1")
            throw_config("fixture document has an unsupported version: " + source_);
        if (!doc.contains("entries") || !doc["entries"].is_object())
            throw_config("fixture document needs an entries object: " + source_);
        for (const auto& [digest, fillers] : doc["entries"].items()) {
            if (!fillers.is_array())
                throw_config("fixture entry " + digest + " must be an array");
            MaskFillResult result;
            for (const json& pair : fillers) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                    !pair[1].is_number())
                    throw_config("fixture entry " + digest +
                                 " must hold [token, score] pairs");
                result.fillers.emplace_back(pair[0].get<std::string>(),
                                            pair[1].get<double>());
            }
            try {
                validate_fill_result(result);
            } catch (const Error& e) {
                throw_config("fixture entry " + digest + ": " + e.what());
            }
            entries_[digest] = std::move(result);
        }
    }

    MaskFillResult fill(const std::string& prompt, int top_k) override {
        auto it = entries_.find(prompt_digest_hex(prompt));
        if (it == entries_.end())
            throw_backend("fixture miss: no recorded fillers for prompt \"" + prompt +
                          "\" in " + source_);
        MaskFillResult result = it->second;
        if (result.fillers.size() > static_cast<std::size_t>(top_k))
            result.fillers.resize(static_cast<std::size_t>(top_k));
        return result;
    }

private:
    std::string source_;
    std::map<std::string, MaskFillResult> entries_;
};

class HttpBackend : public MaskBackend {
public:
    explicit HttpBackend(const BackendEndpoint& endpoint) : timeout_(endpoint.timeout_seconds) {
        const std::string& url = endpoint.location;
        if (url.rfind("https://", 0) == 0)
            throw_config("https backend endpoints are not supported by this build");
        if (url.rfind("http://", 0) != 0)
            throw_config("backend URL must start with http://: " + url);
        std::size_t path_start = url.find('/', std::string("http://").size());
        if (path_start == std::string::npos) {
            base_ = url;
            path_ = "/";
        } else {
            base_ = url.substr(0, path_start);
            path_ = url.substr(path_start);
        }
        if (!endpoint.auth_env.empty()) {
            const char* token = std::getenv(endpoint.auth_env.c_str());
            if (!token)
                throw_config("auth environment variable is not set: " + endpoint.auth_env);
            token_ = token;
        }
    }

    MaskFillResult fill(const std::string& prompt, int top_k) override {
        json body;
        body["prompt"] = prompt;
        body["top_k"] = top_k;
        const std::string payload = body.dump();

        std::string failure;
        for (int attempt = 0; attempt < 3; ++attempt) {
            if (attempt > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(100 << (attempt - 1)));
            }
            httplib::Client client(base_);
            client.set_connection_timeout(std::chrono::duration<double>(timeout_));
            client.set_read_timeout(std::chrono::duration<double>(timeout_));
            client.set_write_timeout(std::chrono::duration<double>(timeout_));
            httplib::Headers headers;
            if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
            auto response = client.Post(path_, headers, payload, "application/json");
            if (!response) {
                failure = "transport failure: " + httplib::to_string(response.error());
                continue;
            }
            if (response->status != 200) {
                failure = "status " + std::to_string(response->status);
                continue;
            }
            return parse_response(response->body, top_k);
        }
        throw_backend("backend request failed after 3 attempts (" + failure + "): " + base_ +
                      path_);
    }

private:
    MaskFillResult parse_response(const std::string& body, int top_k) {
        json doc = json::parse(body, nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("fillers") ||
            !doc["fillers"].is_array())
            throw_backend("malformed backend response: expected a fillers array");
        MaskFillResult result;
        for (const json& pair : doc["fillers"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                !pair[1].is_number())
                throw_backend("malformed backend response: fillers must be [token, score]");
            result.fillers.emplace_back(pair[0].get<std::string>(), pair[1].get<double>());
        }
        try {
            validate_fill_result(result);
        } catch (const Error& e) {
            throw_backend(std::string("malformed backend response: ") + e.what());
        }
        if (result.fillers.size() > static_cast<std::size_t>(top_k))
            result.fillers.resize(static_cast<std::size_t>(top_k));
        return result;
    }

    std::string base_;
    std::string path_;
    std::string token_;
    double timeout_;
};

}  // namespace

std::unique_ptr<MaskBackend> make_backend(const BackendEndpoint& endpoint) {
    if (endpoint.kind == BackendEndpoint::Kind::Fixture)
        return std::make_unique<FixtureBackend>(endpoint.location);
    return std::make_unique<HttpBackend>(endpoint);
}

std::string render_prompt(const PromptTemplate& tmpl, const ConceptTerm& word) {
    validate_prompt_template(tmpl);
    std::string out = tmpl.pattern;
    std::size_t pos = 0;
    while ((pos = out.find("{word}", pos)) != std::string::npos) {
        out.replace(pos, 6, word.lemma);
        pos += word.lemma.size();
    }
    return out;
}

MaskFillResult fill_mask(MaskBackend& backend, const std::string& prompt, int top_k) {
    if (count_occurrences(prompt, "[MASK]") != 1)
        throw_domain("prompt must contain exactly one [MASK]: " + prompt);
    if (top_k < 1) throw_domain("top_k must be at least 1");
    MaskFillResult result = backend.fill(prompt, top_k);
    if (result.fillers.size() > static_cast<std::size_t>(top_k))
        result.fillers.resize(static_cast<std::size_t>(top_k));
    return result;
}

WeightedConceptSet scores_to_weights(const MaskFillResult& result, double ceiling) {
    if (result.empty()) throw_domain("cannot convert an empty mask-fill result");
    if (!(ceiling > 0.0 && ceiling <= 1.0)) throw_config("weight ceiling must lie in (0,1]");
    validate_fill_result(result);
    const double max_raw = result.fillers.front().second;
    WeightedConceptSet out;
    for (const auto& [token, raw] : result.fillers) {
        if (raw <= 0.0) continue;
        out.insert(token, ceiling * (raw / max_raw));
    }
    return out;
}

namespace {

// Trims, rejects multi-token fillers, lowercases, applies the stop list.
// Empty return means "drop this filler".
std::string content_token(const std::string& token, const std::set<std::string>& stop_list) {
    std::size_t begin = 0;
    std::size_t end = token.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(token[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(token[end - 1]))) --end;
    if (begin == end) return "";
    std::string trimmed = token.substr(begin, end - begin);
    for (char c : trimmed) {
        if (std::isspace(static_cast<unsigned char>(c))) return "";
    }
    std::string lemma = normalize_lemma(trimmed);
    if (stop_list.count(lemma)) return "";
    return lemma;
}

WeightedConceptSet acquire_one_template(const PromptTemplate& tmpl, const ConceptTerm& word,
                                        MaskBackend& backend, const AcquisitionConfig& config) {
    const std::string prompt = render_prompt(tmpl, word);
    MaskFillResult raw = fill_mask(backend, prompt, config.top_k);
    MaskFillResult kept;
    for (const auto& [token, score] : raw.fillers) {
        std::string lemma = content_token(token, config.stop_list);
        if (!lemma.empty()) kept.fillers.emplace_back(lemma, score);
    }
    if (kept.empty()) return {};
    return scores_to_weights(kept, config.weight_ceiling);
}

}  // namespace

WeightedConceptSet acquire(const ConceptTerm& word, Dimension dimension, MaskBackend& backend,
                           const AcquisitionConfig& config) {
    config.validate();
    auto it = config.templates.find(dimension);
    if (it == config.templates.end() || it->second.empty())
        throw_config(std::string("no templates for dimension ") +
                     std::string(dimension_name(dimension)));
    const std::vector<PromptTemplate>& templates = it->second;

    std::vector<WeightedConceptSet> partial(templates.size());
    if (config.parallelism > 1 && templates.size() > 1) {
        // Chunked fan-out; the merge below runs in template order, so the
        // schedule never shows in the result.
        std::size_t next = 0;
        while (next < templates.size()) {
            std::vector<std::future<WeightedConceptSet>> batch;
            std::size_t stop =
                std::min(templates.size(), next + static_cast<std::size_t>(config.parallelism));
            for (std::size_t i = next; i < stop; ++i) {
                batch.push_back(std::async(std::launch::async, [&, i] {
                    return acquire_one_template(templates[i], word, backend, config);
                }));
            }
            for (std::size_t i = next; i < stop; ++i) partial[i] = batch[i - next].get();
            next = stop;
        }
    } else {
        for (std::size_t i = 0; i < templates.size(); ++i) {
            partial[i] = acquire_one_template(templates[i], word, backend, config);
        }
    }

    WeightedConceptSet merged;
    for (const WeightedConceptSet& set : partial) merged = merge_sets(merged, set);
    return merged;
}

}  // namespace symvec
