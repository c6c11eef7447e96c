#include "symvec/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace symvec {

using nlohmann::json;

std::string_view measure_name(Measure m) {
    return m == Measure::Cosine ? "COSINE" : "WEIGHTED_JACCARD";
}

std::optional<Measure> parse_measure(std::string_view name) {
    if (name == "COSINE") return Measure::Cosine;
    if (name == "WEIGHTED_JACCARD") return Measure::WeightedJaccard;
    return std::nullopt;
}

std::string_view missing_policy_name(MissingPolicy p) {
    return p == MissingPolicy::Zero ? "ZERO" : "SKIP_RENORMALIZE";
}

std::optional<MissingPolicy> parse_missing_policy(std::string_view name) {
    if (name == "ZERO") return MissingPolicy::Zero;
    if (name == "SKIP_RENORMALIZE") return MissingPolicy::SkipRenormalize;
    return std::nullopt;
}

std::map<Dimension, double> SimilarityConfig::default_alpha() {
    std::map<Dimension, double> alpha;
    for (Dimension d : kAllDimensions) alpha[d] = 1.0;
    return alpha;
}

void SimilarityConfig::validate() const {
    bool any_positive = false;
    for (const auto& [dim, a] : alpha) {
        (void)dim;
        if (a < 0.0) throw_config("dimension weights must be nonnegative");
        if (a > 0.0) any_positive = true;
    }
    if (!any_positive) throw_config("at least one dimension weight must be positive");
}

std::string_view dim_flag_name(DimFlag f) {
    switch (f) {
        case DimFlag::Computed:     return "computed";
        case DimFlag::MissingLeft:  return "missing-left";
        case DimFlag::MissingRight: return "missing-right";
        case DimFlag::BothMissing:  return "both-empty";
    }
    return "";
}

double dim_similarity(const WeightedConceptSet& a, const WeightedConceptSet& b, Measure measure) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    if (a == b) return 1.0;

    if (measure == Measure::WeightedJaccard) {
        double sum_min = 0.0;
        double sum_max = 0.0;
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() || ib != b.end()) {
            if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
                sum_max += ia->second;
                ++ia;
            } else if (ia == a.end() || ib->first < ia->first) {
                sum_max += ib->second;
                ++ib;
            } else {
                sum_min += std::min(ia->second, ib->second);
                sum_max += std::max(ia->second, ib->second);
                ++ia;
                ++ib;
            }
        }
        double s = sum_max == 0.0 ? 0.0 : sum_min / sum_max;
        return std::clamp(s, 0.0, 1.0);
    }

    double dot = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    for (const auto& [lemma, w] : a) norm_a += w * w;
    for (const auto& [lemma, w] : b) norm_b += w * w;
    for (const auto& [lemma, w] : a) {
        double wb = b.weight_or_zero(lemma);
        if (wb > 0.0) dot += w * wb;
    }
    if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
    double s = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
    return std::clamp(s, 0.0, 1.0);
}

SimilarityReport similarity(const std::string& word1, const std::string& word2,
                            const EmbeddingStore& store, const SimilarityConfig& config) {
    config.validate();
    const SymbolicEmbedding& left = store.at(word1);
    const SymbolicEmbedding& right = store.at(word2);

    SimilarityReport report;
    report.word1 = word1;
    report.word2 = word2;
    report.measure = config.measure;
    report.policy = config.policy;
    report.alpha = config.alpha;

    double num = 0.0;
    double den = 0.0;
    double min_included = std::numeric_limits<double>::infinity();
    double max_included = -std::numeric_limits<double>::infinity();

    for (Dimension d : kAllDimensions) {
        double a = 0.0;
        if (auto it = config.alpha.find(d); it != config.alpha.end()) a = it->second;

        const WeightedConceptSet* ls = left.dimension(d);
        const WeightedConceptSet* rs = right.dimension(d);

        DimScore ds;
        if (ls && rs) {
            ds.flag = DimFlag::Computed;
            ds.score = dim_similarity(*ls, *rs, config.measure);
        } else if (!ls && rs) {
            ds.flag = DimFlag::MissingLeft;
        } else if (ls && !rs) {
            ds.flag = DimFlag::MissingRight;
        } else {
            ds.flag = DimFlag::BothMissing;
        }

        if (a > 0.0) {
            if (config.policy == MissingPolicy::SkipRenormalize) {
                if (ds.flag == DimFlag::Computed) {
                    ds.included = true;
                    num += a * ds.score;
                    den += a;
                    min_included = std::min(min_included, ds.score);
                    max_included = std::max(max_included, ds.score);
                }
            } else {
                // ZERO: every alpha-positive dimension enters; missing ones score 0.
                ds.included = true;
                num += a * ds.score;
                den += a;
                min_included = std::min(min_included, ds.score);
                max_included = std::max(max_included, ds.score);
            }
        }
        report.dims[d] = ds;
    }

    if (den == 0.0) {
        report.aggregate = 0.0;  // documented vacuous value: no shared dimensions
    } else {
        double agg = num / den;
        agg = std::clamp(agg, min_included, max_included);
        report.aggregate = std::clamp(agg, 0.0, 1.0);
    }
    return report;
}

std::vector<std::pair<std::string, double>> nearest(const std::string& word,
                                                    const EmbeddingStore& store, int k,
                                                    const SimilarityConfig& config) {
    if (k < 1) throw_domain("k must be at least 1");
    store.at(word);  // unknown-word check up front
    std::vector<std::pair<std::string, double>> scored;
    for (const auto& [candidate, embedding] : store.words()) {
        (void)embedding;
        if (candidate == word) continue;
        scored.emplace_back(candidate, similarity(word, candidate, store, config).aggregate);
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (static_cast<std::size_t>(k) < scored.size()) scored.resize(static_cast<std::size_t>(k));
    return scored;
}

namespace {

std::string format_score(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string report_to_json(const SimilarityReport& report) {
    json doc;
    doc["word1"] = report.word1;
    doc["word2"] = report.word2;
    doc["measure"] = std::string(measure_name(report.measure));
    doc["policy"] = std::string(missing_policy_name(report.policy));
    json alpha = json::object();
    for (const auto& [d, a] : report.alpha) alpha[std::string(dimension_name(d))] = a;
    doc["alpha"] = std::move(alpha);
    json dims = json::object();
    for (const auto& [d, ds] : report.dims) {
        json entry;
        entry["flag"] = std::string(dim_flag_name(ds.flag));
        entry["included"] = ds.included;
        if (ds.flag == DimFlag::Computed) entry["score"] = format_score(ds.score);
        dims[std::string(dimension_name(d))] = std::move(entry);
    }
    doc["dimensions"] = std::move(dims);
    doc["aggregate"] = format_score(report.aggregate);
    return doc.dump(2) + "\n";
}

std::string report_to_text(const SimilarityReport& report) {
    std::ostringstream out;
    const char* measure_label = report.measure == Measure::Cosine ? "cosine" : "jaccard";
    out << "w1=" << report.word1 << " w2=" << report.word2 << " measure="
        << measure_name(report.measure) << " policy=" << missing_policy_name(report.policy)
        << "\n";
    for (Dimension d : kAllDimensions) {
        auto it = report.dims.find(d);
        if (it == report.dims.end()) continue;
        out << dimension_name(d) << " ";
        if (it->second.flag == DimFlag::Computed) {
            out << measure_label << "=" << format_score(it->second.score);
            if (!it->second.included) out << " (excluded)";
        } else {
            out << dim_flag_name(it->second.flag);
        }
        out << "\n";
    }
    out << "aggregate=" << format_score(report.aggregate) << "\n";
    return out.str();
}

}  // namespace symvec
