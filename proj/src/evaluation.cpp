#include "symvec/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "symvec/store_io.hpp"

namespace symvec {

using nlohmann::json;

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

bool parses_as_number(const std::string& text, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(text, &used);
        while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used])))
            ++used;
        return used == text.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

std::vector<BenchmarkPair> parse_benchmark(const std::string& text) {
    std::vector<BenchmarkPair> pairs;
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            first = false;
            continue;
        }
        std::vector<std::string> fields = split_fields(line);
        double score = 0.0;
        if (first) {
            first = false;
            // A row whose last field is not a number is the header.
            if (fields.size() < 3 || !parses_as_number(fields[2], score)) continue;
        }
        if (fields.size() != 3)
            throw_config("benchmark line " + std::to_string(line_number) +
                         ": expected word,word,score");
        if (!parses_as_number(fields[2], score))
            throw_config("benchmark line " + std::to_string(line_number) +
                         ": score is not a number");
        if (!(score >= 0.0 && score <= 10.0))
            throw_config("benchmark line " + std::to_string(line_number) +
                         ": score must lie in [0,10]");
        BenchmarkPair pair;
        try {
            pair.word1 = normalize_lemma(fields[0]);
            pair.word2 = normalize_lemma(fields[1]);
        } catch (const Error&) {
            throw_config("benchmark line " + std::to_string(line_number) + ": empty word");
        }
        pair.human = score;
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

std::vector<BenchmarkPair> load_benchmark(const std::filesystem::path& source) {
    return parse_benchmark(read_file(source));
}

std::vector<double> average_ranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (0-based) share the averaged 1-based rank
        double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw_domain("rank correlation needs equal-length lists");
    if (xs.size() < 2) throw_domain("rank correlation needs at least 2 points");
    auto constant = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
    };
    if (constant(xs) || constant(ys))
        throw_domain("rank correlation is undefined for constant input");

    std::vector<double> rx = average_ranks(xs);
    std::vector<double> ry = average_ranks(ys);
    const double n = static_cast<double>(rx.size());
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double num = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        num += (rx[i] - mx) * (ry[i] - my);
        dx += (rx[i] - mx) * (rx[i] - mx);
        dy += (ry[i] - my) * (ry[i] - my);
    }
    double rho = num / std::sqrt(dx * dy);
    return std::clamp(rho, -1.0, 1.0);
}

EvalReport evaluate(const EmbeddingStore& store, const std::vector<BenchmarkPair>& pairs,
                    const SimilarityConfig& config) {
    config.validate();
    EvalReport report;
    report.pairs.reserve(pairs.size());
    for (const BenchmarkPair& pair : pairs) {
        PairOutcome outcome;
        outcome.word1 = pair.word1;
        outcome.word2 = pair.word2;
        outcome.human = pair.human;
        std::string missing;
        if (!store.contains(pair.word1)) missing = pair.word1;
        if (!store.contains(pair.word2)) {
            if (!missing.empty()) missing += "', '";
            missing += pair.word2;
        }
        if (!missing.empty()) {
            outcome.covered = false;
            outcome.skip_reason = "word missing from store: '" + missing + "'";
            ++report.skipped;
        } else {
            outcome.covered = true;
            outcome.system = similarity(pair.word1, pair.word2, store, config).aggregate;
            ++report.covered;
        }
        report.pairs.push_back(std::move(outcome));
    }

    if (report.covered < 2)
        throw_domain("insufficient coverage: " + std::to_string(report.covered) + " of " +
                     std::to_string(pairs.size()) + " pairs have both words in the store");

    std::vector<double> human;
    std::vector<double> system;
    for (const PairOutcome& outcome : report.pairs) {
        if (!outcome.covered) continue;
        human.push_back(outcome.human);
        system.push_back(outcome.system);
    }
    std::vector<double> human_ranks = average_ranks(human);
    std::vector<double> system_ranks = average_ranks(system);
    std::size_t next = 0;
    for (PairOutcome& outcome : report.pairs) {
        if (!outcome.covered) continue;
        outcome.human_rank = human_ranks[next];
        outcome.system_rank = system_ranks[next];
        ++next;
    }
    report.spearman = spearman(human, system);
    return report;
}

namespace {

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string rank1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
    json doc;
    doc["spearman"] = fixed6(report.spearman);
    doc["covered"] = report.covered;
    doc["skipped"] = report.skipped;
    doc["total"] = report.covered + report.skipped;
    json rows = json::array();
    for (const PairOutcome& outcome : report.pairs) {
        json row;
        row["word1"] = outcome.word1;
        row["word2"] = outcome.word2;
        row["human"] = outcome.human;
        if (outcome.covered) {
            row["system"] = fixed6(outcome.system);
            row["human_rank"] = outcome.human_rank;
            row["system_rank"] = outcome.system_rank;
        } else {
            row["skip_reason"] = outcome.skip_reason;
        }
        rows.push_back(std::move(row));
    }
    doc["pairs"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string report_to_text(const EvalReport& report) {
    std::ostringstream out;
    out << "pairs=" << report.covered + report.skipped << " covered=" << report.covered
        << " skipped=" << report.skipped << "\n";
    out << "spearman=" << fixed6(report.spearman) << "\n";
    for (const PairOutcome& outcome : report.pairs) {
        out << outcome.word1 << "," << outcome.word2 << " human=" << outcome.human;
        if (outcome.covered) {
            out << " system=" << fixed6(outcome.system) << " ranks=" << rank1(outcome.human_rank)
                << "/" << rank1(outcome.system_rank);
        } else {
            out << " skipped (" << outcome.skip_reason << ")";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace symvec
