#include "symvec/store_io.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symvec {

using nlohmann::json;

namespace {

double parse_weight_text(const json& value) {
    double w = 0.0;
    if (value.is_number()) {
        w = value.get<double>();
    } else if (value.is_string()) {
        const std::string& s = value.get_ref<const std::string&>();
        char* end = nullptr;
        w = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0') {
            throw_config("malformed weight: '" + s + "'");
        }
    } else {
        throw_config("malformed weight entry: expected number or decimal string");
    }
    if (!(w >= 0.0 && w <= 1.0)) {
        throw_config("weight out of range [0,1]: " + json(value).dump());
    }
    return w;
}

}  // namespace

std::string store_to_json(const EmbeddingStore& store) {
    json doc;
    doc["version"] = std::string(kStoreFormatVersion);
    doc["metadata"] = {
        {"created", store.metadata().created},
        {"provenance", store.metadata().provenance},
    };
    json words = json::object();
    for (const auto& [word, embedding] : store.words()) {
        json dims = json::object();
        for (const auto& [dim, set] : embedding.dims) {
            json entries = json::array();
            for (const auto& [lemma, weight] : set) {
                entries.push_back(json::array({lemma, format_weight(weight)}));
            }
            dims[std::string(dimension_name(dim))] = std::move(entries);
        }
        words[word] = std::move(dims);
    }
    doc["words"] = std::move(words);
    return doc.dump(2) + "\n";
}

EmbeddingStore store_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw_config(std::string("malformed store document: ") + e.what());
    }
    if (!doc.is_object()) throw_config("malformed store document: not an object");
    if (!doc.contains("version") || !doc["version"].is_string()) {
        throw_config("store document has no version tag");
    }
    if (doc["version"].get<std::string>() != kStoreFormatVersion) {
        throw_config("unknown store format version: " + doc["version"].get<std::string>());
    }

    EmbeddingStore store;
    if (doc.contains("metadata")) {
        const json& meta = doc["metadata"];
        store.metadata().created = meta.value("created", std::string());
        store.metadata().provenance = meta.value("provenance", std::string());
    }
    if (doc.contains("words")) {
        if (!doc["words"].is_object()) throw_config("malformed store document: words not an object");
        for (const auto& [word, dims] : doc["words"].items()) {
            if (!dims.is_object()) {
                throw_config("malformed store document: entry for '" + word + "' not an object");
            }
            // Every word appears even if it has no dimension sets.
            try {
                store.set_word(word);
                for (const auto& [dim_name, entries] : dims.items()) {
                    auto dim = parse_dimension(dim_name);
                    if (!dim) throw_config("unknown dimension name: " + dim_name);
                    if (!entries.is_array()) {
                        throw_config("malformed dimension entries for '" + word + "." + dim_name + "'");
                    }
                    WeightedConceptSet set;
                    for (const json& entry : entries) {
                        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string()) {
                            throw_config("malformed entry in '" + word + "." + dim_name +
                                         "': expected [lemma, weight]");
                        }
                        set.insert(entry[0].get<std::string>(), parse_weight_text(entry[1]));
                    }
                    store.set_dimension(word, *dim, std::move(set));
                }
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Domain) throw_config(e.what());
                throw;
            }
        }
    }
    return store;
}

void write_file_atomic(const std::filesystem::path& destination, std::string_view content) {
    namespace fs = std::filesystem;
    fs::path dir = destination.parent_path();
    if (dir.empty()) dir = ".";
    std::error_code ec;
    if (!fs::exists(dir, ec)) {
        throw_config("destination directory does not exist: " + dir.string());
    }
    fs::path tmp = dir / (destination.filename().string() + ".tmp." +
                          std::to_string(static_cast<unsigned>(::getpid())));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw_config("cannot write to " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out.flush()) {
            std::error_code rmec;
            fs::remove(tmp, rmec);
            throw_config("short write to " + tmp.string());
        }
    }
    fs::rename(tmp, destination, ec);
    if (ec) {
        std::error_code rmec;
        fs::remove(tmp, rmec);
        throw_config("cannot rename " + tmp.string() + " to " + destination.string() + ": " +
                     ec.message());
    }
}

std::string read_file(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw_config("cannot open file: " + source.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void store_save(const EmbeddingStore& store, const std::filesystem::path& destination) {
    write_file_atomic(destination, store_to_json(store));
}

EmbeddingStore store_load(const std::filesystem::path& source) {
    return store_from_json(read_file(source));
}

}  // namespace symvec
