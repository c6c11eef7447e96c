#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "symvec/core.hpp"

namespace symvec {

inline constexpr std::string_view kStoreFormatVersion = "1";

// Canonical serialization: keys sorted, weights as decimal text with up to 6
// fractional digits, 2-space indent, trailing newline. Two structurally equal
// stores serialize to identical bytes.
std::string store_to_json(const EmbeddingStore& store);
EmbeddingStore store_from_json(std::string_view text);

// Atomic file I/O: save writes to a temp file in the destination directory and
// renames it into place, so no partial store is ever observable.
void store_save(const EmbeddingStore& store, const std::filesystem::path& destination);
EmbeddingStore store_load(const std::filesystem::path& source);

// Shared atomic-write helper for all file-emitting commands.
void write_file_atomic(const std::filesystem::path& destination, std::string_view content);
std::string read_file(const std::filesystem::path& source);

}  // namespace symvec
