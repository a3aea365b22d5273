#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace plagdetect {

/// One assignment: identity, origin and decoded text.
struct Document {
    std::string id;                     // filename stem, unique within a corpus
    std::filesystem::path source_path;
    std::string raw_text;               // UTF-8; invalid input bytes were replaced
    std::size_t byte_len = 0;           // size of the file on disk
    std::size_t replacement_count = 0;  // U+FFFD substitutions made while decoding
};

/// Immutable collection of documents ordered lexicographically by id.
struct Corpus {
    std::vector<Document> documents;
    std::vector<std::string> warnings;  // per-file notes: empty files, lossy decodes

    std::size_t size() const { return documents.size(); }
    std::vector<std::string> ids() const;
};

struct ScanOptions {
    std::string glob = "*.txt";  // matched against the filename, supports * and ?
    bool recursive = false;
};

/// Reads one file. Decoding is lossy: invalid byte sequences become U+FFFD
/// and are counted on the document. Appends notes (empty file, lossy decode,
/// likely binary) to `warnings` when given.
Document load_document(const std::filesystem::path& path,
                       std::vector<std::string>* warnings = nullptr);

/// Registers every regular file matching the glob, sorted by id. Throws Error
/// when the directory is missing, fewer than two files match, or two files
/// share a filename stem.
Corpus scan_directory(const std::filesystem::path& dir, const ScanOptions& options = {});

/// Wildcard match supporting '*' and '?', case-sensitive.
bool glob_match(std::string_view pattern, std::string_view name);

}  // namespace plagdetect
