#include "plagdetect/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "plagdetect/error.hpp"
#include "plagdetect/unicode.hpp"

namespace fs = std::filesystem;

namespace plagdetect {

std::vector<std::string> Corpus::ids() const {
    std::vector<std::string> out;
    out.reserve(documents.size());
    for (const auto& doc : documents) out.push_back(doc.id);
    return out;
}

bool glob_match(std::string_view pattern, std::string_view name) {
    std::size_t p = 0, n = 0;
    std::size_t star = std::string_view::npos, mark = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = n;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            n = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

Document load_document(const fs::path& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw Error("I/O error while reading: " + path.string());
    }
    const std::string bytes = buffer.str();

    Document doc;
    doc.id = path.stem().string();
    doc.source_path = path;
    doc.byte_len = bytes.size();

    auto decoded = unicode::decode_utf8_lossy(bytes);
    doc.replacement_count = decoded.replacements;
    doc.raw_text = unicode::encode_utf8(decoded.text);

    if (warnings != nullptr) {
        if (bytes.empty()) {
            warnings->push_back("empty document: " + path.string());
        } else if (decoded.replacements > 0) {
            warnings->push_back("lossy decode (" + std::to_string(decoded.replacements) +
                                " invalid sequences replaced): " + path.string());
            if (2 * decoded.replacements > decoded.text.size()) {
                warnings->push_back("likely non-text file: " + path.string());
            }
        }
    }
    return doc;
}

namespace {

std::vector<fs::path> matching_files(const fs::path& dir, const ScanOptions& options) {
    std::vector<fs::path> files;
    auto consider = [&](const fs::directory_entry& entry) {
        if (!entry.is_regular_file()) return;
        if (glob_match(options.glob, entry.path().filename().string())) {
            files.push_back(entry.path());
        }
    };
    if (options.recursive) {
        for (const auto& entry : fs::recursive_directory_iterator(dir)) consider(entry);
    } else {
        for (const auto& entry : fs::directory_iterator(dir)) consider(entry);
    }
    return files;
}

}  // namespace

Corpus scan_directory(const fs::path& dir, const ScanOptions& options) {
    std::error_code ec;
    if (!fs::exists(dir, ec) || !fs::is_directory(dir, ec)) {
        throw Error("corpus directory not found: " + dir.string());
    }

    Corpus corpus;
    for (const auto& path : matching_files(dir, options)) {
        corpus.documents.push_back(load_document(path, &corpus.warnings));
    }

    if (corpus.documents.empty()) {
        throw Error("empty corpus: no files matching '" + options.glob + "' in " + dir.string());
    }
    if (corpus.documents.size() < 2) {
        throw Error("need at least 2 documents for pairwise comparison, found 1 in " +
                    dir.string());
    }

    std::sort(corpus.documents.begin(), corpus.documents.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    std::sort(corpus.warnings.begin(), corpus.warnings.end());

    for (std::size_t i = 1; i < corpus.documents.size(); ++i) {
        if (corpus.documents[i].id == corpus.documents[i - 1].id) {
            throw Error("duplicate document id '" + corpus.documents[i].id + "' from " +
                        corpus.documents[i - 1].source_path.string() + " and " +
                        corpus.documents[i].source_path.string());
        }
    }
    return corpus;
}

}  // namespace plagdetect
