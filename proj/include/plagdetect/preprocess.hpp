#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "plagdetect/corpus.hpp"

namespace plagdetect {

/// Normalized token sequence of one document.
struct TokenStream {
    std::string doc_id;
    std::vector<std::string> tokens;  // lowercase, non-empty, delimiter-free
};

/// Lowercased word set used to drop high-frequency function words before
/// modeling. Ships with a pinned default English list; a user file can
/// replace it (one word per line, '#' comments, surrounding whitespace
/// trimmed, entries lowercased on load).
class StopwordSet {
public:
    StopwordSet() = default;  // empty set: nothing is filtered

    static const StopwordSet& bundled_default();
    static StopwordSet from_file(const std::filesystem::path& path);
    static StopwordSet from_words(const std::vector<std::string>& words);

    bool contains(const std::string& word) const { return words_.count(word) > 0; }
    std::size_t size() const { return words_.size(); }
    const std::string& source() const { return source_; }
    const std::unordered_set<std::string>& words() const { return words_; }

private:
    static StopwordSet parse(std::string_view text, std::string source);

    std::unordered_set<std::string> words_;
    std::string source_ = "empty";
};

/// Lowercases the text and splits it into maximal runs of word characters;
/// every other character is a delimiter and is discarded.
std::vector<std::string> tokenize(std::string_view text);

/// Deletes every token in the stopword set, preserving the survivors' order.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordSet& stops);

struct PreprocessResult {
    std::vector<TokenStream> streams;   // one per document, corpus order
    std::vector<std::string> warnings;  // documents reduced to zero tokens
};

/// Tokenizes and filters every document. Zero-token documents are kept (and
/// flagged) so pair indexing stays aligned with the corpus.
PreprocessResult preprocess_corpus(const Corpus& corpus, const StopwordSet& stops);

}  // namespace plagdetect
