#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "plagdetect/preprocess.hpp"

namespace plagdetect {

/// Separator used when joining window tokens into a flat n-gram key. Tokens
/// can never contain whitespace, so joined keys are collision-free.
inline constexpr char kNGramSeparator = ' ';

/// Term-frequency bag over the contiguous n-token windows of one document.
/// Zero-count entries are never stored; the bag mass equals
/// max(0, token_count - n + 1).
struct NGramBag {
    std::string doc_id;
    int n = 1;
    std::unordered_map<std::string, std::uint32_t> counts;

    std::size_t total() const;
};

using NGramSet = std::unordered_set<std::string>;

/// Per-order corpus statistics: document count, document frequency per term,
/// and all bags in corpus order.
struct CorpusModel {
    int n = 1;
    std::size_t doc_count = 0;  // N
    std::unordered_map<std::string, std::size_t> df;
    std::vector<NGramBag> bags;

    std::vector<std::string> doc_ids() const;
};

/// Counts every contiguous window of n tokens. Streams shorter than n yield
/// an empty bag. Windows never bridge documents and stream ends are unpadded.
/// n outside {1,2,3} is a configuration error.
NGramBag extract_ngrams(const TokenStream& stream, int n);

/// Builds a bag per stream and aggregates document frequencies
/// (df(t) = number of documents containing t). Requires >= 2 streams.
CorpusModel build_corpus_model(const std::vector<TokenStream>& streams, int n);

/// Distinct n-token windows of a stream; duplicates collapse (set semantics).
NGramSet ngram_set(const TokenStream& stream, int n);

/// The trigram sequence set used by the Jaccard path.
NGramSet trigram_set(const TokenStream& stream);

/// Debug dump of the vocabulary as "term,df" CSV rows sorted by term.
void dump_vocabulary_csv(const CorpusModel& model, std::ostream& out);

}  // namespace plagdetect
