#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "plagdetect/ngram.hpp"

namespace plagdetect {

/// Base of the logarithm in the idf formula. Only rescales weights; pinned in
/// the run configuration so results stay reproducible.
enum class LogBase { Natural, Base10 };

enum class Measure { Cosine, Jaccard };

const char* to_string(Measure m);
const char* to_string(LogBase b);
Measure measure_from_string(const std::string& s);   // "cosine" | "jaccard"
LogBase log_base_from_string(const std::string& s);  // "e" | "10"

/// Inverse document frequency, 1 + log(N / df). Always >= 1; exactly 1 when
/// the term occurs in every document. df outside [1, N] violates the model
/// invariant and throws.
double idf(std::size_t df_t, std::size_t n_docs, LogBase base = LogBase::Natural);

/// Sparse tf-idf vector. Entries are sorted by term; terms absent from the
/// document are never stored, so every stored weight is > 0.
struct WeightVector {
    std::string doc_id;
    int n = 1;
    std::vector<std::pair<std::string, double>> weights;  // sorted by term
    double norm = 0.0;                                    // Euclidean length

    bool empty() const { return weights.empty(); }
};

/// weight(t) = tf(t, d) * idf(t). The bag must belong to the model: a term
/// without a df entry means a bag/model mismatch and throws.
WeightVector tfidf_vector(const NGramBag& bag, const CorpusModel& model,
                          LogBase base = LogBase::Natural);

/// Normalized dot product in [0, 1]. Returns 0 when either vector is empty;
/// such pairs are flagged undefined at the matrix level.
double cosine_similarity(const WeightVector& u, const WeightVector& v);

/// |s ∩ t| / |s ∪ t| on trigram sets; 0 when both sets are empty.
double jaccard_similarity(const NGramSet& s, const NGramSet& t);

/// Symmetric pairwise scores for one (n, measure) configuration. Scores are
/// mirrored exactly; the diagonal is unused. Pairs involving an empty
/// document carry an "undefined" flag and score 0.
struct SimilarityMatrix {
    int n = 1;
    Measure measure = Measure::Cosine;
    std::vector<std::string> doc_ids;
    std::vector<double> scores;
    std::vector<std::uint8_t> undefined;

    std::size_t size() const { return doc_ids.size(); }
    double score(std::size_t i, std::size_t j) const { return scores[i * size() + j]; }
    double percentage(std::size_t i, std::size_t j) const { return score(i, j) * 100.0; }
    bool is_undefined(std::size_t i, std::size_t j) const {
        return undefined[i * size() + j] != 0;
    }
};

SimilarityMatrix pairwise_cosine(const CorpusModel& model, LogBase base = LogBase::Natural);

SimilarityMatrix pairwise_jaccard(const std::vector<std::string>& doc_ids,
                                  const std::vector<NGramSet>& sets, int n = 3);

/// Full pipeline for one configuration: bags/model (cosine) or window sets
/// (Jaccard), then all pairs. Requires >= 2 streams.
SimilarityMatrix pairwise_matrix(const std::vector<TokenStream>& streams, int n,
                                 Measure measure, LogBase base = LogBase::Natural);

}  // namespace plagdetect
