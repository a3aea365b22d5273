#include "plagdetect/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "plagdetect/error.hpp"

namespace plagdetect {

const char* to_string(Measure m) {
    return m == Measure::Cosine ? "cosine" : "jaccard";
}

const char* to_string(LogBase b) {
    return b == LogBase::Natural ? "e" : "10";
}

Measure measure_from_string(const std::string& s) {
    if (s == "cosine") return Measure::Cosine;
    if (s == "jaccard") return Measure::Jaccard;
    throw ConfigError("unknown measure '" + s + "' (expected cosine or jaccard)");
}

LogBase log_base_from_string(const std::string& s) {
    if (s == "e" || s == "natural") return LogBase::Natural;
    if (s == "10" || s == "base10") return LogBase::Base10;
    throw ConfigError("unknown log base '" + s + "' (expected e or 10)");
}

double idf(std::size_t df_t, std::size_t n_docs, LogBase base) {
    if (df_t < 1 || df_t > n_docs) {
        throw Error("idf invariant violated: df=" + std::to_string(df_t) +
                    " outside [1, N=" + std::to_string(n_docs) + "]");
    }
    const double ratio = static_cast<double>(n_docs) / static_cast<double>(df_t);
    return 1.0 + (base == LogBase::Natural ? std::log(ratio) : std::log10(ratio));
}

WeightVector tfidf_vector(const NGramBag& bag, const CorpusModel& model, LogBase base) {
    WeightVector vec;
    vec.doc_id = bag.doc_id;
    vec.n = bag.n;
    vec.weights.reserve(bag.counts.size());
    for (const auto& [term, count] : bag.counts) {
        auto it = model.df.find(term);
        if (it == model.df.end()) {
            throw Error("bag/model mismatch: term '" + term + "' has no df entry");
        }
        vec.weights.emplace_back(term,
                                 static_cast<double>(count) * idf(it->second, model.doc_count, base));
    }
    // Sorted storage keeps dot products order-independent and runs reproducible.
    std::sort(vec.weights.begin(), vec.weights.end());
    double norm_sq = 0.0;
    for (const auto& [term, weight] : vec.weights) norm_sq += weight * weight;
    vec.norm = std::sqrt(norm_sq);
    return vec;
}

double cosine_similarity(const WeightVector& u, const WeightVector& v) {
    if (u.empty() || v.empty()) return 0.0;
    double dot = 0.0;
    auto it = u.weights.begin();
    auto jt = v.weights.begin();
    while (it != u.weights.end() && jt != v.weights.end()) {
        if (it->first < jt->first) {
            ++it;
        } else if (jt->first < it->first) {
            ++jt;
        } else {
            dot += it->second * jt->second;
            ++it;
            ++jt;
        }
    }
    return dot / (u.norm * v.norm);
}

double jaccard_similarity(const NGramSet& s, const NGramSet& t) {
    if (s.empty() && t.empty()) return 0.0;
    const NGramSet& small = s.size() <= t.size() ? s : t;
    const NGramSet& large = s.size() <= t.size() ? t : s;
    std::size_t intersection = 0;
    for (const auto& term : small) {
        if (large.count(term) > 0) ++intersection;
    }
    const std::size_t unions = s.size() + t.size() - intersection;
    return static_cast<double>(intersection) / static_cast<double>(unions);
}

namespace {

SimilarityMatrix make_matrix(int n, Measure measure, std::vector<std::string> doc_ids) {
    SimilarityMatrix mat;
    mat.n = n;
    mat.measure = measure;
    mat.doc_ids = std::move(doc_ids);
    const std::size_t size = mat.doc_ids.size();
    mat.scores.assign(size * size, 0.0);
    mat.undefined.assign(size * size, 0);
    for (std::size_t i = 0; i < size; ++i) mat.scores[i * size + i] = 1.0;
    return mat;
}

void set_pair(SimilarityMatrix& mat, std::size_t i, std::size_t j, double score,
              bool undefined) {
    const std::size_t size = mat.size();
    mat.scores[i * size + j] = score;
    mat.scores[j * size + i] = score;
    if (undefined) {
        mat.undefined[i * size + j] = 1;
        mat.undefined[j * size + i] = 1;
    }
}

}  // namespace

SimilarityMatrix pairwise_cosine(const CorpusModel& model, LogBase base) {
    std::vector<WeightVector> vectors;
    vectors.reserve(model.bags.size());
    for (const auto& bag : model.bags) vectors.push_back(tfidf_vector(bag, model, base));

    SimilarityMatrix mat = make_matrix(model.n, Measure::Cosine, model.doc_ids());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            const bool undefined = vectors[i].empty() || vectors[j].empty();
            const double score = undefined ? 0.0 : cosine_similarity(vectors[i], vectors[j]);
            set_pair(mat, i, j, score, undefined);
        }
    }
    return mat;
}

SimilarityMatrix pairwise_jaccard(const std::vector<std::string>& doc_ids,
                                  const std::vector<NGramSet>& sets, int n) {
    if (doc_ids.size() != sets.size()) {
        throw Error("jaccard: doc id / set count mismatch");
    }
    SimilarityMatrix mat = make_matrix(n, Measure::Jaccard, doc_ids);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const bool undefined = sets[i].empty() && sets[j].empty();
            set_pair(mat, i, j, jaccard_similarity(sets[i], sets[j]), undefined);
        }
    }
    return mat;
}

SimilarityMatrix pairwise_matrix(const std::vector<TokenStream>& streams, int n,
                                 Measure measure, LogBase base) {
    if (streams.size() < 2) {
        throw Error("pairwise comparison requires at least 2 documents, got " +
                    std::to_string(streams.size()));
    }
    if (measure == Measure::Cosine) {
        return pairwise_cosine(build_corpus_model(streams, n), base);
    }
    std::vector<std::string> ids;
    std::vector<NGramSet> sets;
    ids.reserve(streams.size());
    sets.reserve(streams.size());
    for (const auto& stream : streams) {
        ids.push_back(stream.doc_id);
        sets.push_back(ngram_set(stream, n));
    }
    return pairwise_jaccard(ids, sets, n);
}

}  // namespace plagdetect
