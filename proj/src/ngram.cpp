#include "plagdetect/ngram.hpp"

#include <algorithm>

#include "plagdetect/error.hpp"

namespace plagdetect {

namespace {

void check_order(int n) {
    if (n < 1 || n > 3) {
        throw ConfigError("n-gram order must be 1, 2 or 3, got " + std::to_string(n));
    }
}

std::string join_window(const std::vector<std::string>& tokens, std::size_t begin, int n) {
    std::string key = tokens[begin];
    for (int k = 1; k < n; ++k) {
        key.push_back(kNGramSeparator);
        key.append(tokens[begin + static_cast<std::size_t>(k)]);
    }
    return key;
}

}  // namespace

std::size_t NGramBag::total() const {
    std::size_t sum = 0;
    for (const auto& [term, count] : counts) sum += count;
    return sum;
}

std::vector<std::string> CorpusModel::doc_ids() const {
    std::vector<std::string> out;
    out.reserve(bags.size());
    for (const auto& bag : bags) out.push_back(bag.doc_id);
    return out;
}

NGramBag extract_ngrams(const TokenStream& stream, int n) {
    check_order(n);
    NGramBag bag;
    bag.doc_id = stream.doc_id;
    bag.n = n;
    const std::size_t len = stream.tokens.size();
    if (len < static_cast<std::size_t>(n)) return bag;
    const std::size_t windows = len - static_cast<std::size_t>(n) + 1;
    bag.counts.reserve(windows);
    for (std::size_t i = 0; i < windows; ++i) {
        ++bag.counts[join_window(stream.tokens, i, n)];
    }
    return bag;
}

CorpusModel build_corpus_model(const std::vector<TokenStream>& streams, int n) {
    check_order(n);
    if (streams.size() < 2) {
        throw Error("need at least 2 documents to build a corpus model, got " +
                    std::to_string(streams.size()));
    }
    CorpusModel model;
    model.n = n;
    model.doc_count = streams.size();
    model.bags.reserve(streams.size());
    for (const auto& stream : streams) {
        NGramBag bag = extract_ngrams(stream, n);
        for (const auto& [term, count] : bag.counts) {
            ++model.df[term];  // bag keys are unique, so this counts documents
        }
        model.bags.push_back(std::move(bag));
    }
    return model;
}

NGramSet ngram_set(const TokenStream& stream, int n) {
    check_order(n);
    NGramSet set;
    const std::size_t len = stream.tokens.size();
    if (len < static_cast<std::size_t>(n)) return set;
    const std::size_t windows = len - static_cast<std::size_t>(n) + 1;
    set.reserve(windows);
    for (std::size_t i = 0; i < windows; ++i) {
        set.insert(join_window(stream.tokens, i, n));
    }
    return set;
}

NGramSet trigram_set(const TokenStream& stream) {
    return ngram_set(stream, 3);
}

void dump_vocabulary_csv(const CorpusModel& model, std::ostream& out) {
    std::vector<std::pair<std::string, std::size_t>> rows(model.df.begin(), model.df.end());
    std::sort(rows.begin(), rows.end());
    out << "term,df\n";
    for (const auto& [term, df] : rows) {
        out << term << ',' << df << '\n';
    }
}

}  // namespace plagdetect
