#include "plagdetect/preprocess.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "plagdetect/error.hpp"
#include "plagdetect/unicode.hpp"

namespace plagdetect {

namespace detail {
const char* default_stopword_text();  // stopwords_en.cpp
}

StopwordSet StopwordSet::parse(std::string_view text, std::string source) {
    StopwordSet set;
    set.source_ = std::move(source);
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;

        while (!line.empty() && (std::isspace(static_cast<unsigned char>(line.front())) != 0)) {
            line.remove_prefix(1);
        }
        while (!line.empty() && (std::isspace(static_cast<unsigned char>(line.back())) != 0)) {
            line.remove_suffix(1);
        }
        if (line.empty() || line.front() == '#') continue;

        std::string lowered;
        for (char32_t cp : unicode::decode_utf8_lossy(line).text) {
            unicode::append_utf8(lowered, unicode::to_lower(cp));
        }
        set.words_.insert(std::move(lowered));
    }
    return set;
}

const StopwordSet& StopwordSet::bundled_default() {
    static const StopwordSet set = parse(detail::default_stopword_text(), "bundled-default");
    return set;
}

StopwordSet StopwordSet::from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read stopword file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.string());
}

StopwordSet StopwordSet::from_words(const std::vector<std::string>& words) {
    StopwordSet set;
    set.source_ = "inline";
    for (const auto& word : words) {
        std::string lowered;
        for (char32_t cp : unicode::decode_utf8_lossy(word).text) {
            unicode::append_utf8(lowered, unicode::to_lower(cp));
        }
        if (!lowered.empty()) set.words_.insert(std::move(lowered));
    }
    return set;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char32_t cp : unicode::decode_utf8_lossy(text).text) {
        if (unicode::is_word_char(cp)) {
            unicode::append_utf8(current, unicode::to_lower(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordSet& stops) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (!stops.contains(token)) kept.push_back(token);
    }
    return kept;
}

PreprocessResult preprocess_corpus(const Corpus& corpus, const StopwordSet& stops) {
    PreprocessResult result;
    result.streams.reserve(corpus.size());
    for (const auto& doc : corpus.documents) {
        TokenStream stream;
        stream.doc_id = doc.id;
        stream.tokens = remove_stopwords(tokenize(doc.raw_text), stops);
        if (stream.tokens.empty()) {
            result.warnings.push_back("document '" + doc.id +
                                      "' has no tokens after preprocessing");
        }
        result.streams.push_back(std::move(stream));
    }
    return result;
}

}  // namespace plagdetect
