#include "plagdetect/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "plagdetect/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace plagdetect {

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Text: return "text";
    }
    return "csv";
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    if (s == "text") return OutputFormat::Text;
    throw ConfigError("unknown output format '" + s + "' (expected csv, json or text)");
}

std::string config_label(int n, Measure measure) {
    const char* gram = n == 1 ? "unigram" : n == 2 ? "bigram" : "trigram";
    return std::string(gram) + "-" + to_string(measure);
}

std::vector<std::pair<int, Measure>> expand_configurations(const RunConfig& config) {
    if (config.ngram_orders.empty()) {
        throw ConfigError("no n-gram orders requested");
    }
    if (config.measures.empty()) {
        throw ConfigError("no similarity measures requested");
    }
    std::vector<int> orders = config.ngram_orders;
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    for (int n : orders) {
        if (n < 1 || n > 3) {
            throw ConfigError("n-gram order must be 1, 2 or 3, got " + std::to_string(n));
        }
    }
    const bool want_cosine = std::count(config.measures.begin(), config.measures.end(),
                                        Measure::Cosine) > 0;
    const bool want_jaccard = std::count(config.measures.begin(), config.measures.end(),
                                         Measure::Jaccard) > 0;
    const bool has_trigram = std::count(orders.begin(), orders.end(), 3) > 0;
    if (want_jaccard && !has_trigram && !config.jaccard_any_order) {
        throw ConfigError(
            "jaccard is defined over trigrams: add 3 to --ngram or pass --jaccard-any-n");
    }

    std::vector<std::pair<int, Measure>> configs;
    for (int n : orders) {
        if (want_cosine) configs.emplace_back(n, Measure::Cosine);
        if (want_jaccard && (n == 3 || config.jaccard_any_order)) {
            configs.emplace_back(n, Measure::Jaccard);
        }
    }
    return configs;
}

TimingRecord time_phase(std::string phase, int n, std::optional<Measure> measure,
                        const std::function<void()>& work) {
    TimingRecord record;
    record.n = n;
    record.measure = measure;
    record.phase = std::move(phase);
    const auto start = std::chrono::steady_clock::now();
    work();
    record.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

MethodComparison compare_methods(const std::vector<SimilarityMatrix>& matrices) {
    if (matrices.size() < 2) {
        throw Error("need >= 2 configurations to compare methods, got " +
                    std::to_string(matrices.size()));
    }
    for (const auto& mat : matrices) {
        if (mat.doc_ids != matrices.front().doc_ids) {
            throw Error("method comparison requires matrices over the same corpus");
        }
    }
    MethodComparison cmp;
    cmp.doc_ids = matrices.front().doc_ids;
    cmp.max_pct.assign(cmp.doc_ids.size(), std::vector<double>(matrices.size(), 0.0));
    for (std::size_t c = 0; c < matrices.size(); ++c) {
        cmp.labels.push_back(config_label(matrices[c].n, matrices[c].measure));
        const auto maxima = max_per_document(matrices[c]);
        for (std::size_t d = 0; d < maxima.size(); ++d) {
            cmp.max_pct[d][c] = maxima[d].pct;
        }
    }
    return cmp;
}

namespace {

void validate_config(const RunConfig& config) {
    if (config.complete_cutoff_pct < 0.0 || config.complete_cutoff_pct > 100.0) {
        throw ConfigError("complete cutoff must be within [0, 100]");
    }
    if (config.fixed_threshold_pct &&
        *config.fixed_threshold_pct > config.complete_cutoff_pct) {
        throw ConfigError("threshold " + std::to_string(*config.fixed_threshold_pct) +
                          " exceeds the complete-copy cutoff " +
                          std::to_string(config.complete_cutoff_pct));
    }
    int sources = 0;
    if (config.fixed_threshold_pct) ++sources;
    if (config.calibration_dir) ++sources;
    if (config.calibration_file) ++sources;
    if (sources > 1) {
        throw ConfigError("pick one threshold source: --threshold, --calibrate or "
                          "--calibration-file");
    }
}

StopwordSet load_stopwords(const RunConfig& config) {
    if (config.stopword_file) return StopwordSet::from_file(*config.stopword_file);
    return StopwordSet::bundled_default();
}

std::vector<double> pair_percentages(const SimilarityMatrix& mat) {
    std::vector<double> pcts;
    pcts.reserve(mat.size() * (mat.size() - 1) / 2);
    for (std::size_t i = 0; i < mat.size(); ++i) {
        for (std::size_t j = i + 1; j < mat.size(); ++j) {
            pcts.push_back(mat.percentage(i, j));
        }
    }
    return pcts;
}

std::vector<CalibrationResult> calibrate_streams(
    const std::vector<TokenStream>& streams,
    const std::vector<std::pair<int, Measure>>& configs, SdFlavor flavor, LogBase base) {
    std::vector<CalibrationResult> results;
    results.reserve(configs.size());
    for (const auto& [n, measure] : configs) {
        const SimilarityMatrix mat = pairwise_matrix(streams, n, measure, base);
        CalibrationResult result = compute_threshold(pair_percentages(mat), flavor);
        result.n = n;
        result.measure = measure;
        results.push_back(result);
    }
    return results;
}

std::vector<CalibrationResult> load_calibration_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read calibration file: " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("invalid calibration file " + path.string() + ": " + e.what());
    }
    std::vector<CalibrationResult> results;
    try {
        for (const auto& entry : doc.at("results")) {
            results.push_back(calibration_from_json(entry));
        }
    } catch (const json::exception& e) {
        throw Error("invalid calibration file " + path.string() + ": " + e.what());
    }
    return results;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

std::string format_pct(double pct, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, pct);
    return buf;
}

ordered_json config_echo(const RunConfig& config) {
    ordered_json echo;
    echo["corpus_dir"] = config.corpus_dir.string();
    echo["glob"] = config.glob;
    echo["recursive"] = config.recursive;
    ordered_json orders = ordered_json::array();
    for (int n : config.ngram_orders) orders.push_back(n);
    echo["ngram_orders"] = orders;
    ordered_json measures = ordered_json::array();
    for (Measure m : config.measures) measures.push_back(to_string(m));
    echo["measures"] = measures;
    echo["stopwords"] =
        config.stopword_file ? config.stopword_file->string() : "bundled-default";
    echo["sd_flavor"] = to_string(config.sd_flavor);
    echo["complete_cutoff_pct"] = config.complete_cutoff_pct;
    echo["log_base"] = to_string(config.log_base);
    if (config.fixed_threshold_pct) {
        echo["threshold_source"] = "fixed";
        echo["threshold_pct"] = *config.fixed_threshold_pct;
    } else if (config.calibration_dir) {
        echo["threshold_source"] = "calibration-dir";
        echo["calibration_dir"] = config.calibration_dir->string();
    } else if (config.calibration_file) {
        echo["threshold_source"] = "calibration-file";
        echo["calibration_file"] = config.calibration_file->string();
    } else {
        echo["threshold_source"] = "none";
    }
    return echo;
}

const char* verdict_mark(Verdict v) {
    switch (v) {
        case Verdict::Complete: return "√√";
        case Verdict::Partial: return "√";
        case Verdict::None: return "";
    }
    return "";
}

}  // namespace

std::vector<CalibrationResult> run_calibration(const RunConfig& config,
                                               const fs::path& dir) {
    const auto configs = expand_configurations(config);
    const StopwordSet stops = load_stopwords(config);
    const Corpus corpus = scan_directory(dir, {config.glob, config.recursive});
    const PreprocessResult pre = preprocess_corpus(corpus, stops);
    return calibrate_streams(pre.streams, configs, config.sd_flavor, config.log_base);
}

AnalysisResult run_analysis(const RunConfig& config) {
    validate_config(config);
    const auto configs = expand_configurations(config);
    const StopwordSet stops = load_stopwords(config);

    AnalysisResult out;
    const Corpus corpus = scan_directory(config.corpus_dir, {config.glob, config.recursive});
    out.warnings = corpus.warnings;
    out.doc_ids = corpus.ids();

    PreprocessResult pre;
    out.timings.push_back(time_phase("preprocess", 0, std::nullopt,
                                     [&] { pre = preprocess_corpus(corpus, stops); }));
    out.warnings.insert(out.warnings.end(), pre.warnings.begin(), pre.warnings.end());

    // Threshold source: fixed value, saved calibration, or calibration corpus.
    out.thresholds_pct.assign(configs.size(), std::nullopt);
    if (config.fixed_threshold_pct) {
        std::fill(out.thresholds_pct.begin(), out.thresholds_pct.end(),
                  config.fixed_threshold_pct);
    } else if (config.calibration_file) {
        out.calibrations = load_calibration_file(*config.calibration_file);
    } else if (config.calibration_dir) {
        const PreprocessResult calib_pre = preprocess_corpus(
            scan_directory(*config.calibration_dir, {config.glob, config.recursive}), stops);
        out.calibrations =
            calibrate_streams(calib_pre.streams, configs, config.sd_flavor, config.log_base);
    }
    if (!out.calibrations.empty()) {
        for (std::size_t c = 0; c < configs.size(); ++c) {
            const auto it = std::find_if(
                out.calibrations.begin(), out.calibrations.end(), [&](const auto& r) {
                    return r.n == configs[c].first && r.measure == configs[c].second;
                });
            if (it == out.calibrations.end()) {
                throw Error("no calibration entry for configuration " +
                            config_label(configs[c].first, configs[c].second));
            }
            if (it->threshold_pct > config.complete_cutoff_pct) {
                throw ConfigError("calibrated threshold " +
                                  std::to_string(it->threshold_pct) + " for " +
                                  config_label(it->n, it->measure) +
                                  " exceeds the complete-copy cutoff");
            }
            out.thresholds_pct[c] = it->threshold_pct;
        }
    }

    for (const auto& [n, measure] : configs) {
        SimilarityMatrix mat;
        if (measure == Measure::Cosine) {
            CorpusModel model;
            out.timings.push_back(time_phase(
                "model", n, measure, [&] { model = build_corpus_model(pre.streams, n); }));
            out.timings.push_back(time_phase(
                "pairwise", n, measure, [&] { mat = pairwise_cosine(model, config.log_base); }));
        } else {
            std::vector<NGramSet> sets;
            std::vector<std::string> ids;
            out.timings.push_back(time_phase("model", n, measure, [&] {
                sets.reserve(pre.streams.size());
                for (const auto& stream : pre.streams) {
                    ids.push_back(stream.doc_id);
                    sets.push_back(ngram_set(stream, n));
                }
            }));
            out.timings.push_back(time_phase(
                "pairwise", n, measure, [&] { mat = pairwise_jaccard(ids, sets, n); }));
        }
        out.matrices.push_back(std::move(mat));
    }

    for (std::size_t c = 0; c < out.matrices.size(); ++c) {
        const SimilarityMatrix& mat = out.matrices[c];
        out.per_doc_max.push_back(max_per_document(mat));
        for (std::size_t i = 0; i < mat.size(); ++i) {
            for (std::size_t j = i + 1; j < mat.size(); ++j) {
                ReportRow row;
                row.doc_a = mat.doc_ids[i];
                row.doc_b = mat.doc_ids[j];
                row.n = mat.n;
                row.measure = mat.measure;
                row.pct = mat.percentage(i, j);
                row.pct_rounded = round_half_up(row.pct);
                if (mat.is_undefined(i, j)) {
                    row.flags.push_back("undefined: empty document");
                }
                if (out.thresholds_pct[c]) {
                    row.verdict = classify_pair(row.pct, *out.thresholds_pct[c],
                                                config.complete_cutoff_pct);
                    if (*row.verdict != Verdict::None) out.exit_code = 1;
                }
                out.rows.push_back(std::move(row));
            }
        }
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.doc_a, a.doc_b, a.n) < std::tie(b.doc_a, b.doc_b, b.n) ||
               (std::tie(a.doc_a, a.doc_b, a.n) == std::tie(b.doc_a, b.doc_b, b.n) &&
                std::string_view(to_string(a.measure)) < to_string(b.measure));
    });

    if (out.matrices.size() >= 2) {
        out.comparison = compare_methods(out.matrices);
    }

    if (config.vocab_dump_prefix) {
        std::vector<int> dumped;
        for (const auto& [n, measure] : configs) {
            if (std::count(dumped.begin(), dumped.end(), n) > 0) continue;
            dumped.push_back(n);
            const CorpusModel model = build_corpus_model(pre.streams, n);
            const std::string path = *config.vocab_dump_prefix + "-" +
                                     (n == 1 ? "unigram" : n == 2 ? "bigram" : "trigram") +
                                     ".csv";
            std::ofstream vocab_out(path);
            if (!vocab_out) throw Error("cannot write vocabulary dump: " + path);
            dump_vocabulary_csv(model, vocab_out);
        }
    }
    return out;
}

std::string render_csv(const AnalysisResult& result) {
    std::string csv = "doc_a,doc_b,n,measure,similarity_pct,verdict\n";
    for (const auto& row : result.rows) {
        csv += csv_field(row.doc_a);
        csv.push_back(',');
        csv += csv_field(row.doc_b);
        csv.push_back(',');
        csv += std::to_string(row.n);
        csv.push_back(',');
        csv += to_string(row.measure);
        csv.push_back(',');
        csv += format_pct(row.pct, 4);
        csv.push_back(',');
        if (row.verdict) csv += to_string(*row.verdict);
        csv.push_back('\n');
    }
    return csv;
}

std::string render_json(const AnalysisResult& result, const RunConfig& config) {
    ordered_json doc;
    doc["config"] = config_echo(config);
    doc["documents"] = result.doc_ids;

    ordered_json rows = ordered_json::array();
    for (const auto& row : result.rows) {
        ordered_json r;
        r["doc_a"] = row.doc_a;
        r["doc_b"] = row.doc_b;
        r["n"] = row.n;
        r["measure"] = to_string(row.measure);
        r["similarity_pct"] = row.pct;
        r["similarity_pct_rounded"] = row.pct_rounded;
        if (row.verdict) r["verdict"] = to_string(*row.verdict);
        else r["verdict"] = nullptr;
        r["flags"] = row.flags;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);

    ordered_json maxima = ordered_json::array();
    for (std::size_t c = 0; c < result.matrices.size(); ++c) {
        ordered_json entry;
        entry["configuration"] = config_label(result.matrices[c].n, result.matrices[c].measure);
        if (result.thresholds_pct[c]) entry["threshold_pct"] = *result.thresholds_pct[c];
        else entry["threshold_pct"] = nullptr;
        ordered_json docs = ordered_json::array();
        for (const auto& m : result.per_doc_max[c]) {
            docs.push_back(ordered_json{{"doc", m.doc_id},
                                        {"partner", m.partner_id},
                                        {"max_pct", m.pct},
                                        {"max_pct_rounded", round_half_up(m.pct)}});
        }
        entry["per_document_max"] = std::move(docs);
        maxima.push_back(std::move(entry));
    }
    doc["configurations"] = std::move(maxima);

    ordered_json calib = ordered_json::array();
    for (const auto& c : result.calibrations) calib.push_back(calibration_to_json(c));
    doc["calibration"] = std::move(calib);

    if (config.timing) {
        ordered_json timings = ordered_json::array();
        for (const auto& t : result.timings) {
            ordered_json rec;
            rec["n"] = t.n;
            if (t.measure) rec["measure"] = to_string(*t.measure);
            else rec["measure"] = nullptr;
            rec["phase"] = t.phase;
            rec["seconds"] = t.seconds;
            timings.push_back(std::move(rec));
        }
        doc["timings"] = std::move(timings);
    }
    doc["warnings"] = result.warnings;
    return doc.dump(2) + "\n";
}

std::string render_text(const AnalysisResult& result, const RunConfig& config) {
    std::ostringstream out;
    out << "plagiarism analysis: " << config.corpus_dir.string() << " ("
        << result.doc_ids.size() << " documents)\n";

    out << "configurations:";
    for (const auto& mat : result.matrices) out << ' ' << config_label(mat.n, mat.measure);
    out << '\n';

    if (config.fixed_threshold_pct) {
        out << "threshold: fixed at " << format_pct(*config.fixed_threshold_pct, 2) << "%\n";
    } else if (!result.calibrations.empty()) {
        out << "thresholds (" << to_string(config.sd_flavor) << " SD):\n";
        for (const auto& c : result.calibrations) {
            out << "  " << std::left << std::setw(18) << config_label(c.n, c.measure)
                << " max " << std::right << std::setw(7) << format_pct(c.max_pct, 2)
                << "  sd " << std::setw(7) << format_pct(c.sd_pct, 2) << "  threshold "
                << std::setw(7) << format_pct(c.threshold_pct, 2) << " ("
                << round_half_up(c.threshold_pct) << ")\n";
        }
    } else {
        out << "threshold: none (similarity report only)\n";
    }
    out << '\n';

    out << "pairs (√√ complete copying, √ partial copying):\n";
    std::size_t id_width = 5;
    for (const auto& id : result.doc_ids) id_width = std::max(id_width, id.size());
    out << "  " << std::left << std::setw(static_cast<int>(id_width) + 2) << "doc_a"
        << std::setw(static_cast<int>(id_width) + 2) << "doc_b" << std::setw(18)
        << "configuration" << std::right << std::setw(9) << "pct" << "  verdict\n";
    for (const auto& row : result.rows) {
        out << "  " << std::left << std::setw(static_cast<int>(id_width) + 2) << row.doc_a
            << std::setw(static_cast<int>(id_width) + 2) << row.doc_b << std::setw(18)
            << config_label(row.n, row.measure) << std::right << std::setw(9)
            << format_pct(row.pct, 2);
        if (row.verdict) out << "  " << verdict_mark(*row.verdict);
        for (const auto& flag : row.flags) out << "  [" << flag << "]";
        out << '\n';
    }
    out << '\n';

    if (result.comparison) {
        const MethodComparison& cmp = *result.comparison;
        out << "per-document maximum similarity (rounded %):\n";
        out << "  " << std::left << std::setw(static_cast<int>(id_width) + 2) << "doc";
        for (const auto& label : cmp.labels) out << std::right << std::setw(17) << label;
        out << '\n';
        for (std::size_t d = 0; d < cmp.doc_ids.size(); ++d) {
            out << "  " << std::left << std::setw(static_cast<int>(id_width) + 2)
                << cmp.doc_ids[d];
            for (std::size_t c = 0; c < cmp.labels.size(); ++c) {
                out << std::right << std::setw(17) << round_half_up(cmp.max_pct[d][c]);
            }
            out << '\n';
        }
        out << '\n';
    }

    if (config.timing) {
        out << render_timings_text(result.timings);
    }
    if (!result.warnings.empty()) {
        out << "warnings:\n";
        for (const auto& w : result.warnings) out << "  - " << w << '\n';
    }
    return out.str();
}

std::string render_timings_text(const std::vector<TimingRecord>& timings) {
    std::ostringstream out;
    out << "timings:\n";
    for (const auto& t : timings) {
        std::string scope = t.n == 0 ? "corpus" : config_label(t.n, *t.measure);
        out << "  " << std::left << std::setw(18) << scope << std::setw(12) << t.phase
            << format_pct(t.seconds, 4) << " s\n";
    }
    return out.str();
}

std::string render_report(const AnalysisResult& result, const RunConfig& config) {
    switch (config.format) {
        case OutputFormat::Csv: return render_csv(result);
        case OutputFormat::Json: return render_json(result, config);
        case OutputFormat::Text: return render_text(result, config);
    }
    return render_csv(result);
}

std::string render_calibration_json(const std::vector<CalibrationResult>& results,
                                    const RunConfig& config, const fs::path& dir) {
    ordered_json doc;
    doc["calibration_dir"] = dir.string();
    doc["sd_flavor"] = to_string(config.sd_flavor);
    doc["log_base"] = to_string(config.log_base);
    doc["stopwords"] =
        config.stopword_file ? config.stopword_file->string() : "bundled-default";
    ordered_json entries = ordered_json::array();
    for (const auto& r : results) entries.push_back(calibration_to_json(r));
    doc["results"] = std::move(entries);
    return doc.dump(2) + "\n";
}

void emit_report(const std::string& rendered, const RunConfig& config,
                 std::ostream& fallback) {
    if (config.output_path) {
        std::ofstream out(*config.output_path, std::ios::binary);
        if (!out) {
            throw Error("cannot write report to " + config.output_path->string());
        }
        out << rendered;
        if (!out) {
            throw Error("I/O error while writing " + config.output_path->string());
        }
    } else {
        fallback << rendered;
    }
}

}  // namespace plagdetect
