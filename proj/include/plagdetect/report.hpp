#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plagdetect/calibrate.hpp"

namespace plagdetect {

enum class OutputFormat { Csv, Json, Text };
const char* to_string(OutputFormat f);
OutputFormat format_from_string(const std::string& s);

/// One full analysis run; mirrors the CLI flags (and their env overrides).
struct RunConfig {
    std::filesystem::path corpus_dir;
    std::optional<std::filesystem::path> calibration_dir;
    std::optional<std::filesystem::path> calibration_file;  // saved `calibrate` JSON
    std::optional<double> fixed_threshold_pct;              // bypasses calibration
    std::vector<int> ngram_orders = {1, 2, 3};
    std::vector<Measure> measures = {Measure::Cosine, Measure::Jaccard};
    std::optional<std::filesystem::path> stopword_file;
    SdFlavor sd_flavor = SdFlavor::Population;
    double complete_cutoff_pct = 99.5;
    LogBase log_base = LogBase::Natural;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::filesystem::path> output_path;
    std::string glob = "*.txt";
    bool recursive = false;
    bool timing = false;
    bool jaccard_any_order = false;  // lift the jaccard-implies-trigram rule
    std::optional<std::string> vocab_dump_prefix;
};

/// "unigram-cosine", "bigram-cosine", ... "trigram-jaccard".
std::string config_label(int n, Measure measure);

/// The (n, measure) pairs a config expands to, sorted by (n, measure).
/// Jaccard pairs only with n=3 unless jaccard_any_order is set; requesting
/// jaccard without order 3 (and without the override) is a config error.
std::vector<std::pair<int, Measure>> expand_configurations(const RunConfig& config);

struct ReportRow {
    std::string doc_a;
    std::string doc_b;
    int n = 1;
    Measure measure = Measure::Cosine;
    double pct = 0.0;     // raw, unrounded
    int pct_rounded = 0;  // half-up, reporting only
    std::optional<Verdict> verdict;  // empty when no threshold source was given
    std::vector<std::string> flags;
};

struct TimingRecord {
    int n = 0;  // 0 for corpus-wide phases
    std::optional<Measure> measure;
    std::string phase;  // preprocess | model | pairwise
    double seconds = 0.0;
};

/// Runs `work` and returns its wall-clock duration as a TimingRecord.
TimingRecord time_phase(std::string phase, int n, std::optional<Measure> measure,
                        const std::function<void()>& work);

/// Per-document maxima side by side across configurations.
struct MethodComparison {
    std::vector<std::string> labels;
    std::vector<std::string> doc_ids;
    std::vector<std::vector<double>> max_pct;  // [doc][configuration]
};

/// Requires >= 2 matrices over the same document list.
MethodComparison compare_methods(const std::vector<SimilarityMatrix>& matrices);

struct AnalysisResult {
    std::vector<std::string> doc_ids;
    std::vector<SimilarityMatrix> matrices;               // one per configuration
    std::vector<std::optional<double>> thresholds_pct;    // aligned with matrices
    std::vector<CalibrationResult> calibrations;          // empty without calibration
    std::vector<ReportRow> rows;                          // sorted (doc_a, doc_b, n, measure)
    std::vector<std::vector<DocumentMax>> per_doc_max;    // aligned with matrices
    std::optional<MethodComparison> comparison;           // set when >= 2 configurations
    std::vector<TimingRecord> timings;
    std::vector<std::string> warnings;
    int exit_code = 0;  // 0 clean, 1 at least one pair partial/complete
};

/// ingest -> preprocess -> model -> similarity -> (calibration) ->
/// classification for every requested configuration. Throws Error on any
/// operational failure (the CLI maps that to exit code 2).
AnalysisResult run_analysis(const RunConfig& config);

/// Calibration-only pipeline behind the `calibrate` subcommand: thresholds
/// for every requested configuration from a known-original corpus.
std::vector<CalibrationResult> run_calibration(const RunConfig& config,
                                               const std::filesystem::path& dir);

std::string render_csv(const AnalysisResult& result);
std::string render_json(const AnalysisResult& result, const RunConfig& config);
std::string render_text(const AnalysisResult& result, const RunConfig& config);
std::string render_report(const AnalysisResult& result, const RunConfig& config);
std::string render_timings_text(const std::vector<TimingRecord>& timings);

/// JSON document emitted by `calibrate` and accepted back via calibration_file.
std::string render_calibration_json(const std::vector<CalibrationResult>& results,
                                    const RunConfig& config,
                                    const std::filesystem::path& dir);

/// Writes the rendered report to config.output_path or to `fallback`.
void emit_report(const std::string& rendered, const RunConfig& config,
                 std::ostream& fallback);

}  // namespace plagdetect
