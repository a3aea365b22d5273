#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "plagdetect/similarity.hpp"

namespace plagdetect {

/// Standard deviation flavor used by the threshold formula. Population is the
/// default; both are offered because printed reference tables cannot settle
/// which one produced them.
enum class SdFlavor { Population, Sample };

const char* to_string(SdFlavor f);
SdFlavor sd_flavor_from_string(const std::string& s);  // "population" | "sample"

/// Half-up integer rounding, applied only at reporting boundaries.
int round_half_up(double pct);

/// Detection threshold derived from a known-original corpus:
/// threshold = max pairwise percentage + 4 * standard deviation.
struct CalibrationResult {
    int n = 0;
    Measure measure = Measure::Cosine;
    double max_pct = 0.0;
    double sd_pct = 0.0;
    double threshold_pct = 0.0;
    SdFlavor sd_flavor = SdFlavor::Population;
    std::size_t pair_count = 0;
};

/// Requires at least three pairwise percentages (i.e. >= 3 calibration
/// documents); fewer throws "calibration corpus too small".
CalibrationResult compute_threshold(const std::vector<double>& pairwise_pcts,
                                    SdFlavor flavor);

nlohmann::ordered_json calibration_to_json(const CalibrationResult& result);
CalibrationResult calibration_from_json(const nlohmann::json& j);

enum class Verdict { None, Partial, Complete };
const char* to_string(Verdict v);

/// pct < threshold -> none; threshold <= pct < cutoff -> partial (the lower
/// bound is inclusive, erring toward flagging); pct >= cutoff -> complete.
/// threshold > cutoff is a configuration error.
Verdict classify_pair(double pct, double threshold_pct, double complete_cutoff_pct);

/// Largest off-diagonal percentage of one document and the partner attaining
/// it; ties break toward the lexicographically smallest partner id.
struct DocumentMax {
    std::string doc_id;
    std::string partner_id;
    double pct = 0.0;
};

std::vector<DocumentMax> max_per_document(const SimilarityMatrix& matrix);

}  // namespace plagdetect
