#include "plagdetect/calibrate.hpp"

#include <algorithm>
#include <cmath>

#include "plagdetect/error.hpp"

namespace plagdetect {

const char* to_string(SdFlavor f) {
    return f == SdFlavor::Population ? "population" : "sample";
}

SdFlavor sd_flavor_from_string(const std::string& s) {
    if (s == "population") return SdFlavor::Population;
    if (s == "sample") return SdFlavor::Sample;
    throw ConfigError("unknown sd flavor '" + s + "' (expected population or sample)");
}

int round_half_up(double pct) {
    return static_cast<int>(std::floor(pct + 0.5));
}

CalibrationResult compute_threshold(const std::vector<double>& pairwise_pcts,
                                    SdFlavor flavor) {
    if (pairwise_pcts.size() < 3) {
        throw Error("calibration corpus too small: need at least 3 pairwise scores (3 "
                    "documents), got " +
                    std::to_string(pairwise_pcts.size()));
    }
    const double max_pct = *std::max_element(pairwise_pcts.begin(), pairwise_pcts.end());

    double mean = 0.0;
    for (double pct : pairwise_pcts) mean += pct;
    mean /= static_cast<double>(pairwise_pcts.size());

    double sum_sq = 0.0;
    for (double pct : pairwise_pcts) sum_sq += (pct - mean) * (pct - mean);
    const double denom = flavor == SdFlavor::Population
                             ? static_cast<double>(pairwise_pcts.size())
                             : static_cast<double>(pairwise_pcts.size() - 1);
    const double sd = std::sqrt(sum_sq / denom);

    CalibrationResult result;
    result.max_pct = max_pct;
    result.sd_pct = sd;
    result.threshold_pct = max_pct + 4.0 * sd;
    result.sd_flavor = flavor;
    result.pair_count = pairwise_pcts.size();
    return result;
}

nlohmann::ordered_json calibration_to_json(const CalibrationResult& result) {
    return nlohmann::ordered_json{
        {"n", result.n},
        {"measure", to_string(result.measure)},
        {"max_pct", result.max_pct},
        {"sd_pct", result.sd_pct},
        {"threshold_pct", result.threshold_pct},
        {"threshold_pct_rounded", round_half_up(result.threshold_pct)},
        {"sd_flavor", to_string(result.sd_flavor)},
        {"pair_count", result.pair_count},
    };
}

CalibrationResult calibration_from_json(const nlohmann::json& j) {
    CalibrationResult result;
    result.n = j.at("n").get<int>();
    result.measure = measure_from_string(j.at("measure").get<std::string>());
    result.max_pct = j.at("max_pct").get<double>();
    result.sd_pct = j.at("sd_pct").get<double>();
    result.threshold_pct = j.at("threshold_pct").get<double>();
    result.sd_flavor = sd_flavor_from_string(j.at("sd_flavor").get<std::string>());
    result.pair_count = j.at("pair_count").get<std::size_t>();
    return result;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::None: return "none";
        case Verdict::Partial: return "partial";
        case Verdict::Complete: return "complete";
    }
    return "none";
}

Verdict classify_pair(double pct, double threshold_pct, double complete_cutoff_pct) {
    if (threshold_pct > complete_cutoff_pct) {
        throw ConfigError("threshold " + std::to_string(threshold_pct) +
                          " exceeds the complete-copy cutoff " +
                          std::to_string(complete_cutoff_pct));
    }
    if (pct >= complete_cutoff_pct) return Verdict::Complete;
    if (pct >= threshold_pct) return Verdict::Partial;
    return Verdict::None;
}

std::vector<DocumentMax> max_per_document(const SimilarityMatrix& matrix) {
    std::vector<DocumentMax> out;
    const std::size_t size = matrix.size();
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        DocumentMax best;
        best.doc_id = matrix.doc_ids[i];
        bool first = true;
        for (std::size_t j = 0; j < size; ++j) {
            if (j == i) continue;
            const double pct = matrix.percentage(i, j);
            if (first || pct > best.pct ||
                (pct == best.pct && matrix.doc_ids[j] < best.partner_id)) {
                best.pct = pct;
                best.partner_id = matrix.doc_ids[j];
                first = false;
            }
        }
        out.push_back(std::move(best));
    }
    return out;
}

}  // namespace plagdetect
