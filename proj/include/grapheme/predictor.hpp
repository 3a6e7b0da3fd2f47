#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "grapheme/corpus.hpp"
#include "grapheme/fuzzy.hpp"

namespace grapheme::predictor {

struct FeatureParams {
    double mean = 0.0;
    double sigma = 0.0;
};

struct ParamRow {
    FeatureParams characters;
    FeatureParams vowels;
    FeatureParams consonants;
};

/// Parameters for the grapheme-count inference engine. Rows 2..12 become
/// Gaussian input sets per feature; rows 1 and 14 anchor the Z- and S-shaped
/// edge sets. Row 13 may be present but is never consulted.
struct PredictorParams {
    std::map<int, ParamRow> rows;
    double output_lo = 1.0;
    double output_hi = 14.0;
    double defuzz_step = fuzzy::InferenceEngine::kDefaultDefuzzStep;
};

/// Reads the bundled parameter TSV: header `g char_mean char_sigma vowel_mean
/// vowel_sigma cons_mean cons_sigma`, one row per grapheme count, `#`
/// comments allowed.
PredictorParams load_params(std::istream& in);
PredictorParams load_params_file(const std::string& path);

/// Carries corpus statistics over into predictor parameters unchanged.
PredictorParams params_from_stats(const corpus::GraphemeCountStats& stats);

/// Serializes a parameter table back to the TSV format load_params reads.
/// Values round-trip exactly.
std::string format_params_tsv(const PredictorParams& params);

/// Builds the three-input Mamdani engine:
///  - per feature, a Z-shaped set for count 1 (shoulder at the count-1 mean,
///    foot at the count-2 mean), Gaussians for counts 2..12, and an S-shaped
///    set for count 14 (foot at the count-12 mean plus one sigma, shoulder at
///    the count-14 mean);
///  - output sets triangular(g - 0.5, g, g + 0.499) over [1, 14];
///  - 13 rules `IF characters is g AND vowels is g AND consonants is g THEN
///    graphemes is g` for g in {1..12, 14}.
/// Throws ConfigError when a required row is missing or unusable.
fuzzy::InferenceEngine build_fis(const PredictorParams& params);

struct CountPrediction {
    double crisp = 0.0;  // in [1, 14], quantized to two decimal places
    int rounded = 0;     // round_half_up(crisp), in [1, 14]
};

int round_half_up(double value);

CountPrediction predict_features(const fuzzy::InferenceEngine& engine,
                                 const corpus::FeatureVector& features);

/// extract_features + predict_features. Propagates InvalidWord and, for
/// inputs outside the support of every rule, NoRuleFired.
CountPrediction predict_count(const fuzzy::InferenceEngine& engine, std::string_view word);

}  // namespace grapheme::predictor
