#include "grapheme/predictor.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace grapheme::predictor {

namespace {

constexpr int kEdgeLow = 1;    // Z-shaped set
constexpr int kEdgeHigh = 14;  // S-shaped set
constexpr int kGaussLow = 2;
constexpr int kGaussHigh = 12;

const char* const kFeatureNames[3] = {"characters", "vowels", "consonants"};

const FeatureParams& feature_of(const ParamRow& row, int feature) {
    switch (feature) {
        case 0: return row.characters;
        case 1: return row.vowels;
        default: return row.consonants;
    }
}

const ParamRow& row_of(const PredictorParams& params, int g) {
    auto it = params.rows.find(g);
    if (it == params.rows.end())
        throw ConfigError("parameter table has no row for grapheme count " + std::to_string(g));
    return it->second;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            parts.push_back(line.substr(start));
            return parts;
        }
        parts.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_number(const std::string& field, std::size_t lineno) {
    try {
        std::size_t used = 0;
        const double value = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return value;
    } catch (const std::exception&) {
        throw ParseError(lineno, "expected a number, got \"" + field + "\"");
    }
}

}  // namespace

PredictorParams load_params(std::istream& in) {
    PredictorParams params;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        const auto fields = split_tabs(line);
        if (!fields.empty() && fields[0] == "g") continue;  // header
        if (fields.size() != 7)
            throw ParseError(lineno, "expected 7 tab-separated fields, got " +
                                         std::to_string(fields.size()));

        const int g = static_cast<int>(parse_number(fields[0], lineno));
        if (g < 1) throw ParseError(lineno, "grapheme count must be >= 1");
        if (params.rows.count(g))
            throw ParseError(lineno, "duplicate row for grapheme count " + std::to_string(g));

        ParamRow row;
        row.characters = {parse_number(fields[1], lineno), parse_number(fields[2], lineno)};
        row.vowels = {parse_number(fields[3], lineno), parse_number(fields[4], lineno)};
        row.consonants = {parse_number(fields[5], lineno), parse_number(fields[6], lineno)};
        params.rows[g] = row;
    }
    return params;
}

PredictorParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open parameter file: " + path);
    return load_params(in);
}

PredictorParams params_from_stats(const corpus::GraphemeCountStats& stats) {
    PredictorParams params;
    for (const auto& [g, row] : stats.rows) {
        ParamRow out;
        out.characters = {row.characters.mean, row.characters.sigma};
        out.vowels = {row.vowels.mean, row.vowels.sigma};
        out.consonants = {row.consonants.mean, row.consonants.sigma};
        params.rows[g] = out;
    }
    return params;
}

std::string format_params_tsv(const PredictorParams& params) {
    std::ostringstream out;
    out << "g\tchar_mean\tchar_sigma\tvowel_mean\tvowel_sigma\tcons_mean\tcons_sigma\n";
    char buf[256];
    for (const auto& [g, row] : params.rows) {
        std::snprintf(buf, sizeof(buf), "%d\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\n", g,
                      row.characters.mean, row.characters.sigma, row.vowels.mean, row.vowels.sigma,
                      row.consonants.mean, row.consonants.sigma);
        out << buf;
    }
    return out.str();
}

fuzzy::InferenceEngine build_fis(const PredictorParams& params) {
    const ParamRow& low = row_of(params, kEdgeLow);
    const ParamRow& next = row_of(params, kEdgeLow + 1);
    const ParamRow& last_gauss = row_of(params, kGaussHigh);
    const ParamRow& high = row_of(params, kEdgeHigh);

    // Observed feature domains; membership evaluation itself is total.
    const double feature_hi[3] = {feature_of(high, 0).mean, feature_of(high, 1).mean,
                                  feature_of(high, 2).mean};

    std::vector<fuzzy::LinguisticVariable> inputs;
    for (int f = 0; f < 3; ++f) {
        std::vector<fuzzy::LinguisticVariable::Set> sets;
        sets.emplace_back("1", fuzzy::ZShaped{feature_of(low, f).mean, feature_of(next, f).mean});
        for (int g = kGaussLow; g <= kGaussHigh; ++g) {
            const FeatureParams& fp = feature_of(row_of(params, g), f);
            if (fp.sigma <= 0.0)
                throw ConfigError(std::string("row ") + std::to_string(g) + " has sigma 0 for " +
                                  kFeatureNames[f] + "; cannot build a Gaussian set");
            sets.emplace_back(std::to_string(g), fuzzy::Gaussian{fp.mean, fp.sigma});
        }
        const FeatureParams& lg = feature_of(last_gauss, f);
        sets.emplace_back("14", fuzzy::SShaped{lg.mean + lg.sigma, feature_of(high, f).mean});
        inputs.emplace_back(kFeatureNames[f], 0.0, feature_hi[f], std::move(sets));
    }

    std::vector<fuzzy::LinguisticVariable::Set> output_sets;
    std::vector<fuzzy::FuzzyRule> rules;
    for (int g = 1; g <= kEdgeHigh; ++g) {
        if (g == 13) continue;
        const std::string label = std::to_string(g);
        output_sets.emplace_back(label, fuzzy::Triangular{g - 0.5, static_cast<double>(g), g + 0.499});
        fuzzy::FuzzyRule rule;
        for (const char* feature : kFeatureNames) rule.antecedents.push_back({feature, label});
        rule.output_variable = "graphemes";
        rule.output_label = label;
        rules.push_back(std::move(rule));
    }

    fuzzy::LinguisticVariable output("graphemes", params.output_lo, params.output_hi,
                                     std::move(output_sets));
    return fuzzy::InferenceEngine(std::move(inputs), std::move(output), std::move(rules),
                                  params.defuzz_step);
}

int round_half_up(double value) { return static_cast<int>(std::floor(value + 0.5)); }

CountPrediction predict_features(const fuzzy::InferenceEngine& engine,
                                 const corpus::FeatureVector& features) {
    const double raw = engine.infer({{"characters", static_cast<double>(features.char_count)},
                                     {"vowels", static_cast<double>(features.vowel_count)},
                                     {"consonants", static_cast<double>(features.consonant_count)}});
    CountPrediction prediction;
    prediction.crisp = std::round(raw * 100.0) / 100.0;  // reported precision is two decimals
    prediction.rounded = round_half_up(prediction.crisp);
    return prediction;
}

CountPrediction predict_count(const fuzzy::InferenceEngine& engine, std::string_view word) {
    return predict_features(engine, corpus::extract_features(word));
}

}  // namespace grapheme::predictor
