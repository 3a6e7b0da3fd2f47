#include "grapheme/eval.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "grapheme/predictor.hpp"

namespace grapheme::eval {

namespace {

void bucket(EvalReport& report, int predicted, int reference) {
    const int diff = predicted - reference;
    if (diff == 0) {
        ++report.count_correct;
    } else if (diff == 1) {
        ++report.plus_one;
    } else if (diff == -1) {
        ++report.minus_one;
    } else {
        ++report.off_by_more;
    }
}

}  // namespace

double EvalReport::pct(int count) const {
    if (n == 0) return 0.0;
    return std::round(10000.0 * count / n) / 100.0;
}

EvalReport evaluate_fis(const std::vector<corpus::AnnotatedWord>& corpus,
                        const fuzzy::InferenceEngine& engine,
                        const seg::GraphemeInventory& inventory) {
    EvalReport report;
    report.method = "fis";
    report.n = static_cast<int>(corpus.size());
    for (const corpus::AnnotatedWord& word : corpus) {
        const int reference = static_cast<int>(word.graphemes.size());
        const int predicted = predictor::predict_count(engine, word.surface).rounded;
        bucket(report, predicted, reference);
        if (predicted != reference) continue;
        try {
            const seg::Segmentation mapped = seg::segment(word.surface, predicted, inventory);
            if (mapped.exact_count_match && mapped.graphemes == word.graphemes)
                ++report.exact_mapping_correct;
        } catch (const UnsegmentableWord&) {
            // counts as an incorrect mapping
        }
    }
    return report;
}

EvalReport evaluate_ipa(const std::vector<corpus::AnnotatedWord>& corpus,
                        const ipa::PronunciationDict& dict, const ipa::PhonemeInventory& phonemes,
                        const ipa::CorrespondenceTable& table) {
    EvalReport report;
    report.method = "ipa";
    report.n = static_cast<int>(corpus.size());
    for (const corpus::AnnotatedWord& word : corpus) {
        const int reference = static_cast<int>(word.graphemes.size());
        const auto transcription = dict.find(word.surface);
        if (!transcription) {
            ++report.off_by_more;
            ++report.not_in_dictionary;
            continue;
        }
        std::vector<std::string> parsed;
        try {
            parsed = ipa::parse_phonemes(*transcription, phonemes);
        } catch (const UnparsableIPA&) {
            ++report.off_by_more;
            continue;
        }
        const int predicted = static_cast<int>(parsed.size());
        bucket(report, predicted, reference);
        if (predicted != reference) continue;
        try {
            const seg::Segmentation mapped = ipa::map_to_graphemes(word.surface, parsed, table);
            if (mapped.graphemes == word.graphemes) ++report.exact_mapping_correct;
        } catch (const MappingFailed&) {
            // counts as an incorrect mapping
        }
    }
    return report;
}

std::string format_plain(const EvalReport& report) {
    std::ostringstream out;
    char buf[96];
    auto row = [&](const char* label, int count) {
        std::snprintf(buf, sizeof(buf), "%s\t%d\t%.2f%%\n", label, count, report.pct(count));
        out << buf;
    };
    out << "Method\t" << report.method << '\n';
    out << "Words\t" << report.n << '\n';
    row("Correct Result", report.count_correct);
    row("One Greater Than Expected", report.plus_one);
    row("One Lower Than Expected", report.minus_one);
    row("Prediction Wrong By More Than 1", report.off_by_more);
    if (report.method == "ipa") row("Not In Dictionary", report.not_in_dictionary);
    row("Within +/- 1", report.within_one());
    row("Exact Mapping", report.exact_mapping_correct);
    return out.str();
}

nlohmann::json to_json(const EvalReport& report) {
    return nlohmann::json{{"method", report.method},
                          {"n", report.n},
                          {"count_correct", report.count_correct},
                          {"plus_one", report.plus_one},
                          {"minus_one", report.minus_one},
                          {"off_by_more", report.off_by_more},
                          {"not_in_dictionary", report.not_in_dictionary},
                          {"exact_mapping_correct", report.exact_mapping_correct},
                          {"within_one", report.within_one()},
                          {"pct_correct", report.pct(report.count_correct)},
                          {"pct_plus_one", report.pct(report.plus_one)},
                          {"pct_minus_one", report.pct(report.minus_one)},
                          {"pct_off_by_more", report.pct(report.off_by_more)},
                          {"pct_not_in_dictionary", report.pct(report.not_in_dictionary)},
                          {"pct_within_one", report.pct(report.within_one())},
                          {"pct_exact_mapping", report.pct(report.exact_mapping_correct)}};
}

}  // namespace grapheme::eval
