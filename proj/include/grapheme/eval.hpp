#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "grapheme/corpus.hpp"
#include "grapheme/fuzzy.hpp"
#include "grapheme/ipa.hpp"
#include "grapheme/segmenter.hpp"

namespace grapheme::eval {

/// Count-accuracy buckets plus the exact-mapping score for one method over
/// one corpus. The four buckets partition the corpus; for the IPA method,
/// dictionary misses sit inside off_by_more and are additionally broken out
/// as not_in_dictionary.
struct EvalReport {
    std::string method;  // "fis" | "ipa"
    int n = 0;
    int count_correct = 0;
    int plus_one = 0;        // predicted one greater than the reference
    int minus_one = 0;       // predicted one lower than the reference
    int off_by_more = 0;
    int not_in_dictionary = 0;
    int exact_mapping_correct = 0;  // counts matched and every grapheme matched

    int within_one() const { return count_correct + plus_one + minus_one; }
    /// Percentage of n, rounded to two decimals.
    double pct(int count) const;
};

EvalReport evaluate_fis(const std::vector<corpus::AnnotatedWord>& corpus,
                        const fuzzy::InferenceEngine& engine,
                        const seg::GraphemeInventory& inventory);

EvalReport evaluate_ipa(const std::vector<corpus::AnnotatedWord>& corpus,
                        const ipa::PronunciationDict& dict, const ipa::PhonemeInventory& phonemes,
                        const ipa::CorrespondenceTable& table);

/// Plain report: one `label<TAB>count<TAB>percent` row per bucket.
std::string format_plain(const EvalReport& report);

nlohmann::json to_json(const EvalReport& report);

}  // namespace grapheme::eval
