#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grapheme/errors.hpp"

namespace grapheme::corpus {

/// A lowercase word together with its reference grapheme segmentation.
/// The graphemes concatenate to the surface; each one is 1-4 characters.
struct AnnotatedWord {
    std::string surface;
    std::vector<std::string> graphemes;

    bool operator==(const AnnotatedWord&) const = default;
};

struct FeatureVector {
    int char_count = 0;
    int vowel_count = 0;
    int consonant_count = 0;

    bool operator==(const FeatureVector&) const = default;
};

/// Vowels are a/e/i/o/u; y counts as a consonant.
bool is_vowel(char c);

/// Character, vowel and consonant counts of a lowercase [a-z] word.
/// Throws InvalidWord (naming the character and position) on anything else.
FeatureVector extract_features(std::string_view surface);

/// Reads the corpus file format: one `<surface>\t<g1>|<g2>|...` entry per
/// line, `#` comments and blank lines ignored, input lowercased on ingest.
/// Throws ParseError with the offending line number.
std::vector<AnnotatedWord> parse_corpus(std::istream& in);
std::vector<AnnotatedWord> parse_corpus_file(const std::string& path);

/// Inverse of parse_corpus for valid word lists.
void serialize_corpus(const std::vector<AnnotatedWord>& corpus, std::ostream& out);

struct FeatureStats {
    double mean = 0.0;
    double sigma = 0.0;  // population standard deviation (divide by n)
};

struct CountRow {
    int n = 0;
    FeatureStats characters;
    FeatureStats vowels;
    FeatureStats consonants;

    /// Rows backed by a single sample (or any zero sigma) cannot seed a
    /// Gaussian membership function.
    bool gaussian_usable() const {
        return n >= 2 && characters.sigma > 0.0 && vowels.sigma > 0.0 && consonants.sigma > 0.0;
    }
};

/// Per-grapheme-count feature means and population standard deviations.
struct GraphemeCountStats {
    std::map<int, CountRow> rows;  // keyed by grapheme count
};

/// Means and population sigmas of characters/vowels/consonants grouped by
/// the reference grapheme count. Throws ConfigError on an empty corpus.
GraphemeCountStats compute_stats(const std::vector<AnnotatedWord>& corpus);

/// P(grapheme count | word length): for each word length the entries sum to 1.
std::map<int, std::map<int, double>> frequency_table(const std::vector<AnnotatedWord>& corpus);

/// TSV with header `grapheme_count n char_mean char_sigma vowel_mean
/// vowel_sigma cons_mean cons_sigma`, values to 3 decimal places.
std::string format_stats_tsv(const GraphemeCountStats& stats);

/// TSV with header `word_length grapheme_count probability`.
std::string format_frequency_tsv(const std::map<int, std::map<int, double>>& table);

}  // namespace grapheme::corpus
