#include "grapheme/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace grapheme::corpus {

namespace {

constexpr std::size_t kMaxGraphemeLength = 4;

void lowercase(std::string& s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
}

bool all_lower_alpha(std::string_view s) {
    for (char c : s) {
        if (c < 'a' || c > 'z') return false;
    }
    return !s.empty();
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            return parts;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

FeatureStats stats_of(const std::vector<int>& samples) {
    FeatureStats out;
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (int v : samples) sum += v;
    out.mean = sum / n;
    double sq = 0.0;
    for (int v : samples) {
        const double d = v - out.mean;
        sq += d * d;
    }
    out.sigma = std::sqrt(sq / n);
    return out;
}

}  // namespace

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

FeatureVector extract_features(std::string_view surface) {
    if (surface.empty()) throw InvalidWord("empty word");
    FeatureVector fv;
    for (std::size_t i = 0; i < surface.size(); ++i) {
        const char c = surface[i];
        if (c < 'a' || c > 'z') throw InvalidWord(std::string(surface), c, i);
        ++fv.char_count;
        if (is_vowel(c)) {
            ++fv.vowel_count;
        } else {
            ++fv.consonant_count;
        }
    }
    return fv;
}

std::vector<AnnotatedWord> parse_corpus(std::istream& in) {
    std::vector<AnnotatedWord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(lineno, "expected <surface><TAB><g1>|<g2>|...");
        if (line.find('\t', tab + 1) != std::string::npos)
            throw ParseError(lineno, "unexpected extra tab");

        AnnotatedWord word;
        word.surface = line.substr(0, tab);
        std::string annotation = line.substr(tab + 1);
        lowercase(word.surface);
        lowercase(annotation);

        for (std::size_t i = 0; i < word.surface.size(); ++i) {
            const char c = word.surface[i];
            if (c < 'a' || c > 'z')
                throw ParseError(lineno, "illegal character '" + std::string(1, c) +
                                             "' at position " + std::to_string(i + 1));
        }
        if (word.surface.empty()) throw ParseError(lineno, "empty surface");

        word.graphemes = split(annotation, '|');
        std::string joined;
        for (const std::string& g : word.graphemes) {
            if (g.empty()) throw ParseError(lineno, "empty grapheme");
            if (g.size() > kMaxGraphemeLength)
                throw ParseError(lineno, "grapheme \"" + g + "\" longer than " +
                                             std::to_string(kMaxGraphemeLength) + " characters");
            if (!all_lower_alpha(g))
                throw ParseError(lineno, "grapheme \"" + g + "\" contains a non [a-z] character");
            joined += g;
        }
        if (joined != word.surface)
            throw ParseError(lineno, "graphemes \"" + joined + "\" do not concatenate to \"" +
                                         word.surface + "\"");
        out.push_back(std::move(word));
    }
    return out;
}

std::vector<AnnotatedWord> parse_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open corpus file: " + path);
    return parse_corpus(in);
}

void serialize_corpus(const std::vector<AnnotatedWord>& corpus, std::ostream& out) {
    for (const AnnotatedWord& word : corpus) {
        out << word.surface << '\t';
        for (std::size_t i = 0; i < word.graphemes.size(); ++i) {
            if (i > 0) out << '|';
            out << word.graphemes[i];
        }
        out << '\n';
    }
}

GraphemeCountStats compute_stats(const std::vector<AnnotatedWord>& corpus) {
    if (corpus.empty()) throw ConfigError("cannot compute statistics of an empty corpus");

    std::map<int, std::vector<FeatureVector>> groups;
    for (const AnnotatedWord& word : corpus) {
        groups[static_cast<int>(word.graphemes.size())].push_back(extract_features(word.surface));
    }

    GraphemeCountStats stats;
    for (const auto& [count, features] : groups) {
        std::vector<int> chars, vowels, cons;
        chars.reserve(features.size());
        vowels.reserve(features.size());
        cons.reserve(features.size());
        for (const FeatureVector& fv : features) {
            chars.push_back(fv.char_count);
            vowels.push_back(fv.vowel_count);
            cons.push_back(fv.consonant_count);
        }
        CountRow row;
        row.n = static_cast<int>(features.size());
        row.characters = stats_of(chars);
        row.vowels = stats_of(vowels);
        row.consonants = stats_of(cons);
        stats.rows[count] = row;
    }
    return stats;
}

std::map<int, std::map<int, double>> frequency_table(const std::vector<AnnotatedWord>& corpus) {
    std::map<int, std::map<int, int>> counts;
    std::map<int, int> totals;
    for (const AnnotatedWord& word : corpus) {
        const int length = static_cast<int>(word.surface.size());
        const int graphemes = static_cast<int>(word.graphemes.size());
        ++counts[length][graphemes];
        ++totals[length];
    }

    std::map<int, std::map<int, double>> table;
    for (const auto& [length, row] : counts) {
        for (const auto& [graphemes, count] : row) {
            table[length][graphemes] = static_cast<double>(count) / totals[length];
        }
    }
    return table;
}

std::string format_stats_tsv(const GraphemeCountStats& stats) {
    std::ostringstream out;
    out << "grapheme_count\tn\tchar_mean\tchar_sigma\tvowel_mean\tvowel_sigma\tcons_mean\tcons_sigma\n";
    char buf[160];
    for (const auto& [count, row] : stats.rows) {
        std::snprintf(buf, sizeof(buf), "%d\t%d\t%.3f\t%.3f\t%.3f\t%.3f\t%.3f\t%.3f\n", count,
                      row.n, row.characters.mean, row.characters.sigma, row.vowels.mean,
                      row.vowels.sigma, row.consonants.mean, row.consonants.sigma);
        out << buf;
    }
    return out.str();
}

std::string format_frequency_tsv(const std::map<int, std::map<int, double>>& table) {
    std::ostringstream out;
    out << "word_length\tgrapheme_count\tprobability\n";
    char buf[96];
    for (const auto& [length, row] : table) {
        for (const auto& [graphemes, probability] : row) {
            std::snprintf(buf, sizeof(buf), "%d\t%d\t%.6f\n", length, graphemes, probability);
            out << buf;
        }
    }
    return out.str();
}

}  // namespace grapheme::corpus
