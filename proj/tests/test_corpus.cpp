#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "grapheme/corpus.hpp"

using namespace grapheme;
using namespace grapheme::corpus;

namespace {

std::vector<AnnotatedWord> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_corpus(in);
}

// Independent two-pass reference: mean first, then population sigma.
struct OracleRow {
    double mean[3];
    double sigma[3];
    int n;
};

OracleRow oracle_stats(const std::vector<AnnotatedWord>& group) {
    OracleRow row{};
    row.n = static_cast<int>(group.size());
    for (const AnnotatedWord& w : group) {
        const FeatureVector fv = extract_features(w.surface);
        row.mean[0] += fv.char_count;
        row.mean[1] += fv.vowel_count;
        row.mean[2] += fv.consonant_count;
    }
    for (double& m : row.mean) m /= row.n;
    for (const AnnotatedWord& w : group) {
        const FeatureVector fv = extract_features(w.surface);
        const double v[3] = {static_cast<double>(fv.char_count),
                             static_cast<double>(fv.vowel_count),
                             static_cast<double>(fv.consonant_count)};
        for (int f = 0; f < 3; ++f) row.sigma[f] += (v[f] - row.mean[f]) * (v[f] - row.mean[f]);
    }
    for (double& s : row.sigma) s = std::sqrt(s / row.n);
    return row;
}

}  // namespace

TEST_CASE("extract_features counts characters, vowels and consonants") {
    CHECK(extract_features("a") == FeatureVector{1, 1, 0});
    CHECK(extract_features("weigh") == FeatureVector{5, 2, 3});
    // y is a consonant under the a/e/i/o/u rule
    CHECK(extract_features("rhythm") == FeatureVector{6, 0, 6});
}

TEST_CASE("extract_features rejects anything outside [a-z]") {
    CHECK_THROWS_AS(extract_features(""), InvalidWord);
    CHECK_THROWS_AS(extract_features("naïve"), InvalidWord);
    try {
        extract_features("ab9cd");
        FAIL("expected InvalidWord");
    } catch (const InvalidWord& e) {
        CHECK(e.offending() == '9');
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("'9'") != std::string::npos);
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
}

TEST_CASE("feature totals always add up") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(1, 18);
    std::uniform_int_distribution<int> letter(0, 25);
    for (int i = 0; i < 500; ++i) {
        std::string word;
        const int n = len(rng);
        for (int k = 0; k < n; ++k) word.push_back(static_cast<char>('a' + letter(rng)));
        const FeatureVector fv = extract_features(word);
        REQUIRE(fv.vowel_count + fv.consonant_count == fv.char_count);
        REQUIRE(fv.char_count == n);
    }
}

TEST_CASE("parse_corpus reads the tab and pipe format") {
    const auto words = parse("weigh\tw|eigh\na\ta\n");
    REQUIRE(words.size() == 2);
    CHECK(words[0].surface == "weigh");
    CHECK(words[0].graphemes == std::vector<std::string>{"w", "eigh"});
    CHECK(words[1].surface == "a");
    CHECK(words[1].graphemes == std::vector<std::string>{"a"});
}

TEST_CASE("parse_corpus skips comments and blanks, lowercases, strips CR") {
    const auto words = parse("# header\n\nWEIGH\tW|EIGH\r\n");
    REQUIRE(words.size() == 1);
    CHECK(words[0].surface == "weigh");
    CHECK(words[0].graphemes == std::vector<std::string>{"w", "eigh"});
}

TEST_CASE("parse_corpus reports malformed lines with their numbers") {
    CHECK_THROWS_AS(parse("ab\ta|c\n"), ParseError);  // concatenation mismatch
    CHECK_THROWS_AS(parse("ab\ta||b\n"), ParseError);  // empty grapheme
    CHECK_THROWS_AS(parse("abcde\tabcde\n"), ParseError);  // grapheme longer than 4
    CHECK_THROWS_AS(parse("a1\ta|1\n"), ParseError);  // illegal character
    CHECK_THROWS_AS(parse("ab a|b\n"), ParseError);  // missing tab
    CHECK_THROWS_AS(parse("ab\ta|b\textra\n"), ParseError);  // extra tab
    try {
        parse("a\ta\nab\ta|c\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("serialize then parse is the identity on valid corpora") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> group_count(1, 8);
    std::uniform_int_distribution<int> grapheme_len(1, 4);
    std::uniform_int_distribution<int> letter(0, 25);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<AnnotatedWord> corpus;
        const int words = group_count(rng);
        for (int w = 0; w < words; ++w) {
            AnnotatedWord word;
            const int graphemes = group_count(rng);
            for (int g = 0; g < graphemes; ++g) {
                std::string grapheme;
                const int len = grapheme_len(rng);
                for (int c = 0; c < len; ++c)
                    grapheme.push_back(static_cast<char>('a' + letter(rng)));
                word.surface += grapheme;
                word.graphemes.push_back(std::move(grapheme));
            }
            corpus.push_back(std::move(word));
        }
        std::ostringstream out;
        serialize_corpus(corpus, out);
        std::istringstream in(out.str());
        REQUIRE(parse_corpus(in) == corpus);
    }
}

TEST_CASE("compute_stats matches hand computation on the worked example") {
    const auto corpus = parse("a\ta\nan\ta|n\nthe\tth|e\n");
    const GraphemeCountStats stats = compute_stats(corpus);
    REQUIRE(stats.rows.size() == 2);

    const CountRow& one = stats.rows.at(1);
    CHECK(one.n == 1);
    CHECK(one.characters.mean == 1.0);
    CHECK(one.characters.sigma == 0.0);
    CHECK_FALSE(one.gaussian_usable());

    const CountRow& two = stats.rows.at(2);
    CHECK(two.n == 2);
    CHECK(two.characters.mean == 2.5);
    CHECK(two.characters.sigma == 0.5);
    CHECK(two.vowels.mean == 1.0);
    CHECK(two.vowels.sigma == 0.0);
    CHECK(two.consonants.mean == 1.5);
    CHECK(two.consonants.sigma == 0.5);
}

TEST_CASE("single-word corpus carries zero sigma everywhere") {
    const GraphemeCountStats stats = compute_stats(parse("a\ta\n"));
    REQUIRE(stats.rows.size() == 1);
    const CountRow& row = stats.rows.at(1);
    CHECK(row.n == 1);
    CHECK(row.characters.sigma == 0.0);
    CHECK(row.vowels.sigma == 0.0);
    CHECK(row.consonants.sigma == 0.0);
    CHECK_FALSE(row.gaussian_usable());
}

TEST_CASE("compute_stats rejects an empty corpus") {
    CHECK_THROWS_AS(compute_stats({}), ConfigError);
}

TEST_CASE("compute_stats equals the naive two-pass reference on random corpora") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> corpus_size(1, 50);
    std::uniform_int_distribution<int> graphemes(1, 10);
    std::uniform_int_distribution<int> grapheme_len(1, 4);
    std::uniform_int_distribution<int> letter(0, 25);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<AnnotatedWord> corpus;
        const int n = corpus_size(rng);
        for (int w = 0; w < n; ++w) {
            AnnotatedWord word;
            const int g = graphemes(rng);
            for (int i = 0; i < g; ++i) {
                std::string piece;
                const int len = grapheme_len(rng);
                for (int c = 0; c < len; ++c) piece.push_back(static_cast<char>('a' + letter(rng)));
                word.surface += piece;
                word.graphemes.push_back(std::move(piece));
            }
            corpus.push_back(std::move(word));
        }

        const GraphemeCountStats stats = compute_stats(corpus);
        std::map<int, std::vector<AnnotatedWord>> groups;
        for (const AnnotatedWord& w : corpus) groups[static_cast<int>(w.graphemes.size())].push_back(w);
        REQUIRE(stats.rows.size() == groups.size());
        for (const auto& [count, group] : groups) {
            const OracleRow expected = oracle_stats(group);
            const CountRow& actual = stats.rows.at(count);
            REQUIRE(actual.n == expected.n);
            REQUIRE(actual.characters.mean == expected.mean[0]);
            REQUIRE(actual.vowels.mean == expected.mean[1]);
            REQUIRE(actual.consonants.mean == expected.mean[2]);
            REQUIRE(actual.characters.sigma == expected.sigma[0]);
            REQUIRE(actual.vowels.sigma == expected.sigma[1]);
            REQUIRE(actual.consonants.sigma == expected.sigma[2]);
        }
    }
}

TEST_CASE("frequency_table normalizes per word length") {
    SUBCASE("single word") {
        const auto table = frequency_table(parse("a\ta\n"));
        REQUIRE(table.size() == 1);
        CHECK(table.at(1).at(1) == 1.0);
    }
    SUBCASE("two words of the same length split the mass") {
        const auto table = frequency_table(parse("the\tth|e\nand\ta|n|d\n"));
        CHECK(table.at(3).at(2) == 0.5);
        CHECK(table.at(3).at(3) == 0.5);
    }
    SUBCASE("rows sum to one") {
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> graphemes(1, 6);
        std::uniform_int_distribution<int> letter(0, 25);
        std::vector<AnnotatedWord> corpus;
        for (int w = 0; w < 300; ++w) {
            AnnotatedWord word;
            const int g = graphemes(rng);
            for (int i = 0; i < g; ++i) {
                std::string piece(static_cast<std::size_t>(1 + (letter(rng) % 3)), 'a');
                for (char& c : piece) c = static_cast<char>('a' + letter(rng));
                word.surface += piece;
                word.graphemes.push_back(std::move(piece));
            }
            corpus.push_back(std::move(word));
        }
        for (const auto& [length, row] : frequency_table(corpus)) {
            double sum = 0.0;
            for (const auto& [count, p] : row) sum += p;
            REQUIRE(std::abs(sum - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("stats TSV carries the fixed header and three decimals") {
    const auto corpus = parse("a\ta\nan\ta|n\nthe\tth|e\n");
    const std::string tsv = format_stats_tsv(compute_stats(corpus));
    CHECK(tsv.find("grapheme_count\tn\tchar_mean\tchar_sigma\tvowel_mean\tvowel_sigma\tcons_mean\tcons_sigma\n") == 0);
    CHECK(tsv.find("2\t2\t2.500\t0.500\t1.000\t0.000\t1.500\t0.500\n") != std::string::npos);
}

TEST_CASE("frequency TSV lists length, count and probability") {
    const auto corpus = parse("the\tth|e\nand\ta|n|d\n");
    const std::string tsv = format_frequency_tsv(frequency_table(corpus));
    CHECK(tsv.find("word_length\tgrapheme_count\tprobability\n") == 0);
    CHECK(tsv.find("3\t2\t0.500000\n") != std::string::npos);
    CHECK(tsv.find("3\t3\t0.500000\n") != std::string::npos);
}
