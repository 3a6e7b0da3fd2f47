#include "grapheme/ipa.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

namespace grapheme::ipa {

namespace {

void lowercase(std::string& s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
}

std::size_t codepoint_count(std::string_view utf8) {
    std::size_t count = 0;
    for (char c : utf8) {
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
    }
    return count;
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

}  // namespace

std::string strip_prosody(std::string_view ipa) {
    static constexpr std::string_view kPrimary = "\xCB\x88";    // U+02C8
    static constexpr std::string_view kSecondary = "\xCB\x8C";  // U+02CC
    std::string out;
    out.reserve(ipa.size());
    std::size_t i = 0;
    while (i < ipa.size()) {
        if (ipa.compare(i, 2, kPrimary) == 0 || ipa.compare(i, 2, kSecondary) == 0) {
            i += 2;
            continue;
        }
        if (ipa[i] == '.' || ipa[i] == ' ') {
            ++i;
            continue;
        }
        out.push_back(ipa[i]);
        ++i;
    }
    return out;
}

PronunciationDict PronunciationDict::load(std::istream& in) {
    PronunciationDict dict;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(lineno, "expected <word><TAB><IPA>");
        std::string word = line.substr(0, tab);
        lowercase(word);
        if (word.empty()) throw ParseError(lineno, "empty word");

        // First comma-separated pronunciation wins.
        std::string ipa = strip_prosody(split(line.substr(tab + 1), ',').front());
        if (ipa.empty()) throw ParseError(lineno, "empty transcription");

        dict.entries_.try_emplace(std::move(word), std::move(ipa));
    }
    return dict;
}

PronunciationDict PronunciationDict::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open dictionary file: " + path);
    return load(in);
}

std::optional<std::string> PronunciationDict::find(std::string_view word) const {
    auto it = entries_.find(word);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

const std::string& PronunciationDict::lookup(std::string_view word) const {
    auto it = entries_.find(word);
    if (it == entries_.end()) throw NotInDictionary(std::string(word));
    return it->second;
}

PhonemeInventory::PhonemeInventory(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw ConfigError("phoneme inventory is empty");
    for (const std::string& s : symbols_) {
        const std::size_t points = codepoint_count(s);
        if (points < 1 || points > 3)
            throw ConfigError("phoneme symbol \"" + s + "\" must be 1-3 code points");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
            if (symbols_[i] == symbols_[j])
                throw ConfigError("duplicate phoneme symbol \"" + symbols_[i] + "\"");
        }
    }
    order_.resize(symbols_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    // Among candidates matching the same prefix one is always a prefix of the
    // other, so byte length orders them exactly like code-point length.
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
        if (symbols_[a].size() != symbols_[b].size()) return symbols_[a].size() > symbols_[b].size();
        return a < b;
    });
}

PhonemeInventory PhonemeInventory::load(std::istream& in) {
    std::vector<std::string> symbols;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        symbols.push_back(line);
    }
    return PhonemeInventory(std::move(symbols));
}

PhonemeInventory PhonemeInventory::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open phoneme inventory file: " + path);
    return load(in);
}

bool PhonemeInventory::contains(std::string_view symbol) const {
    return std::find(symbols_.begin(), symbols_.end(), symbol) != symbols_.end();
}

CorrespondenceTable CorrespondenceTable::load(std::istream& in) {
    CorrespondenceTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(lineno, "expected <phoneme><TAB><g1,g2,...>");
        std::string phoneme = line.substr(0, tab);
        if (phoneme.empty()) throw ParseError(lineno, "empty phoneme");
        if (table.rows_.count(phoneme))
            throw ParseError(lineno, "duplicate row for phoneme \"" + phoneme + "\"");

        std::vector<std::string> candidates = split(line.substr(tab + 1), ',');
        for (const std::string& g : candidates) {
            if (g.empty()) throw ParseError(lineno, "empty grapheme candidate");
        }
        if (candidates.empty()) throw ParseError(lineno, "no grapheme candidates");
        table.rows_[std::move(phoneme)] = std::move(candidates);
    }
    return table;
}

CorrespondenceTable CorrespondenceTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open correspondence file: " + path);
    return load(in);
}

const std::vector<std::string>* CorrespondenceTable::candidates(std::string_view phoneme) const {
    auto it = rows_.find(phoneme);
    if (it == rows_.end()) return nullptr;
    return &it->second;
}

void CorrespondenceTable::validate(const PhonemeInventory& phonemes,
                                   const seg::GraphemeInventory& graphemes) const {
    for (const std::string& symbol : phonemes.symbols()) {
        const auto* list = candidates(symbol);
        if (list == nullptr || list->empty())
            throw ConfigError("phoneme \"" + symbol + "\" has no grapheme candidates");
    }
    for (const auto& [phoneme, list] : rows_) {
        for (const std::string& g : list) {
            if (!graphemes.contains(g))
                throw ConfigError("correspondence for \"" + phoneme + "\" names grapheme \"" + g +
                                  "\" which is not in the inventory");
        }
    }
}

std::vector<std::string> parse_phonemes(std::string_view ipa, const PhonemeInventory& inventory) {
    if (ipa.empty()) throw UnparsableIPA(std::string(ipa), 0);
    const std::size_t n = ipa.size();

    // matches per byte position, candidate order; parseable[pos] marks
    // positions whose suffix splits into inventory phonemes.
    std::vector<std::vector<std::size_t>> matches(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t idx : inventory.search_order()) {
            const std::string& symbol = inventory.symbols()[idx];
            if (symbol.size() <= n - pos && ipa.compare(pos, symbol.size(), symbol) == 0)
                matches[pos].push_back(idx);
        }
    }
    std::vector<char> parseable(n + 1, 0);
    parseable[n] = 1;
    for (std::size_t pos = n; pos-- > 0;) {
        for (std::size_t idx : matches[pos]) {
            if (parseable[pos + inventory.symbols()[idx].size()]) {
                parseable[pos] = 1;
                break;
            }
        }
    }

    if (!parseable[0]) {
        // Furthest reachable dead end gives the most useful offset.
        std::vector<char> reachable(n + 1, 0);
        reachable[0] = 1;
        std::size_t furthest = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            if (!reachable[pos]) continue;
            if (matches[pos].empty()) furthest = std::max(furthest, pos);
            for (std::size_t idx : matches[pos])
                reachable[pos + inventory.symbols()[idx].size()] = 1;
        }
        throw UnparsableIPA(std::string(ipa), furthest);
    }

    std::vector<std::string> phonemes;
    std::size_t pos = 0;
    while (pos < n) {
        for (std::size_t idx : matches[pos]) {
            const std::string& symbol = inventory.symbols()[idx];
            if (parseable[pos + symbol.size()]) {
                phonemes.push_back(symbol);
                pos += symbol.size();
                break;
            }
        }
    }
    return phonemes;
}

namespace {

bool assign(std::string_view word, const std::vector<std::string>& phonemes,
            const CorrespondenceTable& table, std::size_t i, std::size_t pos,
            std::vector<std::string>& out) {
    if (i == phonemes.size()) return pos == word.size();
    const auto* candidates = table.candidates(phonemes[i]);
    if (candidates == nullptr)
        throw ConfigError("phoneme \"" + phonemes[i] + "\" has no correspondence row");
    for (const std::string& g : *candidates) {
        if (g.size() > word.size() - pos || word.compare(pos, g.size(), g) != 0) continue;
        out.push_back(g);
        if (assign(word, phonemes, table, i + 1, pos + g.size(), out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

seg::Segmentation map_to_graphemes(std::string_view word, const std::vector<std::string>& phonemes,
                                   const CorrespondenceTable& table) {
    seg::Segmentation result;
    result.surface = std::string(word);
    if (!assign(word, phonemes, table, 0, 0, result.graphemes))
        throw MappingFailed(std::string(word));
    result.achieved_count = static_cast<int>(result.graphemes.size());
    result.exact_count_match = true;
    return result;
}

}  // namespace grapheme::ipa
