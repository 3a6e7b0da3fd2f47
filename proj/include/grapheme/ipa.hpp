#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grapheme/errors.hpp"
#include "grapheme/segmenter.hpp"

namespace grapheme::ipa {

/// Removes primary/secondary stress marks, syllable dots and spaces from a
/// transcription. Length marks stay attached to their vowels.
std::string strip_prosody(std::string_view ipa);

/// word -> IPA transcription (UTF-8, prosody stripped on load). Where a line
/// lists several comma-separated pronunciations, or a word repeats on a later
/// line, the first entry wins.
class PronunciationDict {
public:
    /// File format: `word\tIPA` per line, `#` comments, blank lines ignored.
    static PronunciationDict load(std::istream& in);
    static PronunciationDict load_file(const std::string& path);

    std::optional<std::string> find(std::string_view word) const;
    /// Throws NotInDictionary when absent.
    const std::string& lookup(std::string_view word) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, std::string, std::less<>> entries_;
};

/// The legal phoneme symbols (IPA strings of 1-3 code points). Candidate
/// order for parsing is longest symbol first, then input order.
class PhonemeInventory {
public:
    explicit PhonemeInventory(std::vector<std::string> symbols);

    /// One symbol per line, `#` comments.
    static PhonemeInventory load(std::istream& in);
    static PhonemeInventory load_file(const std::string& path);

    const std::vector<std::string>& symbols() const { return symbols_; }
    /// Indices into symbols() in parse candidate order.
    const std::vector<std::size_t>& search_order() const { return order_; }
    bool contains(std::string_view symbol) const;

private:
    std::vector<std::string> symbols_;
    std::vector<std::size_t> order_;
};

/// phoneme -> candidate graphemes in priority order.
class CorrespondenceTable {
public:
    /// File format: `phoneme\tg1,g2,...` per line, `#` comments.
    static CorrespondenceTable load(std::istream& in);
    static CorrespondenceTable load_file(const std::string& path);

    /// nullptr when the phoneme has no row.
    const std::vector<std::string>* candidates(std::string_view phoneme) const;

    /// Every inventory phoneme must have at least one candidate and every
    /// candidate grapheme must exist in the grapheme inventory.
    void validate(const PhonemeInventory& phonemes, const seg::GraphemeInventory& graphemes) const;

    std::size_t size() const { return rows_.size(); }

private:
    std::map<std::string, std::vector<std::string>, std::less<>> rows_;
};

/// Splits a transcription into inventory phonemes: depth-first, longest
/// symbol first, first complete parse wins (prefers fewer, longer phonemes).
/// Throws UnparsableIPA with the byte offset of the furthest unmatched
/// residue.
std::vector<std::string> parse_phonemes(std::string_view ipa, const PhonemeInventory& inventory);

/// Assigns one grapheme per phoneme, left to right with backtracking over
/// each phoneme's candidates, such that the graphemes exactly spell the word.
/// Throws MappingFailed when no consistent assignment exists.
seg::Segmentation map_to_graphemes(std::string_view word, const std::vector<std::string>& phonemes,
                                   const CorrespondenceTable& table);

}  // namespace grapheme::ipa
