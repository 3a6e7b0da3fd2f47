#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "grapheme/errors.hpp"

namespace grapheme::seg {

enum class Tier { Main, Extended };

struct InventoryEntry {
    std::string grapheme;  // 1-4 chars in [a-z]
    Tier tier = Tier::Extended;
};

/// The ordered set of legal graphemes. Candidate order for every search is
/// fixed: longer graphemes first, main tier before extended at equal length,
/// then input order. Immutable after construction.
class GraphemeInventory {
public:
    static constexpr std::size_t kMaxEntries = 284;

    /// Validates uniqueness, entry charset/length and the size cap.
    explicit GraphemeInventory(std::vector<InventoryEntry> entries);

    /// File format: one grapheme per line, optional `\t(main|extended)` tier
    /// suffix (default extended), `#` comments. The loader additionally
    /// requires all 26 single letters so that every [a-z] word stays
    /// segmentable.
    static GraphemeInventory load(std::istream& in);
    static GraphemeInventory load_file(const std::string& path);

    const std::vector<InventoryEntry>& entries() const { return entries_; }
    /// Indices into entries() in candidate order.
    const std::vector<std::size_t>& search_order() const { return order_; }
    bool contains(std::string_view grapheme) const;
    std::size_t size() const { return entries_.size(); }
    std::size_t main_count() const { return main_count_; }

private:
    std::vector<InventoryEntry> entries_;
    std::vector<std::size_t> order_;
    std::unordered_set<std::string> lookup_;
    std::size_t main_count_ = 0;
};

struct Segmentation {
    std::string surface;
    std::vector<std::string> graphemes;
    int achieved_count = 0;
    bool exact_count_match = false;
};

/// Splits a word into graphemes, preferring a segmentation with exactly
/// target_count parts. The search is depth-first over prefixes with
/// candidates tried in inventory search order, i.e. largest-first with
/// backtracking; the first exact-count completion wins. When no exact-count
/// segmentation exists, returns the first completion (same order) whose
/// count is nearest to the target, ties broken toward the lower count, and
/// exact_count_match is false. Throws UnsegmentableWord when no segmentation
/// exists at all.
Segmentation segment(std::string_view word, int target_count, const GraphemeInventory& inventory);

struct EnumerationResult {
    std::vector<Segmentation> segmentations;
    bool truncated = false;
};

/// Every distinct segmentation of the word, depth-first in candidate order,
/// up to max_results (the truncated flag is set instead of erroring).
EnumerationResult enumerate_segmentations(std::string_view word,
                                          const GraphemeInventory& inventory,
                                          std::size_t max_results);

}  // namespace grapheme::seg
