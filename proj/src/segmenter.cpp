#include "grapheme/segmenter.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

namespace grapheme::seg {

namespace {

constexpr std::size_t kMaxGraphemeLength = 4;

bool valid_grapheme(std::string_view g) {
    if (g.empty() || g.size() > kMaxGraphemeLength) return false;
    for (char c : g) {
        if (c < 'a' || c > 'z') return false;
    }
    return true;
}

// Per-position candidate matches plus a suffix-count feasibility table.
// can[pos][k] is true when word[pos..] splits into exactly k graphemes.
struct SearchTables {
    std::vector<std::vector<std::size_t>> matches;  // entry indices, candidate order
    std::vector<std::vector<char>> can;

    SearchTables(std::string_view word, const GraphemeInventory& inv) {
        const std::size_t n = word.size();
        matches.resize(n);
        for (std::size_t pos = 0; pos < n; ++pos) {
            for (std::size_t idx : inv.search_order()) {
                const std::string& g = inv.entries()[idx].grapheme;
                if (g.size() <= n - pos && word.compare(pos, g.size(), g) == 0)
                    matches[pos].push_back(idx);
            }
        }
        can.assign(n + 1, std::vector<char>(n + 1, 0));
        can[n][0] = 1;
        for (std::size_t pos = n; pos-- > 0;) {
            for (std::size_t idx : matches[pos]) {
                const std::size_t len = inv.entries()[idx].grapheme.size();
                for (std::size_t k = 0; k + 1 <= n; ++k) {
                    if (can[pos + len][k]) can[pos][k + 1] = 1;
                }
            }
        }
    }
};

// First segmentation with exactly `count` parts in depth-first candidate
// order. The feasibility table makes every descent succeed, so this never
// backtracks; it visits the same completion the raw backtracking search
// would reach first.
std::vector<std::string> first_with_count(std::string_view word, const GraphemeInventory& inv,
                                          const SearchTables& tables, int count) {
    std::vector<std::string> graphemes;
    graphemes.reserve(static_cast<std::size_t>(count));
    std::size_t pos = 0;
    int remaining = count;
    while (remaining > 0) {
        bool advanced = false;
        for (std::size_t idx : tables.matches[pos]) {
            const std::string& g = inv.entries()[idx].grapheme;
            if (tables.can[pos + g.size()][static_cast<std::size_t>(remaining - 1)]) {
                graphemes.push_back(g);
                pos += g.size();
                --remaining;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw UnsegmentableWord(std::string(word));  // unreachable by construction
    }
    return graphemes;
}

void validate_word(std::string_view word) {
    if (word.empty()) throw InvalidWord("empty word");
    for (std::size_t i = 0; i < word.size(); ++i) {
        const char c = word[i];
        if (c < 'a' || c > 'z') throw InvalidWord(std::string(word), c, i);
    }
}

}  // namespace

GraphemeInventory::GraphemeInventory(std::vector<InventoryEntry> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) throw ConfigError("grapheme inventory is empty");
    if (entries_.size() > kMaxEntries)
        throw ConfigError("grapheme inventory exceeds " + std::to_string(kMaxEntries) +
                          " entries");
    for (const InventoryEntry& e : entries_) {
        if (!valid_grapheme(e.grapheme))
            throw ConfigError("invalid grapheme \"" + e.grapheme +
                              "\": expected 1-4 characters in [a-z]");
        if (!lookup_.insert(e.grapheme).second)
            throw ConfigError("duplicate grapheme \"" + e.grapheme + "\"");
        if (e.tier == Tier::Main) ++main_count_;
    }

    order_.resize(entries_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
        const InventoryEntry& ea = entries_[a];
        const InventoryEntry& eb = entries_[b];
        if (ea.grapheme.size() != eb.grapheme.size()) return ea.grapheme.size() > eb.grapheme.size();
        if (ea.tier != eb.tier) return ea.tier == Tier::Main;
        return a < b;
    });
}

GraphemeInventory GraphemeInventory::load(std::istream& in) {
    std::vector<InventoryEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        InventoryEntry entry;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            entry.grapheme = line;
        } else {
            entry.grapheme = line.substr(0, tab);
            const std::string tier = line.substr(tab + 1);
            if (tier == "main") {
                entry.tier = Tier::Main;
            } else if (tier == "extended") {
                entry.tier = Tier::Extended;
            } else {
                throw ParseError(lineno, "unknown tier \"" + tier + "\"");
            }
        }
        if (!valid_grapheme(entry.grapheme))
            throw ParseError(lineno, "invalid grapheme \"" + entry.grapheme + "\"");
        entries.push_back(std::move(entry));
    }

    GraphemeInventory inventory{std::move(entries)};
    for (char c = 'a'; c <= 'z'; ++c) {
        if (!inventory.contains(std::string_view(&c, 1)))
            throw ConfigError(std::string("inventory file is missing single-letter grapheme '") +
                              c + "'");
    }
    return inventory;
}

GraphemeInventory GraphemeInventory::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open inventory file: " + path);
    return load(in);
}

bool GraphemeInventory::contains(std::string_view grapheme) const {
    return lookup_.count(std::string(grapheme)) > 0;
}

Segmentation segment(std::string_view word, int target_count, const GraphemeInventory& inventory) {
    validate_word(word);
    if (target_count < 1) throw ConfigError("target_count must be >= 1");

    const SearchTables tables(word, inventory);
    const std::size_t n = word.size();

    Segmentation result;
    result.surface = std::string(word);

    const auto target = static_cast<std::size_t>(target_count);
    if (target <= n && tables.can[0][target]) {
        result.graphemes = first_with_count(word, inventory, tables, target_count);
        result.achieved_count = target_count;
        result.exact_count_match = true;
        return result;
    }

    // Nearest achievable count, ties toward the lower one.
    int best = -1;
    for (std::size_t k = 1; k <= n; ++k) {
        if (!tables.can[0][k]) continue;
        const int candidate = static_cast<int>(k);
        if (best < 0 || std::abs(candidate - target_count) < std::abs(best - target_count))
            best = candidate;
    }
    if (best < 0) throw UnsegmentableWord(std::string(word));

    result.graphemes = first_with_count(word, inventory, tables, best);
    result.achieved_count = best;
    result.exact_count_match = false;
    return result;
}

EnumerationResult enumerate_segmentations(std::string_view word,
                                          const GraphemeInventory& inventory,
                                          std::size_t max_results) {
    validate_word(word);
    if (max_results < 1) throw ConfigError("max_results must be >= 1");

    const SearchTables tables(word, inventory);
    const std::size_t n = word.size();

    EnumerationResult result;
    std::vector<std::string> current;

    // Iterative DFS over (position, next-candidate) frames in search order.
    struct Frame {
        std::size_t pos;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (frame.pos == n) {
            if (result.segmentations.size() == max_results) {
                result.truncated = true;
                break;
            }
            Segmentation seg;
            seg.surface = std::string(word);
            seg.graphemes = current;
            seg.achieved_count = static_cast<int>(current.size());
            seg.exact_count_match = true;
            result.segmentations.push_back(std::move(seg));
            stack.pop_back();
            if (!current.empty()) current.pop_back();
            continue;
        }
        bool descended = false;
        while (frame.next < tables.matches[frame.pos].size()) {
            const std::size_t idx = tables.matches[frame.pos][frame.next++];
            const std::string& g = inventory.entries()[idx].grapheme;
            current.push_back(g);
            stack.push_back({frame.pos + g.size(), 0});
            descended = true;
            break;
        }
        if (!descended) {
            stack.pop_back();
            if (!current.empty()) current.pop_back();
        }
    }
    return result;
}

}  // namespace grapheme::seg
