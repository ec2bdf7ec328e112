#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectra {

/// Default enumeration cap: J = 14 keeps the full catalog (Catalan ~2.6M) in memory.
inline constexpr int kDefaultEnumCap = 14;

/// A merger pattern: a perfect matching of the ordered levels 1..2J into J
/// disjoint pairs. Stored canonically (a < b inside each pair, pairs sorted
/// ascending by first element), so equality is plain value equality.
class MergerPattern {
public:
  using Pair = std::pair<int, int>;

  /// Validates and canonicalizes. Throws InvalidMatching unless the pairs
  /// cover {1,...,2J} exactly once each, with a != b everywhere and J >= 1.
  static MergerPattern from_pairs(std::vector<Pair> pairs);

  /// Number of levels 2J.
  int size() const { return 2 * static_cast<int>(pairs_.size()); }

  /// Number of pairs J.
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  const std::vector<Pair>& pairs() const { return pairs_; }

  friend bool operator==(const MergerPattern&, const MergerPattern&) = default;
  friend auto operator<=>(const MergerPattern& a, const MergerPattern& b) {
    return a.pairs_ <=> b.pairs_;
  }

private:
  explicit MergerPattern(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {}
  std::vector<Pair> pairs_;
};

/// True iff no two pairs {a,b}, {c,d} interleave as a < c < b < d.
bool is_noncrossing(const MergerPattern& p);

/// Image of the pattern under the central reflection n -> 2J+1-n.
MergerPattern reflect(const MergerPattern& p);

/// True iff reflect(p) == p.
bool is_centrally_symmetric(const MergerPattern& p);

/// All non-crossing perfect matchings of 2J points, in lexicographic order of
/// their canonical pair sequences. Throws CapExceeded for J > cap.
std::vector<MergerPattern> enumerate_noncrossing(int J, int cap = kDefaultEnumCap);

/// All centrally symmetric non-crossing matchings of 2J points, same order.
/// Built by direct recursive decomposition, not by filtering.
std::vector<MergerPattern> enumerate_symmetric(int J, int cap = kDefaultEnumCap);

/// Canonical text form "{[a,b],...}", no whitespace.
std::string format_symbol(const MergerPattern& p);

/// Inverse of format_symbol. Accepts non-canonical pair/element order and
/// ASCII spaces between tokens. Throws ParseError on malformed text and
/// InvalidMatching when the text does not denote a perfect matching.
MergerPattern parse_symbol(std::string_view text);

}  // namespace spectra
