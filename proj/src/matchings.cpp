#include "spectra/matchings.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

using Pair = MergerPattern::Pair;
using PairList = std::vector<Pair>;

void check_enum_args(int J, int cap) {
  if (J < 1) throw std::invalid_argument("enumeration requires J >= 1");
  if (J > cap)
    throw CapExceeded("J = " + std::to_string(J) + " exceeds the enumeration cap " +
                      std::to_string(cap));
}

// Non-crossing matchings of {0,...,2*half-1} for every half up to max_half.
// Point 0 pairs with an odd position m; the inner block {1..m-1} and the outer
// block {m+1..} are matched independently, which is exactly what rules out
// crossings. Each emitted list is canonical (sorted by first element) and each
// table row is in lexicographic order of those lists.
std::vector<std::vector<PairList>> nc_blocks_up_to(int max_half) {
  std::vector<std::vector<PairList>> table(max_half + 1);
  table[0] = {PairList{}};
  for (int half = 1; half <= max_half; ++half) {
    const int len = 2 * half;
    std::vector<PairList> out;
    for (int m = 1; m < len; m += 2) {
      const auto& inner = table[(m - 1) / 2];
      const auto& outer = table[(len - m - 1) / 2];
      for (const auto& in : inner) {
        for (const auto& ou : outer) {
          PairList p;
          p.reserve(half);
          p.emplace_back(0, m);
          for (auto [a, b] : in) p.emplace_back(a + 1, b + 1);
          for (auto [a, b] : ou) p.emplace_back(a + m + 1, b + m + 1);
          out.push_back(std::move(p));
        }
      }
    }
    table[half] = std::move(out);
  }
  return table;
}

PairList shifted(const PairList& base, int offset) {
  PairList out;
  out.reserve(base.size());
  for (auto [a, b] : base) out.emplace_back(a + offset, b + offset);
  return out;
}

}  // namespace

MergerPattern MergerPattern::from_pairs(std::vector<Pair> pairs) {
  if (pairs.empty()) throw InvalidMatching("a merger pattern needs at least one pair");
  const int size = 2 * static_cast<int>(pairs.size());
  for (auto& [a, b] : pairs) {
    if (a == b)
      throw InvalidMatching("pair [" + std::to_string(a) + "," + std::to_string(b) +
                            "] has equal entries");
    if (a > b) std::swap(a, b);
    if (a < 1)
      throw InvalidMatching("index " + std::to_string(a) + " is out of range");
  }
  std::vector<char> seen(static_cast<size_t>(size) + 1, 0);
  int max_index = 0;
  for (auto [a, b] : pairs) {
    for (int idx : {a, b}) {
      max_index = std::max(max_index, idx);
      if (idx > size)
        throw InvalidMatching("index " + std::to_string(idx) + " exceeds 2J = " +
                              std::to_string(size));
      if (seen[idx])
        throw InvalidMatching("index " + std::to_string(idx) + " appears twice");
      seen[idx] = 1;
    }
  }
  for (int idx = 1; idx <= max_index; ++idx)
    if (!seen[idx]) throw InvalidMatching("index " + std::to_string(idx) + " is missing");
  std::sort(pairs.begin(), pairs.end());
  return MergerPattern(std::move(pairs));
}

bool is_noncrossing(const MergerPattern& p) {
  const int n = p.size();
  std::vector<int> partner(static_cast<size_t>(n) + 1, 0);
  for (auto [a, b] : p.pairs()) {
    partner[a] = b;
    partner[b] = a;
  }
  // Arch scan: every closer must close the most recently opened arch.
  std::vector<int> open;
  for (int pos = 1; pos <= n; ++pos) {
    if (partner[pos] > pos) {
      open.push_back(pos);
    } else {
      if (open.empty() || open.back() != partner[pos]) return false;
      open.pop_back();
    }
  }
  return true;
}

MergerPattern reflect(const MergerPattern& p) {
  const int n = p.size();
  PairList out;
  out.reserve(p.pairs().size());
  for (auto [a, b] : p.pairs()) out.emplace_back(n + 1 - b, n + 1 - a);
  return MergerPattern::from_pairs(std::move(out));
}

bool is_centrally_symmetric(const MergerPattern& p) { return reflect(p) == p; }

std::vector<MergerPattern> enumerate_noncrossing(int J, int cap) {
  check_enum_args(J, cap);
  auto table = nc_blocks_up_to(J);
  std::vector<MergerPattern> out;
  out.reserve(table[J].size());
  for (const auto& base : table[J]) out.push_back(MergerPattern::from_pairs(shifted(base, 1)));
  return out;
}

std::vector<MergerPattern> enumerate_symmetric(int J, int cap) {
  check_enum_args(J, cap);
  // sym[j] holds the centrally symmetric patterns on {1..2j}. Either level 1
  // pairs with some 2i+2 <= j (free inner block, mirrored right block, and a
  // symmetric middle), or the arch {1,2j} encloses a symmetric pattern.
  const auto nc = nc_blocks_up_to(std::max(0, J / 2 - 1));
  std::vector<std::vector<PairList>> sym(static_cast<size_t>(J) + 1);
  sym[0] = {PairList{}};
  for (int j = 1; j <= J; ++j) {
    std::vector<PairList> out;
    for (int i = 0; 2 * i + 2 <= j; ++i) {
      const int m = 2 * i + 2;
      for (const auto& block : nc[i]) {
        const PairList inner = shifted(block, 2);
        for (const auto& mid : sym[j - 2 * i - 2]) {
          PairList p;
          p.reserve(static_cast<size_t>(j));
          p.emplace_back(1, m);
          p.insert(p.end(), inner.begin(), inner.end());
          for (auto [a, b] : mid) p.emplace_back(a + m, b + m);
          p.emplace_back(2 * j - 2 * i - 1, 2 * j);
          for (auto [a, b] : inner) p.emplace_back(2 * j + 1 - b, 2 * j + 1 - a);
          out.push_back(std::move(p));
        }
      }
    }
    for (const auto& sub : sym[j - 1]) {
      PairList p;
      p.reserve(static_cast<size_t>(j));
      p.emplace_back(1, 2 * j);
      for (auto [a, b] : sub) p.emplace_back(a + 1, b + 1);
      out.push_back(std::move(p));
    }
    sym[j] = std::move(out);
  }
  std::vector<MergerPattern> out;
  out.reserve(sym[J].size());
  for (const auto& base : sym[J]) out.push_back(MergerPattern::from_pairs(base));
  return out;
}

std::string format_symbol(const MergerPattern& p) {
  std::string s = "{";
  bool first = true;
  for (auto [a, b] : p.pairs()) {
    if (!first) s += ',';
    first = false;
    s += '[';
    s += std::to_string(a);
    s += ',';
    s += std::to_string(b);
    s += ']';
  }
  s += '}';
  return s;
}

MergerPattern parse_symbol(std::string_view text) {
  size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto expect = [&](char c) {
    skip_spaces();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError("expected '" + std::string(1, c) + "' at position " +
                       std::to_string(pos));
    ++pos;
  };
  auto peek = [&](char c) {
    skip_spaces();
    return pos < text.size() && text[pos] == c;
  };
  auto read_index = [&]() -> int {
    skip_spaces();
    const size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected an index at position " + std::to_string(pos));
    if (pos - start > 7) throw ParseError("index too large at position " + std::to_string(start));
    int value = 0;
    for (size_t k = start; k < pos; ++k) value = 10 * value + (text[k] - '0');
    if (value == 0) throw ParseError("index must be nonzero at position " + std::to_string(start));
    return value;
  };

  expect('{');
  std::vector<Pair> pairs;
  while (true) {
    expect('[');
    const int a = read_index();
    expect(',');
    const int b = read_index();
    expect(']');
    pairs.emplace_back(a, b);
    if (peek(',')) {
      ++pos;
      continue;
    }
    break;
  }
  expect('}');
  skip_spaces();
  if (pos != text.size())
    throw ParseError("trailing characters after '}' at position " + std::to_string(pos));
  return MergerPattern::from_pairs(std::move(pairs));
}

}  // namespace spectra
