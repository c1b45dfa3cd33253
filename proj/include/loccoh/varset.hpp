#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace loccoh {

// A subset of {0, ..., 31} stored as a bitmask. Used for monomial supports,
// faces of simplicial complexes, negative-support patterns and sets of
// generator indices alike.
class VarSet {
public:
  using mask_type = std::uint32_t;
  static constexpr int kMaxBits = 32;

  constexpr VarSet() = default;
  constexpr explicit VarSet(mask_type bits) : bits_(bits) {}

  static constexpr VarSet singleton(int i) { return VarSet(mask_type{1} << i); }
  static constexpr VarSet full(int n) {
    return VarSet(n >= kMaxBits ? ~mask_type{0} : (mask_type{1} << n) - 1);
  }
  static VarSet of(std::initializer_list<int> elems) {
    VarSet s;
    for (int e : elems) s = s.with(e);
    return s;
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VarSet with(int i) const { return VarSet(bits_ | (mask_type{1} << i)); }
  constexpr VarSet without(int i) const { return VarSet(bits_ & ~(mask_type{1} << i)); }

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VarSet, VarSet) = default;

  // Complement inside {0, ..., n-1}.
  constexpr VarSet complement(int n) const { return full(n) - *this; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (mask_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Number of elements strictly smaller than i.
  constexpr int rank_of(int i) const {
    return std::popcount(bits_ & ((mask_type{1} << i) - 1));
  }

private:
  mask_type bits_ = 0;
};

// Lexicographic order on the sorted element lists: {0,1} < {0,2} < {1}.
// This is the canonical order for reports and deterministic enumeration.
inline bool lex_less(VarSet a, VarSet b) {
  auto x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

struct LexLess {
  bool operator()(VarSet a, VarSet b) const { return lex_less(a, b); }
};

// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<VarSet> combinations(int n, int k) {
  std::vector<VarSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VarSet s;
    for (int i : idx) s = s.with(i);
    out.push_back(s);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

// Drop duplicates and every set that strictly contains another one (or, with
// keep_minimal = false, every set strictly contained in another one). The
// result is sorted lexicographically.
inline std::vector<VarSet> minimize_antichain(std::vector<VarSet> sets, bool keep_minimal = true) {
  std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> out;
  for (VarSet s : sets) {
    bool dominated = false;
    for (VarSet t : sets) {
      if (t == s) continue;
      if (keep_minimal ? t.subset_of(s) : s.subset_of(t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

} // namespace loccoh
