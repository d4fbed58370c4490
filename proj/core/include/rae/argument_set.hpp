#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rae {

/// Hard upper bound on the number of arguments a framework may hold.
inline constexpr std::size_t kMaxArguments = 256;

/// Fixed-capacity bitset over argument indices of one framework.
///
/// Value type; bits at or above kMaxArguments do not exist. Operations
/// never allocate, which keeps the enumeration search free of heap traffic.
class ArgumentSet {
 public:
  static constexpr std::size_t kWords = kMaxArguments / 64;

  constexpr ArgumentSet() = default;
  ArgumentSet(std::initializer_list<std::size_t> members) {
    for (std::size_t m : members) insert(m);
  }

  /// The set {0, ..., n-1}.
  static ArgumentSet first_n(std::size_t n) {
    ArgumentSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0}
                               : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  void insert(std::size_t i) { words_[i >> 6] |= bit(i); }
  void erase(std::size_t i) { words_[i >> 6] &= ~bit(i); }
  bool contains(std::size_t i) const { return (words_[i >> 6] & bit(i)) != 0; }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool intersects(const ArgumentSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  bool is_subset_of(const ArgumentSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  /// Lowest member, or kMaxArguments when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w])
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kMaxArguments;
  }

  ArgumentSet& operator|=(const ArgumentSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ArgumentSet& operator&=(const ArgumentSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  ArgumentSet& operator-=(const ArgumentSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend ArgumentSet operator|(ArgumentSet a, const ArgumentSet& b) { return a |= b; }
  friend ArgumentSet operator&(ArgumentSet a, const ArgumentSet& b) { return a &= b; }
  friend ArgumentSet operator-(ArgumentSet a, const ArgumentSet& b) { return a -= b; }

  friend bool operator==(const ArgumentSet&, const ArgumentSet&) = default;
  friend auto operator<=>(const ArgumentSet&, const ArgumentSet&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  static constexpr std::uint64_t bit(std::size_t i) {
    return std::uint64_t{1} << (i & 63);
  }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace rae
