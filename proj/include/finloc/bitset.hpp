#ifndef FINLOC_BITSET_HPP
#define FINLOC_BITSET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace finloc {

/**
 * Fixed-universe dynamic bitset. The universe size is set at construction
 * and every binary operation requires both operands to share it.
 *
 * Ordering (operator<=>) compares the sets as unsigned integers with bit i
 * worth 2^i, so sorting a list of sets yields the "by member bitset value"
 * order used for deterministic output.
 */
class Bitset {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : universe_(universe), words_((universe + word_bits - 1) / word_bits) {}
  Bitset(std::size_t universe, std::initializer_list<std::size_t> members);

  static Bitset full(std::size_t universe);
  /// Low 64 bits taken from `mask`; universe must be <= 64.
  static Bitset from_mask(std::size_t universe, word_type mask);

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const {
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }
  void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) {
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
  }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool is_subset_of(const Bitset &other) const;
  /// Index of the lowest set bit, or universe() when empty.
  std::size_t first() const;
  /// Lowest set bit strictly after `i`, or universe() when none.
  std::size_t next(std::size_t i) const;

  /// Bits 0..63 as an integer; meaningful only when universe() <= 64.
  word_type to_mask() const { return words_.empty() ? 0 : words_[0]; }

  Bitset &operator|=(const Bitset &o);
  Bitset &operator&=(const Bitset &o);
  /// Set difference.
  Bitset &operator-=(const Bitset &o);

  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset &b) { return a -= b; }

  bool operator==(const Bitset &o) const = default;
  std::strong_ordering operator<=>(const Bitset &o) const;

  std::vector<std::size_t> members() const;
  std::string to_string() const; // "{0,3,5}"

  class const_iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t *;
    using reference = std::size_t;

    const_iterator() = default;
    const_iterator(const Bitset *set, std::size_t pos) : set_(set), pos_(pos) {}
    std::size_t operator*() const { return pos_; }
    const_iterator &operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator &o) const { return pos_ == o.pos_; }

  private:
    const Bitset *set_ = nullptr;
    std::size_t pos_ = 0;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, universe_}; }

private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<word_type> words_;
};

} // namespace finloc

#endif
