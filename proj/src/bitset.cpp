#include "finloc/bitset.hpp"

#include <cassert>
#include <stdexcept>

namespace finloc {

Bitset::Bitset(std::size_t universe, std::initializer_list<std::size_t> members)
    : Bitset(universe) {
  for (auto m : members) {
    if (m >= universe)
      throw std::out_of_range("Bitset member " + std::to_string(m) +
                              " outside universe " + std::to_string(universe));
    set(m);
  }
}

Bitset Bitset::full(std::size_t universe) {
  Bitset b(universe);
  for (auto &w : b.words_)
    w = ~word_type{0};
  b.trim();
  return b;
}

Bitset Bitset::from_mask(std::size_t universe, word_type mask) {
  if (universe > word_bits)
    throw std::invalid_argument("Bitset::from_mask needs universe <= 64");
  Bitset b(universe);
  if (!b.words_.empty())
    b.words_[0] = mask;
  b.trim();
  return b;
}

void Bitset::trim() {
  const auto tail = universe_ % word_bits;
  if (tail != 0 && !words_.empty())
    words_.back() &= (word_type{1} << tail) - 1;
}

std::size_t Bitset::count() const {
  std::size_t n = 0;
  for (auto w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bitset::none() const {
  for (auto w : words_)
    if (w != 0)
      return false;
  return true;
}

bool Bitset::is_subset_of(const Bitset &other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

std::size_t Bitset::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0)
      return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return universe_;
}

std::size_t Bitset::next(std::size_t i) const {
  ++i;
  if (i >= universe_)
    return universe_;
  std::size_t w = i / word_bits;
  word_type cur = words_[w] & (~word_type{0} << (i % word_bits));
  while (true) {
    if (cur != 0)
      return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w == words_.size())
      return universe_;
    cur = words_[w];
  }
}

Bitset &Bitset::operator|=(const Bitset &o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= o.words_[i];
  return *this;
}

Bitset &Bitset::operator&=(const Bitset &o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
  return *this;
}

Bitset &Bitset::operator-=(const Bitset &o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

std::strong_ordering Bitset::operator<=>(const Bitset &o) const {
  if (auto c = universe_ <=> o.universe_; c != 0)
    return c;
  for (std::size_t i = words_.size(); i-- > 0;)
    if (auto c = words_[i] <=> o.words_[i]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

std::vector<std::size_t> Bitset::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (auto i : *this)
    out.push_back(i);
  return out;
}

std::string Bitset::to_string() const {
  std::string s = "{";
  bool first_member = true;
  for (auto i : *this) {
    if (!first_member)
      s += ',';
    s += std::to_string(i);
    first_member = false;
  }
  return s + "}";
}

} // namespace finloc
