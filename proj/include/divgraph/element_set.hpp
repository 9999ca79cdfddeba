#ifndef DIVGRAPH_ELEMENT_SET_HPP
#define DIVGRAPH_ELEMENT_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace divgraph {

using Element = std::uint32_t;

// Fixed-width bitset over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(Element e) { words_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  bool contains(Element e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int bit = std::countr_zero(w);
        out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const ElementSet&) const = default;

  // Lexicographic order of the sorted member lists, for sets of equal size:
  // the set holding the smallest element of the symmetric difference is less.
  bool lex_less(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace divgraph

#endif  // DIVGRAPH_ELEMENT_SET_HPP
