#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pizza/monomial.hpp"

namespace pizza {

/// Open-addressing hash map from Monomial to an accumulator value. Used on the
/// hot path where tens of millions of terms are folded together; entries are
/// never erased, zero values are filtered by the consumer.
template <class Value>
class MonomialMap {
 public:
  explicit MonomialMap(std::size_t expected = 16) { rehash(capacity_for(expected)); }

  Value& operator[](const Monomial& key) {
    if ((size_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    std::size_t i = key.hash() & mask_;
    while (true) {
      Slot& s = slots_[i];
      if (!s.used) {
        s.used = true;
        s.key = key;
        ++size_;
        return s.value;
      }
      if (s.key == key) return s.value;
      i = (i + 1) & mask_;
    }
  }

  std::size_t size() const { return size_; }

  template <class F>
  void for_each(F&& f) const {
    for (const Slot& s : slots_)
      if (s.used) f(s.key, s.value);
  }

  template <class F>
  void for_each(F&& f) {
    for (Slot& s : slots_)
      if (s.used) f(s.key, s.value);
  }

 private:
  struct Slot {
    Value value{};  // first, so a 16-byte-aligned value does not pad after the key
    Monomial key;
    bool used = false;
  };

 public:
  /// Bytes per slot; the table holds between 2x and 4x as many slots as keys.
  static constexpr std::size_t slot_bytes() { return sizeof(Slot); }

 private:

  static std::size_t capacity_for(std::size_t n) {
    std::size_t c = 16;
    while (c < 2 * n) c *= 2;
    return c;
  }

  void rehash(std::size_t capacity) {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(capacity, Slot{});
    mask_ = capacity - 1;
    size_ = 0;
    for (Slot& s : old) {
      if (!s.used) continue;
      std::size_t i = s.key.hash() & mask_;
      while (slots_[i].used) i = (i + 1) & mask_;
      slots_[i].used = true;
      slots_[i].key = s.key;
      slots_[i].value = std::move(s.value);
      ++size_;
    }
  }

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace pizza
