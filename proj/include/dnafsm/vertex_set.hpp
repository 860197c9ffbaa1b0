#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dnafsm {

/// Fixed-capacity bitset over vertex indices with allocation-free
/// intersection counting, used on the hot path of the independent-set search.
class VertexSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), blocks_((capacity + 63) / 64, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t i = 0; i < capacity; ++i) s.insert(i);
    return s;
  }

  std::size_t capacity() const noexcept { return capacity_; }

  void insert(std::size_t v) noexcept { blocks_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::size_t v) noexcept { blocks_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(std::size_t v) const noexcept {
    return (blocks_[v >> 6] >> (v & 63)) & 1;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
    return n;
  }
  bool empty() const noexcept {
    for (auto b : blocks_)
      if (b) return false;
    return true;
  }

  std::size_t count_common(const VertexSet& other) const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(blocks_[i] & other.blocks_[i]));
    return n;
  }
  bool intersects(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & other.blocks_[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    return *this;
  }
  /// this &= ~o
  VertexSet& subtract(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
    return *this;
  }

  std::size_t first() const noexcept { return next(0); }
  /// Smallest member >= from, or npos.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= capacity_) return npos;
    std::size_t i = from >> 6;
    std::uint64_t b = blocks_[i] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (b) return (i << 6) + static_cast<std::size_t>(std::countr_zero(b));
      if (++i == blocks_.size()) return npos;
      b = blocks_[i];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      std::uint64_t b = blocks_[i];
      while (b) {
        f((i << 6) + static_cast<std::size_t>(std::countr_zero(b)));
        b &= b - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace dnafsm
