#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "posetdim/errors.hpp"

namespace posetdim {

/** Fixed-capacity bitset over 64-bit words; capacity chosen at construction. */
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  int capacity() const { return n_; }

  bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool is_subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool operator==(const Bits&) const = default;

  /** Calls f(i) for each set bit, ascending. */
  template <typename F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(k * 64) + b);
        w &= w - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/** Wall-clock budget for the exhaustive solvers. Default 60 s. */
class Budget {
 public:
  explicit Budget(double seconds = 60.0)
      : deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds))) {}

  bool expired() const { return std::chrono::steady_clock::now() > deadline_; }

  void check(const char* what) const {
    if (expired()) throw Timeout(std::string(what) + ": wall-clock budget exceeded");
  }

 private:
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace posetdim
