#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkforge {

/// A concrete prime characteristic, validated at construction.
class Prime {
 public:
  explicit Prime(long p) : p_(p) {
    if (p < 2 || !is_prime(p))
      throw std::invalid_argument("not a prime: " + std::to_string(p));
  }

  long value() const { return p_; }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

  static bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  long p_;
};

}  // namespace hkforge
