#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dircuts {

// Minimal arbitrary-precision unsigned integer: just what the combinatorial
// bound formulas need (add, multiply, compare, print).  Limbs are base 10^9,
// least significant first.
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t value);  // NOLINT: implicit by design

    BigUint& operator+=(const BigUint& rhs);
    BigUint operator+(const BigUint& rhs) const;
    // Subtraction requires *this >= rhs (unsigned type); errors otherwise.
    BigUint& operator-=(const BigUint& rhs);
    BigUint operator-(const BigUint& rhs) const;
    BigUint operator*(const BigUint& rhs) const;
    BigUint& operator*=(const BigUint& rhs);

    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }
    bool operator<(const BigUint& rhs) const;
    bool operator<=(const BigUint& rhs) const { return *this < rhs || *this == rhs; }

    bool is_zero() const { return limbs_.empty(); }
    // Exact value if it fits in 64 bits, otherwise nullopt-like flag via ok.
    bool fits_u64(std::uint64_t& out) const;

    std::string to_string() const;

  private:
    std::vector<std::uint32_t> limbs_;
    void trim();
};

BigUint big_pow(BigUint base, unsigned exp);

}  // namespace dircuts
