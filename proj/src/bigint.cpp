#include "dircuts/bigint.hpp"

#include <algorithm>

#include "dircuts/errors.hpp"

namespace dircuts {

namespace {
constexpr std::uint64_t kBase = 1000000000ULL;
}

BigUint::BigUint(std::uint64_t value) {
    while (value > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
        value /= kBase;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    std::uint64_t carry = 0;
    std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(sum % kBase);
        carry = sum / kBase;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
    BigUint out = *this;
    out += rhs;
    return out;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    if (*this < rhs) throw InputError("BigUint subtraction would underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                           (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    trim();
    return *this;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
    BigUint out = *this;
    out -= rhs;
    return out;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
    BigUint out;
    if (limbs_.empty() || rhs.limbs_.empty()) return out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size() || carry; ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry;
            if (j < rhs.limbs_.size())
                cur += static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    out.trim();
    return out;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
}

bool BigUint::operator<(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i];
    }
    return false;
}

bool BigUint::fits_u64(std::uint64_t& out) const {
    // 3 limbs can exceed 2^64; check by reconstructing carefully.
    if (limbs_.size() > 3) return false;
    std::uint64_t value = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (value > (~0ULL - limbs_[i]) / kBase) return false;
        value = value * kBase + limbs_[i];
    }
    out = value;
    return true;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigUint big_pow(BigUint base, unsigned exp) {
    BigUint out(1);
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace dircuts
