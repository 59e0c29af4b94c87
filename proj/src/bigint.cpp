// SPDX-License-Identifier: Apache-2.0

#include "castelbound/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace castelbound::numerics {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

big_int::big_int(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? -(unsigned long long)v : (unsigned long long)v;
    while (m != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

big_int::big_int(std::string_view s) { *this = from_string(s); }

big_int big_int::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("big_int: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("big_int: no digits");
    big_int r;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("big_int: bad digit");
        r = r * big_int(10) + big_int(c - '0');
    }
    if (neg) r = -r;
    return r;
}

std::string big_int::to_string() const {
    if (is_zero()) return "0";
    // Repeatedly divide the magnitude by 1e9 and print chunks.
    std::vector<std::uint32_t> mag = limbs_;
    std::string out;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        std::string chunk = std::to_string(rem);
        if (!mag.empty())
            chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    if (sign_ < 0) out.insert(0, 1, '-');
    return out;
}

bool big_int::is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

bool big_int::is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

bool big_int::fits_i64() const {
    if (limbs_.size() > 2) return false;
    unsigned __int128 m = to_u128_mag();
    if (sign_ >= 0) return m <= (unsigned __int128)INT64_MAX;
    return m <= (unsigned __int128)INT64_MAX + 1;
}

long long big_int::to_i64() const {
    if (!fits_i64()) throw std::overflow_error("big_int: value exceeds 64 bits");
    unsigned __int128 m = to_u128_mag();
    return sign_ < 0 ? -(long long)m : (long long)m;
}

unsigned __int128 big_int::to_u128_mag() const {
    unsigned __int128 m = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    return m;
}

big_int big_int::from_u128_mag(unsigned __int128 v, int sign) {
    big_int r;
    while (v != 0) {
        r.limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
    r.sign_ = r.limbs_.empty() ? 0 : sign;
    return r;
}

big_int big_int::from_i128(__int128 v) {
    if (v >= 0) return from_u128_mag((unsigned __int128)v, 1);
    return from_u128_mag(-(unsigned __int128)v, -1);
}

void big_int::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

big_int big_int::from_mag(std::vector<std::uint32_t> limbs, int sign) {
    big_int r;
    r.limbs_ = std::move(limbs);
    r.sign_ = sign;
    r.trim();
    return r;
}

big_int big_int::operator-() const {
    big_int r = *this;
    r.sign_ = -r.sign_;
    return r;
}

big_int big_int::abs() const {
    big_int r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int big_int::cmp_mag(const big_int& a, const big_int& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

bool operator==(const big_int& a, const big_int& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const big_int& a, const big_int& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int m = big_int::cmp_mag(a, b);
    if (a.sign_ >= 0) return m <=> 0;
    return 0 <=> m;
}

std::vector<std::uint32_t> big_int::add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
        r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    return r;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> big_int::sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = (std::int64_t)a[i] - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (std::int64_t)kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

std::vector<std::uint32_t> big_int::mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + (std::uint64_t)a[i] * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    return r;
}

big_int operator+(const big_int& a, const big_int& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.fits_u128_mag() && b.fits_u128_mag() && a.limbs_.size() <= 3 && b.limbs_.size() <= 3) {
        __int128 x = a.sign_ * (__int128)a.to_u128_mag();
        __int128 y = b.sign_ * (__int128)b.to_u128_mag();
        return big_int::from_i128(x + y);
    }
    if (a.sign_ == b.sign_)
        return big_int::from_mag(big_int::add_mag(a.limbs_, b.limbs_), a.sign_);
    int c = big_int::cmp_mag(a, b);
    if (c == 0) return big_int();
    if (c > 0) return big_int::from_mag(big_int::sub_mag(a.limbs_, b.limbs_), a.sign_);
    return big_int::from_mag(big_int::sub_mag(b.limbs_, a.limbs_), b.sign_);
}

big_int operator-(const big_int& a, const big_int& b) { return a + (-b); }

big_int operator*(const big_int& a, const big_int& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return big_int();
    if (a.limbs_.size() + b.limbs_.size() <= 4) {
        unsigned __int128 m = (unsigned __int128)a.to_u128_mag() * b.to_u128_mag();
        return big_int::from_u128_mag(m, a.sign_ * b.sign_);
    }
    return big_int::from_mag(big_int::mul_mag(a.limbs_, b.limbs_), a.sign_ * b.sign_);
}

// Shift-subtract long division on magnitudes; operands here are at most a
// few limbs so the O(bits) loop is plenty.
void big_int::divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r) {
    big_int A = from_mag(a, 1), B = from_mag(b, 1);
    std::size_t abits = A.bit_length(), bbits = B.bit_length();
    big_int Q, R;
    if (abits >= bbits) {
        R = A;
        std::size_t shift = abits - bbits;
        // D = B << shift via limb/bit construction
        auto shl = [](const big_int& x, std::size_t s) {
            big_int y = x;
            std::size_t words = s / 32, bits = s % 32;
            if (bits != 0) {
                std::uint32_t carry = 0;
                for (auto& l : y.limbs_) {
                    std::uint64_t cur = ((std::uint64_t)l << bits) | carry;
                    l = static_cast<std::uint32_t>(cur & 0xffffffffu);
                    carry = static_cast<std::uint32_t>(cur >> 32);
                }
                if (carry) y.limbs_.push_back(carry);
            }
            y.limbs_.insert(y.limbs_.begin(), words, 0u);
            y.trim();
            return y;
        };
        big_int D = shl(B, shift);
        std::vector<std::uint32_t> qbits((shift + 32) / 32 + 1, 0);
        for (std::size_t i = shift + 1; i-- > 0;) {
            if (cmp_mag(R, D) >= 0) {
                R = from_mag(sub_mag(R.limbs_, D.limbs_), R.is_zero() ? 0 : 1);
                qbits[i / 32] |= (1u << (i % 32));
            }
            // D >>= 1
            std::uint32_t carry = 0;
            for (std::size_t j = D.limbs_.size(); j-- > 0;) {
                std::uint32_t cur = D.limbs_[j];
                D.limbs_[j] = (cur >> 1) | (carry << 31);
                carry = cur & 1u;
            }
            D.trim();
        }
        Q = from_mag(std::move(qbits), 1);
        if (R.sign_ == 0) R.limbs_.clear();
    } else {
        R = A;
    }
    q = Q.limbs_;
    r = R.limbs_;
}

void divmod(const big_int& a, const big_int& b, big_int& q, big_int& r) {
    if (b.is_zero()) throw std::domain_error("big_int: division by zero");
    if (a.is_zero()) {
        q = big_int();
        r = big_int();
        return;
    }
    if (a.fits_u128_mag() && b.fits_u128_mag()) {
        unsigned __int128 am = a.to_u128_mag(), bm = b.to_u128_mag();
        q = big_int::from_u128_mag(am / bm, a.sign_ * b.sign_);
        r = big_int::from_u128_mag(am % bm, a.sign_);
        return;
    }
    std::vector<std::uint32_t> qm, rm;
    big_int::divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q = big_int::from_mag(std::move(qm), a.sign_ * b.sign_);
    r = big_int::from_mag(std::move(rm), a.sign_);
}

big_int operator/(const big_int& a, const big_int& b) {
    big_int q, r;
    divmod(a, b, q, r);
    return q;
}

big_int operator%(const big_int& a, const big_int& b) {
    big_int q, r;
    divmod(a, b, q, r);
    return r;
}

big_int gcd(big_int a, big_int b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        big_int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::size_t big_int::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

big_int isqrt(const big_int& n) {
    if (n.is_negative()) throw std::domain_error("isqrt: negative argument");
    if (n.is_zero()) return big_int();
    std::size_t bits = n.bit_length();
    // Initial guess: 2^ceil(bits/2) >= sqrt(n).
    big_int x(1);
    for (std::size_t i = 0; i < (bits + 1) / 2; ++i) x = x * big_int(2);
    while (true) {
        big_int y = (x + n / x) / big_int(2);
        if (!(y < x)) break;
        x = y;
    }
    // Settle exactly.
    while (x * x > n) x = x - big_int(1);
    while ((x + big_int(1)) * (x + big_int(1)) <= n) x = x + big_int(1);
    return x;
}

bool big_int::is_perfect_square() const {
    if (is_negative()) return false;
    big_int s = isqrt(*this);
    return s * s == *this;
}

big_int big_int::pow(unsigned e) const {
    big_int r(1), b = *this;
    while (e != 0) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

} // namespace castelbound::numerics
