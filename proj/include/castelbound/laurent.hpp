// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <map>

#include "castelbound/rat.hpp"

namespace castelbound::gvseries {

using numerics::rat;

/// Truncated Laurent series in q with rational coefficients. Coefficients
/// are exact for all exponents <= trunc_above; anything above that bound
/// is unknown (clipped). A value of no_trunc means the series is known in
/// full. There is never clipping from below: supports are bounded below
/// by construction and tracked exactly.
class laurent_q {
public:
    static constexpr long long no_trunc = std::numeric_limits<long long>::max();

    laurent_q() = default;
    explicit laurent_q(rat constant);

    static laurent_q monomial(long long exponent, rat coeff);

    const std::map<long long, rat>& coeffs() const { return coeffs_; }
    long long trunc_above() const { return trunc_above_; }
    bool clipped() const { return trunc_above_ != no_trunc; }

    rat coeff(long long exponent) const; // throws above trunc_above
    bool is_zero() const { return coeffs_.empty(); }
    long long min_exponent() const; // requires !is_zero()
    long long max_exponent() const;

    void set_coeff(long long exponent, rat value);
    void truncate(long long bound);

    friend laurent_q operator+(const laurent_q& a, const laurent_q& b);
    friend laurent_q operator-(const laurent_q& a, const laurent_q& b);
    friend laurent_q operator*(const laurent_q& a, const laurent_q& b);
    laurent_q scaled(const rat& c) const;

    laurent_q& operator+=(const laurent_q& o) { return *this = *this + o; }
    laurent_q& operator-=(const laurent_q& o) { return *this = *this - o; }

    friend bool operator==(const laurent_q& a, const laurent_q& b) {
        return a.coeffs_ == b.coeffs_ && a.trunc_above_ == b.trunc_above_;
    }

    /// Restriction to [lo, hi]; reports whether data outside the window
    /// (actual support or clipped tail) was cut away.
    laurent_q clip(long long lo, long long hi, bool* clipped_out = nullptr) const;

    /// True iff every stored coefficient vanishes at exponents <= bound.
    bool vanishes_up_to(long long bound) const;

private:
    std::map<long long, rat> coeffs_; // nonzero entries only
    long long trunc_above_ = no_trunc;
    void prune();
};

} // namespace castelbound::gvseries
