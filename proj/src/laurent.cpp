// SPDX-License-Identifier: Apache-2.0

#include "castelbound/laurent.hpp"

#include <algorithm>

#include "castelbound/errors.hpp"

namespace castelbound::gvseries {

laurent_q::laurent_q(rat constant) {
    if (!constant.is_zero()) coeffs_.emplace(0, std::move(constant));
}

laurent_q laurent_q::monomial(long long exponent, rat coeff) {
    laurent_q r;
    if (!coeff.is_zero()) r.coeffs_.emplace(exponent, std::move(coeff));
    return r;
}

rat laurent_q::coeff(long long exponent) const {
    if (exponent > trunc_above_)
        throw window_too_narrow_error("laurent_q: coefficient above the truncation bound");
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? rat(0) : it->second;
}

long long laurent_q::min_exponent() const {
    if (coeffs_.empty()) throw error("laurent_q: empty series has no support");
    return coeffs_.begin()->first;
}

long long laurent_q::max_exponent() const {
    if (coeffs_.empty()) throw error("laurent_q: empty series has no support");
    return coeffs_.rbegin()->first;
}

void laurent_q::set_coeff(long long exponent, rat value) {
    if (value.is_zero())
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = std::move(value);
}

void laurent_q::truncate(long long bound) {
    trunc_above_ = std::min(trunc_above_, bound);
    prune();
}

void laurent_q::prune() {
    if (trunc_above_ == no_trunc) return;
    auto it = coeffs_.upper_bound(trunc_above_);
    coeffs_.erase(it, coeffs_.end());
}

laurent_q operator+(const laurent_q& a, const laurent_q& b) {
    laurent_q r = a;
    r.trunc_above_ = std::min(a.trunc_above_, b.trunc_above_);
    for (const auto& [e, c] : b.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end())
            r.coeffs_.emplace(e, c);
        else {
            it->second += c;
            if (it->second.is_zero()) r.coeffs_.erase(it);
        }
    }
    r.prune();
    return r;
}

laurent_q operator-(const laurent_q& a, const laurent_q& b) {
    return a + b.scaled(rat(-1));
}

laurent_q operator*(const laurent_q& a, const laurent_q& b) {
    laurent_q r;
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        // Zero annihilates, including unknown tails.
        return r;
    }
    // Unknown tail of one factor contaminates exponents above
    // trunc(other) + min_exponent(this) and symmetrically.
    long long t = laurent_q::no_trunc;
    if (a.trunc_above_ != laurent_q::no_trunc)
        t = std::min(t, a.trunc_above_ + b.min_exponent());
    if (b.trunc_above_ != laurent_q::no_trunc)
        t = std::min(t, b.trunc_above_ + a.min_exponent());
    r.trunc_above_ = t;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            long long e = ea + eb;
            if (e > t) continue;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end())
                r.coeffs_.emplace(e, ca * cb);
            else {
                it->second += ca * cb;
            }
        }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
        it = it->second.is_zero() ? r.coeffs_.erase(it) : std::next(it);
    return r;
}

laurent_q laurent_q::scaled(const rat& c) const {
    laurent_q r;
    r.trunc_above_ = trunc_above_;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
    return r;
}

laurent_q laurent_q::clip(long long lo, long long hi, bool* clipped_out) const {
    laurent_q r;
    bool cut = trunc_above_ < hi;
    for (const auto& [e, c] : coeffs_) {
        if (e < lo || e > hi)
            cut = true;
        else
            r.coeffs_.emplace(e, c);
    }
    r.trunc_above_ = std::min(trunc_above_, hi);
    if (clipped_out) *clipped_out = cut;
    return r;
}

bool laurent_q::vanishes_up_to(long long bound) const {
    for (const auto& [e, c] : coeffs_) {
        if (e > bound) break;
        if (!c.is_zero()) return false;
    }
    return true;
}

} // namespace castelbound::gvseries
