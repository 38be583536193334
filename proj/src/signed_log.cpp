#include "starprof/signed_log.hpp"

#include "starprof/error.hpp"

namespace starprof {

SignedLogReal SignedLogReal::from_double(double x) {
    if (x == 0.0) return zero();
    if (!std::isfinite(x)) throw DomainError("SignedLogReal::from_double: non-finite input");
    return from_log(x > 0.0 ? 1 : -1, std::log(std::fabs(x)));
}

SignedLogReal SignedLogReal::pow(long long t) const {
    if (t < 0) throw DomainError("SignedLogReal::pow: negative exponent");
    if (t == 0) return one();
    if (sign_ == 0) return zero();
    const int s = (sign_ < 0 && (t & 1)) ? -1 : 1;
    return from_log(s, static_cast<double>(t) * log_mag_);
}

SignedLogReal operator/(SignedLogReal a, SignedLogReal b) {
    if (b.sign_ == 0) throw DomainError("SignedLogReal: division by zero");
    return SignedLogReal::from_log(a.sign_ * b.sign_, a.log_mag_ - b.log_mag_);
}

SignedLogReal operator+(SignedLogReal a, SignedLogReal b) noexcept {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.log_mag_ < b.log_mag_) std::swap(a, b);
    const double gap = a.log_mag_ - b.log_mag_;  // >= 0
    if (a.sign_ == b.sign_) return SignedLogReal::from_log(a.sign_, a.log_mag_ + std::log1p(std::exp(-gap)));
    if (gap < SignedLogReal::kCancelTolerance) return SignedLogReal::zero();
    return SignedLogReal::from_log(a.sign_, a.log_mag_ + std::log(-std::expm1(-gap)));
}

void LogSumAccumulator::add(double log_value) noexcept {
    if (log_value == -std::numeric_limits<double>::infinity()) return;
    if (log_value <= max_) {
        scaled_sum_ += std::exp(log_value - max_);
    } else {
        scaled_sum_ = scaled_sum_ * std::exp(max_ - log_value) + 1.0;
        max_ = log_value;
    }
}

void LogSumAccumulator::merge(const LogSumAccumulator& other) noexcept {
    if (other.scaled_sum_ == 0.0) return;
    if (scaled_sum_ == 0.0) {
        *this = other;
        return;
    }
    if (other.max_ <= max_) {
        scaled_sum_ += other.scaled_sum_ * std::exp(other.max_ - max_);
    } else {
        scaled_sum_ = scaled_sum_ * std::exp(max_ - other.max_) + other.scaled_sum_;
        max_ = other.max_;
    }
}

double LogSumAccumulator::log_sum() const noexcept {
    if (scaled_sum_ == 0.0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(scaled_sum_);
}

double log_sum_exp(std::span<const double> xs) noexcept {
    LogSumAccumulator acc;
    for (double x : xs) acc.add(x);
    return acc.log_sum();
}

}  // namespace starprof
