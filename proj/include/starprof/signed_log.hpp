#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace starprof {

/// A real number stored as sign * exp(log_mag), for spectral sums whose
/// individual factors (dimensions, eigenvalue powers) leave double range.
class SignedLogReal {
public:
    /// Opposite-signed operands whose log magnitudes agree this closely cancel to 0.
    static constexpr double kCancelTolerance = 1e-13;

    constexpr SignedLogReal() = default;

    static constexpr SignedLogReal zero() { return {}; }
    static constexpr SignedLogReal one() { return from_log(1, 0.0); }
    static constexpr SignedLogReal from_log(int sign, double log_mag) {
        SignedLogReal r;
        r.sign_ = sign > 0 ? 1 : (sign < 0 ? -1 : 0);
        r.log_mag_ = r.sign_ == 0 ? -std::numeric_limits<double>::infinity() : log_mag;
        return r;
    }
    static SignedLogReal from_double(double x);

    int sign() const noexcept { return sign_; }
    /// -inf for zero.
    double log_mag() const noexcept { return log_mag_; }
    bool is_zero() const noexcept { return sign_ == 0; }

    double to_double() const noexcept { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_mag_); }

    /// x^t for t >= 0 with 0^0 = 1; the sign follows the parity of t.
    SignedLogReal pow(long long t) const;
    SignedLogReal abs() const noexcept { return from_log(sign_ == 0 ? 0 : 1, log_mag_); }

    SignedLogReal operator-() const noexcept { return from_log(-sign_, log_mag_); }
    friend SignedLogReal operator*(SignedLogReal a, SignedLogReal b) noexcept {
        return from_log(a.sign_ * b.sign_, a.log_mag_ + b.log_mag_);
    }
    friend SignedLogReal operator/(SignedLogReal a, SignedLogReal b);
    friend SignedLogReal operator+(SignedLogReal a, SignedLogReal b) noexcept;
    friend SignedLogReal operator-(SignedLogReal a, SignedLogReal b) noexcept { return a + (-b); }

private:
    int sign_ = 0;
    double log_mag_ = -std::numeric_limits<double>::infinity();
};

/// Streaming log(sum exp(x_i)) with a running maximum; -inf when nothing was added.
class LogSumAccumulator {
public:
    void add(double log_value) noexcept;
    void merge(const LogSumAccumulator& other) noexcept;
    double log_sum() const noexcept;
    double value() const noexcept { return std::exp(log_sum()); }

private:
    double max_ = -std::numeric_limits<double>::infinity();
    double scaled_sum_ = 0.0;  // sum of exp(x_i - max_)
};

double log_sum_exp(std::span<const double> xs) noexcept;

}  // namespace starprof
