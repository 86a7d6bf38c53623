#pragma once

/**
 * @file extnat.hpp
 * @brief Arithmetic in the extended natural numbers N0* = N0 u {inf}.
 *
 * N0* is the coefficient semiring for all genus computations: addition
 * extends integer addition with x + inf = inf + x = inf, multiplication
 * extends integer multiplication with x * inf = inf * x = inf for x != 0
 * and 0 * inf = inf * 0 = 0.
 *
 * Finite values are arbitrary-precision non-negative integers.  Values are
 * immutable once constructed and safe to share between threads.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace projgenus {

/// Exact integer type used throughout the library.
using Int = boost::multiprecision::cpp_int;

class ExtNat {
public:
    /// Zero.
    ExtNat() = default;

    /// Finite value; throws std::invalid_argument on negative input.
    ExtNat(Int v) : value_(std::move(v)) {
        if (*value_ < 0) {
            throw std::invalid_argument("ExtNat: negative value");
        }
    }

    ExtNat(long long v) : ExtNat(Int(v)) {}
    ExtNat(int v) : ExtNat(Int(v)) {}

    /// The unique representation of the absorbing element.
    static ExtNat inf() {
        ExtNat x;
        x.value_.reset();
        return x;
    }

    [[nodiscard]] bool is_finite() const { return value_.has_value(); }
    [[nodiscard]] bool is_inf() const { return !value_.has_value(); }

    /// Finite value; throws std::logic_error when called on inf.
    [[nodiscard]] const Int& finite() const {
        if (!value_) {
            throw std::logic_error("ExtNat: finite() on inf");
        }
        return *value_;
    }

    friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
        if (a.is_inf() || b.is_inf()) {
            return inf();
        }
        return ExtNat(*a.value_ + *b.value_);
    }

    friend ExtNat operator*(const ExtNat& a, const ExtNat& b) {
        // 0 * inf = inf * 0 = 0
        if (a.is_finite() && *a.value_ == 0) return ExtNat(0);
        if (b.is_finite() && *b.value_ == 0) return ExtNat(0);
        if (a.is_inf() || b.is_inf()) return inf();
        return ExtNat(*a.value_ * *b.value_);
    }

    ExtNat& operator+=(const ExtNat& rhs) { return *this = *this + rhs; }
    ExtNat& operator*=(const ExtNat& rhs) { return *this = *this * rhs; }

    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        return a.value_ == b.value_;
    }

    /// Total order with every finite value below inf.
    friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
        if (a.is_inf() && b.is_inf()) return std::strong_ordering::equal;
        if (a.is_inf()) return std::strong_ordering::greater;
        if (b.is_inf()) return std::strong_ordering::less;
        if (*a.value_ < *b.value_) return std::strong_ordering::less;
        if (*a.value_ > *b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Serialization: "inf" or the decimal digits.
    [[nodiscard]] std::string str() const {
        return value_ ? value_->str() : std::string("inf");
    }

    /// Inverse of str(); empty optional on malformed input.
    static std::optional<ExtNat> parse(std::string_view s) {
        if (s == "inf") return inf();
        if (s.empty()) return std::nullopt;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
        }
        return ExtNat(Int(std::string(s)));
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtNat& x) {
        return os << x.str();
    }

private:
    std::optional<Int> value_ = Int(0);  // nullopt encodes inf
};

/// Sum of coeffs[j] * vec[j] in N0*; the empty sum is 0.
/// Coefficients must be finite and positive; lengths must agree.
inline ExtNat dot(const std::vector<Int>& coeffs, const std::vector<ExtNat>& vec) {
    if (coeffs.size() != vec.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    ExtNat acc(0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] <= 0) {
            throw std::invalid_argument("dot: coefficients must be positive");
        }
        acc += ExtNat(coeffs[j]) * vec[j];
    }
    return acc;
}

}  // namespace projgenus
