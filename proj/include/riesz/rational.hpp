#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace riesz {

/// Exact rational scalar. Always stored reduced with a positive
/// denominator; every arithmetic operation is exact. This is the only
/// scalar type in the library -- there is no floating-point path.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}
    Rational(Int num, Int den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        // the backend requires a positive denominator
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = Impl(std::move(num), std::move(den));
    }

    /// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
    static Rational parse(std::string_view s);

    /// Renders "p" or "p/q", reduced, sign on the numerator.
    std::string str() const;

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    using Impl = boost::multiprecision::cpp_rational;
    explicit Rational(Impl v) : v_(std::move(v)) {}
    Impl v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace riesz
