#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace sigmalab {

/// Exact fraction with arbitrary-precision numerator and denominator.
/// Always stored reduced, denominator positive.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long value) : v_(static_cast<long>(value)) {}
    Rational(long long num, long long den);

    /// Parses "p" or "p/q" (q != 0). Throws std::invalid_argument otherwise.
    static Rational from_string(const std::string& text);

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    double to_double() const { return v_.get_d(); }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    const mpq_class& raw() const { return v_; }
    static Rational from_raw(mpq_class q) { return Rational(std::move(q)); }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

}  // namespace sigmalab
