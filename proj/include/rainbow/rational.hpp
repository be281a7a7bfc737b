#ifndef RAINBOW_RATIONAL_HPP
#define RAINBOW_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rainbow {

// Exact rational with arbitrary-precision integer parts, always normalized
// (gcd 1, positive denominator). Thin value wrapper over GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long num, long long den = 1) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& raw() const { return q_; }
    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }
    double to_double() const { return q_.get_d(); }
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational reciprocal() const {
        if (q_ == 0) throw std::domain_error("reciprocal of zero");
        return Rational(mpq_class(1) / q_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.q_ == 0) throw std::domain_error("division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

}  // namespace rainbow

#endif
