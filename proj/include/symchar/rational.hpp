#pragma once

// Exact rational arithmetic on arbitrary-precision integers.
// Invariants: always in lowest terms, denominator > 0, zero is 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symchar {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
    Rational(Integer n) : v_(std::move(n)) {}
    Rational(Integer num, Integer den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool isZero() const { return v_.is_zero(); }
    bool isInteger() const { return denominator() == 1; }

    // exact conversion; throws when non-integral or out of range
    std::int64_t toInt64() const {
        if (!isInteger()) throw std::invalid_argument("Rational: not an integer");
        Integer n = numerator();
        if (n > std::numeric_limits<std::int64_t>::max() ||
            n < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("Rational: out of int64 range");
        return n.convert_to<std::int64_t>();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "a" when integral, "a/b" otherwise.
    std::string toString() const {
        std::string s = numerator().str();
        if (!isInteger()) s += "/" + denominator().str();
        return s;
    }

    static Rational fromString(std::string_view sv) {
        auto slash = sv.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(Integer(std::string(sv)));
            return Rational(Integer(std::string(sv.substr(0, slash))),
                            Integer(std::string(sv.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(sv) + "'");
        }
    }

private:
    boost::multiprecision::cpp_rational v_;
};

}  // namespace symchar
