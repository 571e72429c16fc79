#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "dirseq/error.hpp"

namespace dirseq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

int sign_of(const Rational& q);

// Exact element a + b*sqrt(disc) of a real quadratic field, disc in {1,2,5}.
// disc == 1 forces b == 0 (plain rationals).  Arithmetic stays inside one
// field; mixing distinct discriminants is an error unless one operand is
// rational (b == 0).
class FieldScalar {
public:
    FieldScalar() = default;
    FieldScalar(long long value) : a_(value) {}
    FieldScalar(Rational a) : a_(std::move(a)) {}
    FieldScalar(Rational a, Rational b, int disc);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    int disc() const { return disc_; }
    bool is_rational() const { return b_ == 0; }

    int sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    double to_double() const;

    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);

    friend FieldScalar operator+(FieldScalar x, const FieldScalar& y) { return x += y; }
    friend FieldScalar operator-(FieldScalar x, const FieldScalar& y) { return x -= y; }
    friend FieldScalar operator*(FieldScalar x, const FieldScalar& y) { return x *= y; }
    friend FieldScalar operator/(FieldScalar x, const FieldScalar& y) { return x /= y; }

    friend bool operator==(const FieldScalar& x, const FieldScalar& y) {
        return (x - y).is_zero();
    }
    friend bool operator!=(const FieldScalar& x, const FieldScalar& y) { return !(x == y); }
    friend bool operator<(const FieldScalar& x, const FieldScalar& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const FieldScalar& x, const FieldScalar& y) { return y < x; }
    friend bool operator<=(const FieldScalar& x, const FieldScalar& y) { return !(y < x); }
    friend bool operator>=(const FieldScalar& x, const FieldScalar& y) { return !(x < y); }

    std::string to_string() const;

    // The golden ratio (1 + sqrt(5)) / 2.
    static FieldScalar golden();
    static FieldScalar sqrt_of(int disc);  // sqrt(2) or sqrt(5)

private:
    static int unify_disc(const FieldScalar& x, const FieldScalar& y);

    Rational a_ = 0;
    Rational b_ = 0;
    int disc_ = 1;
};

}  // namespace dirseq
