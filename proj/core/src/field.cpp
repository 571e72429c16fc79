#include "dirseq/field.hpp"

#include <cmath>
#include <sstream>

namespace dirseq {

int sign_of(const Rational& q) { return q == 0 ? 0 : (q > 0 ? 1 : -1); }

FieldScalar::FieldScalar(Rational a, Rational b, int disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(disc) {
    if (disc_ != 1 && disc_ != 2 && disc_ != 5)
        fail("InvalidParams", "discriminant must be 1, 2 or 5");
    if (disc_ == 1 && b_ != 0)
        fail("InvalidParams", "sqrt coefficient must vanish when disc = 1");
}

int FieldScalar::unify_disc(const FieldScalar& x, const FieldScalar& y) {
    if (x.b_ == 0) return y.disc_;
    if (y.b_ == 0) return x.disc_;
    if (x.disc_ != y.disc_)
        fail("MixedDiscriminants", "cannot combine sqrt(" + std::to_string(x.disc_) +
                                       ") with sqrt(" + std::to_string(y.disc_) + ")");
    return x.disc_;
}

int FieldScalar::sign() const {
    const int sa = sign_of(a_);
    const int sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 * disc.  Equality would make
    // sqrt(disc) rational, impossible for disc in {2, 5}.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * disc_;
    if (lhs == rhs)
        fail("InternalInconsistency", "a^2 == b^2 * disc with nonzero a, b");
    return lhs > rhs ? sa : sb;
}

double FieldScalar::to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(disc_));
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    disc_ = unify_disc(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    disc_ = unify_disc(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
    const int disc = unify_disc(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * disc;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    disc_ = disc;
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
    if (o.is_zero()) fail("DivisionByZero", "division by zero field scalar");
    const int disc = unify_disc(*this, o);
    // Multiply by the conjugate of the divisor; its norm is rational.
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * disc;
    if (norm == 0) fail("InternalInconsistency", "nonzero scalar with zero norm");
    Rational a = (a_ * o.a_ - b_ * o.b_ * disc) / norm;
    Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = std::move(a);
    b_ = std::move(b);
    disc_ = disc;
    return *this;
}

std::string FieldScalar::to_string() const {
    std::ostringstream os;
    os << a_;
    if (b_ != 0) os << (b_ > 0 ? " + " : " - ") << boost::multiprecision::abs(b_) << "*sqrt(" << disc_ << ")";
    return os.str();
}

FieldScalar FieldScalar::golden() {
    return FieldScalar(Rational(1, 2), Rational(1, 2), 5);
}

FieldScalar FieldScalar::sqrt_of(int disc) {
    return FieldScalar(Rational(0), Rational(1), disc);
}

}  // namespace dirseq
