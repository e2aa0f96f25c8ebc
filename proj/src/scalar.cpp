#include "gwkit/scalar.hpp"

#include <stdexcept>

namespace gwkit {

Scalar::Scalar(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = Poly2(GaussRat(1L));
        return;
    }
    Poly2 g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    GaussRat lc = inverse(den_.leading_coeff());
    num_ = num_ * lc;
    den_ = den_ * lc;
}

GaussRat Scalar::constant_value() const {
    if (!is_constant()) throw std::domain_error("Scalar: not a constant");
    if (num_.is_zero()) return GaussRat();
    GaussRat dv = den_.constant_value();
    if (dv.re == 1 && dv.im == 0) return num_.constant_value();
    return num_.constant_value() / dv;
}

mpq_class Scalar::rational_value() const {
    GaussRat g = constant_value();
    if (g.im != 0) throw std::domain_error("Scalar: not real");
    return g.re;
}

bool Scalar::divisible_by(const Poly2& p) const {
    if (num_.is_zero()) return true;
    return divides(p, num_) && gcd(p, den_).is_constant();
}

// Constants are canonically value/1, so field ops on two constants reduce to
// one GaussRat op; this keeps the representation reduce() would produce.
bool Scalar::both_constant(const Scalar& o) const {
    return num_.is_constant() && den_.is_constant() && o.num_.is_constant() &&
           o.den_.is_constant();
}

void Scalar::set_constant(GaussRat v) {
    num_ = Poly2(std::move(v));
    den_ = Poly2(GaussRat(1L));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (both_constant(o)) {
        set_constant(constant_value() + o.constant_value());
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (both_constant(o)) {
        set_constant(constant_value() - o.constant_value());
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (both_constant(o)) {
        set_constant(constant_value() * o.constant_value());
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (both_constant(o)) {
        set_constant(constant_value() / o.constant_value());
        return *this;
    }
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }

Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

bool operator==(const Scalar& a, const Scalar& b) {
    return a.num() == b.num() && a.den() == b.den();
}

bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

Scalar inverse(const Scalar& a) {
    if (a.is_zero()) throw std::domain_error("Scalar: division by zero");
    return Scalar(a.den(), a.num());
}

Scalar pow(const Scalar& base, long e) {
    if (e == 0) return Scalar(1L);
    Scalar b = e < 0 ? inverse(base) : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar acc(1L);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

} // namespace gwkit
