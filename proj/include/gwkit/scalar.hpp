#pragma once

#include "gwkit/poly.hpp"

namespace gwkit {

// Rational function in t1, t2 over Q(i), kept in canonical reduced form:
// gcd(num, den) = 1 and den has lex-leading coefficient 1. Zero is 0/1.
class Scalar {
public:
    Scalar() : num_(), den_(GaussRat(1L)) {}
    Scalar(long n) : num_(GaussRat(n)), den_(GaussRat(1L)) {}
    Scalar(const mpz_class& n) : num_(GaussRat(n)), den_(GaussRat(1L)) {}
    Scalar(const mpq_class& q) : num_(GaussRat(q)), den_(GaussRat(1L)) {}
    Scalar(GaussRat g) : num_(std::move(g)), den_(GaussRat(1L)) {}
    explicit Scalar(Poly2 p) : num_(std::move(p)), den_(GaussRat(1L)) {}
    Scalar(Poly2 num, Poly2 den);

    static Scalar t1() { return Scalar(Poly2::t1()); }
    static Scalar t2() { return Scalar(Poly2::t2()); }
    static Scalar i() { return Scalar(GaussRat::i()); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussRat constant_value() const;
    mpq_class rational_value() const;

    bool divisible_by(const Poly2& p) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

private:
    Poly2 num_, den_;
    void reduce();
    bool both_constant(const Scalar& o) const;
    void set_constant(GaussRat v);
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);
bool operator==(const Scalar& a, const Scalar& b);
bool operator!=(const Scalar& a, const Scalar& b);

Scalar inverse(const Scalar& a);
Scalar pow(const Scalar& base, long e);

} // namespace gwkit
