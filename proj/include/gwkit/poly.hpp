#pragma once

#include "gwkit/gauss_rational.hpp"

#include <map>
#include <utility>

namespace gwkit {

// Sparse polynomial in t1, t2 over GaussRat. Zero coefficients are never stored;
// the zero polynomial has an empty term map. Term order is lex on (e1, e2).
class Poly2 {
public:
    using Key = std::pair<int, int>;

    Poly2() = default;
    explicit Poly2(GaussRat c);
    explicit Poly2(long c) : Poly2(GaussRat(c)) {}

    static Poly2 t1();
    static Poly2 t2();
    static Poly2 monomial(int e1, int e2, GaussRat c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_value() const;
    int deg1() const;
    int deg2() const;
    Key leading_key() const;
    GaussRat leading_coeff() const;
    GaussRat coeff(int e1, int e2) const;
    const std::map<Key, GaussRat>& terms() const { return terms_; }

    void add_term(int e1, int e2, const GaussRat& c);

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const Poly2& o);
    Poly2 operator-() const;

private:
    std::map<Key, GaussRat> terms_;
};

Poly2 operator+(Poly2 a, const Poly2& b);
Poly2 operator-(Poly2 a, const Poly2& b);
Poly2 operator*(const Poly2& a, const Poly2& b);
Poly2 operator*(const Poly2& a, const GaussRat& c);
bool operator==(const Poly2& a, const Poly2& b);
bool operator!=(const Poly2& a, const Poly2& b);

// Exact quotient; throws std::domain_error if b does not divide a.
Poly2 divide_exact(const Poly2& a, const Poly2& b);

// Gcd over Q(i)[t1,t2], normalized with lex-leading coefficient 1. gcd(0,0) = 0.
Poly2 gcd(const Poly2& a, const Poly2& b);

bool divides(const Poly2& d, const Poly2& a);

} // namespace gwkit
