#pragma once

#include <gmpxx.h>
#include <string>

namespace gwkit {

mpq_class rat(long num, long den = 1);
mpq_class rat(const mpz_class& num, const mpz_class& den);
mpz_class factorial(long n);
mpz_class binomial(long n, long k);
mpq_class pow_rat(const mpq_class& base, long e);

// Element of Q(i): re + im*i with exact rational parts.
struct GaussRat {
    mpq_class re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long n) : re(n), im(0) {}
    GaussRat(const mpz_class& n) : re(n), im(0) {}
    GaussRat(mpq_class r) : re(std::move(r)), im(0) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return GaussRat(re, -im); }
    mpq_class norm() const { return re * re + im * im; }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);
};

GaussRat operator-(const GaussRat& a);
GaussRat operator+(GaussRat a, const GaussRat& b);
GaussRat operator-(GaussRat a, const GaussRat& b);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);
bool operator==(const GaussRat& a, const GaussRat& b);
bool operator!=(const GaussRat& a, const GaussRat& b);

GaussRat inverse(const GaussRat& a);
GaussRat pow(const GaussRat& base, long e);

// i^k for integer k (period 4, negative k allowed).
GaussRat i_power(long k);

std::string to_string(const mpq_class& q);
std::string to_string(const GaussRat& g);

} // namespace gwkit
