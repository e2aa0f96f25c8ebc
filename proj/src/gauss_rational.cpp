#include "gwkit/gauss_rational.hpp"

#include <stdexcept>

namespace gwkit {

mpq_class rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpz_class factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpq_class pow_rat(const mpq_class& base, long e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("pow_rat: zero base with negative exponent");
        return 0;
    }
    mpq_class b = e < 0 ? mpq_class(1 / base) : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpq_class acc = 1;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    *this = *this * o;
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    *this = *this / o;
    return *this;
}

GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }

GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }

GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

GaussRat inverse(const GaussRat& a) {
    if (a.is_zero()) throw std::domain_error("GaussRat: division by zero");
    mpq_class n = a.norm();
    return GaussRat(a.re / n, -a.im / n);
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * inverse(b); }

bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

GaussRat pow(const GaussRat& base, long e) {
    if (e == 0) return GaussRat(1L);
    GaussRat b = e < 0 ? inverse(base) : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    GaussRat acc(1L);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

GaussRat i_power(long k) {
    long r = ((k % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussRat(1L);
        case 1: return GaussRat::i();
        case 2: return GaussRat(-1L);
        default: return GaussRat(mpq_class(0), mpq_class(-1));
    }
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string to_string(const GaussRat& g) {
    auto imag_str = [](const mpq_class& v) {
        mpz_class num = v.get_num(), den = v.get_den();
        std::string s;
        if (num == 1) s = "i";
        else if (num == -1) s = "-i";
        else s = num.get_str() + "i";
        if (den != 1) s += "/" + den.get_str();
        return s;
    };
    if (g.im == 0) return g.re.get_str();
    if (g.re == 0) return imag_str(g.im);
    std::string s = g.re.get_str();
    if (g.im > 0) s += "+";
    return s + imag_str(g.im);
}

} // namespace gwkit
