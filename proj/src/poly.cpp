#include "gwkit/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gwkit {

Poly2::Poly2(GaussRat c) {
    if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
}

Poly2 Poly2::t1() { return monomial(1, 0, GaussRat(1L)); }

Poly2 Poly2::t2() { return monomial(0, 1, GaussRat(1L)); }

Poly2 Poly2::monomial(int e1, int e2, GaussRat c) {
    Poly2 p;
    if (!c.is_zero()) p.terms_[{e1, e2}] = std::move(c);
    return p;
}

bool Poly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

GaussRat Poly2::constant_value() const {
    if (terms_.empty()) return GaussRat();
    if (!is_constant()) throw std::domain_error("Poly2: not a constant");
    return terms_.begin()->second;
}

int Poly2::deg1() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int Poly2::deg2() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

Poly2::Key Poly2::leading_key() const {
    if (terms_.empty()) throw std::domain_error("Poly2: leading term of zero");
    return terms_.rbegin()->first;
}

GaussRat Poly2::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("Poly2: leading term of zero");
    return terms_.rbegin()->second;
}

GaussRat Poly2::coeff(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? GaussRat() : it->second;
}

void Poly2::add_term(int e1, int e2, const GaussRat& c) {
    if (c.is_zero()) return;
    Key k{e1, e2};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

Poly2& Poly2::operator*=(const Poly2& o) {
    *this = *this * o;
    return *this;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }

Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

Poly2 operator*(const Poly2& a, const GaussRat& c) {
    Poly2 r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms()) r.add_term(k.first, k.second, v * c);
    return r;
}

bool operator==(const Poly2& a, const Poly2& b) { return a.terms() == b.terms(); }

bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

Poly2 divide_exact(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw std::domain_error("Poly2: division by zero");
    Poly2 q, r = a;
    auto [f1, f2] = b.is_zero() ? Poly2::Key{0, 0} : b.leading_key();
    GaussRat lb = b.leading_coeff();
    while (!r.is_zero()) {
        auto [e1, e2] = r.leading_key();
        if (e1 < f1 || e2 < f2) throw std::domain_error("Poly2: inexact division");
        Poly2 m = Poly2::monomial(e1 - f1, e2 - f2, r.leading_coeff() / lb);
        q += m;
        r -= m * b;
    }
    return q;
}

bool divides(const Poly2& d, const Poly2& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    try {
        divide_exact(a, d);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

namespace {

// Univariate dense polynomials over GaussRat, index = exponent.
using Uni = std::vector<GaussRat>;

void uni_trim(Uni& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Uni uni_mul(const Uni& a, const Uni& b) {
    if (a.empty() || b.empty()) return {};
    Uni r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

Uni uni_scale(Uni a, const GaussRat& c) {
    if (c.is_zero()) return {};
    for (auto& v : a) v *= c;
    return a;
}

Uni uni_sub(Uni a, const Uni& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    uni_trim(a);
    return a;
}

// Remainder of a by b over the field Q(i).
Uni uni_rem(Uni a, const Uni& b) {
    GaussRat lb = b.back();
    while (a.size() >= b.size()) {
        GaussRat c = a.back() / lb;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Uni uni_divexact(const Uni& a, const Uni& b) {
    if (a.empty()) return {};
    if (b.empty() || a.size() < b.size()) throw std::domain_error("uni_divexact: inexact");
    Uni q(a.size() - b.size() + 1), r = a;
    GaussRat lb = b.back();
    while (r.size() >= b.size()) {
        GaussRat c = r.back() / lb;
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        uni_trim(r);
        if (r.empty()) break;
    }
    if (!r.empty()) throw std::domain_error("uni_divexact: inexact");
    uni_trim(q);
    return q;
}

Uni uni_gcd(Uni a, Uni b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        Uni r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = uni_scale(a, inverse(a.back()));
    return a;
}

// View of a Poly2 as a polynomial in t2 with Uni(t1) coefficients, index = t2 exponent.
using Biv = std::vector<Uni>;

void biv_trim(Biv& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

Biv to_biv(const Poly2& p) {
    Biv r(p.is_zero() ? 0 : p.deg2() + 1);
    for (const auto& [k, c] : p.terms()) {
        auto& u = r[k.second];
        if (static_cast<int>(u.size()) <= k.first) u.resize(k.first + 1);
        u[k.first] = c;
    }
    for (auto& u : r) uni_trim(u);
    biv_trim(r);
    return r;
}

Poly2 from_biv(const Biv& p) {
    Poly2 r;
    for (size_t e2 = 0; e2 < p.size(); ++e2)
        for (size_t e1 = 0; e1 < p[e2].size(); ++e1)
            r.add_term(static_cast<int>(e1), static_cast<int>(e2), p[e2][e1]);
    return r;
}

Uni biv_content(const Biv& p) {
    Uni c;
    for (const auto& u : p) c = uni_gcd(c, u);
    return c;
}

Biv biv_primitive(const Biv& p, const Uni& content) {
    Biv r(p.size());
    for (size_t k = 0; k < p.size(); ++k)
        if (!p[k].empty()) r[k] = uni_divexact(p[k], content);
    return r;
}

Biv biv_scale(Biv p, const Uni& c) {
    for (auto& u : p)
        if (!u.empty()) u = uni_mul(u, c);
    return p;
}

Biv biv_sub(Biv a, const Biv& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = uni_sub(a[i], b[i]);
    biv_trim(a);
    return a;
}

Biv biv_shift(const Biv& a, size_t k) {
    Biv r(a.size() + k);
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

// Pseudo-remainder of a by b in t2 over Q(i)[t1]. The leading term cancels
// exactly at each step, so the t2-degree strictly decreases.
Biv biv_prem(Biv a, const Biv& b) {
    const Uni& lb = b.back();
    while (a.size() >= b.size()) {
        Uni la = a.back();
        size_t shift = a.size() - b.size();
        a = biv_sub(biv_scale(a, lb), biv_shift(biv_scale(b, la), shift));
    }
    return a;
}

} // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero() && b.is_zero()) return Poly2();
    auto normalize = [](Poly2 p) {
        if (!p.is_zero()) p = p * inverse(p.leading_coeff());
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_constant() || b.is_constant()) return Poly2(GaussRat(1L));

    if (a.deg2() == 0 && b.deg2() == 0) {
        Biv ba = to_biv(a), bb = to_biv(b);
        Uni g = uni_gcd(ba[0], bb[0]);
        Biv r{g};
        return normalize(from_biv(r));
    }
    if (a.deg1() == 0 && b.deg1() == 0) {
        // Swap the roles of t1 and t2 by transposing exponents.
        Poly2 at, bt;
        for (const auto& [k, c] : a.terms()) at.add_term(k.second, k.first, c);
        for (const auto& [k, c] : b.terms()) bt.add_term(k.second, k.first, c);
        Poly2 g = gcd(at, bt);
        Poly2 r;
        for (const auto& [k, c] : g.terms()) r.add_term(k.second, k.first, c);
        return normalize(r);
    }

    Biv pa = to_biv(a), pb = to_biv(b);
    Uni ca = biv_content(pa), cb = biv_content(pb);
    Biv p = biv_primitive(pa, ca), q = biv_primitive(pb, cb);
    if (p.size() < q.size()) std::swap(p, q);
    while (true) {
        Biv r = biv_prem(p, q);
        biv_trim(r);
        if (r.empty()) break;
        p = std::move(q);
        Uni cr = biv_content(r);
        q = biv_primitive(r, cr);
        if (p.size() < q.size()) std::swap(p, q);
    }
    Uni cg = uni_gcd(ca, cb);
    Poly2 g = from_biv(biv_scale(q, cg));
    return g * inverse(g.leading_coeff());
}

} // namespace gwkit
