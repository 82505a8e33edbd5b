#include "kschur/trat.hpp"

#include <stdexcept>

namespace kschur {

namespace {

Int content(const TPoly& p) {
    Int g(0);
    for (const Int& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

TPoly scale_down(const TPoly& p, const Int& d) {
    std::vector<Int> c = p.coeffs();
    for (Int& v : c) v /= d;
    return TPoly::from_coeffs(std::move(c));
}

/* pseudo-remainder of a by b (b nonzero, deg a >= deg b not required) */
TPoly pseudo_rem(TPoly a, const TPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const Int la = a.coeff(a.degree());
        const Int lb = b.coeff(db);
        /* lb*a - la*t^shift*b kills the leading term */
        a = lb * a - TPoly::t_power(shift, la) * b;
        Int c = content(a);
        if (c > 1) a = scale_down(a, c);
    }
    return a;
}

}  // namespace

TPoly poly_gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero() && b.is_zero()) return TPoly();
    if (a.is_zero() || b.is_zero()) {
        TPoly g = a.is_zero() ? b : a;
        if (g.coeff(g.degree()) < 0) g = -g;
        return g;
    }
    Int ca = content(a), cb = content(b);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    TPoly x = scale_down(a, ca), y = scale_down(b, cb);
    while (!y.is_zero()) {
        TPoly r = pseudo_rem(x, y);
        x = y;
        y = r;
    }
    if (x.coeff(x.degree()) < 0) x = -x;
    return TPoly(cg) * x;
}

TRat::TRat(TPoly n, TPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("TRat: zero denominator");
    reduce();
}

void TRat::reduce() {
    if (num_.is_zero()) {
        den_ = TPoly(1);
        return;
    }
    TPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    if (den_.coeff(den_.degree()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

TRat operator+(const TRat& a, const TRat& b) {
    return TRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

TRat operator-(const TRat& a, const TRat& b) {
    return TRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

TRat operator*(const TRat& a, const TRat& b) {
    return TRat(a.num_ * b.num_, a.den_ * b.den_);
}

TRat operator/(const TRat& a, const TRat& b) {
    if (b.is_zero()) throw std::invalid_argument("TRat: division by zero");
    return TRat(a.num_ * b.den_, a.den_ * b.num_);
}

TRat TRat::operator-() const {
    TRat r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string TRat::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace kschur
