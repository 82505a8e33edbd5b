#pragma once

/* Rational functions in t.  Quarantined fallback scalar: nothing in the
 * main pipeline produces these; they exist for transition solves that
 * would meet a non-unit diagonal, and for rank checks in tests.
 */

#include "kschur/tpoly.hpp"

namespace kschur {

/* gcd in Z[t]: content times primitive Euclid, normalized to a positive
 * leading coefficient.  gcd(0,0) = 0. */
TPoly poly_gcd(const TPoly& a, const TPoly& b);

/* Invariant: den is nonzero, primitive, with positive leading
 * coefficient, and gcd(num, den) = 1.  Zero is 0/1. */
class TRat {
public:
    TRat() : num_(), den_(1) {}
    TRat(TPoly n) : num_(std::move(n)), den_(1) {}
    TRat(long v) : num_(v), den_(1) {}
    TRat(TPoly n, TPoly d);

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    TRat& operator+=(const TRat& o) { *this = *this + o; return *this; }
    TRat& operator-=(const TRat& o) { *this = *this - o; return *this; }
    TRat& operator*=(const TRat& o) { *this = *this * o; return *this; }
    TRat& operator/=(const TRat& o) { *this = *this / o; return *this; }
    friend TRat operator+(const TRat& a, const TRat& b);
    friend TRat operator-(const TRat& a, const TRat& b);
    friend TRat operator*(const TRat& a, const TRat& b);
    friend TRat operator/(const TRat& a, const TRat& b);
    TRat operator-() const;
    friend bool operator==(const TRat& a, const TRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const TRat& a, const TRat& b) { return !(a == b); }

    std::string str() const;

private:
    TPoly num_, den_;
    void reduce();
};

}  // namespace kschur
