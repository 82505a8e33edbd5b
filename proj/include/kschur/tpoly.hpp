#pragma once

/* Dense univariate polynomials in t with arbitrary-precision integer
 * coefficients.  These are the scalars of the whole library: every
 * symmetric-function coefficient is a TPoly.  Straightening sums blow
 * past 64 bits well before degree 12, hence GMP underneath.
 */

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace kschur {

using Int = mpz_class;
using Rat = mpq_class;

class TPoly {
public:
    TPoly() = default;
    TPoly(long v) { if (v != 0) c_.emplace_back(v); }
    TPoly(int v) : TPoly(static_cast<long>(v)) {}
    TPoly(Int v) { if (v != 0) c_.push_back(std::move(v)); }

    /* c * t^e */
    static TPoly t_power(int e, Int coeff = Int(1));
    /* normalizes: strips trailing zero coefficients */
    static TPoly from_coeffs(std::vector<Int> c);

    /* -1 for the zero polynomial */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    /* coefficient of t^i, zero outside the stored range */
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval_at_one() const;
    Rat eval(const Rat& x) const;
    bool has_nonneg_coeffs() const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o) { *this = *this * o; return *this; }
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly operator-() const;
    TPoly times_t_power(int e) const { return *this * t_power(e); }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    /* exact quotient this/q, nullopt if q is zero or does not divide
     * exactly over the integers */
    std::optional<TPoly> divide_exact(const TPoly& q) const;

    /* "t^2 + 2*t - 1"; "0" for zero */
    std::string str() const;

private:
    std::vector<Int> c_;
    void normalize();
};

inline TPoly operator*(const Int& a, const TPoly& p) { return TPoly(a) * p; }

}  // namespace kschur
