#include "kschur/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace kschur {

void TPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly TPoly::t_power(int e, Int coeff) {
    if (e < 0) throw std::invalid_argument("TPoly::t_power: negative exponent");
    TPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(e) + 1, Int(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

TPoly TPoly::from_coeffs(std::vector<Int> c) {
    TPoly p;
    p.c_ = std::move(c);
    p.normalize();
    return p;
}

const Int& TPoly::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

Int TPoly::eval_at_one() const {
    Int s(0);
    for (const Int& v : c_) s += v;
    return s;
}

Rat TPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += Rat(*it);
    }
    acc.canonicalize();
    return acc;
}

bool TPoly::has_nonneg_coeffs() const {
    for (const Int& v : c_)
        if (v < 0) return false;
    return true;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    r += b;
    return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    r -= b;
    return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    TPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.normalize();
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (Int& v : r.c_) v = -v;
    return r;
}

std::optional<TPoly> TPoly::divide_exact(const TPoly& q) const {
    if (q.is_zero()) return std::nullopt;
    if (is_zero()) return TPoly();
    if (degree() < q.degree()) return std::nullopt;
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - q.c_.size() + 1, Int(0));
    const Int& lead = q.c_.back();
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        Int& top = rem[static_cast<size_t>(i) + q.c_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Int f = top / lead;
        for (size_t j = 0; j < q.c_.size(); ++j)
            rem[static_cast<size_t>(i) + j] -= f * q.c_[j];
        quot[static_cast<size_t>(i)] = std::move(f);
    }
    for (const Int& v : rem)
        if (v != 0) return std::nullopt;
    return from_coeffs(std::move(quot));
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& v = c_[static_cast<size_t>(i)];
        if (v == 0) continue;
        Int a = v;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0 && a != 1) os << "*";
        if (i > 0) os << "t";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace kschur
