#include "kschur/symfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace kschur {

std::string Basis::label() const {
    switch (kind) {
        case Kind::s: return "s";
        case Kind::m: return "m";
        case Kind::h: return "h";
        case Kind::hl: return "H";
        case Kind::g: return "G";
        case Kind::kschur: return "kschur";
    }
    return "?";
}

SymFunc SymFunc::unit(Basis b) {
    SymFunc f(b);
    f.terms_.emplace(Partition(), TPoly(1));
    return f;
}

SymFunc SymFunc::single(const Partition& p, TPoly c, Basis b) {
    SymFunc f(b);
    if (!c.is_zero()) f.terms_.emplace(p, std::move(c));
    return f;
}

TPoly SymFunc::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? TPoly() : it->second;
}

void SymFunc::add_term(const Partition& p, const TPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_)
        throw std::invalid_argument("SymFunc: basis mismatch in addition");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_)
        throw std::invalid_argument("SymFunc: basis mismatch in subtraction");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(basis_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

SymFunc SymFunc::scaled(const TPoly& c) const {
    SymFunc r(basis_);
    if (c.is_zero()) return r;
    for (const auto& [p, v] : terms_) {
        TPoly w = v * c;
        if (!w.is_zero()) r.terms_.emplace(p, std::move(w));
    }
    return r;
}

SymFunc SymFunc::at_t_one() const {
    SymFunc r(basis_);
    for (const auto& [p, c] : terms_) r.add_term(p, TPoly(c.eval_at_one()));
    return r;
}

std::set<int> SymFunc::degrees() const {
    std::set<int> d;
    for (const auto& [p, c] : terms_) d.insert(p.degree());
    return d;
}

bool SymFunc::is_homogeneous(int* deg) const {
    auto d = degrees();
    if (d.size() > 1) return false;
    if (deg) *deg = d.empty() ? 0 : *d.begin();
    return true;
}

SymFunc SymFunc::degree_component(int d) const {
    SymFunc r(basis_);
    for (const auto& [p, c] : terms_)
        if (p.degree() == d) r.terms_.emplace(p, c);
    return r;
}

int SymFunc::max_degree() const {
    int m = -1;
    for (const auto& [p, c] : terms_) m = std::max(m, p.degree());
    return m;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << basis_.label() << p.str();
    }
    return os.str();
}

}  // namespace kschur
