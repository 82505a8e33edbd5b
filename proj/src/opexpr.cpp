#include "kschur/opexpr.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "kschur/kspace.hpp"
#include "kschur/vertex.hpp"

namespace kschur {

OpExpr OpExpr::identity() { return OpExpr{}; }

OpExpr OpExpr::b_int(long l) {
    OpExpr e;
    e.kind_ = Kind::BInt;
    e.l_ = l;
    return e;
}

OpExpr OpExpr::b_vector(IntVector v) {
    OpExpr e;
    e.kind_ = Kind::BVector;
    e.v_ = std::move(v);
    return e;
}

OpExpr OpExpr::project(int j, int k) {
    OpExpr e;
    e.kind_ = Kind::Project;
    e.j_ = j;
    e.k_ = k;
    return e;
}

OpExpr OpExpr::scale(TPoly c) {
    OpExpr e;
    e.kind_ = Kind::Scale;
    e.c_ = std::move(c);
    return e;
}

OpExpr operator*(const OpExpr& a, const OpExpr& b) {
    OpExpr e;
    e.kind_ = OpExpr::Kind::Compose;
    e.kids_ = {a, b};
    return e;
}

OpExpr operator+(const OpExpr& a, const OpExpr& b) {
    OpExpr e;
    e.kind_ = OpExpr::Kind::Sum;
    e.kids_ = {a, b};
    return e;
}

SymFunc OpExpr::apply(const SymFunc& f) const {
    switch (kind_) {
        case Kind::Identity:
            return f;
        case Kind::BInt:
            return apply_B_int(l_, f);
        case Kind::BVector:
            return apply_B_vector(v_, f);
        case Kind::Project:
            return project_T(j_, k_, f);
        case Kind::Scale:
            return f.scaled(c_);
        case Kind::Compose: {
            SymFunc g = f;
            for (auto it = kids_.rbegin(); it != kids_.rend(); ++it)
                g = it->apply(g);
            return g;
        }
        case Kind::Sum: {
            SymFunc g = kids_.front().apply(f);
            for (std::size_t i = 1; i < kids_.size(); ++i) g += kids_[i].apply(f);
            return g;
        }
    }
    throw std::logic_error("OpExpr::apply: unreachable");
}

std::string OpExpr::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Identity:
            os << "id";
            break;
        case Kind::BInt:
            os << "B[" << l_ << "]";
            break;
        case Kind::BVector: {
            os << "B[(";
            for (std::size_t i = 0; i < v_.size(); ++i) {
                if (i) os << ",";
                os << v_[i];
            }
            os << ")]";
            break;
        }
        case Kind::Project:
            os << "T[" << j_ << ";k=" << k_ << "]";
            break;
        case Kind::Scale:
            os << "(" << c_.str() << ")";
            break;
        case Kind::Compose: {
            for (std::size_t i = 0; i < kids_.size(); ++i) {
                if (i) os << "*";
                os << kids_[i].str();
            }
            break;
        }
        case Kind::Sum: {
            os << "(";
            for (std::size_t i = 0; i < kids_.size(); ++i) {
                if (i) os << " + ";
                os << kids_[i].str();
            }
            os << ")";
            break;
        }
    }
    return os.str();
}

}  // namespace kschur
