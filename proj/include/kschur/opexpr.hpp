#pragma once

#include <string>
#include <vector>

#include "kschur/partition.hpp"
#include "kschur/symfunc.hpp"

namespace kschur {

/* A formal operator on Schur-basis symmetric functions: row-adding
 * operators by integer or vector index, first-part projections, scalar
 * multiples, closed under formal sum and composition.  Application is
 * linear term by term; a row operator with index l raises the degree of
 * homogeneous input by exactly l. */
class OpExpr {
public:
    OpExpr() = default;

    static OpExpr identity();
    static OpExpr b_int(long l);
    static OpExpr b_vector(IntVector v);
    static OpExpr project(int j, int k);
    static OpExpr scale(TPoly c);

    /* (a * b)(f) = a(b(f)) */
    friend OpExpr operator*(const OpExpr& a, const OpExpr& b);
    friend OpExpr operator+(const OpExpr& a, const OpExpr& b);

    SymFunc apply(const SymFunc& f) const;
    std::string str() const;

private:
    enum class Kind { Identity, BInt, BVector, Project, Scale, Compose, Sum };

    Kind kind_ = Kind::Identity;
    long l_ = 0;     /* BInt */
    IntVector v_;    /* BVector */
    int j_ = 0;      /* Project */
    int k_ = 0;      /* Project */
    TPoly c_;        /* Scale */
    std::vector<OpExpr> kids_;  /* Compose: outermost first; Sum */
};

}  // namespace kschur
