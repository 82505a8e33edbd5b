#pragma once

/* Basis-tagged symmetric functions: sparse partition -> TPoly maps in
 * descending lex order.  The tag is bookkeeping only; arithmetic never
 * converts between bases implicitly, and mixing tags throws.
 */

#include "kschur/partition.hpp"
#include "kschur/tpoly.hpp"

#include <map>
#include <set>
#include <string>

namespace kschur {

struct Basis {
    enum class Kind { s, m, h, hl, g, kschur };
    Kind kind = Kind::s;
    int k = 0;  /* level, used by g and kschur */

    static Basis schur() { return {Kind::s, 0}; }
    static Basis monomial() { return {Kind::m, 0}; }
    static Basis homogeneous() { return {Kind::h, 0}; }
    static Basis hall_littlewood() { return {Kind::hl, 0}; }
    static Basis g_split(int k) { return {Kind::g, k}; }
    static Basis k_schur(int k) { return {Kind::kschur, k}; }

    friend bool operator==(const Basis& a, const Basis& b) {
        return a.kind == b.kind && a.k == b.k;
    }
    friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }
    std::string label() const;
};

class SymFunc {
public:
    using TermMap = std::map<Partition, TPoly, DescLex>;

    explicit SymFunc(Basis b = Basis::schur()) : basis_(b) {}
    static SymFunc zero(Basis b = Basis::schur()) { return SymFunc(b); }
    /* coefficient 1 on the empty shape */
    static SymFunc unit(Basis b = Basis::schur());
    static SymFunc single(const Partition& p, TPoly c = TPoly(1), Basis b = Basis::schur());

    const Basis& basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    TPoly coeff(const Partition& p) const;
    /* accumulate; zero coefficients are erased */
    void add_term(const Partition& p, const TPoly& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { a += b; return a; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { a -= b; return a; }
    SymFunc operator-() const;
    SymFunc scaled(const TPoly& c) const;

    /* specialize t = 1 in every coefficient */
    SymFunc at_t_one() const;

    /* mixed degrees are legal and tracked per term */
    std::set<int> degrees() const;
    bool is_homogeneous(int* deg = nullptr) const;
    SymFunc degree_component(int d) const;
    int max_degree() const;  /* -1 when zero */

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string str() const;

private:
    Basis basis_;
    TermMap terms_;
};

}  // namespace kschur
