#pragma once

/* The Schur basis engine: Pieri rules, Jacobi-Trudi expansion, skewing
 * (perp) operators, straightening of integer index vectors, Kostka and
 * inverse Kostka tables, basis conversions, scalar product, evaluation
 * at rational points, and the hook expansion of s_i[X(t-1)] that drives
 * the vertex operators.
 */

#include "kschur/symfunc.hpp"

#include <functional>

namespace kschur {

/* ---- straightening ----------------------------------------------- */

/* Result of sorting v + delta into strictly decreasing order.  sign 0
 * means a repeated staircase entry (the index vanishes identically).
 * parts is weakly decreasing and may carry a negative tail; a negative
 * tail is zero as a Schur function but legal as an operator index. */
struct Straightened {
    int sign = 0;
    std::vector<int> parts;
    bool negative_tail = false;
    bool is_partition() const { return sign != 0 && !negative_tail; }
    Partition partition() const;
};

Straightened straighten(const IntVector& v);

/* s indexed by an arbitrary integer vector: 0, or sign * s_lambda */
SymFunc schur_indexed(const IntVector& v);

/* ---- Pieri and skew strips --------------------------------------- */

/* shapes above/below lam differing by a horizontal r-strip */
std::vector<Partition> horizontal_strips_above(const Partition& lam, int r);
std::vector<Partition> horizontal_strips_below(const Partition& lam, int r);

SymFunc pieri_h(const Partition& lam, int r);  /* s_lam * h_r */
SymFunc pieri_e(const Partition& lam, int r);  /* s_lam * e_r */

/* ---- products ----------------------------------------------------- */

/* s_a * s_b, cached; integer coefficients */
const SymFunc& schur_product(const Partition& a, const Partition& b);
/* bilinear product of two Schur-basis functions */
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/* ---- perp (adjoint) operators ------------------------------------ */

SymFunc perp_h(int r, const SymFunc& f);
SymFunc perp_e(int r, const SymFunc& f);
/* s_mu^perp via the Jacobi-Trudi expansion of mu; guard l(mu) <= 9 */
SymFunc perp_s(const Partition& mu, const SymFunc& f);
/* hook (r, 1^c)^perp without the factorial blowup */
SymFunc perp_hook(int r, int c, const SymFunc& f);

/* ---- the vertex kernel ------------------------------------------- */

/* s_i[X(t-1)] expanded in hooks: 1 for i = 0, else
 * (t-1) * sum_{r=1..i} (-1)^(i-r) t^(r-1) s_(r,1^(i-r)); cached */
const SymFunc& hook_plethysm(int i);
/* (s_i[X(t-1)])^perp f */
SymFunc perp_hook_plethysm(int i, const SymFunc& f);

/* ---- Kostka machinery -------------------------------------------- */

struct KostkaTable {
    int degree = 0;
    std::vector<Partition> order;  /* descending lex */
    std::map<Partition, int, DescLex> index;
    /* kostka[i][j] = K_{order[i], order[j]}; upper unitriangular */
    std::vector<std::vector<Int>> kostka;
    std::vector<std::vector<Int>> inverse;
};

const KostkaTable& kostka_table(int degree);
Int kostka_number(const Partition& lam, const Partition& mu);
Int inverse_kostka(const Partition& lam, const Partition& mu);

/* ---- conversions and pairings ------------------------------------ */

/* from the m or h basis into s */
SymFunc to_schur(const SymFunc& f);
/* from s into m */
SymFunc to_monomial(const SymFunc& f);
/* Hall pairing in the s basis: sum of coefficient products */
TPoly scalar_product(const SymFunc& f, const SymFunc& g);

/* evaluate an s-basis function at rational points x_1..x_m (h-table
 * plus Jacobi-Trudi determinants; terms longer than m vanish) */
Rat eval_in_vars(const SymFunc& f, const std::vector<Rat>& x);

/* JT expansion helper: calls cb(sign, rows) for every nonvanishing
 * permutation term h_{rows[0]} ... h_{rows[n-1]} of det(h_{mu_i - i + j}) */
void for_each_jt_term(const Partition& mu,
                      const std::function<void(int, const std::vector<int>&)>& cb);

}  // namespace kschur
