#pragma once

/* The k-bounded subspace machinery.  Lambda^(k)_t is spanned by the
 * H_lambda with lambda_1 <= k.  The k-split basis G_lambda applies the
 * vector operators block by block over the k-split of lambda; k-Schur
 * functions are built by the projected recursion
 *   s^(k)_lambda = T^(k)_{lambda_1} B_{lambda_1} s^(k)_{(lambda_2, ...)},
 * where T^(k)_j keeps the G terms whose index has first part j.
 */

#include "kschur/vertex.hpp"

namespace kschur {

/* thrown when an operand is not inside the claimed span */
struct NotInSpace : std::runtime_error {
    explicit NotInSpace(const std::string& what) : std::runtime_error(what) {}
};

struct GTable {
    int k = 0;
    int degree = 0;
    std::vector<Partition> order;  /* k-bounded shapes, descending lex */
    std::map<Partition, int, DescLex> index;
    std::vector<SymFunc> g;        /* Schur expansions of G_lambda */
    /* h_to_g[i][j] = H-coordinate on order[i] of G_{order[j]} */
    std::vector<std::vector<TPoly>> h_to_g;
    /* measured, never assumed */
    bool triangular = false;
    bool unit_diagonal = false;
};

const GTable& g_table(int k, int degree);
/* G_lambda as a Schur-basis function; lambda must be k-bounded */
const SymFunc& g_poly(const Partition& lam, int k);

/* s -> H coordinates, valid for any f (H is a full basis) */
std::map<Partition, TPoly, DescLex> hl_coordinates(const SymFunc& f);

struct GExpansion {
    bool in_space = false;       /* no H mass outside lambda_1 <= k */
    SymFunc coords;              /* basis G(k) */
    SymFunc residual;            /* s basis: the part outside the span */
    bool rat_fallback = false;   /* TRat solve was needed (logged upward) */
};
GExpansion expand_in_G(const SymFunc& f, int k);

/* T^(k)_j: keep G terms with first part exactly j; f must lie in
 * Lambda^(k), otherwise NotInSpace */
SymFunc project_T(int j, int k, const SymFunc& f);

const SymFunc& k_schur(const Partition& lam, int k);

struct KSchurTable {
    int k = 0;
    int degree = 0;
    std::vector<Partition> order;  /* k-bounded shapes, descending lex */
    std::vector<SymFunc> kschur;   /* Schur expansions */
};
const KSchurTable& k_schur_table(int k, int degree);

/* distinct first parts in the G-support of f (empty for f = 0) */
std::set<int> omega_support(const SymFunc& f, int k);
/* H-support inside a <= lambda_1 <= k (a <= 0 degenerates to lambda_1 <= k) */
bool lambda_ak_member(const SymFunc& f, int a, int k);

/* t^c s^(k)_lambda = B_{R_1} ... B_{R_j} s^(k)_mu with mu k-irreducible
 * and c >= 0; R_1 is extracted first (largest side first) and applied
 * last.  Each extraction contributes the rectangle-action exponent
 * measured against its remainder. */
struct Reduction {
    long c = 0;
    std::vector<Partition> rectangles;
    Partition irreducible;
};
Reduction reduce_to_irreducible(const Partition& lam, int k);

/* in the k-Schur basis at t = 1, drop every reducible index: the normal
 * form modulo the ideal generated by the k-rectangle k-Schur functions */
SymFunc quotient_normal_form(const SymFunc& f, int k);

}  // namespace kschur
