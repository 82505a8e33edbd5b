#pragma once

/* Hall-Littlewood vertex operators.  A single operator acts by
 *   B_l f = sum_{i >= 0} s_{i+l} * (s_i[X(t-1)])^perp f,
 * the sum truncating at i = deg f.  Vector indices act through the
 * commuting-shift product
 *   B_v = prod_{i<j} (1 - t e_{ij}) B_{v_1} ... B_{v_L},
 * where e_{ij} bumps entry i up and entry j down; expanding the product
 * over subsets of pairs gives plain compositions of integer-indexed
 * operators.  Iterating B over the parts of lambda builds the
 * Hall-Littlewood function H_lambda.
 */

#include "kschur/schur.hpp"

namespace kschur {

/* B_l on a single Schur function, cached for the life of the process */
const SymFunc& b_int_on_schur(int l, const Partition& lam);
SymFunc apply_B_int(int l, const SymFunc& f);

/* B_v with the subset-expanded shift product; length guard at 8
 * (the pair product has 2^(L(L-1)/2) subsets) */
const SymFunc& b_vector_on_schur(const IntVector& v, const Partition& lam);
SymFunc apply_B_vector(const IntVector& v, const SymFunc& f);
SymFunc apply_B_partition(const Partition& p, const SymFunc& f);

/* subset expansion of the pair product: shifted index -> signed t power */
std::map<IntVector, TPoly> shift_expansion(const IntVector& v);

/* H_lambda = B_{lambda_1} H_{(lambda_2, ...)}, cached */
const SymFunc& hall_littlewood(const Partition& lam);

/* coefficient of s_mu in H_lambda */
TPoly kostka_foulkes(const Partition& mu, const Partition& lam);

/* spanning set for operator-identity checks: 1 and every H_sigma with
 * 0 < |sigma| <= max_degree */
struct TestElement {
    std::string name;
    SymFunc value;
};
std::vector<TestElement> hl_span_test_set(int max_degree);

}  // namespace kschur
