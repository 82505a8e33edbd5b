#pragma once

#include <string>
#include <vector>

#include "kschur/partition.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/vertex.hpp"

namespace kschur {

/* One checked instance of an identity.  A failing report carries a
 * witness string with enough data to replay the comparison by hand. */
struct VerifyReport {
    std::string id;
    std::string params;
    bool pass = true;
    std::string witness;
    long long millis = 0;
};

/* 0/1 vectors of length m with exactly d ones, ones placed left to
 * right in combination order; empty when d < 0 or d > m */
std::vector<IntVector> e_vectors(int m, int d);

/* componentwise sums v_1 + ... + v_r with v_i ranging over
 * e_vectors(m, spec[i]); tuples are kept with multiplicity */
std::vector<IntVector> e_vector_sums(int m, const IntVector& spec);

/* B_m B_n = t B_n B_m + t B_{m+1} B_{n-1} - B_{n-1} B_{m+1} on every
 * element of the test set */
VerifyReport check_commutation(int m, int n,
                               const std::vector<TestElement>& test_set);

/* B_{a^(r+m)} B_nu equals the signed sum over mu in P^r with parts at
 * most m of (-t)^|mu| B_{a^r+mu} B_{(a^m - reversed conjugate, nu)},
 * checked on the Hall-Littlewood span up to degree D */
VerifyReport verify_theorem1(int a, int r, int m, const Partition& nu, int D);

/* B_{l^(k+1-l)} B_i = t^(i-l) B_i B_{l^(k+1-l)} for 0 <= l <= i <= k */
VerifyReport verify_identity_rect_commute(int k, int l, int i);

enum class StructuredVariant { I2, I3, I4 };

/* rectangle operator times B_nu.  I3 is the exact commutation with a
 * t power; I2 and I4 recompute the restricted sum, then check the
 * structural claims on each surviving summand */
VerifyReport verify_identity_structured(int k, int l, const Partition& nu,
                                        StructuredVariant variant);

/* the sum of B_{(sigma(lam)+b^r, nu)} over distinct rearrangements of
 * lam equals the inverse-Kostka weighted partition sum; both sides are
 * compared as formal sums of straightened indices */
VerifyReport verify_kostka_permutation_sum(const Partition& lam, int b, int r,
                                           const Partition& nu);

/* the sum of B_{(a^m - E, nu)} over the 0/1 expansion of lam equals the
 * triple Kostka sum over (omega, gamma, rho), again compared formally */
VerifyReport verify_kostka_eset_sum(const Partition& lam, int m, int a,
                                    const Partition& nu);

/* the double-sum exchange identity between raising indices on the right
 * factor and on the left factor; r, m, n fix the padded lengths */
VerifyReport verify_lemma_general(const Partition& mu, int r,
                                  const Partition& gamma, int m,
                                  const Partition& nu, int n, int D);
VerifyReport verify_lemma_general(const Partition& mu, const Partition& gamma,
                                  const Partition& nu, int D);

/* suites: "theorem1", "identities", "omega", "rectangle-kschur",
 * "appendix", "all".  Instance order is deterministic.  Throws
 * std::invalid_argument on an unknown suite name. */
std::vector<VerifyReport> sweep(const std::string& suite, int max_degree);

}  // namespace kschur
