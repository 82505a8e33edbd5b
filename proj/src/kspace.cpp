#include "kschur/kspace.hpp"

#include "kschur/linalg.hpp"

#include <algorithm>
#include <mutex>

namespace kschur {

namespace {

std::mutex gpoly_mtx;

std::map<std::pair<int, Partition>, SymFunc>& gpoly_cache() {
    static std::map<std::pair<int, Partition>, SymFunc> c;
    return c;
}

SymFunc g_poly_impl(const Partition& lam, int k) {
    /* apply the split blocks right to left */
    const KSplit split = k_split(lam, k);
    SymFunc cur = SymFunc::unit();
    for (auto it = split.blocks.rbegin(); it != split.blocks.rend(); ++it)
        cur = apply_B_partition(*it, cur);
    return cur;
}

}  // namespace

const SymFunc& g_poly(const Partition& lam, int k) {
    if (k < 1) throw std::invalid_argument("g_poly: k must be at least 1");
    if (!is_k_bounded(lam, k)) throw std::invalid_argument("g_poly: shape not k-bounded");
    std::pair<int, Partition> key(k, lam);
    {
        std::lock_guard<std::mutex> lock(gpoly_mtx);
        auto it = gpoly_cache().find(key);
        if (it != gpoly_cache().end()) return it->second;
    }
    SymFunc v = g_poly_impl(lam, k);
    std::lock_guard<std::mutex> lock(gpoly_mtx);
    return gpoly_cache().emplace(std::move(key), std::move(v)).first->second;
}

std::map<Partition, TPoly, DescLex> hl_coordinates(const SymFunc& f) {
    if (f.basis() != Basis::schur())
        throw std::invalid_argument("hl_coordinates: Schur basis required");
    std::map<Partition, TPoly, DescLex> coords;
    for (int d : f.degrees()) {
        SymFunc residual = f.degree_component(d);
        /* ascending lex: every H_mu with mu below the current shape has
         * already been peeled off, so the s coefficient is exact */
        const std::vector<Partition>& shapes = partitions_of(d);
        for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) {
            TPoly c = residual.coeff(*it);
            if (c.is_zero()) continue;
            coords.emplace(*it, c);
            residual -= hall_littlewood(*it).scaled(c);
        }
        if (!residual.is_zero())
            throw std::logic_error("hl_coordinates: residual after full peel");
    }
    return coords;
}

const GTable& g_table(int k, int degree) {
    static std::map<std::pair<int, int>, GTable> cache;
    static std::mutex mtx;
    if (k < 1) throw std::invalid_argument("g_table: k must be at least 1");
    if (degree < 0) throw std::invalid_argument("g_table: negative degree");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({k, degree});
    if (it != cache.end()) return it->second;

    GTable T;
    T.k = k;
    T.degree = degree;
    T.order = partitions_in(degree, degree, k);
    const size_t n = T.order.size();
    for (size_t i = 0; i < n; ++i) T.index.emplace(T.order[i], static_cast<int>(i));
    T.g.reserve(n);
    T.h_to_g.assign(n, std::vector<TPoly>(n, TPoly()));
    T.triangular = true;
    T.unit_diagonal = true;
    for (size_t j = 0; j < n; ++j) {
        const SymFunc& gj = g_poly(T.order[j], k);
        T.g.push_back(gj);
        for (const auto& [mu, c] : hl_coordinates(gj)) {
            auto pos = T.index.find(mu);
            if (pos == T.index.end())
                throw std::logic_error("g_table: G function leaves the k-bounded span");
            const size_t i = static_cast<size_t>(pos->second);
            if (i > j) T.triangular = false;
            T.h_to_g[i][j] = c;
        }
        if (!(T.h_to_g[j][j].is_one())) T.unit_diagonal = false;
    }
    return cache.emplace(std::make_pair(k, degree), std::move(T)).first->second;
}

GExpansion expand_in_G(const SymFunc& f, int k) {
    GExpansion out;
    out.coords = SymFunc(Basis::g_split(k));
    out.residual = SymFunc(Basis::schur());
    out.in_space = true;
    if (f.is_zero()) return out;
    for (int d : f.degrees()) {
        const SymFunc comp = f.degree_component(d);
        const GTable& T = g_table(k, d);
        std::vector<TPoly> b(T.order.size(), TPoly());
        for (const auto& [mu, c] : hl_coordinates(comp)) {
            auto pos = T.index.find(mu);
            if (pos == T.index.end()) {
                /* mass on H_mu with mu_1 > k: outside the span */
                out.in_space = false;
                out.residual += hall_littlewood(mu).scaled(c);
            } else {
                b[static_cast<size_t>(pos->second)] = c;
            }
        }
        std::vector<TPoly> x;
        try {
            x = unitriangular_solve(T.h_to_g, b);
        } catch (const NonUnitDiagonal&) {
            /* escalate to the rational solve; flagged so callers report it */
            out.rat_fallback = true;
            std::vector<std::vector<TRat>> M(T.h_to_g.size());
            for (size_t i = 0; i < T.h_to_g.size(); ++i)
                for (const TPoly& e : T.h_to_g[i]) M[i].emplace_back(e);
            std::vector<TRat> rb(b.begin(), b.end());
            std::vector<TRat> rx = dense_solve(std::move(M), std::move(rb));
            x.clear();
            for (const TRat& r : rx) {
                if (!r.is_polynomial())
                    throw NotInSpace("expand_in_G: non-polynomial G coordinate");
                x.push_back(r.num());
            }
        }
        for (size_t j = 0; j < x.size(); ++j)
            if (!x[j].is_zero()) out.coords.add_term(T.order[j], x[j]);
    }
    return out;
}

SymFunc project_T(int j, int k, const SymFunc& f) {
    GExpansion e = expand_in_G(f, k);
    if (!e.in_space)
        throw NotInSpace("project_T: operand outside the k-bounded span");
    SymFunc out;
    for (const auto& [lam, c] : e.coords.terms())
        if (lam.first() == j) out += g_poly(lam, k).scaled(c);
    return out;
}

namespace {

std::mutex kschur_mtx;

std::map<std::pair<int, Partition>, SymFunc>& kschur_cache() {
    static std::map<std::pair<int, Partition>, SymFunc> c;
    return c;
}

SymFunc k_schur_impl(const Partition& lam, int k) {
    if (lam.empty()) return SymFunc::unit();
    std::vector<int> tail(lam.parts().begin() + 1, lam.parts().end());
    const SymFunc& rest = k_schur(Partition(std::move(tail)), k);
    return project_T(lam.first(), k, apply_B_int(lam.first(), rest));
}

}  // namespace

const SymFunc& k_schur(const Partition& lam, int k) {
    if (k < 1) throw std::invalid_argument("k_schur: k must be at least 1");
    if (!is_k_bounded(lam, k)) throw std::invalid_argument("k_schur: shape not k-bounded");
    std::pair<int, Partition> key(k, lam);
    {
        std::lock_guard<std::mutex> lock(kschur_mtx);
        auto it = kschur_cache().find(key);
        if (it != kschur_cache().end()) return it->second;
    }
    SymFunc v = k_schur_impl(lam, k);
    std::lock_guard<std::mutex> lock(kschur_mtx);
    return kschur_cache().emplace(std::move(key), std::move(v)).first->second;
}

const KSchurTable& k_schur_table(int k, int degree) {
    static std::map<std::pair<int, int>, KSchurTable> cache;
    static std::mutex mtx;
    if (k < 1) throw std::invalid_argument("k_schur_table: k must be at least 1");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({k, degree});
    if (it != cache.end()) return it->second;
    KSchurTable T;
    T.k = k;
    T.degree = degree;
    T.order = partitions_in(degree, degree, k);
    for (const Partition& p : T.order) T.kschur.push_back(k_schur(p, k));
    return cache.emplace(std::make_pair(k, degree), std::move(T)).first->second;
}

std::set<int> omega_support(const SymFunc& f, int k) {
    GExpansion e = expand_in_G(f, k);
    if (!e.in_space)
        throw NotInSpace("omega_support: operand outside the k-bounded span");
    std::set<int> s;
    for (const auto& [lam, c] : e.coords.terms()) s.insert(lam.first());
    return s;
}

bool lambda_ak_member(const SymFunc& f, int a, int k) {
    if (f.basis() != Basis::schur())
        throw std::invalid_argument("lambda_ak_member: Schur basis required");
    for (const auto& [mu, c] : hl_coordinates(f)) {
        if (mu.first() > k) return false;
        if (a > 0 && !mu.empty() && mu.first() < a) return false;
    }
    return true;
}

Reduction reduce_to_irreducible(const Partition& lam, int k) {
    if (k < 1) throw std::invalid_argument("reduce_to_irreducible: k must be at least 1");
    if (!is_k_bounded(lam, k))
        throw std::invalid_argument("reduce_to_irreducible: shape not k-bounded");
    Reduction out;
    Partition cur = lam;
    for (;;) {
        int found = 0;
        for (int l = k; l >= 1; --l) {
            if (cur.mult(l) >= k + 1 - l) { found = l; break; }
        }
        if (found == 0) break;
        const int copies = k + 1 - found;
        /* remove the rectangle's rows */
        std::vector<int> rest;
        int removed = 0;
        for (int p : cur.parts()) {
            if (p == found && removed < copies) { ++removed; continue; }
            rest.push_back(p);
        }
        cur = Partition(std::move(rest));
        /* commuting the rectangle past the taller parts costs t per cell
         * above the rectangle width */
        long d = 0;
        for (int p : cur.parts())
            if (p > found) d += p - found;
        out.c += d;
        out.rectangles.push_back(Partition(std::vector<int>(static_cast<size_t>(copies), found)));
    }
    out.irreducible = cur;
    return out;
}

SymFunc quotient_normal_form(const SymFunc& f, int k) {
    if (f.basis() != Basis::k_schur(k))
        throw std::invalid_argument("quotient_normal_form: k-Schur basis required");
    for (const auto& [p, c] : f.terms())
        if (!c.is_constant())
            throw std::invalid_argument("quotient_normal_form: t = 1 specialization required");
    SymFunc out(Basis::k_schur(k));
    for (const auto& [p, c] : f.terms())
        if (is_k_irreducible(p, k)) out.add_term(p, c);
    return out;
}

}  // namespace kschur
