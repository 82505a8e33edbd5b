#include "kschur/schur.hpp"

#include "kschur/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace kschur {

/* ---- straightening ----------------------------------------------- */

Partition Straightened::partition() const {
    if (!is_partition())
        throw std::logic_error("Straightened: not a genuine partition");
    return Partition(parts);
}

Straightened straighten(const IntVector& v) {
    const int n = static_cast<int>(v.size());
    IntVector u(v);
    for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] += n - 1 - i;
    /* sort u descending; parity of the sorting permutation is the sign */
    std::vector<int> idx(u.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return u[static_cast<size_t>(a)] > u[static_cast<size_t>(b)];
    });
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (idx[static_cast<size_t>(i)] > idx[static_cast<size_t>(j)]) ++inversions;
    Straightened st;
    IntVector sorted(u.size());
    for (int i = 0; i < n; ++i) sorted[static_cast<size_t>(i)] = u[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    for (int i = 0; i + 1 < n; ++i)
        if (sorted[static_cast<size_t>(i)] == sorted[static_cast<size_t>(i) + 1]) return st; /* sign stays 0 */
    st.sign = (inversions % 2 == 0) ? 1 : -1;
    st.parts.resize(u.size());
    for (int i = 0; i < n; ++i) st.parts[static_cast<size_t>(i)] = sorted[static_cast<size_t>(i)] - (n - 1 - i);
    st.negative_tail = !st.parts.empty() && st.parts.back() < 0;
    return st;
}

SymFunc schur_indexed(const IntVector& v) {
    Straightened st = straighten(v);
    if (!st.is_partition()) return SymFunc::zero();
    return SymFunc::single(st.partition(), TPoly(st.sign));
}

/* ---- Pieri and skew strips --------------------------------------- */

namespace {

/* mu over lam row by row; interlacing lam_{i-1} >= mu_i >= lam_i */
void strips_above(const Partition& lam, int row, int remaining, int cap,
                  std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0 && row > lam.length()) {
        std::vector<int> v = cur;
        out.emplace_back(std::move(v));
        return;
    }
    if (row > lam.length()) return;
    const int lo = lam.part(row);
    const int hi = std::min(cap, lam.part(row) + remaining);
    for (int m = hi; m >= lo; --m) {
        cur.push_back(m);
        strips_above(lam, row + 1, remaining - (m - lam.part(row)), lam.part(row), cur, out);
        cur.pop_back();
    }
}

/* mu under lam; interlacing lam_i >= mu_i >= lam_{i+1} */
void strips_below(const Partition& lam, int row, int remaining,
                  std::vector<int>& cur, std::vector<Partition>& out) {
    if (row == lam.length()) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    const int lo = std::max(lam.part(row + 1), lam.part(row) - remaining);
    for (int m = lam.part(row); m >= lo; --m) {
        cur.push_back(m);
        strips_below(lam, row + 1, remaining - (lam.part(row) - m), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> horizontal_strips_above(const Partition& lam, int r) {
    if (r < 0) return {};
    if (r == 0) return {lam};
    std::vector<Partition> out;
    std::vector<int> cur;
    strips_above(lam, 0, r, lam.first() + r, cur, out);
    return out;
}

std::vector<Partition> horizontal_strips_below(const Partition& lam, int r) {
    if (r < 0) return {};
    if (r == 0) return {lam};
    std::vector<Partition> out;
    std::vector<int> cur;
    strips_below(lam, 0, r, cur, out);
    return out;
}

SymFunc pieri_h(const Partition& lam, int r) {
    SymFunc f;
    for (const Partition& mu : horizontal_strips_above(lam, r)) f.add_term(mu, TPoly(1));
    return f;
}

SymFunc pieri_e(const Partition& lam, int r) {
    SymFunc f;
    const Partition lc = lam.conjugate();
    for (const Partition& mu : horizontal_strips_above(lc, r)) f.add_term(mu.conjugate(), TPoly(1));
    return f;
}

/* ---- Jacobi-Trudi ------------------------------------------------- */

namespace {

void jt_recurse(const Partition& mu, int row, unsigned used, int parity,
                std::vector<int>& rows,
                const std::function<void(int, const std::vector<int>&)>& cb) {
    const int n = mu.length();
    if (row == n) {
        cb(parity % 2 == 0 ? 1 : -1, rows);
        return;
    }
    int skipped = 0;
    for (int col = 0; col < n; ++col) {
        if (used & (1u << col)) continue;
        const int a = mu.part(row) - row + col;
        if (a >= 0) {
            if (a > 0) rows.push_back(a);
            /* parity moves by the count of unused smaller columns */
            jt_recurse(mu, row + 1, used | (1u << col), parity + skipped, rows, cb);
            if (a > 0) rows.pop_back();
        }
        ++skipped;
    }
}

}  // namespace

void for_each_jt_term(const Partition& mu,
                      const std::function<void(int, const std::vector<int>&)>& cb) {
    if (mu.length() > 9)
        throw std::invalid_argument("for_each_jt_term: length cap exceeded");
    if (mu.empty()) {
        std::vector<int> none;
        cb(1, none);
        return;
    }
    std::vector<int> rows;
    jt_recurse(mu, 0, 0u, 0, rows, cb);
}

/* ---- products ----------------------------------------------------- */

namespace {

std::map<std::pair<Partition, Partition>, SymFunc>& product_cache() {
    static std::map<std::pair<Partition, Partition>, SymFunc> c;
    return c;
}
std::mutex product_mtx;

SymFunc product_impl(const Partition& a, const Partition& b) {
    /* expand the shorter factor through Jacobi-Trudi, fold Pieri rows */
    const Partition& base = (a.length() >= b.length()) ? a : b;
    const Partition& expand = (a.length() >= b.length()) ? b : a;
    SymFunc acc;
    for_each_jt_term(expand, [&](int sign, const std::vector<int>& rows) {
        SymFunc cur = SymFunc::single(base);
        for (int r : rows) {
            SymFunc next;
            for (const auto& [p, c] : cur.terms())
                for (const Partition& q : horizontal_strips_above(p, r))
                    next.add_term(q, c);
            cur = std::move(next);
        }
        if (sign > 0) acc += cur; else acc -= cur;
    });
    return acc;
}

bool pair_lt(const Partition& a, const Partition& b) {
    DescLex dl;
    return dl(a, b);
}

}  // namespace

const SymFunc& schur_product(const Partition& a, const Partition& b) {
    const bool swap = pair_lt(b, a);
    const Partition& x = swap ? b : a;
    const Partition& y = swap ? a : b;
    std::pair<Partition, Partition> key(x, y);
    {
        std::lock_guard<std::mutex> lock(product_mtx);
        auto it = product_cache().find(key);
        if (it != product_cache().end()) return it->second;
    }
    SymFunc v = product_impl(x, y);
    std::lock_guard<std::mutex> lock(product_mtx);
    return product_cache().emplace(std::move(key), std::move(v)).first->second;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::schur() || g.basis() != Basis::schur())
        throw std::invalid_argument("multiply: Schur basis required");
    SymFunc acc;
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) {
            const TPoly c = ca * cb;
            for (const auto& [p, k] : schur_product(a, b).terms())
                acc.add_term(p, c * k);
        }
    return acc;
}

/* ---- perp operators ----------------------------------------------- */

SymFunc perp_h(int r, const SymFunc& f) {
    if (f.basis() != Basis::schur())
        throw std::invalid_argument("perp_h: Schur basis required");
    if (r < 0) return SymFunc::zero();
    if (r == 0) return f;
    SymFunc out;
    for (const auto& [p, c] : f.terms())
        for (const Partition& q : horizontal_strips_below(p, r))
            out.add_term(q, c);
    return out;
}

SymFunc perp_e(int r, const SymFunc& f) {
    if (f.basis() != Basis::schur())
        throw std::invalid_argument("perp_e: Schur basis required");
    if (r < 0) return SymFunc::zero();
    if (r == 0) return f;
    SymFunc out;
    for (const auto& [p, c] : f.terms()) {
        const Partition pc = p.conjugate();
        for (const Partition& q : horizontal_strips_below(pc, r))
            out.add_term(q.conjugate(), c);
    }
    return out;
}

SymFunc perp_s(const Partition& mu, const SymFunc& f) {
    SymFunc acc = SymFunc::zero();
    for_each_jt_term(mu, [&](int sign, const std::vector<int>& rows) {
        SymFunc cur = f;
        for (int r : rows) cur = perp_h(r, cur);
        if (sign > 0) acc += cur; else acc -= cur;
    });
    return acc;
}

SymFunc perp_hook(int r, int c, const SymFunc& f) {
    /* s_(r,1^c) = sum_{j=0..c} (-1)^j h_{r+j} e_{c-j} */
    SymFunc acc = SymFunc::zero();
    for (int j = 0; j <= c; ++j) {
        SymFunc term = perp_e(c - j, perp_h(r + j, f));
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

/* ---- the vertex kernel ------------------------------------------- */

const SymFunc& hook_plethysm(int i) {
    static std::map<int, SymFunc> cache;
    static std::mutex mtx;
    if (i < 0) throw std::invalid_argument("hook_plethysm: negative index");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
    SymFunc f;
    if (i == 0) {
        f = SymFunc::unit();
    } else {
        const TPoly tm1 = TPoly::t_power(1) - TPoly(1);
        for (int r = 1; r <= i; ++r) {
            std::vector<int> hook{r};
            hook.insert(hook.end(), static_cast<size_t>(i - r), 1);
            TPoly c = tm1 * TPoly::t_power(r - 1, Int((i - r) % 2 == 0 ? 1 : -1));
            f.add_term(Partition(std::move(hook)), c);
        }
    }
    return cache.emplace(i, std::move(f)).first->second;
}

SymFunc perp_hook_plethysm(int i, const SymFunc& f) {
    if (i == 0) return f;
    SymFunc acc = SymFunc::zero();
    for (const auto& [p, c] : hook_plethysm(i).terms()) {
        const int r = p.first();
        const int col = p.length() - 1;
        acc += perp_hook(r, col, f).scaled(c);
    }
    return acc;
}

/* ---- Kostka machinery -------------------------------------------- */

namespace {

/* h_mu expanded in the Schur basis; every suffix of mu is cached, so a
 * whole degree's worth of columns shares the Pieri work */
const SymFunc& h_expansion(const Partition& mu) {
    static std::map<Partition, SymFunc, DescLex> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    {
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    /* walk down to the longest cached suffix, then build back up */
    std::vector<Partition> missing;
    Partition cur = mu;
    SymFunc val;
    bool found = false;
    while (true) {
        auto it = cache.find(cur);
        if (it != cache.end()) {
            val = it->second;
            found = true;
            break;
        }
        missing.push_back(cur);
        if (cur.empty()) break;
        cur = Partition(std::vector<int>(cur.parts().begin() + 1, cur.parts().end()));
    }
    if (!found) {
        val = SymFunc::unit();
        cache.emplace(Partition(), val);
        missing.pop_back();
    }
    for (auto rit = missing.rbegin(); rit != missing.rend(); ++rit) {
        SymFunc next;
        for (const auto& [p, c] : val.terms())
            for (const Partition& q : horizontal_strips_above(p, rit->first()))
                next.add_term(q, c);
        val = std::move(next);
        cache.emplace(*rit, val);
    }
    return cache.at(mu);
}

}  // namespace

const KostkaTable& kostka_table(int degree) {
    static std::map<int, KostkaTable> cache;
    static std::mutex mtx;
    if (degree < 0) throw std::invalid_argument("kostka_table: negative degree");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    KostkaTable T;
    T.degree = degree;
    T.order = partitions_of(degree);
    const size_t n = T.order.size();
    for (size_t i = 0; i < n; ++i) T.index.emplace(T.order[i], static_cast<int>(i));
    T.kostka.assign(n, std::vector<Int>(n, Int(0)));
    for (size_t j = 0; j < n; ++j) {
        const SymFunc& h = h_expansion(T.order[j]);
        for (const auto& [p, c] : h.terms()) {
            if (!c.is_constant())
                throw std::logic_error("kostka_table: non-constant h expansion");
            T.kostka[static_cast<size_t>(T.index.at(p))][j] = c.coeff(0);
        }
    }
    /* invert the unitriangular matrix column by column */
    T.inverse.assign(n, std::vector<Int>(n, Int(0)));
    for (size_t j = 0; j < n; ++j) {
        std::vector<Int> e(n, Int(0));
        e[j] = 1;
        std::vector<Int> x = unitriangular_solve(T.kostka, e);
        for (size_t i = 0; i < n; ++i) T.inverse[i][j] = std::move(x[i]);
    }
    return cache.emplace(degree, std::move(T)).first->second;
}

Int kostka_number(const Partition& lam, const Partition& mu) {
    if (lam.degree() != mu.degree()) return Int(0);
    const KostkaTable& T = kostka_table(lam.degree());
    return T.kostka[static_cast<size_t>(T.index.at(lam))][static_cast<size_t>(T.index.at(mu))];
}

Int inverse_kostka(const Partition& lam, const Partition& mu) {
    if (lam.degree() != mu.degree()) return Int(0);
    const KostkaTable& T = kostka_table(lam.degree());
    return T.inverse[static_cast<size_t>(T.index.at(lam))][static_cast<size_t>(T.index.at(mu))];
}

/* ---- conversions and pairings ------------------------------------ */

SymFunc to_schur(const SymFunc& f) {
    SymFunc out;
    if (f.basis() == Basis::schur()) {
        out = f;
        return out;
    }
    if (f.basis() == Basis::homogeneous()) {
        for (const auto& [p, c] : f.terms())
            out += h_expansion(p).scaled(c);
        return out;
    }
    if (f.basis() == Basis::monomial()) {
        /* m_lam = sum_mu Kinv_{lam mu} s_mu */
        for (const auto& [p, c] : f.terms()) {
            const KostkaTable& T = kostka_table(p.degree());
            const size_t i = static_cast<size_t>(T.index.at(p));
            for (size_t j = 0; j < T.order.size(); ++j)
                if (T.inverse[i][j] != 0)
                    out.add_term(T.order[j], c * TPoly(T.inverse[i][j]));
        }
        return out;
    }
    throw std::invalid_argument("to_schur: expected m or h basis");
}

SymFunc to_monomial(const SymFunc& f) {
    if (f.basis() != Basis::schur())
        throw std::invalid_argument("to_monomial: Schur basis required");
    SymFunc out(Basis::monomial());
    /* s_lam = sum_mu K_{lam mu} m_mu */
    for (const auto& [p, c] : f.terms()) {
        const KostkaTable& T = kostka_table(p.degree());
        const size_t i = static_cast<size_t>(T.index.at(p));
        for (size_t j = 0; j < T.order.size(); ++j)
            if (T.kostka[i][j] != 0)
                out.add_term(T.order[j], c * TPoly(T.kostka[i][j]));
    }
    return out;
}

TPoly scalar_product(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::schur() || g.basis() != Basis::schur())
        throw std::invalid_argument("scalar_product: Schur basis required");
    TPoly acc;
    const SymFunc& small = f.term_count() <= g.term_count() ? f : g;
    const SymFunc& large = f.term_count() <= g.term_count() ? g : f;
    for (const auto& [p, c] : small.terms()) {
        TPoly d = large.coeff(p);
        if (!d.is_zero()) acc += c * d;
    }
    return acc;
}

Rat eval_in_vars(const SymFunc& f, const std::vector<Rat>& x) {
    if (f.basis() != Basis::schur())
        throw std::invalid_argument("eval_in_vars: Schur basis required");
    const int m = static_cast<int>(x.size());
    int maxr = 0;
    for (const auto& [p, c] : f.terms()) maxr = std::max(maxr, p.first() + m);
    /* complete homogeneous evaluations h_0..h_maxr at the points */
    std::vector<Rat> h(static_cast<size_t>(maxr) + 1, Rat(0));
    h[0] = 1;
    for (const Rat& xi : x) {
        for (int r = 1; r <= maxr; ++r) {
            h[static_cast<size_t>(r)] += xi * h[static_cast<size_t>(r) - 1];
            h[static_cast<size_t>(r)].canonicalize();
        }
    }
    Rat total(0);
    for (const auto& [p, c] : f.terms()) {
        if (!c.is_constant())
            throw std::invalid_argument("eval_in_vars: coefficients must be t-free");
        if (p.length() > m) continue; /* more rows than variables: 0 */
        const int n = std::max(p.length(), 1);
        /* det(h_{p_i - i + j}) by exact Gaussian elimination */
        std::vector<std::vector<Rat>> M(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int a = p.part(i) - i + j;
                if (a >= 0 && a <= maxr) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = h[static_cast<size_t>(a)];
            }
        Rat det(1);
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
            if (piv < 0) { singular = true; break; }
            if (piv != col) {
                std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(col)]);
                det = -det;
            }
            det *= M[static_cast<size_t>(col)][static_cast<size_t>(col)];
            det.canonicalize();
            for (int r = col + 1; r < n; ++r) {
                if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
                Rat factor = M[static_cast<size_t>(r)][static_cast<size_t>(col)] / M[static_cast<size_t>(col)][static_cast<size_t>(col)];
                for (int cc = col; cc < n; ++cc) {
                    M[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= factor * M[static_cast<size_t>(col)][static_cast<size_t>(cc)];
                    M[static_cast<size_t>(r)][static_cast<size_t>(cc)].canonicalize();
                }
            }
        }
        if (singular) continue;
        total += Rat(c.coeff(0)) * det;
        total.canonicalize();
    }
    return total;
}

}  // namespace kschur
