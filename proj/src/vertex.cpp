#include "kschur/vertex.hpp"

#include <mutex>
#include <stdexcept>

namespace kschur {

namespace {

std::map<std::pair<int, Partition>, SymFunc>& bint_cache() {
    static std::map<std::pair<int, Partition>, SymFunc> c;
    return c;
}
std::mutex bint_mtx;

SymFunc b_int_impl(int l, const Partition& lam) {
    SymFunc out;
    const int d = lam.degree();
    const SymFunc f = SymFunc::single(lam);
    for (int i = 0; i <= d; ++i) {
        if (i + l < 0) continue;
        SymFunc skewed = perp_hook_plethysm(i, f);
        if (skewed.is_zero()) continue;
        /* multiply by the single row s_{i+l}: a Pieri pass */
        for (const auto& [p, c] : skewed.terms())
            for (const Partition& q : horizontal_strips_above(p, i + l))
                out.add_term(q, c);
    }
    return out;
}

}  // namespace

const SymFunc& b_int_on_schur(int l, const Partition& lam) {
    std::pair<int, Partition> key(l, lam);
    {
        std::lock_guard<std::mutex> lock(bint_mtx);
        auto it = bint_cache().find(key);
        if (it != bint_cache().end()) return it->second;
    }
    SymFunc v = b_int_impl(l, lam);
    std::lock_guard<std::mutex> lock(bint_mtx);
    return bint_cache().emplace(std::move(key), std::move(v)).first->second;
}

SymFunc apply_B_int(int l, const SymFunc& f) {
    if (f.basis() != Basis::schur())
        throw std::invalid_argument("apply_B_int: Schur basis required");
    SymFunc out;
    for (const auto& [p, c] : f.terms()) {
        const SymFunc& img = b_int_on_schur(l, p);
        for (const auto& [q, k] : img.terms())
            out.add_term(q, c * k);
    }
    return out;
}

std::map<IntVector, TPoly> shift_expansion(const IntVector& v) {
    const int L = static_cast<int>(v.size());
    if (L > 8) throw std::invalid_argument("shift_expansion: vector longer than 8");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) pairs.emplace_back(i, j);
    std::map<IntVector, TPoly> acc;
    const size_t np = pairs.size();
    for (size_t mask = 0; mask < (size_t{1} << np); ++mask) {
        IntVector w = v;
        int bits = 0;
        for (size_t b = 0; b < np; ++b) {
            if (mask & (size_t{1} << b)) {
                w[static_cast<size_t>(pairs[b].first)] += 1;
                w[static_cast<size_t>(pairs[b].second)] -= 1;
                ++bits;
            }
        }
        /* subset contributes (-t)^{|S|} */
        TPoly c = TPoly::t_power(bits, Int(bits % 2 == 0 ? 1 : -1));
        auto [it, inserted] = acc.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    return acc;
}

namespace {

std::map<std::pair<IntVector, Partition>, SymFunc>& bvec_cache() {
    static std::map<std::pair<IntVector, Partition>, SymFunc> c;
    return c;
}
std::mutex bvec_mtx;

SymFunc b_vector_impl(const IntVector& v, const Partition& lam) {
    const int L = static_cast<int>(v.size());
    if (L > 8) throw std::invalid_argument("b_vector_on_schur: vector longer than 8");
    if (L == 0) return SymFunc::single(lam);
    if (L == 1) return b_int_on_schur(v[0], lam);
    /* peel the head: expanding only the correction factors that involve
     * position 1 gives
     *   B_v = sum_{T subset of {2..L}} (-t)^|T| B_{v_1+|T|} B_{tail - e_T}
     * where the tail operator keeps its own corrections; the recursion
     * shares sub-vectors through the global cache, which beats expanding
     * all 2^(L choose 2) shifts at once */
    IntVector tail(v.begin() + 1, v.end());
    const int n = L - 1;
    SymFunc out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        IntVector w = tail;
        int bits = 0;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) { --w[j]; ++bits; }
        const SymFunc& inner = b_vector_on_schur(w, lam);
        if (inner.is_zero()) continue;
        SymFunc head = apply_B_int(v[0] + bits, inner);
        if (head.is_zero()) continue;
        out += head.scaled(TPoly::t_power(bits, (bits % 2) ? Int(-1) : Int(1)));
    }
    return out;
}

}  // namespace

const SymFunc& b_vector_on_schur(const IntVector& v, const Partition& lam) {
    std::pair<IntVector, Partition> key(v, lam);
    {
        std::lock_guard<std::mutex> lock(bvec_mtx);
        auto it = bvec_cache().find(key);
        if (it != bvec_cache().end()) return it->second;
    }
    SymFunc val = b_vector_impl(v, lam);
    std::lock_guard<std::mutex> lock(bvec_mtx);
    return bvec_cache().emplace(std::move(key), std::move(val)).first->second;
}

SymFunc apply_B_vector(const IntVector& v, const SymFunc& f) {
    if (f.basis() != Basis::schur())
        throw std::invalid_argument("apply_B_vector: Schur basis required");
    if (v.empty()) return f;
    SymFunc out;
    for (const auto& [p, c] : f.terms()) {
        const SymFunc& img = b_vector_on_schur(v, p);
        for (const auto& [q, k] : img.terms())
            out.add_term(q, c * k);
    }
    return out;
}

SymFunc apply_B_partition(const Partition& p, const SymFunc& f) {
    return apply_B_vector(p.parts(), f);
}

const SymFunc& hall_littlewood(const Partition& lam) {
    static std::map<Partition, SymFunc, DescLex> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    {
        auto it = cache.find(lam);
        if (it != cache.end()) return it->second;
    }
    std::vector<Partition> missing;
    Partition cur = lam;
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
        val = apply_B_int(rit->first(), val);
        cache.emplace(*rit, val);
    }
    return cache.at(lam);
}

TPoly kostka_foulkes(const Partition& mu, const Partition& lam) {
    return hall_littlewood(lam).coeff(mu);
}

std::vector<TestElement> hl_span_test_set(int max_degree) {
    std::vector<TestElement> out;
    out.push_back({"1", SymFunc::unit()});
    for (int d = 1; d <= max_degree; ++d)
        for (const Partition& s : partitions_of(d))
            out.push_back({"H" + s.str(), hall_littlewood(s)});
    return out;
}

}  // namespace kschur
