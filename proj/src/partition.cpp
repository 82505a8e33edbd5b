#include "kschur/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kschur {

namespace {

bool weakly_decreasing_nonneg(const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i > 0 && v[i] > v[i - 1]) return false;
    }
    return true;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!weakly_decreasing_nonneg(parts_))
        throw std::invalid_argument("Partition: parts must be weakly decreasing and nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

std::optional<Partition> Partition::try_make(const std::vector<int>& entries) {
    if (!weakly_decreasing_nonneg(entries)) return std::nullopt;
    return Partition(entries);
}

int Partition::degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 0 || i >= length()) return 0;
    return parts_[static_cast<size_t>(i)];
}

std::vector<int> Partition::padded(int n) const {
    if (n < length()) throw std::invalid_argument("Partition::padded: length below part count");
    std::vector<int> v = parts_;
    v.resize(static_cast<size_t>(n), 0);
    return v;
}

Partition Partition::conjugate() const {
    if (empty()) return Partition();
    std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[static_cast<size_t>(j)] += 1;
    return Partition(std::move(c));
}

int Partition::mult(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

/* arm + leg + 1 of the cell (row, col), both 0-based */
int Partition::hook_length(int row, int col) const {
    if (row < 0 || row >= length() || col < 0 || col >= part(row))
        throw std::invalid_argument("Partition::hook_length: cell outside diagram");
    const int arm = part(row) - col - 1;
    int leg = 0;
    for (int r = row + 1; r < length(); ++r)
        if (part(r) > col) ++leg;
    return arm + leg + 1;
}

int Partition::main_hook() const {
    if (empty()) return 0;
    return parts_[0] + length() - 1;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool DescLex::operator()(const Partition& a, const Partition& b) const {
    const int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
    }
    return false;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("dominance_leq: degrees differ");
    int pa = 0, pb = 0;
    const int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return true;
}

Partition parts_union(const Partition& a, const Partition& b) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(a.length() + b.length()));
    v.insert(v.end(), a.parts().begin(), a.parts().end());
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

IntVector concat(const Partition& a, const Partition& b) {
    IntVector v(a.parts());
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return v;
}

Partition add_padded(const Partition& a, const Partition& b) {
    const int n = std::max(a.length(), b.length());
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a.part(i) + b.part(i);
    return Partition(std::move(v));
}

std::optional<Partition> sub_padded(const Partition& a, const Partition& b) {
    const int n = std::max(a.length(), b.length());
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a.part(i) - b.part(i);
    return Partition::try_make(v);
}

IntVector reversed(const Partition& mu, int m) {
    if (m < mu.length()) throw std::invalid_argument("reversed: length below part count");
    IntVector v = mu.padded(m);
    std::reverse(v.begin(), v.end());
    return v;
}

IntVector delta(int n) {
    IntVector v(static_cast<size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - 1 - i;
    return v;
}

bool is_k_bounded(const Partition& p, int k) { return p.first() <= k; }

KSplit k_split(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("k_split: k must be at least 1");
    if (!is_k_bounded(p, k)) throw std::invalid_argument("k_split: partition not k-bounded");
    KSplit out;
    std::vector<int> block;
    for (int i = 0; i < p.length(); ++i) {
        block.push_back(p.part(i));
        /* main hook of the open block: first entry + size - 1 */
        if (block.front() + static_cast<int>(block.size()) - 1 == k) {
            out.blocks.emplace_back(block);
            block.clear();
        }
    }
    if (!block.empty()) out.blocks.emplace_back(block);
    return out;
}

std::vector<Partition> k_rectangles(int k) {
    if (k < 1) throw std::invalid_argument("k_rectangles: k must be at least 1");
    std::vector<Partition> out;
    for (int l = 1; l <= k; ++l)
        out.push_back(Partition(std::vector<int>(static_cast<size_t>(k + 1 - l), l)));
    return out;
}

bool is_k_irreducible(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("is_k_irreducible: k must be at least 1");
    if (!is_k_bounded(p, k)) return false;
    for (int v = 1; v <= k; ++v)
        if (p.mult(v) > k - v) return false;
    return true;
}

std::vector<Partition> k_irreducibles(int k) {
    if (k < 1) throw std::invalid_argument("k_irreducibles: k must be at least 1");
    /* multiplicity of v is anything in 0..k-v; k! shapes in total */
    std::vector<Partition> out{Partition()};
    for (int v = k; v >= 1; --v) {
        std::vector<Partition> next;
        for (const Partition& p : out) {
            for (int m = 0; m <= k - v; ++m) {
                std::vector<int> parts = p.parts();
                parts.insert(parts.end(), static_cast<size_t>(m), v);
                next.emplace_back(std::move(parts));
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return DescLex()(a, b);
    });
    return out;
}

namespace {

void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in(int degree, int max_len, int max_part) {
    if (degree < 0) throw std::invalid_argument("partitions_in: negative degree");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(degree, max_part, max_len, cur, out);
    return out;
}

const std::vector<Partition>& partitions_of(int degree) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(degree);
    if (it == cache.end())
        it = cache.emplace(degree, partitions_in(degree, degree, degree)).first;
    return it->second;
}

}  // namespace kschur
