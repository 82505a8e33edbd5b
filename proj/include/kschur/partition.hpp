#pragma once

/* Integer partitions and the shape algebra used throughout: conjugate,
 * dominance, hooks, k-splitting into main-hook-k blocks, k-rectangles,
 * k-irreducibility, and the padded entrywise operations that vertex
 * operator index vectors are built from.
 */

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kschur {

/* explicit-length integer vector; operator indices, not necessarily
 * weakly decreasing or nonnegative */
using IntVector = std::vector<int>;

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /* strips trailing zeros; throws unless weakly decreasing, nonnegative */
    explicit Partition(std::vector<int> parts);
    /* nullopt if entries do not form a partition */
    static std::optional<Partition> try_make(const std::vector<int>& entries);

    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    bool empty() const { return parts_.empty(); }
    /* 0-based; 0 beyond the last part */
    int part(int i) const;
    int first() const { return part(0); }
    int last() const { return parts_.empty() ? 0 : parts_.back(); }
    const std::vector<int>& parts() const { return parts_; }
    std::vector<int> padded(int n) const;

    Partition conjugate() const;
    int mult(int value) const;
    int hook_length(int row, int col) const;
    /* first part + length - 1; 0 for the empty shape */
    int main_hook() const;
    bool contains(const Partition& mu) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /* container ordering only; ascending lex on the part vectors */
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const;

private:
    std::vector<int> parts_;
};

/* strict "a sorts before b" in descending lexicographic order (parts
 * compared with implicit zero padding); total order on partitions */
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const;
};

/* prefix-sum dominance; requires equal degrees */
bool dominance_leq(const Partition& a, const Partition& b);

/* multiset union of parts */
Partition parts_union(const Partition& a, const Partition& b);
/* concatenation (a, b) as a raw index vector */
IntVector concat(const Partition& a, const Partition& b);
/* entrywise sum on zero-padded parts; always a partition */
Partition add_padded(const Partition& a, const Partition& b);
/* entrywise difference; nullopt when the result is not a partition */
std::optional<Partition> sub_padded(const Partition& a, const Partition& b);
/* parts of mu reversed, zero-padded to explicit length m */
IntVector reversed(const Partition& mu, int m);
/* staircase (n-1, n-2, ..., 1, 0) */
IntVector delta(int n);

bool is_k_bounded(const Partition& p, int k);

/* maximal consecutive blocks, top down, every block but the last with
 * main hook exactly k */
struct KSplit {
    std::vector<Partition> blocks;
};
KSplit k_split(const Partition& p, int k);

/* (l^(k+1-l)) for l = 1..k */
std::vector<Partition> k_rectangles(int k);

/* no part value v = 1..k repeated more than k-v times */
bool is_k_irreducible(const Partition& p, int k);
/* all k-irreducible shapes, ascending degree then descending lex; k! of them */
std::vector<Partition> k_irreducibles(int k);

/* descending lex */
std::vector<Partition> partitions_in(int degree, int max_len, int max_part);
const std::vector<Partition>& partitions_of(int degree);

}  // namespace kschur
