#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kschur/partition.hpp"

#include <set>
#include <stdexcept>

using namespace kschur;

TEST_CASE("construction validates and strips zeros") {
    CHECK(Partition({3, 1, 0, 0}).length() == 2);
    CHECK(Partition().empty());
    CHECK_THROWS_AS(Partition(IntVector{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(IntVector{2, -1}), std::invalid_argument);
    CHECK(!Partition::try_make({1, 2}).has_value());
    CHECK(Partition::try_make({2, 1}).has_value());
    CHECK(Partition({4, 2, 1}).degree() == 7);
    CHECK(Partition({4, 2, 1}).str() == "[4,2,1]");
}

TEST_CASE("part access pads with zeros") {
    Partition p{3, 1};
    CHECK(p.part(0) == 3);
    CHECK(p.part(1) == 1);
    CHECK(p.part(2) == 0);
    CHECK(p.first() == 3);
    CHECK(p.last() == 1);
    CHECK(Partition().first() == 0);
}

TEST_CASE("conjugate is an involution") {
    Partition p{4, 2, 2, 1};
    CHECK(p.conjugate() == Partition{4, 3, 1, 1});
    for (int d = 0; d <= 7; ++d)
        for (const Partition& q : partitions_of(d))
            CHECK(q.conjugate().conjugate() == q);
}

TEST_CASE("main hook") {
    CHECK(Partition().main_hook() == 0);
    CHECK(Partition{3}.main_hook() == 3);
    CHECK(Partition({2, 2, 1}).main_hook() == 4);
}

TEST_CASE("dominance on equal degrees") {
    CHECK(dominance_leq(Partition({1, 1, 1}), Partition{3}));
    CHECK(dominance_leq(Partition({2, 1}), Partition({2, 1})));
    CHECK(!dominance_leq(Partition{3}, Partition({2, 1})));
    /* (3,3) and (4,1,1) are incomparable */
    CHECK(!dominance_leq(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK(!dominance_leq(Partition({4, 1, 1}), Partition({3, 3})));
}

TEST_CASE("desc lex total order") {
    DescLex lt;
    CHECK(lt(Partition{3}, Partition({2, 1})));
    CHECK(lt(Partition({2, 1}), Partition({1, 1, 1})));
    CHECK(!lt(Partition({2, 1}), Partition({2, 1})));
    /* partitions_of comes back sorted by it */
    const auto& ps = partitions_of(6);
    for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(lt(ps[i], ps[i + 1]));
}

TEST_CASE("partition counts") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int d = 0; d <= 8; ++d)
        CHECK(partitions_of(d).size() == static_cast<size_t>(expected[d]));
    CHECK(partitions_in(4, 2, 4).size() == 3);  /* (4),(3,1),(2,2) */
    CHECK(partitions_in(0, 0, 0).size() == 1);
    CHECK(partitions_in(3, 0, 3).empty());
}

TEST_CASE("padded entrywise shape algebra") {
    CHECK(parts_union(Partition({2, 1}), Partition({2, 2})) == Partition({2, 2, 2, 1}));
    CHECK(add_padded(Partition({2, 1}), Partition{3}) == Partition({5, 1}));
    CHECK(sub_padded(Partition({3, 2}), Partition({1, 1})) == Partition({2, 1}));
    CHECK(!sub_padded(Partition({3, 2}), Partition({3})).has_value());
    CHECK(!sub_padded(Partition({2, 2}), Partition({3, 1})).has_value());
    CHECK(concat(Partition({2, 1}), Partition{3}) == IntVector({2, 1, 3}));
    CHECK(reversed(Partition({3, 1}), 3) == IntVector({0, 1, 3}));
    CHECK_THROWS_AS(reversed(Partition({3, 1}), 1), std::invalid_argument);
    CHECK(delta(3) == IntVector({2, 1, 0}));
}

TEST_CASE("k-bounded and k-split") {
    CHECK(is_k_bounded(Partition({3, 2}), 3));
    CHECK(!is_k_bounded(Partition({4, 1}), 3));
    KSplit sp = k_split(Partition({3, 2, 2, 2, 1, 1}), 3);
    /* blocks concatenate back to the shape; every block except the last
     * has main hook exactly k */
    IntVector flat;
    for (size_t i = 0; i < sp.blocks.size(); ++i) {
        for (int p : sp.blocks[i].parts()) flat.push_back(p);
        if (i + 1 < sp.blocks.size()) CHECK(sp.blocks[i].main_hook() == 3);
        else CHECK(sp.blocks[i].main_hook() <= 3);
    }
    CHECK(flat == IntVector({3, 2, 2, 2, 1, 1}));
    CHECK(k_split(Partition({2, 1}), 3).blocks.size() == 1);
}

TEST_CASE("k-rectangles") {
    auto rects = k_rectangles(3);
    REQUIRE(rects.size() == 3);
    CHECK(rects[0] == Partition({1, 1, 1}));
    CHECK(rects[1] == Partition({2, 2}));
    CHECK(rects[2] == Partition{3});
}

TEST_CASE("k-irreducibles") {
    CHECK(is_k_irreducible(Partition({2, 1}), 3));
    CHECK(!is_k_irreducible(Partition({2, 2}), 3));  /* value 2 twice = 3+1-2 */
    const long expected[] = {1, 1, 2, 6, 24, 120};
    for (int k = 1; k <= 5; ++k)
        CHECK(k_irreducibles(k).size() == static_cast<size_t>(expected[k]));
    /* no shape listed twice, every one irreducible and k-bounded */
    auto irr = k_irreducibles(3);
    std::set<std::string> seen;
    for (const Partition& p : irr) {
        CHECK(is_k_irreducible(p, 3));
        CHECK(is_k_bounded(p, 3));
        CHECK(seen.insert(p.str()).second);
    }
}
