#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "ssyt/enumerate_shapes.hpp"
#include "ssyt/exact_count.hpp"
#include "ssyt/hooks.hpp"
#include "ssyt/involutions.hpp"
#include "ssyt/shape_text.hpp"
#include "ssyt/total_sequence.hpp"

using namespace ssyt;

TEST_CASE("solid tableau counts match known values") {
    MemoCache cache;
    CHECK(count_solid_syt(parse_shape("[[3,3,3],[3,3,3],[3,3,3]]"), cache) ==
          Count("6405442434150"));
    CHECK(count_solid_syt(parse_shape("[[1,1,1],[1,1],[1,1],[1]]"), cache) == 70);
    CHECK(count_solid_syt(parse_shape("[[2,1]]"), cache) == 2);
    CHECK(count_solid_syt(parse_shape("[]"), cache) == 1);
}

TEST_CASE("brute force oracle on tiny shapes") {
    CHECK(brute_force_count(parse_shape("[[1]]")) == 1);
    CHECK(brute_force_count(parse_shape("[[1,1],[1]]")) == 2);
    MemoCache cache;
    PlanePartition p = parse_shape("[[2,2],[2]]");
    CHECK(brute_force_count(p) == count_solid_syt(p, cache));
    CHECK_THROWS_AS(brute_force_count(parse_shape("[[4,4,4],[4,4,4]]")), OracleLimitExceeded);
}

TEST_CASE("memoized count equals the oracle for every shape of weight <= 8") {
    MemoCache cache;
    for (long w = 0; w <= 8; ++w) {
        for_each_plane_partition(w, [&](const PlanePartition& p) {
            CHECK(count_solid_syt(p, cache) == brute_force_count(p));
        });
    }
}

TEST_CASE("count is independent of canonicalization and orientation") {
    MemoCache canon(true), raw(false);
    for (long w = 0; w <= 8; ++w) {
        for_each_plane_partition(w, [&](const PlanePartition& p) {
            Count c = count_solid_syt(p, canon);
            CHECK(c == count_solid_syt(p, raw));
            for (int perm = 1; perm < 6; ++perm) {
                CHECK(count_solid_syt(p.reoriented(perm), canon) == c);
            }
        });
    }
}

TEST_CASE("hook lengths of worked examples") {
    CHECK(hook_lengths(Partition::parse("3,2,2,1")) ==
          HookMatrix{{6, 4, 1}, {4, 2}, {3, 1}, {1}});
    CHECK(hook_lengths(Partition::parse("1")) == HookMatrix{{1}});
    CHECK(hook_lengths(Partition::parse("2,2")) == HookMatrix{{3, 2}, {2, 1}});
}

TEST_CASE("hook counts") {
    CHECK(hook_count(Partition::parse("3,2,2,1")) == 70);
    CHECK(hook_count(Partition::parse("7")) == 1);
    CHECK(hook_count(Partition::parse("2,2")) == 2);
    CHECK(hook_count(Partition()) == 1);
}

TEST_CASE("hook product times the count is exactly n!") {
    for (long n = 0; n <= 12; ++n) {
        for_each_partition(n, [&](const Partition& lambda) {
            Count prod = 1;
            for (const auto& row : hook_lengths(lambda))
                for (int h : row) prod *= h;
            CHECK(hook_count(lambda) * prod == factorial(static_cast<unsigned long>(n)));
        });
    }
}

TEST_CASE("height-1 shapes reduce to 2D hook counts") {
    MemoCache cache;
    for (long n = 0; n <= 10; ++n) {
        for_each_partition(n, [&](const Partition& lambda) {
            CHECK(count_solid_syt(PlanePartition::from_partition(lambda), cache) ==
                  hook_count(lambda));
        });
    }
}

TEST_CASE("k-dimensional Catalan numbers") {
    CHECK(k_catalan(2, 3) == 5);
    CHECK(k_catalan(1, 0) == 1);
    CHECK(k_catalan(1, 9) == 1);
    CHECK(k_catalan(3, 2) == 5);

    for (int k = 1; k <= 4; ++k) {
        for (long n = 0; n <= 6; ++n) {
            std::vector<int> rect(static_cast<std::size_t>(k), static_cast<int>(n));
            if (n == 0) {
                CHECK(k_catalan(k, n) == 1);
            } else {
                CHECK(k_catalan(k, n) == hook_count(Partition(rect)));
            }
        }
    }
}

TEST_CASE("involution numbers") {
    CHECK(involution_sequence(4) == std::vector<Count>{1, 2, 4, 10});
    CHECK(involution_sequence(2)[1] == 2);

    // w(n) totals the standard tableaux over all shapes of n cells
    for (long n = 1; n <= 8; ++n) {
        Count total = 0;
        for_each_partition(n, [&](const Partition& lambda) { total += hook_count(lambda); });
        CHECK(total == involution_sequence(static_cast<int>(n)).back());
    }
}

TEST_CASE("plane partition enumeration") {
    CHECK(plane_partitions(0).size() == 1);
    CHECK(plane_partitions(0).front().empty());

    auto two = plane_partitions(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == parse_shape("[[2]]"));
    CHECK(two[1] == parse_shape("[[1,1]]"));
    CHECK(two[2] == parse_shape("[[1],[1]]"));

    CHECK(plane_partitions(6).size() == 48);

    // no duplicates, every emitted shape valid and of the right weight
    for (long w = 0; w <= 9; ++w) {
        std::map<std::string, int> seen;
        for_each_plane_partition(w, [&](const PlanePartition& p) {
            CHECK(p.box_count() == w);
            CHECK_NOTHROW(PlanePartition::validate(p.rows()));
            ++seen[p.encode()];
        });
        for (const auto& [_, times] : seen) CHECK(times == 1);
    }
}

TEST_CASE("total solid tableau counts match the reference prefix") {
    MemoCache cache;
    auto seq = total_sequence(12, cache);
    CHECK(seq == std::vector<Count>{1, 3, 9, 33, 135, 633, 3207, 17589, 102627, 636033,
                                    Count("4161141"), Count("28680717")});
}

TEST_CASE("total counts are thread-count independent") {
    MemoCache c1, c2;
    CHECK(total_sequence(7, c1, 1) == total_sequence(7, c2, 2));
}
