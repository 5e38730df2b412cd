#include <catch2/catch_amalgamated.hpp>

#include "ssyt/enumerate_shapes.hpp"
#include "ssyt/plane_partition.hpp"
#include "ssyt/shape_family.hpp"
#include "ssyt/shape_text.hpp"

using namespace ssyt;

namespace {

PlanePartition shape(const std::string& text) { return parse_shape(text); }

} // namespace

TEST_CASE("validate accepts plane partitions and reports box counts") {
    CHECK(shape("[[3,3,3],[3,3,3],[3,3,3]]").box_count() == 27);
    CHECK(shape("[[1]]").box_count() == 1);
    CHECK(shape("[]").box_count() == 0);
    CHECK(shape("[]").empty());
    CHECK(shape(" [ [ 3 , 2 ] , [ 1 ] ] ").box_count() == 6);
}

TEST_CASE("validate rejects bad matrices and names the cell") {
    try {
        PlanePartition::validate({{1, 2}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::RowNotDecreasing);
        CHECK(e.row == 1);
        CHECK(e.col == 2);
    }

    try {
        PlanePartition::validate({{2, 1}, {2, 2}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::ColumnNotDecreasing);
        CHECK(e.row == 2);
        CHECK(e.col == 2);
    }

    try {
        PlanePartition::validate({{1, 0}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::NonPositiveEntry);
        CHECK(e.row == 1);
        CHECK(e.col == 2);
    }

    // longer lower row is a column violation at the overhanging cell
    CHECK_THROWS_AS(PlanePartition::validate({{2}, {2, 1}}), ValidationError);
    CHECK_THROWS_AS(PlanePartition::validate({{1}, {}}), ValidationError);
}

TEST_CASE("corners are the boxes with no forward neighbor") {
    CHECK(shape("[[1]]").corners() == std::vector<BoxCoord>{{1, 1, 1}});
    CHECK(shape("[[2,1]]").corners() == std::vector<BoxCoord>{{1, 1, 2}, {1, 2, 1}});
    CHECK(shape("[[3,3,3],[3,3,3],[3,3,3]]").corners() == std::vector<BoxCoord>{{3, 3, 3}});
    CHECK(shape("[]").corners().empty());
}

TEST_CASE("remove_corner decrements and drops empties") {
    CHECK(shape("[[1]]").remove_corner({1, 1, 1}) == shape("[]"));
    CHECK(shape("[[2,1]]").remove_corner({1, 1, 2}) == shape("[[1,1]]"));
    CHECK(shape("[[3,3],[3]]").remove_corner({2, 1, 3}) == shape("[[3,3],[2]]"));
    CHECK_THROWS_AS(shape("[[2,1]]").remove_corner({1, 1, 1}), NotACorner);
    CHECK_THROWS_AS(shape("[[2,2]]").remove_corner({1, 1, 2}), NotACorner);
}

TEST_CASE("every corner removal of a small shape stays valid down to empty") {
    for (long w = 0; w <= 8; ++w) {
        for_each_plane_partition(w, [&](const PlanePartition& p) {
            if (!p.empty()) {
                CHECK(!p.corners().empty());
            }
            for (const BoxCoord& c : p.corners()) {
                PlanePartition rest = p.remove_corner(c);
                CHECK(rest.box_count() == p.box_count() - 1);
                // re-validate from scratch
                CHECK_NOTHROW(PlanePartition::validate(rest.rows()));
            }
            // peel to the empty shape along first corners
            PlanePartition cur = p;
            while (!cur.empty()) cur = cur.remove_corner(cur.corners().front());
            CHECK(cur == PlanePartition());
        });
    }
}

TEST_CASE("families instantiate by substituting n") {
    ShapeFamily kreweras = parse_family("[[n,n],[n]]");
    CHECK(kreweras.n_min() == 1);
    CHECK(kreweras.instantiate(2) == shape("[[2,2],[2]]"));

    ShapeFamily f2 = parse_family("[[n,n],[n,1]]");
    CHECK(f2.n_min() == 1);
    CHECK(f2.instantiate(1) == shape("[[1,1],[1,1]]"));

    ShapeFamily f3 = parse_family("[[n,n],[n],[n]]");
    CHECK(f3.instantiate(3) == shape("[[3,3],[3],[3]]"));

    CHECK_THROWS_AS(parse_family("[[n,5]]").instantiate(4), BelowMinParameter);
    CHECK(parse_family("[[n,5]]").n_min() == 5);
}

TEST_CASE("infeasible families are rejected") {
    CHECK_THROWS_AS(parse_family("[[5,n]]"), FamilyError);
    CHECK_THROWS_AS(parse_family("[[n],[n,n]]"), FamilyError);
    CHECK_THROWS_AS(parse_family("[[n,n],[n,0]]"), FamilyError);
    // affine entries are not part of the syntax
    CHECK_THROWS_AS(parse_shape_text("[[n-1,n]]"), ParseError);
}

TEST_CASE("family instantiations grow monotonically in n") {
    for (const char* text : {"[[n,n],[n]]", "[[n,n],[n,1]]", "[[n,n],[n],[n]]"}) {
        ShapeFamily fam = parse_family(text);
        for (long n = fam.n_min(); n < fam.n_min() + 5; ++n) {
            PlanePartition a = fam.instantiate(n);
            PlanePartition b = fam.instantiate(n + 1);
            for (int i = 1; i <= a.row_count(); ++i) {
                for (int j = 1; j <= static_cast<int>(a.rows()[i - 1].size()); ++j) {
                    CHECK(a.height_at(i, j) <= b.height_at(i, j));
                }
            }
        }
    }
}

TEST_CASE("canonical form is constant on orientation orbits and idempotent") {
    PlanePartition a = shape("[[1,1]]");
    PlanePartition b = shape("[[1],[1]]");
    PlanePartition c = shape("[[2]]");
    CHECK(a.canonical() == b.canonical());
    CHECK(b.canonical() == c.canonical());

    PlanePartition box = shape("[[3,3,3],[3,3,3],[3,3,3]]");
    CHECK(box.canonical() == box);

    for (long w = 0; w <= 7; ++w) {
        for_each_plane_partition(w, [&](const PlanePartition& p) {
            PlanePartition canon = p.canonical();
            CHECK(canon.canonical() == canon);
            for (int perm = 0; perm < 6; ++perm) {
                PlanePartition q = p.reoriented(perm);
                CHECK_NOTHROW(PlanePartition::validate(q.rows()));
                CHECK(q.canonical() == canon);
                CHECK(q.box_count() == p.box_count());
            }
        });
    }
}

TEST_CASE("shape text round-trips") {
    for (const char* text :
         {"[]", "[[1]]", "[[3,3,3],[3,3,3],[3,3,3]]", "[[4,2,1],[2,2],[1]]"}) {
        CHECK(shape(text).to_string() == text);
    }
    CHECK(parse_family("[[n,n],[n,1]]").to_string() == "[[n,n],[n,1]]");
    CHECK_THROWS_AS(parse_shape_text("[[1,]]"), ParseError);
    CHECK_THROWS_AS(parse_shape_text("[[1]"), ParseError);
    CHECK_THROWS_AS(parse_shape_text("[[1]]x"), ParseError);
    CHECK_THROWS_AS(parse_shape_text("[[]]"), ParseError);
    CHECK_THROWS_AS(parse_shape("[[n]]"), ParseError);
    CHECK_THROWS_AS(parse_family("[[2]]"), ParseError);
}

TEST_CASE("shape encoding round-trips") {
    for (long w = 0; w <= 6; ++w) {
        for_each_plane_partition(w, [&](const PlanePartition& p) {
            CHECK(PlanePartition::decode(p.encode()) == p);
        });
    }
    PlanePartition big = PlanePartition::validate({{300, 200}, {150}});
    CHECK(PlanePartition::decode(big.encode()) == big);
}
