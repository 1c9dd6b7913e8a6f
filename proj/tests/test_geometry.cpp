#include <doctest.h>

#include <algorithm>

#include "core/geometry.hpp"
#include "oracles.hpp"

using namespace rtri;

TEST_CASE("distance functional") {
    Plane pl(Field::make(13, 1));
    Point o{0, 0};
    CHECK(pl.distance(o, o) == 0);
    CHECK(pl.distance(o, Point{1, 0}) == 1);
    CHECK(pl.distance(Point{7, 2}, o) == 1); // 49 + 4 = 53 = 1 (mod 13)
    CHECK(pl.distance(Point{3, 5}, Point{7, 2}) == pl.distance(Point{7, 2}, Point{3, 5}));
}

TEST_CASE("unit circle matches the brute-force solution set") {
    struct Case { std::uint64_t p; unsigned k; std::uint64_t seed; std::size_t size; };
    // sizes are q - chi(-1): 12, 8, 12
    for (auto [p, k, seed, size] : {Case{13, 1, 0, 12}, Case{7, 1, 0, 8}, Case{11, 1, 0, 12}}) {
        Field f = Field::make(p, k, nullptr, seed);
        Plane pl(f);
        CHECK(pl.circle().size() == size);
        std::vector<pidx> got;
        for (const Point& v : pl.circle().vecs) got.push_back(pl.index_of(v));
        CHECK(got == oracle::circle_brute(f));
    }
    // extension fields
    for (auto [p, k] : {std::pair{5u, 2u}, {7u, 2u}}) {
        Field f = Field::make(p, k, nullptr, 3);
        Plane pl(f);
        std::vector<pidx> got;
        for (const Point& v : pl.circle().vecs) got.push_back(pl.index_of(v));
        CHECK(got == oracle::circle_brute(f));
    }
}

TEST_CASE("circle contains the axis vectors and is closed under symmetry") {
    for (std::uint64_t p : {5, 7, 11, 13, 17}) {
        Field f = Field::make(p, 1);
        Plane pl(f);
        auto has = [&](Point pt) {
            for (const Point& v : pl.circle().vecs)
                if (v.x1 == pt.x1 && v.x2 == pt.x2) return true;
            return false;
        };
        CHECK(has(Point{1, 0}));
        CHECK(has(Point{0, 1}));
        CHECK(has(Point{f.neg(1), 0}));
        CHECK(has(Point{0, f.neg(1)}));
        for (const Point& v : pl.circle().vecs) {
            CHECK(has(Point{f.neg(v.x1), f.neg(v.x2)}));  // negation
            CHECK(has(Point{f.neg(v.x2), v.x1}));         // quarter turn
        }
    }
}

TEST_CASE("unit pair counts") {
    Plane p13(Field::make(13, 1));
    CHECK(p13.ordered_unit_pairs() == 2028); // 169 * 12
    CHECK(p13.unordered_unit_pairs() == 1014);
    Plane p7(Field::make(7, 1));
    CHECK(p7.ordered_unit_pairs() == 392); // 49 * 8
    // |2028/13^3 - 1| = 1/13 <= 2/13, in integers: |count - q^3| <= 2 q^2
    std::uint64_t q3 = 13ULL * 13 * 13;
    CHECK((q3 > 2028 ? q3 - 2028 : 2028 - q3) <= 2 * 169);
}

TEST_CASE("sqrt3 per field") {
    CHECK(Plane(Field::make(13, 1)).sqrt3() == fe(4)); // 16 = 3
    CHECK(Plane(Field::make(11, 1)).sqrt3() == fe(5)); // 25 = 3
    CHECK_FALSE(Plane(Field::make(7, 1)).sqrt3().has_value());
    CHECK_FALSE(Plane(Field::make(5, 1)).sqrt3().has_value());
    // every element of F_5 is a square in F_25
    Plane p25(Field::make(5, 2, nullptr, 7));
    REQUIRE(p25.triangles_exist());
    fe s = *p25.sqrt3();
    CHECK(p25.field().mul(s, s) == p25.field().from_int(3));
}

TEST_CASE("apexes: worked example in F_13") {
    Plane pl(Field::make(13, 1));
    auto [a, b] = pl.apexes(Point{0, 0}, Point{1, 0}, 4);
    // midpoint (7, 0) since inv(2) = 7; offset s*inv(2) = 2 in direction (0, 1)
    CHECK(a.x1 == 7);
    CHECK(a.x2 == 2);
    CHECK(b.x1 == 7);
    CHECK(b.x2 == 11);
    CHECK(pl.distance(a, Point{0, 0}) == 1);
    CHECK(pl.distance(a, Point{1, 0}) == 1);
    CHECK(pl.distance(b, Point{0, 0}) == 1);
    CHECK(pl.distance(b, Point{1, 0}) == 1);
}

TEST_CASE("apexes: swap symmetry and error paths") {
    Plane pl(Field::make(13, 1));
    Point x{0, 0}, y{1, 0};
    auto [a1, a2] = pl.apexes(x, y);
    auto [b1, b2] = pl.apexes(y, x);
    std::set<pidx> s1{pl.index_of(a1), pl.index_of(a2)};
    std::set<pidx> s2{pl.index_of(b1), pl.index_of(b2)};
    CHECK(s1 == s2);

    CHECK_THROWS_AS(pl.apexes(x, Point{2, 0}, 4), Error); // distance 4, not 1
    CHECK_THROWS_AS(pl.apexes(x, y, 5), Error);           // 25 != 3
    CHECK_THROWS_AS(pl.apexes(x, y, 0), Error);

    Plane p7(Field::make(7, 1));
    CHECK_THROWS_AS(p7.apexes(Point{0, 0}, Point{1, 0}), Error); // NoTriangles
}

TEST_CASE("apexes are exhaustive at q = 11 and 13") {
    for (std::uint64_t p : {11, 13}) {
        Field f = Field::make(p, 1);
        Plane pl(f);
        fe s = *pl.sqrt3();
        std::uint64_t pairs = 0;
        for (pidx ix = 0; ix < pl.point_count(); ++ix) {
            Point x = pl.point_at(ix);
            for (const Point& v : pl.circle().vecs) {
                Point y{f.add(x.x1, v.x1), f.add(x.x2, v.x2)};
                auto [a, b] = pl.apexes(x, y, s);
                pidx ia = pl.index_of(a), ib = pl.index_of(b), iy = pl.index_of(y);
                CHECK(ia != ib);
                CHECK(ia != ix);
                CHECK(ia != iy);
                CHECK(ib != ix);
                CHECK(ib != iy);
                CHECK(pl.distance(a, x) == 1);
                CHECK(pl.distance(a, y) == 1);
                CHECK(pl.distance(b, x) == 1);
                CHECK(pl.distance(b, y) == 1);
                ++pairs;
            }
        }
        CHECK(pairs == pl.ordered_unit_pairs());
    }
}

TEST_CASE("triangle enumeration equals the brute-force oracle") {
    for (std::uint64_t p : {11, 13}) {
        Field f = Field::make(p, 1);
        Plane pl(f);
        std::vector<std::array<pidx, 3>> got;
        pl.enumerate_triangles([&](pidx i, pidx j, pidx k) { got.push_back({i, j, k}); });
        auto expect = oracle::triangles_brute(f);
        CHECK(got.size() == expect.size());
        CHECK(got == expect); // same triangles, same canonical order
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(got.size() == pl.triangle_count());
        CHECK(pl.count_triangles_enumerated(1) == got.size());
        CHECK(pl.count_triangles_enumerated(4) == got.size());
    }
}

TEST_CASE("triangle counts: 676 at q=13, 484 at q=11, 0 at q=7 and q=5") {
    CHECK(Plane(Field::make(13, 1)).triangle_count() == 676);
    CHECK(Plane(Field::make(11, 1)).triangle_count() == 484);
    CHECK(Plane(Field::make(7, 1)).triangle_count() == 0);
    CHECK(Plane(Field::make(5, 1)).triangle_count() == 0);
    CHECK(oracle::triangles_brute(Field::make(7, 1)).empty());
    CHECK(oracle::triangles_brute(Field::make(5, 1)).empty());
}

TEST_CASE("triangle count identity 3T = 2P") {
    for (auto [p, k] : {std::pair{11u, 1u}, {13u, 1u}, {5u, 2u}}) {
        Plane pl(Field::make(p, k, nullptr, 7));
        if (!pl.triangles_exist()) continue;
        CHECK(3 * pl.triangle_count() == 2 * pl.unordered_unit_pairs());
    }
    // extension field oracle cross-check at q = 25
    Field f25 = Field::make(5, 2, nullptr, 7);
    Plane p25(f25);
    CHECK(p25.triangle_count() == oracle::triangles_brute(f25).size());
}

TEST_CASE("extension-field kernel agrees with the oracle at q = 25") {
    Field f = Field::make(5, 2, nullptr, 7);
    Plane pl(f);
    std::vector<std::array<pidx, 3>> got;
    pl.enumerate_triangles([&](pidx i, pidx j, pidx k) { got.push_back({i, j, k}); });
    auto expect = oracle::triangles_brute(f);
    CHECK(got == expect);
    CHECK(pl.count_triangles_enumerated(3) == expect.size());
    CHECK(pl.triangle_count() == expect.size());
}

TEST_CASE("triangles_exist matches sqrt3") {
    CHECK(Plane(Field::make(13, 1)).triangles_exist());
    CHECK_FALSE(Plane(Field::make(7, 1)).triangles_exist());
    CHECK(Plane(Field::make(5, 2, nullptr, 0)).triangles_exist());
}
