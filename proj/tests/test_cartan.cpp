#include "catch_amalgamated.hpp"

#include "alcove/cartan.hpp"

using namespace alcove;

TEST_CASE("type parsing and validation") {
    CHECK(parseLieType("A1").str() == "A1");
    CHECK(parseLieType("E8").rank == 8);
    CHECK_THROWS_AS(parseLieType("H3"), parameter_error);
    CHECK_THROWS_AS(parseLieType("A0"), parameter_error);
    CHECK_THROWS_AS(parseLieType("B1"), parameter_error);
    CHECK_THROWS_AS(parseLieType("D2"), parameter_error);
    CHECK_THROWS_AS(parseLieType("E9"), parameter_error);
    CHECK_THROWS_AS(parseLieType("F5"), parameter_error);
    CHECK_THROWS_AS(parseLieType("G1"), parameter_error);
    CHECK_THROWS_AS(parseLieType(""), parameter_error);
    CHECK_THROWS_AS(parseLieType("A"), parameter_error);
}

TEST_CASE("Cartan matrices") {
    auto a2 = buildRootDatum("A2");
    CHECK(a2.cartan == IntMatrix{{2, -1}, {-1, 2}});

    auto b2 = buildRootDatum("B2");  // short root first
    CHECK(b2.cartan == IntMatrix{{2, -1}, {-2, 2}});
    CHECK(b2.symmetrizers == std::vector<Int>{1, 2});

    auto g2 = buildRootDatum("G2");
    CHECK(g2.cartan == IntMatrix{{2, -1}, {-3, 2}});
    CHECK(g2.symmetrizers == std::vector<Int>{1, 3});

    auto c3 = buildRootDatum("C3");
    CHECK(c3.symmetrizers == std::vector<Int>{1, 1, 2});
    CHECK(c3.cartan[2][1] == -2);
    CHECK(c3.cartan[1][2] == -1);
}

TEST_CASE("positive root counts") {
    CHECK(buildRootDatum("A2").positiveRoots.size() == 3);
    CHECK(buildRootDatum("B2").positiveRoots.size() == 4);
    CHECK(buildRootDatum("G2").positiveRoots.size() == 6);
    CHECK(buildRootDatum("D4").positiveRoots.size() == 12);
    CHECK(buildRootDatum("F4").positiveRoots.size() == 24);
    CHECK(buildRootDatum("E6").positiveRoots.size() == 36);
    CHECK(buildRootDatum("E8").positiveRoots.size() == 120);
}

TEST_CASE("gram matrices and denominators") {
    auto a1 = buildRootDatum("A1");
    CHECK(a1.gram[0][0] == Rational(1, 2));
    CHECK(a1.gramDenominator == 2);

    auto a2 = buildRootDatum("A2");
    CHECK(a2.gram[0][0] == Rational(2, 3));
    CHECK(a2.gram[0][1] == Rational(1, 3));
    CHECK(a2.gramDenominator == 3);

    auto b2 = buildRootDatum("B2");
    CHECK(b2.gram == RationalMatrix{{1, 1}, {1, 2}});
    CHECK(b2.gramDenominator == 1);

    // symmetry of the form across a few types
    for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        auto d = buildRootDatum(t);
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) CHECK(d.gram[i][j] == d.gram[j][i]);
    }
}

TEST_CASE("type constants") {
    struct Row {
        const char* type;
        Int hv, m, weyl;
    };
    for (const auto& r : {Row{"A1", 2, 1, 2}, Row{"A2", 3, 1, 6}, Row{"A3", 4, 1, 24},
                          Row{"B2", 3, 2, 8}, Row{"B3", 5, 2, 48}, Row{"C3", 4, 2, 48},
                          Row{"D4", 6, 1, 192}, Row{"G2", 4, 3, 12}, Row{"F4", 9, 2, 1152},
                          Row{"E6", 12, 1, 51840}}) {
        auto d = buildRootDatum(r.type);
        INFO(r.type);
        CHECK(d.dualCoxeter == r.hv);
        CHECK(d.lacing == r.m);
        CHECK(d.weylOrder == r.weyl);
    }
    CHECK(buildRootDatum("E7").weylOrder == 2903040);
    CHECK(buildRootDatum("E8").weylOrder == 696729600);
    CHECK(buildRootDatum("E8").dualCoxeter == 30);
}

TEST_CASE("highest roots") {
    auto g2 = buildRootDatum("G2");
    CHECK(g2.highestShortRoot == Weight{1, 0});
    CHECK(g2.highestLongRoot == Weight{0, 1});

    auto b2 = buildRootDatum("B2");
    CHECK(b2.highestLongRoot == Weight{2, 0});
    CHECK(b2.highestShortRoot == Weight{0, 1});

    auto a2 = buildRootDatum("A2");
    CHECK(a2.highestLongRoot == Weight{1, 1});
    CHECK(a2.highestLongRoot == a2.highestShortRoot);
}

TEST_CASE("rho and basis conversions") {
    auto d = buildRootDatum("B3");
    CHECK(d.rho == Weight(3, 1));
    for (const auto& root : d.positiveRoots) {
        // labels and root coords describe the same vector
        CHECK(d.rootToWeight(root.rootCoords) == root.labels);
        auto rc = d.weightToRootCoords(root.labels);
        for (int i = 0; i < d.rank; ++i) CHECK(rc[i] == Rational(root.rootCoords[i]));
        // halfNorm from the form
        CHECK(Rational(root.halfNorm) == d.innerProduct(root.labels, root.labels) / 2);
    }
}

TEST_CASE("coroot pairing is integral on labels") {
    for (const char* t : {"A2", "B2", "C3", "G2", "D4"}) {
        auto d = buildRootDatum(t);
        for (const auto& root : d.positiveRoots) {
            Rational p = d.innerProduct(d.rho, root.labels) / root.halfNorm;
            CHECK(is_integer(p));
        }
    }
}
