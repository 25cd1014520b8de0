#include "catch_amalgamated.hpp"

#include "alcove/io.hpp"

using namespace alcove;

TEST_CASE("cyclotomic JSON round trip") {
    Cyclotomic x = Cyclotomic::zeta(20, 3) * Rational(7, 2) - Cyclotomic::fromRational(20, 5);
    json j = toJson(x);
    CHECK(j.at("order") == 20);
    CHECK(cycloFromJson(j) == x);
    CHECK(cycloFromJson(toJson(Cyclotomic::zero(7))) == Cyclotomic::zero(7));

    // approx field matches the exact value
    auto z = x.approx();
    CHECK(j.at("approx").at(0).get<double>() == Catch::Approx(z.real()));
    CHECK(j.at("approx").at(1).get<double>() == Catch::Approx(z.imag()));
}

TEST_CASE("weight strings") {
    CHECK(weightStr({1, 0, 2}) == "1,0,2");
    CHECK(parseWeight("1,0,2", 3) == Weight{1, 0, 2});
    CHECK(parseWeight("-3,4", 2) == Weight{-3, 4});
    CHECK_THROWS_AS(parseWeight("1,0", 3), parameter_error);
    CHECK_THROWS_AS(parseWeight("1,,2", 3), parameter_error);
    CHECK_THROWS_AS(parseWeight("a,b", 2), parameter_error);
    CHECK_THROWS_AS(parseWeight("", 1), parameter_error);
}

TEST_CASE("q specification rendering") {
    json j = toJson(makeQSpec(buildRootDatum("G2"), 1, 20));
    CHECK(j.at("type") == "G2");
    CHECK(j.at("qNum") == 1);
    CHECK(j.at("qDen") == 20);
    CHECK(j.at("ell") == 10);
    CHECK(j.at("level") == "-2/3");
    CHECK(j.at("validated") == true);
}

TEST_CASE("fusion table round trip") {
    for (QSpec qs : {makeQSpecLevel(buildRootDatum("A1"), 4),
                     makeQSpecLevel(buildRootDatum("B2"), 2),
                     makeQSpec(buildRootDatum("G2"), 1, 20)}) {
        auto table = fusionTable(qs);
        json j = toJson(table);
        auto back = fusionTableFromJson(j);
        INFO(qs.key());
        CHECK(sameTable(table, back));
        CHECK(back.complete);
        // a rebuilt table still passes the ring axioms
        CHECK(verifyRingAxioms(back).ok);
    }

    auto a = fusionTable(makeQSpecLevel(buildRootDatum("A1"), 4));
    auto b = fusionTable(makeQSpecLevel(buildRootDatum("A1"), 3));
    CHECK_FALSE(sameTable(a, b));
}
