#include "helpers.hpp"

#include <doctest.h>

using namespace tmtest;

namespace {

const char* kInterval = R"(space I2
cell v0 dim 0
cell v1 dim 0
cell v2 dim 0
cell e1 dim 1
cell e2 dim 1
cover v0 e1
cover v1 e1
cover v1 e2
cover v2 e2
)";

const std::vector<std::string> kShipped = {"interval(2)", "interval(4)", "circle(4)", "circle(6)", "line(4)",
                                           "disk(1)",     "disk(2)",     "sphere(3)", "plane(4)",  "punctured-disk(1)",
                                           "annulus(3)",  "strip(2,2)"};

}  // namespace

TEST_CASE("loading the interval descriptor gives five cells without infinity") {
    FiniteSpace sp = parse_space(kInterval);
    CHECK(sp.cell_count() == 5);
    CHECK(sp.compact());
    CHECK(sp.all().count() == 5);
}

TEST_CASE("descriptor round trip is byte identical") {
    for (const auto& name : kShipped) {
        FiniteSpace sp = build_named(name);
        std::string text = sp.to_text();
        CHECK(parse_space(text).to_text() == text);
    }
}

TEST_CASE("a two-cell cover cycle is rejected as an order cycle") {
    const char* bad = "space bad\ncell v0 dim 0\ncell e1 dim 1\ncover v0 e1\ncover e1 v0\n";
    try {
        parse_space(bad);
        FAIL("expected an order cycle error");
    } catch (const SpaceError& e) {
        CHECK(std::string(e.what()).find("order cycle") != std::string::npos);
    }
}

TEST_CASE("infinity must be minimal and X must be connected") {
    CHECK_THROWS_AS(parse_space("space s\ninfinity e\ncell v dim 0\ncell e dim 1\ncover v e\n"), SpaceError);
    CHECK_THROWS_AS(parse_space("space s\ncell a dim 0\ncell b dim 0\n"), SpaceError);
    CHECK_THROWS_AS(parse_space("space s\ncell a dim 0\ncover a zz\n"), ParseError);
}

TEST_CASE("malformed region literals name the offending token") {
    FiniteSpace sp = build_named("interval(2)");
    try {
        sp.parse_region("v0,nope");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("nope") != std::string::npos);
    }
    CHECK_THROWS_AS(sp.parse_region("v0,,v1"), ParseError);
    CHECK_THROWS_AS(sp.parse_region("@missing"), ParseError);
}

TEST_CASE("builder cell counts") {
    CHECK(build_named("interval(2)").cell_count() == 5);
    FiniteSpace c4 = build_named("circle(4)");
    CHECK(c4.cell_count() == 8);
    CHECK(c4.compact());
    FiniteSpace r4 = build_named("line(4)");
    CHECK(!r4.compact());
    CHECK(r4.all().count() == 7);
    for (const auto& name : kShipped) {
        FiniteSpace sp = build_named(name);
        bool noncompact_builder = name.rfind("line", 0) == 0 || name.rfind("plane", 0) == 0 ||
                                  name.rfind("punctured", 0) == 0 || name.rfind("strip", 0) == 0;
        CHECK_MESSAGE(sp.compact() == !noncompact_builder, name);
        CHECK(sp.is_connected(sp.all()));
    }
}

TEST_CASE("closure on the interval and the line") {
    FiniteSpace i2 = build_named("interval(2)");
    CHECK(i2.closure(R(i2, "e1")) == R(i2, "v0,v1,e1"));
    CHECK(i2.closure(R(i2, "v1")) == R(i2, "v1"));
    FiniteSpace r4 = build_named("line(4)");
    CHECK(r4.closure(R(r4, "e1")) == R(r4, "v1,e1"));
}

TEST_CASE("interior on the interval") {
    FiniteSpace i2 = build_named("interval(2)");
    CHECK(i2.interior(R(i2, "v0,v1,e1")) == R(i2, "v0,e1"));
    CHECK(i2.interior(Region{}).empty());
    CHECK(i2.interior(i2.all()) == i2.all());
}

TEST_CASE("openness, boundedness and compactness") {
    FiniteSpace i2 = build_named("interval(2)");
    CHECK(i2.is_compact(R(i2, "v1")));
    FiniteSpace r4 = build_named("line(4)");
    CHECK(!r4.is_bounded(R(r4, "e1")));
    CHECK(!r4.is_bounded(R(r4, "e4")));
    CHECK(r4.is_compact(r4.closure(R(r4, "v2"))));
    // Every region of a compact space is bounded.
    FiniteSpace c4 = build_named("circle(4)");
    for_each_subset(c4, [&](const Region& r) { CHECK(c4.is_bounded(r)); });
}

TEST_CASE("components on the interval") {
    FiniteSpace i2 = build_named("interval(2)");
    auto c = i2.components(R(i2, "v0,v2"));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == R(i2, "v0"));
    CHECK(c[1] == R(i2, "v2"));
    CHECK(i2.components(Region{}).empty());
    auto d = i2.components(R(i2, "v0,e1,v2"));
    REQUIRE(d.size() == 2);
    CHECK(d[0] == R(i2, "v0,e1"));
    CHECK(d[1] == R(i2, "v2"));
}

TEST_CASE("complement components and their boundedness") {
    FiniteSpace r4 = build_named("line(4)");
    auto cc = r4.complement_components(R(r4, "v2"));
    REQUIRE(cc.size() == 2);
    CHECK(!cc[0].bounded);
    CHECK(!cc[1].bounded);
    CHECK(r4.complement_components(r4.all()).empty());

    FiniteSpace d = build_named("disk(1)");
    auto rim = d.complement_components(R(d, "@rim"));
    REQUIRE(rim.size() == 1);
    CHECK(rim[0].bounded);
    CHECK(rim[0].cells == d.all() - R(d, "@rim"));

    FiniteSpace c4 = build_named("circle(4)");
    for (const auto& c : c4.complement_components(R(c4, "v0,v2"))) CHECK(c.bounded);
}

TEST_CASE("closure and interior are monotone, idempotent and dual") {
    for (const char* name : {"interval(2)", "circle(4)", "line(4)", "sphere(2)"}) {
        FiniteSpace sp = build_named(name);
        std::vector<Region> all;
        for_each_subset(sp, [&](const Region& r) {
            all.push_back(r);
            Region cl = sp.closure(r), in = sp.interior(r);
            CHECK(sp.closure(cl) == cl);
            CHECK(sp.interior(in) == in);
            CHECK(r.subset_of(cl));
            CHECK(in.subset_of(r));
            CHECK(in == sp.complement(sp.closure(sp.complement(r))));
            CHECK(sp.is_open(r) == (sp.interior(r) == r));
            CHECK(sp.is_closed(r) == (cl == r));
        });
        for (std::size_t k = 0; k + 1 < all.size(); k += 7) {
            Region a = all[k], b = all[k] | all[k + 1];
            CHECK(sp.closure(a).subset_of(sp.closure(b)));
            CHECK(sp.interior(a).subset_of(sp.interior(b)));
        }
    }
}

TEST_CASE("components partition the region and merging two disconnects") {
    for (const char* name : {"interval(4)", "circle(4)", "line(4)", "sphere(2)"}) {
        FiniteSpace sp = build_named(name);
        for_each_subset(sp, [&](const Region& r) {
            auto cs = sp.components(r);
            Region u;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                CHECK(sp.is_connected(cs[i]));
                CHECK(!u.intersects(cs[i]));
                u |= cs[i];
                if (i > 0) {
                    CHECK(!sp.is_connected(cs[i - 1] | cs[i]));
                    CHECK(cs[i - 1].first() < cs[i].first());
                }
            }
            CHECK(u == r);
        });
    }
}

TEST_CASE("up-sets are connected and frontier cells make regions unbounded") {
    for (const auto& name : kShipped) {
        FiniteSpace sp = build_named(name);
        sp.all().for_each([&](std::size_t i) {
            CHECK(sp.is_connected(sp.up(i) & sp.all()));
            if (sp.frontier().test(i)) CHECK(!sp.is_bounded(Region::single(i)));
            if (!sp.down_closure(Region::single(i)).intersects(sp.frontier()) && sp.infinity())
                CHECK(sp.is_bounded(sp.closure(Region::single(i))));
        });
    }
}

TEST_CASE("a compact set inside an open set keeps its closure inside") {
    for (const char* name : {"line(4)", "circle(4)", "interval(4)"}) {
        FiniteSpace sp = build_named(name);
        std::vector<Region> opens, compacts;
        enumerate_open(sp, sp.all(), [&](const Region& r) { return opens.push_back(r), true; });
        enumerate_closed(sp, sp.all(), [&](const Region& r) {
            if (sp.is_bounded(r)) compacts.push_back(r);
            return true;
        });
        for (const auto& k : compacts)
            for (const auto& u : opens)
                if (k.subset_of(u)) CHECK(sp.closure(k).subset_of(u));
    }
}

TEST_CASE("compactification keeps omega as an ordinary cell") {
    FiniteSpace pd = build_named("punctured-disk(1)");
    FiniteSpace hat = pd.compactification();
    CHECK(hat.compact());
    CHECK(hat.all().count() == pd.all().count() + 1);
    CHECK(hat.is_closed(R(hat, "o")));
}
