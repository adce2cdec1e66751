#include "helpers.hpp"
#include "topomeasure/oracle.hpp"

#include <doctest.h>

using namespace tmtest;

namespace {

Verdict verdict_of(const Report& r, const std::string& id) {
    const Check* c = r.find(id);
    REQUIRE_MESSAGE(c, id);
    return c->verdict;
}

}  // namespace

TEST_CASE("lambda1 of a solid set is lambda") {
    auto sp = space("sphere(3)");
    auto lambda = parse_ssf(sp, "point-majority points=np,v0,v1");
    SolidCatalog cat = enumerate_bounded_solid_sets(*sp, 100000);
    for (const auto& a : cat.compact)
        if (!a.empty() && sp->is_connected(a)) CHECK(lambda1(lambda, a) == lambda(a));
    for (const auto& a : cat.open)
        if (!a.empty()) CHECK(lambda1(lambda, a) == lambda(a));
}

TEST_CASE("lambda1 of the rim of the punctured disk is 1") {
    auto sp = space("punctured-disk(1)");
    auto lambda = parse_ssf(sp, "hat:aarnes-circle B=@rimv p=o variant=points");
    CHECK(lambda1(lambda, R(*sp, "@rim")) == q(1));
}

TEST_CASE("lambda1 of a ring subtracts the enclosed disk") {
    auto sp = space("disk(2)");
    auto lambda = parse_ssf(sp, "aarnes-circle B=@rimv p=o variant=points");
    Region ring = R(*sp, "@ring1");
    Region inside = R(*sp, "o,s1_0,s1_1,s1_2,s1_3,t1_0,t1_1,t1_2,t1_3");
    auto holes = bounded_complement_components(*sp, ring);
    // On a compact space the outer annulus is bounded too.
    REQUIRE(holes.size() == 2);
    CHECK(std::find(holes.begin(), holes.end(), inside) != holes.end());
    Value expected = lambda(sp->all());
    for (const auto& h : holes) expected -= lambda(h);
    CHECK(lambda1(lambda, ring) == expected);
    CHECK(lambda1(lambda, ring) == q(0));
}

TEST_CASE("lambda1 rejects sets outside its domain") {
    auto sp = space("line(4)");
    auto lambda = parse_ssf(sp, "measure w=v2:1");
    CHECK_THROWS_AS(lambda1(lambda, R(*sp, "v1,v3")), PreconditionError);
    CHECK_THROWS_AS(lambda2(lambda, R(*sp, "e2")), PreconditionError);
}

TEST_CASE("lambda2 sums over components") {
    auto sp = space("sphere(3)");
    auto lambda = parse_ssf(sp, "point-majority points=np,v0,v1");
    CHECK(lambda2(lambda, Region{}) == q(0));
    Region k = R(*sp, "np,a0,v0,v1");
    REQUIRE(sp->components(k).size() == 2);
    CHECK(lambda2(lambda, k) == q(1));
    CHECK(lambda2(lambda, R(*sp, "np,a0,v0")) == lambda1(lambda, R(*sp, "np,a0,v0")));
}

TEST_CASE("lambda2 is monotone on finite unions of compact connected sets") {
    auto sp = space("sphere(2)");
    auto lambda = parse_ssf(sp, "point-majority points=np,v0,v1");
    std::vector<Region> ks;
    enumerate_closed(*sp, sp->all(), [&](const Region& r) { return ks.push_back(r), true; });
    for (const auto& a : ks)
        for (const auto& b : ks)
            if (a.subset_of(b)) CHECK(lambda2(lambda, a) <= lambda2(lambda, b));
}

TEST_CASE("mu on the empty set and the line example") {
    auto sp = space("plane(4)");
    auto lambda = parse_ssf(sp, "line-point L=b0,v0,e0,v1,b1 p=np");
    CHECK(mu_open(lambda, Region{}) == q(0));
    Region f = R(*sp, "b0,v0,e0,v1,b1,u0");
    CHECK(mu_closed(lambda, f) == q(0));
    CHECK(mu_open(lambda, sp->all() - f) == q(0));
    CHECK(mu(lambda, sp->all()) == q(1));
    CHECK_THROWS_AS(mu_open(lambda, f), PreconditionError);
    CHECK_THROWS_AS(mu_closed(lambda, sp->all() - f), PreconditionError);
}

TEST_CASE("mu on the punctured disk example") {
    auto sp = space("punctured-disk(1)");
    auto lambda = parse_ssf(sp, "hat:aarnes-circle B=@rimv p=o variant=points");
    CHECK(mu(lambda, R(*sp, "v1_1,e1_0,e1_1,s1_1,t1_0,t1_1")) == q(0));
    CHECK(mu(lambda, R(*sp, "v1_3,e1_2,e1_3,s1_3,t1_2,t1_3")) == q(0));
    CHECK(mu(lambda, R(*sp, "v1_0,s1_0,v1_2,s1_2")) == q(0));
    CHECK(mu(lambda, sp->all()) == q(1));
}

TEST_CASE("grubb_mu on compact spaces") {
    auto disk = space("disk(1)");
    auto aarnes = parse_ssf(disk, "aarnes-circle B=@rimv p=o variant=points");
    CHECK(grubb_mu(aarnes, disk->all()) == aarnes(disk->all()));
    CHECK(grubb_mu(aarnes, disk->all() - R(*disk, "@rim")) == q(0));

    auto sphere = space("sphere(3)");
    auto three = parse_ssf(sphere, "point-majority points=np,v0,v1");
    CHECK(grubb_mu(three, R(*sphere, "np,a0,v0")) == q(1));
    CHECK(grubb_mu(three, sphere->all()) == q(1));

    auto line = space("line(4)");
    CHECK_THROWS_AS(grubb_mu(parse_ssf(line, "measure w=v2:1"), line->all()), PreconditionError);
}

TEST_CASE("grubb_mu matches the general path for restricted measures") {
    for (auto [name, desc] : {std::pair{"disk(1)", "measure w=@uniform"}, std::pair{"circle(4)", "measure w=v0:1"},
                              std::pair{"sphere(2)", "measure w=np:1,v0:1/2"}}) {
        auto sp = space(name);
        auto lambda = parse_ssf(sp, desc);
        auto check = [&](const Region& r) {
            CHECK(grubb_mu(lambda, r) == mu(lambda, r));
            return true;
        };
        enumerate_open(*sp, sp->all(), check);
        enumerate_closed(*sp, sp->all(), check);
    }
}

TEST_CASE("the compact path departs from the general one at adjacent marked points") {
    auto sp = space("sphere(3)");
    auto lambda = parse_ssf(sp, "point-majority points=np,v0,v1");
    Region c = R(*sp, "np,v0");
    CHECK(grubb_mu(lambda, c) == q(0));
    CHECK(mu(lambda, c) == q(1));
}

TEST_CASE("validate_tm classifies a point mass as measure-extendable") {
    auto sp = space("disk(1)");
    Report r = validate_tm(extend(parse_ssf(sp, "measure w=o:1")));
    CHECK(r.classification == "measure-extendable");
    CHECK(r.all_pass());
}

TEST_CASE("validate_tm classifies the three-point majority as proper with a witness") {
    auto sp = space("sphere(3)");
    TopMeasure m = extend(parse_ssf(sp, "point-majority points=np,v0,v1"));
    Report r = validate_tm(m);
    CHECK(r.classification == "proper topological measure");
    const Check* s = r.find("subadditive");
    REQUIRE(s);
    REQUIRE(s->witness);
    REQUIRE(s->witness->items.size() == 3);
    const auto& it = s->witness->items;
    CHECK(m(it[2].region) > m(it[0].region) + m(it[1].region));
    CHECK(verdict_of(r, "TM2") == Verdict::pass);
    CHECK(verdict_of(r, "TM3") == Verdict::pass);
    CHECK(verdict_of(r, "monotone") == Verdict::pass);
}

TEST_CASE("TM1 fails on adjacent marked points in the finite model") {
    auto sp = space("sphere(3)");
    TopMeasure m = extend(parse_ssf(sp, "point-majority points=np,v0,v1"));
    Report r = validate_tm(m);
    const Check* tm1 = r.find("TM1");
    REQUIRE(tm1);
    REQUIRE(tm1->verdict == Verdict::fail);
    const auto& it = tm1->witness->items;
    REQUIRE(it.size() == 3);
    CHECK(!it[0].region.intersects(it[1].region));
    CHECK(m(it[2].region) != m(it[0].region) + m(it[1].region));
}

TEST_CASE("additivity on closed and open sets fails on the punctured disk") {
    auto sp = space("punctured-disk(1)");
    TopMeasure m = extend(parse_ssf(sp, "hat:aarnes-circle B=@rimv p=o variant=points"));
    Report r = validate_tm(m);
    const Check* c = r.find("additive.closed-open");
    REQUIRE(c);
    CHECK(c->informational);
    CHECK(c->verdict == Verdict::fail);
    Region f = R(*sp, "v1_0,s1_0,v1_2,s1_2");
    CHECK(m(f) + m(sp->all() - f) != m(sp->all()));
}

TEST_CASE("the closed dual of K-carving fails on the line example") {
    auto sp = space("plane(4)");
    TopMeasure m = extend(parse_ssf(sp, "line-point L=b0,v0,e0,v1,b1 p=np"));
    // X = F ⊔ (X \ F) with F closed and X \ F open.
    Region f = R(*sp, "b0,v0,e0,v1,b1,u0");
    CHECK(m(sp->all()) != m(f) + m(sp->all() - f));
}

TEST_CASE("a raw constant evaluator fails TM1 at the empty set") {
    auto sp = space("interval(2)");
    TopMeasure one{sp, "constant 1", [](const Region&) { return Value(1); }};
    Report r = validate_tm(one);
    const Check* tm1 = r.find("TM1");
    REQUIRE(tm1);
    REQUIRE(tm1->verdict == Verdict::fail);
    for (const auto& it : tm1->witness->items) CHECK(it.region.empty());
}

TEST_CASE("simplicity propagates from two-valued lambda") {
    for (auto [name, desc] : {std::pair{"disk(1)", "aarnes-circle B=@rimv p=o variant=points"},
                              std::pair{"sphere(2)", "point-majority points=np,v0,v1"},
                              std::pair{"line(4)", "measure w=v2:1"}}) {
        auto sp = space(name);
        auto lambda = parse_ssf(sp, desc);
        CHECK(verdict_of(validate_extension(lambda), "simple") == Verdict::pass);
        auto check = [&](const Region& r) {
            Value v = mu(lambda, r);
            CHECK((v == q(0) || v == q(1)));
            return true;
        };
        enumerate_open(*sp, sp->all(), check);
        enumerate_closed(*sp, sp->all(), check);
    }
}

TEST_CASE("mu equals lambda on bounded solid sets") {
    for (auto [name, desc] : {std::pair{"disk(1)", "aarnes-circle B=@rimv p=o variant=points"},
                              std::pair{"sphere(3)", "point-majority points=np,v0,v1"},
                              std::pair{"circle(4)", "measure w=@uniform"},
                              std::pair{"punctured-disk(1)", "hat:aarnes-circle B=@rimv p=o variant=points"}}) {
        auto sp = space(name);
        CHECK_MESSAGE(verdict_of(validate_extension(parse_ssf(sp, desc)), "mu=lambda") == Verdict::pass,
                      std::string(name));
    }
}

TEST_CASE("the line example breaks mu = lambda on an equator arc with no bounded open superset") {
    auto sp = space("plane(4)");
    auto lambda = parse_ssf(sp, "line-point L=b0,v0,e0,v1,b1 p=np");
    Region arc = R(*sp, "v0,v1,v2,v3,e0,e1,e2");
    REQUIRE(is_solid(*sp, arc));
    CHECK(lambda(arc) == q(0));
    CHECK(mu(lambda, arc) == q(1));
    CHECK(!sp->up_closure(arc).subset_of(sp->core()));
}

TEST_CASE("K-carving holds for restricted measures") {
    auto sp = space("disk(1)");
    Report r = validate_tm(extend(parse_ssf(sp, "measure w=@uniform")));
    for (const char* id : {"TM1", "TM2", "TM3", "c1", "c2", "c3", "p7", "k1"}) CHECK(verdict_of(r, id) == Verdict::pass);
}

TEST_CASE("nonsubadditive covers") {
    auto disk = space("disk(1)");
    TopMeasure aarnes = extend(parse_ssf(disk, "aarnes-circle B=@rimv p=o variant=points"));
    auto cover = find_nonsubadditive_cover(aarnes, 3);
    REQUIRE(cover);
    CHECK(cover->pieces.size() <= 3);
    CHECK(cover->sum() == q(0));
    CHECK(cover->target_value == q(1));
    Region u;
    for (const auto& p : cover->pieces) u |= p;
    CHECK(u == disk->all());

    TopMeasure mass = extend(parse_ssf(disk, "measure w=o:1"));
    CHECK(!find_nonsubadditive_cover(mass, 3).has_value());

    auto plane = space("plane(4)");
    TopMeasure th = extend(parse_ssf(plane, "threshold w=@uniform:2/3 t=1"));
    Region c = R(*plane, "v0,e0,v1");
    auto tc = find_nonsubadditive_cover(th, 2, c);
    REQUIRE(tc);
    CHECK(tc->target_value == q(4, 3));
    CHECK(tc->sum() == q(0));
}

TEST_CASE("memoize returns the same values") {
    auto sp = space("sphere(2)");
    TopMeasure m = extend(parse_ssf(sp, "point-majority points=np,v0,v1"));
    TopMeasure mm = memoize(m);
    enumerate_closed(*sp, sp->all(), [&](const Region& r) {
        CHECK(mm(r) == m(r));
        CHECK(mm(r) == m(r));
        return true;
    });
}
