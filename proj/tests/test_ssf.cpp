#include "helpers.hpp"
#include "topomeasure/oracle.hpp"

#include <doctest.h>

using namespace tmtest;

namespace {

bool passes(const Report& r, const std::string& id) {
    const Check* c = r.find(id);
    return c && c->verdict == Verdict::pass;
}

}  // namespace

TEST_CASE("point majority values") {
    auto sp = space("sphere(3)");
    auto three = make_point_majority(sp, R(*sp, "np,v0,v1"));
    CHECK(three(R(*sp, "np,a0,v0")) == q(1));
    CHECK(three(R(*sp, "v2,b2,sp")) == q(0));
    CHECK(three(Region{}) == q(0));

    auto five = make_point_majority(sp, R(*sp, "np,sp,v0,v1,v2"));
    CHECK(five(R(*sp, "np,v0,v1,a0,a1,e0,t0")) == q(1, 2));
    CHECK(five(R(*sp, "np")) == q(0));
    CHECK(five(sp->all()) == q(1));
}

TEST_CASE("point majority rejects even counts and non-vertex points") {
    auto sp = space("sphere(3)");
    CHECK_THROWS_AS(make_point_majority(sp, R(*sp, "np,v0")), PreconditionError);
    CHECK_THROWS_AS(make_point_majority(sp, R(*sp, "np,v0,e0")), PreconditionError);
}

TEST_CASE("Aarnes circle values on the disk") {
    auto sp = space("disk(1)");
    std::size_t o = sp->index("o");
    auto sub = make_aarnes_circle(sp, R(*sp, "@rim"), o);
    CHECK(sub(sp->all()) == q(1));
    CHECK(sub(R(*sp, "v1_0,e1_0,v1_1,e1_1,v1_2")) == q(0));
    CHECK(sub(sp->all() - R(*sp, "@rim")) == q(0));

    auto pts = make_aarnes_circle(sp, R(*sp, "@rimv"), o, AarnesVariant::points);
    CHECK(pts(sp->all()) == q(1));
    CHECK(pts(R(*sp, "v1_0,e1_0,v1_1,e1_1,v1_2")) == q(0));
    CHECK(pts(R(*sp, "o,s1_0,v1_0")) == q(1));
    CHECK(pts(sp->all() - R(*sp, "@rim")) == q(0));
}

TEST_CASE("Aarnes circle preconditions") {
    auto sp = space("disk(1)");
    CHECK_THROWS_AS(make_aarnes_circle(sp, R(*sp, "@rim"), sp->index("v1_0")), PreconditionError);
    CHECK_THROWS_AS(make_aarnes_circle(sp, R(*sp, "e1_0"), sp->index("o")), PreconditionError);
}

TEST_CASE("two-point values under both rules") {
    auto sp = space("plane(4)");
    Weights w = Weights::parse(*sp, "@uniform");
    std::size_t v0 = sp->index("v0"), v2 = sp->index("v2");
    auto local = make_two_point(sp, v0, v2, w, TwoPointRule::doubled_local);
    CHECK(local(R(*sp, "np,a0,v0")) == q(2));
    CHECK(local(R(*sp, "np")) == q(0));
    CHECK(local(R(*sp, "np,a0,v0,a2,v2")) == q(6));

    auto literal = make_two_point(sp, v0, v2, w, TwoPointRule::doubled_total);
    CHECK(literal(R(*sp, "np,a0,v0")) == q(2));
    CHECK(literal(R(*sp, "np,a0,v0,a2,v2")) == q(10));  // twice the weight of X
    CHECK_THROWS_AS(make_two_point(sp, v0, v0, w, TwoPointRule::doubled_local), PreconditionError);
}

TEST_CASE("threshold is inclusive on opens and on compacts at the threshold") {
    auto sp = space("plane(4)");
    auto th = make_threshold(sp, Weights::parse(*sp, "v0:1,v1:1/3"), Rational(1));
    CHECK(th(R(*sp, "v0,e0,e3,a0,b0,t0,t3,u0,u3")) == q(0));  // open, weight exactly 1
    CHECK(th(R(*sp, "v0")) == q(1));                          // compact, weight exactly 1
    CHECK(th(R(*sp, "v0,e0,v1")) == q(4, 3));
    CHECK(th(R(*sp, "np")) == q(0));
    CHECK_THROWS_AS(make_threshold(sp, Weights(sp->cell_count()), Rational(0)), PreconditionError);
}

TEST_CASE("restricted measures") {
    auto sp = space("disk(1)");
    auto zero = make_restricted_measure(sp, Weights(sp->cell_count()));
    SolidCatalog cat = enumerate_bounded_solid_sets(*sp, 100000);
    for (const auto& a : cat.compact) CHECK(zero(a) == q(0));
    for (const auto& a : cat.open) CHECK(zero(a) == q(0));

    auto mass = make_restricted_measure(sp, Weights::parse(*sp, "o:1"));
    std::size_t o = sp->index("o");
    for (const auto& a : cat.compact) CHECK(mass(a) == q(a.test(o) ? 1 : 0));
    // An open set holds the point mass only through a compact set inside it.
    for (const auto& a : cat.open) CHECK(mass(a) == q(max_compact_inside(*sp, a).test(o) ? 1 : 0));

    auto i2 = space("interval(2)");
    auto uni = make_restricted_measure(i2, Weights::parse(*i2, "@uniform"));
    oracle::Oracle orc(*i2);
    CHECK(oracle::brute_force_mu(orc, uni, R(*i2, "v1")) == q(1));
    CHECK(mu(uni, R(*i2, "v1")) == q(1));
}

TEST_CASE("descriptor parsing") {
    auto sp = space("disk(1)");
    CHECK(parse_ssf(sp, "point-majority points=v1_0,v1_1,v1_2")(sp->all()) == q(1));
    CHECK(parse_ssf(sp, "aarnes-circle B=@rimv p=o variant=points")(sp->all()) == q(1));
    CHECK(parse_ssf(sp, "measure w=@uniform")(sp->all()) == q(5));
    CHECK_THROWS_AS(parse_ssf(sp, "bogus"), ParseError);
    CHECK_THROWS_AS(parse_ssf(sp, "measure w=@uniform extra=1"), ParseError);
    CHECK_THROWS_AS(parse_ssf(sp, "point-majority"), ParseError);
    CHECK_THROWS_AS(parse_ssf(sp, "hat:measure w=o:1"), ParseError);
    CHECK_THROWS_AS(parse_ssf(sp, "measure w=o:-1"), ParseError);
}

TEST_CASE("validate_ssf passes the three-point majority on the sphere") {
    auto sp = space("sphere(3)");
    Report r = validate_ssf(parse_ssf(sp, "point-majority points=np,v0,v1"));
    CHECK(r.all_pass());
    for (const char* id : {"s1", "s2", "s3", "s4"}) CHECK(passes(r, id));
}

TEST_CASE("the zero function passes every condition") {
    for (const char* name : {"disk(1)", "sphere(2)", "interval(4)"}) {
        auto sp = space(name);
        Report r = validate_ssf(parse_ssf(sp, "measure w={}"));
        CHECK_MESSAGE(r.all_pass(), std::string(name));
    }
}

TEST_CASE("a point mass that forgets X fails superadditivity at the point") {
    auto sp = space("interval(2)");
    std::size_t v0 = sp->index("v0");
    Region x = sp->all();
    SolidSetFunction broken(sp, "broken", [v0, x](const Region& a) {
        return Value(a.test(v0) && a != x ? 1 : 0);
    });
    Report r = validate_ssf(broken);
    const Check* s1 = r.find("s1");
    REQUIRE(s1);
    REQUIRE(s1->verdict == Verdict::fail);
    REQUIRE(s1->witness);
    bool has_point = false, has_x = false;
    for (const auto& it : s1->witness->items) {
        has_point = has_point || it.region == R(*sp, "v0");
        has_x = has_x || it.region == x;
    }
    CHECK(has_point);
    CHECK(has_x);
    // The oracle confirms the violation.
    oracle::Oracle o(*sp);
    CHECK(oracle::exhaustive_ssf_check(o, broken, "s1").verdict == Verdict::fail);
}

TEST_CASE("validator verdicts agree with the oracle") {
    struct Pair {
        const char* space;
        const char* ssf;
    };
    for (auto [name, desc] : {Pair{"interval(2)", "measure w=v1:1"}, Pair{"circle(4)", "point-majority points=v0,v1,v2"},
                              Pair{"sphere(2)", "point-majority points=np,v0,v1"},
                              Pair{"disk(1)", "aarnes-circle B=@rimv p=o variant=points"},
                              Pair{"disk(1)", "aarnes-circle B=@rim p=o"}, Pair{"line(4)", "measure w=v2:1"}}) {
        auto sp = space(name);
        auto lambda = parse_ssf(sp, desc);
        Report r = validate_ssf(lambda);
        oracle::Oracle o(*sp);
        for (const char* id : {"s1", "s2", "s3", "s4"}) {
            const Check* c = r.find(id);
            REQUIRE(c);
            CHECK_MESSAGE((c->verdict == oracle::exhaustive_ssf_check(o, lambda, id).verdict),
                          (std::string(name) + " " + desc + " " + id));
        }
    }
}

TEST_CASE("the subcomplex Aarnes variant fails inner and outer regularity on the disk") {
    auto sp = space("disk(1)");
    Report r = validate_ssf(parse_ssf(sp, "aarnes-circle B=@rim p=o"));
    CHECK(passes(r, "s1"));
    CHECK(!passes(r, "s2"));
    CHECK(!passes(r, "s3"));
    for (const char* id : {"s2", "s3"}) CHECK(r.find(id)->witness.has_value());
}

TEST_CASE("outer regularity fails on noncompact models at compacts touching the frontier") {
    auto sp = space("line(4)");
    Report r = validate_ssf(parse_ssf(sp, "measure w=v2:1"));
    CHECK(passes(r, "s1"));
    CHECK(passes(r, "s2"));
    CHECK(passes(r, "s4"));
    const Check* s3 = r.find("s3");
    REQUIRE(s3);
    REQUIRE(s3->verdict == Verdict::fail);
    Region k = s3->witness->items.front().region;
    CHECK(sp->is_compact(k));
    // No bounded open set contains it.
    CHECK(!sp->up_closure(k).subset_of(sp->core()));
}

TEST_CASE("compact-space conditions agree with the general ones") {
    for (auto [name, desc] :
         {std::pair{"sphere(3)", "point-majority points=np,v0,v1"}, std::pair{"disk(1)", "measure w=@uniform"},
          std::pair{"circle(4)", "measure w=@uniform"}, std::pair{"disk(1)", "aarnes-circle B=@rimv p=o variant=points"}}) {
        auto sp = space(name);
        Report r = validate_ssf(parse_ssf(sp, desc));
        CHECK(passes(r, "s1") == passes(r, "compact.superadditive"));
        CHECK(passes(r, "s4") == passes(r, "compact.irreducible"));
        CHECK(passes(r, "compact.complement"));
    }
}

TEST_CASE("a function on X-hat restricts to X with (s1), (s2) and (s4) intact") {
    auto sp = space("punctured-disk(1)");
    auto hat = std::make_shared<const FiniteSpace>(sp->compactification());
    auto on_hat = parse_ssf(hat, "aarnes-circle B=@rimv p=o variant=points");
    CHECK(validate_ssf(on_hat).all_pass());
    auto restricted = make_restricted_from_hat(sp, on_hat);
    Report r = validate_ssf(restricted);
    CHECK(passes(r, "s1"));
    CHECK(passes(r, "s2"));
    CHECK(passes(r, "s4"));
    CHECK(!passes(r, "s3"));
}

TEST_CASE("a tiny budget yields unknown, never pass") {
    auto sp = space("sphere(3)");
    ValidationBudget b;
    b.catalog_cap = 5;
    Report r = validate_ssf(parse_ssf(sp, "point-majority points=np,v0,v1"), b);
    CHECK(r.any_unknown());
    CHECK(!r.all_pass());
}
