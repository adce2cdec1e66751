#include "topomeasure/demo.hpp"

#include "topomeasure/oracle.hpp"

#include <memory>
#include <stdexcept>

namespace topomeasure {

namespace {

Value q(std::int64_t n, std::int64_t d = 1) { return Value(Rational(n, d)); }

std::vector<DemoSpec> build_specs() {
    std::vector<DemoSpec> out;

    {
        DemoSpec d;
        d.name = "aarnes-disk";
        d.space = "disk(1)";
        d.ssf = "aarnes-circle B=@rimv p=o variant=points";
        d.summary = "Aarnes circle measure on the closed disk: two rim arcs and the open inside cover X with sum 0";
        d.rows = {
            {"X", "@all", q(1), "worked-example"},
            {"A1 arc of the rim", "v1_0,e1_0,v1_1,e1_1,v1_2", q(0), "worked-example"},
            {"A2 closure of the rest of the rim", "v1_2,e1_2,v1_3,e1_3,v1_0", q(0), "worked-example"},
            {"A3 X minus the rim", "X-@rim", q(0), "worked-example"},
            {"centre", "o", q(0), "by-definition"},
        };
        d.cover_target = "@all";
        d.cover_size = 3;
        d.cover_sum = q(0);
        out.push_back(d);
    }
    {
        DemoSpec d;
        d.name = "three-points-sphere";
        d.space = "sphere(3)";
        d.ssf = "point-majority points=np,v0,v1";
        d.summary = "majority of three points on the sphere: X is covered by three sets of measure 0";
        d.rows = {
            {"X", "@all", q(1), "worked-example"},
            {"edge np-v0 closed", "np,a0,v0", q(1), "worked-example"},
            {"north cap closed", "np,v0,v1,v2,e0,e1,e2,a0,a1,a2,t0,t1,t2", q(1), "worked-example"},
            {"star of np", "np,a0,a1,a2,t0,t1,t2", q(0), "by-definition"},
            {"one marked point", "np", q(0), "by-definition"},
            {"empty set", "{}", q(0), "by-definition"},
        };
        d.cover_target = "@all";
        d.cover_size = 3;
        d.cover_sum = q(0);
        out.push_back(d);
    }
    {
        DemoSpec d;
        d.name = "npoints";
        d.space = "sphere(3)";
        d.ssf = "point-majority points=np,sp,v0,v1,v2";
        d.summary = "five points, n = 2: value k/n when the region holds 2k or 2k+1 of them";
        d.rows = {
            {"0 points, open face", "t0", q(0), "worked-example"},
            {"1 point", "np", q(0), "worked-example"},
            {"2 points", "np,a0,v0", q(1, 2), "worked-example"},
            {"3 points", "np,v0,v1,a0,a1,e0,t0", q(1, 2), "worked-example"},
            {"4 points, north cap", "np,v0,v1,v2,e0,e1,e2,a0,a1,a2,t0,t1,t2", q(1), "worked-example"},
            {"5 points, X", "@all", q(1), "worked-example"},
        };
        d.cover_target = "@all";
        d.cover_size = 3;
        out.push_back(d);
    }
    {
        DemoSpec d;
        d.name = "punctured-disk";
        d.space = "punctured-disk(1)";
        d.ssf = "hat:aarnes-circle B=@rimv p=o variant=points";
        d.summary = "Aarnes measure moved to the punctured disk: additivity on closed and open sets fails at X = F + U1 + U2";
        d.rows = {
            {"F two radial segments", "v1_0,s1_0,v1_2,s1_2", q(0), "worked-example"},
            {"U1 upper half", "v1_1,e1_0,e1_1,s1_1,t1_0,t1_1", q(0), "worked-example"},
            {"U2 lower half", "v1_3,e1_2,e1_3,s1_3,t1_2,t1_3", q(0), "worked-example"},
            {"U1 + U2", "v1_1,e1_0,e1_1,s1_1,t1_0,t1_1,v1_3,e1_2,e1_3,s1_3,t1_2,t1_3", q(0), "worked-example"},
            {"C the rim", "@rim", q(1), "worked-example"},
            {"X", "@all", q(1), "worked-example"},
        };
        d.checks = {
            {"TM1", Verdict::pass, "worked-example"},
            {"additive.closed-open", Verdict::fail, "worked-example"},
        };
        d.cover_target = "@all";
        d.cover_size = 3;
        d.cover_sum = q(0);
        out.push_back(d);
    }
    {
        DemoSpec d;
        d.name = "line-plane";
        d.space = "plane(4)";
        d.ssf = "line-point L=b0,v0,e0,v1,b1 p=np";
        d.summary = "line and point in the plane: a closed half-plane and its complement both have measure 0";
        d.rows = {
            {"F closed half-plane without p", "b0,v0,e0,v1,b1,u0", q(0), "worked-example"},
            {"X minus F", "X-b0,v0,e0,v1,b1,u0", q(0), "worked-example"},
            {"X", "@all", q(1), "worked-example"},
            {"V bounded open disk around p", "np,a0,a1,a2,a3,t0,t1,t2,t3", q(0), "worked-example"},
            {"X minus V", "X-np,a0,a1,a2,a3,t0,t1,t2,t3", q(0), "worked-example"},
        };
        d.cover_target = "@all";
        d.cover_size = 3;
        out.push_back(d);
    }
    {
        DemoSpec d;
        d.name = "two-point-plane";
        d.space = "plane(4)";
        d.ssf = "two-point p1=v0 p2=v2 w=@uniform rule=doubled-local";
        d.summary = "two marked points in the plane: C = K1 + K2 has twice its weight";
        d.rows = {
            {"K1 ball around p1", "np,a0,v0", q(2), "worked-example"},
            {"K2 ball around p2", "np,a2,v2", q(2), "worked-example"},
            {"C = K1 + K2", "np,a0,v0,a2,v2", q(6), "worked-example"},
            {"no marked point", "np", q(0), "by-definition"},
        };
        d.cover_target = "np,a0,v0,a2,v2";
        d.cover_size = 2;
        out.push_back(d);
    }
    {
        DemoSpec d;
        d.name = "threshold-plane";
        d.space = "plane(4)";
        d.ssf = "threshold w=@uniform:2/3 t=1";
        d.summary = "weights cut at 1: a compact set of weight 4/3 is covered by sets of measure 0";
        d.rows = {
            {"C compact of weight 4/3", "v0,e0,v1", q(4, 3), "worked-example"},
            {"open star of v0", "v0,e0,e3,a0,b0,t0,t3,u0,u3", q(0), "worked-example"},
            {"open star of v1", "v1,e0,e1,a1,b1,t0,t1,u0,u1", q(0), "worked-example"},
            {"X", "@all", Value::inf(), "worked-example"},
        };
        d.cover_target = "v0,e0,v1";
        d.cover_size = 2;
        d.cover_sum = q(0);
        out.push_back(d);
    }
    return out;
}

}  // namespace

const std::vector<DemoSpec>& demo_specs() {
    static const std::vector<DemoSpec> specs = build_specs();
    return specs;
}

const DemoSpec& find_demo(const std::string& name) {
    for (const auto& d : demo_specs())
        if (d.name == name) return d;
    throw std::out_of_range("unknown demo '" + name + "'");
}

Region demo_region(const FiniteSpace& sp, const std::string& literal) {
    if (literal.rfind("X-", 0) == 0) return sp.all() - sp.parse_region(literal.substr(2));
    return sp.parse_region(literal);
}

bool DemoResult::passed() const {
    for (const auto& r : rows)
        if (!r.ok) return false;
    for (const auto& c : checks)
        if (!c.ok) return false;
    return cover_ok && classified_proper;
}

DemoResult run_demo(const DemoSpec& spec, const ValidationBudget& budget) {
    DemoResult res;
    res.name = spec.name;
    res.ssf = spec.ssf;
    res.space = std::make_shared<const FiniteSpace>(build_named(spec.space));
    const FiniteSpace& sp = *res.space;
    SolidSetFunction lambda = parse_ssf(res.space, spec.ssf);
    TopMeasure mu = memoize(extend(lambda));

    std::optional<oracle::Oracle> orc;
    if (sp.all().count() <= oracle::OracleBudget{}.max_cells) orc.emplace(sp);
    std::optional<oracle::BruteForceMu> brute;
    if (orc) brute.emplace(*orc, lambda);

    for (const auto& row : spec.rows) {
        DemoRowResult r;
        r.row = row;
        r.region = demo_region(sp, row.region);
        r.actual = mu(r.region);
        r.ok = r.actual == row.expected;
        if (brute) {
            r.oracle = (*brute)(r.region);
            r.ok = r.ok && *r.oracle == row.expected;
        }
        res.rows.push_back(r);
    }

    res.tm = validate_tm(mu, budget);
    res.classified_proper = res.tm.classification == "proper topological measure";
    for (const auto& chk : spec.checks) {
        DemoCheckResult c;
        c.check = chk;
        if (const Check* found = res.tm.find(chk.id)) c.actual = found->verdict;
        c.ok = c.actual == chk.expected;
        res.checks.push_back(c);
    }

    if (!spec.cover_target.empty()) {
        Region target = demo_region(sp, spec.cover_target);
        res.cover = find_nonsubadditive_cover(mu, spec.cover_size, target, budget.search_nodes);
        res.cover_ok = res.cover.has_value() && res.cover->pieces.size() <= spec.cover_size &&
                       (spec.cover_sum ? res.cover->sum() == *spec.cover_sum : res.cover->sum() < res.cover->target_value);
    }
    return res;
}

}  // namespace topomeasure
