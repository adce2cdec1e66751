#include "topomeasure/ssf.hpp"

#include <sstream>

namespace topomeasure {

Weights Weights::uniform_vertices(const FiniteSpace& sp, Rational unit) {
    Weights w(sp.cell_count());
    sp.all().for_each([&](std::size_t i) {
        if (sp.is_vertex(i)) w.set(i, unit);
    });
    return w;
}

Weights Weights::parse(const FiniteSpace& sp, const std::string& text) {
    if (text == "@uniform") return uniform_vertices(sp);
    if (text.rfind("@uniform:", 0) == 0) {
        Value q = Value::parse(text.substr(9));
        if (q.is_inf() || q.rational() < Rational(0)) throw ParseError("bad uniform weight '" + text + "'");
        return uniform_vertices(sp, q.rational());
    }
    Weights w(sp.cell_count());
    if (text.find(':') == std::string::npos) {
        sp.parse_region(text).for_each([&](std::size_t i) { w.set(i, 1); });
        return w;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("weight entry '" + tok + "' is not id:q");
        std::size_t i = sp.index(tok.substr(0, colon));
        Value q;
        try {
            q = Value::parse(tok.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("bad weight in '" + tok + "'");
        }
        if (q.is_inf() || q.rational() < Rational(0)) throw ParseError("weight must be a nonnegative rational in '" + tok + "'");
        w.set(i, q.rational());
    }
    return w;
}

Value Weights::sum(const Region& r) const {
    Rational s(0);
    r.for_each([&](std::size_t i) { s += w_.at(i); });
    return Value(s);
}

SolidSetFunction::SolidSetFunction(SpacePtr space, std::string descriptor, Eval eval)
    : space_(std::move(space)), descriptor_(std::move(descriptor)), eval_(std::move(eval)),
      cache_(std::make_shared<Cache>()) {}

Value SolidSetFunction::operator()(const Region& a) const {
    {
        std::lock_guard lock(cache_->mu);
        auto it = cache_->values.find(a);
        if (it != cache_->values.end()) return it->second;
    }
    Value v = eval_(a);
    std::lock_guard lock(cache_->mu);
    cache_->values.emplace(a, v);
    return v;
}

namespace {

void require_vertex(const FiniteSpace& sp, std::size_t i) {
    if (!sp.all().test(i) || !sp.is_vertex(i))
        throw PreconditionError("marked point " + sp.cell(i).id + " is not a vertex of X");
}

}  // namespace

SolidSetFunction make_point_majority(SpacePtr sp, const Region& points) {
    std::size_t m = points.count();
    if (m % 2 == 0) throw PreconditionError("point-majority needs an odd number of points, got " + std::to_string(m));
    points.for_each([&](std::size_t i) { require_vertex(*sp, i); });
    std::int64_t n = static_cast<std::int64_t>(m / 2);
    std::string desc = "point-majority points=" + sp->format_region(points);
    return SolidSetFunction(sp, desc, [points, n](const Region& a) {
        std::int64_t hits = static_cast<std::int64_t>((a & points).count());
        if (n == 0) return Value(hits);
        return Value(Rational(hits / 2, n));
    });
}

SolidSetFunction make_aarnes_circle(SpacePtr sp, const Region& b, std::size_t p, AarnesVariant variant) {
    require_vertex(*sp, p);
    if (b.test(p)) throw PreconditionError("p lies in B");
    if (b.empty()) throw PreconditionError("B is empty");
    if (variant == AarnesVariant::subcomplex) {
        if (!sp->is_closed(b)) throw PreconditionError("B is not a closed subcomplex");
    } else {
        b.for_each([&](std::size_t i) { require_vertex(*sp, i); });
    }
    std::string desc = "aarnes-circle B=" + sp->format_region(b) + " p=" + sp->cell(p).id +
                       (variant == AarnesVariant::points ? " variant=points" : "");
    return SolidSetFunction(sp, desc, [b, p](const Region& a) {
        bool one = b.subset_of(a) || (a.test(p) && a.intersects(b));
        return Value(one ? 1 : 0);
    });
}

SolidSetFunction make_line_point(SpacePtr sp, const Region& line, std::size_t p) {
    require_vertex(*sp, p);
    if (line.test(p)) throw PreconditionError("p lies on L");
    if (line.empty()) throw PreconditionError("L is empty");
    std::string desc = "line-point L=" + sp->format_region(line) + " p=" + sp->cell(p).id;
    return SolidSetFunction(sp, desc, [line, p](const Region& a) {
        return Value(a.test(p) && a.intersects(line) ? 1 : 0);
    });
}

SolidSetFunction make_two_point(SpacePtr sp, std::size_t p1, std::size_t p2, Weights w, TwoPointRule rule) {
    require_vertex(*sp, p1);
    require_vertex(*sp, p2);
    if (p1 == p2) throw PreconditionError("two-point needs distinct points");
    Value total = w.sum(sp->all());
    std::string desc = "two-point p1=" + sp->cell(p1).id + " p2=" + sp->cell(p2).id +
                       (rule == TwoPointRule::doubled_total ? " rule=doubled-total" : " rule=doubled-local");
    return SolidSetFunction(sp, desc, [=](const Region& a) {
        int hits = (a.test(p1) ? 1 : 0) + (a.test(p2) ? 1 : 0);
        if (hits == 0) return Value(0);
        if (hits == 1) return w.sum(a);
        return rule == TwoPointRule::doubled_total ? 2 * total : 2 * w.sum(a);
    });
}

SolidSetFunction make_threshold(SpacePtr sp, Weights w, Rational threshold) {
    if (threshold <= Rational(0)) throw PreconditionError("threshold must be positive");
    std::string desc = "threshold t=" + Value(threshold).str();
    const FiniteSpace* s = sp.get();
    return SolidSetFunction(sp, desc, [=](const Region& a) {
        Value l0 = w.sum(a);
        bool compact_rule = s->is_closed(a);
        bool zero = compact_rule ? l0 < Value(threshold) : l0 <= Value(threshold);
        return zero ? Value(0) : l0;
    });
}

SolidSetFunction make_restricted_measure(SpacePtr sp, Weights w) {
    const FiniteSpace* s = sp.get();
    return SolidSetFunction(sp, "measure", [=](const Region& a) {
        if (s->is_closed(a)) return w.sum(a);
        Value best(0);
        enumerate_closed(*s, a - s->frontier(), [&](const Region& c) {
            if (is_solid(*s, c)) best = std::max(best, w.sum(c));
            return true;
        });
        return best;
    });
}

SolidSetFunction make_restricted_from_hat(SpacePtr sp, const SolidSetFunction& on_hat) {
    if (sp->compact()) throw PreconditionError("restriction from X-hat needs a noncompact space");
    if (on_hat.space().cell_count() != sp->cell_count())
        throw PreconditionError("X-hat function lives on a space of a different size");
    return SolidSetFunction(sp, "hat:" + on_hat.descriptor(), [on_hat](const Region& a) { return on_hat(a); });
}

namespace {

std::map<std::string, std::string> parse_params(std::istringstream& is, const std::string& descriptor) {
    std::map<std::string, std::string> out;
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + tok + "' in ssf '" + descriptor + "'");
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

}  // namespace

SolidSetFunction parse_ssf(SpacePtr sp, const std::string& descriptor) {
    if (descriptor.rfind("hat:", 0) == 0) {
        if (sp->compact()) throw ParseError("'hat:' needs a noncompact space");
        auto hat = std::make_shared<const FiniteSpace>(sp->compactification());
        return make_restricted_from_hat(sp, parse_ssf(hat, descriptor.substr(4)));
    }
    std::istringstream is(descriptor);
    std::string kind;
    is >> kind;
    auto params = parse_params(is, descriptor);
    auto take = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end()) throw ParseError("ssf '" + kind + "' needs parameter '" + key + "'");
        std::string v = it->second;
        params.erase(it);
        return v;
    };
    auto take_or = [&](const std::string& key, const std::string& dflt) {
        return params.count(key) ? take(key) : dflt;
    };
    auto rational = [&](const std::string& text) {
        Value v = Value::parse(text);
        if (v.is_inf()) throw ParseError("expected a finite rational, got '" + text + "'");
        return v.rational();
    };
    auto one_cell = [&](const std::string& text) {
        Region r = sp->parse_region(text);
        if (r.count() != 1) throw ParseError("expected a single cell, got '" + text + "'");
        return r.first();
    };
    auto finish = [&](SolidSetFunction f) {
        if (!params.empty()) throw ParseError("unknown parameter '" + params.begin()->first + "' for ssf '" + kind + "'");
        return f;
    };

    if (kind == "point-majority") return finish(make_point_majority(sp, sp->parse_region(take("points"))));
    if (kind == "aarnes-circle") {
        Region b = sp->parse_region(take("B"));
        std::size_t p = one_cell(take("p"));
        std::string variant = take_or("variant", "subcomplex");
        if (variant != "subcomplex" && variant != "points") throw ParseError("variant must be subcomplex or points");
        return finish(make_aarnes_circle(sp, b, p, variant == "points" ? AarnesVariant::points : AarnesVariant::subcomplex));
    }
    if (kind == "line-point") {
        Region l = sp->parse_region(take("L"));
        return finish(make_line_point(sp, l, one_cell(take("p"))));
    }
    if (kind == "two-point") {
        std::size_t p1 = one_cell(take("p1"));
        std::size_t p2 = one_cell(take("p2"));
        Weights w = Weights::parse(*sp, take_or("w", "@uniform"));
        std::string rule = take_or("rule", "doubled-local");
        if (rule != "doubled-total" && rule != "doubled-local") throw ParseError("rule must be doubled-total or doubled-local");
        return finish(make_two_point(sp, p1, p2, w, rule == "doubled-total" ? TwoPointRule::doubled_total : TwoPointRule::doubled_local));
    }
    if (kind == "threshold") {
        Weights w = Weights::parse(*sp, take_or("w", "@uniform"));
        return finish(make_threshold(sp, w, rational(take_or("t", "1"))));
    }
    if (kind == "measure") return finish(make_restricted_measure(sp, Weights::parse(*sp, take_or("w", "@uniform"))));
    throw ParseError("unknown ssf kind '" + kind + "'");
}

}  // namespace topomeasure
