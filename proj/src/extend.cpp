#include "topomeasure/extend.hpp"

namespace topomeasure {

Value lambda1(const SolidSetFunction& lambda, const Region& a) {
    const FiniteSpace& sp = lambda.space();
    if (!in_hull_domain(sp, a))
        throw PreconditionError("lambda1 needs a bounded connected open or closed set, got {" + sp.format_region(a) + "}");
    if (a.empty()) return Value(0);
    Region hull = a;
    Value holes(0);
    for (const auto& b : bounded_complement_components(sp, a)) {
        hull |= b;
        holes += lambda(b);
    }
    return lambda(hull) - holes;
}

Value lambda2(const SolidSetFunction& lambda, const Region& k) {
    const FiniteSpace& sp = lambda.space();
    if (!sp.is_compact(k)) throw PreconditionError("lambda2 needs a compact set, got {" + sp.format_region(k) + "}");
    Value total(0);
    for (const auto& c : sp.components(k)) total += lambda1(lambda, c);
    return total;
}

Region max_compact_inside(const FiniteSpace& sp, const Region& u) {
    Region k;
    u.for_each([&](std::size_t i) {
        if (sp.down(i).subset_of(u)) k.set(i);
    });
    return k;
}

Value mu_open(const SolidSetFunction& lambda, const Region& u) {
    const FiniteSpace& sp = lambda.space();
    if (!sp.is_open(u)) throw PreconditionError("mu_open needs an open set, got {" + sp.format_region(u) + "}");
    return lambda2(lambda, max_compact_inside(sp, u));
}

Value mu_closed(const SolidSetFunction& lambda, const Region& f) {
    const FiniteSpace& sp = lambda.space();
    if (!sp.is_closed(f)) throw PreconditionError("mu_closed needs a closed set, got {" + sp.format_region(f) + "}");
    return mu_open(lambda, sp.up_closure(f));
}

Value mu(const SolidSetFunction& lambda, const Region& a) {
    const FiniteSpace& sp = lambda.space();
    if (sp.is_open(a)) return mu_open(lambda, a);
    if (sp.is_closed(a)) return mu_closed(lambda, a);
    throw PreconditionError("mu is defined on open and closed sets only, got {" + sp.format_region(a) + "}");
}

namespace {

Value grubb_open(const SolidSetFunction& lambda, const Region& u) {
    const FiniteSpace& sp = lambda.space();
    return lambda(sp.all()) - lambda2(lambda, sp.all() - u);
}

}  // namespace

Value grubb_mu(const SolidSetFunction& lambda, const Region& a) {
    const FiniteSpace& sp = lambda.space();
    if (!sp.compact()) throw PreconditionError("grubb_mu needs a compact space");
    if (sp.is_open(a)) return grubb_open(lambda, a);
    if (sp.is_closed(a)) return grubb_open(lambda, sp.all()) - grubb_open(lambda, sp.all() - a);
    throw PreconditionError("grubb_mu is defined on open and closed sets only, got {" + sp.format_region(a) + "}");
}

TopMeasure extend(const SolidSetFunction& lambda) {
    return TopMeasure{lambda.space_ptr(), lambda.descriptor(), [lambda](const Region& a) { return mu(lambda, a); }};
}

}  // namespace topomeasure
