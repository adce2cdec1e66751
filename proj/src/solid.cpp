#include "topomeasure/solid.hpp"

#include <algorithm>

namespace topomeasure {

namespace {

std::vector<std::size_t> linear_extension(const FiniteSpace& sp, const Region& within) {
    std::vector<std::size_t> order = within.indices();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sp.down(a).count() < sp.down(b).count();
    });
    return order;
}

}  // namespace

bool is_solid(const FiniteSpace& sp, const Region& r) {
    if (!sp.is_connected(r)) return false;
    Region rest = sp.all() - r;
    if (sp.compact()) return sp.is_connected(rest);
    for (const auto& c : sp.components(rest))
        if (sp.is_bounded(c)) return false;
    return true;
}

SolidClass classify(const FiniteSpace& sp, const Region& r) {
    SolidClass c;
    c.connected = sp.is_connected(r);
    c.open = sp.is_open(r);
    c.closed = sp.is_closed(r);
    c.bounded = sp.is_bounded(r);
    c.compact = c.closed && c.bounded;
    auto comps = sp.complement_components(r);
    c.complement_component_count = comps.size();
    for (const auto& cc : comps)
        if (!cc.bounded) ++c.unbounded_complement_count;
    c.semisolid = c.connected;
    if (sp.compact())
        c.solid = c.connected && comps.size() <= 1;
    else
        c.solid = c.connected && c.unbounded_complement_count == comps.size();
    return c;
}

bool in_hull_domain(const FiniteSpace& sp, const Region& r) {
    return sp.is_bounded(r) && sp.is_connected(r) && (sp.is_open(r) || sp.is_closed(r));
}

std::vector<Region> bounded_complement_components(const FiniteSpace& sp, const Region& r) {
    std::vector<Region> out;
    for (const auto& c : sp.components(sp.all() - r))
        if (sp.is_bounded(c)) out.push_back(c);
    return out;
}

Region solid_hull(const FiniteSpace& sp, const Region& r) {
    if (!in_hull_domain(sp, r))
        throw PreconditionError("solid hull needs a bounded connected open or closed set, got {" + sp.format_region(r) + "}");
    if (r.empty()) return r;
    Region h = r;
    for (const auto& b : bounded_complement_components(sp, r)) h |= b;
    return h;
}

std::vector<Piece> decompose_open_minus_compact(const FiniteSpace& sp, const Region& v, const Region& c,
                                                DecompMode mode) {
    if (!c.subset_of(v)) throw PreconditionError("C is not contained in V");
    if (!sp.is_open(v) || !sp.is_bounded(v) || !sp.is_connected(v))
        throw PreconditionError("V must be a bounded open semisolid set");
    if (!sp.is_compact(c)) throw PreconditionError("C must be compact");
    bool v_solid = is_solid(sp, v);
    if (mode == DecompMode::solid_compact && !is_solid(sp, c)) throw PreconditionError("C must be solid");

    std::vector<Piece> out;
    for (const auto& p : sp.components(v - c)) out.push_back({p, classify(sp, p)});

    auto violation = [&](const Piece& p, const std::string& what) {
        throw ModelViolation("piece {" + sp.format_region(p.cells) + "} of V \\ C is not " + what);
    };
    for (const auto& p : out) {
        if (!p.cls.open || !p.cls.bounded) violation(p, "bounded open");
        if (!p.cls.semisolid) violation(p, "semisolid");
        if (mode == DecompMode::solid_compact && v_solid && out.size() > 1 && !p.cls.solid) violation(p, "solid");
    }
    return out;
}

bool enumerate_closed(const FiniteSpace& sp, const Region& within, const RegionVisitor& visit) {
    auto order = linear_extension(sp, within);
    std::vector<Region> strict_below(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        strict_below[k] = (sp.down(order[k]) & sp.all()) - Region::single(order[k]);
    Region cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == order.size()) return visit(cur);
        if (!rec(k + 1)) return false;
        if (strict_below[k].subset_of(cur)) {
            cur.set(order[k]);
            bool go = rec(k + 1);
            cur.reset(order[k]);
            if (!go) return false;
        }
        return true;
    };
    return rec(0);
}

bool enumerate_open(const FiniteSpace& sp, const Region& within, const RegionVisitor& visit) {
    auto order = linear_extension(sp, within);
    std::reverse(order.begin(), order.end());
    std::vector<Region> strict_above(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) strict_above[k] = sp.up(order[k]) - Region::single(order[k]);
    Region cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == order.size()) return visit(cur);
        if (!rec(k + 1)) return false;
        if (strict_above[k].subset_of(cur)) {
            cur.set(order[k]);
            bool go = rec(k + 1);
            cur.reset(order[k]);
            if (!go) return false;
        }
        return true;
    };
    return rec(0);
}

SolidCatalog enumerate_bounded_solid_sets(const FiniteSpace& sp, std::size_t cap) {
    SolidCatalog cat;
    auto push = [&](std::vector<Region>& into, const Region& r) {
        if (cat.size() >= cap) {
            cat.truncated = true;
            return false;
        }
        into.push_back(r);
        return true;
    };
    Region bounded_part = sp.all() - sp.frontier();
    enumerate_closed(sp, bounded_part, [&](const Region& r) {
        if (!is_solid(sp, r)) return true;
        return push(cat.compact, r);
    });
    if (!cat.truncated) {
        enumerate_open(sp, sp.core(), [&](const Region& r) {
            if (sp.is_closed(r) || !is_solid(sp, r)) return true;
            return push(cat.open, r);
        });
    }
    std::sort(cat.compact.begin(), cat.compact.end());
    std::sort(cat.open.begin(), cat.open.end());
    return cat;
}

std::optional<Interpolant> interpolate(const FiniteSpace& sp, const Region& k, const Region& w) {
    if (!k.subset_of(w)) return std::nullopt;
    Region start = sp.up_closure(k);
    if (!start.subset_of(w & sp.core())) return std::nullopt;
    std::optional<Interpolant> found;
    // Opens V between up(K) and W; try closure(V) as D first, then any compact connected D.
    enumerate_open(sp, w & sp.core(), [&](const Region& v) {
        if (!start.subset_of(v) || !sp.is_connected(v)) return true;
        Region cl = sp.closure(v);
        if (cl.subset_of(w) && sp.is_bounded(cl) && sp.is_connected(cl)) {
            found = Interpolant{v, cl};
            return false;
        }
        enumerate_closed(sp, w - sp.frontier(), [&](const Region& d) {
            if (v.subset_of(d) && sp.is_connected(d)) {
                found = Interpolant{v, d};
                return false;
            }
            return true;
        });
        return !found;
    });
    return found;
}

}  // namespace topomeasure
