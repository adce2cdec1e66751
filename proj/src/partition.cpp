#include "topomeasure/partition.hpp"

#include <algorithm>
#include <map>

namespace topomeasure {

bool enumerate_solid_partitions(const FiniteSpace& sp, const SolidCatalog& catalog, const Region& target,
                                const PartitionSearch& limits, bool& truncated,
                                const std::function<bool(const SolidPartition&)>& visit) {
    truncated = false;
    std::map<std::size_t, std::vector<std::pair<Region, bool>>> by_first;
    for (const auto& c : catalog.compact)
        if (!c.empty() && c.subset_of(target)) by_first[c.first()].emplace_back(c, true);
    for (const auto& o : catalog.open)
        if (!o.empty() && o.subset_of(target)) by_first[o.first()].emplace_back(o, false);

    SolidPartition cur;
    cur.target = target;
    std::size_t nodes = 0;
    std::function<bool(const Region&)> rec = [&](const Region& rest) -> bool {
        if (rest.empty()) return visit(cur);
        if (cur.parts.size() >= limits.max_parts) return true;
        if (++nodes > limits.budget) {
            truncated = true;
            return false;
        }
        auto it = by_first.find(rest.first());
        if (it == by_first.end()) return true;
        for (const auto& [piece, closed] : it->second) {
            if (!piece.subset_of(rest)) continue;
            cur.parts.push_back(piece);
            if (closed) cur.closed_parts.push_back(cur.parts.size() - 1);
            bool go = rec(rest - piece);
            if (closed) cur.closed_parts.pop_back();
            cur.parts.pop_back();
            if (!go) return false;
        }
        return true;
    };
    return rec(target);
}

bool is_irreducible(const FiniteSpace& sp, const SolidPartition& p) {
    const std::size_t k = p.closed_parts.size();
    if (k > 20) throw PreconditionError("too many closed parts for the irreducibility check");
    for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
        Region rest = sp.all();
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (1u << j)) rest -= p.parts[p.closed_parts[j]];
        if (!sp.is_connected(rest)) return false;
    }
    return true;
}

namespace {

bool components_solid(const FiniteSpace& sp, const std::vector<Region>& comps) {
    for (const auto& c : comps)
        if (!is_solid(sp, c)) return false;
    return true;
}

// Connected complement for every proper subfamily.
bool every_proper_subfamily_connects(const FiniteSpace& sp, const std::vector<Region>& family) {
    const std::size_t k = family.size();
    for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
        Region rest = sp.all();
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (1u << j)) rest -= family[j];
        if (!sp.is_connected(rest)) return false;
    }
    return true;
}

SolidPartition partition_from(const FiniteSpace& sp, const std::vector<Region>& closed) {
    SolidPartition p;
    p.target = sp.all();
    Region rest = sp.all();
    for (const auto& c : closed) {
        p.closed_parts.push_back(p.parts.size());
        p.parts.push_back(c);
        rest -= c;
    }
    for (const auto& u : sp.components(rest)) p.parts.push_back(u);
    return p;
}

}  // namespace

GenusReport genus(const FiniteSpace& sp, std::size_t budget) {
    if (!sp.compact()) throw PreconditionError("genus is defined for compact spaces; use the compactification");
    GenusReport rep;
    rep.budget = budget;
    bool complete = enumerate_closed(sp, sp.all(), [&](const Region& d) {
        if (++rep.closed_sets_scanned > budget) return false;
        if (d.empty()) return true;
        auto comps = sp.components(d);
        if (comps.size() > 20 || !components_solid(sp, comps)) return true;
        auto open = sp.components(sp.all() - d);
        if (!components_solid(sp, open)) return true;
        if (!every_proper_subfamily_connects(sp, comps)) return true;
        std::size_t g = comps.size() - 1;
        if (g > rep.genus || (g > 0 && !rep.witness)) {
            rep.genus = g;
            rep.witness = partition_from(sp, comps);
        }
        return true;
    });
    rep.exact = complete;
    return rep;
}

std::optional<bool> hatX_genus0_check(const FiniteSpace& sp, std::size_t budget) {
    if (sp.compact()) throw PreconditionError("hatX_genus0_check needs a noncompact space");
    auto rep = genus(sp.compactification(), budget);
    if (rep.genus > 0) return false;
    if (!rep.exact) return std::nullopt;
    return true;
}

std::optional<std::vector<Region>> find_disconnecting_family(const FiniteSpace& sp, std::size_t budget) {
    std::optional<std::vector<Region>> found;
    std::size_t seen = 0;
    enumerate_closed(sp, sp.all(), [&](const Region& d) {
        if (++seen > budget) return false;
        if (d.empty()) return true;
        auto comps = sp.components(d);
        if (!components_solid(sp, comps)) return true;
        if (sp.is_connected(sp.all() - d)) return true;
        found = comps;
        return false;
    });
    return found;
}

std::optional<SolidPartition> irreducible_from_family(const FiniteSpace& sp, const std::vector<Region>& family) {
    const std::size_t k = family.size();
    if (k > 20) throw PreconditionError("family too large");
    // Subfamilies by increasing size; the first disconnecting one is minimal under inclusion.
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << k); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (auto m : masks) {
        std::vector<Region> sub;
        Region rest = sp.all();
        for (std::size_t j = 0; j < k; ++j)
            if (m & (1u << j)) {
                sub.push_back(family[j]);
                rest -= family[j];
            }
        if (sp.is_connected(rest)) continue;
        auto p = partition_from(sp, sub);
        if (!is_irreducible(sp, p)) continue;
        for (const auto& part : p.parts)
            if (!is_solid(sp, part)) return std::nullopt;
        return p;
    }
    return std::nullopt;
}

}  // namespace topomeasure
