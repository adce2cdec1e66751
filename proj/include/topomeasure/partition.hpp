#pragma once

#include "topomeasure/solid.hpp"

#include <optional>
#include <vector>

namespace topomeasure {

struct SolidPartition {
    Region target;
    std::vector<Region> parts;
    std::vector<std::size_t> closed_parts;  // indices of compact solid parts
};

struct PartitionSearch {
    std::size_t max_parts = 8;
    std::size_t budget = 2000000;  // search nodes
};

// Every partition of `target` into at most max_parts nonempty bounded solid pieces, drawn from
// `catalog`. Returns false if the visitor stopped; sets `truncated` when the budget ran out.
bool enumerate_solid_partitions(const FiniteSpace& sp, const SolidCatalog& catalog, const Region& target,
                                const PartitionSearch& limits, bool& truncated,
                                const std::function<bool(const SolidPartition&)>& visit);

bool is_irreducible(const FiniteSpace& sp, const SolidPartition& p);

struct GenusReport {
    std::size_t genus = 0;
    bool exact = false;  // false: genus is only a lower bound
    std::optional<SolidPartition> witness;
    std::size_t closed_sets_scanned = 0;
    std::size_t budget = 0;
};

// Exhaustive over closed sets: a closed family of disjoint solids is exactly the component set
// of its union, so each closed set with solid components is one candidate family.
GenusReport genus(const FiniteSpace& sp, std::size_t budget = 5000000);

// Genus of X-hat is 0; nullopt when the search ran out of budget.
std::optional<bool> hatX_genus0_check(const FiniteSpace& sp, std::size_t budget = 5000000);

// A family of disjoint closed solid sets whose complement is disconnected, if any.
std::optional<std::vector<Region>> find_disconnecting_family(const FiniteSpace& sp, std::size_t budget = 5000000);

// Smallest subfamily whose complement is still disconnected, with the open components added:
// a nontrivial irreducible partition generated by the family.
std::optional<SolidPartition> irreducible_from_family(const FiniteSpace& sp, const std::vector<Region>& family);

}  // namespace topomeasure
