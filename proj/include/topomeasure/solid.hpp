#pragma once

#include "topomeasure/space.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace topomeasure {

struct SolidClass {
    bool connected = false;
    bool open = false;
    bool closed = false;
    bool bounded = false;
    bool compact = false;
    bool solid = false;
    bool semisolid = false;
    std::size_t complement_component_count = 0;
    std::size_t unbounded_complement_count = 0;
};

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a decomposition piece does not have the class the structure lemmas promise.
class ModelViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SolidClass classify(const FiniteSpace& sp, const Region& r);
bool is_solid(const FiniteSpace& sp, const Region& r);

// Bounded, connected and open or closed.
bool in_hull_domain(const FiniteSpace& sp, const Region& r);
Region solid_hull(const FiniteSpace& sp, const Region& r);
// Bounded components of X \ r.
std::vector<Region> bounded_complement_components(const FiniteSpace& sp, const Region& r);

struct Piece {
    Region cells;
    SolidClass cls;
};

enum class DecompMode {
    // C compact solid, V bounded open solid or semisolid.
    solid_compact,
    // C a finite disjoint union of compact connected sets, V bounded open semisolid.
    connected_compacts,
};

std::vector<Piece> decompose_open_minus_compact(const FiniteSpace& sp, const Region& v, const Region& c,
                                                DecompMode mode = DecompMode::solid_compact);

// Visit every closed (resp. open) subset of X contained in `within`. The callback returns
// false to stop; the enumerators return false when stopped early.
using RegionVisitor = std::function<bool(const Region&)>;
bool enumerate_closed(const FiniteSpace& sp, const Region& within, const RegionVisitor& visit);
bool enumerate_open(const FiniteSpace& sp, const Region& within, const RegionVisitor& visit);

struct SolidCatalog {
    std::vector<Region> compact;  // compact solid sets, including the empty set
    std::vector<Region> open;     // bounded open solid sets that are not also compact
    bool truncated = false;

    std::size_t size() const { return compact.size() + open.size(); }
};

SolidCatalog enumerate_bounded_solid_sets(const FiniteSpace& sp, std::size_t cap);

struct Interpolant {
    Region v;  // bounded open semisolid
    Region d;  // compact semisolid
};

// Search for K ⊆ V ⊆ D ⊆ W with V bounded open semisolid and D compact semisolid.
std::optional<Interpolant> interpolate(const FiniteSpace& sp, const Region& k, const Region& w);

}  // namespace topomeasure
