#pragma once

#include "topomeasure/partition.hpp"
#include "topomeasure/report.hpp"
#include "topomeasure/solid.hpp"
#include "topomeasure/value.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace topomeasure {

using SpacePtr = std::shared_ptr<const FiniteSpace>;

// Nonnegative rational weight per cell; lambda0(A) is the weight sum over A.
class Weights {
public:
    Weights() = default;
    explicit Weights(std::size_t n) : w_(n, Rational(0)) {}

    static Weights uniform_vertices(const FiniteSpace& sp, Rational unit = 1);
    // "@uniform" or "@uniform:<q>" (q per vertex), "id:q,id:q,..." or a region literal (1 per cell).
    static Weights parse(const FiniteSpace& sp, const std::string& text);

    void set(std::size_t i, Rational q) { w_.at(i) = q; }
    Rational at(std::size_t i) const { return w_.at(i); }
    Value sum(const Region& r) const;
    std::size_t size() const { return w_.size(); }

private:
    std::vector<Rational> w_;
};

// A set function on the bounded solid sets of a space.
class SolidSetFunction {
public:
    using Eval = std::function<Value(const Region&)>;

    SolidSetFunction(SpacePtr space, std::string descriptor, Eval eval);

    const FiniteSpace& space() const { return *space_; }
    const SpacePtr& space_ptr() const { return space_; }
    const std::string& descriptor() const { return descriptor_; }

    Value operator()(const Region& a) const;

private:
    SpacePtr space_;
    std::string descriptor_;
    Eval eval_;
    struct Cache {
        std::mutex mu;
        std::unordered_map<Region, Value, CellSetHash> values;
    };
    std::shared_ptr<Cache> cache_;
};

SolidSetFunction make_point_majority(SpacePtr sp, const Region& points);
enum class AarnesVariant { subcomplex, points };
SolidSetFunction make_aarnes_circle(SpacePtr sp, const Region& b, std::size_t p,
                                    AarnesVariant variant = AarnesVariant::subcomplex);
// lambda(A) = 1 iff p in A and A meets L.
SolidSetFunction make_line_point(SpacePtr sp, const Region& line, std::size_t p);
enum class TwoPointRule { doubled_total, doubled_local };
SolidSetFunction make_two_point(SpacePtr sp, std::size_t p1, std::size_t p2, Weights w, TwoPointRule rule);
SolidSetFunction make_threshold(SpacePtr sp, Weights w, Rational threshold);
SolidSetFunction make_restricted_measure(SpacePtr sp, Weights w);
// Restriction to X of a set function given on the compactification X-hat.
SolidSetFunction make_restricted_from_hat(SpacePtr sp, const SolidSetFunction& on_hat);

// Parses "kind key=value ..."; a "hat:" prefix builds the function on X-hat and restricts it.
SolidSetFunction parse_ssf(SpacePtr sp, const std::string& descriptor);

}  // namespace topomeasure

namespace topomeasure {

struct ValidationBudget {
    std::size_t catalog_cap = 500000;
    std::size_t search_nodes = 5000000;
    std::size_t max_parts = 8;

    // TOPOMEASURE_BUDGET overrides the search node limit.
    static ValidationBudget from_env();
};

// Conditions s1..s4 exactly over the enumerated solid sets; on compact spaces also the
// alternative compact-space conditions and the genus-0 complement identity.
Report validate_ssf(const SolidSetFunction& lambda, const ValidationBudget& budget = {});

}  // namespace topomeasure
