#pragma once

#include "topomeasure/ssf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace topomeasure {

// lambda(hull A) minus lambda over the bounded components of X \ A.
Value lambda1(const SolidSetFunction& lambda, const Region& a);
// Sum of lambda1 over the components of a compact set.
Value lambda2(const SolidSetFunction& lambda, const Region& k);

// Largest compact subset of an open set: cells whose closure in X-hat stays inside U.
Region max_compact_inside(const FiniteSpace& sp, const Region& u);

Value mu_open(const SolidSetFunction& lambda, const Region& u);
Value mu_closed(const SolidSetFunction& lambda, const Region& f);
// Dispatches on openness; for a clopen set both formulas agree.
Value mu(const SolidSetFunction& lambda, const Region& a);

// Compact-space path: lambda2(U) = lambda(X) - lambda2(X \ U) on opens, mu(C) = mu(X) - mu(X \ C) on closeds.
Value grubb_mu(const SolidSetFunction& lambda, const Region& a);

// Evaluator on open and closed sets; the engine-built measure or a user-supplied one.
struct TopMeasure {
    SpacePtr space;
    std::string source;
    std::function<Value(const Region&)> eval;

    Value operator()(const Region& a) const { return eval(a); }
};

TopMeasure extend(const SolidSetFunction& lambda);
// Same values, cached per region; validators evaluate the same sets many times.
TopMeasure memoize(TopMeasure mu);

// TM1 on K ∪ O, TM2, TM3, the finite-additivity conditions, compact-space conditions and the
// compact-pair subadditivity test, which sets `classification`.
Report validate_tm(const TopMeasure& mu, const ValidationBudget& budget = {});

// How mu relates to lambda: mu = lambda on bounded solid sets, mu = lambda2 on finite unions of
// compact connected sets, simplicity, and agreement with grubb_mu on compact spaces.
Report validate_extension(const SolidSetFunction& lambda, const ValidationBudget& budget = {});

struct CoverWitness {
    Region target;
    Value target_value;
    std::vector<Region> pieces;
    std::vector<Value> values;
    Value sum() const;
};

// Solid open or closed sets covering `target` (default X) whose values sum below mu(target).
// Searches covers of increasing size up to max_cover_size.
std::optional<CoverWitness> find_nonsubadditive_cover(const TopMeasure& mu, std::size_t max_cover_size,
                                                      std::optional<Region> target = std::nullopt,
                                                      std::size_t budget = 5000000);

}  // namespace topomeasure
