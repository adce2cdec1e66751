#pragma once

#include "topomeasure/report.hpp"
#include "topomeasure/ssf.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

// Brute-force reference. Reads only the raw cells, covers and infinity cell of a FiniteSpace
// and recomputes everything else from subset scans.
namespace topomeasure::oracle {

struct OracleBudget {
    std::size_t max_cells = 18;        // cells of X
    std::size_t max_open_sets = 200000;
    std::size_t max_family = 4;
};

class BudgetRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Mask = std::uint64_t;

struct OracleComponent {
    Mask cells;
    bool bounded;
};

struct OracleClass {
    bool connected, open, closed, bounded, compact, solid, semisolid;
    std::size_t complement_component_count, unbounded_complement_count;
};

class Oracle {
public:
    explicit Oracle(const FiniteSpace& sp, OracleBudget budget = {});

    const FiniteSpace& space() const { return sp_; }
    const OracleBudget& budget() const { return budget_; }
    std::size_t x_cells() const { return x_cells_; }

    Mask to_mask(const Region& r) const;
    Region to_region(Mask m) const;
    Mask all() const { return all_; }

    bool is_open(Mask m) const;
    bool is_closed(Mask m) const;
    bool is_bounded(Mask m) const;
    bool is_connected(Mask m) const;
    // Minimal nonempty clopen subsets of m, ordered by least cell.
    std::vector<Mask> components(Mask m) const;
    std::vector<OracleComponent> complement_components(Mask m) const;
    OracleClass classify(Mask m) const;
    bool is_solid(Mask m) const;
    Mask hull(Mask m) const;

    // Every open (resp. closed) subset of X, in canonical order.
    const std::vector<Mask>& opens() const { return opens_; }
    const std::vector<Mask>& closeds() const { return closeds_; }
    std::vector<Mask> compacts() const;
    // Bounded solid sets, open or compact, in canonical order.
    std::vector<Mask> bounded_solids() const;

private:
    const FiniteSpace& sp_;
    OracleBudget budget_;
    std::size_t n_ = 0;        // cells of X-hat
    std::size_t x_cells_ = 0;  // cells of X
    std::optional<std::size_t> omega_;
    Mask all_ = 0;
    std::vector<Mask> above_, below_;  // reflexive, within X
    std::vector<Mask> opens_, closeds_;
};

// Canonical order: fewer cells first, then by mask value.
bool canonical_less(Mask a, Mask b);

// Literal sup of lambda2 over all compact subsets (open A) or inf over all open supersets (closed A).
class BruteForceMu {
public:
    BruteForceMu(const Oracle& o, const SolidSetFunction& lambda) : o_(o), lambda_(lambda) {}

    Value lambda1(Mask c);
    Value lambda2(Mask k);
    Value operator()(const Region& a);
    Value open_value(Mask u);
    Value closed_value(Mask f);

private:
    const Oracle& o_;
    const SolidSetFunction& lambda_;
    std::unordered_map<Mask, Value> open_memo_, lambda2_memo_;
};

Value brute_force_mu(const Oracle& o, const SolidSetFunction& lambda, const Region& a);

struct OracleVerdict {
    Verdict verdict = Verdict::pass;
    std::optional<Witness> witness;
    std::size_t instances = 0;
};

// "s1".."s4" on lambda, definition-literal over the oracle's own solid-set lists.
OracleVerdict exhaustive_ssf_check(const Oracle& o, const SolidSetFunction& lambda, const std::string& axiom);
// "TM1".."TM3" on an evaluator of open and closed sets.
OracleVerdict exhaustive_tm_check(const Oracle& o, const std::function<Value(const Region&)>& mu,
                                  const std::string& axiom);

// First open or closed region, in canonical order, where `candidate` differs from the literal mu.
struct Mismatch {
    Region region;
    Value expected;
    Value actual;
};
std::optional<Mismatch> compare_mu(const Oracle& o, const SolidSetFunction& lambda,
                                   const std::function<Value(const Region&)>& candidate);

// Engine vs oracle: mu on every open and closed region; components, complement components,
// classification and hull on every subset of X.
Report agreement_suite(const FiniteSpace& sp, const std::vector<SolidSetFunction>& lambdas,
                       const OracleBudget& budget = {});

}  // namespace topomeasure::oracle
