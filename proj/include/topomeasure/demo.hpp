#pragma once

#include "topomeasure/extend.hpp"

#include <optional>
#include <string>
#include <vector>

namespace topomeasure {

// Where an expected value comes from: "worked-example" (read off the example's own numbers),
// "by-definition" (immediate from the definitions) or "oracle" (brute-force value, frozen).
struct DemoRow {
    std::string label;
    std::string region;  // region literal; "X-<literal>" is the complement in X
    Value expected;
    std::string source;
};

struct DemoCheck {
    std::string id;  // a validate_tm check id
    Verdict expected;
    std::string source;
};

struct DemoSpec {
    std::string name;
    std::string space;  // builtin space descriptor
    std::string ssf;
    std::string summary;
    std::vector<DemoRow> rows;
    std::vector<DemoCheck> checks;
    std::string cover_target;  // region literal; empty means no cover search
    std::size_t cover_size = 0;
    std::optional<Value> cover_sum;  // required sum, or just below mu(target) when unset
};

const std::vector<DemoSpec>& demo_specs();
// Throws std::out_of_range for unknown names.
const DemoSpec& find_demo(const std::string& name);

Region demo_region(const FiniteSpace& sp, const std::string& literal);

struct DemoRowResult {
    DemoRow row;
    Region region;
    Value actual;
    std::optional<Value> oracle;  // set when the space is within the oracle budget
    bool ok = false;
};

struct DemoCheckResult {
    DemoCheck check;
    Verdict actual = Verdict::unknown;
    bool ok = false;
};

struct DemoResult {
    std::string name;
    SpacePtr space;
    std::string ssf;
    std::vector<DemoRowResult> rows;
    std::vector<DemoCheckResult> checks;
    std::optional<CoverWitness> cover;
    bool cover_ok = true;
    Report tm;
    bool classified_proper = false;

    bool passed() const;
};

DemoResult run_demo(const DemoSpec& spec, const ValidationBudget& budget = {});

}  // namespace topomeasure
