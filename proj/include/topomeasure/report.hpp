#pragma once

#include "topomeasure/space.hpp"
#include "topomeasure/value.hpp"

#include <optional>
#include <string>
#include <vector>

namespace topomeasure {

enum class Verdict { pass, fail, unknown };

const char* verdict_name(Verdict v);

struct WitnessItem {
    std::string role;
    Region region;
    std::optional<Value> value;
};

struct Witness {
    std::string note;
    std::vector<WitnessItem> items;

    Witness() = default;
    explicit Witness(std::string n) : note(std::move(n)) {}

    Witness& add(std::string role, const Region& r, std::optional<Value> v = std::nullopt) {
        items.push_back({std::move(role), r, v});
        return *this;
    }
};

struct Check {
    std::string id;
    Verdict verdict = Verdict::pass;
    std::size_t instances = 0;
    std::string note;
    std::optional<Witness> witness;
    // Reported but left out of the overall verdict: properties a topological measure need not have.
    bool informational = false;

    Check() = default;
    explicit Check(std::string i) : id(std::move(i)) {}

    void fail(Witness w) {
        if (verdict != Verdict::fail) {
            verdict = Verdict::fail;
            witness = std::move(w);
        }
    }
    void out_of_budget() {
        if (verdict == Verdict::pass) verdict = Verdict::unknown;
    }
};

struct Report {
    std::string kind;
    std::string space;
    std::string subject;
    std::string classification;  // validate-tm only
    std::vector<Check> checks;

    bool all_pass() const;
    bool any_fail() const;
    bool any_unknown() const;
    const Check* find(const std::string& id) const;
};

}  // namespace topomeasure
