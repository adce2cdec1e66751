#include "topomeasure/ssf.hpp"

#include <algorithm>
#include <cstdlib>

namespace topomeasure {

ValidationBudget ValidationBudget::from_env() {
    ValidationBudget b;
    if (const char* env = std::getenv("TOPOMEASURE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) b.search_nodes = static_cast<std::size_t>(v);
    }
    return b;
}

namespace {

struct Weighted {
    Region set;
    Value value;
};

// Drop sets that have a proper subset in the list with at least the same value.
std::vector<Weighted> undominated(std::vector<Weighted> items) {
    std::vector<Weighted> out;
    for (const auto& t : items) {
        bool dominated = false;
        for (const auto& s : items) {
            if (s.set != t.set && s.set.subset_of(t.set) && s.value >= t.value) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(t);
    }
    return out;
}

struct Packing {
    Value total;
    std::vector<Weighted> chosen;
    bool complete = true;
};

// Maximum value of a pairwise disjoint subfamily, by branch and bound.
Packing max_packing(std::vector<Weighted> items, std::size_t& nodes, std::size_t budget) {
    std::sort(items.begin(), items.end(), [](const Weighted& a, const Weighted& b) {
        if (a.value != b.value) return b.value < a.value;
        return a.set < b.set;
    });
    std::vector<Value> suffix(items.size() + 1, Value(0));
    for (std::size_t i = items.size(); i-- > 0;) suffix[i] = suffix[i + 1] + items[i].value;
    Packing best{Value(0), {}, true};
    std::vector<Weighted> cur;
    std::function<void(std::size_t, const Region&, Value)> rec = [&](std::size_t i, const Region& used, Value sum) {
        if (!best.complete) return;
        if (sum > best.total) {
            best.total = sum;
            best.chosen = cur;
        }
        if (i == items.size() || sum + suffix[i] <= best.total) return;
        if (++nodes > budget) {
            best.complete = false;
            return;
        }
        if (!items[i].set.intersects(used)) {
            cur.push_back(items[i]);
            rec(i + 1, used | items[i].set, sum + items[i].value);
            cur.pop_back();
        }
        rec(i + 1, used, sum);
    };
    rec(0, Region{}, Value(0));
    return best;
}

}  // namespace

Report validate_ssf(const SolidSetFunction& lambda, const ValidationBudget& budget) {
    const FiniteSpace& sp = lambda.space();
    Report rep;
    rep.kind = "ssf";
    rep.space = sp.name();
    rep.subject = lambda.descriptor();

    SolidCatalog cat = enumerate_bounded_solid_sets(sp, budget.catalog_cap);
    std::vector<Region> compacts = cat.compact;
    std::vector<Region> opens = cat.open;
    for (const auto& c : cat.compact)
        if (sp.is_open(c)) opens.push_back(c);
    std::sort(opens.begin(), opens.end());

    Check total{"domain"};
    if (cat.truncated) {
        total.out_of_budget();
        total.note = "solid catalog truncated at " + std::to_string(budget.catalog_cap);
    }
    total.instances = cat.size();
    if (!lambda(Region{}).is_zero()) total.fail(Witness{"lambda(empty) != 0"}.add("A", Region{}, lambda(Region{})));
    for (const auto* list : {&cat.compact, &cat.open}) {
        for (const auto& a : *list) {
            Value v = lambda(a);
            if (v.is_inf()) total.fail(Witness{"lambda must be finite"}.add("A", a, v));
        }
    }
    rep.checks.push_back(total);

    std::size_t nodes = 0;

    // s1: superadditivity over disjoint compact solid families inside a compact solid.
    Check s1{"s1"};
    {
        std::vector<Weighted> positive;
        for (const auto& c : compacts) {
            Value v = lambda(c);
            if (!c.empty() && v > Value(0)) positive.push_back({c, v});
        }
        positive = undominated(std::move(positive));
        for (const auto& c : compacts) {
            ++s1.instances;
            std::vector<Weighted> inside;
            for (const auto& w : positive)
                if (w.set.subset_of(c)) inside.push_back(w);
            Packing p = max_packing(inside, nodes, budget.search_nodes);
            if (!p.complete) {
                s1.out_of_budget();
                break;
            }
            Value lc = lambda(c);
            if (p.total > lc) {
                Witness w{"sum over a disjoint family exceeds lambda(C)"};
                w.add("C", c, lc);
                for (const auto& m : p.chosen) w.add("C_i", m.set, m.value);
                s1.fail(w);
            }
        }
    }
    rep.checks.push_back(s1);

    // s2: inner regularity on bounded open solids.
    Check s2{"s2"};
    for (const auto& u : opens) {
        ++s2.instances;
        Value best(0);
        Region arg;
        for (const auto& k : compacts) {
            if (!k.subset_of(u)) continue;
            Value v = lambda(k);
            if (v > best) {
                best = v;
                arg = k;
            }
        }
        Value lu = lambda(u);
        if (best != lu) s2.fail(Witness{"lambda(U) differs from the sup over compact solids inside"}.add("U", u, lu).add("argmax K", arg, best));
    }
    rep.checks.push_back(s2);

    // s3: outer regularity on compact solids; an empty family has inf = +inf.
    Check s3{"s3"};
    for (const auto& k : compacts) {
        ++s3.instances;
        std::optional<Value> best;
        Region arg;
        for (const auto& u : opens) {
            if (!k.subset_of(u)) continue;
            Value v = lambda(u);
            if (!best || v < *best) {
                best = v;
                arg = u;
            }
        }
        Value lk = lambda(k);
        if (!best) {
            s3.fail(Witness{"no bounded open solid set contains K, so the inf is +inf"}.add("K", k, lk));
        } else if (*best != lk) {
            s3.fail(Witness{"lambda(K) differs from the inf over bounded open solids around it"}.add("K", k, lk).add("argmin U", arg, *best));
        }
    }
    rep.checks.push_back(s3);

    // s4: additivity over solid partitions of each bounded solid set.
    Check s4{"s4"};
    {
        PartitionSearch limits{budget.max_parts, budget.search_nodes};
        bool stop = false;
        for (const auto* list : {&cat.compact, &cat.open}) {
            for (const auto& a : *list) {
                if (stop || a.empty()) continue;
                ++s4.instances;
                Value la = lambda(a);
                bool truncated = false;
                enumerate_solid_partitions(sp, cat, a, limits, truncated, [&](const SolidPartition& p) {
                    if (p.parts.size() < 2) return true;
                    Value sum(0);
                    for (const auto& part : p.parts) sum += lambda(part);
                    if (sum != la) {
                        Witness w{"lambda(A) differs from the sum over a solid partition"};
                        w.add("A", a, la);
                        for (const auto& part : p.parts) w.add("A_i", part, lambda(part));
                        s4.fail(w);
                        return false;
                    }
                    return true;
                });
                if (truncated) {
                    s4.out_of_budget();
                    s4.note = "partition search budget exhausted";
                    stop = true;
                }
            }
        }
        if (!sp.compact()) {
            auto g0 = hatX_genus0_check(sp, budget.search_nodes);
            s4.note += std::string(s4.note.empty() ? "" : "; ") + "X-hat genus 0: " + (g0 ? (*g0 ? "yes" : "no") : "unknown");
        }
    }
    rep.checks.push_back(s4);

    if (sp.compact()) {
        Value lx = lambda(sp.all());
        // Disjoint families of solid sets, open or closed, never exceed lambda(X).
        Check c1{"compact.superadditive"};
        {
            std::vector<Weighted> positive;
            for (const auto* list : {&cat.compact, &cat.open})
                for (const auto& a : *list) {
                    Value v = lambda(a);
                    if (!a.empty() && v > Value(0)) positive.push_back({a, v});
                }
            positive = undominated(std::move(positive));
            c1.instances = positive.size();
            Packing p = max_packing(positive, nodes, budget.search_nodes);
            if (!p.complete) {
                c1.out_of_budget();
            } else if (p.total > lx) {
                Witness w{"disjoint solid sets with total above lambda(X)"};
                w.add("X", sp.all(), lx);
                for (const auto& m : p.chosen) w.add("A_i", m.set, m.value);
                c1.fail(w);
            }
        }
        rep.checks.push_back(c1);

        Check c3{"compact.irreducible"};
        {
            PartitionSearch limits{budget.max_parts, budget.search_nodes};
            bool truncated = false;
            enumerate_solid_partitions(sp, cat, sp.all(), limits, truncated, [&](const SolidPartition& p) {
                if (!is_irreducible(sp, p)) return true;
                ++c3.instances;
                Value sum(0);
                for (const auto& part : p.parts) sum += lambda(part);
                if (sum != lx) {
                    Witness w{"an irreducible partition does not sum to lambda(X)"};
                    w.add("X", sp.all(), lx);
                    for (const auto& part : p.parts) w.add("A_i", part, lambda(part));
                    c3.fail(w);
                    return false;
                }
                return true;
            });
            if (truncated) c3.out_of_budget();
        }
        rep.checks.push_back(c3);

        Check comp{"compact.complement"};
        for (const auto* list : {&cat.compact, &cat.open}) {
            for (const auto& a : *list) {
                Region rest = sp.all() - a;
                if (!is_solid(sp, rest)) continue;
                ++comp.instances;
                Value la = lambda(a), lr = lambda(rest);
                if (la + lr != lx)
                    comp.fail(Witness{"lambda(A) + lambda(X \\ A) != lambda(X)"}.add("A", a, la).add("X \\ A", rest, lr).add("X", sp.all(), lx));
            }
        }
        rep.checks.push_back(comp);
    }
    return rep;
}

}  // namespace topomeasure
