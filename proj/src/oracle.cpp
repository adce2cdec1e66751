#include "topomeasure/oracle.hpp"

#include "topomeasure/extend.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace topomeasure::oracle {

namespace {

bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }
Mask bit(std::size_t i) { return Mask{1} << i; }
bool within(Mask a, Mask b) { return (a & ~b) == 0; }

template <class F>
void for_bits(Mask m, F&& f) {
    while (m) {
        std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
        f(i);
        m &= m - 1;
    }
}

Witness witness_of(const Oracle& o, std::string note, std::vector<std::pair<std::string, Mask>> items,
                   const std::function<Value(Mask)>& value) {
    Witness w(std::move(note));
    for (auto& [role, m] : items) w.add(role, o.to_region(m), value(m));
    return w;
}

}  // namespace

bool canonical_less(Mask a, Mask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
}

Oracle::Oracle(const FiniteSpace& sp, OracleBudget budget) : sp_(sp), budget_(budget) {
    n_ = sp.cell_count();
    omega_ = sp.infinity();
    x_cells_ = n_ - (omega_ ? 1 : 0);
    if (x_cells_ > budget_.max_cells || n_ > 63)
        throw BudgetRefusal("oracle refuses " + sp.name() + ": " + std::to_string(x_cells_) + " cells exceeds " +
                            std::to_string(budget_.max_cells));
    for (std::size_t i = 0; i < n_; ++i)
        if (!omega_ || i != *omega_) all_ |= bit(i);

    // Reflexive-transitive closure of the cover relation over X-hat.
    std::vector<Mask> le(n_);
    for (std::size_t i = 0; i < n_; ++i) le[i] = bit(i);  // le[i]: cells above i
    for (auto [lo, hi] : sp.covers()) le[lo] |= bit(hi);
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t i = 0; i < n_; ++i)
            if (has(le[i], k)) le[i] |= le[k];
    above_.assign(n_, 0);
    below_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (has(le[i], j)) {
                above_[i] |= bit(j);
                below_[j] |= bit(i);
            }

    // Every subset of X, tested against the definitions.
    std::vector<std::size_t> xs;
    for_bits(all_, [&](std::size_t i) { xs.push_back(i); });
    const std::size_t total = std::size_t{1} << xs.size();
    for (std::size_t s = 0; s < total; ++s) {
        Mask m = 0;
        for (std::size_t k = 0; k < xs.size(); ++k)
            if ((s >> k) & 1u) m |= bit(xs[k]);
        if (is_open(m)) opens_.push_back(m);
        if (is_closed(m)) closeds_.push_back(m);
        if (opens_.size() + closeds_.size() > 2 * budget_.max_open_sets)
            throw BudgetRefusal("oracle refuses " + sp.name() + ": more than " + std::to_string(budget_.max_open_sets) +
                                " open sets");
    }
    std::sort(opens_.begin(), opens_.end(), canonical_less);
    std::sort(closeds_.begin(), closeds_.end(), canonical_less);
}

Mask Oracle::to_mask(const Region& r) const {
    Mask m = 0;
    r.for_each([&](std::size_t i) { m |= bit(i); });
    return m;
}

Region Oracle::to_region(Mask m) const {
    Region r;
    for_bits(m, [&](std::size_t i) { r.set(i); });
    return r;
}

bool Oracle::is_open(Mask m) const {
    bool ok = true;
    for_bits(m, [&](std::size_t i) { ok = ok && within(above_[i] & all_, m); });
    return ok;
}

bool Oracle::is_closed(Mask m) const {
    bool ok = true;
    for_bits(m, [&](std::size_t i) { ok = ok && within(below_[i] & all_, m); });
    return ok;
}

bool Oracle::is_bounded(Mask m) const {
    if (!omega_) return true;
    return (m & above_[*omega_]) == 0;
}

std::vector<Mask> Oracle::components(Mask m) const {
    // A subset of m is clopen in m when it is up- and down-closed inside m.
    std::vector<Mask> comp(n_, m);
    for (Mask a = m;; a = (a - 1) & m) {
        bool clopen = true;
        for_bits(a, [&](std::size_t i) { clopen = clopen && within((above_[i] | below_[i]) & m, a); });
        if (clopen && a) for_bits(a, [&](std::size_t i) { comp[i] &= a; });
        if (a == 0) break;
    }
    std::vector<Mask> out;
    Mask seen = 0;
    for_bits(m, [&](std::size_t i) {
        if (!has(seen, i)) {
            out.push_back(comp[i]);
            seen |= comp[i];
        }
    });
    return out;
}

bool Oracle::is_connected(Mask m) const { return components(m).size() <= 1; }

std::vector<OracleComponent> Oracle::complement_components(Mask m) const {
    std::vector<OracleComponent> out;
    for (Mask c : components(all_ & ~m)) out.push_back({c, is_bounded(c)});
    return out;
}

OracleClass Oracle::classify(Mask m) const {
    OracleClass c{};
    c.connected = is_connected(m);
    c.open = is_open(m);
    c.closed = is_closed(m);
    c.bounded = is_bounded(m);
    c.compact = c.closed && c.bounded;
    auto comps = complement_components(m);
    c.complement_component_count = comps.size();
    for (const auto& k : comps)
        if (!k.bounded) ++c.unbounded_complement_count;
    if (omega_)
        c.solid = c.connected && c.unbounded_complement_count == comps.size();
    else
        c.solid = c.connected && comps.size() <= 1;
    c.semisolid = c.connected;
    return c;
}

bool Oracle::is_solid(Mask m) const { return classify(m).solid; }

Mask Oracle::hull(Mask m) const {
    if (m == 0) return 0;
    Mask h = m;
    for (const auto& c : complement_components(m))
        if (c.bounded) h |= c.cells;
    return h;
}

std::vector<Mask> Oracle::compacts() const {
    std::vector<Mask> out;
    for (Mask c : closeds_)
        if (is_bounded(c)) out.push_back(c);
    return out;
}

std::vector<Mask> Oracle::bounded_solids() const {
    std::vector<Mask> out;
    for (Mask c : closeds_)
        if (is_bounded(c) && is_solid(c)) out.push_back(c);
    for (Mask u : opens_)
        if (!is_closed(u) && is_bounded(u) && is_solid(u)) out.push_back(u);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Value BruteForceMu::lambda1(Mask c) {
    if (c == 0) return Value(0);
    Value holes(0);
    for (const auto& b : o_.complement_components(c))
        if (b.bounded) holes += lambda_(o_.to_region(b.cells));
    return lambda_(o_.to_region(o_.hull(c))) - holes;
}

Value BruteForceMu::lambda2(Mask k) {
    auto it = lambda2_memo_.find(k);
    if (it != lambda2_memo_.end()) return it->second;
    Value total(0);
    for (Mask c : o_.components(k)) total += lambda1(c);
    lambda2_memo_.emplace(k, total);
    return total;
}

Value BruteForceMu::open_value(Mask u) {
    auto it = open_memo_.find(u);
    if (it != open_memo_.end()) return it->second;
    Value best(0);
    for (Mask k : o_.closeds())
        if (o_.is_bounded(k) && within(k, u)) best = std::max(best, lambda2(k));
    open_memo_.emplace(u, best);
    return best;
}

Value BruteForceMu::closed_value(Mask f) {
    std::optional<Value> best;
    for (Mask u : o_.opens())
        if (within(f, u)) {
            Value v = open_value(u);
            if (!best || v < *best) best = v;
        }
    return *best;  // X itself is an open superset
}

Value BruteForceMu::operator()(const Region& a) {
    Mask m = o_.to_mask(a);
    if (o_.is_open(m)) return open_value(m);
    if (o_.is_closed(m)) return closed_value(m);
    throw PreconditionError("brute_force_mu needs an open or closed set");
}

Value brute_force_mu(const Oracle& o, const SolidSetFunction& lambda, const Region& a) {
    BruteForceMu mu(o, lambda);
    return mu(a);
}

OracleVerdict exhaustive_ssf_check(const Oracle& o, const SolidSetFunction& lambda, const std::string& axiom) {
    OracleVerdict out;
    auto lam = [&](Mask m) { return lambda(o.to_region(m)); };
    std::vector<Mask> solids = o.bounded_solids();
    std::vector<Mask> compact, open;
    for (Mask s : solids) {
        if (o.is_closed(s)) compact.push_back(s);
        if (o.is_open(s)) open.push_back(s);
    }
    auto fail = [&](Witness w) {
        out.verdict = Verdict::fail;
        out.witness = std::move(w);
    };
    const std::size_t max_family = o.budget().max_family;

    if (axiom == "s1") {
        for (Mask c : compact) {
            std::vector<Mask> inside;
            for (Mask k : compact)
                if (k && within(k, c)) inside.push_back(k);
            std::vector<Mask> fam;
            std::function<bool(std::size_t, Mask, Value)> rec = [&](std::size_t from, Mask used, Value sum) {
                ++out.instances;
                if (sum > lam(c)) {
                    std::vector<std::pair<std::string, Mask>> items{{"C", c}};
                    for (Mask f : fam) items.push_back({"C_i", f});
                    fail(witness_of(o, "disjoint family inside C with a larger sum", items, lam));
                    return false;
                }
                if (fam.size() == max_family) return true;
                for (std::size_t i = from; i < inside.size(); ++i) {
                    if (inside[i] & used) continue;
                    fam.push_back(inside[i]);
                    bool go = rec(i + 1, used | inside[i], sum + lam(inside[i]));
                    fam.pop_back();
                    if (!go) return false;
                }
                return true;
            };
            if (!rec(0, 0, Value(0))) return out;
        }
    } else if (axiom == "s2") {
        for (Mask u : open) {
            ++out.instances;
            Value best(0);
            Mask arg = 0;
            for (Mask k : compact)
                if (within(k, u) && lam(k) > best) {
                    best = lam(k);
                    arg = k;
                }
            if (best != lam(u)) {
                fail(witness_of(o, "lambda(U) is not the sup over compact solids inside", {{"U", u}, {"argmax K", arg}}, lam));
                return out;
            }
        }
    } else if (axiom == "s3") {
        for (Mask k : compact) {
            ++out.instances;
            std::optional<Value> best;
            Mask arg = 0;
            for (Mask u : open)
                if (within(k, u) && (!best || lam(u) < *best)) {
                    best = lam(u);
                    arg = u;
                }
            if (!best) {
                fail(witness_of(o, "no bounded open solid superset, inf = +inf", {{"K", k}}, lam));
                return out;
            }
            if (*best != lam(k)) {
                fail(witness_of(o, "lambda(K) is not the inf over bounded open solids around it", {{"K", k}, {"argmin U", arg}}, lam));
                return out;
            }
        }
    } else if (axiom == "s4") {
        for (Mask a : solids) {
            if (!a) continue;
            std::vector<Mask> parts;
            std::function<bool(Mask, Value)> rec = [&](Mask rest, Value sum) {
                if (!rest) {
                    if (parts.size() < 2) return true;
                    ++out.instances;
                    if (sum != lam(a)) {
                        std::vector<std::pair<std::string, Mask>> items{{"A", a}};
                        for (Mask p : parts) items.push_back({"A_i", p});
                        fail(witness_of(o, "solid partition with a different sum", items, lam));
                        return false;
                    }
                    return true;
                }
                if (parts.size() == max_family) return true;
                Mask low = rest & (~rest + 1);
                for (Mask p : solids) {
                    if (!(p & low) || !within(p, rest)) continue;
                    parts.push_back(p);
                    bool go = rec(rest & ~p, sum + lam(p));
                    parts.pop_back();
                    if (!go) return false;
                }
                return true;
            };
            if (!rec(a, Value(0))) return out;
        }
    } else {
        throw std::invalid_argument("unknown solid-set axiom '" + axiom + "'");
    }
    return out;
}

OracleVerdict exhaustive_tm_check(const Oracle& o, const std::function<Value(const Region&)>& mu,
                                  const std::string& axiom) {
    OracleVerdict out;
    std::unordered_map<Mask, Value> memo;
    auto val = [&](Mask m) {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Value v = mu(o.to_region(m));
        memo.emplace(m, v);
        return v;
    };
    std::vector<Mask> compacts = o.compacts();
    auto fail = [&](Witness w) {
        out.verdict = Verdict::fail;
        out.witness = std::move(w);
    };
    if (axiom == "TM1") {
        std::vector<Mask> family = compacts;
        for (Mask u : o.opens())
            if (!(o.is_closed(u) && o.is_bounded(u))) family.push_back(u);
        std::sort(family.begin(), family.end(), canonical_less);
        std::unordered_set<Mask> member(family.begin(), family.end());
        for (Mask s : family)
            for (Mask a : family) {
                if (!within(a, s) || !member.count(s & ~a)) continue;
                ++out.instances;
                Mask b = s & ~a;
                if (val(s) != val(a) + val(b)) {
                    fail(witness_of(o, "mu(A ⊔ B) != mu(A) + mu(B)", {{"A", a}, {"B", b}, {"A ⊔ B", s}}, val));
                    return out;
                }
            }
    } else if (axiom == "TM2") {
        for (Mask u : o.opens()) {
            ++out.instances;
            Value best(0);
            Mask arg = 0;
            bool first = true;
            for (Mask k : compacts)
                if (within(k, u) && (first || val(k) > best)) {
                    best = val(k);
                    arg = k;
                    first = false;
                }
            if (best != val(u)) {
                fail(witness_of(o, "mu(U) is not the sup over compact subsets", {{"U", u}, {"argmax K", arg}}, val));
                return out;
            }
        }
    } else if (axiom == "TM3") {
        for (Mask f : o.closeds()) {
            ++out.instances;
            std::optional<Value> best;
            Mask arg = 0;
            for (Mask u : o.opens())
                if (within(f, u) && (!best || val(u) < *best)) {
                    best = val(u);
                    arg = u;
                }
            if (*best != val(f)) {
                fail(witness_of(o, "mu(F) is not the inf over open supersets", {{"F", f}, {"argmin U", arg}}, val));
                return out;
            }
        }
    } else {
        throw std::invalid_argument("unknown topological-measure axiom '" + axiom + "'");
    }
    return out;
}

std::optional<Mismatch> compare_mu(const Oracle& o, const SolidSetFunction& lambda,
                                   const std::function<Value(const Region&)>& candidate) {
    BruteForceMu brute(o, lambda);
    std::vector<Mask> sets = o.opens();
    sets.insert(sets.end(), o.closeds().begin(), o.closeds().end());
    std::sort(sets.begin(), sets.end(), canonical_less);
    for (Mask m : sets) {
        Region r = o.to_region(m);
        Value expected = o.is_open(m) ? brute.open_value(m) : brute.closed_value(m);
        Value actual = candidate(r);
        if (expected != actual) return Mismatch{r, expected, actual};
    }
    return std::nullopt;
}

Report agreement_suite(const FiniteSpace& sp, const std::vector<SolidSetFunction>& lambdas, const OracleBudget& budget) {
    Oracle o(sp, budget);
    Report rep;
    rep.kind = "oracle";
    rep.space = sp.name();
    rep.subject = std::to_string(lambdas.size()) + " solid-set functions";

    Check comps("components"), ccomps("complement-components"), cls("classify"), hull("hull");
    std::vector<std::size_t> xs;
    for_bits(o.all(), [&](std::size_t i) { xs.push_back(i); });
    const std::size_t total = std::size_t{1} << xs.size();
    for (std::size_t s = 0; s < total; ++s) {
        Mask m = 0;
        for (std::size_t k = 0; k < xs.size(); ++k)
            if ((s >> k) & 1u) m |= bit(xs[k]);
        Region r = o.to_region(m);

        ++comps.instances;
        auto ours = sp.components(r);
        auto theirs = o.components(m);
        bool same = ours.size() == theirs.size();
        for (std::size_t i = 0; same && i < ours.size(); ++i) same = o.to_mask(ours[i]) == theirs[i];
        if (!same) comps.fail(Witness("component lists differ").add("R", r));

        ++ccomps.instances;
        auto occ = sp.complement_components(r);
        auto tcc = o.complement_components(m);
        same = occ.size() == tcc.size();
        for (std::size_t i = 0; same && i < occ.size(); ++i)
            same = o.to_mask(occ[i].cells) == tcc[i].cells && occ[i].bounded == tcc[i].bounded;
        if (!same) ccomps.fail(Witness("complement components differ").add("R", r));

        ++cls.instances;
        SolidClass a = classify(sp, r);
        OracleClass b = o.classify(m);
        if (a.connected != b.connected || a.open != b.open || a.closed != b.closed || a.bounded != b.bounded ||
            a.compact != b.compact || a.solid != b.solid || a.semisolid != b.semisolid ||
            a.complement_component_count != b.complement_component_count ||
            a.unbounded_complement_count != b.unbounded_complement_count)
            cls.fail(Witness("classification differs").add("R", r));

        if (b.connected && b.bounded && (b.open || b.closed)) {
            ++hull.instances;
            Region h = solid_hull(sp, r);
            if (o.to_mask(h) != o.hull(m)) hull.fail(Witness("hull differs").add("R", r).add("engine hull", h).add("oracle hull", o.to_region(o.hull(m))));
        }
    }
    rep.checks = {comps, ccomps, cls, hull};

    for (const auto& lambda : lambdas) {
        Check c("mu " + lambda.descriptor());
        TopMeasure engine = extend(lambda);
        c.instances = o.opens().size() + o.closeds().size();
        if (auto mm = compare_mu(o, lambda, engine.eval))
            c.fail(Witness("engine mu differs from the literal sup/inf").add("A", mm->region, mm->actual).add("oracle", mm->region, mm->expected));
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace topomeasure::oracle
