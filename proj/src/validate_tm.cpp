#include "topomeasure/extend.hpp"

#include <algorithm>
#include <unordered_map>

namespace topomeasure {

TopMeasure memoize(TopMeasure mu) {
    auto cache = std::make_shared<std::unordered_map<Region, Value, CellSetHash>>();
    auto lock = std::make_shared<std::mutex>();
    auto inner = mu.eval;
    mu.eval = [cache, lock, inner](const Region& a) {
        {
            std::lock_guard<std::mutex> g(*lock);
            auto it = cache->find(a);
            if (it != cache->end()) return it->second;
        }
        Value v = inner(a);
        std::lock_guard<std::mutex> g(*lock);
        cache->emplace(a, v);
        return v;
    };
    return mu;
}

Value CoverWitness::sum() const {
    Value s(0);
    for (const auto& v : values) s += v;
    return s;
}

namespace {

struct Nodes {
    std::size_t used = 0;
    std::size_t limit;
    explicit Nodes(std::size_t l) : limit(l) {}
    bool spend() { return ++used <= limit; }
};

bool by_size(const Region& a, const Region& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
}

bool is_maximal_in(const FiniteSpace& sp, std::size_t y, const Region& d) {
    return ((sp.up(y) & d) - Region::single(y)).empty();
}

// All closed and all open subsets of X, sorted by size.
struct Lattice {
    std::vector<Region> closed, open, compact;
    bool truncated = false;
};

Lattice build_lattice(const FiniteSpace& sp, std::size_t cap) {
    Lattice l;
    auto collect = [&](std::vector<Region>& into) {
        return [&](const Region& r) {
            if (l.closed.size() + l.open.size() >= cap) {
                l.truncated = true;
                return false;
            }
            into.push_back(r);
            return true;
        };
    };
    enumerate_closed(sp, sp.all(), collect(l.closed));
    if (!l.truncated) enumerate_open(sp, sp.all(), collect(l.open));
    std::sort(l.closed.begin(), l.closed.end(), by_size);
    std::sort(l.open.begin(), l.open.end(), by_size);
    for (const auto& c : l.closed)
        if (sp.is_bounded(c)) l.compact.push_back(c);
    return l;
}

// sup of mu over compact subsets of a compact set D. A proper closed subset of D misses some
// maximal cell of D, so the recursion over single maximal-cell removals reaches all of them.
class InnerSup {
public:
    InnerSup(const FiniteSpace& sp, const TopMeasure& mu) : sp_(sp), mu_(mu) {}

    std::pair<Value, Region> operator()(const Region& d) {
        auto it = memo_.find(d);
        if (it != memo_.end()) return it->second;
        std::pair<Value, Region> best{mu_(d), d};
        d.for_each([&](std::size_t y) {
            if (!is_maximal_in(sp_, y, d)) return;
            auto sub = (*this)(d - Region::single(y));
            if (sub.first > best.first) best = sub;
        });
        memo_.emplace(d, best);
        return best;
    }

private:
    const FiniteSpace& sp_;
    const TopMeasure& mu_;
    std::unordered_map<Region, std::pair<Value, Region>, CellSetHash> memo_;
};

// inf of mu over open supersets of an open set W, dually by adding maximal cells of X \ W.
class OuterInf {
public:
    OuterInf(const FiniteSpace& sp, const TopMeasure& mu) : sp_(sp), mu_(mu) {}

    std::pair<Value, Region> operator()(const Region& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        std::pair<Value, Region> best{mu_(w), w};
        Region rest = sp_.all() - w;
        rest.for_each([&](std::size_t y) {
            if (!is_maximal_in(sp_, y, rest)) return;
            auto sup = (*this)(w | Region::single(y));
            if (sup.first < best.first) best = sup;
        });
        memo_.emplace(w, best);
        return best;
    }

private:
    const FiniteSpace& sp_;
    const TopMeasure& mu_;
    std::unordered_map<Region, std::pair<Value, Region>, CellSetHash> memo_;
};

Witness triple(const std::string& note, const TopMeasure& mu, const std::string& ra, const Region& a,
               const std::string& rb, const Region& b, const std::string& rs, const Region& s) {
    Witness w{note};
    w.add(ra, a, mu(a)).add(rb, b, mu(b)).add(rs, s, mu(s));
    return w;
}

// Splits of S into A and B = S \ A with A drawn from the given enumerators and the pair
// accepted by `member`; stops at the first violation of mu(S) = mu(A) + mu(B).
void additivity_over_splits(const FiniteSpace& sp, const TopMeasure& mu, const std::vector<Region>& targets,
                            const std::function<bool(const Region&)>& member, bool closed_parts,
                            const std::function<bool(const Region&)>& closed_part_ok, Check& check, Nodes& nodes,
                            const std::string& note) {
    for (const auto& s : targets) {
        bool stop = false;
        auto visit = [&](const Region& a) {
            Region b = s - a;
            if (!member(b)) return true;
            if (!nodes.spend()) {
                check.out_of_budget();
                stop = true;
                return false;
            }
            ++check.instances;
            if (mu(s) != mu(a) + mu(b)) {
                check.fail(triple(note, mu, "A", a, "B", b, "A ⊔ B", s));
                stop = true;
                return false;
            }
            return true;
        };
        if (closed_parts)
            enumerate_closed(sp, s, [&](const Region& a) { return closed_part_ok(a) ? visit(a) : true; });
        if (!stop)
            enumerate_open(sp, s, [&](const Region& a) {
                if (closed_parts && sp.is_closed(a) && closed_part_ok(a)) return true;
                return visit(a);
            });
        if (stop) return;
    }
}

}  // namespace

Report validate_tm(const TopMeasure& raw, const ValidationBudget& budget) {
    const FiniteSpace& sp = *raw.space;
    TopMeasure mu = memoize(raw);
    Report rep;
    rep.kind = "tm";
    rep.space = sp.name();
    rep.subject = mu.source;

    Lattice lat = build_lattice(sp, budget.catalog_cap);
    if (lat.truncated) {
        for (const char* id : {"TM1", "TM2", "TM3"}) {
            Check c{id};
            c.out_of_budget();
            c.note = "open/closed lattice exceeds " + std::to_string(budget.catalog_cap) + " sets";
            rep.checks.push_back(c);
        }
        rep.classification = "unknown";
        return rep;
    }
    const Region bounded = sp.all() - sp.frontier();
    auto in_ko = [&](const Region& r) { return sp.is_open(r) || (sp.is_closed(r) && sp.is_bounded(r)); };
    auto in_co = [&](const Region& r) { return sp.is_open(r) || sp.is_closed(r); };
    auto is_bounded_set = [&](const Region& r) { return sp.is_bounded(r); };
    auto any_closed = [](const Region&) { return true; };

    // TM1 on K ∪ O.
    {
        Check c{"TM1"};
        std::vector<Region> targets = lat.compact;
        for (const auto& u : lat.open)
            if (!(sp.is_closed(u) && sp.is_bounded(u))) targets.push_back(u);
        std::sort(targets.begin(), targets.end(), by_size);
        Nodes nodes(budget.search_nodes);
        additivity_over_splits(sp, mu, targets, in_ko, true, is_bounded_set, c, nodes,
                               "mu(A ⊔ B) != mu(A) + mu(B) with A, B, A ⊔ B compact or open");
        rep.checks.push_back(c);
    }

    InnerSup inner(sp, mu);
    OuterInf outer(sp, mu);
    {
        Check c{"TM2"};
        for (const auto& u : lat.open) {
            ++c.instances;
            auto [sup, arg] = inner(max_compact_inside(sp, u));
            if (sup != mu(u)) {
                c.fail(Witness{"mu(U) differs from the sup over compact subsets"}.add("U", u, mu(u)).add("argmax K", arg, sup));
                break;
            }
        }
        rep.checks.push_back(c);
    }
    {
        Check c{"TM3"};
        for (const auto& f : lat.closed) {
            ++c.instances;
            auto [inf, arg] = outer(sp.up_closure(f));
            if (inf != mu(f)) {
                c.fail(Witness{"mu(F) differs from the inf over open supersets"}.add("F", f, mu(f)).add("argmin U", arg, inf));
                break;
            }
        }
        rep.checks.push_back(c);
    }
    {
        Check c{"monotone"};
        for (const auto& d : lat.closed) {
            d.for_each([&](std::size_t y) {
                if (c.verdict == Verdict::fail || !is_maximal_in(sp, y, d)) return;
                ++c.instances;
                Region sub = d - Region::single(y);
                if (mu(sub) > mu(d)) c.fail(Witness{"closed sets: smaller set has larger value"}.add("C", sub, mu(sub)).add("D", d, mu(d)));
            });
        }
        for (const auto& w : lat.open) {
            Region rest = sp.all() - w;
            rest.for_each([&](std::size_t y) {
                if (c.verdict == Verdict::fail || !is_maximal_in(sp, y, rest)) return;
                ++c.instances;
                Region sup = w | Region::single(y);
                if (mu(w) > mu(sup)) c.fail(Witness{"open sets: smaller set has larger value"}.add("U", w, mu(w)).add("V", sup, mu(sup)));
            });
        }
        rep.checks.push_back(c);
    }

    // c1: carving a compact set out of an open one.
    {
        Check c{"c1"};
        Nodes nodes(budget.search_nodes);
        for (const auto& u : lat.open) {
            bool stop = false;
            enumerate_closed(sp, max_compact_inside(sp, u), [&](const Region& k) {
                if (!nodes.spend()) {
                    c.out_of_budget();
                    stop = true;
                    return false;
                }
                ++c.instances;
                if (mu(u) != mu(k) + mu(u - k)) {
                    c.fail(triple("mu(U) != mu(K) + mu(U \\ K)", mu, "K", k, "U \\ K", u - k, "U", u));
                    stop = true;
                    return false;
                }
                return true;
            });
            if (stop) break;
        }
        rep.checks.push_back(c);
    }
    // The closed dual of c1 is not a property of topological measures.
    {
        Check c{"c1.dual"};
        c.informational = true;
        Nodes nodes(budget.search_nodes);
        for (const auto& f : lat.closed) {
            bool stop = false;
            enumerate_open(sp, f & sp.core(), [&](const Region& v) {
                if (!nodes.spend()) {
                    c.out_of_budget();
                    stop = true;
                    return false;
                }
                ++c.instances;
                if (mu(f) != mu(v) + mu(f - v)) {
                    c.fail(triple("mu(F) != mu(V) + mu(F \\ V) for bounded open V inside closed F", mu, "V", v, "F \\ V", f - v, "F", f));
                    stop = true;
                    return false;
                }
                return true;
            });
            if (stop) break;
        }
        rep.checks.push_back(c);
    }

    auto disjoint_pairs = [&](const std::string& id, const std::vector<Region>& firsts, bool second_closed,
                              const std::function<Region(const Region&)>& room,
                              const std::function<bool(const Region&)>& second_ok, const std::string& note) {
        Check c{id};
        Nodes nodes(budget.search_nodes);
        for (const auto& a : firsts) {
            bool stop = false;
            auto visit = [&](const Region& b) {
                if (!second_ok(b)) return true;
                if (!nodes.spend()) {
                    c.out_of_budget();
                    stop = true;
                    return false;
                }
                ++c.instances;
                Region s = a | b;
                if (mu(s) != mu(a) + mu(b)) {
                    c.fail(triple(note, mu, "A", a, "B", b, "A ⊔ B", s));
                    stop = true;
                    return false;
                }
                return true;
            };
            if (second_closed)
                enumerate_closed(sp, room(a), visit);
            else
                enumerate_open(sp, room(a), visit);
            if (stop) break;
        }
        rep.checks.push_back(c);
    };
    disjoint_pairs(
        "c2", lat.compact, true, [&](const Region& k) { return bounded - sp.up_closure(k); }, any_closed,
        "disjoint compact sets are not additive");
    disjoint_pairs(
        "c3", lat.open, false, [&](const Region& u) { return sp.all() - u; }, any_closed,
        "disjoint open sets are not additive");
    disjoint_pairs(
        "p7", lat.compact, true, [&](const Region& k) { return sp.all() - sp.up_closure(k); }, any_closed,
        "a compact set and a disjoint closed set are not additive");

    // Additivity with A, B, A ⊔ B only open or closed; largest unions first.
    {
        Check c{"additive.closed-open"};
        c.informational = true;
        std::vector<Region> targets = lat.closed;
        for (const auto& u : lat.open)
            if (!sp.is_closed(u)) targets.push_back(u);
        std::sort(targets.begin(), targets.end(), [](const Region& a, const Region& b) { return by_size(b, a); });
        Nodes nodes(budget.search_nodes);
        additivity_over_splits(sp, mu, targets, in_co, true, any_closed, c, nodes,
                               "mu(A ⊔ B) != mu(A) + mu(B) with A, B, A ⊔ B closed or open");
        rep.checks.push_back(c);
    }

    if (sp.compact()) {
        Value mx = mu(sp.all());
        Check k1{"k1"};
        for (const auto& k : lat.closed) {
            ++k1.instances;
            Region rest = sp.all() - k;
            if (mu(k) + mu(rest) != mx) {
                k1.fail(triple("mu(X) != mu(K) + mu(X \\ K)", mu, "K", k, "X \\ K", rest, "X", sp.all()));
                break;
            }
        }
        rep.checks.push_back(k1);

        Check w3{"closed-approximation"};
        for (const auto& cset : lat.closed) {
            ++w3.instances;
            auto [best, arg] = inner(sp.all() - sp.up_closure(cset));
            if (mu(cset) + best < mx) {
                w3.fail(Witness{"no closed set disjoint from C brings mu(C) + mu(K) up to mu(X)"}
                            .add("C", cset, mu(cset))
                            .add("best K", arg, best)
                            .add("X", sp.all(), mx));
                break;
            }
        }
        rep.checks.push_back(w3);
    }

    // Subadditivity on compact pairs decides whether mu comes from a measure.
    {
        Check c{"subadditive"};
        c.informational = true;
        std::vector<Region> ks = lat.compact;
        std::stable_sort(ks.begin(), ks.end(), [&](const Region& a, const Region& b) {
            Value va = mu(a), vb = mu(b);
            if (va != vb) return va < vb;
            return a.count() > b.count();
        });
        Nodes nodes(budget.search_nodes);
        bool stop = false;
        for (std::size_t i = 0; i < ks.size() && !stop; ++i) {
            for (std::size_t j = i + 1; j < ks.size(); ++j) {
                if (!nodes.spend()) {
                    c.out_of_budget();
                    stop = true;
                    break;
                }
                ++c.instances;
                Region u = ks[i] | ks[j];
                if (mu(u) > mu(ks[i]) + mu(ks[j])) {
                    c.fail(triple("mu(C ∪ K) > mu(C) + mu(K)", mu, "C", ks[i], "K", ks[j], "C ∪ K", u));
                    stop = true;
                    break;
                }
            }
        }
        rep.classification = c.verdict == Verdict::pass   ? "measure-extendable"
                             : c.verdict == Verdict::fail ? "proper topological measure"
                                                          : "unknown";
        rep.checks.push_back(c);
    }
    return rep;
}

Report validate_extension(const SolidSetFunction& lambda, const ValidationBudget& budget) {
    const FiniteSpace& sp = lambda.space();
    TopMeasure mu = memoize(extend(lambda));
    Report rep;
    rep.kind = "extension";
    rep.space = sp.name();
    rep.subject = lambda.descriptor();

    SolidCatalog cat = enumerate_bounded_solid_sets(sp, budget.catalog_cap);
    Check eq{"mu=lambda"};
    if (cat.truncated) eq.out_of_budget();
    bool two_valued = true;
    for (const auto* list : {&cat.compact, &cat.open}) {
        for (const auto& a : *list) {
            ++eq.instances;
            Value l = lambda(a);
            if (l != Value(0) && l != Value(1)) two_valued = false;
            if (mu(a) != l) eq.fail(Witness{"mu differs from lambda on a bounded solid set"}.add("A", a, mu(a)).add("lambda(A)", a, l));
        }
    }
    rep.checks.push_back(eq);

    Lattice lat = build_lattice(sp, budget.catalog_cap);
    Check l12{"mu=lambda12"};
    if (lat.truncated) l12.out_of_budget();
    for (const auto& k : lat.compact) {
        ++l12.instances;
        Value l2 = lambda2(lambda, k);
        if (mu(k) != l2) {
            l12.fail(Witness{"mu(K) != lambda2(K) on a compact set"}.add("K", k, mu(k)).add("lambda2(K)", k, l2));
            break;
        }
    }
    for (const auto& u : lat.open) {
        if (!sp.is_bounded(u) || !sp.is_connected(u) || u.empty()) continue;
        ++l12.instances;
        Value l1 = lambda1(lambda, u);
        if (mu(u) != l1) {
            l12.fail(Witness{"mu(U) != lambda1(U) on a bounded open semisolid set"}.add("U", u, mu(u)).add("lambda1(U)", u, l1));
            break;
        }
    }
    rep.checks.push_back(l12);

    Check simple{"simple"};
    if (!two_valued) {
        simple.note = "lambda is not two-valued";
    } else {
        for (const auto* list : {&lat.closed, &lat.open}) {
            for (const auto& a : *list) {
                ++simple.instances;
                Value v = mu(a);
                if (v != Value(0) && v != Value(1)) {
                    simple.fail(Witness{"two-valued lambda extends to a value outside {0, 1}"}.add("A", a, v));
                    break;
                }
            }
        }
    }
    rep.checks.push_back(simple);

    if (sp.compact()) {
        Check g{"grubb"};
        for (const auto* list : {&lat.closed, &lat.open}) {
            for (const auto& a : *list) {
                ++g.instances;
                Value gv = grubb_mu(lambda, a);
                if (gv != mu(a)) g.fail(Witness{"compact-path value differs from the general path"}.add("A", a, mu(a)).add("grubb(A)", a, gv));
            }
        }
        rep.checks.push_back(g);
    }
    return rep;
}

std::optional<CoverWitness> find_nonsubadditive_cover(const TopMeasure& raw, std::size_t max_cover_size,
                                                      std::optional<Region> target, std::size_t budget) {
    const FiniteSpace& sp = *raw.space;
    TopMeasure mu = memoize(raw);
    Region t = target.value_or(sp.all());
    Value tv = mu(t);
    if (tv.is_zero() || t.empty()) return std::nullopt;

    struct Piece {
        Region set;
        Region covers;
        Value value;
    };
    std::vector<Piece> pool;
    Nodes nodes(budget);
    auto consider = [&](const Region& q) {
        if (!nodes.spend()) return false;
        if (q.empty() || !q.intersects(t) || !is_solid(sp, q)) return true;
        Value v = mu(q);
        if (v < tv) pool.push_back({q, q & t, v});
        return true;
    };
    if (!enumerate_closed(sp, sp.all(), consider)) return std::nullopt;
    if (!enumerate_open(sp, sp.all(), [&](const Region& q) { return sp.is_closed(q) || consider(q); })) return std::nullopt;

    std::sort(pool.begin(), pool.end(), [](const Piece& a, const Piece& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.covers.count() != b.covers.count()) return a.covers.count() > b.covers.count();
        return a.set < b.set;
    });
    std::vector<Piece> kept;
    for (const auto& p : pool) {
        bool dominated = false;
        for (const auto& k : kept) {
            if (p.covers.subset_of(k.covers) && k.value <= p.value) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(p);
    }

    std::vector<std::size_t> chosen;
    std::function<bool(const Region&, Value, std::size_t)> rec = [&](const Region& open_cells, Value sum,
                                                                    std::size_t left) -> bool {
        if (open_cells.empty()) return true;
        if (left == 0 || !nodes.spend()) return false;
        std::size_t x = open_cells.first();
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (!kept[i].covers.test(x) || !(sum + kept[i].value < tv)) continue;
            chosen.push_back(i);
            if (rec(open_cells - kept[i].covers, sum + kept[i].value, left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (std::size_t size = 1; size <= max_cover_size; ++size) {
        chosen.clear();
        if (rec(t, Value(0), size)) {
            CoverWitness w{t, tv, {}, {}};
            for (auto i : chosen) {
                w.pieces.push_back(kept[i].set);
                w.values.push_back(kept[i].value);
            }
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace topomeasure
