#include "topomeasure/space.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace topomeasure {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool valid_id(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id)
        if (c == ',' || c == '@' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

FiniteSpace::FiniteSpace(std::string name, std::vector<Cell> cells,
                         std::vector<std::pair<std::size_t, std::size_t>> covers,
                         std::optional<std::size_t> infinity, std::map<std::string, Region> named)
    : name_(std::move(name)), cells_(std::move(cells)), covers_(std::move(covers)),
      infinity_(infinity), named_(std::move(named)) {
    const std::size_t n = cells_.size();
    if (n == 0) throw SpaceError("space has no cells");
    if (n > kMaxCells) throw SpaceError("space has " + std::to_string(n) + " cells, limit is " + std::to_string(kMaxCells));
    for (std::size_t i = 0; i < n; ++i) {
        if (!valid_id(cells_[i].id)) throw SpaceError("invalid cell id '" + cells_[i].id + "'");
        if (!by_id_.emplace(cells_[i].id, i).second) throw SpaceError("duplicate cell id '" + cells_[i].id + "'");
    }
    if (infinity_ && *infinity_ >= n) throw SpaceError("infinity cell out of range");

    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    std::vector<std::vector<std::size_t>> below(n);
    for (auto [lo, hi] : covers_) {
        if (lo >= n || hi >= n) throw SpaceError("cover references an unknown cell");
        if (lo == hi) throw SpaceError("order cycle: " + cells_[lo].id + " < " + cells_[lo].id);
        below[hi].push_back(lo);
    }

    // Down-sets by memoized DFS; a grey node reached again is a cycle.
    down_.assign(n, Region{});
    std::vector<int> state(n, 0);
    std::vector<std::size_t> stack;
    std::function<void(std::size_t)> visit = [&](std::size_t x) {
        state[x] = 1;
        stack.push_back(x);
        Region d = Region::single(x);
        for (std::size_t y : below[x]) {
            if (state[y] == 1) {
                std::string msg = "order cycle:";
                auto it = std::find(stack.begin(), stack.end(), y);
                for (; it != stack.end(); ++it) msg += " " + cells_[*it].id;
                msg += " " + cells_[y].id;
                throw SpaceError(msg);
            }
            if (state[y] == 0) visit(y);
            d |= down_[y];
        }
        down_[x] = d;
        stack.pop_back();
        state[x] = 2;
    };
    for (std::size_t i = 0; i < n; ++i)
        if (state[i] == 0) visit(i);

    up_.assign(n, Region{});
    for (std::size_t i = 0; i < n; ++i) down_[i].for_each([&](std::size_t j) { up_[j].set(i); });

    all_ = Region::first_n(n);
    if (infinity_) {
        std::size_t w = *infinity_;
        if (down_[w] != Region::single(w))
            throw SpaceError("infinity cell " + cells_[w].id + " is not minimal: " + cells_[(down_[w] - Region::single(w)).first()].id + " lies below it");
        all_.reset(w);
        frontier_ = up_[w] - Region::single(w);
    }
    core_ = all_;
    frontier_.for_each([&](std::size_t s) { core_ -= down_[s]; });

    nbr_.assign(n, Region{});
    for (std::size_t i = 0; i < n; ++i) nbr_[i] = (down_[i] | up_[i]) & all_;

    if (all_.empty()) throw SpaceError("space has no cells besides infinity");
    auto comps = components(all_);
    if (comps.size() > 1)
        throw SpaceError("X is disconnected: " + cells_[comps[0].first()].id + " and " + cells_[comps[1].first()].id + " lie in different components");
    for (std::size_t i = 0; i < n; ++i) {
        if (infinity_ && i == *infinity_) continue;
        Region u = up_[i];
        if (!is_connected(u)) throw SpaceError("up-set of " + cells_[i].id + " is disconnected");
    }
    for (auto& [key, r] : named_) {
        if (!r.subset_of(all_)) throw SpaceError("named region '" + key + "' contains a cell outside X");
    }
}

std::optional<std::size_t> FiniteSpace::find(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

std::size_t FiniteSpace::index(const std::string& id) const {
    auto i = find(id);
    if (!i) throw ParseError("unknown cell '" + id + "'");
    return *i;
}

Region FiniteSpace::down_closure(const Region& r) const {
    Region out;
    r.for_each([&](std::size_t i) { out |= down_[i]; });
    return out;
}

Region FiniteSpace::up_closure(const Region& r) const {
    Region out;
    r.for_each([&](std::size_t i) { out |= up_[i]; });
    return out;
}

Region FiniteSpace::interior(const Region& r) const {
    Region out;
    r.for_each([&](std::size_t i) {
        if (up_[i].subset_of(r)) out.set(i);
    });
    return out;
}

bool FiniteSpace::is_connected(const Region& r) const {
    if (r.empty()) return true;
    Region comp = Region::single(r.first());
    Region edge = comp;
    while (!edge.empty()) {
        Region grow;
        edge.for_each([&](std::size_t x) { grow |= nbr_[x]; });
        grow &= r;
        grow -= comp;
        comp |= grow;
        edge = grow;
    }
    return comp == r;
}

std::vector<Region> FiniteSpace::components(const Region& r) const {
    std::vector<Region> out;
    Region rest = r;
    while (!rest.empty()) {
        Region comp = Region::single(rest.first());
        Region edge = comp;
        while (!edge.empty()) {
            Region grow;
            edge.for_each([&](std::size_t x) { grow |= nbr_[x]; });
            grow &= rest;
            grow -= comp;
            comp |= grow;
            edge = grow;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

std::vector<ComplementComponent> FiniteSpace::complement_components(const Region& r) const {
    std::vector<ComplementComponent> out;
    for (const auto& c : components(all_ - r)) out.push_back({c, is_bounded(c)});
    return out;
}

FiniteSpace FiniteSpace::compactification() const {
    return FiniteSpace(name_ + "^", cells_, covers_, std::nullopt, named_);
}

Region FiniteSpace::parse_region(const std::string& literal) const {
    Region out;
    std::string lit = trim(literal);
    if (lit.empty() || lit == "{}") return out;
    std::stringstream ss(lit);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw ParseError("empty token in region literal '" + literal + "'");
        if (tok[0] == '@') {
            std::string key = tok.substr(1);
            if (key == "all") {
                out |= all_;
                continue;
            }
            if (auto it = named_.find(key); it != named_.end()) {
                out |= it->second;
                continue;
            }
            bool hit = false;
            for (std::size_t i = 0; i < cells_.size(); ++i) {
                if (cells_[i].label == key) {
                    out.set(i);
                    hit = true;
                }
            }
            if (!hit) throw ParseError("unknown label '" + tok + "' in region literal");
            continue;
        }
        auto i = find(tok);
        if (!i) throw ParseError("unknown cell '" + tok + "' in region literal");
        out.set(*i);
    }
    if (infinity_ && out.test(*infinity_)) throw ParseError("region literal contains the infinity cell " + cells_[*infinity_].id);
    return out;
}

std::string FiniteSpace::format_region(const Region& r) const {
    if (r.empty()) return "{}";
    std::string out;
    r.for_each([&](std::size_t i) {
        if (!out.empty()) out += ',';
        out += cells_[i].id;
    });
    return out;
}

std::string FiniteSpace::to_text() const {
    std::ostringstream os;
    os << "space " << name_ << "\n";
    if (infinity_) os << "infinity " << cells_[*infinity_].id << "\n";
    for (const auto& c : cells_) {
        os << "cell " << c.id << " dim " << c.dim;
        if (!c.label.empty()) os << " label " << c.label;
        os << "\n";
    }
    for (auto [lo, hi] : covers_) os << "cover " << cells_[lo].id << " " << cells_[hi].id << "\n";
    for (const auto& [key, r] : named_) os << "region " << key << " " << format_region(r) << "\n";
    return os.str();
}

FiniteSpace parse_space(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string name;
    std::optional<std::string> inf_id;
    std::vector<Cell> cells;
    std::vector<std::pair<std::string, std::string>> cover_ids;
    std::vector<std::pair<std::string, std::string>> region_lits;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::string kw;
        ls >> kw;
        if (kw == "space") {
            if (!name.empty()) fail("duplicate space header");
            ls >> name;
            if (name.empty()) fail("space header without a name");
        } else if (kw == "infinity") {
            std::string id;
            ls >> id;
            if (id.empty()) fail("infinity without a cell id");
            if (inf_id) fail("duplicate infinity line");
            inf_id = id;
        } else if (kw == "cell") {
            Cell c;
            std::string dkw;
            ls >> c.id >> dkw;
            if (c.id.empty() || dkw != "dim" || !(ls >> c.dim) || c.dim < 0) fail("expected 'cell <id> dim <d> [label <text>]'");
            std::string lkw;
            if (ls >> lkw) {
                if (lkw != "label") fail("unexpected token '" + lkw + "'");
                std::string rest;
                std::getline(ls, rest);
                c.label = trim(rest);
                if (c.label.empty()) fail("empty label");
            }
            cells.push_back(std::move(c));
        } else if (kw == "cover") {
            std::string a, b, extra;
            ls >> a >> b;
            if (a.empty() || b.empty() || (ls >> extra)) fail("expected 'cover <lower> <upper>'");
            cover_ids.emplace_back(a, b);
        } else if (kw == "region") {
            std::string key, rest;
            ls >> key;
            std::getline(ls, rest);
            if (key.empty()) fail("region without a name");
            region_lits.emplace_back(key, trim(rest));
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (name.empty()) throw ParseError("missing 'space <name>' header");
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < cells.size(); ++i) idx.emplace(cells[i].id, i);
    auto lookup = [&](const std::string& id) {
        auto it = idx.find(id);
        if (it == idx.end()) throw ParseError("unknown cell '" + id + "'");
        return it->second;
    };
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (auto& [a, b] : cover_ids) covers.emplace_back(lookup(a), lookup(b));
    std::optional<std::size_t> inf;
    if (inf_id) inf = lookup(*inf_id);
    FiniteSpace bare(name, cells, covers, inf);
    std::map<std::string, Region> named;
    for (auto& [key, lit] : region_lits) {
        if (named.count(key)) throw ParseError("duplicate region '" + key + "'");
        named[key] = bare.parse_region(lit);
    }
    return FiniteSpace(name, std::move(cells), std::move(covers), inf, std::move(named));
}

}  // namespace topomeasure
