#include "topomeasure/space.hpp"

#include <cstdlib>
#include <sstream>

namespace topomeasure {

namespace {

class ComplexBuilder {
public:
    std::size_t add(const std::string& id, int dim, const std::string& label = "") {
        cells_.push_back({id, dim, label});
        return cells_.size() - 1;
    }
    void face(std::size_t lower, std::size_t upper) { covers_.emplace_back(lower, upper); }
    void region(const std::string& key, const Region& r) { named_[key] = r; }

    FiniteSpace build(const std::string& name, std::optional<std::size_t> omega = std::nullopt) {
        return FiniteSpace(name, cells_, covers_, omega, named_);
    }

private:
    std::vector<Cell> cells_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::map<std::string, Region> named_;
};

std::string nm(const std::string& prefix, int i) { return prefix + std::to_string(i); }
std::string nm(const std::string& prefix, int k, int i) {
    return prefix + std::to_string(k) + "_" + std::to_string(i);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw SpaceError(msg);
}

struct Cycle {
    std::vector<std::size_t> v;  // v[i]
    std::vector<std::size_t> e;  // e[i] joins v[i] and v[(i+1) % n]
};

// Disk made of concentric square rings around a center vertex "o".
FiniteSpace disk_complex(int rings, bool puncture) {
    require(rings >= 1, "disk needs at least 1 ring");
    const int m = 4;
    ComplexBuilder b;
    std::size_t o = b.add("o", 0, "center");
    std::vector<Cycle> ring(rings + 1);
    for (int k = 1; k <= rings; ++k) {
        for (int i = 0; i < m; ++i) ring[k].v.push_back(b.add(nm("v", k, i), 0, k == rings ? "rimv" : ""));
        for (int i = 0; i < m; ++i) {
            ring[k].e.push_back(b.add(nm("e", k, i), 1, k == rings ? "rime" : ""));
            b.face(ring[k].v[i], ring[k].e[i]);
            b.face(ring[k].v[(i + 1) % m], ring[k].e[i]);
        }
    }
    std::vector<std::size_t> spoke(m);
    for (int i = 0; i < m; ++i) {
        spoke[i] = b.add(nm("s", 1, i), 1);
        b.face(o, spoke[i]);
        b.face(ring[1].v[i], spoke[i]);
    }
    for (int i = 0; i < m; ++i) {
        std::size_t t = b.add(nm("t", 1, i), 2);
        b.face(spoke[i], t);
        b.face(spoke[(i + 1) % m], t);
        b.face(ring[1].e[i], t);
    }
    for (int k = 2; k <= rings; ++k) {
        std::vector<std::size_t> s(m), d(m);
        for (int i = 0; i < m; ++i) {
            s[i] = b.add(nm("s", k, i), 1);
            b.face(ring[k - 1].v[i], s[i]);
            b.face(ring[k].v[i], s[i]);
        }
        for (int i = 0; i < m; ++i) {
            d[i] = b.add(nm("d", k, i), 1);
            b.face(ring[k - 1].v[i], d[i]);
            b.face(ring[k].v[(i + 1) % m], d[i]);
        }
        for (int i = 0; i < m; ++i) {
            std::size_t t = b.add(nm("t", k, i), 2);
            b.face(s[i], t);
            b.face(ring[k].e[i], t);
            b.face(d[i], t);
            std::size_t u = b.add(nm("u", k, i), 2);
            b.face(ring[k - 1].e[i], u);
            b.face(d[i], u);
            b.face(s[(i + 1) % m], u);
        }
    }
    for (int k = 1; k <= rings; ++k) {
        Region r;
        for (int i = 0; i < m; ++i) {
            r.set(ring[k].v[i]);
            r.set(ring[k].e[i]);
        }
        b.region(nm("ring", k), r);
        if (k == rings) b.region("rim", r);
    }
    if (puncture) return b.build(nm("punctured-disk", rings), o);
    return b.build(nm("disk", rings));
}

// Suspension of an n-cycle: equator v0..v(n-1), poles "np" and "sp".
FiniteSpace suspension(int n, bool plane) {
    require(n >= 2, "suspension needs an equator of at least 2 vertices");
    ComplexBuilder b;
    std::size_t np = b.add("np", 0, "p");
    std::size_t sp = b.add("sp", 0, plane ? "" : "q");
    Cycle eq;
    for (int i = 0; i < n; ++i) eq.v.push_back(b.add(nm("v", i), 0, "equator"));
    for (int i = 0; i < n; ++i) {
        eq.e.push_back(b.add(nm("e", i), 1));
        b.face(eq.v[i], eq.e[i]);
        b.face(eq.v[(i + 1) % n], eq.e[i]);
    }
    std::vector<std::size_t> a(n), c(n);
    for (int i = 0; i < n; ++i) {
        a[i] = b.add(nm("a", i), 1);
        b.face(np, a[i]);
        b.face(eq.v[i], a[i]);
    }
    for (int i = 0; i < n; ++i) {
        c[i] = b.add(nm("b", i), 1);
        b.face(sp, c[i]);
        b.face(eq.v[i], c[i]);
    }
    for (int i = 0; i < n; ++i) {
        std::size_t t = b.add(nm("t", i), 2);
        b.face(a[i], t);
        b.face(a[(i + 1) % n], t);
        b.face(eq.e[i], t);
    }
    for (int i = 0; i < n; ++i) {
        std::size_t u = b.add(nm("u", i), 2);
        b.face(c[i], u);
        b.face(c[(i + 1) % n], u);
        b.face(eq.e[i], u);
    }
    if (plane) return b.build(nm("plane", n), sp);
    return b.build(nm("sphere", n));
}

// Cylinder of `rows` square bands between rows+1 parallel n-cycles x0..x(rows).
// With open_ends, omega sits below both end cycles.
FiniteSpace cylinder(int n, int rows, bool open_ends, const std::string& name) {
    require(n >= 2, "cylinder needs cycles of at least 2 vertices");
    require(rows >= 1, "cylinder needs at least 1 band");
    ComplexBuilder b;
    std::optional<std::size_t> omega;
    if (open_ends) omega = b.add("w", 0, "infinity");
    std::vector<Cycle> cyc(rows + 1);
    for (int k = 0; k <= rows; ++k) {
        for (int i = 0; i < n; ++i) {
            cyc[k].v.push_back(b.add(nm("x", k, i), 0));
            if (open_ends && (k == 0 || k == rows)) b.face(*omega, cyc[k].v.back());
        }
        for (int i = 0; i < n; ++i) {
            cyc[k].e.push_back(b.add(nm("c", k, i), 1));
            b.face(cyc[k].v[i], cyc[k].e[i]);
            b.face(cyc[k].v[(i + 1) % n], cyc[k].e[i]);
        }
    }
    for (int k = 1; k <= rows; ++k) {
        std::vector<std::size_t> r(n), d(n);
        for (int i = 0; i < n; ++i) {
            r[i] = b.add(nm("r", k, i), 1);
            b.face(cyc[k - 1].v[i], r[i]);
            b.face(cyc[k].v[i], r[i]);
        }
        for (int i = 0; i < n; ++i) {
            d[i] = b.add(nm("d", k, i), 1);
            b.face(cyc[k - 1].v[i], d[i]);
            b.face(cyc[k].v[(i + 1) % n], d[i]);
        }
        for (int i = 0; i < n; ++i) {
            std::size_t t = b.add(nm("t", k, i), 2);
            b.face(r[i], t);
            b.face(cyc[k].e[i], t);
            b.face(d[i], t);
            std::size_t u = b.add(nm("u", k, i), 2);
            b.face(cyc[k - 1].e[i], u);
            b.face(d[i], u);
            b.face(r[(i + 1) % n], u);
        }
    }
    for (int k = 0; k <= rows; ++k) {
        Region r;
        for (int i = 0; i < n; ++i) {
            r.set(cyc[k].v[i]);
            r.set(cyc[k].e[i]);
        }
        b.region(nm("cycle", k), r);
    }
    return b.build(name, omega);
}

}  // namespace

FiniteSpace build_interval(int n) {
    require(n >= 1, "interval needs at least 1 edge");
    ComplexBuilder b;
    for (int i = 0; i <= n; ++i) b.add(nm("v", i), 0);
    for (int i = 1; i <= n; ++i) {
        std::size_t e = b.add(nm("e", i), 1);
        b.face(static_cast<std::size_t>(i - 1), e);
        b.face(static_cast<std::size_t>(i), e);
    }
    return b.build(nm("interval", n));
}

namespace {

// Vertices v0..v(n-1), edge e_i joins v(i-1) and v(i mod n).
FiniteSpace circle_complex(int n, bool line) {
    require(n >= 2, "circle needs at least 2 vertices");
    ComplexBuilder b;
    for (int i = 0; i < n; ++i) b.add(nm("v", i), 0, line && i == 0 ? "infinity" : "");
    for (int i = 1; i <= n; ++i) {
        std::size_t e = b.add(nm("e", i), 1);
        b.face(static_cast<std::size_t>(i - 1), e);
        b.face(static_cast<std::size_t>(i % n), e);
    }
    if (line) return b.build(nm("line", n), std::size_t{0});
    return b.build(nm("circle", n));
}

}  // namespace

FiniteSpace build_circle(int n) { return circle_complex(n, false); }
FiniteSpace build_line_window(int n) { return circle_complex(n, true); }
FiniteSpace build_disk(int rings) { return disk_complex(rings, false); }
FiniteSpace build_punctured_disk(int rings) { return disk_complex(rings, true); }
FiniteSpace build_sphere(int n) { return suspension(n, false); }
FiniteSpace build_plane_window(int n) { return suspension(n, true); }
FiniteSpace build_annulus(int n) { return cylinder(n, 1, false, nm("annulus", n)); }
FiniteSpace build_strip(int w, int h) {
    return cylinder(w, h, true, "strip" + std::to_string(w) + "x" + std::to_string(h));
}

std::vector<std::string> builtin_space_names() {
    return {"interval(n)", "circle(n)", "line(n)", "disk(rings)", "punctured-disk(rings)",
            "sphere(n)", "plane(n)", "annulus(n)", "strip(w,h)"};
}

FiniteSpace build_named(const std::string& spec) {
    std::string name = spec;
    std::vector<int> args;
    if (auto open = spec.find('('); open != std::string::npos) {
        if (spec.back() != ')') throw ParseError("malformed builtin space '" + spec + "'");
        name = spec.substr(0, open);
        std::stringstream ss(spec.substr(open + 1, spec.size() - open - 2));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            char* end = nullptr;
            long v = std::strtol(tok.c_str(), &end, 10);
            if (tok.empty() || *end != '\0') throw ParseError("bad builtin space argument '" + tok + "'");
            args.push_back(static_cast<int>(v));
        }
    }
    auto arg = [&](std::size_t i, int dflt) { return i < args.size() ? args[i] : dflt; };
    auto arity = [&](std::size_t k) {
        if (args.size() > k) throw ParseError("too many arguments for builtin space '" + name + "'");
    };
    if (name == "interval") return arity(1), build_interval(arg(0, 2));
    if (name == "circle") return arity(1), build_circle(arg(0, 4));
    if (name == "line") return arity(1), build_line_window(arg(0, 4));
    if (name == "disk") return arity(1), build_disk(arg(0, 1));
    if (name == "punctured-disk") return arity(1), build_punctured_disk(arg(0, 1));
    if (name == "sphere") return arity(1), build_sphere(arg(0, 3));
    if (name == "plane") return arity(1), build_plane_window(arg(0, 4));
    if (name == "annulus") return arity(1), build_annulus(arg(0, 3));
    if (name == "strip") return arity(2), build_strip(arg(0, 2), arg(1, 2));
    throw ParseError("unknown builtin space '" + name + "'");
}

}  // namespace topomeasure
