#include "topomeasure/json.hpp"

#include <algorithm>

namespace topomeasure {

Json to_json(const Value& v) { return v.str(); }

Json to_json(const FiniteSpace& sp, const Witness& w) {
    Json j;
    j["note"] = w.note;
    Json items = Json::array();
    for (const auto& it : w.items) {
        Json e;
        e["role"] = it.role;
        e["region"] = sp.format_region(it.region);
        if (it.value) e["value"] = to_json(*it.value);
        items.push_back(e);
    }
    j["items"] = items;
    return j;
}

Json to_json(const FiniteSpace& sp, const Check& c) {
    Json j;
    j["id"] = c.id;
    j["verdict"] = verdict_name(c.verdict);
    j["instances"] = c.instances;
    if (c.informational) j["informational"] = true;
    if (!c.note.empty()) j["note"] = c.note;
    if (c.witness) j["witness"] = to_json(sp, *c.witness);
    return j;
}

Json to_json(const FiniteSpace& sp, const Report& r) {
    Json j;
    j["kind"] = r.kind;
    j["space"] = r.space;
    j["subject"] = r.subject;
    j["verdict"] = r.any_fail() ? "fail" : r.any_unknown() ? "unknown" : "pass";
    if (!r.classification.empty()) j["classification"] = r.classification;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(sp, c));
    j["checks"] = checks;
    return j;
}

Json to_json(const FiniteSpace& sp, const CoverWitness& c) {
    Json j;
    j["target"] = sp.format_region(c.target);
    j["target_value"] = to_json(c.target_value);
    Json pieces = Json::array();
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        Json p;
        p["region"] = sp.format_region(c.pieces[i]);
        p["value"] = to_json(c.values[i]);
        pieces.push_back(p);
    }
    j["pieces"] = pieces;
    j["sum"] = to_json(c.sum());
    return j;
}

Json to_json(const FiniteSpace& sp, const SolidPartition& p) {
    Json j;
    j["target"] = sp.format_region(p.target);
    Json parts = Json::array();
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        bool closed = std::find(p.closed_parts.begin(), p.closed_parts.end(), i) != p.closed_parts.end();
        Json e;
        e["region"] = sp.format_region(p.parts[i]);
        e["kind"] = closed ? "compact" : "open";
        parts.push_back(e);
    }
    j["parts"] = parts;
    return j;
}

Json to_json(const FiniteSpace& sp, const GenusReport& g) {
    Json j;
    j["kind"] = "genus";
    j["space"] = sp.name();
    j["genus"] = g.genus;
    j["exact"] = g.exact;
    j["closed_sets_scanned"] = g.closed_sets_scanned;
    j["budget"] = g.budget;
    if (g.witness) j["witness"] = to_json(sp, *g.witness);
    return j;
}

Json to_json(const DemoResult& d) {
    const FiniteSpace& sp = *d.space;
    Json j;
    j["kind"] = "demo";
    j["demo"] = d.name;
    j["space"] = sp.name();
    j["ssf"] = d.ssf;
    j["verdict"] = d.passed() ? "pass" : "fail";
    Json rows = Json::array();
    for (const auto& r : d.rows) {
        Json e;
        e["label"] = r.row.label;
        e["region"] = sp.format_region(r.region);
        e["expected"] = to_json(r.row.expected);
        e["actual"] = to_json(r.actual);
        if (r.oracle) e["oracle"] = to_json(*r.oracle);
        e["source"] = r.row.source;
        e["ok"] = r.ok;
        rows.push_back(e);
    }
    j["values"] = rows;
    Json checks = Json::array();
    for (const auto& c : d.checks) {
        Json e;
        e["id"] = c.check.id;
        e["expected"] = verdict_name(c.check.expected);
        e["actual"] = verdict_name(c.actual);
        e["source"] = c.check.source;
        e["ok"] = c.ok;
        checks.push_back(e);
    }
    j["expected_checks"] = checks;
    if (d.cover) {
        j["cover"] = to_json(sp, *d.cover);
        j["cover"]["ok"] = d.cover_ok;
    } else {
        j["cover"] = nullptr;
    }
    j["classification"] = d.tm.classification;
    j["tm"] = to_json(sp, d.tm);
    return j;
}

}  // namespace topomeasure
