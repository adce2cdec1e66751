#include "topomeasure/demo.hpp"
#include "topomeasure/json.hpp"
#include "topomeasure/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

using namespace topomeasure;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, unknown = 3 };

struct Options {
    std::string space;
    std::string ssf;
    std::string region;
    std::string format = "json";
    std::string table;
    std::string constant;
    std::string demo;
    std::size_t budget = 0;
    std::size_t max_parts = 8;
    std::uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SpacePtr load_space(const std::string& arg) {
    if (arg.empty()) throw UsageError("--space is required");
    if (arg.rfind("builtin:", 0) == 0) return std::make_shared<const FiniteSpace>(build_named(arg.substr(8)));
    std::ifstream in(arg);
    if (!in) {
        // A bare builtin name such as "disk" or "sphere(3)".
        return std::make_shared<const FiniteSpace>(build_named(arg));
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return std::make_shared<const FiniteSpace>(parse_space(ss.str()));
}

ValidationBudget budget_of(const Options& o) {
    ValidationBudget b = ValidationBudget::from_env();
    if (o.budget) b.search_nodes = o.budget;
    b.max_parts = o.max_parts;
    return b;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int report_exit(const Report& r) {
    if (r.any_fail()) return failed;
    if (r.any_unknown()) return unknown;
    return ok;
}

void emit_report(const Options& o, const FiniteSpace& sp, const Report& r) {
    if (o.format == "csv") {
        std::cout << "id,verdict,instances,informational,note\n";
        for (const auto& c : r.checks)
            std::cout << csv_field(c.id) << ',' << verdict_name(c.verdict) << ',' << c.instances << ','
                      << (c.informational ? "yes" : "no") << ',' << csv_field(c.note) << '\n';
        return;
    }
    Json j = to_json(sp, r);
    j["seed"] = o.seed;
    std::cout << j.dump(2) << '\n';
}

void summarize(const Report& r) {
    std::size_t pass = 0, fail = 0, unk = 0;
    for (const auto& c : r.checks) {
        if (c.informational) continue;
        if (c.verdict == Verdict::pass) ++pass;
        if (c.verdict == Verdict::fail) ++fail;
        if (c.verdict == Verdict::unknown) ++unk;
    }
    std::cerr << r.kind << " on " << r.space << ": " << pass << " pass, " << fail << " fail, " << unk << " unknown";
    if (!r.classification.empty()) std::cerr << "; " << r.classification;
    std::cerr << '\n';
    for (const auto& c : r.checks)
        if (!c.informational && c.verdict != Verdict::pass)
            std::cerr << "  " << c.id << ": " << verdict_name(c.verdict) << (c.note.empty() ? "" : " (" + c.note + ")")
                      << '\n';
}

int cmd_list_spaces(const Options& o) {
    Json j = Json::array();
    for (const auto& n : builtin_space_names()) j.push_back(n);
    if (o.format == "csv") {
        for (const auto& n : builtin_space_names()) std::cout << n << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
    return ok;
}

int cmd_validate_ssf(const Options& o) {
    auto sp = load_space(o.space);
    if (o.ssf.empty()) throw UsageError("--ssf is required");
    Report r = validate_ssf(parse_ssf(sp, o.ssf), budget_of(o));
    emit_report(o, *sp, r);
    summarize(r);
    return report_exit(r);
}

int cmd_eval(const Options& o) {
    auto sp = load_space(o.space);
    if (o.ssf.empty()) throw UsageError("--ssf is required");
    Region a = sp->parse_region(o.region.empty() ? "@all" : o.region);
    Value v = mu(parse_ssf(sp, o.ssf), a);
    if (o.format == "csv") {
        std::cout << "region,value\n" << csv_field(sp->format_region(a)) << ',' << v.str() << '\n';
    } else {
        Json j;
        j["space"] = sp->name();
        j["ssf"] = o.ssf;
        j["region"] = sp->format_region(a);
        j["value"] = to_json(v);
        std::cout << j.dump(2) << '\n';
    }
    std::cerr << "mu({" << sp->format_region(a) << "}) = " << v.str() << '\n';
    return ok;
}

int cmd_extend(const Options& o) {
    auto sp = load_space(o.space);
    if (o.ssf.empty()) throw UsageError("--ssf is required");
    TopMeasure m = memoize(extend(parse_ssf(sp, o.ssf)));
    ValidationBudget b = budget_of(o);
    Region within = o.region.empty() ? sp->all() : sp->parse_region(o.region);
    std::vector<Region> regions;
    bool complete = true;
    auto collect = [&](const Region& r) {
        if (regions.size() >= b.catalog_cap) return false;
        regions.push_back(r);
        return true;
    };
    complete = enumerate_open(*sp, within, collect) && complete;
    complete = enumerate_closed(*sp, within, [&](const Region& r) { return sp->is_open(r) || collect(r); }) && complete;

    if (o.format == "csv") {
        std::cout << "region,kind,value\n";
        for (const auto& r : regions)
            std::cout << csv_field(sp->format_region(r)) << ',' << (sp->is_open(r) ? "open" : "closed") << ','
                      << m(r).str() << '\n';
    } else {
        Json j;
        j["kind"] = "measure-table";
        j["space"] = sp->name();
        j["ssf"] = o.ssf;
        j["complete"] = complete;
        Json rows = Json::array();
        for (const auto& r : regions) {
            Json e;
            e["region"] = sp->format_region(r);
            e["kind"] = sp->is_open(r) ? "open" : "closed";
            e["value"] = to_json(m(r));
            rows.push_back(e);
        }
        j["values"] = rows;
        std::cout << j.dump(2) << '\n';
    }
    std::cerr << regions.size() << " open or closed regions" << (complete ? "" : " (truncated)") << '\n';
    return complete ? ok : unknown;
}

TopMeasure table_measure(const SpacePtr& sp, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read measure table '" + path + "'");
    Json j = Json::parse(in);
    auto values = std::make_shared<std::unordered_map<Region, Value, CellSetHash>>();
    for (const auto& e : j.at("values"))
        (*values)[sp->parse_region(e.at("region").get<std::string>())] = Value::parse(e.at("value").get<std::string>());
    return TopMeasure{sp, "table " + path, [values, sp](const Region& a) {
                          auto it = values->find(a);
                          if (it == values->end())
                              throw UsageError("measure table has no value for {" + sp->format_region(a) + "}");
                          return it->second;
                      }};
}

int cmd_validate_tm(const Options& o) {
    auto sp = load_space(o.space);
    int sources = !o.ssf.empty() + !o.table.empty() + !o.constant.empty();
    if (sources != 1) throw UsageError("validate-tm needs exactly one of --ssf, --table, --constant");
    ValidationBudget b = budget_of(o);
    std::optional<SolidSetFunction> lambda;
    TopMeasure m;
    if (!o.ssf.empty()) {
        lambda = parse_ssf(sp, o.ssf);
        m = extend(*lambda);
    } else if (!o.table.empty()) {
        m = table_measure(sp, o.table);
    } else {
        Value c = Value::parse(o.constant);
        m = TopMeasure{sp, "constant " + c.str(), [c](const Region&) { return c; }};
    }
    Report r = validate_tm(m, b);
    summarize(r);
    int code = report_exit(r);
    if (!lambda) {
        emit_report(o, *sp, r);
        return code;
    }
    Report ext = validate_extension(*lambda, b);
    summarize(ext);
    if (o.format == "csv") {
        emit_report(o, *sp, r);
        for (const auto& c : ext.checks)
            std::cout << csv_field(c.id) << ',' << verdict_name(c.verdict) << ',' << c.instances << ','
                      << (c.informational ? "yes" : "no") << ',' << csv_field(c.note) << '\n';
    } else {
        Json j;
        j["tm"] = to_json(*sp, r);
        j["extension"] = to_json(*sp, ext);
        j["seed"] = o.seed;
        std::cout << j.dump(2) << '\n';
    }
    int ext_code = report_exit(ext);
    if (code == failed || ext_code == failed) return failed;
    return std::max(code, ext_code);
}

int cmd_genus(const Options& o) {
    auto sp = load_space(o.space);
    ValidationBudget b = budget_of(o);
    FiniteSpace target = sp->compact() ? *sp : sp->compactification();
    GenusReport g = genus(target, b.search_nodes);
    Json j = to_json(target, g);
    if (!sp->compact()) {
        j["space"] = sp->name();
        j["computed_on"] = "compactification";
        j["hatX_genus0"] = g.exact ? Json(g.genus == 0) : Json("unknown");
    }
    std::cout << j.dump(2) << '\n';
    std::cerr << "genus " << (g.exact ? "= " : ">= ") << g.genus << '\n';
    return g.exact ? ok : unknown;
}

int cmd_partitions(const Options& o) {
    auto sp = load_space(o.space);
    ValidationBudget b = budget_of(o);
    Region target = o.region.empty() ? sp->all() : sp->parse_region(o.region);
    SolidCatalog cat = enumerate_bounded_solid_sets(*sp, b.catalog_cap);
    PartitionSearch limits{b.max_parts, b.search_nodes};
    bool truncated = cat.truncated;
    std::size_t count = 0;
    if (o.format == "csv") std::cout << "partition,part,kind,region\n";
    Json all = Json::array();
    enumerate_solid_partitions(*sp, cat, target, limits, truncated, [&](const SolidPartition& p) {
        if (o.format == "csv") {
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
                bool closed = std::find(p.closed_parts.begin(), p.closed_parts.end(), i) != p.closed_parts.end();
                std::cout << count << ',' << i << ',' << (closed ? "compact" : "open") << ','
                          << csv_field(sp->format_region(p.parts[i])) << '\n';
            }
        } else {
            all.push_back(to_json(*sp, p));
        }
        ++count;
        return true;
    });
    if (o.format != "csv") {
        Json j;
        j["kind"] = "partitions";
        j["space"] = sp->name();
        j["target"] = sp->format_region(target);
        j["complete"] = !truncated;
        j["partitions"] = all;
        std::cout << j.dump(2) << '\n';
    }
    std::cerr << count << " solid partitions" << (truncated ? " (truncated)" : "") << '\n';
    return truncated ? unknown : ok;
}

int cmd_demo(const Options& o) {
    std::vector<const DemoSpec*> specs;
    if (o.demo == "all") {
        for (const auto& d : demo_specs()) specs.push_back(&d);
    } else {
        try {
            specs.push_back(&find_demo(o.demo));
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
    }
    ValidationBudget b = budget_of(o);
    Json out = Json::array();
    bool all_ok = true;
    for (const auto* spec : specs) {
        DemoResult r = run_demo(*spec, b);
        all_ok = all_ok && r.passed();
        std::cerr << spec->name << ": " << (r.passed() ? "pass" : "fail") << "; " << r.tm.classification << '\n';
        for (const auto& row : r.rows)
            if (!row.ok)
                std::cerr << "  " << row.row.label << ": expected " << row.row.expected.str() << ", got "
                          << row.actual.str() << '\n';
        for (const auto& c : r.checks)
            if (!c.ok)
                std::cerr << "  " << c.check.id << ": expected " << verdict_name(c.check.expected) << ", got "
                          << verdict_name(c.actual) << '\n';
        if (!r.cover_ok) std::cerr << "  cover: not found\n";
        out.push_back(to_json(r));
    }
    std::cout << (specs.size() == 1 ? out[0] : out).dump(2) << '\n';
    return all_ok ? ok : failed;
}

int cmd_oracle_check(const Options& o) {
    auto sp = load_space(o.space);
    if (o.ssf.empty()) throw UsageError("--ssf is required");
    try {
        Report r = oracle::agreement_suite(*sp, {parse_ssf(sp, o.ssf)});
        emit_report(o, *sp, r);
        summarize(r);
        return report_exit(r);
    } catch (const oracle::BudgetRefusal& e) {
        std::cerr << "oracle refused: " << e.what() << '\n';
        return unknown;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite models of locally compact spaces: solid-set functions and topological measures"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--budget", o.budget, "Search node budget (default TOPOMEASURE_BUDGET)");
        sub->add_option("--seed", o.seed, "Tie-breaking seed; searches are canonically ordered, results never depend on it");
    };
    auto with_space = [&](CLI::App* sub, bool positional = false) {
        sub->add_option(positional ? "space,--space" : "--space", o.space, "Space file or builtin:name(params)");
        common(sub);
    };

    std::map<std::string, std::function<int(const Options&)>> commands;

    auto* ls = app.add_subcommand("list-spaces", "List the builtin spaces");
    common(ls);
    commands["list-spaces"] = cmd_list_spaces;

    auto* vs = app.add_subcommand("validate-ssf", "Check (s1)-(s4) for a solid-set function");
    with_space(vs);
    vs->add_option("--ssf", o.ssf, "Solid-set function descriptor");
    commands["validate-ssf"] = cmd_validate_ssf;

    auto* ex = app.add_subcommand("extend", "Measure table of the extension on open and closed regions");
    with_space(ex);
    ex->add_option("--ssf", o.ssf, "Solid-set function descriptor");
    ex->add_option("--region", o.region, "Only regions inside this one");
    commands["extend"] = cmd_extend;

    auto* ev = app.add_subcommand("eval", "Evaluate the extension on one region");
    with_space(ev);
    ev->add_option("--ssf", o.ssf, "Solid-set function descriptor");
    ev->add_option("--region", o.region, "Region literal or @label (default @all)");
    commands["eval"] = cmd_eval;

    auto* vt = app.add_subcommand("validate-tm", "Check the topological measure axioms");
    with_space(vt);
    vt->add_option("--ssf", o.ssf, "Validate the extension of this solid-set function");
    vt->add_option("--table", o.table, "Validate a measure table (JSON as written by extend)");
    vt->add_option("--constant", o.constant, "Validate the constant evaluator with this value");
    commands["validate-tm"] = cmd_validate_tm;

    auto* ge = app.add_subcommand("genus", "Genus of a compact space, or of the compactification");
    with_space(ge, true);
    commands["genus"] = cmd_genus;

    auto* pa = app.add_subcommand("partitions", "Enumerate partitions of a region into bounded solid sets");
    with_space(pa, true);
    pa->add_option("region,--region", o.region, "Region literal (default @all)");
    pa->add_option("--max-parts", o.max_parts, "Largest partition size");
    commands["partitions"] = cmd_partitions;

    auto* de = app.add_subcommand("demo", "Run a worked example and compare with its expected values");
    de->add_option("name", o.demo, "Demo name, or all")->required();
    common(de);
    commands["demo"] = cmd_demo;

    auto* oc = app.add_subcommand("oracle-check", "Compare the engine with the brute-force oracle");
    with_space(oc, true);
    oc->add_option("ssf,--ssf", o.ssf, "Solid-set function descriptor");
    commands["oracle-check"] = cmd_oracle_check;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return commands.at(name)(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const SpaceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
}
