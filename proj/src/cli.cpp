#include "hyperarr/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hyperarr/admissible.hpp"
#include "hyperarr/arrow.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/invariants.hpp"
#include "hyperarr/matroid.hpp"
#include "hyperarr/poincare.hpp"

namespace hyperarr {

namespace {

using nlohmann::json;

struct SourceFlags {
    std::string input;
    std::size_t braid = 0;
    std::size_t boolean = 0;
};

struct Flags {
    SourceFlags source;
    bool json = false;
    unsigned m = 2;
    bool count_only = false;
    bool shared_phi = false;
    unsigned max_exponent = 24;
    std::uint64_t max_tuples = 10'000'000;
    std::size_t max_chambers = 1'000'000;
    std::size_t ell = 3;
};

void add_source(CLI::App* cmd, SourceFlags& s) {
    cmd->add_option("--input", s.input, "Arrangement JSON file");
    cmd->add_option("--braid", s.braid, "Braid arrangement in R^L")->check(CLI::Range(2, 64));
    cmd->add_option("--boolean", s.boolean, "Coordinate arrangement in R^D")->check(CLI::Range(1, 64));
}

Arrangement load(const SourceFlags& s) {
    const int given = !s.input.empty() + (s.braid != 0) + (s.boolean != 0);
    if (given != 1)
        throw Error(ErrorKind::MalformedInput, "give exactly one of --input, --braid, --boolean");
    if (s.braid) return builtin_braid(s.braid);
    if (s.boolean) return builtin_boolean(s.boolean);
    std::ifstream in(s.input);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + s.input);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_arrangement(buf.str());
}

json arrangement_json(const Arrangement& a) { return json::parse(serialize_arrangement(a)); }

AdmissibleOptions admissible_options(const Flags& f) {
    AdmissibleOptions o;
    o.shared_phi = f.shared_phi;
    o.max_exponent = f.max_exponent;
    o.max_tuples = f.max_tuples;
    return o;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string braces(const std::vector<std::string>& items) {
    std::string s = "{";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s + "}";
}

int cmd_chambers(const Flags& f, std::ostream& out) {
    const Arrangement a = load(f.source);
    ChamberOptions opts;
    opts.max_chambers = f.max_chambers;
    const auto chambers = enumerate_chambers(a, opts);
    const auto ell = a.braid_ell();
    if (f.json) {
        json rows = json::array();
        for (const auto& c : chambers->chambers()) {
            json row = {{"id", c.id}, {"address", c.address.to_string()}};
            if (ell) row["order"] = permutation_label(*ell, c.address);
            rows.push_back(std::move(row));
        }
        emit(out, {{"arrangement", arrangement_json(a)}, {"count", chambers->size()}, {"chambers", rows}});
        return kExitOk;
    }
    for (const auto& c : chambers->chambers()) {
        out << c.id << "\t" << c.address.to_string();
        if (ell) out << "\t" << permutation_label(*ell, c.address);
        out << "\n";
    }
    return kExitOk;
}

int cmd_poincare(const Flags& f, std::ostream& out) {
    const Arrangement a = load(f.source);
    const auto pi = poincare(a);
    const BigInt at_one = pi.evaluate(BigInt(1));
    if (f.json) {
        json coeffs = json::array();
        for (const auto& c : pi.coeffs()) coeffs.push_back(c.get_str());
        emit(out, {{"arrangement", arrangement_json(a)},
                   {"coefficients", coeffs},
                   {"polynomial", pi.to_string()},
                   {"value_at_one", at_one.get_str()},
                   {"divisible_by_one_plus_t_squared", divisible_by_one_plus_t_squared(pi)}});
        return kExitOk;
    }
    out << "pi(t) = " << pi.to_string() << "\n";
    out << "pi(1) = " << at_one.get_str() << "\n";
    return kExitOk;
}

int cmd_circuits(const Flags& f, std::ostream& out) {
    const Arrangement a = load(f.source);
    const auto cs = circuits(a);
    if (f.json) {
        json list = json::array();
        for (const auto& c : cs) {
            json idx = json::array();
            for (auto j : c.indices) idx.push_back(j + 1);
            list.push_back(idx);
        }
        emit(out, {{"arrangement", arrangement_json(a)}, {"circuits", list}});
        return kExitOk;
    }
    for (const auto& c : cs) {
        std::vector<std::string> items;
        for (auto j : c.indices) items.push_back(std::to_string(j + 1));
        out << braces(items) << "\n";
    }
    return kExitOk;
}

int cmd_decompose(const Flags& f, std::ostream& out) {
    const Arrangement a = load(f.source);
    const auto d = decompose(a);
    if (f.json) {
        json blocks = json::array();
        for (std::size_t k = 0; k < d.size(); ++k) {
            json idx = json::array(), labels = json::array();
            for (auto j : d.blocks[k]) {
                idx.push_back(j + 1);
                labels.push_back(a.label(j));
            }
            blocks.push_back({{"indices", idx}, {"labels", labels}, {"rank", d.block_ranks[k]}});
        }
        emit(out, {{"arrangement", arrangement_json(a)}, {"blocks", blocks}, {"decomposable", d.decomposable()}});
        return kExitOk;
    }
    for (std::size_t k = 0; k < d.size(); ++k) {
        std::vector<std::string> labels;
        for (auto j : d.blocks[k]) labels.push_back(a.label(j));
        out << "block " << (k + 1) << ": " << braces(labels) << " rank " << d.block_ranks[k] << "\n";
    }
    return kExitOk;
}

int cmd_admissible(const Flags& f, std::ostream& out) {
    const Arrangement a = load(f.source);
    const auto maps = enumerate_admissible(a, f.m, admissible_options(f));
    const BigInt formula = count_admissible_formula(a, f.m);
    const bool agree = formula == static_cast<unsigned long>(maps.size());
    if (f.json) {
        json list = json::array();
        if (!f.count_only)
            for (const auto& mp : maps) {
                json tables = json::array();
                for (const auto& fn : mp.family.plus_fns) tables.push_back(fn.hex());
                const auto h = is_projective(mp);
                list.push_back({{"tables", tables}, {"projective", h.has_value()}, {"dictator", h ? json(*h) : json()}});
            }
        json doc = {{"arrangement", arrangement_json(a)},
                    {"m", f.m},
                    {"count", maps.size()},
                    {"formula", formula.get_str()},
                    {"agree", agree}};
        if (!f.count_only) doc["maps"] = list;
        emit(out, doc);
    } else {
        if (!f.count_only)
            for (std::size_t k = 0; k < maps.size(); ++k) {
                out << "map " << (k + 1) << ":";
                for (const auto& fn : maps[k].family.plus_fns) out << " " << fn.hex();
                const auto h = is_projective(maps[k]);
                if (h)
                    out << " projective dictator=" << *h;
                else
                    out << " non-projective";
                out << "\n";
            }
        out << "count " << maps.size() << ", formula " << formula.get_str() << (agree ? ", agree" : ", MISMATCH")
            << "\n";
    }
    return agree ? kExitOk : kExitInvariant;
}

int cmd_arrow(const Flags& f, std::ostream& out) {
    const auto r = arrow_report(f.ell, f.m, admissible_options(f));
    if (f.json) {
        json orders = json::array();
        for (std::size_t id = 0; id < r.orders.size(); ++id)
            orders.push_back({{"id", id}, {"address", r.orders[id].first.to_string()}, {"order", r.orders[id].second}});
        json maps = json::array();
        for (const auto& e : r.maps) {
            json tables = json::array();
            for (const auto& fn : e.family.plus_fns) tables.push_back(fn.hex());
            maps.push_back({{"tables", tables},
                            {"projective", e.dictator.has_value()},
                            {"dictator", e.dictator ? json(*e.dictator) : json()}});
        }
        emit(out, {{"ell", r.ell},
                   {"m", r.m},
                   {"orders", orders},
                   {"maps", maps},
                   {"count", r.maps.size()},
                   {"formula", r.formula_count.get_str()},
                   {"all_dictatorships", r.all_dictatorships()},
                   {"summary", summary_line(r)}});
    } else {
        out << render_text(r);
    }
    return r.passed() ? kExitOk : kExitInvariant;
}

int cmd_check(const Flags& f, std::ostream& out) {
    const Arrangement a = load(f.source);
    const auto results = run_invariant_suite(a, f.m, admissible_options(f));
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.passed;
    if (f.json) {
        json list = json::array();
        for (const auto& r : results) list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        emit(out, {{"arrangement", arrangement_json(a)}, {"m", f.m}, {"invariants", list}, {"passed", failed == 0}});
    } else {
        for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        if (failed == 0)
            out << "all " << results.size() << " invariants pass\n";
        else
            out << failed << " of " << results.size() << " invariants failed\n";
    }
    return failed == 0 ? kExitOk : kExitInvariant;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ResourceLimit: return kExitResource;
        case ErrorKind::InternalInconsistency: return kExitInvariant;
        default: return kExitValidation;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chambers, matroid decompositions and admissible maps of real central arrangements", "hyperarr"};
    app.require_subcommand(1);
    Flags f;

    auto* chambers = app.add_subcommand("chambers", "List chambers as sign vectors");
    add_source(chambers, f.source);
    chambers->add_option("--max-chambers", f.max_chambers, "Chamber cap");

    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial and pi(1)");
    add_source(poincare_cmd, f.source);

    auto* circuits_cmd = app.add_subcommand("circuits", "Circuits of the linear matroid");
    add_source(circuits_cmd, f.source);

    auto* decompose_cmd = app.add_subcommand("decompose", "Decomposition into indecomposable blocks");
    add_source(decompose_cmd, f.source);

    auto* admissible = app.add_subcommand("admissible", "Enumerate admissible maps");
    add_source(admissible, f.source);
    admissible->add_option("--m", f.m, "Number of voters (arity)")->check(CLI::Range(1u, kMaxArity));
    admissible->add_flag("--count-only", f.count_only, "Print only the count");
    admissible->add_flag("--shared-phi", f.shared_phi, "Search only families constant across hyperplanes");
    admissible->add_option("--max-exponent", f.max_exponent, "Cap on log2 of the candidate space");
    admissible->add_option("--max-tuples", f.max_tuples, "Cap on |Ch|^m");

    auto* arrow = app.add_subcommand("arrow", "Social-welfare report for a braid arrangement");
    arrow->add_option("--ell", f.ell, "Number of options")->required()->check(CLI::Range(2, 64));
    arrow->add_option("--m", f.m, "Number of voters")->check(CLI::Range(1u, kMaxArity));
    arrow->add_flag("--shared-phi", f.shared_phi, "Search only families constant across hyperplanes");
    arrow->add_option("--max-exponent", f.max_exponent, "Cap on log2 of the candidate space");
    arrow->add_option("--max-tuples", f.max_tuples, "Cap on |Ch|^m");

    auto* check = app.add_subcommand("check", "Run the cross-module invariant suite");
    add_source(check, f.source);
    check->add_option("--m", f.m, "Number of voters for the admissible-map checks")->check(CLI::Range(1u, kMaxArity));
    check->add_option("--max-exponent", f.max_exponent, "Cap on log2 of the candidate space");
    check->add_option("--max-tuples", f.max_tuples, "Cap on |Ch|^m");

    app.add_flag("--json", f.json, "Emit JSON instead of text");
    for (auto* sub : {chambers, poincare_cmd, circuits_cmd, decompose_cmd, admissible, arrow, check})
        sub->add_flag("--json", f.json, "Emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (chambers->parsed()) return cmd_chambers(f, out);
        if (poincare_cmd->parsed()) return cmd_poincare(f, out);
        if (circuits_cmd->parsed()) return cmd_circuits(f, out);
        if (decompose_cmd->parsed()) return cmd_decompose(f, out);
        if (admissible->parsed()) return cmd_admissible(f, out);
        if (arrow->parsed()) return cmd_arrow(f, out);
        if (check->parsed()) return cmd_check(f, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return kExitValidation;
}

}  // namespace hyperarr
