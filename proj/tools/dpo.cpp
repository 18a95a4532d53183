#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpo/io.hpp"

namespace fs = std::filesystem;
using dpo::io::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_property = 2;

struct Output {
    std::string path;  // empty = stdout
    std::string format = "json";

    void emit(const json& j, const std::string& text_summary) const {
        if (!path.empty()) {
            dpo::io::save(path, j);
            if (format == "text") std::cout << text_summary;
            return;
        }
        if (format == "text")
            std::cout << text_summary;
        else
            std::cout << dpo::io::dump(j);
    }
};

json handle_to_artifact(const dpo::SubgraphHandle& h) {
    json j = dpo::io::to_json(h);
    j["kind"] = "handle";
    j["version"] = dpo::io::format_version;
    return j;
}

std::string summarize_graph(const dpo::Graph& g) {
    return std::to_string(g.vertices.size()) + " vertices, " + std::to_string(g.edges.size()) +
           " edges";
}

int cmd_validate(const std::vector<std::string>& paths) {
    bool ok = true;
    for (const auto& p : paths) {
        try {
            json j = dpo::io::load(p);
            std::string kind = dpo::io::kind_of(j);
            if (kind == "graph") {
                dpo::io::graph_from_json(j);
            } else if (kind == "rule") {
                dpo::io::rule_from_json(j);
            } else if (kind == "derivation") {
                dpo::io::derivation_from_json(j);
            } else if (kind == "script") {
                auto sf = dpo::io::script_from_json(j);
                fs::path base = fs::path(p).parent_path();
                dpo::io::load_graph(base / sf.start);
                for (const auto& r : sf.rules) dpo::io::load_rule(base / r);
            } else {
                throw dpo::io::ParseError("unknown artifact kind: " + kind);
            }
            std::cout << p << ": ok (" << kind << ")\n";
        } catch (const dpo::Error& e) {
            std::cerr << p << ": " << e.what() << "\n";
            ok = false;
        }
    }
    return ok ? exit_ok : exit_invalid;
}

dpo::Derivation load_script_and_run(const std::string& path) {
    json j = dpo::io::load(path);
    auto sf = dpo::io::script_from_json(j);
    fs::path base = fs::path(path).parent_path();
    dpo::Graph start = dpo::io::load_graph(base / sf.start);
    std::vector<dpo::Rule> rules;
    for (const auto& r : sf.rules) rules.push_back(dpo::io::load_rule(base / r));
    return dpo::run_script(start, sf.entries, rules);
}

int cmd_derive(const std::string& script, const Output& out) {
    dpo::Derivation d = load_script_and_run(script);
    std::string table = "step  rule                 match  |H|\n";
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const auto& s = d.steps[i];
        char line[128];
        std::snprintf(line, sizeof line, "%-5zu %-20s %-6zu %zu\n", i, s.rule.name.c_str(),
                      s.g.vmap.size() + s.g.emap.size(), s.H().size());
        table += line;
    }
    table += "final: " + summarize_graph(d.end()) + "\n";
    out.emit(dpo::io::to_json(d), table);
    return exit_ok;
}

int cmd_invert(const std::string& dump, const Output& out) {
    dpo::Derivation d = dpo::io::load_derivation(dump);
    dpo::Derivation inv = dpo::invert_derivation(d);
    out.emit(dpo::io::to_json(inv),
             "inverted " + std::to_string(inv.length()) + " steps; final: " +
                 summarize_graph(inv.end()) + "\n");
    return exit_ok;
}

int cmd_move(const std::string& dump_a, const std::string& dump_b, bool backward,
             const Output& out) {
    dpo::Derivation a = dpo::io::load_derivation(dump_a);
    dpo::Derivation b = dpo::io::load_derivation(dump_b);
    try {
        if (backward) {
            dpo::Derivation moved = dpo::evom(a, b);
            out.emit(dpo::io::to_json(moved),
                     "moved backward over " + std::to_string(b.length()) + " steps; final: " +
                         summarize_graph(moved.end()) + "\n");
        } else {
            dpo::MovedPair grid = dpo::move_forward(a, b);
            json j = dpo::io::to_json(grid);
            json cells = json::array();
            for (std::size_t i = 0; i < grid.vertical.size(); ++i)
                for (std::size_t jj = 0; jj < grid.vertical[i].size(); ++jj)
                    cells.push_back({{"i", i},
                                     {"j", jj},
                                     {"axis", "vertical"},
                                     {"step", dpo::io::to_json(grid.vertical[i][jj])}});
            for (std::size_t i = 0; i < grid.horizontal.size(); ++i)
                for (std::size_t jj = 0; jj < grid.horizontal[i].size(); ++jj)
                    cells.push_back({{"i", i},
                                     {"j", jj},
                                     {"axis", "horizontal"},
                                     {"step", dpo::io::to_json(grid.horizontal[i][jj])}});
            j["grid"] = cells;
            out.emit(j, "moved " + std::to_string(a.length()) + " steps over " +
                            std::to_string(b.length()) + "; final: " +
                            summarize_graph(grid.moved.end()) + "\n");
        }
    } catch (const dpo::MoveError& e) {
        std::cerr << e.what() << "\n";
        return exit_property;
    }
    return exit_ok;
}

int cmd_acc(const std::string& dump, const Output& out) {
    dpo::Derivation d = dpo::io::load_derivation(dump);
    dpo::AccessedPart acc = dpo::accessed_part(d);
    out.emit(handle_to_artifact(acc.handle),
             "accessed part: " + std::to_string(acc.handle.vset.size()) + " vertices, " +
                 std::to_string(acc.handle.eset.size()) + " edges\n");
    return exit_ok;
}

int cmd_restrict(const std::string& dump, const std::string& handle_file, const Output& out) {
    dpo::Derivation d = dpo::io::load_derivation(dump);
    dpo::SubgraphHandle m = dpo::io::handle_from_json(dpo::io::load(handle_file), d.start);
    dpo::RestrictionCertificate cert = dpo::restrict_derivation(d, m);
    out.emit(dpo::io::to_json(cert),
             "restricted to " + summarize_graph(cert.restricted.start) + " start; " +
                 std::to_string(cert.restricted.length()) + " steps\n");
    return exit_ok;
}

int cmd_spine(const std::string& dump, const Output& out) {
    dpo::Derivation d = dpo::io::load_derivation(dump);
    auto [acc, sp] = dpo::spine(d);
    json j = {{"kind", "spine"},
              {"version", dpo::io::format_version},
              {"acc", handle_to_artifact(acc.handle)},
              {"spine", dpo::io::to_json(sp)}};
    out.emit(j, "spine start: " + summarize_graph(sp.start) + "; end: " +
                    summarize_graph(sp.end()) + "\n");
    return exit_ok;
}

int cmd_iso(const std::string& dump_a, const std::string& dump_b, std::size_t max_iso,
            const Output& out) {
    dpo::Derivation a = dpo::io::load_derivation(dump_a);
    dpo::Derivation b = dpo::io::load_derivation(dump_b);
    auto res = dpo::derivations_equal_up_to_iso(a, b, max_iso);
    std::string status = res.status == dpo::IsoSearchStatus::Found      ? "found"
                         : res.status == dpo::IsoSearchStatus::NotEqual ? "not-equal"
                                                                        : "undecided";
    json j = {{"kind", "iso_report"}, {"version", dpo::io::format_version}, {"status", status}};
    if (res.witness) {
        json chain = json::array();
        for (const auto& m : res.witness->isos) chain.push_back(dpo::io::to_json(m));
        j["isos"] = chain;
    }
    out.emit(j, "iso: " + status + "\n");
    if (res.status == dpo::IsoSearchStatus::Found) return exit_ok;
    return res.status == dpo::IsoSearchStatus::Undecided ? exit_invalid : exit_property;
}

int cmd_check_theorem(const std::string& dump_d, const std::string& dump_dbar,
                      const Output& out) {
    dpo::Derivation d = dpo::io::load_derivation(dump_d);
    dpo::Derivation d_bar = dpo::io::load_derivation(dump_dbar);
    dpo::SpineReport report = dpo::check_spine_preservation(d, d_bar);
    json j = {{"kind", "theorem_report"},
              {"version", dpo::io::format_version},
              {"pass", report.pass},
              {"detail", report.detail},
              {"one_step_law_checked", report.one_step_law_checked},
              {"one_step_law_holds", report.one_step_law_holds}};
    if (report.witness) {
        json chain = json::array();
        for (const auto& m : report.witness->isos) chain.push_back(dpo::io::to_json(m));
        j["isos"] = chain;
    }
    out.emit(j, std::string(report.pass ? "PASS" : "FAIL") + ": " + report.detail + "\n");
    return report.pass ? exit_ok : exit_property;
}

int cmd_check_dpo(const std::vector<std::string>& dumps, const Output& out) {
    json reports = json::array();
    bool pass = true;
    for (const auto& p : dumps) {
        dpo::Derivation d = dpo::io::load_derivation(p);
        auto violations = dpo::validate_derivation(d);
        pass = pass && violations.empty();
        reports.push_back({{"file", p}, {"violations", violations}});
    }
    json j = {{"kind", "dpo_report"},
              {"version", dpo::io::format_version},
              {"pass", pass},
              {"derivations", reports}};
    out.emit(j, std::string(pass ? "PASS" : "FAIL") + ": " + std::to_string(dumps.size()) +
                    " derivation(s) checked\n");
    return pass ? exit_ok : exit_property;
}

int cmd_check_indep(const std::vector<std::string>& left, const std::vector<std::string>& right,
                    const std::vector<std::string>& hosts, bool sequential, const Output& out) {
    std::vector<dpo::Rule> P, P_bar;
    std::vector<dpo::Graph> G;
    for (const auto& p : left) P.push_back(dpo::io::load_rule(p));
    for (const auto& p : right) P_bar.push_back(dpo::io::load_rule(p));
    for (const auto& p : hosts) G.push_back(dpo::io::load_graph(p));
    dpo::IndependenceReport report = dpo::check_rule_pair_independence(P, P_bar, G, sequential);
    std::string text = std::string(report.clean() ? "PASS" : "FAIL") + ": " +
                       std::to_string(report.pairs_checked) + " pair(s) checked (bounded)\n";
    for (const auto& c : report.counterexamples) text += "  counterexample: " + c + "\n";
    out.emit(dpo::io::to_json(report), text);
    return report.clean() ? exit_ok : exit_property;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-pushout graph transformation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Output out;
    std::size_t max_iso = 10000;
    std::size_t seed = 0;
    app.add_option("--out", out.path, "write the result artifact to this file")->capture_default_str();
    app.add_option("--format", out.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-iso", max_iso, "cap on enumerated start isomorphisms");
    app.add_option("--seed", seed, "seed for randomized operations (reserved)");

    std::vector<std::string> paths;
    auto* validate = app.add_subcommand("validate", "parse and validate artifact files");
    validate->add_option("files", paths, "artifact files")->required();

    std::string script;
    auto* derive = app.add_subcommand("derive", "run a script and dump the derivation");
    derive->add_option("script", script, "script file")->required();

    std::string dump_a, dump_b;
    auto* invert = app.add_subcommand("invert", "invert a derivation dump");
    invert->add_option("dump", dump_a, "derivation dump")->required();

    bool backward = false;
    auto* move = app.add_subcommand("move", "move a derivation over another");
    move->add_option("dump", dump_a, "derivation to move")->required();
    move->add_option("over", dump_b, "derivation to move over")->required();
    move->add_flag("--backward", backward, "move backward (second dump ends at the first's start)");

    auto* acc = app.add_subcommand("acc", "accessed part of a derivation");
    acc->add_option("dump", dump_a, "derivation dump")->required();

    std::string handle_file;
    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a derivation to a subgraph");
    restrict_cmd->add_option("dump", dump_a, "derivation dump")->required();
    restrict_cmd->add_option("handle", handle_file, "handle file (id sets on the start graph)")
        ->required();

    auto* spine_cmd = app.add_subcommand("spine", "accessed part and minimal restriction");
    spine_cmd->add_option("dump", dump_a, "derivation dump")->required();

    auto* iso = app.add_subcommand("iso", "compare two derivations up to isomorphism");
    iso->add_option("dump", dump_a, "first derivation")->required();
    iso->add_option("other", dump_b, "second derivation")->required();

    bool f_theorem = false, f_indep = false, f_dpo = false, sequential = false;
    std::vector<std::string> left_rules, right_rules, host_graphs, dpo_dumps;
    auto* check = app.add_subcommand("check", "run a property check and report pass/fail");
    check->add_flag("--theorem", f_theorem, "spine preservation under moving");
    check->add_flag("--indep", f_indep, "bounded rule-pair independence on hosts");
    check->add_flag("--dpo", f_dpo, "every step of the dumps is a double pushout");
    check->add_flag("--sequential", sequential, "sequential instead of parallel independence");
    check->add_option("--left", left_rules, "first rule set (files)");
    check->add_option("--right", right_rules, "second rule set (files)");
    check->add_option("--host", host_graphs, "host graphs for --indep");
    check->add_option("inputs", dpo_dumps, "derivation dumps");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(paths);
        if (derive->parsed()) return cmd_derive(script, out);
        if (invert->parsed()) return cmd_invert(dump_a, out);
        if (move->parsed()) return cmd_move(dump_a, dump_b, backward, out);
        if (acc->parsed()) return cmd_acc(dump_a, out);
        if (restrict_cmd->parsed()) return cmd_restrict(dump_a, handle_file, out);
        if (spine_cmd->parsed()) return cmd_spine(dump_a, out);
        if (iso->parsed()) return cmd_iso(dump_a, dump_b, max_iso, out);
        if (check->parsed()) {
            if (f_theorem) {
                if (dpo_dumps.size() != 2)
                    throw dpo::Error("check --theorem takes exactly two derivation dumps");
                return cmd_check_theorem(dpo_dumps[0], dpo_dumps[1], out);
            }
            if (f_indep) return cmd_check_indep(left_rules, right_rules, host_graphs, sequential, out);
            if (f_dpo) {
                if (dpo_dumps.empty()) throw dpo::Error("check --dpo takes derivation dumps");
                return cmd_check_dpo(dpo_dumps, out);
            }
            throw dpo::Error("check requires one of --theorem, --indep, --dpo");
        }
    } catch (const dpo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
