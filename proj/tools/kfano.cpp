#include <iostream>

#include <CLI11.hpp>

#include "kfano/pipelines.hpp"

using namespace kfano;

namespace {

int polytope_info_cmd(const std::string& src, const std::string& format) {
    try {
        std::cout << render(polytope_info(resolve_polytope(src)), format);
        return kExitPass;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

int reproduce_cmd(const std::string& name, const std::string& format) {
    CaseOutcome o = run_case(name);
    if (o.exit_code == kExitInput && o.report.checks.empty()) {
        std::cerr << "error: unknown case " << name << "; known cases:";
        for (const auto& c : reproduction_cases()) {
            std::cerr << " " << c.id;
            for (const auto& a : c.aliases) std::cerr << " (" << a << ")";
        }
        std::cerr << "\n";
        return o.exit_code;
    }
    std::cout << render(o.report, format);
    return o.exit_code;
}

int scan_cmd(const std::string& dir, const std::string& format) {
    try {
        ScanResult s = scan_directory(dir);
        if (format == "json") {
            std::cout << Json{{"rows", s.rows}, {"errors", s.errors}}.dump(2) << "\n";
        } else {
            for (const auto& row : s.rows) {
                std::cout << row.at("file").get<std::string>() << ": ";
                if (row.contains("error")) {
                    std::cout << "ERROR " << row.at("error").get<std::string>() << "\n";
                    continue;
                }
                const Json& i = row.at("info");
                std::cout << "f=" << i.at("f_vector").dump();
                for (const char* k : {"degree", "reflexive", "k_polystable", "aut_order", "euler"})
                    if (i.contains(k)) std::cout << " " << k << "=" << i.at(k).dump();
                std::cout << "\n";
            }
        }
        if (s.errors) std::cerr << "warning: " << s.errors << " file(s) could not be read\n";
        return kExitPass;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and deformation data of toric Fano threefolds"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string src;
    auto* info = app.add_subcommand("polytope-info", "Invariants of a builtin polytope or a polytope JSON file");
    info->add_option("src", src, "Builtin name or path")->required();
    add_format(info);

    std::string case_name;
    auto* rep = app.add_subcommand("reproduce", "Run a reproduction case and compare with the embedded expected values");
    rep->add_option("case", case_name, "Case id")->required();
    add_format(rep);

    std::string dir;
    auto* scan = app.add_subcommand("scan", "Invariants of every polytope JSON file in a directory");
    scan->add_option("dir", dir, "Directory")->required();
    add_format(scan);

    auto* list = app.add_subcommand("list", "List builtin polytopes and reproduction cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    if (*info) return polytope_info_cmd(src, format);
    if (*rep) return reproduce_cmd(case_name, format);
    if (*scan) return scan_cmd(dir, format);
    if (*list) {
        for (const auto& p : builtin_polytopes()) std::cout << "polytope " << p.name << "\n";
        for (const auto& c : reproduction_cases()) {
            std::cout << "case " << c.id;
            for (const auto& a : c.aliases) std::cout << " " << a;
            std::cout << "\n";
        }
    }
    return 0;
}
