#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wha/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wha::cli::WorkspaceError("cannot read \"" + path + "\"");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wha::cli::WorkspaceError("cannot write \"" + path + "\"");
    out << body;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace wha::cli;
    CLI::App app{"Weak Hopf algebra toolkit: exact constructions and verifiers"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Options opt;
    std::string json_path;
    app.add_option("--seed", opt.seed, "seed for randomized numerics")->capture_default_str();
    app.add_option("--tol", opt.tol, "float tolerance for numeric block detection")->capture_default_str();
    app.add_option("--json", json_path, "write the machine-readable report here");

    std::string demo;
    auto* d = app.add_subcommand("demo", "run a demo pipeline");
    d->add_option("name", demo, "demo name")->required();

    std::string file, target, suite;
    auto* v = app.add_subcommand("verify", "run a check suite on a workspace object");
    v->add_option("file", file, "workspace JSON")->required();
    v->add_option("target", target, "object name")->required();
    v->add_option("suite", suite, "check suite")->required();

    std::string recipe, out_path, from, group;
    auto* c = app.add_subcommand("construct", "build an object and append it to a workspace");
    c->add_option("file", file, "input workspace JSON")->required();
    c->add_option("recipe", recipe, "recipe")->required();
    c->add_option("out", out_path, "output workspace JSON")->required();
    c->add_option("--from", from, "input object name");
    c->add_option("--group", group, "group for group-algebra (built-in or workspace name)");

    for (auto* sub : {d, v, c}) {
        sub->add_option("--seed", opt.seed);
        sub->add_option("--tol", opt.tol);
        sub->add_option("--json", json_path);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunResult r;
        if (*d) {
            r = run_demo(demo, opt);
        } else if (*v) {
            r = run_verify(read_file(file), target, suite, opt);
        } else {
            json ws;
            r = run_construct(read_file(file), recipe, from, group, opt, ws);
            if (r.exit_code == 0) write_file(out_path, ws.dump(2) + "\n");
        }
        std::cout << r.text;
        if (!json_path.empty()) write_file(json_path, r.report.dump(2) + "\n");
        return r.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        if (*d) std::cerr << "demos:";
        if (*v) std::cerr << "suites:";
        if (*c) std::cerr << "recipes:";
        for (const auto& n : *d ? demo_names() : *v ? suite_names() : recipe_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
    } catch (const WorkspaceError& e) {
        std::cerr << "workspace error: " << e.what() << "\n";
        return 3;
    }
}
