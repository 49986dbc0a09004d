#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "twrep/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Hom and Ext for twisted quiver representations"};
    app.require_subcommand(1);
    twrep::CommandArgs args;
    std::string output;

    auto common = [&](CLI::App* c) {
        c->add_option("--field", args.field, "Q, F<p> or Fp:<p>");
        c->add_option("--seed", args.seed, "random seed");
        c->add_option("--max-degree", args.max_degree, "highest Ext degree");
        c->add_option("--variant", args.variant, "auto, psi, phi or both")
            ->check(CLI::IsMember({"auto", "psi", "phi", "both"}));
        c->add_flag("--emit-matrices", args.emit_matrices, "include matrices in the report");
        c->add_option("--trials", args.trials, "number of generated trials");
        c->add_option("-o,--output", output, "write to a file instead of stdout");
    };

    auto* validate = app.add_subcommand("validate", "check every law of a document");
    validate->add_option("document", args.document)->required();
    auto* hom = app.add_subcommand("hom", "dimension of Hom(X, Y)");
    auto* ext = app.add_subcommand("ext", "Ext dimensions and the long exact sequence");
    auto* les = app.add_subcommand("les-check", "assert exactness at every node of the long exact sequence");
    for (auto* c : {hom, ext, les}) {
        c->add_option("document", args.document)->required();
        c->add_option("x", args.x)->required();
        c->add_option("y", args.y)->required();
    }
    auto* resolve = app.add_subcommand("resolve", "standard three-term resolution");
    auto* coresolve = app.add_subcommand("coresolve", "standard three-term coresolution");
    for (auto* c : {resolve, coresolve}) {
        c->add_option("document", args.document)->required();
        c->add_option("x", args.x)->required();
    }
    auto* oracle = app.add_subcommand("oracle-compare", "compare against the Euler-form oracle on Vect instances");
    oracle->add_option("document", args.document, "Vect diagram document; built-in shapes when omitted");
    auto* preset = app.add_subcommand("preset", "emit a preset diagram document");
    preset->add_option("name", args.preset)->required()->check(CLI::IsMember({"framed", "chain", "vect"}));
    preset->add_option("--degree", args.degree, "A = k[t]/t^degree");
    preset->add_option("--framing", args.framing, "regular or simple")->check(CLI::IsMember({"regular", "simple"}));
    preset->add_option("--tail", args.tail, "number of tail arrows of the chain");
    preset->add_option("--shape", args.shape, "a2, a3, kronecker or square")
        ->check(CLI::IsMember({"a2", "a3", "kronecker", "square"}));
    preset->add_option("--multiplicity", args.multiplicity, "bimodule dimension per arrow");
    for (auto* c : {validate, hom, ext, les, resolve, coresolve, oracle, preset}) common(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    args.name = app.get_subcommands().front()->get_name();

    twrep::CommandOutput out = twrep::run_command(args);
    if (output.empty()) {
        std::cout << out.text;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << output << "\n";
            return 1;
        }
        f << out.text;
    }
    return out.exit_code;
}
