#include "commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <stdexcept>

int main(int argc, char **argv)
{
    using namespace hopfkit::cli;
    CLI::App app{"Exact averaging, Chen series, Hopf algebra construction and splitting analysis"};
    app.require_subcommand(1, 1);
    Options opt;
    std::string output = "text";

    auto common = [&](CLI::App *c, bool needs_input) {
        auto *in = c->add_option("input", opt.input, "system description (JSON)");
        if (needs_input)
            in->required()->check(CLI::ExistingFile);
        else
            in->check(CLI::ExistingFile);
        c->add_option("--order", opt.order, "degree cap N (default: the file's order)");
        c->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--seed", opt.seed, "sample product-rule checks from this seed");
    };

    auto *avg = app.add_subcommand("average", "averaged series, change of variables and transferred field");
    common(avg, true);
    avg->add_option("--mode", opt.mode, "strobo or zeromean")
        ->check(CLI::IsMember({"strobo", "stroboscopic", "zeromean", "zero-mean"}));
    avg->add_option("--backend", opt.backend, "words, trees or monomial")
        ->check(CLI::IsMember({"words", "trees", "monomial"}));
    avg->add_option("--cap", opt.cap, "override the backend's order cap");

    auto *chen = app.add_subcommand("chen", "Chen series of the forcing curve");
    common(chen, true);
    chen->add_option("--backend", opt.backend, "words or trees")->check(CLI::IsMember({"words", "trees"}));
    chen->add_option("--cap", opt.cap, "override the backend's order cap");

    auto *hopf = app.add_subcommand("hopf", "Hopf data from Lie structure constants, with the axiom audit");
    common(hopf, false);
    hopf->add_option("--builtin", opt.builtin, "abelian, witt, free-lie or grossman-larson")
        ->check(CLI::IsMember({"abelian", "witt", "free-lie", "grossman-larson"}));
    hopf->add_option("--alphabet", opt.alphabet, "letters for free-lie and grossman-larson");

    auto *split = app.add_subcommand("split", "modified generator of a Strang splitting");
    common(split, true);
    split->add_option("--omega-tau-over-2pi", opt.omega_tau_over_2pi, "check resonance at this value of w*tau/(2*pi)");

    auto *val = app.add_subcommand("validate", "numerical check of the averaging error decay");
    common(val, true);
    val->add_option("--mode", opt.mode, "strobo or zeromean")
        ->check(CLI::IsMember({"strobo", "stroboscopic", "zeromean", "zero-mean"}));
    val->add_option("--omegas", opt.omegas, "forcing frequencies")->delimiter(',');
    val->add_option("--horizon", opt.horizon, "final time T");
    val->add_option("--samples", opt.samples, "sample times in (0, T]");
    val->add_option("--tolerance", opt.slope_tolerance, "allowed deviation of the slope from -(N+1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : failure;
    }
    opt.command = app.get_subcommands().front()->get_name();

    try {
        auto rep = run(opt);
        if (output == "json")
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cout << rep.text;
        return rep.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "hopfkit: " << e.what() << "\n";
        return failure;
    }
}
