// tsv: command-line front end for the twisted Schrodinger-Virasoro engine.
//
// Exit status: 0 success, 1 a check or factorization failed, 2 usage or parse error.

#include "tsv/autgroup.hpp"
#include "tsv/derivations.hpp"
#include "tsv/expression.hpp"
#include "tsv/json_codec.hpp"
#include "tsv/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

tsv::Element element_arg(const std::string &text, const char *what) {
    try {
        return tsv::parse_element(text);
    } catch (const tsv::SyntaxError &e) {
        throw Usage(std::string(what) + ": " + e.what());
    }
}

void print_element(const tsv::Element &x, bool as_json) {
    if (as_json)
        std::cout << json{{"result", tsv::to_string(x)}}.dump() << "\n";
    else
        std::cout << tsv::to_string(x) << "\n";
}

void print_params(const tsv::AutomorphismParams &p, bool as_json) {
    std::cout << tsv::to_json(p).dump(as_json ? -1 : 2) << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact computation in the twisted Schrodinger-Virasoro Lie algebra"};
    app.require_subcommand(1);

    std::string format = "text";
    std::optional<int> radius;
    std::uint64_t seed = 1;
    int cases = 100;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--radius", radius, "Window radius")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for randomized checks");
    app.add_option("--cases", cases, "Number of randomized cases")->check(CLI::PositiveNumber);

    std::string x_text, y_text, params_path, other_path, suite = "all";

    auto *cmd_bracket = app.add_subcommand("bracket", "Lie bracket [x, y]")->fallthrough();
    cmd_bracket->add_option("x", x_text)->required();
    cmd_bracket->add_option("y", y_text)->required();

    auto *cmd_apply_aut = app.add_subcommand("apply-aut", "Apply an automorphism to an element")->fallthrough();
    cmd_apply_aut->add_option("--params", params_path, "Automorphism JSON")->required();
    cmd_apply_aut->add_option("x", x_text)->required();

    auto *cmd_apply_der = app.add_subcommand("apply-der", "Apply a classified derivation")->fallthrough();
    cmd_apply_der->add_option("--params", params_path, "Derivation JSON")->required();
    cmd_apply_der->add_option("x", x_text)->required();

    auto *cmd_compose = app.add_subcommand("compose", "Compose two automorphisms (p after q)")->fallthrough();
    cmd_compose->add_option("p", params_path)->required();
    cmd_compose->add_option("q", other_path)->required();

    auto *cmd_invert = app.add_subcommand("invert", "Invert an automorphism")->fallthrough();
    cmd_invert->add_option("p", params_path)->required();

    auto *cmd_factorize = app.add_subcommand("factorize", "Factorize a windowed automorphism")->fallthrough();
    cmd_factorize->add_option("map", params_path)->required();

    auto *cmd_exp_ad = app.add_subcommand("exp-ad", "exp(ad x)(target) for x in span{Y, M}")->fallthrough();
    cmd_exp_ad->add_option("x", x_text)->required();
    cmd_exp_ad->add_option("target", y_text)->required();

    auto *cmd_verify = app.add_subcommand("verify", "Run a verification suite")->fallthrough();
    cmd_verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(tsv::suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    const bool as_json = format == "json";

    try {
        if (*cmd_bracket) {
            print_element(tsv::bracket(element_arg(x_text, "x"), element_arg(y_text, "y")), as_json);
        } else if (*cmd_apply_aut) {
            auto p = tsv::automorphism_from_json(tsv::read_json_file(params_path));
            print_element(tsv::apply(p, element_arg(x_text, "x")), as_json);
        } else if (*cmd_apply_der) {
            auto d = tsv::derivation_from_json(tsv::read_json_file(params_path));
            print_element(tsv::apply_classified(d, element_arg(x_text, "x")), as_json);
        } else if (*cmd_compose) {
            auto p = tsv::automorphism_from_json(tsv::read_json_file(params_path));
            auto q = tsv::automorphism_from_json(tsv::read_json_file(other_path));
            print_params(tsv::compose(p, q), as_json);
        } else if (*cmd_invert) {
            print_params(tsv::invert(tsv::automorphism_from_json(tsv::read_json_file(params_path))), as_json);
        } else if (*cmd_factorize) {
            auto m = tsv::window_map_from_json(tsv::read_json_file(params_path));
            try {
                print_params(tsv::factorize(m), as_json);
            } catch (const tsv::FactorizationError &e) {
                if (as_json)
                    std::cout << json{{"error", e.what()}}.dump() << "\n";
                std::cerr << e.what() << "\n";
                return 1;
            }
        } else if (*cmd_exp_ad) {
            auto x = element_arg(x_text, "x");
            if (!tsv::in_inner_radical(x))
                throw Usage("x: ad not nilpotent / not in inner radical");
            print_element(tsv::exp_ad(x, element_arg(y_text, "target")), as_json);
        } else if (*cmd_verify) {
            tsv::VerifyOptions opts{suite, radius, seed, cases};
            auto report = tsv::run_verify(opts);
            if (as_json)
                std::cout << report.to_json().dump(2) << "\n";
            else
                std::cout << report.to_text();
            return report.passed() ? 0 : 1;
        }
    } catch (const Usage &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
