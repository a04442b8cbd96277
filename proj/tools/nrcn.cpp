// Command-line front end: Pascal triangles mod p, nucleus tables, class
// decompositions and the three-way verification sweep.

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "nrcn/error.hpp"
#include "nrcn/report.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kMismatch = 2, kResource = 3 };

void emit(const nlohmann::json& doc) { std::cout << doc.dump() << '\n'; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nuclei of normal rational curves over finite fields"};
    app.require_subcommand(1);

    std::uint64_t p = 0;
    std::uint64_t n = 0;
    std::uint64_t e = 1;
    std::size_t rows = 0;
    std::size_t max_n = 8;
    std::uint64_t seed = 1;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "text";
    std::string align = "left";

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* triangle = app.add_subcommand("triangle", "Rows of Pascal's triangle modulo p");
    triangle->add_option("--p", p, "Prime modulus")->required();
    triangle->add_option("--rows", rows, "Number of rows")->required();
    triangle->add_option("--align", align, "Text alignment")->check(CLI::IsMember({"left", "center"}));
    add_format(triangle);

    auto* nuclei = app.add_subcommand("nuclei", "Interval table of nucleus dimensions");
    nuclei->add_option("--p", p, "Characteristic")->required();
    nuclei->add_option("--n", n, "Ambient projective dimension")->required();
    add_format(nuclei);

    auto* classes = app.add_subcommand("classes", "Class decomposition of the zeros in row n");
    classes->add_option("--p", p, "Prime modulus")->required();
    classes->add_option("--n", n, "Row index")->required();
    add_format(classes);

    auto* verify = app.add_subcommand("verify", "Cross-check formula, basis and geometric nucleus");
    verify->add_option("--p", p, "Characteristic")->required();
    verify->add_option("--e", e, "Extension degree (q = p^e)");
    verify->add_option("--max-n", max_n, "Largest ambient dimension");
    verify->add_option("--seed", seed, "Seed for the randomised linear algebra checks");
    verify->add_option("--jobs", jobs, "Worker threads");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    const bool json = format == "json";
    try {
        if (*triangle) {
            if (json) {
                emit(nrcn::triangle_json(p, rows));
            } else {
                std::cout << nrcn::triangle_text(p, rows, align == "center" ? nrcn::Alignment::center
                                                                            : nrcn::Alignment::left);
            }
        } else if (*nuclei) {
            if (json) {
                emit(nrcn::nuclei_json(p, n));
            } else {
                std::cout << nrcn::nuclei_text(p, n);
            }
        } else if (*classes) {
            if (json) {
                emit(nrcn::classes_json(p, n));
            } else {
                std::cout << nrcn::classes_text(p, n);
            }
        } else if (*verify) {
            const auto summary = nrcn::run_verification(p, e, max_n, seed, jobs);
            if (json) {
                emit(nrcn::verification_json(summary));
            } else {
                std::cout << nrcn::verification_text(summary);
            }
            return summary.all_agree() ? kOk : kMismatch;
        }
    } catch (const nrcn::ResourceLimitError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kResource;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    }
    return kOk;
}
