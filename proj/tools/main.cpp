#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitUsage = 2;  // malformed selections or data
constexpr int kExitDomain = 3; // structurally valid input with no answer

struct CommonArgs {
    std::string rows;
    std::string cols;
    std::string format = "text";
    pascalrank::cli::Format fmt;

    void resolve() { fmt.json = format == "json"; }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--rows", args.rows, "row selection, comma-separated increasing integers")
        ->required();
    cmd->add_option("--cols", args.cols, "column selection, comma-separated increasing integers")
        ->required();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank, bases and invertible cores of submatrices of the "
                 "upper-triangular Pascal matrix, with sparse-exponent least-squares fitting"};
    app.require_subcommand(1);

    CommonArgs matrix_args;
    CLI::App* matrix_cmd = app.add_subcommand("matrix", "print the exact submatrix T[r,c]");
    add_common(matrix_cmd, matrix_args);

    CommonArgs subpair_args;
    CLI::App* subpair_cmd =
        app.add_subcommand("subpair", "greedy maximal ordered sub-pair of the selections");
    add_common(subpair_cmd, subpair_args);

    CommonArgs rank_args;
    CLI::App* rank_cmd =
        app.add_subcommand("rank", "rank certificate: bases, invertible core, index matrix");
    add_common(rank_cmd, rank_args);

    CommonArgs inv_args;
    CLI::App* inv_cmd =
        app.add_subcommand("invertible", "square-case invertibility test (r <= c componentwise)");
    add_common(inv_cmd, inv_args);

    CommonArgs fit_args;
    std::string fit_data;
    unsigned fit_places = 4;
    CLI::App* fit_cmd = app.add_subcommand(
        "fit", "least-squares fit of a sparse-exponent polynomial to data at x = 1");
    add_common(fit_cmd, fit_args);
    fit_cmd->add_option("--data", fit_data, "data values, comma-separated exact rationals")
        ->required();
    fit_cmd->add_option("--places", fit_places, "decimal places in rendered values")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace pascalrank::cli;
        std::string out;
        if (matrix_cmd->parsed()) {
            matrix_args.resolve();
            out = run_matrix(parse_selection(matrix_args.rows, "--rows"),
                             parse_selection(matrix_args.cols, "--cols"), matrix_args.fmt);
        } else if (subpair_cmd->parsed()) {
            subpair_args.resolve();
            out = run_subpair(parse_selection(subpair_args.rows, "--rows"),
                              parse_selection(subpair_args.cols, "--cols"), subpair_args.fmt);
        } else if (rank_cmd->parsed()) {
            rank_args.resolve();
            out = run_rank(parse_selection(rank_args.rows, "--rows"),
                           parse_selection(rank_args.cols, "--cols"), rank_args.fmt);
        } else if (inv_cmd->parsed()) {
            inv_args.resolve();
            out = run_invertible(parse_selection(inv_args.rows, "--rows"),
                                 parse_selection(inv_args.cols, "--cols"), inv_args.fmt);
        } else if (fit_cmd->parsed()) {
            fit_args.resolve();
            fit_args.fmt.places = fit_places;
            out = run_fit(parse_selection(fit_args.rows, "--rows"),
                          parse_selection(fit_args.cols, "--cols"),
                          parse_data(fit_data, "--data"), fit_args.fmt);
        }
        std::cout << out;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
