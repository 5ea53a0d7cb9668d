// Command-line front end. Exit status: 0 ok, 1 domain error, 2 parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symfn/symfn.hpp"

using namespace symfn;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int parse_letter(const std::string& s) {
    try {
        std::size_t used = 0;
        const int x = std::stoi(s, &used);
        if (used != s.size()) throw parse_error("bad letter '" + s + "'");
        return x;
    } catch (const std::logic_error&) {
        throw parse_error("bad letter '" + s + "'");
    }
}

void print_expansion(const Expansion& e) {
    for (const auto& [lambda, c] : e) std::cout << "s" << to_string(lambda) << " " << c << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric functions, tableaux and RSK"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, alpha_s, beta_s, outer_s, word_s, matrix_s, file_s, letter_s, method = "tableaux";
    std::string from = "h", to = "s", model = "h", inner_s;
    int vars = 0, show = 0;
    bool canonical = false, star = false, burge_flag = false, print_poly = false;
    std::string tableau_s;

    auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial s_lambda(x_1..x_n)");
    schur_cmd->add_option("LAMBDA", lambda_s)->required();
    schur_cmd->add_option("--vars", vars)->required()->check(CLI::NonNegativeNumber);
    schur_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"bialternant", "jt-h", "jt-e", "tableaux", "abacus"}));

    auto* expand_cmd = app.add_subcommand("expand", "expand h_mu, e_mu, m_mu or s_mu in the Schur basis");
    expand_cmd->add_option("--from", from)->check(CLI::IsMember({"h", "e", "m", "s"}));
    expand_cmd->add_option("--to", to)->check(CLI::IsMember({"s"}));
    expand_cmd->add_option("MU", mu_s)->required();

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K_{lambda,mu}");
    kostka_cmd->add_option("LAMBDA", lambda_s)->required();
    kostka_cmd->add_option("MU", mu_s)->required();
    kostka_cmd->add_flag("--canonical", canonical, "also print the canonical tableau");

    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficients of s_alpha s_beta");
    lr_cmd->add_option("ALPHA", alpha_s)->required();
    lr_cmd->add_option("BETA", beta_s)->required();
    lr_cmd->add_option("--outer", outer_s, "print only c^LAMBDA_{ALPHA,BETA}");

    auto* insert_cmd = app.add_subcommand("insert", "row-insert a letter into a tableau read from a file");
    insert_cmd->add_option("TABLEAU_FILE", file_s)->required();
    insert_cmd->add_option("X", letter_s)->required();

    auto* pw_cmd = app.add_subcommand("pw", "insertion tableau P(w) and Greene shape of a word");
    pw_cmd->add_option("WORD", word_s)->required();

    auto* rsk_cmd = app.add_subcommand("rsk", "RSK, dual RSK or Burge pair of a matrix");
    rsk_cmd->add_option("MATRIX", matrix_s)->required();
    auto* star_opt = rsk_cmd->add_flag("--star", star);
    rsk_cmd->add_flag("--burge", burge_flag)->excludes(star_opt);

    auto* paths_cmd = app.add_subcommand("paths", "lattice-path determinant audit");
    paths_cmd->add_option("--model", model)->check(CLI::IsMember({"h", "e", "giambelli"}));
    paths_cmd->add_option("LAMBDA", lambda_s)->required();
    paths_cmd->add_option("--inner", inner_s, "inner shape for skew h/e models");
    paths_cmd->add_option("--vars", vars)->required()->check(CLI::NonNegativeNumber);
    paths_cmd->add_option("--show", show, "render the K-th non-crossing system (1-based)");
    paths_cmd->add_option("--tableau", tableau_s, "render the non-crossing system of this tableau");
    paths_cmd->add_flag("--poly", print_poly, "print the determinant polynomial");

    auto* abacus_cmd = app.add_subcommand("abacus", "sign, shape and weight of a labeled abacus");
    abacus_cmd->add_option("WORD", word_s)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*schur_cmd) {
            std::cout << schur(parse_partition(lambda_s), vars, parse_schur_method(method)) << "\n";
        } else if (*expand_cmd) {
            const Partition mu = parse_partition(mu_s);
            const int n = std::max(mu.size(), 1);
            if (from == "h") print_expansion(h_in_s(mu));
            else if (from == "e") print_expansion(e_in_s(mu));
            else if (from == "m") print_expansion(to_schur_basis(m_poly(mu, n)));
            else print_expansion(Expansion{{mu, 1}});
        } else if (*kostka_cmd) {
            const Partition lambda = parse_partition(lambda_s), mu = parse_partition(mu_s);
            std::cout << kostka(lambda, mu) << "\n";
            if (canonical) std::cout << to_string(canonical_tableau(lambda, mu));
        } else if (*lr_cmd) {
            const Partition alpha = parse_partition(alpha_s), beta = parse_partition(beta_s);
            if (!outer_s.empty()) std::cout << lr_coefficient(parse_partition(outer_s), alpha, beta) << "\n";
            else print_expansion(schur_product(alpha, beta));
        } else if (*insert_cmd) {
            const Tableau t = parse_tableau(read_file(file_s));
            const int x = parse_letter(letter_s);
            const auto r = insert_with_row(t, x);
            std::cout << to_string(r.tableau) << "new box in row " << r.row + 1 << "\n";
        } else if (*pw_cmd) {
            const Word w = parse_word(word_s);
            const Tableau p = p_tableau(w);
            std::cout << to_string(p);
            std::cout << "shape " << (p.empty() ? Partition{} : p.shape()) << "\n";
            if (w.size() <= greene_max_length) {
                const auto [rows, cols] = shape_from_greene(w);
                std::cout << "greene " << rows << " " << cols << "\n";
            } else {
                std::cout << "greene skipped: word longer than " << greene_max_length << "\n";
            }
        } else if (*rsk_cmd) {
            const IntMatrix A = parse_matrix(matrix_s);
            if (star) {
                const auto [p, q] = rsk_star(A);
                std::cout << "P*\n" << to_string(p) << "Q\n" << to_string(q);
            } else if (burge_flag) {
                const auto [p, q] = burge(A);
                std::cout << "P*\n" << to_string(p) << "Q*\n" << to_string(q);
            } else {
                const auto [p, q] = rsk(A);
                std::cout << "P\n" << to_string(p) << "Q\n" << to_string(q);
            }
        } else if (*paths_cmd) {
            const Partition lambda = parse_partition(lambda_s);
            const Partition inner = inner_s.empty() ? Partition{} : parse_partition(inner_s);
            const SkewShape shape{lambda, inner};
            PathModel pm = PathModel::h;
            Endpoints ends;
            if (model == "h") {
                ends = h_endpoints(shape, vars);
            } else if (model == "e") {
                pm = PathModel::e;
                ends = e_endpoints(shape, vars);
            } else {
                if (!inner.empty()) throw domain_error("the giambelli model takes no inner shape");
                pm = PathModel::giambelli;
                ends = giambelli_endpoints(lambda, vars);
            }
            const WeightedGrid grid = grid_for(pm, vars, ends);
            const auto rep = lgv_check(grid, ends.sources, ends.sinks, {true, false});
            std::cout << "determinant terms " << rep.determinant.term_count() << "\n";
            if (print_poly) std::cout << "determinant " << rep.determinant << "\n";
            std::cout << "non-crossing systems " << rep.noncrossing_count << "\n";
            std::cout << "tableaux " << schur_tableaux(shape, vars).term_count() << " monomials, "
                      << enumerate_ssyt(shape, vars).size() << " tableaux\n";
            std::cout << "crossing condition " << (rep.crossing_condition ? "holds" : "fails") << "\n";
            std::cout << "identity " << (rep.identity_holds() ? "holds" : "fails") << "\n";
            if (show > 0 || !tableau_s.empty()) {
                const auto systems = noncrossing_systems(grid, ends.sources, ends.sinks);
                const PathSystem* pick = nullptr;
                if (!tableau_s.empty()) {
                    const Tableau want = parse_tableau(tableau_s);
                    for (const auto& sys : systems)
                        if (paths_to_tableau(sys, pm, shape).to_tableau() == want) pick = &sys;
                    if (!pick) throw domain_error("no non-crossing system gives that tableau");
                } else {
                    if (static_cast<std::size_t>(show) > systems.size()) throw domain_error("--show exceeds the number of systems");
                    pick = &systems[static_cast<std::size_t>(show - 1)];
                }
                std::cout << render_paths(grid, *pick) << to_string(paths_to_tableau(*pick, pm, shape));
            }
        } else if (*abacus_cmd) {
            const auto s = abacus_stats(parse_abacus(word_s));
            std::cout << "sign " << s.sign << "\nshape " << s.shape << "\nweight " << s.weight << "\n";
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_fault& e) {
        std::cerr << "internal fault: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
