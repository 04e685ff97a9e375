// Command-line front end: condition counting, closed-form families, numeric
// search, independent verification, atlas generation, and transversal-gate
// certification, all driven by explicit flags so runs are reproducible.

#include "spincode/spincode.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitVerifyFail = 4;
constexpr int kExitResource = 5;

using namespace spincode;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

Json search_report(const SearchResult& res) {
    Json j;
    j["found"] = res.found();
    j["j"] = res.j.str();
    j["mu"] = res.mu;
    j["nu"] = res.nu;
    j["restarts_used"] = res.outcome.restarts_used;
    j["best_residual"] = res.outcome.best_residual;
    return j;
}

Json verified_code_json(const MultiqubitCode& code, double tol) {
    Json residuals;
    if (code.rep && code.d >= 1) {
        const KLReport spin_kl = kl_check_full(unbootstrap(code), code.d, tol);
        residuals["spin_kl_max"] = spin_kl.max_residual;
        const KLReport sym_kl = multiqubit_kl_check(code, code.d, KLMode::Symmetric, tol);
        residuals["symmetric_kl_max"] = sym_kl.max_residual;
    }
    residuals["tolerance"] = tol;
    return code_to_json(code, residuals);
}

int run(int argc, char** argv) {
    CLI::App app{"binary dihedral spin codes and their permutationally invariant multiqubit images"};
    app.require_subcommand(1);

    // ---- count ----
    auto* cmd_count = app.add_subcommand("count", "reduced KL condition counts for an irrep");
    int count_b = 1, count_a = 1, count_d = 3;
    cmd_count->add_option("--b", count_b, "group degree parameter b (group BD_2b)")->required();
    cmd_count->add_option("--a", count_a, "irrep index a, 1 <= a <= b")->required();
    cmd_count->add_option("--d", count_d, "odd code distance")->required();

    // ---- family ----
    auto* cmd_family = app.add_subcommand("family", "closed-form code families");
    std::string family_kind;
    int family_b = 4, family_r = 3, family_d = 3;
    std::string family_j;
    int family_a = 0;
    std::uint64_t family_seed = 0;
    int family_restarts = 256;
    double family_tol = 1e-12;
    std::string family_out;
    cmd_family->add_option("--family", family_kind, "family: 1, 2, 3, or d3")->required();
    cmd_family->add_option("--b", family_b, "b for families 1/d3");
    cmd_family->add_option("--a", family_a, "irrep index for family d3 (default b-1)");
    cmd_family->add_option("--j", family_j, "spin for family d3, e.g. 13/2 (default smallest)");
    cmd_family->add_option("--r", family_r, "r for family 2 (group degree 2^r)");
    cmd_family->add_option("--d", family_d, "odd distance for family 3");
    cmd_family->add_option("--seed", family_seed, "search seed for family 3");
    cmd_family->add_option("--restarts", family_restarts, "search restarts for family 3");
    cmd_family->add_option("--tol", family_tol, "residual tolerance");
    cmd_family->add_option("-o,--output", family_out, "output file (default stdout)");

    // ---- search ----
    auto* cmd_search = app.add_subcommand("search", "numeric search for a covariant code");
    int search_b = 4, search_a = 3, search_d = 3, search_restarts = 256, search_escalate = 1;
    std::uint64_t search_seed = 0;
    double search_tol = 1e-12;
    bool allow_conjectured = false;
    std::string search_out;
    cmd_search->add_option("--b", search_b)->required();
    cmd_search->add_option("--a", search_a)->required();
    cmd_search->add_option("--d", search_d)->required();
    cmd_search->add_option("--restarts", search_restarts, "random restarts (default 256)");
    cmd_search->add_option("--seed", search_seed, "rng seed (default 0)");
    cmd_search->add_option("--escalate", search_escalate,
                           "extra degrees of freedom to try after a not-found (default 1)");
    cmd_search->add_option("--tol", search_tol, "residual tolerance (default 1e-12)");
    cmd_search->add_flag("--allow-conjectured", allow_conjectured,
                         "permit searches at d >= 15, where existence is conjectural");
    cmd_search->add_option("-o,--output", search_out, "output file (default stdout)");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "re-check a code file against the KL conditions");
    std::string verify_input, verify_mode = "spin", verify_out;
    int verify_d = 0;
    double verify_tol = 1e-12;
    cmd_verify->add_option("--input", verify_input, "code JSON file")->required();
    cmd_verify->add_option("--d", verify_d, "distance to check (default: declared d)");
    cmd_verify->add_option("--mode", verify_mode, "spin | dense | symmetric")
        ->check(CLI::IsMember({"spin", "dense", "symmetric"}));
    cmd_verify->add_option("--tol", verify_tol, "pass tolerance (default 1e-12)");
    cmd_verify->add_option("-o,--output", verify_out, "output file (default stdout)");

    // ---- atlas ----
    auto* cmd_atlas = app.add_subcommand("atlas", "predicted-length table over (b, a, d)");
    int atlas_bmax = 6, atlas_dmax = 21;
    std::string atlas_format = "csv", atlas_out;
    cmd_atlas->add_option("--bmax", atlas_bmax, "largest b (group BD_2b)");
    cmd_atlas->add_option("--dmax", atlas_dmax, "largest odd distance");
    cmd_atlas->add_option("--format", atlas_format, "csv | md | json")
        ->check(CLI::IsMember({"csv", "md", "json"}));
    cmd_atlas->add_option("-o,--output", atlas_out, "output file (default stdout)");

    // ---- gates ----
    auto* cmd_gates = app.add_subcommand("gates", "certify transversal group action on a code file");
    std::string gates_input, gates_out;
    bool gates_all = false;
    double gates_tol = 1e-12;
    cmd_gates->add_option("--input", gates_input, "code JSON file")->required();
    cmd_gates->add_flag("--all-generators", gates_all, "also certify every group element and closure");
    cmd_gates->add_option("--tol", gates_tol, "leakage/match tolerance (default 1e-12)");
    cmd_gates->add_option("-o,--output", gates_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_count->parsed()) {
        const Irrep rep(count_b, count_a);
        const auto [on, off] = count_conditions(rep, count_d);
        const auto closed = count_conditions_closed(rep, count_d);
        Json j;
        j["nu_on_diag"] = on;
        j["nu_off_diag"] = off;
        j["nu"] = on + off;
        j["nu_closed_form"] = closed;
        j["match"] = (on + off == closed);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }

    if (cmd_family->parsed()) {
        MultiqubitCode code;
        if (family_kind == "1") {
            code = code1(family_b);
        } else if (family_kind == "2") {
            code = code2(family_r);
        } else if (family_kind == "d3") {
            const int a = family_a > 0 ? family_a : family_b - 1;
            const Irrep rep(family_b, a);
            const HalfInt j = family_j.empty() ? HalfInt(2 * family_b) - rep.starting_spin()
                                               : HalfInt::parse(family_j);
            code = code_d3(rep, j);
        } else if (family_kind == "3") {
            const Irrep rep = code3_irrep(family_d);
            SearchConfig cfg{family_restarts, 400, family_tol, family_seed};
            SearchResult res = search_code(rep, family_d, cfg);
            if (!res.found()) {
                Json j = search_report(res);
                write_output(family_out, j.dump(2));
                return kExitNotFound;
            }
            if (res.multiqubit->n != code3_length(family_d))
                throw InconsistencyError("family 3: searched length disagrees with the length law");
            code = *res.multiqubit;
        } else {
            std::cerr << "unknown family '" << family_kind << "' (expected 1, 2, 3, d3)\n";
            return kExitUsage;
        }
        write_output(family_out, verified_code_json(code, family_tol).dump(2));
        return kExitOk;
    }

    if (cmd_search->parsed()) {
        if (search_d >= 15 && !allow_conjectured) {
            std::cerr << "search: d >= 15 cells are conjectural; pass --allow-conjectured to try anyway\n";
            return kExitUsage;
        }
        const Irrep rep(search_b, search_a);
        SearchConfig cfg{search_restarts, 400, search_tol, search_seed};
        SearchResult res = search_code(rep, search_d, cfg);
        for (int extra = 1; !res.found() && extra <= search_escalate; ++extra) {
            const int mu = static_cast<int>(res.nu) + 1 + extra;
            res = search_code_at(rep, search_d, first_spin_with_freedom(rep, mu), cfg);
        }
        if (!res.found()) {
            Json j = search_report(res);
            write_output(search_out, j.dump(2));
            return kExitNotFound;
        }
        write_output(search_out, verified_code_json(*res.multiqubit, search_tol).dump(2));
        return kExitOk;
    }

    if (cmd_verify->parsed()) {
        std::ifstream in(verify_input);
        if (!in) {
            std::cerr << "verify: cannot open " << verify_input << '\n';
            return kExitUsage;
        }
        Json doc = Json::parse(in);
        const MultiqubitCode code = code_from_json(doc);
        const int d = verify_d > 0 ? verify_d : code.d;
        if (d < 1) {
            std::cerr << "verify: no distance given and none declared in the file\n";
            return kExitUsage;
        }
        KLReport report;
        if (verify_mode == "spin")
            report = kl_check_full(unbootstrap(code), d, verify_tol);
        else if (verify_mode == "dense")
            report = multiqubit_kl_check(code, d, KLMode::Dense, verify_tol);
        else
            report = multiqubit_kl_check(code, d, KLMode::Symmetric, verify_tol);
        write_output(verify_out, kl_report_to_json(report).dump(2));
        return report.pass ? kExitOk : kExitVerifyFail;
    }

    if (cmd_atlas->parsed()) {
        const auto cells = atlas(atlas_bmax, atlas_dmax);
        std::string content;
        if (atlas_format == "csv")
            content = atlas_csv(cells);
        else if (atlas_format == "md")
            content = atlas_markdown(cells);
        else
            content = atlas_to_json(cells).dump(2);
        write_output(atlas_out, content);
        return kExitOk;
    }

    if (cmd_gates->parsed()) {
        std::ifstream in(gates_input);
        if (!in) {
            std::cerr << "gates: cannot open " << gates_input << '\n';
            return kExitUsage;
        }
        const MultiqubitCode code = code_from_json(Json::parse(in));
        if (!code.rep) {
            std::cerr << "gates: code file has no rep provenance\n";
            return kExitUsage;
        }
        Json j;
        Json gens = Json::array();
        const int b = code.rep->b;
        const std::vector<std::pair<std::string, GroupElement>> named = {
            {"X", GroupElement::x_generator(b)},
            {"Z", GroupElement::z_element(b)},
            {"Ph(pi/" + std::to_string(b) + ")", GroupElement::phase_generator(b)},
        };
        for (const auto& [name, g] : named) {
            const TransversalCert cert = transversal_action(code, g, gates_tol);
            Json entry;
            entry["generator"] = name;
            entry["leakage"] = cert.leakage;
            entry["irrep_mismatch"] = cert.irrep_mismatch;
            entry["matches_irrep"] = cert.matches_irrep;
            Json mat = Json::array();
            for (int r = 0; r < 2; ++r) {
                Json row = Json::array();
                for (int col = 0; col < 2; ++col)
                    row.push_back(Json::array(
                        {cert.logical(r, col).real(), cert.logical(r, col).imag()}));
                mat.push_back(row);
            }
            entry["logical"] = mat;
            gens.push_back(entry);
        }
        j["generators"] = gens;
        bool ok = true;
        for (const auto& g : gens)
            ok = ok && g.at("matches_irrep").get<bool>();
        if (gates_all) {
            const GroupCertificate cert = certify_group(code, gates_tol);
            j["group"] = Json{{"elements", 8 * b},
                              {"max_leakage", cert.max_leakage},
                              {"max_irrep_mismatch", cert.max_irrep_mismatch},
                              {"max_closure_deviation", cert.max_closure_deviation},
                              {"ok", cert.ok}};
            ok = ok && cert.ok;
        }
        write_output(gates_out, j.dump(2));
        return ok ? kExitOk : kExitVerifyFail;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const spincode::ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kExitResource;
    } catch (const spincode::NotTransversalError& e) {
        std::cerr << "not transversal: " << e.what() << '\n';
        return kExitVerifyFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "out of range: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
