#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "sc/cohomology.hpp"
#include "sc/expr.hpp"
#include "sc/geometry.hpp"
#include "sc/json_io.hpp"
#include "sc/numeric.hpp"

using json = nlohmann::json;
using namespace sc;

namespace {

struct Config {
    int nz = kDefaultNz;
    int nq = kDefaultNq;
    int depth = kDefaultDepth;
    double tau_re = 0.0, tau_im = 1.0;
    double tol = 1e-9;
    std::string json_path;
};

json config_json(const Config& cfg) {
    return {{"order_z", cfg.nz},
            {"order_q", cfg.nq},
            {"depth", cfg.depth},
            {"tol", cfg.tol}};
}

void write_report(const Config& cfg, const json& report) {
    if (cfg.json_path.empty()) return;
    std::ofstream out(cfg.json_path);
    out << report.dump(2) << "\n";
}

// Parse "RE,IM" into a complex number.
std::pair<double, double> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected RE,IM, got '" + s + "'");
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::string coeff_str(const Rat& r) { return r.get_str(); }

// Plain-text expansion: one line per (z, monomial, lambda, q) term, format
// coef * lambda^k * q^n * z^m * monomial.
void print_terms(const SuperField& f, int max_terms) {
    static const char* kMono[] = {"1", "theta", "phi", "thetaphi"};
    int printed = 0;
    for (const auto& [zexp, g] : f.terms()) {
        if (printed >= max_terms) break;
        const QSeries* comps[] = {&g.c1, &g.cth, &g.cph, &g.cthph};
        for (int ci = 0; ci < 4 && printed < max_terms; ++ci) {
            const QSeries& s = *comps[ci];
            for (int n = 0; n <= s.known_degree() && printed < max_terms; ++n) {
                Scalar cn = s.coeff(n);
                for (const auto& [lk, r] : cn.terms()) {
                    if (printed >= max_terms) break;
                    std::cout << coeff_str(r) << " * lambda^" << lk << " * q^"
                              << n << " * z^" << zexp << " * " << kMono[ci]
                              << "\n";
                    ++printed;
                }
            }
        }
    }
    if (printed == 0) std::cout << "0\n";
}

struct CheckResult {
    std::string name;
    Verdict verdict;
};

int exit_code_for(const std::vector<CheckResult>& results) {
    bool any_fail = false, any_insufficient = false;
    for (const auto& r : results) {
        if (r.verdict.status == Verdict::Status::fails) any_fail = true;
        if (r.verdict.status == Verdict::Status::insufficient)
            any_insufficient = true;
    }
    if (any_fail) return 1;
    if (any_insufficient) return 3;
    return 0;
}

int cmd_verify(const Config& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Chart ch({cfg.nz, cfg.nq});
    int zm = cfg.nz - 8;
    std::vector<CheckResult> results;
    auto check = [&](const std::string& name, const Verdict& v) {
        results.push_back({name, v});
        std::cout << (v.ok() ? "PASS" : "FAIL") << " " << name << ": "
                  << v.str() << "\n";
    };

    for (const auto& n : Chart::relation_names())
        check("curve/" + n, ch.relation(n).is_zero_to_order(zm));
    for (int k : {2, 4, 6})
        check("ramanujan/E" + std::to_string(k),
              ramanujan_defect(k, cfg.nq).is_zero_to_accuracy());
    for (const auto& n : weierstrass_identity_names())
        check("weierstrass/" + n,
              weierstrass_identity(n, ch).is_zero_to_order(zm));
    {
        SuperField g = ch.R() * ch.Psi1() + SuperField::theta() * ch.ws().wp(0);
        check("commutator/tau",
              commutator_tau_defect(g, ch).is_zero_to_order(zm - 2));
        check("commutator/phi",
              commutator_phi_defect(g, ch).is_zero_to_order(zm - 2));
    }
    for (const auto& n : closure_formula_names())
        check("closure/" + n, closure_formula(n, ch).is_zero_to_order(zm));
    {
        GMConnection gm = gm_connection(ch, cfg.depth);
        // Expected matrix: nabla_tau [s Psi1] = [s Psi2], everything else 0.
        CohClass expect_t1;
        expect_t1.c2.a0.body = QSeries(Scalar(1));
        check("gm/tau_row1", (gm.tau_row[0] - expect_t1).is_zero(zm));
        check("gm/tau_row2", gm.tau_row[1].is_zero(zm));
        check("gm/phi_row1", gm.phi_row[0].is_zero(zm));
        check("gm/phi_row2", gm.phi_row[1].is_zero(zm));
        check("gm/horizontal", horizontal_check(ch, gm, zm));
        check("gm/period_relations", period_relations(ch, zm));
    }

    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    int code = exit_code_for(results);
    std::cout << results.size() << " checks in " << secs << "s\n";

    json jr = {{"command", "verify"},
               {"configuration", config_json(cfg)},
               {"seconds", secs},
               {"checks", json::array()}};
    for (const auto& r : results) {
        json c = {{"identifier", r.name}, {"verdict", verdict_to_json(r.verdict)}};
        jr["checks"].push_back(c);
    }
    write_report(cfg, jr);
    return code;
}

int cmd_expand(const Config& cfg, const std::string& expr_src, int nterms) {
    Chart ch({cfg.nz, cfg.nq});
    SuperField f = eval_expr(*parse_expr(expr_src), ch);
    print_terms(f, nterms);
    if (!cfg.json_path.empty())
        write_report(cfg, {{"command", "expand"},
                           {"configuration", config_json(cfg)},
                           {"expression", expr_src},
                           {"series", superfield_to_json(f)}});
    return 0;
}

int cmd_reduce(const Config& cfg, const std::string& expr_src) {
    Chart ch({cfg.nz, cfg.nq});
    SuperField f = eval_expr(*parse_expr(expr_src), ch);
    CohClass c = reduce_coker(f, ch, cfg.depth);
    std::cout << "[s * (" << expr_src << ")] = " << c.str() << "\n";
    if (!cfg.json_path.empty())
        write_report(cfg, {{"command", "reduce"},
                           {"configuration", config_json(cfg)},
                           {"expression", expr_src},
                           {"class", c.str()}});
    return 0;
}

int cmd_gm(const Config& cfg) {
    Chart ch({cfg.nz, cfg.nq});
    GMConnection gm = gm_connection(ch, cfg.depth);
    const char* rows[] = {"nabla [s Psi1]", "nabla [s Psi2]"};
    json jr = {{"command", "gm"}, {"configuration", config_json(cfg)}};
    for (int i = 0; i < 2; ++i) {
        std::cout << rows[i] << " = (" << gm.tau_row[i].str()
                  << ") dtau + (" << gm.phi_row[i].str() << ") dphi\n";
        jr["rows"].push_back({{"dtau", gm.tau_row[i].str()},
                              {"dphi", gm.phi_row[i].str()}});
    }
    write_report(cfg, jr);
    return 0;
}

int cmd_eval(const Config& cfg, const std::string& name, double zre,
             double zim) {
    EllipticNumeric en(Cplx(cfg.tau_re, cfg.tau_im));
    Cplx z{zre, zim};
    json jr = {{"command", "eval"},
               {"configuration", config_json(cfg)},
               {"name", name}};
    std::cout.precision(15);
    if (name == "Psi1" || name == "Psi2") {
        GrassNum g = name == "Psi1" ? psi1_numeric(en, z) : psi2_numeric(en, z);
        std::cout << name << "(" << z << ") = (" << g.a << ") + theta*(" << g.b
                  << ") + phi*(" << g.c << ") + theta*phi*(" << g.d << ")\n";
        jr["value"] = {{"1", {g.a.real(), g.a.imag()}},
                       {"theta", {g.b.real(), g.b.imag()}},
                       {"phi", {g.c.real(), g.c.imag()}},
                       {"thetaphi", {g.d.real(), g.d.imag()}}};
    } else {
        Cplx v = num_eval(en, name, z);
        std::cout << name << "(" << z << ") = " << v << "\n";
        jr["value"] = {v.real(), v.imag()};
    }
    write_report(cfg, jr);
    return 0;
}

int cmd_periods(const Config& cfg) {
    EllipticNumeric en(Cplx(cfg.tau_re, cfg.tau_im));
    PeriodQuad pq = period_quadrature(en, {0.31, -0.377});
    double ld = legendre_defect(en);
    std::cout.precision(15);
    std::cout << "integral over a of dz        = " << pq.a_dz << "\n"
              << "integral over b of dz        = " << pq.b_dz << "\n"
              << "integral over a of zeta1' dz = " << pq.a_zeta << "\n"
              << "integral over b of zeta1' dz = " << pq.b_zeta << "\n"
              << "legendre defect              = " << ld << "\n";
    Cplx tau = en.tau();
    double worst = std::max(
        {std::abs(pq.a_dz - 1.0), std::abs(pq.b_dz - tau),
         std::abs(pq.a_zeta), std::abs(pq.b_zeta - 1.0)});
    write_report(cfg, {{"command", "periods"},
                       {"configuration", config_json(cfg)},
                       {"a_dz", {pq.a_dz.real(), pq.a_dz.imag()}},
                       {"b_dz", {pq.b_dz.real(), pq.b_dz.imag()}},
                       {"a_zeta", {pq.a_zeta.real(), pq.a_zeta.imag()}},
                       {"b_zeta", {pq.b_zeta.real(), pq.b_zeta.imag()}},
                       {"legendre_defect", ld}});
    if (worst > 1e-8 || ld > cfg.tol) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic and numeric kernel for the standard family "
                 "of genus-1 supercurves with odd spin structure"};
    app.require_subcommand(1);


    Config cfg;
    std::string tau_str = "0,1";
    app.add_option("--order-q", cfg.nq, "q-series truncation order");
    app.add_option("--order-z", cfg.nz, "z-series truncation order");
    app.add_option("--depth", cfg.depth, "depth cap for D^n R reductions");
    app.add_option("--tau", tau_str, "modulus as RE,IM");
    app.add_option("--tol", cfg.tol, "numeric tolerance");
    app.add_option("--json", cfg.json_path, "write a JSON report to PATH");

    auto* verify = app.add_subcommand("verify", "run the full identity suite");

    std::string expand_expr;
    int nterms = 10;
    auto* expand = app.add_subcommand("expand", "expand an expression");
    expand->add_option("expr", expand_expr, "expression to expand")->required();
    expand->add_option("--terms", nterms, "number of terms to print");

    std::string reduce_expr;
    auto* reduce = app.add_subcommand(
        "reduce", "reduce the class of s*EXPR in the cokernel");
    reduce->add_option("expr", reduce_expr, "expression to reduce")->required();

    auto* gm = app.add_subcommand("gm", "print the Gauss-Manin connection");

    std::string eval_name;
    std::string z_str = "0.1,0";
    auto* eval = app.add_subcommand("eval", "numeric evaluation");
    eval->add_option("name", eval_name, "function name")->required();
    eval->add_option("--z", z_str, "evaluation point as RE,IM");

    auto* periods =
        app.add_subcommand("periods", "numeric period quadrature table");

    // allow the global flags to appear after the subcommand name
    for (CLI::App* sub : {verify, expand, reduce, gm, eval, periods})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto [tre, tim] = parse_pair(tau_str);
        cfg.tau_re = tre;
        cfg.tau_im = tim;
        if (verify->parsed()) return cmd_verify(cfg);
        if (expand->parsed()) return cmd_expand(cfg, expand_expr, nterms);
        if (reduce->parsed()) return cmd_reduce(cfg, reduce_expr);
        if (gm->parsed()) return cmd_gm(cfg);
        if (eval->parsed()) {
            auto [zre, zim] = parse_pair(z_str);
            return cmd_eval(cfg, eval_name, zre, zim);
        }
        if (periods->parsed()) return cmd_periods(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownIdentifier& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InsufficientAccuracy& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
