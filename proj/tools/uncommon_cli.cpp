// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage/format error, 3 budget exceeded.
#include "uncommon/coloropt.hpp"
#include "uncommon/counting.hpp"
#include "uncommon/eigsearch.hpp"
#include "uncommon/kernel.hpp"
#include "uncommon/pair_form.hpp"
#include "uncommon/psd.hpp"
#include "uncommon/quadrature.hpp"
#include "uncommon/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace uncommon;
using nlohmann::json;

namespace {

LinearForm parse_form(const std::vector<long long>& coeffs) { return LinearForm(coeffs); }

WeightFn load_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return weightfn_from_json(j);
}

StepFunction load_step(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return stepfunction_from_json(j);
}

Coloring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return coloring_from_json(j);
}

void print_coloring(const Coloring& c) { std::cout << coloring_to_json(c).dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact machinery for (un)common linear equations over {1,...,n}"};
    app.require_subcommand(1);

    // ---- count ----
    auto* cmd_count = app.add_subcommand("count", "count or weight solutions of a linear form");
    std::vector<long long> coeffs{1, 1, -1};
    long long n = 10;
    std::string weights_path;
    bool use_convolution = false;
    cmd_count->add_option("--coeffs", coeffs, "form coefficients")->expected(-2);
    cmd_count->add_option("-n", n, "range bound")->required();
    cmd_count->add_option("--weights", weights_path, "JSON weight function; omit for the count");
    cmd_count->add_flag("--convolution", use_convolution, "use the convolution path");

    // ---- deficit ----
    auto* cmd_def = app.add_subcommand("deficit", "commonness deficit of a probability weighting");
    std::vector<long long> d_coeffs{1, 1, -1};
    std::string d_weights;
    cmd_def->add_option("--coeffs", d_coeffs, "form coefficients")->expected(-2);
    cmd_def->add_option("--weights", d_weights, "JSON probability weight function")->required();

    // ---- matrix ----
    auto* cmd_matrix = app.add_subcommand("matrix", "export the exact quadratic-form matrix");
    long long m_a = 1, m_b = 2, m_n = 10;
    cmd_matrix->add_option("-a", m_a)->required();
    cmd_matrix->add_option("-b", m_b)->required();
    cmd_matrix->add_option("-n", m_n)->required();

    // ---- psd ----
    auto* cmd_psd = app.add_subcommand("psd", "exact PSD check of the quadratic-form matrix");
    long long p_a = 1, p_b = 2, p_n = 10;
    cmd_psd->add_option("-a", p_a)->required();
    cmd_psd->add_option("-b", p_b)->required();
    cmd_psd->add_option("-n", p_n)->required();

    // ---- kernel-eval ----
    auto* cmd_kernel = app.add_subcommand("kernel-eval", "CSV grid of the limiting kernel");
    long long k_a = 1, k_b = 2, k_N = 32;
    cmd_kernel->add_option("-a", k_a)->required();
    cmd_kernel->add_option("-b", k_b)->required();
    cmd_kernel->add_option("-N", k_N, "grid resolution");

    // ---- quad ----
    auto* cmd_quad = app.add_subcommand("quad", "exact integral of H phi phi");
    long long q_a = 1, q_b = 2;
    std::string q_phi;
    bool q_builtin = false;
    cmd_quad->add_option("-a", q_a)->required();
    cmd_quad->add_option("-b", q_b)->required();
    cmd_quad->add_option("--phi", q_phi, "step function JSON");
    cmd_quad->add_flag("--certificate", q_builtin, "use the built-in 13-piece certificate");

    // ---- eig-search ----
    auto* cmd_eig = app.add_subcommand("eig-search", "discretize, solve, round, certify");
    long long e_a = 1, e_b = 2, e_N = 200, e_denom = 200, e_levels = 19;
    cmd_eig->add_option("-a", e_a)->required();
    cmd_eig->add_option("-b", e_b)->required();
    cmd_eig->add_option("-N", e_N, "discretization resolution");
    cmd_eig->add_option("--denom", e_denom, "breakpoint denominator for rounding");
    cmd_eig->add_option("--levels", e_levels, "integer level budget for rounding");

    // ---- scan ----
    auto* cmd_scan = app.add_subcommand("scan", "scan coprime pairs, CSV output");
    long long s_amax = 3, s_bmax = 5, s_N = 120;
    double s_tol = 1e-6;
    cmd_scan->add_option("--a-max", s_amax);
    cmd_scan->add_option("--b-max", s_bmax);
    cmd_scan->add_option("-N", s_N, "discretization resolution");
    cmd_scan->add_option("--tol", s_tol, "negativity threshold for lambda_min");

    // ---- witness ----
    auto* cmd_wit = app.add_subcommand("witness", "finite-n uncommonness witnesses");
    long long w_a = 1, w_b = 2, w_nmax = 2000;
    cmd_wit->add_option("-a", w_a)->required();
    cmd_wit->add_option("-b", w_b)->required();
    cmd_wit->add_option("--n-max", w_nmax, "scan bound");

    // ---- color-brute ----
    auto* cmd_brute = app.add_subcommand("color-brute", "exact minimum monochromatic count");
    std::vector<long long> cb_coeffs{1, 1, -1};
    long long cb_n = 10, cb_budget = 2000000000;
    int cb_r = 2;
    cmd_brute->add_option("--coeffs", cb_coeffs)->expected(-2);
    cmd_brute->add_option("-n", cb_n)->required();
    cmd_brute->add_option("-r", cb_r, "number of colors");
    cmd_brute->add_option("--budget", cb_budget);

    // ---- color-local ----
    auto* cmd_local = app.add_subcommand("color-local", "local-search minimum");
    std::vector<long long> cl_coeffs{1, 1, -1};
    long long cl_n = 100;
    int cl_r = 2, cl_restarts = 8;
    unsigned long long cl_seed = 1;
    cmd_local->add_option("--coeffs", cl_coeffs)->expected(-2);
    cmd_local->add_option("-n", cl_n)->required();
    cmd_local->add_option("-r", cl_r, "number of colors");
    cmd_local->add_option("--restarts", cl_restarts);
    cmd_local->add_option("--seed", cl_seed);

    // ---- growth ----
    auto* cmd_growth = app.add_subcommand("growth", "minimum-count growth table");
    std::vector<long long> g_coeffs{1, 1, -1};
    std::vector<long long> g_ns{50, 100, 200};
    int g_r = 2, g_restarts = 8;
    unsigned long long g_seed = 1;
    cmd_growth->add_option("--coeffs", g_coeffs)->expected(-2);
    cmd_growth->add_option("--n-list", g_ns)->expected(-2);
    cmd_growth->add_option("-r", g_r);
    cmd_growth->add_option("--restarts", g_restarts);
    cmd_growth->add_option("--seed", g_seed);

    // ---- rado ----
    auto* cmd_rado = app.add_subcommand("rado", "least N with no solution-free r-coloring");
    std::vector<long long> r_coeffs{1, 1, -1};
    long long r_nmax = 30;
    int r_r = 2;
    cmd_rado->add_option("--coeffs", r_coeffs)->expected(-2);
    cmd_rado->add_option("--n-max", r_nmax);
    cmd_rado->add_option("-r", r_r);

    // ---- mono ----
    auto* cmd_mono = app.add_subcommand("mono", "monochromatic count of a coloring");
    std::vector<long long> mo_coeffs{1, 1, -1};
    std::string mo_coloring;
    cmd_mono->add_option("--coeffs", mo_coeffs)->expected(-2);
    cmd_mono->add_option("--coloring", mo_coloring, "coloring JSON")->required();

    // ---- verify ----
    auto* cmd_verify =
        app.add_subcommand("verify", "run the headline exact checks (quadrature, decomposition, "
                                     "discovery loop, growth)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_count->parsed()) {
            LinearForm L = parse_form(coeffs);
            if (weights_path.empty()) {
                std::cout << count_solutions(L, n) << "\n";
            } else {
                WeightFn f = load_weights(weights_path);
                Rat v = use_convolution
                            ? count_via_convolution(ConvolutionPlan::default_for(L, f.n), f)
                            : weighted_count(L, f);
                std::cout << v.get_str() << "\n";
            }
        } else if (cmd_def->parsed()) {
            LinearForm L = parse_form(d_coeffs);
            WeightFn f = load_weights(d_weights);
            std::cout << deficit(L, f).get_str() << "\n";
        } else if (cmd_matrix->parsed()) {
            SymmetricPair p(m_a, m_b);
            QuadFormMatrix m = build_matrix(p, m_n);
            std::cout << json{{"a", m_a}, {"b", m_b}, {"n", m_n}}.dump() << "\n";
            for (long long x = 1; x <= m_n; ++x)
                for (long long y = 1; y <= m_n; ++y)
                    std::cout << x << " " << y << " " << m.at(x, y).get_str() << "\n";
        } else if (cmd_psd->parsed()) {
            SymmetricPair p(p_a, p_b);
            PsdVerdict v = is_psd(build_matrix(p, p_n));
            if (v.psd) {
                std::cout << "psd\n";
            } else {
                std::cout << "indefinite " << v.certificate_value.get_str() << "\n";
                for (const Rat& x : v.certificate) std::cout << x.get_str() << " ";
                std::cout << "\n";
                return 1;
            }
        } else if (cmd_kernel->parsed()) {
            SymmetricPair p(k_a, k_b);
            std::cout << "u,v,H\n";
            for (long long i = 0; i <= k_N; ++i)
                for (long long j = 0; j <= k_N; ++j) {
                    Rat u = rat(i, k_N), v = rat(j, k_N);
                    std::cout << u.get_str() << "," << v.get_str() << ","
                              << kernel_h(p, u, v).get_str() << "\n";
                }
        } else if (cmd_quad->parsed()) {
            SymmetricPair p(q_a, q_b);
            if (!q_builtin && q_phi.empty()) {
                std::cerr << "quad: provide --phi or --certificate\n";
                return 2;
            }
            StepFunction phi = q_builtin ? certificate_phi() : load_step(q_phi);
            std::cout << integrate_quadratic(p, phi).get_str() << "\n";
        } else if (cmd_eig->parsed()) {
            SymmetricPair p(e_a, e_b);
            DiscretizedKernel dk = discretize(p, e_N);
            EigenResult eig = least_eigenpair(dk, 1e-8);
            std::cout << "lambda_min " << eig.lambda_min << "\n";
            std::cout << "residual " << eig.residual << "\n";
            if (eig.lambda_min >= 0) {
                std::cout << "no negative direction at this resolution\n";
                return 1;
            }
            StepFunction phi = round_to_step(eig.vector, e_N, e_levels, e_denom);
            CertifyResult cert = certify(p, phi);
            std::cout << "certified " << cert.value.get_str() << "\n";
            std::cout << stepfunction_to_json(phi).dump() << "\n";
            if (!cert.uncommon) return 1;
        } else if (cmd_scan->parsed()) {
            std::vector<ScanRow> rows = scan_pairs(s_amax, s_bmax, s_N, s_tol);
            std::cout << "a,b,N,lambda_min,certified_num,certified_den\n";
            for (const ScanRow& row : rows) {
                std::cout << row.a << "," << row.b << "," << row.N << "," << row.lambda_min << ",";
                if (row.certified)
                    std::cout << row.certified->get_num().get_str() << ","
                              << row.certified->get_den().get_str();
                else
                    std::cout << ",";
                std::cout << "\n";
            }
        } else if (cmd_wit->parsed()) {
            SymmetricPair p(w_a, w_b);
            auto rep = scan_witness(p, certificate_phi(), w_nmax);
            if (!rep) {
                std::cout << "no witness up to n = " << w_nmax << "\n";
                return 1;
            }
            std::cout << "n " << rep->n << "\n";
            std::cout << "xi " << rep->xi_value.get_str() << "\n";
            std::cout << "zeta " << rep->zeta_value.get_str() << "\n";
            std::cout << "epsilon " << rep->epsilon.get_str() << "\n";
            std::cout << "deficit " << rep->deficit.get_str() << "\n";
        } else if (cmd_brute->parsed()) {
            BruteResult b = brute_min(LinearSystem(parse_form(cb_coeffs)), cb_n, cb_r, cb_budget);
            std::cout << b.min_count << "\n";
            print_coloring(b.argmin);
        } else if (cmd_local->parsed()) {
            LocalResult l =
                local_search(LinearSystem(parse_form(cl_coeffs)), cl_n, cl_r, cl_restarts, cl_seed);
            std::cout << l.best_count << "\n";
            print_coloring(l.coloring);
        } else if (cmd_growth->parsed()) {
            GrowthTable t =
                growth_table(LinearSystem(parse_form(g_coeffs)), g_ns, g_r, g_restarts, g_seed);
            std::cout << "n,count,method\n";
            for (const GrowthRow& row : t.rows)
                std::cout << row.n << "," << row.count << "," << row.method << "\n";
            if (t.slope) std::cout << "slope," << *t.slope << ",\n";
        } else if (cmd_rado->parsed()) {
            auto cert = rado_threshold(LinearSystem(parse_form(r_coeffs)), r_r, r_nmax);
            if (!cert) {
                std::cout << "no threshold up to " << r_nmax << "\n";
                return 1;
            }
            std::cout << "N0 " << cert->N0 << "\n";
            std::cout << "epsilon " << cert->epsilon.get_str() << "\n";
        } else if (cmd_mono->parsed()) {
            Coloring c = load_coloring(mo_coloring);
            std::cout << mono_count(parse_form(mo_coeffs), c) << "\n";
        } else if (cmd_verify->parsed()) {
            bool ok = true;
            SymmetricPair p12(1, 2);
            Rat q = integrate_quadratic(p12, certificate_phi());
            bool q_ok = q == rat(-120959, 1600000);
            std::cout << "quadrature: " << (q_ok ? "PASS" : "FAIL") << " (" << q.get_str() << ")\n";
            ok = ok && q_ok;

            bool d_ok = true;
            std::mt19937_64 rng(1);
            for (long long dn : {10, 25}) {
                std::vector<Rat> f;
                for (long long i = 0; i < dn; ++i)
                    f.push_back(rat(static_cast<long long>(rng() % 9) - 4,
                                    1 + static_cast<long long>(rng() % 5)));
                std::vector<Rat> plus(f.size()), minus(f.size());
                for (size_t i = 0; i < f.size(); ++i) {
                    plus[i] = rat(1, 2) + f[i];
                    minus[i] = rat(1, 2) - f[i];
                }
                Rat tl1 = Rat(total_count(p12, dn));
                Rat lhs = (t_weighted(p12, dn, plus) + t_weighted(p12, dn, minus)) / tl1;
                d_ok = d_ok &&
                       lhs == rat(1, 8) + xi_direct(p12, dn, f) + zeta_direct(p12, dn, f);
            }
            std::cout << "decomposition: " << (d_ok ? "PASS" : "FAIL") << "\n";
            ok = ok && d_ok;

            DiscretizedKernel dk = discretize(p12, 120);
            EigenResult eig = least_eigenpair(dk, 1e-8);
            bool e_ok = eig.lambda_min < 0;
            if (e_ok) {
                StepFunction phi = round_to_step(eig.vector, 120, 19, 120);
                e_ok = certify(p12, phi).uncommon;
            }
            std::cout << "discovery loop: " << (e_ok ? "PASS" : "FAIL") << "\n";
            ok = ok && e_ok;

            GrowthTable t = growth_table(LinearSystem(schur_form()), {100, 200, 400}, 2, 4, 4242);
            bool g_ok = true;
            for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
                double ratio = std::log2(static_cast<double>(t.rows[i + 1].count) /
                                         static_cast<double>(t.rows[i].count));
                g_ok = g_ok && ratio >= 1.8 && ratio <= 2.2;
            }
            std::cout << "growth: " << (g_ok ? "PASS" : "FAIL") << "\n";
            ok = ok && g_ok;
            return ok ? 0 : 1;
        }
    } catch (const BudgetExceeded& ex) {
        std::cerr << "budget exceeded: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
