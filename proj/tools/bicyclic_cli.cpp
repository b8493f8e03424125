// Command-line front end: enumeration, constructors, invariants, exact
// polynomials, certified spectral radii and the verification sweeps.

#include "bicyclic/catalog.hpp"
#include "bicyclic/config.hpp"
#include "bicyclic/enumeration.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/graph6.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/spectral.hpp"
#include "bicyclic/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bicyclic;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// `--in` takes a graph6 file, "-" for stdin, or a literal graph6 string.
std::vector<Graph> read_input(const std::string & in)
{
    if (in == "-")
        return read_graph6_stream(std::cin);
    if (std::filesystem::exists(in)) {
        std::ifstream f(in);
        return read_graph6_stream(f);
    }
    return {from_graph6(in)};
}

std::string csv_int(int v)
{
    return v < 0 ? "" : std::to_string(v);
}

int digits_for(double tol)
{
    return std::max(12, static_cast<int>(std::ceil(-std::log10(tol))) + 2);
}

FamilySpec spec_from(const std::string & family, int n, int alpha, int k, const std::vector<int> & params)
{
    FamilyKind kind = parse_kind(family);
    switch (kind) {
    case FamilyKind::Infinity:
    case FamilyKind::Theta:
        if (params.size() != 3)
            throw UsageError("--params needs three comma-separated values for " + family);
        return kind == FamilyKind::Infinity ? FamilySpec::infinity(params[0], params[1], params[2])
                                            : FamilySpec::theta(params[0], params[1], params[2]);
    case FamilyKind::F: return FamilySpec::F(n);
    case FamilyKind::Fprime: return FamilySpec::Fprime(n);
    case FamilyKind::Bsharp: return FamilySpec::Bsharp(n, k);
    default:
        if (alpha < 0)
            throw UsageError("--alpha is required for " + family);
        return FamilySpec::make(kind, n, alpha);
    }
}

void print_audits(const SweepReport & rep, bool all)
{
    for (const auto & a : rep.audits) {
        if (!all && a.pass)
            continue;
        std::cout << (a.pass ? "PASS" : (a.asserted ? "FAIL" : "NOTE")) << "  " << a.name << "  n=" << a.n
                  << " alpha=" << a.alpha;
        if (!a.detail.empty())
            std::cout << "  " << a.detail;
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Bicyclic graphs: enumeration, spectra and extremal checks"};
    app.require_subcommand(1);

    // enumerate
    auto * enumerate = app.add_subcommand("enumerate", "Stream connected bicyclic graphs as graph6");
    int en_n = 0, en_alpha = -1;
    std::string en_out, en_mode = "structured";
    enumerate->add_option("--n", en_n, "vertex count")->required();
    enumerate->add_option("--alpha", en_alpha, "keep only this independence number");
    enumerate->add_option("--out", en_out, "output file (default stdout)");
    enumerate->add_option("--mode", en_mode, "structured or bruteforce")
        ->check(CLI::IsMember({"structured", "bruteforce"}));

    // construct
    auto * construct = app.add_subcommand("construct", "Build a named family member");
    std::string co_family;
    int co_n = 0, co_alpha = -1, co_k = 1;
    std::vector<int> co_params;
    std::string co_format = "g6";
    construct->add_option("--family", co_family, "B, P, F, Fprime, M, M1..M6, M1prime, M3prime, Bsharp")->required();
    construct->add_option("--n", co_n, "vertex count");
    construct->add_option("--alpha", co_alpha, "independence number parameter");
    construct->add_option("--k", co_k, "pendant paths for Bsharp");
    construct->add_option("--params", co_params, "shape parameters for B and P")->delimiter(',');
    construct->add_option("--format", co_format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

    // invariants
    auto * invariants = app.add_subcommand("invariants", "Independence, matching and cover numbers");
    std::string inv_in;
    bool inv_csv = false;
    invariants->add_option("--in", inv_in, "graph6 file, '-' or a graph6 string")->required();
    invariants->add_flag("--csv", inv_csv, "CSV with header");

    // poly
    auto * poly = app.add_subcommand("poly", "Exact characteristic polynomial");
    std::string po_in, po_format = "coeffs";
    poly->add_option("--in", po_in, "graph6 file, '-' or a graph6 string")->required();
    poly->add_option("--format", po_format, "coeffs (ascending) or text")->check(CLI::IsMember({"coeffs", "text"}));

    // rho
    auto * rho = app.add_subcommand("rho", "Certified spectral radius");
    std::string rh_in;
    double rh_tol = 1e-9;
    bool rh_csv = false;
    rho->add_option("--in", rh_in, "graph6 file, '-' or a graph6 string")->required();
    rho->add_option("--tol", rh_tol, "bracket width")->check(CLI::PositiveNumber);
    rho->add_flag("--csv", rh_csv, "CSV n,m,rho_lo,rho_hi");

    // verify
    auto * verify = app.add_subcommand("verify", "Check the extremal claims for one n");
    int ve_n = 0, ve_threads = 1;
    bool ve_all = false, ve_audits = false;
    verify->add_option("--n", ve_n, "vertex count")->required()->check(CLI::Range(4, kMaxSweepOrder));
    verify->add_option("--threads", ve_threads, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--class-audits", ve_audits, "also audit the pendant classes");
    verify->add_flag("--all", ve_all, "print passing checks too");

    // sweep
    auto * sweep = app.add_subcommand("sweep", "Run the configured grid and write CSV/Markdown");
    std::string sw_config;
    bool sw_large = false;
    sweep->add_option("--config", sw_config, "key=value config file");
    sweep->add_flag("--large", sw_large, "allow n up to 14");

    // identities
    auto * identities = app.add_subcommand("identities", "Exact polynomial identity catalog");
    int id_min = 8, id_max = 16;
    std::string id_form = "both";
    identities->add_option("--n-min", id_min, "smallest n")->check(CLI::Range(4, kMaxVertices));
    identities->add_option("--n-max", id_max, "largest n")->check(CLI::Range(4, kMaxVertices));
    identities->add_option("--form", id_form, "displayed, corrected or both")
        ->check(CLI::IsMember({"displayed", "corrected", "both"}));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*enumerate) {
            EnumerationConfig cfg;
            cfg.n = en_n;
            cfg.mode = en_mode == "bruteforce" ? EnumerationMode::Bruteforce : EnumerationMode::Structured;
            if (en_alpha >= 0)
                cfg.alpha = en_alpha;
            cfg.progress = &std::cerr;
            std::ofstream file;
            if (!en_out.empty()) {
                file.open(en_out);
                if (!file)
                    throw UsageError("cannot write " + en_out);
            }
            std::ostream & out = en_out.empty() ? std::cout : file;
            std::size_t count = enumerate_bicyclic(cfg, [&](const Graph & g) { out << to_graph6(g) << '\n'; });
            std::cerr << "enumerate n=" << en_n << ": " << count << " graphs total" << std::endl;
        }
        else if (*construct) {
            FamilySpec spec = spec_from(co_family, co_n, co_alpha, co_k, co_params);
            Graph g = build_family(spec);
            if (co_format == "edges") {
                std::cout << spec.name() << " n=" << g.order() << " m=" << g.size() << '\n';
                for (auto [u, v] : g.edges())
                    std::cout << u << ' ' << v << '\n';
            }
            else
                std::cout << to_graph6(g) << '\n';
        }
        else if (*invariants) {
            if (inv_csv)
                std::cout << "n,m,alpha,alphaPrime,beta,betaPrime,pendants,vPrime\n";
            for (const Graph & g : read_input(inv_in)) {
                InvariantSummary s = summarize(g);
                if (inv_csv)
                    std::cout << s.n << ',' << s.m << ',' << s.alpha << ',' << s.alpha_prime << ',' << s.beta << ','
                              << csv_int(s.beta_prime) << ',' << s.pendants << ',' << s.v_prime << '\n';
                else
                    std::cout << to_graph6(g) << ": n=" << s.n << " m=" << s.m << " alpha=" << s.alpha
                              << " alpha'=" << s.alpha_prime << " beta=" << s.beta
                              << " beta'=" << (s.beta_prime < 0 ? "undefined" : std::to_string(s.beta_prime))
                              << " pendants=" << s.pendants << " |V'|=" << s.v_prime << '\n';
            }
        }
        else if (*poly) {
            for (const Graph & g : read_input(po_in)) {
                IntPolynomial p = char_poly(g);
                std::cout << (po_format == "coeffs" ? p.coeff_string() : p.to_string()) << '\n';
            }
        }
        else if (*rho) {
            const int digits = digits_for(rh_tol);
            if (rh_csv)
                std::cout << "n,m,rho_lo,rho_hi\n";
            for (const Graph & g : read_input(rh_in)) {
                SpectralCertificate c = spectral_radius(g, rh_tol);
                if (rh_csv)
                    std::cout << g.order() << ',' << g.size() << ',' << decimal_floor(c.lo, digits) << ','
                              << decimal_ceil(c.hi, digits) << '\n';
                else
                    std::cout << to_graph6(g) << ": rho in [" << decimal_floor(c.lo, digits) << ", "
                              << decimal_ceil(c.hi, digits) << "]" << (c.exact ? " (integer)" : "") << '\n';
            }
        }
        else if (*verify) {
            SweepConfig cfg;
            cfg.n_min = cfg.n_max = ve_n;
            cfg.threads = ve_threads;
            SweepReport rep;
            if (ve_audits) {
                rep = verify_theorem1(ve_n, ve_threads);
                for (const auto & r : rep.records) {
                    auto extra = audit_class_lemmas(ve_n, r.alpha, ve_threads);
                    rep.audits.insert(rep.audits.end(), extra.begin(), extra.end());
                }
            }
            else
                rep = verify_theorem1(ve_n, ve_threads);
            std::cout << sweep_csv(rep);
            print_audits(rep, ve_all);
            if (ve_n < 10)
                std::cout << "n=" << ve_n << " is below the theorem range: report only\n";
            for (const auto * f : rep.failures())
                std::cerr << "assertion failed: " << f->name << " (n=" << f->n << ", alpha=" << f->alpha
                          << ") " << f->detail << '\n';
            std::cout << (rep.passed() ? "verify: PASS" : "verify: FAIL") << '\n';
            return rep.passed() ? kExitPass : kExitAssertion;
        }
        else if (*sweep) {
            SweepConfig cfg = sw_config.empty() ? SweepConfig{} : load_config(sw_config);
            validate(cfg, sw_large);
            SweepReport rep = run_sweep(cfg);
            print_audits(rep, false);
            std::cout << "sweep: " << rep.records.size() << " cells, " << rep.audits.size() << " audits, "
                      << rep.identities.size() << " identity checks -> " << cfg.out_dir << '\n';
            std::cout << (rep.passed() ? "sweep: PASS" : "sweep: FAIL") << '\n';
            return rep.passed() ? kExitPass : kExitAssertion;
        }
        else if (*identities) {
            if (id_min > id_max)
                throw UsageError("--n-min must not exceed --n-max");
            // "both" reports the displayed forms and asserts the corrected ones
            const IdentityForm asserted = id_form == "displayed" ? IdentityForm::Displayed : IdentityForm::Corrected;
            bool all_hold = true;
            for (int n = id_min; n <= id_max; ++n)
                for (Identity id : all_identities())
                    for (int alpha = 0; alpha < n; ++alpha) {
                        if (!identity_applicable(id, n, alpha) || (id == Identity::HG && alpha > 0))
                            continue;
                        for (IdentityForm form : {IdentityForm::Displayed, IdentityForm::Corrected}) {
                            if ((form == IdentityForm::Displayed && id_form == "corrected")
                                || (form == IdentityForm::Corrected && id_form == "displayed"))
                                continue;
                            IdentityResult r = identity_check(id, n, alpha, form);
                            if (form == asserted)
                                all_hold = all_hold && r.holds;
                            std::cout << identity_name(id) << ' '
                                      << (form == IdentityForm::Displayed ? "displayed" : "corrected") << " n=" << n;
                            if (id != Identity::HG)
                                std::cout << " alpha=" << alpha;
                            std::cout << ' ' << (r.holds ? "holds" : "FAILS");
                            if (!r.holds)
                                std::cout << "  lhs-rhs = " << (r.lhs - r.rhs).to_string();
                            std::cout << '\n';
                        }
                    }
            return all_hold ? kExitPass : kExitAssertion;
        }
    }
    catch (const ConfigError & e) {
        std::cerr << "config error [" << e.key() << "]: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::invalid_argument & e) {   // graph, family, enumeration and usage errors
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const Graph6Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const EmptyClassError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAssertion;
    }
    return kExitPass;
}
