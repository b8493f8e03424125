#include "bicyclic/verify.hpp"

#include "bicyclic/enumeration.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/graph6.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace bicyclic {

namespace {

constexpr double kRootMatchTolerance = 1e-9;
constexpr double kReportTolerance = 1e-9;
constexpr int kReportDigits = 12;

struct Member {
    Graph g;
    CanonicalLabel label;
    int alpha = 0;
    int pendants = 0;
    double rho = 0;
    IntPolynomial poly;
    BaseTag tag = BaseTag::B1;
};

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn)
{
    if (threads <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;)
                fn(i);
        });
    for (auto & th : pool)
        th.join();
}

std::vector<Member> members_of(int n, std::optional<int> alpha, int threads)
{
    EnumerationConfig cfg;
    cfg.n = n;
    cfg.alpha = alpha;
    std::vector<Graph> graphs = enumerate_all(cfg);
    std::vector<Member> out(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) {
        Member & m = out[i];
        m.g = graphs[i];
        m.label = canonical_form(m.g);
        m.alpha = alpha ? *alpha : independence_number(m.g).size;
        m.pendants = popcount(pendant_vertices(m.g));
        m.rho = numeric_spectral_radius(m.g);
        m.poly = char_poly(m.g);
        m.tag = classify(m.g);
    });
    return out;
}

struct Top {
    std::size_t index = 0;
    bool unique = true;
    SpectralCertificate cert;
};

// Numeric argmax, then exact confirmation: every other member must sit
// strictly below the certified lower end, or be settled by compare_radii.
Top certified_max(const std::vector<Member> & ms, const std::vector<std::size_t> & idx)
{
    std::size_t top = idx.front();
    for (std::size_t i : idx)
        if (ms[i].rho > ms[top].rho)
            top = i;
    while (true) {
        Top t{top, true, spectral_radius(ms[top].g, kReportTolerance)};
        bool moved = false;
        for (std::size_t i : idx) {
            if (i == top || all_roots_below(ms[i].poly, t.cert.lo))
                continue;
            Order o = compare_radii(ms[i].g, ms[top].g);
            if (o == Order::Greater) {
                top = i;
                moved = true;
                break;
            }
            if (o == Order::Equal)
                t.unique = false;
        }
        if (!moved)
            return t;
    }
}

// Every member in idx other than `skip` has rho strictly below rho(ref).
std::pair<bool, std::string> all_below(const std::vector<Member> & ms, const std::vector<std::size_t> & idx,
                                       const Graph & ref, const SpectralCertificate & ref_cert,
                                       const std::optional<CanonicalLabel> & skip)
{
    for (std::size_t i : idx) {
        if (skip && ms[i].label == *skip)
            continue;
        if (all_roots_below(ms[i].poly, ref_cert.lo))
            continue;
        if (compare_radii(ms[i].g, ref) != Order::Less)
            return {false, to_graph6(ms[i].g)};
    }
    return {true, {}};
}

std::optional<Graph> family_member(FamilyKind kind, int n, int alpha)
{
    if (FamilySpec::infeasibility(kind, n, alpha))
        return std::nullopt;
    Graph g = build_family(FamilySpec::make(kind, n, alpha));
    if (independence_number(g).size != alpha)
        return std::nullopt;
    return g;
}

std::optional<std::string> family_match(int n, int alpha, const CanonicalLabel & label)
{
    std::vector<FamilySpec> specs;
    if (n % 2 == 0 && n >= 8) {
        specs.push_back(FamilySpec::F(n));
        specs.push_back(FamilySpec::Fprime(n));
    }
    for (FamilyKind kind : alpha_families())
        if (!FamilySpec::infeasibility(kind, n, alpha))
            specs.push_back(FamilySpec::make(kind, n, alpha));
    for (int k = 1; k <= n - 5; ++k)
        specs.push_back(FamilySpec::Bsharp(n, k));
    for (const auto & spec : specs) {
        Graph g = build_family(spec);
        if (canonical_form(g) == label)
            return spec.name();
    }
    return std::nullopt;
}

int ceil_half(int x)
{
    return (x + 1) / 2;
}

bool m_cell(int n, int alpha)
{
    return n >= 10 && alpha >= ceil_half(n - 1) && alpha <= n - 3;
}

bool f_cell(int n, int alpha)
{
    return n >= 10 && n % 2 == 0 && alpha == (n - 2) / 2;
}

double midpoint(const mpq_class & lo, const mpq_class & hi)
{
    return mpq_class((lo + hi) / 2).get_d();
}

MaximizerRecord make_record(int n, int alpha, const std::vector<Member> & ms, const std::vector<std::size_t> & idx)
{
    MaximizerRecord r;
    r.n = n;
    r.alpha = alpha;
    r.class_size = static_cast<int>(idx.size());
    for (std::size_t i : idx) {
        int k = ms[i].pendants;
        if (k <= alpha - 2)
            ++r.classes.c1;
        else if (k == alpha - 1)
            ++r.classes.c2;
        else
            ++r.classes.c3;
    }
    Top top = certified_max(ms, idx);
    const Member & best = ms[top.index];
    r.maximizer = best.label;
    r.graph6 = to_graph6(best.g);
    r.rho = top.cert.rho;
    r.rho_lo = top.cert.lo;
    r.rho_hi = top.cert.hi;
    r.unique = top.unique;
    r.matches_family = family_match(n, alpha, best.label);
    r.asserted = theorem_cell(n, alpha);
    return r;
}

AuditRow row(std::string name, int n, int alpha, bool asserted, bool pass, std::string detail = {})
{
    return {std::move(name), n, alpha, asserted, pass, std::move(detail)};
}

// Root of the reduced polynomial against the certified spectral radius.
AuditRow root_match(const std::string & name, int n, int alpha, const IntPolynomial & reduced,
                    const MaximizerRecord & r, bool asserted)
{
    RootInterval root = largest_real_root(reduced, 1e-12);
    double diff = std::abs(midpoint(root.lo, root.hi) - midpoint(r.rho_lo, r.rho_hi));
    std::ostringstream detail;
    detail << "|largest root - rho| = " << diff;
    return row(name, n, alpha, asserted, diff <= kRootMatchTolerance, detail.str());
}

// The maximizer for alpha = (n-2)/2: base B(3,2,3) and every cycle vertex
// other than the two branch vertices has degree 2.
AuditRow f_structure(int n, int alpha, const MaximizerRecord & r, bool asserted)
{
    Graph g = r.maximizer.graph();
    BaseResult b = base(g);
    bool ok = b.kind == BaseKind{BaseTag::B1, {3, 2, 3}};
    if (ok) {
        int heavy = 0;
        for (Vertex v : to_vector(cycle_vertices(g)))
            if (g.degree(v) != 2)
                ++heavy;
        ok = heavy == 2;
    }
    return row("maximizer-structure", n, alpha, asserted, ok, "base " + b.kind.name());
}

bool vprime_shape_ok(const Graph & g)
{
    VertexSet vp = v_prime_set(g);
    switch (popcount(vp)) {
    case 1: return true;
    case 2: {
        auto v = to_vector(vp);
        return g.adjacent(v[0], v[1]);
    }
    case 3: {
        auto v = to_vector(vp);
        return g.adjacent(v[0], v[1]) && g.adjacent(v[1], v[2]) && g.adjacent(v[0], v[2]);
    }
    default: return false;
    }
}

void audit_cell(int n, int alpha, const std::vector<Member> & ms, const std::vector<std::size_t> & idx,
                std::vector<AuditRow> & out)
{
    const bool claimed = m_cell(n, alpha);
    std::vector<std::size_t> c1, c2, c3;
    bool partition_ok = true;
    for (std::size_t i : idx) {
        int k = ms[i].pendants;
        if (k <= alpha - 2)
            c1.push_back(i);
        else if (k == alpha - 1)
            c2.push_back(i);
        else if (k == alpha)
            c3.push_back(i);
        else
            partition_ok = false;
    }
    partition_ok = partition_ok && c1.size() + c2.size() + c3.size() == idx.size();
    out.push_back(row("class-partition", n, alpha, true, partition_ok,
                      std::to_string(c1.size()) + "+" + std::to_string(c2.size()) + "+" + std::to_string(c3.size())));

    if (auto m = family_member(FamilyKind::M, n, alpha)) {
        SpectralCertificate mc = spectral_radius(*m, kReportTolerance);
        CanonicalLabel ml = canonical_form(*m);
        auto check = [&](const char * name, const std::vector<std::size_t> & cls, bool asserted) {
            auto [ok, bad] = all_below(ms, cls, *m, mc, ml);
            out.push_back(row(name, n, alpha, asserted, ok, ok ? "" : "counterexample " + bad));
        };
        check("c1-below-M", c1, claimed);
        check("c2-below-M", c2, claimed);
        check("c3-below-M", c3, claimed);
    }

    auto class_max = [&](const char * name, FamilyKind kind, BaseTag tag) {
        std::vector<std::size_t> part;
        for (std::size_t i : c3)
            if (ms[i].tag == tag)
                part.push_back(i);
        auto expected = family_member(kind, n, alpha);
        if (part.empty() || !expected)
            return;
        Top t = certified_max(ms, part);
        bool ok = t.unique && ms[t.index].label == canonical_form(*expected);
        out.push_back(row(name, n, alpha, n >= 10, ok, "max " + to_graph6(ms[t.index].g)));
    };
    class_max("c3-B1-max-is-M1prime", FamilyKind::M1prime, BaseTag::B1);
    class_max("c3-B2-max-is-M1", FamilyKind::M1, BaseTag::B2);

    if (!c2.empty()) {
        int bad = 0;
        std::string example;
        for (std::size_t i : c2)
            if (!vprime_shape_ok(ms[i].g)) {
                if (!bad++)
                    example = to_graph6(ms[i].g);
            }
        out.push_back(row("c2-vprime-shape", n, alpha, claimed, bad == 0,
                          bad ? std::to_string(bad) + " violations, e.g. " + example : ""));
    }

    // Pendant-count bound: a bicyclic graph with k pendants has rho <= rho(Bsharp(k)).
    if (!c1.empty()) {
        std::map<int, std::vector<std::size_t>> by_k;
        for (std::size_t i : c1)
            if (ms[i].pendants >= 1 && ms[i].pendants <= n - 5)
                by_k[ms[i].pendants].push_back(i);
        bool ok = true;
        std::string detail;
        for (auto & [k, members] : by_k) {
            Graph bs = build_family(FamilySpec::Bsharp(n, k));
            auto [below, bad] = all_below(ms, members, bs, spectral_radius(bs, kReportTolerance), canonical_form(bs));
            if (!below) {
                ok = false;
                detail = "k=" + std::to_string(k) + " counterexample " + bad;
                break;
            }
        }
        out.push_back(row("c1-pendant-bound", n, alpha, claimed, ok, detail));
    }

    if (n >= 7) {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= std::min(alpha - 2, n - 6); ++k)
            if (compare_radii(build_family(FamilySpec::Bsharp(n, k)), build_family(FamilySpec::Bsharp(n, k + 1)))
                != Order::Less) {
                ok = false;
                detail = "fails at k=" + std::to_string(k);
                break;
            }
        out.push_back(row("bsharp-chain", n, alpha, n >= 10, ok, detail));
    }
}

SweepReport sweep_order(int n, int threads, AlphaMode mode, bool class_audits)
{
    SweepReport rep;
    std::vector<Member> ms = members_of(n, std::nullopt, threads);
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < ms.size(); ++i)
        cells[ms[i].alpha].push_back(i);

    const int min_alpha = cells.begin()->first;
    rep.audits.push_back(row("min-alpha", n, min_alpha, n >= 10, min_alpha == ceil_half(n - 2),
                             "min alpha " + std::to_string(min_alpha) + ", expected "
                                 + std::to_string(ceil_half(n - 2))));

    for (const auto & [alpha, idx] : cells) {
        if (mode == AlphaMode::Theorem && !theorem_cell(n, alpha))
            continue;
        MaximizerRecord r = make_record(n, alpha, ms, idx);
        if (f_cell(n, alpha)) {
            FamilySpec f = FamilySpec::F(n);
            bool ok = r.unique && r.maximizer == canonical_form(build_family(f));
            rep.audits.push_back(row("maximizer-is-F", n, alpha, true, ok, "maximizer " + r.graph6));
            rep.audits.push_back(root_match("rho-F-root", n, alpha, reduced_poly(f), r, true));
            rep.audits.push_back(f_structure(n, alpha, r, true));
        }
        else if (m_cell(n, alpha)) {
            FamilySpec m = FamilySpec::M(n, alpha);
            bool ok = r.unique && r.maximizer == canonical_form(build_family(m));
            rep.audits.push_back(row("maximizer-is-M", n, alpha, true, ok, "maximizer " + r.graph6));
            rep.audits.push_back(root_match("rho-M-root", n, alpha, m_quartic(n, alpha), r, true));
        }
        if (class_audits)
            audit_cell(n, alpha, ms, idx, rep.audits);
        rep.records.push_back(std::move(r));
    }
    return rep;
}

void append(SweepReport & into, SweepReport && from)
{
    std::move(from.records.begin(), from.records.end(), std::back_inserter(into.records));
    std::move(from.identities.begin(), from.identities.end(), std::back_inserter(into.identities));
    std::move(from.audits.begin(), from.audits.end(), std::back_inserter(into.audits));
}

std::string form_name(IdentityForm f)
{
    return f == IdentityForm::Displayed ? "displayed" : "corrected";
}

}  // namespace

bool theorem_cell(int n, int alpha)
{
    return f_cell(n, alpha) || m_cell(n, alpha);
}

bool SweepReport::passed() const
{
    if (!failures().empty())
        return false;
    for (const auto & r : records)
        if (r.asserted && !r.unique)
            return false;
    for (const auto & i : identities)
        if (i.form == IdentityForm::Corrected && !i.pass)
            return false;
    return true;
}

std::vector<const AuditRow *> SweepReport::failures() const
{
    std::vector<const AuditRow *> out;
    for (const auto & a : audits)
        if (a.asserted && !a.pass)
            out.push_back(&a);
    return out;
}

MaximizerRecord find_maximizer(int n, int alpha, int threads)
{
    std::vector<Member> ms = members_of(n, alpha, threads);
    if (ms.empty())
        throw EmptyClassError("B(" + std::to_string(n) + "," + std::to_string(alpha) + ") is empty");
    std::vector<std::size_t> idx(ms.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    return make_record(n, alpha, ms, idx);
}

SweepReport verify_theorem1(int n, int threads, AlphaMode mode)
{
    return sweep_order(n, threads, mode, false);
}

std::vector<AuditRow> audit_class_lemmas(int n, int alpha, int threads)
{
    std::vector<Member> ms = members_of(n, alpha, threads);
    std::vector<AuditRow> out;
    if (ms.empty())
        return out;
    std::vector<std::size_t> idx(ms.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    audit_cell(n, alpha, ms, idx, out);
    return out;
}

SweepReport run_identity_catalog(const std::vector<int> & ns)
{
    SweepReport rep;
    for (int n : ns) {
        const bool claimed = n >= 10;
        for (Identity id : all_identities()) {
            if (id == Identity::HG) {
                if (!identity_applicable(id, n, 0))
                    continue;
                for (IdentityForm form : {IdentityForm::Displayed, IdentityForm::Corrected})
                    rep.identities.push_back(
                        {identity_name(id), n, (n - 2) / 2, form, identity_check(id, n, 0, form).holds});
                continue;
            }
            for (int alpha = 0; alpha < n; ++alpha) {
                if (!identity_applicable(id, n, alpha))
                    continue;
                for (IdentityForm form : {IdentityForm::Displayed, IdentityForm::Corrected})
                    rep.identities.push_back(
                        {identity_name(id), n, alpha, form, identity_check(id, n, alpha, form).holds});
            }
        }

        // Closed forms against the direct characteristic polynomial.
        std::vector<FamilySpec> specs;
        if (n % 2 == 0 && n >= 8) {
            specs.push_back(FamilySpec::F(n));
            specs.push_back(FamilySpec::Fprime(n));
        }
        for (FamilyKind kind : alpha_families())
            if (has_closed_form(kind))
                for (int alpha = 0; alpha < n; ++alpha)
                    if (!FamilySpec::infeasibility(kind, n, alpha))
                        specs.push_back(FamilySpec::make(kind, n, alpha));
        for (const auto & spec : specs) {
            bool ok = family_poly(spec) == char_poly(build_family(spec));
            rep.audits.push_back(row("closed-form", n, spec.kind() == FamilyKind::F || spec.kind() == FamilyKind::Fprime ? (n - 2) / 2
                                                                                                  : spec.alpha(),
                                     true, ok, spec.name()));
        }

        auto order = [&](const std::string & name, const std::string & detail, int alpha, const Graph & lo,
                         const Graph & hi, bool asserted) {
            Order o = compare_radii(lo, hi);
            rep.audits.push_back(row(name, n, alpha, asserted, o == Order::Less, detail + ": " + to_string(o)));
        };
        if (n % 2 == 0 && n >= 10)
            order("order-Fprime-below-F", "Fprime(" + std::to_string(n) + ") vs F(" + std::to_string(n) + ")", (n - 2) / 2, build_family(FamilySpec::Fprime(n)), build_family(FamilySpec::F(n)),
                  claimed);
        for (int alpha = 0; alpha < n; ++alpha) {
            if (FamilySpec::infeasibility(FamilyKind::M, n, alpha))
                continue;
            Graph m = build_family(FamilySpec::M(n, alpha));
            for (FamilyKind kind : {FamilyKind::M1, FamilyKind::M2, FamilyKind::M3, FamilyKind::M4, FamilyKind::M5,
                                    FamilyKind::M6})
                if (!FamilySpec::infeasibility(kind, n, alpha))
                    order("order-Mi-below-M", kind_name(kind), alpha, build_family(FamilySpec::make(kind, n, alpha)), m,
                          claimed);
        }
        for (int alpha = 0; alpha < n; ++alpha) {
            if (!FamilySpec::infeasibility(FamilyKind::M1prime, n, alpha)
                && !FamilySpec::infeasibility(FamilyKind::M1, n, alpha))
                order("order-M1prime-below-M1", "M1prime vs M1", alpha, build_family(FamilySpec::M1prime(n, alpha)),
                      build_family(FamilySpec::M1(n, alpha)), claimed);
            if (!FamilySpec::infeasibility(FamilyKind::M3prime, n, alpha)
                && !FamilySpec::infeasibility(FamilyKind::M3, n, alpha))
                order("order-M3prime-below-M3", "M3prime vs M3", alpha, build_family(FamilySpec::M3prime(n, alpha)),
                      build_family(FamilySpec::M3(n, alpha)), false);
            if (!FamilySpec::infeasibility(FamilyKind::M1, n, alpha) && n >= 10) {
                RootCount rc = count_roots_above(char_poly(build_family(FamilySpec::M1(n, alpha))), mpq_class(2));
                rep.audits.push_back(row("M1-rho-above-2", n, alpha, false, rc.above >= 1));
            }
        }
        for (int k = 1; k <= n - 6; ++k)
            order("order-bsharp-chain", "k=" + std::to_string(k), k,
                  build_family(FamilySpec::Bsharp(n, k)), build_family(FamilySpec::Bsharp(n, k + 1)), claimed);
    }
    return rep;
}

SweepReport run_sweep(const SweepConfig & cfg)
{
    SweepReport rep;
    std::vector<int> ns;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        append(rep, sweep_order(n, cfg.threads, cfg.alpha_mode, true));
        ns.push_back(n);
    }
    append(rep, run_identity_catalog(ns));

    std::filesystem::create_directories(cfg.out_dir);
    const std::filesystem::path dir(cfg.out_dir);
    auto write = [&](const char * name, const std::string & text) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + (dir / name).string());
        out << text;
    };
    write("sweep.csv", sweep_csv(rep));
    write("summary.md", sweep_markdown(rep, cfg));
    std::string g6;
    for (const auto & r : rep.records)
        g6 += r.graph6 + "\n";
    write("maximizers.g6", g6);
    return rep;
}

std::string sweep_csv(const SweepReport & report)
{
    std::ostringstream os;
    os << "n,alpha,class_size,c1,c2,c3,max_g6,rho_lo,rho_hi,unique,matches_family\n";
    for (const auto & r : report.records)
        os << r.n << ',' << r.alpha << ',' << r.class_size << ',' << r.classes.c1 << ',' << r.classes.c2 << ','
           << r.classes.c3 << ',' << r.graph6 << ',' << decimal_floor(r.rho_lo, kReportDigits) << ','
           << decimal_ceil(r.rho_hi, kReportDigits) << ',' << (r.unique ? "true" : "false") << ','
           << r.matches_family.value_or("") << '\n';
    return os.str();
}

std::string sweep_markdown(const SweepReport & report, const SweepConfig & cfg)
{
    std::ostringstream os;
    os << "# Bicyclic spectral sweep\n\n";
    os << "Grid: n = " << cfg.n_min << ".." << cfg.n_max << ", alpha_mode = " << to_string(cfg.alpha_mode)
       << ".\n\n";
    os << "Overall: " << (report.passed() ? "PASS" : "FAIL") << "\n\n";

    os << "## Maximizers\n\n";
    os << "| n | alpha | class size | C1 | C2 | C3 | rho interval | unique | family | scope |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto & r : report.records) {
        std::string scope = r.asserted ? "asserted" : (r.n < 10 ? "below theorem range" : "report only");
        os << "| " << r.n << " | " << r.alpha << " | " << r.class_size << " | " << r.classes.c1 << " | "
           << r.classes.c2 << " | " << r.classes.c3 << " | [" << decimal_floor(r.rho_lo, kReportDigits) << ", "
           << decimal_ceil(r.rho_hi, kReportDigits) << "] | " << (r.unique ? "yes" : "no") << " | "
           << r.matches_family.value_or("-") << " | " << scope << " |\n";
    }

    os << "\n## Identities\n\n";
    os << "| identity | form | holds | checked |\n|---|---|---|---|\n";
    std::map<std::pair<std::string, std::string>, std::pair<int, int>> tally;
    for (const auto & i : report.identities) {
        auto & t = tally[{i.identity, form_name(i.form)}];
        t.first += i.pass;
        ++t.second;
    }
    for (const auto & [key, t] : tally)
        os << "| " << key.first << " | " << key.second << " | " << t.first << " | " << t.second << " |\n";

    os << "\n## Audits\n\n";
    std::map<std::string, std::pair<int, int>> audits;
    for (const auto & a : report.audits) {
        auto & t = audits[a.name + (a.asserted ? "" : " (report only)")];
        t.first += a.pass;
        ++t.second;
    }
    os << "| audit | pass | total |\n|---|---|---|\n";
    for (const auto & [name, t] : audits)
        os << "| " << name << " | " << t.first << " | " << t.second << " |\n";

    auto fails = report.failures();
    if (!fails.empty()) {
        os << "\n## Failures\n\n";
        for (const auto * a : fails)
            os << "- " << a->name << " at n=" << a->n << ", alpha=" << a->alpha << ": " << a->detail << "\n";
    }
    return os.str();
}

}  // namespace bicyclic
