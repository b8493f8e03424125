#include "bicyclic/canonical.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/graph6.hpp"
#include "bicyclic/spectral.hpp"
#include "bicyclic/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace bicyclic;

namespace {

std::string slurp(const std::filesystem::path & p)
{
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("theorem cells")
{
    CHECK(theorem_cell(10, 4));
    CHECK_FALSE(theorem_cell(11, 4));
    CHECK(theorem_cell(11, 5));
    CHECK(theorem_cell(12, 9));
    CHECK_FALSE(theorem_cell(12, 10));
    CHECK_FALSE(theorem_cell(9, 5));
}

TEST_CASE("maximizers at n = 10")
{
    MaximizerRecord f = find_maximizer(10, 4);
    CHECK(f.unique);
    CHECK(f.maximizer == canonical_form(build_family(FamilySpec::F(10))));
    CHECK(f.matches_family == std::optional<std::string>("F(10)"));
    CHECK(f.asserted);
    CHECK(f.classes.total() == f.class_size);

    MaximizerRecord m = find_maximizer(10, 5);
    CHECK(m.unique);
    CHECK(m.maximizer == canonical_form(build_family(FamilySpec::M(10, 5))));
    CHECK(from_graph6(m.graph6) == m.maximizer.graph());
    CHECK(m.rho_lo < m.rho_hi);
    CHECK(mpq_class(m.rho_hi - m.rho_lo).get_d() <= 1e-9);
    CHECK(m.rho_lo > 3);

    CHECK_THROWS_AS(find_maximizer(10, 3), EmptyClassError);
}

TEST_CASE("report-only orders")
{
    SweepReport r = verify_theorem1(8);
    CHECK_FALSE(r.records.empty());
    for (const auto & rec : r.records)
        CHECK_FALSE(rec.asserted);
    for (const auto & a : r.audits)
        CHECK_FALSE(a.asserted);
    CHECK(r.passed());
}

TEST_CASE("theorem checks at n = 10")
{
    SweepReport r = verify_theorem1(10);
    CHECK(r.passed());
    CHECK(r.failures().empty());
    CHECK(r.records.size() == 5);   // alpha = 4..8
    for (const auto & rec : r.records)
        CHECK(rec.unique);
}

TEST_CASE("class audits at (12, 6)")
{
    auto rows = audit_class_lemmas(12, 6);
    std::set<std::string> names;
    for (const auto & a : rows) {
        names.insert(a.name);
        if (a.asserted)
            CHECK_MESSAGE(a.pass, a.name << " " << a.detail);
    }
    for (const char * want : {"class-partition", "c2-below-M", "c3-below-M", "c3-B2-max-is-M1", "bsharp-chain"})
        CHECK(names.count(want) == 1);
}

TEST_CASE("identity catalog keeps displayed failures out of the verdict")
{
    SweepReport r = run_identity_catalog({10});
    CHECK(r.passed());
    bool displayed_failure = false;
    for (const auto & row : r.identities) {
        if (row.form == IdentityForm::Corrected)
            CHECK(row.pass);
        else if (!row.pass)
            displayed_failure = true;
    }
    CHECK(displayed_failure);
}

TEST_CASE("sweep writes CSV, Markdown and graph6")
{
    auto dir = std::filesystem::temp_directory_path() / "bicyclic-sweep-test";
    std::filesystem::remove_all(dir);
    SweepConfig cfg;
    cfg.n_min = 8;
    cfg.n_max = 9;
    cfg.out_dir = dir.string();
    SweepReport r = run_sweep(cfg);
    CHECK(r.passed());

    std::string csv = slurp(dir / "sweep.csv");
    CHECK(csv.rfind("n,alpha,class_size,c1,c2,c3,max_g6,rho_lo,rho_hi,unique,matches_family\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.records.size()) + 1);
    CHECK(csv == sweep_csv(r));

    std::string md = slurp(dir / "summary.md");
    CHECK(md.find("below theorem range") != std::string::npos);
    CHECK(md.find("Overall: PASS") != std::string::npos);

    std::istringstream g6(slurp(dir / "maximizers.g6"));
    CHECK(read_graph6_stream(g6).size() == r.records.size());
    std::filesystem::remove_all(dir);
}
