#pragma once

#include "bicyclic/canonical.hpp"
#include "bicyclic/catalog.hpp"
#include "bicyclic/config.hpp"
#include "bicyclic/graph.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicyclic {

class EmptyClassError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pendant-count classes of B(n, alpha): k <= alpha-2, k = alpha-1, k = alpha.
struct ClassCounts {
    int c1 = 0;
    int c2 = 0;
    int c3 = 0;
    int total() const { return c1 + c2 + c3; }
};

struct MaximizerRecord {
    int n = 0;
    int alpha = 0;
    int class_size = 0;
    ClassCounts classes;
    CanonicalLabel maximizer;
    std::string graph6;
    double rho = 0;
    mpq_class rho_lo;
    mpq_class rho_hi;
    bool unique = false;   // every other member certified strictly below
    std::optional<std::string> matches_family;
    bool asserted = false; // cell lies inside the range the extremal claims cover
};

struct IdentityRow {
    std::string identity;
    int n = 0;
    int alpha = 0;
    IdentityForm form = IdentityForm::Displayed;
    bool pass = false;
};

struct AuditRow {
    std::string name;
    int n = 0;
    int alpha = 0;
    bool asserted = false;  // a failure here is a failure of the run
    bool pass = false;
    std::string detail;
};

struct SweepReport {
    std::vector<MaximizerRecord> records;
    std::vector<IdentityRow> identities;
    std::vector<AuditRow> audits;

    /// False if any asserted audit or asserted maximizer cell failed.
    bool passed() const;
    std::vector<const AuditRow *> failures() const;
};

/// Cells (n, alpha) where the maximizer is claimed: n >= 10 and either
/// alpha = (n-2)/2 with n even, or ceil((n-1)/2) <= alpha <= n-3.
bool theorem_cell(int n, int alpha);

/// Certified argmax of rho over B(n, alpha). Throws EmptyClassError.
MaximizerRecord find_maximizer(int n, int alpha, int threads = 1);

/// Enumerates B(n) once and checks the extremal claims for every alpha.
/// For n < 10 every row is report-only.
SweepReport verify_theorem1(int n, int threads = 1, AlphaMode mode = AlphaMode::All);

/// Class sizes, the (C2)/(C3) bounds against M(n, alpha), the (C3) maxima
/// M1'/M1, the V' structure of (C2) members, the pendant-count bound by
/// Bsharp(k) for (C1), and the increasing Bsharp chain.
std::vector<AuditRow> audit_class_lemmas(int n, int alpha, int threads = 1);

/// Exact identity checks (displayed and corrected forms), closed-form
/// characteristic polynomials against char_poly, and the ordering lemmas
/// certified by compare_radii, for every feasible (n, alpha) with n in ns.
SweepReport run_identity_catalog(const std::vector<int> & ns);

/// Extremal checks plus catalog for the configured grid; writes
/// sweep.csv, summary.md and maximizers.g6 into cfg.out_dir.
SweepReport run_sweep(const SweepConfig & cfg);

std::string sweep_csv(const SweepReport & report);
std::string sweep_markdown(const SweepReport & report, const SweepConfig & cfg);

}  // namespace bicyclic
