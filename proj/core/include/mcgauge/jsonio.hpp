/// @file jsonio.hpp
/// Problem and report documents: the batch-file surface of the engine.
/// Rationals travel as "num/den" strings (never lossy number types), norms
/// as exact dyadic strings, and printing is deterministic (sorted keys,
/// fixed indentation), so identical inputs produce byte-identical output.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgauge/multivec.hpp"

namespace mcgauge {

inline constexpr const char* kToolName = "mcgauge";
inline constexpr const char* kToolVersion = "0.1.0";

/// Pinned bracket convention, stamped into every report so archived output
/// is self-describing about signs.
inline constexpr const char* kConventionFingerprint =
    "schouten-bv: [A,B] = sum_i (dr A/d xi_i)(d B/d u_i) - (d A/d u_i)(dl B/d xi_i); "
    "[X,f] = X(f); [pi,f] = -X_f; 1/2 <[pi,pi], df^dg^dh> = +jacobiator";

// ---------------------------------------------------------------------------
// Problem documents
// ---------------------------------------------------------------------------

/// One polynomial term: exact coefficient, even exponents (length p+q,
/// tangent block first), odd generators as 1-based indices.
struct TermDoc {
    Scalar c;
    std::vector<std::int32_t> even;
    std::vector<int> odd;

    bool operator==(const TermDoc&) const = default;
};

struct MultiVecDoc {
    int degree = 0;
    std::vector<TermDoc> terms;

    bool operator==(const MultiVecDoc&) const = default;
};

/// Structure constants, rows ([i, j, k], c) meaning [E_i, E_j] = sum c E_k
/// with 1-based indices and i < j; the antisymmetric completion is implied.
struct LieAlgebraDoc {
    int dim = 0;
    std::vector<std::pair<std::array<int, 3>, Scalar>> brackets;

    bool operator==(const LieAlgebraDoc&) const = default;
};

struct CheckSection {
    std::string pi;

    bool operator==(const CheckSection&) const = default;
};

struct CohomologySection {
    std::string gamma;
    std::vector<int> levels;

    bool operator==(const CohomologySection&) const = default;
};

/// Exactly one mode: gauge equivalence of two named structures, or the
/// order-2 polynomial extension sweep for named first-order data.
struct SolveSection {
    std::optional<std::string> gamma;
    std::optional<std::string> gamma_prime;
    std::optional<std::string> first_order;
    std::vector<int> x_caps;

    bool operator==(const SolveSection&) const = default;
};

struct LinearizeSection {
    std::string pi;

    bool operator==(const LinearizeSection&) const = default;
};

struct ProblemDocument {
    SpaceModel space;
    int jet_order = 1;
    std::optional<int> x_cap;
    std::map<std::string, MultiVecDoc> multivectors;
    std::optional<LieAlgebraDoc> lie_algebra;
    std::optional<CheckSection> check;
    std::optional<CohomologySection> cohomology;
    std::optional<SolveSection> solve;
    std::optional<LinearizeSection> linearize;

    bool operator==(const ProblemDocument&) const = default;
};

/// Strict parse: unknown keys, non-string rationals, or malformed structure
/// raise InputError with a path-qualified message.
ProblemDocument parse_problem(const std::string& text);

/// Deterministic rendering; parse_problem(print_problem(d)) == d.
std::string print_problem(const ProblemDocument& doc);

/// Materialize a named multivector of the document (InputError when the
/// name is missing or a term is malformed for the document's space).
MultiVec to_multivec(const ProblemDocument& doc, const std::string& name);

/// Canonical term list of a multivector (terms in the canonical key order).
MultiVecDoc from_multivec(const MultiVec& w);

/// Build validated structure constants (InputError via the constructor when
/// antisymmetry or Jacobi fails).
LieAlgebraData to_lie_algebra(const LieAlgebraDoc& doc);

// ---------------------------------------------------------------------------
// Report documents
// ---------------------------------------------------------------------------

struct IterationDoc {
    int level = 0;
    std::string x_norm;         // dyadic string, e.g. "2^-3"
    std::string residual_norm;  // dyadic string or "0"

    bool operator==(const IterationDoc&) const = default;
};

struct ObstructionDoc {
    int level = 0;
    int dim_h1 = 0;
    std::vector<std::vector<std::string>> representatives;  // rationals as strings
    std::vector<std::string> cocycle;

    bool operator==(const ObstructionDoc&) const = default;
};

struct CheckReportDoc {
    bool tangent = false;
    bool maurer_cartan = false;
    std::string defect_norm;  // L-norm of [pi, pi]
    bool jacobiator_consistent = false;
    /// Present when the order-2 analysis ran (pi not Maurer-Cartan but valid
    /// to first order): does a capped polynomial extension exist?
    std::optional<bool> order2_extendable;

    bool operator==(const CheckReportDoc&) const = default;
};

struct CohomologyReportDoc {
    struct LevelEntry {
        int level = 0;
        std::array<int, 4> basis_dims{};
        std::array<int, 3> dims{};  // H^0, H^1, H^2

        bool operator==(const LevelEntry&) const = default;
    };
    std::vector<LevelEntry> levels;

    bool operator==(const CohomologyReportDoc&) const = default;
};

struct SolveReportDoc {
    std::string status;  // "equivalent" | "obstructed"
    std::vector<TermDoc> gauge;
    std::vector<IterationDoc> iterations;
    std::vector<TermDoc> final_residual;
    std::optional<ObstructionDoc> obstruction;

    bool operator==(const SolveReportDoc&) const = default;
};

struct ExtensionAttemptDoc {
    int x_cap = 0;
    bool solvable = false;
    std::vector<TermDoc> correction;
    std::vector<std::string> certificate;
    std::vector<std::string> cocycle;

    bool operator==(const ExtensionAttemptDoc&) const = default;
};

struct ExtensionReportDoc {
    std::string status;  // "extendable" | "obstructed"
    std::vector<ExtensionAttemptDoc> attempts;

    bool operator==(const ExtensionReportDoc&) const = default;
};

struct ReportDocument {
    std::string command;
    std::string status;
    std::string convention = kConventionFingerprint;
    std::string tool = std::string(kToolName) + " " + kToolVersion;
    std::optional<std::int64_t> timing_ms;  // printed as null when absent
    std::optional<CheckReportDoc> check;
    std::optional<CohomologyReportDoc> cohomology;
    std::optional<SolveReportDoc> solve;
    std::optional<ExtensionReportDoc> extension;

    bool operator==(const ReportDocument&) const = default;
};

ReportDocument parse_report(const std::string& text);

/// Deterministic rendering; parse_report(print_report(d)) == d.
std::string print_report(const ReportDocument& doc);

}  // namespace mcgauge
