#pragma once

#include <optional>
#include <string>
#include <vector>

namespace abelcover {

// Invariant record of a surface whose canonical image is a surface, in
// case A (pg of the image is 0) or case B (the image is a canonically
// embedded surface). Optional fields switch the rules needing them to
// "inapplicable".
struct SurfaceRecord {
    char case_label = 'A';  // 'A' or 'B'
    long long d = 2;        // degree of the canonical map
    long long pg = 3;
    long long q_X = 0;
    long long q_Sigma = 0;
    std::optional<long long> K2;
    std::optional<long long> M2;        // square of the moving part of |K|
    std::optional<long long> degSigma;  // degree of the canonical image
};

enum class VerdictStatus { Pass, Fail, Inapplicable };

// Outcome of one inequality; slack is LHS - RHS in the stated orientation
// (so a pass means slack >= 0, except for the upper bound R4 where a pass
// means slack <= 0).
struct Verdict {
    std::string rule;
    VerdictStatus status = VerdictStatus::Inapplicable;
    std::string citation;
    long long slack = 0;

    bool passed() const { return status == VerdictStatus::Pass; }
    bool failed() const { return status == VerdictStatus::Fail; }
};

std::string verdict_status_str(VerdictStatus s);

// Evaluate every rule of the inequality system against the record:
//   R1   M^2 >= d deg(Sigma)
//   R2A  deg(Sigma) >= pg - 2                (case A)
//   R2B  deg(Sigma) >= 3 pg + q(Sigma) - 7   (case B)
//   R3A  K^2 >= d (pg - 2)                   (case A, minimal)
//   R3B  K^2 >= d (3 pg + q(Sigma) - 7)      (case B, minimal)
//   R4   K^2 <= 9 chi(O)                     (Bogomolov-Miyaoka-Yau)
//   R5   27 - 9 q(X) >= (d - 9)(pg - 2)              (case A)
//   R6   30 - 9 q(X) - d q(Sigma) >= (d - 3)(3 pg - 7)  (case B)
//   R7   K^2 >= 6 pg + 2 q(Sigma) - 14       (case B, d = 2)
//   R8   K^2 >= 9 pg + 3 q(Sigma) - 21       (case B, d = 3)
std::vector<Verdict> check(const SurfaceRecord& rec);

// Largest degree d >= 2 admitted by R5 (case A) or R6 (case B, pg >= 4),
// with the cap d <= 8 for case A and pg > 132. Empty when no degree
// (even 2) is admissible.
std::optional<long long> max_degree(char case_label, long long pg, long long q_X,
                                    long long q_Sigma = 0);

struct FeasibilityRow {
    long long d = 0;
    std::optional<long long> max_pg;  // empty = unbounded
    std::optional<long long> stated_pg;
    bool discrepancy = false;
};

// Per-degree maximal pg at q_X = q_Sigma = 0. In case B the computed value
// is compared against the published list {4:9, 5:7, 6:5, 7:4, 8:4, 9:4};
// a mismatch is flagged, never corrected.
std::vector<FeasibilityRow> enumerate_feasible(char case_label, long long d_min, long long d_max);

}  // namespace abelcover
