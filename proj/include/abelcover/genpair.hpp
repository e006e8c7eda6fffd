#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelcover/rational.hpp"

namespace abelcover {

// Numeric record of a generating pair (h: V -> W, L) of degree nu. The
// surfaces themselves are never modeled: the derived sequences X_n, Sigma_n
// depend only on these numbers.
struct GeneratingPairSpec {
    std::string name;
    long long nu = 2;
    long long pg_W = 0;
    long long pg_V = 0;
    long long K2_W = 0;
    long long K2_V = 0;
    long long L2 = 0;
    long long h0_L = 0;
    long long g = 0;      // genus of the general C in |L|
    long long g_bar = 0;  // genus of h^* C
    bool C_hyperelliptic = false;
    bool L_equals_KW = false;
    std::string notes;

    long long q_V() const { return g_bar - g; }
};

struct PairViolation {
    bool warning = false;
    std::string message;
};

// Checks the defining numeric conditions; violations are returned, never
// thrown. Degree-bound guards come back as warnings.
std::vector<PairViolation> validate_pair(const GeneratingPairSpec& spec);

struct SequenceInvariants {
    long long n = 0;
    long long pg = 0;        // pg(X_n) = pg(Sigma_n)
    long long q_X = 0;
    long long q_Sigma = 0;   // always 0
    long long K2_X = 0;
    long long K2_Sigma = 0;
    long long chi = 0;       // 1 - q_X + pg
    long long degree = 0;    // 2 nu (hyperelliptic C) or nu
    char case_label = 'B';   // 'A' when C is hyperelliptic
};

// Invariants of X_n and Sigma_n for n >= 3:
//   pg = n pg(W) + (n-1) g
//   K2_Sigma = n (K2_W - L2) + 8 (n-1)(g-1)
//   K2_X     = n (K2_V - nu L2) + 8 (n-1)(g_bar-1)
SequenceInvariants sequence(const GeneratingPairSpec& spec, long long n);

// limit of K2_X(n) / chi(n) = (K2_V - nu L2 + 8(g_bar - 1)) / (pg_W + g)
Rat slope_limit(const GeneratingPairSpec& spec);

}  // namespace abelcover
