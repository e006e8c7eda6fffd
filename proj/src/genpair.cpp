#include "abelcover/genpair.hpp"

#include "abelcover/errors.hpp"

namespace abelcover {

std::vector<PairViolation> validate_pair(const GeneratingPairSpec& spec) {
    std::vector<PairViolation> out;
    auto fail = [&](const std::string& msg) { out.push_back(PairViolation{false, msg}); };
    auto warn = [&](const std::string& msg) { out.push_back(PairViolation{true, msg}); };

    if (spec.nu < 2)
        fail("degree nu must be >= 2");
    if (spec.pg_W != spec.pg_V)
        fail("pg(W) = " + std::to_string(spec.pg_W) + " differs from pg(V) = " +
             std::to_string(spec.pg_V));
    if (spec.L2 <= 0)
        fail("L^2 must be positive");
    if (spec.h0_L < 2)
        fail("h0(L) must be >= 2");
    if (spec.g < 2)
        fail("genus of C must be >= 2");
    if (spec.q_V() <= 0)
        fail("q(V) = g_bar - g = " + std::to_string(spec.q_V()) + " must be positive");
    if (spec.L_equals_KW && 2 * spec.g - 2 != 2 * spec.K2_W)
        fail("L = K_W requires 2g-2 = 2 K2_W (adjunction), got 2g-2 = " +
             std::to_string(2 * spec.g - 2));

    if (spec.nu > 4)
        warn("degree nu > 4 is impossible for a generating pair");
    else if (spec.nu > 3 && !spec.C_hyperelliptic)
        warn("degree nu > 3 requires a hyperelliptic C");
    return out;
}

SequenceInvariants sequence(const GeneratingPairSpec& spec, long long n) {
    if (n < 3)
        throw InputError("sequence is defined for n >= 3");
    SequenceInvariants s;
    s.n = n;
    s.pg = n * spec.pg_W + (n - 1) * spec.g;
    s.q_X = spec.q_V();
    s.q_Sigma = 0;
    s.K2_Sigma = n * (spec.K2_W - spec.L2) + 8 * (n - 1) * (spec.g - 1);
    s.K2_X = n * (spec.K2_V - spec.nu * spec.L2) + 8 * (n - 1) * (spec.g_bar - 1);
    s.chi = 1 - s.q_X + s.pg;
    if (spec.C_hyperelliptic) {
        s.degree = 2 * spec.nu;
        s.case_label = 'A';
    } else {
        s.degree = spec.nu;
        s.case_label = 'B';
    }
    return s;
}

Rat slope_limit(const GeneratingPairSpec& spec) {
    return Rat(spec.K2_V - spec.nu * spec.L2 + 8 * (spec.g_bar - 1), spec.pg_W + spec.g);
}

}  // namespace abelcover
