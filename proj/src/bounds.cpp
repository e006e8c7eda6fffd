#include "abelcover/bounds.hpp"

#include <map>

#include "abelcover/errors.hpp"

namespace abelcover {

namespace {

Verdict make(const std::string& rule, const std::string& citation) {
    Verdict v;
    v.rule = rule;
    v.citation = citation;
    return v;
}

// lower bound LHS >= RHS
void lower(Verdict& v, long long lhs, long long rhs) {
    v.slack = lhs - rhs;
    v.status = v.slack >= 0 ? VerdictStatus::Pass : VerdictStatus::Fail;
}

// upper bound LHS <= RHS
void upper(Verdict& v, long long lhs, long long rhs) {
    v.slack = lhs - rhs;
    v.status = v.slack <= 0 ? VerdictStatus::Pass : VerdictStatus::Fail;
}

bool r5_holds(long long d, long long pg, long long q) {
    return 27 - 9 * q >= (d - 9) * (pg - 2);
}

bool r6_holds(long long d, long long pg, long long q, long long q_sigma) {
    return 30 - 9 * q - d * q_sigma >= (d - 3) * (3 * pg - 7);
}

}  // namespace

std::string verdict_status_str(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        default: return "inapplicable";
    }
}

std::vector<Verdict> check(const SurfaceRecord& rec) {
    if (rec.case_label != 'A' && rec.case_label != 'B')
        throw InputError("case must be 'A' or 'B'");
    if (rec.pg < 3)
        throw InputError("records require pg >= 3");
    const bool a = rec.case_label == 'A';
    std::vector<Verdict> out;

    {
        Verdict v = make("R1", "M^2 >= d deg Sigma");
        if (rec.M2 && rec.degSigma)
            lower(v, *rec.M2, rec.d * *rec.degSigma);
        out.push_back(v);
    }
    {
        Verdict v = a ? make("R2A", "deg Sigma >= pg - 2 (image spans P^{pg-1})")
                      : make("R2B", "deg Sigma >= 3 pg + q(Sigma) - 7 (canonical image)");
        if (rec.degSigma)
            lower(v, *rec.degSigma, a ? rec.pg - 2 : 3 * rec.pg + rec.q_Sigma - 7);
        out.push_back(v);
    }
    {
        Verdict v = a ? make("R3A", "K^2 >= d (pg - 2)")
                      : make("R3B", "K^2 >= d (3 pg + q(Sigma) - 7)");
        if (rec.K2)
            lower(v, *rec.K2, a ? rec.d * (rec.pg - 2) : rec.d * (3 * rec.pg + rec.q_Sigma - 7));
        out.push_back(v);
    }
    {
        Verdict v = make("R4", "K^2 <= 9 chi(O) (Bogomolov-Miyaoka-Yau)");
        if (rec.K2)
            upper(v, *rec.K2, 9 * (1 - rec.q_X + rec.pg));
        out.push_back(v);
    }
    {
        Verdict v = make("R5", "27 - 9 q(X) >= (d-9)(pg-2) (case A)");
        if (a)
            lower(v, 27 - 9 * rec.q_X, (rec.d - 9) * (rec.pg - 2));
        out.push_back(v);
    }
    {
        Verdict v = make("R6", "30 - 9 q(X) - d q(Sigma) >= (d-3)(3 pg - 7) (case B)");
        if (!a)
            lower(v, 30 - 9 * rec.q_X - rec.d * rec.q_Sigma, (rec.d - 3) * (3 * rec.pg - 7));
        out.push_back(v);
    }
    {
        Verdict v = make("R7", "K^2 >= 6 pg + 2 q(Sigma) - 14 (case B, d = 2)");
        if (!a && rec.d == 2 && rec.K2)
            lower(v, *rec.K2, 6 * rec.pg + 2 * rec.q_Sigma - 14);
        out.push_back(v);
    }
    {
        Verdict v = make("R8", "K^2 >= 9 pg + 3 q(Sigma) - 21 (case B, d = 3)");
        if (!a && rec.d == 3 && rec.K2)
            lower(v, *rec.K2, 9 * rec.pg + 3 * rec.q_Sigma - 21);
        out.push_back(v);
    }
    return out;
}

std::optional<long long> max_degree(char case_label, long long pg, long long q_X,
                                    long long q_Sigma) {
    if (case_label == 'A') {
        if (pg < 3)
            throw InputError("max_degree requires pg >= 3");
        long long cap = pg > 132 ? 8 : 60;  // Xiao's bound for large pg
        for (long long d = cap; d >= 2; --d)
            if (r5_holds(d, pg, q_X))
                return d;
        return std::nullopt;
    }
    if (case_label == 'B') {
        if (pg < 4)
            throw InputError("case B records require pg >= 4");
        for (long long d = 60; d >= 2; --d)
            if (r6_holds(d, pg, q_X, q_Sigma))
                return d;
        return std::nullopt;
    }
    throw InputError("case must be 'A' or 'B'");
}

std::vector<FeasibilityRow> enumerate_feasible(char case_label, long long d_min, long long d_max) {
    static const std::map<long long, long long> stated_case_b = {
        {4, 9}, {5, 7}, {6, 5}, {7, 4}, {8, 4}, {9, 4}};
    if (d_min < 2 || d_max < d_min)
        throw InputError("bad degree range");
    std::vector<FeasibilityRow> rows;
    for (long long d = d_min; d <= d_max; ++d) {
        FeasibilityRow row;
        row.d = d;
        if (case_label == 'A') {
            if (d <= 9) {
                row.max_pg = std::nullopt;  // unbounded: R5 holds for all pg
            } else {
                long long best = -1;
                for (long long pg = 3; pg <= 4096; ++pg)
                    if (r5_holds(d, pg, 0))
                        best = pg;
                    else
                        break;
                row.max_pg = best >= 3 ? std::optional<long long>(best) : std::nullopt;
            }
        } else {
            if (d <= 3) {
                row.max_pg = std::nullopt;  // R6 is vacuous: pg unbounded
            } else {
                long long best = -1;
                for (long long pg = 4; pg <= 4096; ++pg)
                    if (r6_holds(d, pg, 0, 0))
                        best = pg;
                    else
                        break;
                if (best >= 4)
                    row.max_pg = best;
            }
            auto it = stated_case_b.find(d);
            if (it != stated_case_b.end()) {
                row.stated_pg = it->second;
                row.discrepancy = !row.max_pg || *row.max_pg != it->second;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace abelcover
