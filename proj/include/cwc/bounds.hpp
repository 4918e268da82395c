#pragma once

#include <cstdint>
#include <string>

namespace cwc {

/// Closed-form size bound U_q(n) for weight-3 distance-4 codes:
/// floor((q-1) * n * floor((n-1)/2) / 3), minus one exactly when
/// n = 5 (mod 6) and q != 1 (mod 3). Exact integer arithmetic throughout;
/// the subtraction happens after the floor.
std::int64_t u_q(int n, int q);

/// min{ U_q(n), C(n,3) }.
std::int64_t upper_bound(int n, int q);

/// The exact size of an optimal (n,4,3)_q code. Numerically identical to
/// upper_bound; exposed separately so tables can label it as the proven
/// optimum rather than a mere bound.
std::int64_t optimal_size(int n, int q);

struct BoundReport {
    int n = 0;
    int q = 0;
    std::int64_t u_q_n = 0;
    std::int64_t binom_n_3 = 0;
    std::int64_t main_value = 0;
    std::string case_tag;  // "n%6==5 and q%3!=1" or "otherwise"
};

BoundReport bound_report(int n, int q);

}  // namespace cwc
