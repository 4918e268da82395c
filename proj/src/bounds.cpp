#include "cwc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwc/lex.hpp"

namespace cwc {

namespace {

bool special_branch(int n, int q) { return n % 6 == 5 && q % 3 != 1; }

void check_params(int n, int q) {
    if (n < 3 || q < 2) throw std::invalid_argument("bounds: need n >= 3 and q >= 2");
}

}  // namespace

std::int64_t u_q(int n, int q) {
    check_params(n, q);
    const std::int64_t base =
        static_cast<std::int64_t>(q - 1) * n * ((n - 1) / 2) / 3;
    return special_branch(n, q) ? base - 1 : base;
}

std::int64_t upper_bound(int n, int q) {
    return std::min(u_q(n, q), binomial(n, 3));
}

std::int64_t optimal_size(int n, int q) { return upper_bound(n, q); }

BoundReport bound_report(int n, int q) {
    check_params(n, q);
    BoundReport r;
    r.n = n;
    r.q = q;
    r.u_q_n = u_q(n, q);
    r.binom_n_3 = binomial(n, 3);
    r.main_value = std::min(r.u_q_n, r.binom_n_3);
    r.case_tag = special_branch(n, q) ? "n%6==5 and q%3!=1" : "otherwise";
    return r;
}

}  // namespace cwc
