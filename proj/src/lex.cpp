#include "cwc/lex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cwc {

std::int64_t binomial(std::int64_t m, std::int64_t j) {
    if (j < 0 || j > m) return 0;
    j = std::min(j, m - j);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= j; ++i) r = r * (m - j + i) / i;
    return r;
}

KSubset::KSubset(int n, std::vector<int> elements) : n_(n), elems_(std::move(elements)) {
    if (n_ < 0) throw std::invalid_argument("KSubset: negative ground-set size");
    int prev = 0;
    for (int e : elems_) {
        if (e <= prev) throw std::invalid_argument("KSubset: elements must be strictly increasing and >= 1");
        prev = e;
    }
    if (prev > n_) throw std::invalid_argument("KSubset: element exceeds ground-set size");
}

bool KSubset::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool lex_less(const KSubset& a, const KSubset& b) {
    if (a.n() != b.n() || a.k() != b.k())
        throw std::invalid_argument("lex_less: subsets must share the same (n, k)");
    return a.elements() < b.elements();
}

std::int64_t rank(const KSubset& s) {
    const auto& t = s.elements();
    const int n = s.n();
    const int k = s.k();
    std::int64_t r = 1;
    int prev = 0;
    for (int i = 1; i <= k; ++i) {
        for (int j = prev + 1; j <= t[i - 1] - 1; ++j) r += binomial(n - j, k - i);
        prev = t[i - 1];
    }
    return r;
}

KSubset unrank(int n, int k, std::int64_t r) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("unrank: need 0 <= k <= n");
    if (r < 1 || r > binomial(n, k)) throw std::invalid_argument("unrank: rank out of range");
    std::vector<int> elems;
    elems.reserve(k);
    std::int64_t rem = r - 1;
    int t = 1;
    for (int i = 1; i <= k; ++i) {
        for (;; ++t) {
            const std::int64_t c = binomial(n - t, k - i);
            if (rem < c) break;
            rem -= c;
        }
        elems.push_back(t);
        ++t;
    }
    return KSubset(n, std::move(elems));
}

std::vector<KSubset> enumerate_ksubsets(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("enumerate_ksubsets: need 0 <= k <= n");
    std::vector<KSubset> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    if (k == 0) {
        out.emplace_back(n, std::vector<int>{});
        return out;
    }
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    for (;;) {
        out.emplace_back(n, cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::pair<KSubset, KSubset> delete_common(const KSubset& a, const KSubset& b, int x) {
    if (!a.contains(x) || !b.contains(x))
        throw std::invalid_argument("delete_common: x must lie in both subsets");
    auto strip = [x](const KSubset& s) {
        std::vector<int> e;
        e.reserve(s.k() - 1);
        for (int v : s.elements())
            if (v != x) e.push_back(v);
        return KSubset(s.n(), std::move(e));
    };
    return {strip(a), strip(b)};
}

}  // namespace cwc
