#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cwc {

/// Exact binomial coefficient C(m, j); 0 when j < 0 or j > m.
std::int64_t binomial(std::int64_t m, std::int64_t j);

/// A sorted k-subset of [n] = {1, ..., n}. Elements are 1-based and
/// strictly increasing.
class KSubset {
public:
    KSubset(int n, std::vector<int> elements);

    int n() const { return n_; }
    int k() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    bool contains(int x) const;

    bool operator==(const KSubset& o) const { return n_ == o.n_ && elems_ == o.elems_; }

private:
    int n_;
    std::vector<int> elems_;
};

/// Lexicographic order on k-subsets: a precedes b iff the smallest element
/// of the symmetric difference lies in a. For sorted equal-size subsets this
/// is plain elementwise vector order. Returns false on equality.
bool lex_less(const KSubset& a, const KSubset& b);

/// 1-based position of s in the lexicographic enumeration of all k-subsets
/// of [n].
std::int64_t rank(const KSubset& s);

/// Inverse of rank; r must lie in [1, C(n,k)].
KSubset unrank(int n, int k, std::int64_t r);

/// All k-subsets of [n] in lexicographic order.
std::vector<KSubset> enumerate_ksubsets(int n, int k);

/// Removes a common element x from both subsets. Lexicographic order is
/// preserved: a < b implies a\{x} < b\{x}.
std::pair<KSubset, KSubset> delete_common(const KSubset& a, const KSubset& b, int x);

}  // namespace cwc
