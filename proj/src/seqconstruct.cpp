#include "cwc/seqconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cwc {

FillMatrix build_fill_matrix(int n) {
    if (n < 3) throw std::invalid_argument("build_fill_matrix: need n >= 3");
    FillMatrix m;
    m.n_ = n;
    m.q_ = 2;
    m.filled_ = false;
    m.supports_ = enumerate_ksubsets(n, 3);
    m.rows_.reserve(m.supports_.size());
    for (const auto& s : m.supports_) {
        std::vector<int> row(n, 0);
        for (int e : s.elements()) row[e - 1] = 1;
        m.rows_.push_back(std::move(row));
    }
    return m;
}

FillMatrix fill(const FillMatrix& m, const FillSequence& s) {
    if (m.filled()) throw std::invalid_argument("fill: matrix is already filled");
    const std::int64_t want = binomial(m.n() - 1, 2);
    if (static_cast<std::int64_t>(s.entries.size()) != want)
        throw std::invalid_argument("fill: sequence length must be C(n-1,2)");
    if (s.q < 2) throw std::invalid_argument("fill: sequence alphabet must be >= 2");
    for (int e : s.entries)
        if (e < 1 || e > s.q - 1)
            throw std::invalid_argument("fill: sequence entries must lie in [1, q-1]");

    FillMatrix out = m;
    out.q_ = s.q;
    out.filled_ = true;
    for (int j = 0; j < m.n(); ++j) {
        std::size_t t = 0;
        for (auto& row : out.rows_)
            if (row[j] != 0) row[j] = s.entries[t++];
    }
    return out;
}

FillSequence special_sequence_base(int q) {
    if (q < 3) throw std::invalid_argument("special_sequence_base: need q >= 3");
    FillSequence s;
    s.q = q;
    s.entries.reserve(static_cast<std::size_t>(binomial(q - 1, 2)));
    std::vector<int> seg(q - 2);
    std::iota(seg.begin(), seg.end(), 0);
    for (int t = q - 2; t >= 1; --t) {
        s.entries.insert(s.entries.end(), seg.begin(), seg.begin() + t);
        for (int i = 0; i + 1 < t; ++i) seg[i] = (seg[i] + 2) % (q - 1);
        seg.resize(std::max(t - 1, 0));
    }
    return s;
}

FillSequence special_sequence(int q) {
    FillSequence s = special_sequence_base(q);
    for (int& e : s.entries) ++e;
    return s;
}

ConstantWeightCode code_of(const FillMatrix& m) {
    if (!m.filled()) throw std::invalid_argument("code_of: matrix is not filled");
    ConstantWeightCode c;
    c.n = m.n();
    c.q = m.q();
    c.w = 3;
    c.words.reserve(m.rows().size());
    for (const auto& row : m.rows()) c.words.emplace_back(row, m.q());
    c.d = min_distance(c).value_or(0);
    return c;
}

SpecialCheck is_special_sequence(int q, const FillSequence& s) {
    const FillMatrix filled = fill(build_fill_matrix(q), s);
    const int n = filled.n();
    // Every pair of rows with |supp ∩ supp| = 2 shares exactly one
    // coordinate pair, so bucket rows by the pairs inside their support.
    std::vector<std::vector<std::int64_t>> bucket(
        static_cast<std::size_t>(binomial(n, 2)));
    auto pair_index = [n](int a, int b) {  // a < b, 1-based
        return static_cast<std::size_t>(rank(KSubset(n, {a, b})) - 1);
    };
    const auto& rows = filled.rows();
    for (std::int64_t r = 0; r < filled.row_count(); ++r) {
        const auto& e = filled.supports()[r].elements();
        bucket[pair_index(e[0], e[1])].push_back(r);
        bucket[pair_index(e[0], e[2])].push_back(r);
        bucket[pair_index(e[1], e[2])].push_back(r);
    }
    for (std::size_t p = 0; p < bucket.size(); ++p) {
        const auto pair = unrank(n, 2, static_cast<std::int64_t>(p) + 1).elements();
        const auto& rs = bucket[p];
        for (std::size_t i = 0; i < rs.size(); ++i) {
            for (std::size_t j = i + 1; j < rs.size(); ++j) {
                const auto& u = rows[rs[i]];
                const auto& v = rows[rs[j]];
                if (u[pair[0] - 1] == v[pair[0] - 1] || u[pair[1] - 1] == v[pair[1] - 1])
                    return {false, rs[i] + 1, rs[j] + 1};
            }
        }
    }
    return {};
}

RowMatrix move_column_front(const FillMatrix& m, int j) {
    if (j < 1 || j > m.n()) throw std::invalid_argument("move_column_front: column out of range");
    RowMatrix out;
    out.n = m.n();
    out.rows.reserve(m.rows().size());
    for (const auto& row : m.rows()) {
        std::vector<int> r;
        r.reserve(m.n());
        r.push_back(row[j - 1]);
        for (int c = 0; c < m.n(); ++c)
            if (c != j - 1) r.push_back(row[c]);
        out.rows.push_back(std::move(r));
    }
    return out;
}

RowMatrix reorder(const RowMatrix& mj) {
    const int n = mj.n;
    if (n < 3 || static_cast<std::int64_t>(mj.rows.size()) != binomial(n, 3))
        throw std::invalid_argument("reorder: expected C(n,3) rows of width n");
    const std::int64_t nonzero_want = binomial(n - 1, 2);
    std::int64_t nonzero = 0;
    for (const auto& row : mj.rows)
        if (row[0] != 0) ++nonzero;
    if (nonzero != nonzero_want)
        throw std::invalid_argument("reorder: first column must hold C(n-1,2) nonzero entries");

    RowMatrix out = mj;
    auto& rows = out.rows;
    const std::int64_t total = static_cast<std::int64_t>(rows.size());
    const std::int64_t cap = total * total;  // each splice removes an inversion
    for (std::int64_t iter = 0;; ++iter) {
        if (iter > cap) throw std::runtime_error("reorder: iteration cap exceeded");
        std::int64_t s = -1, t = -1;
        for (std::int64_t i = 0; i < total; ++i) {
            if (s < 0 && rows[i][0] == 0) s = i;
            if (s >= 0 && i > s && rows[i][0] != 0) {
                t = i;
                break;
            }
        }
        if (s < 0 || t < 0) break;  // nonzeros on top, zeros below
        std::rotate(rows.begin() + s, rows.begin() + t, rows.begin() + t + 1);
    }
    return out;
}

FrontFillReport front_fill_distinct(int q) {
    if (q < 3) throw std::invalid_argument("front_fill_distinct: need q >= 3");
    const FillSequence y = special_sequence(q);
    // Supports containing point 1 occupy rows 1..C(q-1,2) of M(q), so the
    // first-column fill of row r is just y_r. Group those rows by their
    // second support point and demand distinct values within each group.
    const auto supports = enumerate_ksubsets(q, 3);
    const std::int64_t front = binomial(q - 1, 2);
    std::vector<std::vector<std::pair<int, std::int64_t>>> by_point(q + 1);
    for (std::int64_t r = 0; r < front; ++r) {
        const auto& e = supports[r].elements();
        by_point[e[1]].emplace_back(y.entries[r], r + 1);
        by_point[e[2]].emplace_back(y.entries[r], r + 1);
    }
    for (int x = 2; x <= q; ++x) {
        auto group = by_point[x];
        std::sort(group.begin(), group.end());
        for (std::size_t i = 0; i + 1 < group.size(); ++i)
            if (group[i].first == group[i + 1].first)
                return {false, x, std::min(group[i].second, group[i + 1].second),
                        std::max(group[i].second, group[i + 1].second)};
    }
    return {};
}

std::string sequence_to_string(const FillSequence& s, bool compact) {
    std::ostringstream out;
    if (compact) {
        if (s.q > 10)
            throw std::invalid_argument("sequence_to_string: compact form requires q <= 10");
        for (int e : s.entries) out << e;
    } else {
        for (std::size_t i = 0; i < s.entries.size(); ++i) {
            if (i) out << ' ';
            out << s.entries[i];
        }
    }
    return out.str();
}

FillSequence sequence_from_string(int q, const std::string& text) {
    if (q < 2) throw std::invalid_argument("sequence_from_string: need q >= 2");
    FillSequence s;
    s.q = q;
    const bool has_space = text.find(' ') != std::string::npos;
    if (!has_space && q <= 10 && !text.empty() &&
        std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        for (char c : text) s.entries.push_back(c - '0');
    } else {
        std::istringstream in(text);
        int v;
        while (in >> v) s.entries.push_back(v);
        if (!in.eof()) throw std::invalid_argument("sequence_from_string: non-integer token");
    }
    for (int e : s.entries)
        if (e < 1 || e > q - 1)
            throw std::invalid_argument("sequence_from_string: entry out of range [1, q-1]");
    return s;
}

}  // namespace cwc
