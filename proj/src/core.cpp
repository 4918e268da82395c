#include "cwc/core.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace cwc {

Codeword::Codeword(std::vector<int> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), q_(alphabet_size) {
    if (q_ < 2) throw std::invalid_argument("Codeword: alphabet size must be >= 2");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const int s = symbols_[i];
        if (s < 0 || s >= q_) throw std::invalid_argument("Codeword: symbol out of range [0, q-1]");
        if (s != 0) support_.push_back(static_cast<int>(i) + 1);
    }
}

int hamming_distance(const Codeword& u, const Codeword& v) {
    if (u.length() != v.length())
        throw std::invalid_argument("hamming_distance: words must have equal length");
    int d = 0;
    for (int i = 0; i < u.length(); ++i)
        if (u.symbols()[i] != v.symbols()[i]) ++d;
    return d;
}

int support_intersection_size(const Codeword& u, const Codeword& v) {
    if (u.length() != v.length())
        throw std::invalid_argument("support_intersection_size: words must have equal length");
    const auto& a = u.support();
    const auto& b = v.support();
    int i = 0, j = 0, k = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] == b[j]) {
            ++k;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return k;
}

namespace {

struct Tri {
    int a, b, c;
};

int tri_common(const Tri& u, const Tri& v, int* common) {
    int cnt = 0;
    const int ua[3] = {u.a, u.b, u.c};
    const int va[3] = {v.a, v.b, v.c};
    for (int x : ua)
        for (int y : va)
            if (x == y) common[cnt++] = x;
    return cnt;
}

}  // namespace

VerifyReport verify_code(const ConstantWeightCode& c) {
    const int m = static_cast<int>(c.words.size());
    if (m == 0) return {false, "code is empty", -1, -1};

    for (int i = 0; i < m; ++i) {
        const Codeword& u = c.words[i];
        if (u.length() != c.n)
            return {false, "codeword length differs from declared n", i, -1};
        for (int s : u.symbols())
            if (s >= c.q)
                return {false, "codeword symbol exceeds declared alphabet", i, -1};
        if (u.weight() != c.w)
            return {false, "codeword weight differs from declared w", i, -1};
    }

    {
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (c.words[x].symbols() != c.words[y].symbols())
                return c.words[x].symbols() < c.words[y].symbols();
            return x < y;
        });
        for (int i = 0; i + 1 < m; ++i)
            if (c.words[order[i]].symbols() == c.words[order[i + 1]].symbols()) {
                int a = std::min(order[i], order[i + 1]);
                int b = std::max(order[i], order[i + 1]);
                return {false, "duplicate codeword", a, b};
            }
    }

    if (c.d <= 0) return {};

    if (c.w == 3 && c.d == 4) {
        // Weight-3 pairs: distance = 2*(3-k) + (differing shared values) with
        // k the support intersection size, so k <= 1 already implies d >= 4.
        std::vector<Tri> supp(m);
        for (int i = 0; i < m; ++i) {
            const auto& s = c.words[i].support();
            supp[i] = {s[0], s[1], s[2]};
        }
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                int common[3];
                const int k = tri_common(supp[i], supp[j], common);
                if (k <= 1) continue;
                if (k == 3)
                    return {false, "two codewords share a support (distance <= 3)", i, j};
                for (int t = 0; t < 2; ++t)
                    if (c.words[i].symbol(common[t]) == c.words[j].symbol(common[t]))
                        return {false, "distance below declared d", i, j};
            }
        }
        return {};
    }

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (hamming_distance(c.words[i], c.words[j]) < c.d)
                return {false, "distance below declared d", i, j};
    return {};
}

std::optional<int> min_distance(const ConstantWeightCode& c) {
    const int m = static_cast<int>(c.words.size());
    if (m < 2) return std::nullopt;

    int best = c.n + 1;
    if (c.w == 3 && std::all_of(c.words.begin(), c.words.end(),
                                [](const Codeword& u) { return u.weight() == 3; })) {
        std::vector<Tri> supp(m);
        for (int i = 0; i < m; ++i) {
            const auto& s = c.words[i].support();
            supp[i] = {s[0], s[1], s[2]};
        }
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                int common[3];
                const int k = tri_common(supp[i], supp[j], common);
                if (k <= 1 && best <= 4) continue;  // such pairs cannot go below 4
                int diffs = 0;
                for (int t = 0; t < k; ++t)
                    if (c.words[i].symbol(common[t]) != c.words[j].symbol(common[t])) ++diffs;
                best = std::min(best, 2 * (3 - k) + diffs);
            }
        }
        return best;
    }

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            best = std::min(best, hamming_distance(c.words[i], c.words[j]));
    return best;
}

void write_cwcode(std::ostream& out, const ConstantWeightCode& c) {
    out << "cwcode 1\n";
    out << "n=" << c.n << " q=" << c.q << " w=" << c.w << " d=" << c.d << "\n";
    for (const auto& word : c.words) {
        for (int i = 0; i < c.n; ++i) {
            if (i) out << ' ';
            out << word.symbols()[i];
        }
        out << '\n';
    }
}

namespace {

int parse_kv(const std::string& token, const std::string& key) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        throw std::invalid_argument("cwcode: malformed header, expected " + key + "=<int>");
    std::size_t pos = 0;
    int v = std::stoi(token.substr(key.size() + 1), &pos);
    if (pos != token.size() - key.size() - 1)
        throw std::invalid_argument("cwcode: malformed header value for " + key);
    return v;
}

std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

ConstantWeightCode read_cwcode(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || chomp(line) != "cwcode 1")
        throw std::invalid_argument("cwcode: missing 'cwcode 1' header");
    if (!std::getline(in, line)) throw std::invalid_argument("cwcode: missing parameter line");
    std::istringstream hdr(chomp(line));
    std::string tn, tq, tw, td;
    if (!(hdr >> tn >> tq >> tw >> td))
        throw std::invalid_argument("cwcode: malformed parameter line");
    ConstantWeightCode c;
    c.n = parse_kv(tn, "n");
    c.q = parse_kv(tq, "q");
    c.w = parse_kv(tw, "w");
    c.d = parse_kv(td, "d");
    if (c.n < 1 || c.q < 2) throw std::invalid_argument("cwcode: invalid parameters");

    while (std::getline(in, line)) {
        line = chomp(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::vector<int> symbols;
        symbols.reserve(c.n);
        int v;
        while (row >> v) symbols.push_back(v);
        if (!row.eof()) throw std::invalid_argument("cwcode: non-integer token in codeword line");
        if (static_cast<int>(symbols.size()) != c.n)
            throw std::invalid_argument("cwcode: codeword line has wrong number of symbols");
        c.words.emplace_back(std::move(symbols), c.q);
    }
    return c;
}

void save_cwcode(const std::string& path, const ConstantWeightCode& c) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open file for writing: " + path);
    write_cwcode(f, c);
}

ConstantWeightCode load_cwcode(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    return read_cwcode(f);
}

}  // namespace cwc
