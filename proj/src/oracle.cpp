#include "cwc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "cwc/lex.hpp"

namespace cwc {

namespace {

using Clock = std::chrono::steady_clock;

// Compatibility graph over all weight-3 words of H_q(n,3). Vertex id =
// support_rank * (q-1)^3 + value_tuple_index, value tuples in ascending
// lexicographic order; vertex 0 is (1,1,1,0,...,0).
struct Graph {
    int n = 0, q = 0;
    int vals = 0;
    int V = 0, W = 0;
    std::vector<KSubset> supports;
    std::vector<std::uint64_t> adj;         // V rows of W words
    std::vector<std::uint64_t> point_mask;  // n rows of W words

    const std::uint64_t* row(int v) const { return adj.data() + static_cast<std::size_t>(v) * W; }
    std::uint64_t* row(int v) { return adj.data() + static_cast<std::size_t>(v) * W; }
};

inline void set_bit(std::uint64_t* words, int bit) { words[bit >> 6] |= 1ULL << (bit & 63); }

inline void decode_values(int t, int q, int v3[3]) {
    const int b = q - 1;
    v3[2] = t % b + 1;
    t /= b;
    v3[1] = t % b + 1;
    v3[0] = t / b + 1;
}

Graph build_graph(int n, int q) {
    Graph g;
    g.n = n;
    g.q = q;
    g.supports = enumerate_ksubsets(n, 3);
    const int S = static_cast<int>(g.supports.size());
    const int b = q - 1;
    g.vals = b * b * b;
    const std::int64_t v64 = static_cast<std::int64_t>(S) * g.vals;
    if (v64 > 20000)
        throw std::invalid_argument(
            "exact_max_size: instance too large for the exact search "
            "(C(n,3)*(q-1)^3 vertices exceed 20000)");
    g.V = static_cast<int>(v64);
    g.W = (g.V + 63) / 64;
    g.adj.assign(static_cast<std::size_t>(g.V) * g.W, 0);
    g.point_mask.assign(static_cast<std::size_t>(n) * g.W, 0);

    for (int s = 0; s < S; ++s)
        for (int e : g.supports[s].elements())
            for (int t = 0; t < g.vals; ++t)
                set_bit(g.point_mask.data() + static_cast<std::size_t>(e - 1) * g.W,
                        s * g.vals + t);

    // Values at the two shared coordinates, per tuple index, reused below.
    std::vector<int> va0(g.vals), va1(g.vals);
    std::vector<int> vb0(g.vals), vb1(g.vals);

    for (int sa = 0; sa < S; ++sa) {
        const auto& ea = g.supports[sa].elements();
        for (int sb = sa + 1; sb < S; ++sb) {
            const auto& eb = g.supports[sb].elements();
            int pa[3], pb[3], k = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (ea[i] == eb[j]) {
                        pa[k] = i;
                        pb[k] = j;
                        ++k;
                    }
            if (k <= 1) {
                // Distance >= 4 regardless of values: connect both blocks.
                for (int ta = 0; ta < g.vals; ++ta) {
                    std::uint64_t* ra = g.row(sa * g.vals + ta);
                    for (int tb = 0; tb < g.vals; ++tb) set_bit(ra, sb * g.vals + tb);
                }
                for (int tb = 0; tb < g.vals; ++tb) {
                    std::uint64_t* rb = g.row(sb * g.vals + tb);
                    for (int ta = 0; ta < g.vals; ++ta) set_bit(rb, sa * g.vals + ta);
                }
                continue;
            }
            if (k == 3) continue;  // same support is impossible for sa != sb... distinct supports share <= 2
            // k == 2: compatible iff values differ at both shared coordinates.
            for (int t = 0; t < g.vals; ++t) {
                int v3[3];
                decode_values(t, q, v3);
                va0[t] = v3[pa[0]];
                va1[t] = v3[pa[1]];
                vb0[t] = v3[pb[0]];
                vb1[t] = v3[pb[1]];
            }
            for (int ta = 0; ta < g.vals; ++ta) {
                std::uint64_t* ra = g.row(sa * g.vals + ta);
                for (int tb = 0; tb < g.vals; ++tb) {
                    if (va0[ta] != vb0[tb] && va1[ta] != vb1[tb]) {
                        set_bit(ra, sb * g.vals + tb);
                        set_bit(g.row(sb * g.vals + tb), sa * g.vals + ta);
                    }
                }
            }
        }
    }
    return g;
}

Codeword decode_word(const Graph& g, int v) {
    const KSubset& s = g.supports[v / g.vals];
    int v3[3];
    decode_values(v % g.vals, g.q, v3);
    std::vector<int> symbols(g.n, 0);
    for (int i = 0; i < 3; ++i) symbols[s.elements()[i] - 1] = v3[i];
    return Codeword(std::move(symbols), g.q);
}

struct Searcher {
    const Graph& g;
    Clock::time_point deadline;
    bool timed_out = false;
    std::uint64_t nodes = 0;
    int best = 0;
    std::vector<int> best_clique;
    std::vector<int> cur;
    std::vector<int> used_point;  // 1-based
    int per_point_budget;

    struct Seg {
        int lo_w, hi_w;
        std::uint64_t lo_mask, hi_mask;
    };
    std::vector<Seg> segs;  // bit span of each support block

    struct Scratch {
        std::vector<int> order;
        std::vector<int> color;
        std::vector<std::uint64_t> cmask;  // ncolors * W
        std::vector<std::uint64_t> child;
    };
    std::vector<Scratch> scratch;

    explicit Searcher(const Graph& graph, Clock::time_point dl)
        : g(graph), deadline(dl), used_point(graph.n + 1, 0),
          per_point_budget((graph.q - 1) * ((graph.n - 1) / 2)) {
        const int S = static_cast<int>(g.supports.size());
        segs.reserve(S);
        for (int s = 0; s < S; ++s) {
            const int lo = s * g.vals, hi = (s + 1) * g.vals - 1;
            Seg sg;
            sg.lo_w = lo >> 6;
            sg.hi_w = hi >> 6;
            sg.lo_mask = ~0ULL << (lo & 63);
            sg.hi_mask = ~0ULL >> (63 - (hi & 63));
            segs.push_back(sg);
        }
        scratch.resize(S + 2);
    }

    static int popcount_words(const std::vector<std::uint64_t>& p) {
        int c = 0;
        for (std::uint64_t w : p) c += std::popcount(w);
        return c;
    }

    int masked_popcount(const std::vector<std::uint64_t>& p, const std::uint64_t* mask) const {
        int c = 0;
        for (int w = 0; w < g.W; ++w) c += std::popcount(p[w] & mask[w]);
        return c;
    }

    // Any chosen word covering point i uses one of (q-1)*floor((n-1)/2)
    // matching slots at i, and each new word consumes three points.
    int point_capacity_bound(const std::vector<std::uint64_t>& p) const {
        std::int64_t cap = 0;
        for (int i = 1; i <= g.n; ++i) {
            const int avail = per_point_budget - used_point[i];
            if (avail <= 0) continue;
            const int cnt =
                masked_popcount(p, g.point_mask.data() + static_cast<std::size_t>(i - 1) * g.W);
            cap += std::min(avail, cnt);
        }
        return static_cast<int>(cap / 3);
    }

    // A clique holds at most one word per support.
    int distinct_supports(const std::vector<std::uint64_t>& p) const {
        int cnt = 0;
        for (const Seg& sg : segs) {
            if (sg.lo_w == sg.hi_w) {
                if (p[sg.lo_w] & sg.lo_mask & sg.hi_mask) ++cnt;
                continue;
            }
            bool hit = (p[sg.lo_w] & sg.lo_mask) != 0;
            for (int w = sg.lo_w + 1; !hit && w < sg.hi_w; ++w) hit = p[w] != 0;
            if (!hit) hit = (p[sg.hi_w] & sg.hi_mask) != 0;
            if (hit) ++cnt;
        }
        return cnt;
    }

    void take(int v) {
        cur.push_back(v);
        for (int e : g.supports[v / g.vals].elements()) ++used_point[e];
    }

    void drop(int v) {
        cur.pop_back();
        for (int e : g.supports[v / g.vals].elements()) --used_point[e];
    }

    void expand(int depth, std::vector<std::uint64_t>& p) {
        ++nodes;
        if ((nodes & 255) == 0 && Clock::now() > deadline) {
            timed_out = true;
            return;
        }
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_clique = cur;
        }
        const int pc = popcount_words(p);
        if (pc == 0 || static_cast<int>(cur.size()) + pc <= best) return;

        int bound = std::min(point_capacity_bound(p), distinct_supports(p));
        if (static_cast<int>(cur.size()) + bound <= best) return;

        // Greedy coloring in ascending vertex order; classes are independent
        // sets, so a clique takes at most one vertex per color.
        Scratch& sc = scratch[depth];
        sc.order.clear();
        sc.color.clear();
        sc.cmask.clear();
        int ncolors = 0;
        std::vector<std::vector<int>> members;
        for (int w = 0; w < g.W; ++w) {
            std::uint64_t bits = p[w];
            while (bits) {
                const int v = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* nv = g.row(v);
                int c = 0;
                for (; c < ncolors; ++c) {
                    const std::uint64_t* cm = sc.cmask.data() + static_cast<std::size_t>(c) * g.W;
                    bool clash = false;
                    for (int x = 0; x < g.W; ++x)
                        if (cm[x] & nv[x]) {
                            clash = true;
                            break;
                        }
                    if (!clash) break;
                }
                if (c == ncolors) {
                    sc.cmask.resize(static_cast<std::size_t>(ncolors + 1) * g.W, 0);
                    members.emplace_back();
                    ++ncolors;
                }
                set_bit(sc.cmask.data() + static_cast<std::size_t>(c) * g.W, v);
                members[c].push_back(v);
            }
        }
        for (int c = 0; c < ncolors; ++c)
            for (int v : members[c]) {
                sc.order.push_back(v);
                sc.color.push_back(c + 1);
            }

        sc.child.assign(g.W, 0);
        for (int idx = static_cast<int>(sc.order.size()) - 1; idx >= 0; --idx) {
            if (static_cast<int>(cur.size()) + sc.color[idx] <= best) return;
            const int v = sc.order[idx];
            const std::uint64_t* nv = g.row(v);
            auto& child = scratch[depth + 1].child;
            child.assign(g.W, 0);
            for (int w = 0; w < g.W; ++w) child[w] = p[w] & nv[w];
            take(v);
            expand(depth + 1, child);
            drop(v);
            if (timed_out) return;
            p[v >> 6] &= ~(1ULL << (v & 63));
        }
    }
};

int greedy_from(const Graph& g, int start, std::vector<int>& out) {
    out.clear();
    out.push_back(start);
    std::vector<std::uint64_t> cand(g.row(start), g.row(start) + g.W);
    for (;;) {
        int v = -1;
        for (int w = 0; w < g.W && v < 0; ++w)
            if (cand[w]) v = (w << 6) + std::countr_zero(cand[w]);
        if (v < 0) break;
        out.push_back(v);
        const std::uint64_t* nv = g.row(v);
        for (int w = 0; w < g.W; ++w) cand[w] &= nv[w];
    }
    return static_cast<int>(out.size());
}

}  // namespace

OracleResult exact_max_size(int n, int q, std::chrono::duration<double> time_limit,
                            bool symmetry_reduction) {
    if (n < 3 || q < 2) throw std::invalid_argument("exact_max_size: need n >= 3 and q >= 2");
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(time_limit);

    const Graph g = build_graph(n, q);
    Searcher s(g, deadline);

    std::vector<int> clique;
    const int starts = std::min(g.V, 256);
    for (int v = 0; v < starts; ++v) {
        if (greedy_from(g, v, clique) > s.best) {
            s.best = static_cast<int>(clique.size());
            s.best_clique = clique;
        }
    }

    std::vector<std::uint64_t> p;
    if (symmetry_reduction) {
        s.take(0);
        p.assign(g.row(0), g.row(0) + g.W);
        s.expand(0, p);
        s.drop(0);
    } else {
        p.assign(g.W, 0);
        for (int v = 0; v < g.V; ++v) set_bit(p.data(), v);
        s.expand(0, p);
    }

    OracleResult r;
    r.n = n;
    r.q = q;
    r.exact_size = s.best;
    r.proved_optimal = !s.timed_out;
    r.nodes_explored = s.nodes;
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.witness.n = n;
    r.witness.q = q;
    r.witness.w = 3;
    for (int v : s.best_clique) r.witness.words.push_back(decode_word(g, v));
    r.witness.d = min_distance(r.witness).value_or(0);
    return r;
}

std::optional<bool> certify_optimal(const ConstantWeightCode& c,
                                    std::chrono::duration<double> time_limit) {
    const OracleResult r = exact_max_size(c.n, c.q, time_limit);
    if (r.proved_optimal) return r.exact_size == static_cast<int>(c.words.size());
    if (r.exact_size > static_cast<int>(c.words.size())) return false;  // witnessed better
    return std::nullopt;
}

}  // namespace cwc
