#include "dirseq/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dirseq {

namespace {

std::string fmt(const char* what, int i, int k) {
    std::ostringstream os;
    os << what << " i=" << i << " k=" << k;
    return os.str();
}

}  // namespace

int crossing_point_position(int n, int d, int k, int j, DescentVariant variant) {
    if (!(1 <= k && k <= d && 1 <= d && d < n && 0 <= j && j <= 2 * n))
        fail("InternalInconsistency", "position formula parameters out of range");
    int value = 0;
    bool have = false;
    auto put = [&](int x) {
        if (have && value != x)
            fail("InternalInconsistency",
                 "case boundary disagreement at j=" + std::to_string(j) + ": " +
                     std::to_string(value) + " vs " + std::to_string(x));
        value = x;
        have = true;
    };
    if (j == 0) put(n - d + k);
    if (1 <= j && j <= k) put(n + d - k + 1);
    if (k + 1 <= j && j <= k + n - d) put(n + d - 2 * k + j + 1);
    if (k + n - d <= j && j <= n + d - k + 1) put(2 * n - k + 1);
    if (n + d - k + 1 <= j && j <= 2 * n - k + 1)
        put(variant == DescentVariant::Stepwise ? 3 * n + d - 2 * k + 2 - j
                                                : 3 * n + d - 2 * k + 2);
    if (2 * n - k + 1 <= j && j <= 2 * n) put(n + d - k + 1);
    if (!have) fail("InternalInconsistency", "no case covers j=" + std::to_string(j));
    if (value < 1 || value > 2 * n)
        fail("InternalInconsistency",
             "position " + std::to_string(value) + " outside [1, 2n] at j=" + std::to_string(j));
    return value;
}

int window_position(int n, int d, int delta, int k, int m, DescentVariant variant) {
    int j = m - delta;
    if (j >= 0) return crossing_point_position(n, d, k, j, variant);
    // pi_m is the reversal of pi_{m+2n}; positions mirror.
    return 2 * n + 1 - crossing_point_position(n, d, k, j + 2 * n, variant);
}

std::string expected_crossing_path(int n, int d, int delta, int k) {
    auto run = [](std::string& s, char c, int count) { s.append(static_cast<std::size_t>(count), c); };
    std::string w;  // path word starting at the point's own crossing move
    w.push_back('C');
    run(w, 'P', k - 1);
    run(w, 'R', n - d);
    run(w, 'P', 2 * (d - k) + 1);
    run(w, 'L', n - d);
    run(w, 'P', k - 1);
    std::string wbar = w;  // preceding period: right and left jumps exchange
    for (char& c : wbar) c = (c == 'R') ? 'L' : (c == 'L' ? 'R' : c);
    std::string window = wbar.substr(wbar.size() - static_cast<std::size_t>(delta));
    window += w.substr(0, static_cast<std::size_t>(2 * n - delta));
    return window;
}

HalfPeriod dc_closed_form_variant(const CentralSignature& d, DescentVariant variant) {
    const int n = d.half_points();
    const int t = d.degree();
    const auto delta = d.offsets();

    // Canonical labels read off pi_0 = (1..n, -n..-1).
    auto label_at = [&](int pos) { return pos <= n ? pos : -(2 * n + 1 - pos); };
    std::vector<std::vector<Label>> s(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        s[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(d.entries[static_cast<std::size_t>(i)]) + 1);
        for (int k = 1; k <= d.entries[static_cast<std::size_t>(i)]; ++k) {
            int pos0 = window_position(n, d.entries[static_cast<std::size_t>(i)], delta[static_cast<std::size_t>(i)], k, 0, variant);
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = label_at(pos0);
        }
    }

    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(2 * n) + 1);
    for (int m = 0; m <= 2 * n; ++m) {
        Row row(static_cast<std::size_t>(2 * n), 0);
        auto place = [&](int pos, Label p) {
            Label& cell = row[static_cast<std::size_t>(pos - 1)];
            if (cell != 0)
                fail("InternalInconsistency",
                     "row " + std::to_string(m) + " assigns position " + std::to_string(pos) + " twice");
            cell = p;
        };
        for (int i = 0; i < t; ++i) {
            const int di = d.entries[static_cast<std::size_t>(i)];
            for (int k = 1; k <= di; ++k) {
                int pos = window_position(n, di, delta[static_cast<std::size_t>(i)], k, m, variant);
                Label p = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                place(pos, p);
                place(2 * n + 1 - pos, -p);
            }
        }
        rows.push_back(std::move(row));
    }
    return validated(rows);
}

HalfPeriod dc_closed_form(const CentralSignature& d) {
    return dc_closed_form_variant(d, DescentVariant::Stepwise);
}

namespace {

// Circular sequence of a regular 2n-gon: moves alternate between the two
// packings of disjoint adjacent transpositions, phased so the centered pair
// swaps in the first move.
HalfPeriod all_ones_sequence(int t) {
    const int n = t;
    const int N = 2 * n;
    std::vector<Row> rows;
    Row row(static_cast<std::size_t>(N));
    for (int i = 1; i <= n; ++i) row[static_cast<std::size_t>(i - 1)] = i;
    for (int i = 1; i <= n; ++i) row[static_cast<std::size_t>(N - i)] = -i;
    rows.push_back(row);
    for (int m = 0; m < N; ++m) {
        Row next = rows.back();
        int start = ((n + m) % 2 == 0) ? 2 : 1;
        for (int p = start; p + 1 <= N; p += 2)
            std::swap(next[static_cast<std::size_t>(p - 1)], next[static_cast<std::size_t>(p)]);
        rows.push_back(std::move(next));
    }
    return validated(rows);
}

std::vector<int> rotate_left(std::vector<int> v, int r) {
    std::rotate(v.begin(), v.begin() + r, v.end());
    return v;
}

// Insert a fresh conjugate pair next to p = s'_1(1) of the predecessor
// sequence, extending the first crossing substring by one point.  Rows are
// spliced from predecessor rows around the tracked position of the conjugate
// of p; the result is checked against all four axioms.
HalfPeriod grow_first_entry(const HalfPeriod& prev, int d1_new) {
    const int np = prev.size() / 2;
    const int dp = d1_new - 1;  // first entry of the predecessor signature
    const int H = 2 * np;
    const int P = np - dp + 1;  // label and pi_0-position of s'_1(1)
    const Label p = prev.row(0)[static_cast<std::size_t>(P - 1)];
    if (p != P) fail("InternalInconsistency", "predecessor is not canonically labeled");
    const Label pbar = -p;
    const Label fresh = np + 1;

    auto half = [&](int row_idx, int from, int to) {
        Row out;
        for (int q = from; q <= to; ++q)
            out.push_back(prev.row(row_idx)[static_cast<std::size_t>(q - 1)]);
        return out;
    };
    auto append = [](Row& dst, const Row& src) { dst.insert(dst.end(), src.begin(), src.end()); };

    std::vector<Row> rows;
    for (int i = 0; i <= 2 * (np + 1); ++i) {
        Row h;
        if (i == 0) {
            h = half(0, 1, P);
            h.push_back(fresh);
            append(h, half(0, P + 1, np));
        } else if (i <= 2) {
            h = half(i, 1, P);
            h.push_back(-fresh);
            append(h, half(i, P + 1, np));
        } else if (i <= P) {
            int qi = prev.position(i, pbar);
            int qm = prev.position(i - 1, pbar);
            h = half(i, 1, qi + 1);
            h.push_back(-fresh);
            append(h, half(i - 1, qm + 1, np));
        } else if (i <= P + 2 * dp) {
            h.push_back(pbar);
            h.push_back(-fresh);
            append(h, half(i - 1, 2, np));
        } else if (i <= H + 1) {
            int q2 = prev.position(i - 2, pbar);
            int q1 = prev.position(i - 1, pbar);
            h = half(i - 2, 1, q2 + 1);
            h.push_back(-fresh);
            append(h, half(i - 1, q1 + 1, np));
        } else {  // i == 2*(np + 1)
            h = half(H, 1, P);
            h.push_back(-fresh);
            append(h, half(H, P + 1, np));
        }
        Row full = h;
        for (int q = np + 1; q >= 1; --q) full.push_back(-h[static_cast<std::size_t>(q - 1)]);
        rows.push_back(std::move(full));
    }
    return canonical_relabel(validated(rows));
}

}  // namespace

HalfPeriod dc_inductive(const CentralSignature& d) {
    const int t = d.degree();
    if (std::all_of(d.entries.begin(), d.entries.end(), [](int v) { return v == 1; }))
        return all_ones_sequence(t);
    if (d.entries[0] == 1) {
        // Grow a rotation whose first entry exceeds 1, then rotate the
        // window back so the signature reads exactly d.
        int r = 0;
        while (d.entries[static_cast<std::size_t>(r)] == 1) ++r;
        CentralSignature rot(rotate_left(d.entries, r));
        HalfPeriod built = dc_inductive(rot);
        int back = rot.offsets()[static_cast<std::size_t>(t - r)];
        return canonical_relabel(rotate(built, back));
    }
    std::vector<int> prev_entries = d.entries;
    prev_entries[0] -= 1;
    HalfPeriod prev = dc_inductive(CentralSignature(std::move(prev_entries)));
    return grow_first_entry(prev, d.entries[0]);
}

namespace {

// Shared precondition checks; returns the labels s_i(k) read off the rows.
std::vector<std::vector<Label>> crossing_labels(const HalfPeriod& seq,
                                                const CentralSignature& d) {
    const int n = seq.size() / 2;
    if (seq.size() % 2 != 0 || !seq.centrally_symmetric() ||
        !seq.noncentral_general_position() || !seq.even_near_critical())
        fail("PreconditionViolated",
             "verifier needs an even-near-critical centrally symmetric sequence "
             "in noncentral general position");
    if (central_signature(seq).entries != d.entries)
        fail("PreconditionViolated", "sequence signature differs from supplied signature");
    const auto delta = d.offsets();
    const auto& crossings = seq.crossing_moves();
    for (int i = 0; i < d.degree(); ++i)
        if (crossings[static_cast<std::size_t>(i)].first != delta[static_cast<std::size_t>(i)])
            fail("PreconditionViolated", "first move must contain a crossing switch");
    std::vector<std::vector<Label>> s(static_cast<std::size_t>(d.degree()));
    for (int i = 0; i < d.degree(); ++i) {
        const int di = d.entries[static_cast<std::size_t>(i)];
        const Row& before = seq.row(delta[static_cast<std::size_t>(i)]);
        s[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(di) + 1);
        for (int k = 1; k <= di; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                before[static_cast<std::size_t>(n - di + k - 1)];
    }
    return s;
}

std::string swap_rl(std::string w) {
    for (char& c : w) c = (c == 'R') ? 'L' : (c == 'L' ? 'R' : c);
    return w;
}

}  // namespace

VerifyReport verify_paths(const HalfPeriod& seq, const CentralSignature& d) {
    VerifyReport report;
    const int n = seq.size() / 2;
    const auto delta = d.offsets();
    const auto s = crossing_labels(seq, d);
    const auto& conj = *seq.pairing();
    for (int i = 0; i < d.degree(); ++i) {
        const int di = d.entries[static_cast<std::size_t>(i)];
        for (int k = 1; k <= di; ++k) {
            Label p = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            std::string expected = expected_crossing_path(n, di, delta[static_cast<std::size_t>(i)], k);
            std::string actual = point_path(seq, p);
            if (actual != expected)
                report.mismatches.push_back(fmt("path", i + 1, k) + " label " +
                                            std::to_string(p) + ": expected " + expected +
                                            ", got " + actual);
            std::string actual_conj = point_path(seq, conj.at(p));
            if (actual_conj != swap_rl(expected))
                report.mismatches.push_back(fmt("conjugate path", i + 1, k) + " label " +
                                            std::to_string(conj.at(p)) + ": expected " +
                                            swap_rl(expected) + ", got " + actual_conj);
        }
    }
    return report;
}

VerifyReport verify_move_coincidences(const HalfPeriod& seq, const CentralSignature& d) {
    VerifyReport report;
    const int n = seq.size() / 2;
    const int t = d.degree();
    const auto delta = d.offsets();
    const auto s = crossing_labels(seq, d);
    const auto& conj = *seq.pairing();

    auto mod = [&](long long x) { return static_cast<int>(((x % (2 * n)) + 2 * n) % (2 * n)); };
    auto position_in = [&](const Row& row, Label p) {
        for (int q = 0; q < 2 * n; ++q)
            if (row[static_cast<std::size_t>(q)] == p) return q + 1;
        return 0;
    };
    auto check_transposition = [&](int m, Label a, Label b, const char* what, int i, int k) {
        Row row = seq.period_row(m);
        Move mv = seq.period_move(m);
        int pa = position_in(row, a);
        int pb = position_in(row, b);
        const Block* blk = mv.block_containing(pa);
        bool ok = blk && blk->length() == 2 && blk->contains(pb);
        if (!ok)
            report.mismatches.push_back(fmt(what, i, k) + ": pair {" + std::to_string(a) +
                                        "," + std::to_string(b) + "} not a transposition of move " +
                                        std::to_string(m));
    };

    // (a) crossing switch of s_i sits at move delta_i.
    for (int i = 0; i < t; ++i) {
        const int di = d.entries[static_cast<std::size_t>(i)];
        Move mv = seq.period_move(delta[static_cast<std::size_t>(i)]);
        bool found = false;
        for (const Block& b : mv.blocks)
            if (b.centered(2 * n) && b.length() == 2 * di) found = true;
        if (!found)
            report.mismatches.push_back(fmt("crossing", i + 1, 0) + ": no centered block of size " +
                                        std::to_string(2 * di) + " at move " +
                                        std::to_string(delta[static_cast<std::size_t>(i)]));
    }

    // (b), (c) transposition move indices for points of distinct substrings.
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            int sum_after = 0;  // d_{i+1} + ... + d_j
            for (int r = i + 1; r <= j; ++r) sum_after += d.entries[static_cast<std::size_t>(r)];
            int sum_from = 0;  // d_i + ... + d_{j-1}
            for (int r = i; r <= j - 1; ++r) sum_from += d.entries[static_cast<std::size_t>(r)];
            for (int k = 1; k <= d.entries[static_cast<std::size_t>(i)]; ++k) {
                for (int l = 1; l <= d.entries[static_cast<std::size_t>(j)]; ++l) {
                    Label a = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                    Label b = s[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
                    int m1 = mod(delta[static_cast<std::size_t>(i)] + sum_after + k - l);
                    check_transposition(m1, a, conj.at(b), "mixed transposition", i + 1, k);
                    check_transposition(m1, conj.at(a), b, "mixed transposition conj", i + 1, k);
                    int m2 = mod(n + delta[static_cast<std::size_t>(i)] + sum_from + l - k);
                    check_transposition(m2, a, b, "direct transposition", i + 1, k);
                    check_transposition(m2, conj.at(a), conj.at(b), "direct transposition conj", i + 1, k);
                }
            }
        }
    }
    return report;
}

}  // namespace dirseq
