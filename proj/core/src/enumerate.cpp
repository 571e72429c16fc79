#include "dirseq/enumerate.hpp"

#include <algorithm>

#include "dirseq/equivalence.hpp"

namespace dirseq {

namespace {

// Depth-first search state over canonical centrally symmetric permutations.
struct Search {
    int n = 0;                 // half point count
    int N = 0;                 // 2n
    std::vector<int> d;        // crossing sizes in forced order
    std::size_t node_limit = 0;
    std::size_t nodes = 0;

    Row perm;
    std::vector<Row> rows;
    std::vector<bool> switched;        // pair bitmap, indexed idx(a) * N + idx(b)
    std::vector<int> unswitched_of;    // per label: partners not yet switched
    int next_crossing = 0;
    std::vector<Row> found;

    int label_index(Label p) const { return p > 0 ? p - 1 : n - p - 1; }
    bool pair_switched(Label a, Label b) const {
        return switched[static_cast<std::size_t>(label_index(a) * N + label_index(b))];
    }
    void set_pair(Label a, Label b, bool v) {
        switched[static_cast<std::size_t>(label_index(a) * N + label_index(b))] = v;
        switched[static_cast<std::size_t>(label_index(b) * N + label_index(a))] = v;
        int delta = v ? -1 : 1;
        unswitched_of[static_cast<std::size_t>(label_index(a))] += delta;
        unswitched_of[static_cast<std::size_t>(label_index(b))] += delta;
    }

    bool feasible() const {
        const int remaining_moves = N - static_cast<int>(rows.size() - 1);
        if (static_cast<int>(d.size()) - next_crossing > remaining_moves) return false;
        int dmax = 0;
        for (std::size_t i = static_cast<std::size_t>(next_crossing); i < d.size(); ++i)
            dmax = std::max(dmax, d[i]);
        for (Label p : perm) {
            int events = unswitched_of[static_cast<std::size_t>(label_index(p))];
            // A pending crossing bundles up to 2*dmax - 1 partners into one event.
            if (!pair_switched(p, -p) && dmax > 0) events -= 2 * dmax - 2;
            if (events > remaining_moves) return false;
        }
        return true;
    }

    // Candidate transposition starts in the left half, given an optional
    // crossing block of half-size dc (0 = none) in this move.
    void candidate_starts(int dc, std::vector<int>& out) const {
        out.clear();
        const int limit = dc > 0 ? n - dc - 1 : n - 1;
        for (int a = 1; a <= limit; ++a) {
            if (!pair_switched(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(a)]))
                out.push_back(a);
        }
    }

    void apply_transposition(int a, bool undo) {
        // Swap (a, a+1) and the mirrored (N-a, N-a+1); both pairs switch.
        Label x = perm[static_cast<std::size_t>(a - 1)], y = perm[static_cast<std::size_t>(a)];
        std::swap(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(a)]);
        std::swap(perm[static_cast<std::size_t>(N - a - 1)], perm[static_cast<std::size_t>(N - a)]);
        if (!undo) {
            set_pair(x, y, true);
            set_pair(-x, -y, true);
        } else {
            set_pair(y, x, false);
            set_pair(-y, -x, false);
        }
    }

    void apply_crossing(int dc, bool undo) {
        std::reverse(perm.begin() + (n - dc), perm.begin() + (n + dc));
        const int lo = n - dc + 1, hi = n + dc;
        // collect labels currently inside (after reversal the set is the same)
        for (int p = lo; p <= hi; ++p)
            for (int q = p + 1; q <= hi; ++q)
                set_pair(perm[static_cast<std::size_t>(p - 1)], perm[static_cast<std::size_t>(q - 1)], !undo);
    }

    void run() {
        if (++nodes > node_limit) fail("BudgetExceeded", "enumeration node limit reached");
        const int moves_done = static_cast<int>(rows.size() - 1);
        if (moves_done == N) {
            if (next_crossing != static_cast<int>(d.size())) return;
            Row rev(perm.rbegin(), perm.rend());
            if (rev != rows.front()) return;
            for (Label p : perm)
                if (unswitched_of[static_cast<std::size_t>(label_index(p))] != 0) return;
            found.push_back(rows.front());
            for (std::size_t i = 1; i < rows.size(); ++i) found.push_back(rows[i]);
            return;
        }
        if (!feasible()) return;

        // Either this move contains the next crossing block or it does not.
        // The first move must contain one.
        std::vector<int> starts;
        for (int with_crossing = 1; with_crossing >= 0; --with_crossing) {
            if (with_crossing) {
                if (next_crossing >= static_cast<int>(d.size())) continue;
                int dc = d[static_cast<std::size_t>(next_crossing)];
                bool fresh = true;
                for (int p = n - dc + 1; p <= n + dc && fresh; ++p)
                    for (int q = p + 1; q <= n + dc && fresh; ++q)
                        if (pair_switched(perm[static_cast<std::size_t>(p - 1)],
                                          perm[static_cast<std::size_t>(q - 1)]))
                            fresh = false;
                if (!fresh) continue;
                candidate_starts(dc, starts);
                apply_crossing(dc, false);
                ++next_crossing;
                pick_transpositions(starts, 0, 0, true);
                --next_crossing;
                apply_crossing(dc, true);
            } else {
                if (moves_done == 0) continue;  // first move carries crossing 1
                candidate_starts(0, starts);
                pick_transpositions(starts, 0, 0, false);
            }
        }
    }

    // Choose a non-adjacent subset of the candidate starts.  `taken` counts
    // chosen transpositions; the move must be nonempty overall.
    void pick_transpositions(const std::vector<int>& starts, std::size_t from, int taken,
                             bool has_crossing) {
        if (from == starts.size()) {
            if (taken == 0 && !has_crossing) return;
            rows.push_back(perm);
            run();
            rows.pop_back();
            return;
        }
        // skip starts[from]
        pick_transpositions(starts, from + 1, taken, has_crossing);
        // take starts[from], drop the adjacent successor
        int a = starts[static_cast<std::size_t>(from)];
        if (!pair_switched(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(a)])) {
            apply_transposition(a, false);
            std::size_t next = from + 1;
            while (next < starts.size() && starts[next] <= a + 1) ++next;
            pick_transpositions(starts, next, taken + 1, has_crossing);
            apply_transposition(a, true);
        }
    }
};

}  // namespace

EnumerationResult enumerate_dc(const CentralSignature& d, std::size_t node_limit) {
    const int n = d.half_points();
    if (n > 5)
        fail("BudgetExceeded", "enumeration supports signatures with sum <= 5");

    Search search;
    search.n = n;
    search.N = 2 * n;
    search.d = d.entries;
    search.node_limit = node_limit;
    search.perm.resize(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        search.perm[static_cast<std::size_t>(i - 1)] = i;
        search.perm[static_cast<std::size_t>(2 * n - i)] = -i;
    }
    search.rows.push_back(search.perm);
    search.switched.assign(static_cast<std::size_t>(4 * n * n), false);
    search.unswitched_of.assign(static_cast<std::size_t>(2 * n), 2 * n - 1);
    search.run();

    EnumerationResult result;
    std::vector<std::vector<Row>> raw;
    const std::size_t rows_per_seq = static_cast<std::size_t>(2 * n) + 1;
    for (std::size_t at = 0; at < search.found.size(); at += rows_per_seq)
        raw.push_back(std::vector<Row>(search.found.begin() + static_cast<std::ptrdiff_t>(at),
                                       search.found.begin() + static_cast<std::ptrdiff_t>(at + rows_per_seq)));
    result.raw_count = raw.size();
    result.nodes = search.nodes;

    std::vector<HalfPeriod> shift_only;
    for (const auto& rows : raw) {
        HalfPeriod seq = validated(rows);
        bool fresh = true;
        for (const HalfPeriod& rep : result.classes)
            if (equivalent(seq, rep)) {
                fresh = false;
                break;
            }
        if (fresh) result.classes.push_back(seq);
        bool fresh_shift = true;
        for (const HalfPeriod& rep : shift_only)
            if (equivalent_under(seq, rep, false, false)) {
                fresh_shift = false;
                break;
            }
        if (fresh_shift) shift_only.push_back(std::move(seq));
    }
    result.shift_only_classes = shift_only.size();
    return result;
}

}  // namespace dirseq
