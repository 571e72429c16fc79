#include "dirseq/sequence.hpp"

#include <algorithm>

namespace dirseq {

namespace {

Row reversed(const Row& r) { return Row(r.rbegin(), r.rend()); }

// Decompose the difference between two permutations of the same label set
// into reversed blocks.  At the first differing position a, the reversal
// that moved row_next[a-1] there must end exactly where that label sits in
// row_prev; anything else is not a union of disjoint reversals.
std::optional<Move> infer_move(const Row& prev, const Row& next, ValidationIssue& issue) {
    const int n = static_cast<int>(prev.size());
    Move mv;
    int pos = 1;
    while (pos <= n) {
        if (prev[pos - 1] == next[pos - 1]) {
            ++pos;
            continue;
        }
        const Label head = next[pos - 1];
        int end = 0;
        for (int q = pos + 1; q <= n; ++q) {
            if (prev[q - 1] == head) {
                end = q;
                break;
            }
        }
        if (end == 0) {
            issue = {Axiom::Switches, "NotBlockReversal", -1, {head, 0},
                     "label moved without a matching reversal"};
            return std::nullopt;
        }
        for (int q = pos; q <= end; ++q) {
            if (next[q - 1] != prev[pos + end - q - 1]) {
                issue = {Axiom::Switches, "NotBlockReversal", -1, {head, prev[q - 1]},
                         "differing segment is not an exact reversal"};
                return std::nullopt;
            }
        }
        mv.blocks.push_back({pos, end});
        pos = end + 1;
    }
    if (mv.blocks.empty()) {
        issue = {Axiom::Switches, "NotBlockReversal", -1, {0, 0},
                 "consecutive rows are identical (empty move)"};
        return std::nullopt;
    }
    return mv;
}

}  // namespace

std::variant<HalfPeriod, ValidationIssue> validate(const std::vector<Row>& rows) {
    if (rows.size() < 2)
        return ValidationIssue{Axiom::Rows, "NonPermutationRow", -1, {0, 0},
                               "need at least two rows"};
    const int n = static_cast<int>(rows[0].size());
    if (n < 2)
        return ValidationIssue{Axiom::Rows, "NonPermutationRow", -1, {0, 0},
                               "rows must have length >= 2"};

    const std::set<Label> labels(rows[0].begin(), rows[0].end());
    if (static_cast<int>(labels.size()) != n || labels.count(0))
        return ValidationIssue{Axiom::Rows, "NonPermutationRow", 0, {0, 0},
                               "first row is not a set of nonzero labels"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != n ||
            std::set<Label>(rows[i].begin(), rows[i].end()) != labels)
            return ValidationIssue{Axiom::Rows, "NonPermutationRow", static_cast<int>(i),
                                   {0, 0}, "row " + std::to_string(i) +
                                   " is not a permutation of the label set"};
    }

    HalfPeriod hp;
    hp.n_points_ = n;
    hp.rows_ = rows;
    hp.label_set_ = labels;

    // Axiom 3: infer moves; axiom 4: account every pair exactly once.  Move
    // scanning runs before the period check so a pair reversing twice is
    // reported as such even when the tail of the matrix is also wrong.
    std::set<std::pair<Label, Label>> switched;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        ValidationIssue issue;
        auto mv = infer_move(rows[i], rows[i + 1], issue);
        if (!mv) {
            issue.move = static_cast<int>(i);
            return issue;
        }
        for (const Block& b : mv->blocks) {
            for (int p = b.lo; p <= b.hi; ++p) {
                for (int q = p + 1; q <= b.hi; ++q) {
                    Label a = rows[i][p - 1], c = rows[i][q - 1];
                    auto key = std::minmax(a, c);
                    if (!switched.insert(key).second)
                        return ValidationIssue{Axiom::PairOnce, "PairSwitchedTwice",
                                               static_cast<int>(i), key,
                                               "pair reversed by more than one switch"};
                }
            }
        }
        hp.moves_.push_back(std::move(*mv));
    }

    if (rows.back() != reversed(rows.front()))
        return ValidationIssue{Axiom::Period, "LastNotReversalOfFirst", -1, {0, 0},
                               "last row must be the reversal of the first"};

    const std::size_t all_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (switched.size() != all_pairs)
        return ValidationIssue{Axiom::PairOnce, "PairSwitchedTwice", -1, {0, 0},
                               "only " + std::to_string(switched.size()) + " of " +
                               std::to_string(all_pairs) + " pairs switch"};

    // Cached flags: conjugation pairing, noncentral general position, and the
    // centered (crossing) moves in order.
    if (n % 2 == 0) {
        std::map<Label, Label> conj;
        bool ok = true;
        for (int i = 0; i < n / 2 && ok; ++i) {
            Label p = rows[0][static_cast<std::size_t>(i)];
            Label q = rows[0][static_cast<std::size_t>(n - 1 - i)];
            conj[p] = q;
            conj[q] = p;
        }
        for (const Row& r : rows) {
            if (!ok) break;
            for (int i = 0; i < n && ok; ++i)
                if (conj.at(r[static_cast<std::size_t>(i)]) != r[static_cast<std::size_t>(n - 1 - i)])
                    ok = false;
        }
        if (ok) hp.pairing_ = std::move(conj);
    }
    hp.ncgen_ = true;
    for (std::size_t i = 0; i < hp.moves_.size(); ++i) {
        for (const Block& b : hp.moves_[i].blocks) {
            if (b.centered(n))
                hp.crossings_.push_back({static_cast<int>(i), b.length() / 2});
            else if (b.length() != 2)
                hp.ncgen_ = false;
        }
    }

    return hp;
}

HalfPeriod validated(const std::vector<Row>& rows) {
    auto res = validate(rows);
    if (auto* issue = std::get_if<ValidationIssue>(&res))
        fail(issue->code, issue->detail + (issue->move >= 0 ? " (move " + std::to_string(issue->move) + ")" : ""));
    return std::get<HalfPeriod>(std::move(res));
}

Row HalfPeriod::period_row(long long m) const {
    const int h = length();
    long long r = ((m % (2 * h)) + 2 * h) % (2 * h);
    if (r <= h) return rows_[static_cast<std::size_t>(r)];
    Row rr = rows_[static_cast<std::size_t>(r - h)];
    std::reverse(rr.begin(), rr.end());
    return rr;
}

Move HalfPeriod::period_move(long long m) const {
    const int h = length();
    long long r = ((m % (2 * h)) + 2 * h) % (2 * h);
    if (r < h) return moves_[static_cast<std::size_t>(r)];
    Move mv = moves_[static_cast<std::size_t>(r - h)];
    for (Block& b : mv.blocks) {
        int lo = n_points_ + 1 - b.hi;
        int hi = n_points_ + 1 - b.lo;
        b = {lo, hi};
    }
    std::sort(mv.blocks.begin(), mv.blocks.end(),
              [](const Block& a, const Block& b) { return a.lo < b.lo; });
    return mv;
}

int HalfPeriod::position(int m, Label p) const {
    const Row& r = row(m);
    for (int i = 0; i < n_points_; ++i)
        if (r[static_cast<std::size_t>(i)] == p) return i + 1;
    fail("UnknownLabel", "label " + std::to_string(p) + " not present");
}

std::optional<std::map<Label, Label>> central_pairing(const HalfPeriod& seq) {
    return seq.pairing();
}

std::string point_path(const HalfPeriod& seq, Label p) {
    if (!seq.has_label(p)) fail("UnknownLabel", "label " + std::to_string(p) + " not present");
    std::string word;
    word.reserve(static_cast<std::size_t>(seq.length()));
    int pos = seq.position(0, p);
    for (int m = 0; m < seq.length(); ++m) {
        int next = seq.position(m + 1, p);
        const Block* b = seq.move(m).block_containing(pos);
        // A centered block is a crossing switch only where the crossing
        // concept applies: conjugate-paired sequences, or an odd block whose
        // middle cell holds a center point.
        bool crossing = b && b->centered(seq.size()) &&
                        (seq.centrally_symmetric() || b->length() % 2 == 1);
        char letter;
        if (crossing)
            letter = 'C';
        else if (next > pos)
            letter = 'R';
        else if (next < pos)
            letter = 'L';
        else
            letter = 'P';
        word.push_back(letter);
        pos = next;
    }
    return word;
}

HalfPeriod induce(const HalfPeriod& seq, const std::set<Label>& keep) {
    if (keep.size() < 2) fail("TooFewLabels", "need at least two labels to induce");
    for (Label p : keep)
        if (!seq.has_label(p)) fail("UnknownLabel", "label " + std::to_string(p) + " not present");
    std::vector<Row> rows;
    for (int m = 0; m <= seq.length(); ++m) {
        Row r;
        for (Label p : seq.row(m))
            if (keep.count(p)) r.push_back(p);
        if (rows.empty() || rows.back() != r) rows.push_back(std::move(r));
    }
    return validated(rows);
}

HalfPeriod rotate(const HalfPeriod& seq, int start) {
    const int h = seq.length();
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(h) + 1);
    for (int m = start; m <= start + h; ++m) rows.push_back(seq.period_row(m));
    return validated(rows);
}

std::map<Label, Label> canonical_relabel_map(const HalfPeriod& seq) {
    std::map<Label, Label> relabel;
    const Row& first = seq.row(0);
    if (seq.centrally_symmetric()) {
        const int n = seq.size() / 2;
        const auto& conj = *seq.pairing();
        for (int i = 1; i <= n; ++i) {
            Label p = first[static_cast<std::size_t>(i - 1)];
            relabel[p] = i;
            relabel[conj.at(p)] = -i;
        }
    } else {
        for (int i = 1; i <= seq.size(); ++i)
            relabel[first[static_cast<std::size_t>(i - 1)]] = i;
    }
    return relabel;
}

HalfPeriod canonical_relabel(const HalfPeriod& seq) {
    auto relabel = canonical_relabel_map(seq);
    std::vector<Row> rows = seq.rows();
    for (Row& r : rows)
        for (Label& p : r) p = relabel.at(p);
    return validated(rows);
}

}  // namespace dirseq
