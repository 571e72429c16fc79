#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dirseq/error.hpp"

namespace dirseq {

// A point label.  Nonzero signed integer; -p denotes the conjugate of p in
// centrally symmetric sequences.
using Label = int;
using Row = std::vector<Label>;

// Closed 1-indexed position interval reversed by a switch.
struct Block {
    int lo = 0;
    int hi = 0;

    int length() const { return hi - lo + 1; }
    bool contains(int pos) const { return lo <= pos && pos <= hi; }
    // A centered block straddles the middle of the row symmetrically.
    bool centered(int n_points) const { return lo + hi == n_points + 1; }
    bool operator==(const Block&) const = default;
};

// The set of switches between two consecutive permutations.  Blocks are
// pairwise disjoint and sorted by lo; each has length >= 2.
struct Move {
    std::vector<Block> blocks;

    const Block* block_containing(int pos) const {
        for (const Block& b : blocks)
            if (b.contains(pos)) return &b;
        return nullptr;
    }
};

enum class Axiom {
    Rows = 1,       // every row is a permutation of the label set
    Period = 2,     // last row is the reversal of the first
    Switches = 3,   // consecutive rows differ by disjoint block reversals
    PairOnce = 4,   // every unordered pair reverses exactly once
};

struct ValidationIssue {
    Axiom axiom{};
    std::string code;             // NonPermutationRow, NotBlockReversal, ...
    int move = -1;                // 0-based move index, -1 when not move-local
    std::pair<Label, Label> pair{0, 0};
    std::string detail;
};

// One halfperiod pi_0..pi_h of an allowable sequence together with the moves
// between consecutive rows.  The doubly-infinite sequence is recovered by
// periodicity: pi_{m+h} is the reversal of pi_m.  Instances are immutable and
// always satisfy the four allowable-sequence axioms; construct via validate().
class HalfPeriod {
public:
    int size() const { return n_points_; }    // number of points N
    int length() const { return static_cast<int>(moves_.size()); }  // h

    // Rows of the stored halfperiod, m in [0, h].
    const Row& row(int m) const { return rows_[static_cast<std::size_t>(m)]; }
    const std::vector<Row>& rows() const { return rows_; }

    // Row of the doubly-infinite sequence at arbitrary index (mod 2h).
    Row period_row(long long m) const;

    // Move m transforms period_row(m) into period_row(m+1); m taken mod 2h.
    // For m in [0, h) this is the stored move; for [h, 2h) the mirrored one.
    Move period_move(long long m) const;
    const Move& move(int m) const { return moves_[static_cast<std::size_t>(m)]; }
    const std::vector<Move>& moves() const { return moves_; }

    // 1-indexed position of label p in row m (m in [0, h]).
    int position(int m, Label p) const;
    bool has_label(Label p) const { return label_set_.count(p) != 0; }
    const std::set<Label>& labels() const { return label_set_; }

    // Conjugation map p -> q with position(m,p) + position(m,q) == N+1 in
    // every row, if one exists.  Absent for odd N or asymmetric sequences.
    const std::optional<std::map<Label, Label>>& pairing() const { return pairing_; }
    bool centrally_symmetric() const { return pairing_.has_value(); }

    // True iff every non-centered block of every move is a transposition.
    bool noncentral_general_position() const { return ncgen_; }

    // h == 2*floor(N/2): the sequence meets the minimum direction count.
    bool even_near_critical() const { return length() == 2 * (size() / 2); }

    // 0-based indices of moves containing a centered block, with half-sizes.
    const std::vector<std::pair<int, int>>& crossing_moves() const { return crossings_; }

    bool operator==(const HalfPeriod& other) const { return rows_ == other.rows_; }

private:
    friend std::variant<HalfPeriod, ValidationIssue> validate(const std::vector<Row>&);

    int n_points_ = 0;
    std::vector<Row> rows_;
    std::vector<Move> moves_;
    std::set<Label> label_set_;
    std::optional<std::map<Label, Label>> pairing_;
    bool ncgen_ = false;
    std::vector<std::pair<int, int>> crossings_;
};

// Checks the four axioms on raw permutation rows, inferring moves by
// decomposing consecutive row differences into reversed blocks.
std::variant<HalfPeriod, ValidationIssue> validate(const std::vector<Row>& rows);

// validate() that throws Error(issue.code) instead of returning the issue.
HalfPeriod validated(const std::vector<Row>& rows);

// Conjugation map, or nullopt (odd point count or no consistent pairing).
std::optional<std::map<Label, Label>> central_pairing(const HalfPeriod& seq);

// Word over {C,P,R,L} of length h tracking one point through the halfperiod:
// C central jump (centered block), P passive, R/L position change sign.
std::string point_path(const HalfPeriod& seq, Label p);

// Restriction to a label subset: drop other labels from every row, collapse
// equal consecutive rows, re-validate.
HalfPeriod induce(const HalfPeriod& seq, const std::set<Label>& keep);

// Halfperiod window of the same sequence starting at row/move `start`
// (labels unchanged).
HalfPeriod rotate(const HalfPeriod& seq, int start);

// Relabel so that pi_0 = (1..n, -n..-1) when centrally symmetric, else
// pi_0 = (1..N).  Returns the relabeled sequence.
HalfPeriod canonical_relabel(const HalfPeriod& seq);
std::map<Label, Label> canonical_relabel_map(const HalfPeriod& seq);

}  // namespace dirseq
