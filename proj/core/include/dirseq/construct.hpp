#pragma once

#include <string>
#include <vector>

#include "dirseq/sequence.hpp"
#include "dirseq/signature.hpp"

namespace dirseq {

// Return leg of the crossing-point position formula.  After peaking at
// position 2n-k+1 the point steps one position left per move (Stepwise).
// Constant keeps a fixed value over the leg; a point cannot hold a constant
// position while it participates in left jumps, so rows assembled under
// Constant are not permutations.  Kept to demonstrate that the verifiers
// reject the flawed variant.
enum class DescentVariant { Stepwise, Constant };

// Position of the k-th point of a crossing substring of half-size d, at time
// j in [0, 2n] measured from the row reversed by its own crossing switch.
// Overlapping case boundaries must agree; disagreement or a value outside
// [1, 2n] raises InternalInconsistency.
int crossing_point_position(int n, int d, int k, int j,
                            DescentVariant variant = DescentVariant::Stepwise);

// Same position within the halfperiod window [0, 2n] for a crossing switch
// anchored at move delta (wrap-around rows use the period reversal rule).
int window_position(int n, int d, int delta, int k, int m,
                    DescentVariant variant = DescentVariant::Stepwise);

// Expected path word of s_i(k) when its crossing switch sits at move delta:
// the canonical word C P^{k-1} R^{n-d} P^{2(d-k)+1} L^{n-d} P^{k-1} shifted
// into the window, with R and L exchanged on the wrapped prefix.
std::string expected_crossing_path(int n, int d, int delta, int k);

// Closed-form builder: every row assembled directly from the position
// formula.  The output is canonical: pi_0 = (1..n, -n..-1), first move
// contains a crossing switch, signature is exactly d.
HalfPeriod dc_closed_form(const CentralSignature& d);
HalfPeriod dc_closed_form_variant(const CentralSignature& d, DescentVariant variant);

// Independent inductive builder: the all-ones base is the regular-polygon
// pattern of alternating adjacent transpositions; each step grows the first
// signature entry by inserting a fresh conjugate pair next to the first
// point of the first crossing substring.  Output is canonical as above.
HalfPeriod dc_inductive(const CentralSignature& d);

struct VerifyReport {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Compares every point path of seq letter-by-letter against the expected
// crossing-path words.  Pre: canonical even-near-critical centrally
// symmetric sequence in noncentral general position with signature d and a
// crossing switch in the first move (PreconditionViolated otherwise).
VerifyReport verify_paths(const HalfPeriod& seq, const CentralSignature& d);

// Audits the move index of every switch against the closed-form identities:
// the crossing switch of s_i sits at move delta_i; the transposition of
// s_i(k) with the conjugate of s_j(l) at move delta_i + d_{i+1}+...+d_j +k-l;
// the transposition of s_i(k) with s_j(l) at move n + delta_i +
// d_i+...+d_{j-1} + l-k (all mod 2n, i < j).  Together with the in-substring
// pairs handled by the crossing switches this covers every pair once.
VerifyReport verify_move_coincidences(const HalfPeriod& seq, const CentralSignature& d);

}  // namespace dirseq
