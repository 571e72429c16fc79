#pragma once

#include <map>
#include <optional>

#include "dirseq/sequence.hpp"

namespace dirseq {

// Certificate of combinatorial equivalence.  Applied to sequence A it yields
// sequence B row by row:
//   B_m = relabel( mirror^mirrored( rho_A( shift + m * (time_reversed ? -1 : +1) ) ) )
// where rho_A is the full period of A (rho_{r+h} = reversal of rho_r) and
// mirror reads a row right-to-left.
struct EquivWitness {
    std::map<Label, Label> relabel;
    int shift = 0;             // in [0, 2h)
    bool time_reversed = false;
    bool mirrored = false;
};

// Searches shifts, time reversal, and mirroring; the label bijection is then
// forced position-by-position from the first row and checked on the whole
// period.  Returns the first witness found.  Throws SizeMismatch when the
// point counts differ; different halfperiod lengths are simply inequivalent.
std::optional<EquivWitness> equivalent(const HalfPeriod& a, const HalfPeriod& b);

// Same search restricted to a subgroup (shift and relabeling always allowed).
std::optional<EquivWitness> equivalent_under(const HalfPeriod& a, const HalfPeriod& b,
                                             bool allow_time_reversal, bool allow_mirror);

// Mechanical application of a witness; the result of a witness returned by
// equivalent(a, b) is exactly b.
HalfPeriod apply_witness(const HalfPeriod& a, const EquivWitness& w);

}  // namespace dirseq
