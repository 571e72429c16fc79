#pragma once

#include <optional>
#include <string>

#include "dirseq/geometry.hpp"
#include "dirseq/signature.hpp"

namespace dirseq {

// Signature shape that decides geometric realizability.  The first four are
// realizable (with the witness family shown); the rest block realizability.
enum class SignaturePattern {
    AllOnes,         // (1,...,1)            -> regular polygon
    TwoLines,        // t == 2               -> exponential cross / bipencil
    PairOfOnes,      // t == 3, two 1-entries -> tricolumnar array
    TwoTwoTwo,       // (2,2,2)              -> golden-ratio 12-point set
    MixedLarge,      // t >= 3, some d_i >= 3 with another d_j >= 2
    ThreeTwosRun,    // t >= 4, three cyclically consecutive 2s
    TwoOnesAfterBig, // t >= 4, some d_i >= 2 followed by 1, 1
    TwoOneTwo,       // cyclic 2,1,2 substring
};

std::string pattern_name(SignaturePattern p);

struct Verdict {
    bool realizable = false;
    std::optional<FamilySpec> witness;  // present iff realizable
    SignaturePattern pattern{};
};

// Realizability of the canonical sequence with signature d.  The signature
// is cyclic: rotations and the reflection classify identically.  Positive
// precedence: all-ones > t == 2 > t == 3 patterns.  Blocking precedence:
// MixedLarge > ThreeTwosRun > TwoOnesAfterBig > TwoOneTwo.
Verdict classify(const CentralSignature& d);

// Constructive check of a positive verdict: generates the witness, sweeps
// it, and tests combinatorial equivalence against dc_closed_form(d).
// Throws NotRealizable when classify(d) is negative.
bool verify_witness(const CentralSignature& d);

}  // namespace dirseq
