#pragma once

#include <string>
#include <vector>

#include "dirseq/sequence.hpp"

namespace dirseq {

// Cyclic sequence (d_1,...,d_t) of crossing half-sizes, read in sweep order
// starting from the first crossing move.  t >= 2 and every d_i >= 1.
struct CentralSignature {
    std::vector<int> entries;

    CentralSignature() = default;
    explicit CentralSignature(std::vector<int> d);
    CentralSignature(std::initializer_list<int> d)
        : CentralSignature(std::vector<int>(d)) {}

    int degree() const { return static_cast<int>(entries.size()); }   // t
    int half_points() const;                                          // n = sum d_i

    // delta_1 = 0, delta_2 = d_1+d_2, delta_i = delta_{i-1} + d_{i-1} + d_i.
    // 0-based move indices of the crossing switches in an even-near-critical
    // sequence whose first move contains a crossing.
    std::vector<int> offsets() const;

    // "3,2,1" -> {3,2,1}
    static CentralSignature parse(const std::string& csv);
    std::string to_string() const;

    bool operator==(const CentralSignature&) const = default;
};

// Reads the signature off a centrally symmetric halfperiod: the half-sizes of
// its centered switches in move order.  When the sequence is even-near-
// critical, the cyclic gaps between crossing moves are verified to be
// d_i + d_{i+1}.  Throws NotCentrallySymmetric, NoCrossingSwitch,
// DegenerateSignature (t == 1, i.e. N == 2).
CentralSignature central_signature(const HalfPeriod& seq);

}  // namespace dirseq
