#include "dirseq/signature.hpp"

#include <numeric>
#include <sstream>

namespace dirseq {

CentralSignature::CentralSignature(std::vector<int> d) : entries(std::move(d)) {
    if (entries.size() == 1)
        fail("DegenerateSignature", "central degree t must be >= 2, got t = 1");
    if (entries.size() < 2)
        fail("InvalidSignature", "central degree t must be >= 2");
    for (int v : entries)
        if (v < 1) fail("InvalidSignature", "every entry must be >= 1");
}

int CentralSignature::half_points() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

std::vector<int> CentralSignature::offsets() const {
    std::vector<int> delta(entries.size());
    delta[0] = 0;
    for (std::size_t i = 1; i < entries.size(); ++i)
        delta[i] = delta[i - 1] + entries[i - 1] + entries[i];
    return delta;
}

CentralSignature CentralSignature::parse(const std::string& csv) {
    std::vector<int> d;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            d.push_back(std::stoi(item));
        } catch (const std::exception&) {
            fail("InvalidSignature", "cannot parse entry '" + item + "'");
        }
    }
    if (d.empty()) fail("InvalidSignature", "empty signature");
    return CentralSignature(std::move(d));
}

std::string CentralSignature::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
    return os.str();
}

CentralSignature central_signature(const HalfPeriod& seq) {
    if (!seq.centrally_symmetric())
        fail("NotCentrallySymmetric", "sequence has no conjugation pairing");
    const auto& crossings = seq.crossing_moves();
    if (crossings.empty())
        fail("NoCrossingSwitch", "no move reverses a centered block");
    if (crossings.size() == 1)
        fail("DegenerateSignature", "only one crossing switch (t = 1)");

    std::vector<int> d;
    d.reserve(crossings.size());
    for (auto [move, half] : crossings) d.push_back(half);
    CentralSignature sig(std::move(d));

    if (seq.even_near_critical()) {
        // Cyclic gaps between consecutive crossing moves must be d_i + d_{i+1}
        // (equivalently d_i + d_{i+1} - 1 permutations strictly between them).
        const int t = sig.degree();
        for (int i = 0; i < t; ++i) {
            int gap = (i + 1 < t)
                          ? crossings[static_cast<std::size_t>(i + 1)].first -
                                crossings[static_cast<std::size_t>(i)].first
                          : crossings[0].first + seq.length() -
                                crossings[static_cast<std::size_t>(i)].first;
            int expected = sig.entries[static_cast<std::size_t>(i)] +
                           sig.entries[static_cast<std::size_t>((i + 1) % t)];
            if (gap != expected)
                fail("OffsetInvariantViolated",
                     "crossing gap " + std::to_string(gap) + " != d_i + d_{i+1} = " +
                         std::to_string(expected));
        }
    }
    return sig;
}

}  // namespace dirseq
