#include "dirseq/classify.hpp"

#include <algorithm>

#include "dirseq/construct.hpp"
#include "dirseq/equivalence.hpp"

namespace dirseq {

std::string pattern_name(SignaturePattern p) {
    switch (p) {
        case SignaturePattern::AllOnes: return "all entries 1";
        case SignaturePattern::TwoLines: return "two crossing lines";
        case SignaturePattern::PairOfOnes: return "t=3 with two 1-entries";
        case SignaturePattern::TwoTwoTwo: return "(2,2,2)";
        case SignaturePattern::MixedLarge: return "entry >= 3 alongside another entry >= 2";
        case SignaturePattern::ThreeTwosRun: return "three consecutive 2s with t >= 4";
        case SignaturePattern::TwoOnesAfterBig: return "entry >= 2 followed by 1,1 with t >= 4";
        case SignaturePattern::TwoOneTwo: return "(2,1,2) substring";
    }
    return "?";
}

namespace {

bool cyclic_match(const std::vector<int>& d, auto&& pred3) {
    const int t = static_cast<int>(d.size());
    for (int i = 0; i < t; ++i)
        if (pred3(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>((i + 1) % t)],
                  d[static_cast<std::size_t>((i + 2) % t)]))
            return true;
    return false;
}

}  // namespace

Verdict classify(const CentralSignature& sig) {
    const auto& d = sig.entries;
    const int t = sig.degree();

    // Lexicographically minimal rotation/reflection; patterns below are
    // cyclic-invariant, the normal form only pins witness parameters.
    std::vector<int> norm = d;
    {
        std::vector<int> best = d;
        std::vector<int> cur = d;
        for (int rev = 0; rev < 2; ++rev) {
            for (int r = 0; r < t; ++r) {
                std::rotate(cur.begin(), cur.begin() + 1, cur.end());
                if (cur < best) best = cur;
            }
            std::reverse(cur.begin(), cur.end());
        }
        norm = best;
    }

    Verdict v;
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 1; })) {
        v.realizable = true;
        v.pattern = SignaturePattern::AllOnes;
        v.witness = FamilySpec::polygon(2 * t);
        return v;
    }
    if (t == 2) {
        v.realizable = true;
        v.pattern = SignaturePattern::TwoLines;
        int lo = std::min(d[0], d[1]), hi = std::max(d[0], d[1]);
        v.witness = lo >= 2 ? FamilySpec::exp_cross(2, d[0] - 1, d[1] - 1)
                            : FamilySpec::bipencil(hi);
        return v;
    }
    if (t == 3 && std::count(d.begin(), d.end(), 1) == 2) {
        v.realizable = true;
        v.pattern = SignaturePattern::PairOfOnes;
        v.witness = FamilySpec::tricolumnar(*std::max_element(d.begin(), d.end()));
        return v;
    }
    if (norm == std::vector<int>{2, 2, 2}) {
        v.realizable = true;
        v.pattern = SignaturePattern::TwoTwoTwo;
        v.witness = FamilySpec::z5_12();
        return v;
    }

    v.realizable = false;
    const bool has_big = std::any_of(d.begin(), d.end(), [](int x) { return x >= 3; });
    const int count_ge2 = static_cast<int>(std::count_if(d.begin(), d.end(), [](int x) { return x >= 2; }));
    if (t >= 3 && has_big && count_ge2 >= 2) {
        v.pattern = SignaturePattern::MixedLarge;
    } else if (t >= 4 && cyclic_match(d, [](int a, int b, int c) { return a == 2 && b == 2 && c == 2; })) {
        v.pattern = SignaturePattern::ThreeTwosRun;
    } else if (t >= 4 && cyclic_match(d, [](int a, int b, int c) { return a >= 2 && b == 1 && c == 1; })) {
        v.pattern = SignaturePattern::TwoOnesAfterBig;
    } else if (cyclic_match(d, [](int a, int b, int c) { return a == 2 && b == 1 && c == 2; })) {
        v.pattern = SignaturePattern::TwoOneTwo;
    } else {
        fail("InternalInconsistency",
             "no blocking pattern for non-realizable signature " + sig.to_string());
    }
    return v;
}

bool verify_witness(const CentralSignature& d) {
    Verdict v = classify(d);
    if (!v.realizable)
        fail("NotRealizable", "signature " + d.to_string() + " is not geometrically realizable");
    HalfPeriod swept = v.witness->kind == FamilySpec::Kind::Polygon
                           ? polygon_sequence(v.witness->sides / 2)
                           : circular_sequence(gen_family(*v.witness));
    return equivalent(swept, dc_closed_form(d)).has_value();
}

}  // namespace dirseq
