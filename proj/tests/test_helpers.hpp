#pragma once

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dirseq/io.hpp"
#include "dirseq/signature.hpp"

namespace testutil {

inline std::string data_path(const std::string& rel) {
    return std::string(DIRSEQ_DATA_DIR) + "/" + rel;
}

inline dirseq::HalfPeriod load_fixture(const std::string& name) {
    std::ifstream in(data_path("fixtures/" + name));
    REQUIRE(in.good());
    return dirseq::read_halfperiod(in);
}

// All compositions of `total` into at least two positive parts.
inline std::vector<std::vector<int>> compositions(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            if (cur.size() >= 2) out.push_back(cur);
            return;
        }
        for (int v = 1; v <= left; ++v) {
            cur.push_back(v);
            self(self, left - v);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

inline std::vector<int> random_signature(std::mt19937& rng, int min_sum, int max_sum) {
    std::uniform_int_distribution<int> sum_dist(min_sum, max_sum);
    int left = sum_dist(rng);
    std::vector<int> entries;
    while (left > 0) {
        std::uniform_int_distribution<int> entry(1, std::min(left, 6));
        int v = entry(rng);
        entries.push_back(v);
        left -= v;
    }
    if (entries.size() < 2) {
        entries.back() -= 1;
        entries.push_back(1);
        if (entries.front() == 0) entries.front() = 1;
    }
    return entries;
}

}  // namespace testutil
