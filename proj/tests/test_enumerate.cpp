#include <doctest.h>

#include "dirseq/construct.hpp"
#include "dirseq/enumerate.hpp"
#include "dirseq/equivalence.hpp"
#include "test_helpers.hpp"

using namespace dirseq;

TEST_CASE("small signatures have exactly one class containing the closed form") {
    for (auto entries : {std::vector<int>{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {3, 1}}) {
        CentralSignature d(entries);
        CAPTURE(d.to_string());
        auto res = enumerate_dc(d);
        REQUIRE(res.classes.size() == 1);
        CHECK(equivalent(res.classes.front(), dc_closed_form(d)).has_value());
    }
}

TEST_CASE("emitted sequences satisfy every structural predicate") {
    for (auto entries : {std::vector<int>{2, 2}, {2, 1, 1}, {1, 2, 1}}) {
        CentralSignature d(entries);
        auto res = enumerate_dc(d);
        for (const auto& seq : res.classes) {
            CHECK(seq.centrally_symmetric());
            CHECK(seq.noncentral_general_position());
            CHECK(seq.even_near_critical());
            CHECK(central_signature(seq).entries == entries);
        }
    }
}

TEST_CASE("class counts coincide for the full group and the shift subgroup") {
    for (auto entries : {std::vector<int>{2, 1}, {1, 2, 1}, {2, 2}}) {
        auto res = enumerate_dc(CentralSignature(entries));
        CHECK(res.classes.size() == res.shift_only_classes);
    }
}

TEST_CASE("node budget is enforced") {
    CHECK_THROWS_WITH_AS(enumerate_dc(CentralSignature{2, 1, 2}, 10),
                         doctest::Contains("BudgetExceeded"), Error);
    CHECK_THROWS_WITH_AS(enumerate_dc(CentralSignature{3, 3}),
                         doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("deterministic traversal: repeated runs agree") {
    auto a = enumerate_dc(CentralSignature{2, 2});
    auto b = enumerate_dc(CentralSignature{2, 2});
    CHECK(a.nodes == b.nodes);
    CHECK(a.raw_count == b.raw_count);
    REQUIRE(a.classes.size() == b.classes.size());
    CHECK(a.classes.front() == b.classes.front());
}
