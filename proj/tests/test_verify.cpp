#include <doctest.h>

#include "donoghue/verify.hpp"

using namespace donoghue;

TEST_CASE("property suites pass at reduced sizes") {
    const std::uint64_t seed = 12345;
    for (const SuiteResult& r : {
             symmetry_suite(seed, 500),
             branch_suite(seed, 500, 1e-10, 10),
             rotation_suite(seed, 100),
             cayley_suite(seed, 200),
             star_extension_suite(seed, 100),
             model_chain_suite(seed, 10),
             resolvent_suite(seed, 10),
             curve_suite(),
         }) {
        INFO(r.name, ": ", r.detail, " (max deviation ", r.max_deviation, ")");
        CHECK(r.passed);
        CHECK(r.cases > 0);
    }
}

TEST_CASE("suites are deterministic for a fixed seed") {
    const auto a = symmetry_suite(7, 200);
    const auto b = symmetry_suite(7, 200);
    CHECK(a.max_deviation == b.max_deviation);
}
