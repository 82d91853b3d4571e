#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capra/lp.hpp"

#include <random>

using namespace capra;

namespace {

std::vector<Rat> col(std::initializer_list<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return c;
}

}  // namespace

TEST_CASE("feasible system returns an exact solution") {
    // x1 (1,1) + x2 (1,-1) = (3,1)  ->  x = (2,1)
    auto r = lp_feasible<Rat>({col({1, 1}), col({1, -1})}, col({3, 1}));
    REQUIRE(r.feasible);
    Rat s0 = r.solution[0], s1 = r.solution[1];
    CHECK(s0 + s1 == 3);
    CHECK(s0 - s1 == 1);
}

TEST_CASE("infeasible system returns a Farkas certificate") {
    // nonnegative combinations of (1,0) and (0,1) cannot reach (-1,-1)
    auto r = lp_feasible<Rat>({col({1, 0}), col({0, 1})}, col({-1, -1}));
    REQUIRE(!r.feasible);
    // y^T A <= 0 and y^T b > 0, re-checked here by hand
    CHECK(r.farkas[0] <= 0);
    CHECK(r.farkas[1] <= 0);
    CHECK(-r.farkas[0] - r.farkas[1] > 0);
}

TEST_CASE("degenerate and empty systems") {
    auto empty_feasible = lp_feasible<Rat>({}, col({0, 0}));
    CHECK(empty_feasible.feasible);
    auto empty_infeasible = lp_feasible<Rat>({}, col({0, 1}));
    CHECK(!empty_infeasible.feasible);
    auto zero_col = lp_feasible<Rat>({col({0, 0})}, col({0, 0}));
    CHECK(zero_col.feasible);
}

TEST_CASE("random systems agree with a float check") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> num(-6, 6);
    int feas = 0, infeas = 0;
    for (int it = 0; it < 400; ++it) {
        std::size_t m = 2 + it % 2, n = 1 + it % 5;
        std::vector<std::vector<Rat>> cols(n, std::vector<Rat>(m));
        std::vector<std::vector<double>> cold(n, std::vector<double>(m));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) {
                long v = num(rng);
                cols[j][i] = v;
                cold[j][i] = double(v);
            }
        std::vector<Rat> b(m);
        std::vector<double> bd(m);
        for (std::size_t i = 0; i < m; ++i) {
            long v = num(rng);
            b[i] = v;
            bd[i] = double(v);
        }
        auto exact = lp_feasible<Rat>(cols, b);
        auto fl = lp_feasible<double>(cold, bd, 1e-9);
        CHECK(exact.feasible == fl.feasible);
        if (exact.feasible) {
            ++feas;
            // solution re-check
            for (std::size_t i = 0; i < m; ++i) {
                Rat s(0);
                for (std::size_t j = 0; j < n; ++j) s += exact.solution[j] * cols[j][i];
                CHECK(s == b[i]);
            }
            for (const Rat& v : exact.solution) CHECK(v >= 0);
        } else {
            ++infeas;
            for (std::size_t j = 0; j < n; ++j) {
                Rat s(0);
                for (std::size_t i = 0; i < m; ++i) s += exact.farkas[i] * cols[j][i];
                CHECK(s <= 0);
            }
            Rat s(0);
            for (std::size_t i = 0; i < m; ++i) s += exact.farkas[i] * b[i];
            CHECK(s > 0);
        }
    }
    CHECK(feas > 50);
    CHECK(infeas > 50);
}
