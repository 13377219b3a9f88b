#include <doctest.h>

#include <random>

#include "etcsim/history_window.hpp"
#include "test_helpers.hpp"

using namespace etcsim;
using namespace etcsim::testing;

TEST_CASE("shift drops the oldest state and appends the new one") {
    auto w = HistoryWindow::from_states({vec2(1, 1), vec2(2, 2)});
    auto s = w.shifted(vec2(3, 3));
    CHECK(s.at(-1) == vec2(2, 2));
    CHECK(s.at(0) == vec2(3, 3));
    // original untouched
    CHECK(w.at(-1) == vec2(1, 1));
    CHECK(w.at(0) == vec2(2, 2));
}

TEST_CASE("shift with tau = 0 replaces the only state") {
    auto w = HistoryWindow::from_states({vec1(5)});
    auto s = w.shifted(vec1(7));
    CHECK(s.tau() == 0);
    CHECK(s.at(0) == vec1(7));
}

TEST_CASE("shift with tau = 2 re-indexes all offsets") {
    auto a = vec1(1), b = vec1(2), c = vec1(3), d = vec1(4);
    auto w = HistoryWindow::from_states({a, b, c});
    auto s = w.shifted(d);
    CHECK(s.at(-2) == b);
    CHECK(s.at(-1) == c);
    CHECK(s.at(0) == d);
}

TEST_CASE("shift rejects dimension mismatches") {
    HistoryWindow w(1, 2);
    CHECK_THROWS_AS(w.shifted(vec1(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(w.push(vec1(1.0)), std::invalid_argument);
}

TEST_CASE("shift preserves window length for random windows") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int tau = static_cast<int>(rng() % 4);
        const int dim = 1 + static_cast<int>(rng() % 3);
        HistoryWindow w(tau, dim);
        for (int i = 0; i <= tau; ++i) w.push(random_vector(rng, dim));
        auto s = w.shifted(random_vector(rng, dim));
        CHECK(s.tau() == tau);
        CHECK(s.dim() == dim);
    }
}

TEST_CASE("window norm dominates past norm") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int tau = static_cast<int>(rng() % 3);
        HistoryWindow w(tau, 2);
        for (int i = 0; i <= tau; ++i) w.push(random_vector(rng, 2));
        CHECK(w.window_norm() >= w.past_norm());
        CHECK(w.past_norm() >= 0.0);
    }
}

TEST_CASE("past norm of a delay-free window is zero") {
    auto w = HistoryWindow::constant(0, vec2(3, 4));
    CHECK(w.past_norm() == 0.0);
    CHECK(w.window_norm() == doctest::Approx(5.0));
}

TEST_CASE("constant factory fills every offset") {
    auto w = HistoryWindow::constant(2, vec2(-2, 3));
    for (int s = -2; s <= 0; ++s) CHECK(w.at(s) == vec2(-2, 3));
}

TEST_CASE("ring buffer indexing stays consistent through many pushes") {
    HistoryWindow w(2, 1);
    std::vector<double> fed;
    for (int i = 0; i < 20; ++i) {
        w.push(vec1(i));
        fed.push_back(i);
        if (i >= 2) {
            CHECK(w.at(0)(0) == doctest::Approx(fed[i]));
            CHECK(w.at(-1)(0) == doctest::Approx(fed[i - 1]));
            CHECK(w.at(-2)(0) == doctest::Approx(fed[i - 2]));
        }
    }
}
