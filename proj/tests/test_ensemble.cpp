#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hetsim/ml/ensemble.hpp"

using namespace hetsim;
using namespace hetsim::ml;

TEST_CASE("soft vote is the arithmetic mean") {
    CHECK(soft_vote(0.2, 0.4, 0.6) == doctest::Approx(0.4));
    CHECK(soft_vote(0.7, 0.7, 0.7) == doctest::Approx(0.7));  // idempotence
    CHECK_THROWS_AS(soft_vote(-0.1, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(soft_vote(0.5, 1.2, 0.5), std::invalid_argument);
}

TEST_CASE("soft vote stays between the extremes of its inputs") {
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.next_double(), b = rng.next_double(), c = rng.next_double();
        const double v = soft_vote(a, b, c);
        CHECK(v >= std::min({a, b, c}) - 1e-15);
        CHECK(v <= std::max({a, b, c}) + 1e-15);
    }
}

TEST_CASE("priority formula") {
    CHECK(priority(0.84, 10.0, true) == doctest::Approx(9.4));
    CHECK(priority(0.42, 1.0, true) == doctest::Approx(1.42));
    CHECK(priority(0.65, 10.0, true) == doctest::Approx(7.5));
    CHECK(priority(0.99, 100.0, false) == doctest::Approx(1.0));  // normal users stay at 1
}

TEST_CASE("the reported alpha=10 priorities for the three voted likelihoods") {
    const double voted[3] = {0.42, 0.84, 0.65};
    const double expected[3] = {5.2, 9.4, 7.5};
    for (int i = 0; i < 3; ++i) {
        CHECK(priority(voted[i], 10.0, true) == doctest::Approx(expected[i]));
    }
}

TEST_CASE("outpatient priority is affine and strictly increasing in alpha") {
    const double p = 0.42;
    double prev = priority(p, 0.0, true);
    CHECK(prev == doctest::Approx(1.0));
    for (double alpha : {1.0, 2.0, 5.0, 10.0}) {
        const double up = priority(p, alpha, true);
        CHECK(up > prev);
        CHECK(up == doctest::Approx(1.0 + alpha * p));
        prev = up;
    }
}

TEST_CASE("trained ensemble predicts the soft vote of its bases") {
    Rng rng(21);
    std::vector<Record> train;
    for (int i = 0; i < 40; ++i) {
        Record r;
        for (int f = 0; f < kNumFeatures; ++f) r.levels[f] = static_cast<int>(rng.next_below(3));
        r.stroke = static_cast<int>(rng.next_below(2));
        train.push_back(r);
    }
    const EnsembleModel m = train_ensemble(train);
    CurrentState cs;
    cs.levels = {1, 2, 0, 1};
    const double expected =
        soft_vote(predict_nb(m.nb, cs), predict_lr(m.lr, cs), predict_dt(m.dt, cs));
    CHECK(predict_ensemble(m, cs) == doctest::Approx(expected).epsilon(1e-15));
}
