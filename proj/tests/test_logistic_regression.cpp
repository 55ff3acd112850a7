#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hetsim/ml/logistic_regression.hpp"

using namespace hetsim;
using namespace hetsim::ml;

namespace {

Record make_record(int l1, int l2, int l3, int l4, int stroke) {
    Record r;
    r.levels = {l1, l2, l3, l4};
    r.stroke = stroke;
    return r;
}

std::vector<Record> random_records(Rng& rng, int n) {
    std::vector<Record> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(make_record(static_cast<int>(rng.next_below(3)),
                                  static_cast<int>(rng.next_below(3)),
                                  static_cast<int>(rng.next_below(3)),
                                  static_cast<int>(rng.next_below(3)),
                                  static_cast<int>(rng.next_below(2))));
    }
    return out;
}

}  // namespace

TEST_CASE("logistic function fixes") {
    CHECK(logistic(0.0) == doctest::Approx(0.5));
    CHECK(logistic(50.0) == doctest::Approx(1.0));
    CHECK(logistic(-50.0) == doctest::Approx(0.0));
    // all-zero coefficients give x = 0 regardless of the state
    const LrModel zero;
    CHECK(predict_lr(zero, make_record(2, 1, 0, 2, 0).state()) == doctest::Approx(0.5));
}

TEST_CASE("complement probability is one minus the prediction") {
    LrModel m;
    m.beta0 = -0.7;
    m.betas = {0.3, -0.2, 0.9, 0.1};
    const CurrentState cs = make_record(1, 2, 0, 2, 0).state();
    const double p1 = predict_lr(m, cs);
    const double p0 = 1.0 - logistic(m.linear_index(cs));
    CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("analytic gradient matches central finite differences") {
    Rng rng(0);
    const auto train = random_records(rng, 40);
    for (int trial = 0; trial < 10; ++trial) {
        LrModel m;
        m.beta0 = rng.uniform(-2.0, 2.0);
        for (auto& b : m.betas) b = rng.uniform(-2.0, 2.0);
        const auto g = lr_log_likelihood_gradient(train, m);
        const double h = 1e-5;
        for (int j = 0; j < kNumFeatures + 1; ++j) {
            LrModel up = m, down = m;
            (j == 0 ? up.beta0 : up.betas[j - 1]) += h;
            (j == 0 ? down.beta0 : down.betas[j - 1]) -= h;
            const double fd =
                (lr_log_likelihood(train, up) - lr_log_likelihood(train, down)) / (2.0 * h);
            CHECK(g[j] == doctest::Approx(fd).epsilon(1e-4));
        }
    }
}

TEST_CASE("training log-likelihood is nondecreasing per iteration") {
    Rng rng(11);
    const auto train = random_records(rng, 60);
    const LrTrainResult res = train_lr(train);
    REQUIRE(res.ll_trace.size() >= 2);
    for (std::size_t i = 1; i < res.ll_trace.size(); ++i) {
        CHECK(res.ll_trace[i] >= res.ll_trace[i - 1]);
    }
}

TEST_CASE("perfectly separable toy halts at the cap with a monotone trace") {
    // stroke exactly when the cholesterol level is High: separable, so the
    // likelihood keeps improving and the iteration cap fires.
    std::vector<Record> train;
    for (int i = 0; i < 12; ++i) {
        const int level = i % 3;
        train.push_back(make_record(level, i % 2, (i + 1) % 2, i % 3, level == 2 ? 1 : 0));
    }
    LrTrainOptions opts;
    opts.max_iterations = 300;
    const LrTrainResult res = train_lr(train, opts);
    CHECK_FALSE(res.converged);
    CHECK(res.iterations == 300);
    for (std::size_t i = 1; i < res.ll_trace.size(); ++i) {
        CHECK(res.ll_trace[i] >= res.ll_trace[i - 1]);
    }
    // the separating direction should dominate by the cap
    CHECK(res.model.betas[0] > 0.5);
}

TEST_CASE("empty dataset is a training error") {
    CHECK_THROWS_AS(train_lr({}), TrainError);
}
