#include "testutil.hpp"

#include "specmom/moments.hpp"
#include "specmom/timeseries.hpp"

using namespace specmom;
using testutil::rel_err;

TEST_SUITE_BEGIN("timeseries");

namespace {

LagVector zero_lags(const GroupSpec& g, int m) {
    LagVector lv;
    for (int q = 1; q < m; ++q) lv.lags.push_back(g.decode(0));
    return lv;
}

} // namespace

TEST_CASE("zero lags reduce to raw moments") {
    std::mt19937_64 rng(151);
    for (int t = 0; t < 10; ++t) {
        const GroupSpec g = testutil::random_group(rng, 128);
        const SparseSpectrum s = testutil::random_sparse(rng, g, 0.3);
        const DenseFunction fhat = to_dense(s);
        const DenseFunction f = idft(fhat);
        for (int m = 1; m <= 4; ++m) {
            const cplx raw = direct_general_moment(f, MomentCenter::raw(), m);
            CHECK(rel_err(lagged_moment(f, zero_lags(g, m)), raw) < 1e-9);
            CHECK(rel_err(lagged_moment_fourier(s, zero_lags(g, m)), raw) < 1e-9);
            CHECK(rel_err(lagged_moment_fourier(s, zero_lags(g, m)),
                          fourier_general_moment(fhat, MomentCenter::raw(), m)) < 1e-9);
        }
    }
}

TEST_CASE("second order with a lag is the circular autocorrelation") {
    std::mt19937_64 rng(157);
    const GroupSpec g({24});
    const DenseFunction f = testutil::random_dense(rng, g, Side::Primal);
    for (ordinal_t tau : {1ull, 5ull, 23ull}) {
        LagVector lv;
        lv.lags.push_back(g.decode(tau));
        cplx expect{};
        for (ordinal_t i = 0; i < 24; ++i) expect += f.values[i] * f.values[(i + tau) % 24];
        expect /= 24.0;
        CHECK(rel_err(lagged_moment(f, lv), expect) < 1e-12);
    }
}

TEST_CASE("single character: closed-form autocorrelation") {
    const GroupSpec g({64});
    const cplx c{0.8, -0.3};

    // index 32 is its own inverse, so the pair (32, 32) survives
    SparseSpectrum self(g);
    self.set(32, c);
    for (ordinal_t tau : {0ull, 1ull, 2ull, 3ull}) {
        LagVector lv;
        lv.lags.push_back(g.decode(tau));
        const cplx expect = c * c * (tau % 2 == 0 ? 1.0 : -1.0);
        CHECK(rel_err(lagged_moment_fourier(self, lv), expect) < 1e-12);
        CHECK(rel_err(lagged_moment(idft(to_dense(self)), lv), expect) < 1e-9);
    }

    // index 3 has no partner: every second-order lag product vanishes
    SparseSpectrum lone(g);
    lone.set(3, c);
    LagVector lv;
    lv.lags.push_back(g.decode(7));
    CHECK(std::abs(lagged_moment_fourier(lone, lv)) < 1e-15);
    CHECK(std::abs(lagged_moment(idft(to_dense(lone)), lv)) < 1e-9);
}

TEST_CASE("both routes agree on random lag vectors") {
    std::mt19937_64 rng(163);
    for (int t = 0; t < 100; ++t) {
        const GroupSpec g = testutil::random_group(rng, 256);
        const SparseSpectrum s = testutil::random_sparse(rng, g, 0.25);
        const DenseFunction f = idft(to_dense(s));
        std::uniform_int_distribution<int> m_d(1, 4);
        std::uniform_int_distribution<ordinal_t> j_d(0, g.cardinality() - 1);
        LagVector lv;
        const int m = m_d(rng);
        for (int q = 1; q < m; ++q) lv.lags.push_back(g.decode(j_d(rng)));
        CHECK(rel_err(lagged_moment(f, lv), lagged_moment_fourier(s, lv)) < 1e-9);
    }
}

TEST_CASE("dense overload and the term guard") {
    std::mt19937_64 rng(167);
    const GroupSpec g({6, 5});
    const SparseSpectrum s = testutil::random_sparse(rng, g, 0.5);
    LagVector lv;
    lv.lags.push_back(g.decode(7));
    lv.lags.push_back(g.decode(11));
    CHECK(rel_err(lagged_moment_fourier(to_dense(s), lv), lagged_moment_fourier(s, lv)) <
          1e-12);
    CHECK_THROWS_AS(lagged_moment_fourier(s, lv, 4), ResourceLimitError);
}

TEST_SUITE_END();
