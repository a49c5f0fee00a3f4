#include "testutil.hpp"

#include "specmom/transform.hpp"

using namespace specmom;
using testutil::rel_err;

TEST_SUITE_BEGIN("transform");

TEST_CASE("constant function transforms to a scaled basis element") {
    const GroupSpec g({4, 3});
    DenseFunction f(g, Side::Primal);
    for (cplx& z : f.values) z = cplx{2.5, -1.0};
    const DenseFunction fhat = dft(f);
    CHECK(rel_err(fhat.values[0], cplx{2.5, -1.0}) < 1e-14);
    for (ordinal_t j = 1; j < fhat.size(); ++j) CHECK(std::abs(fhat.values[j]) < 1e-13);

    DenseFunction e0(g, Side::Fourier);
    e0.values[0] = cplx{0.7, 0.0};
    const DenseFunction back = idft(e0);
    for (const cplx& z : back.values) CHECK(rel_err(z, cplx{0.7, 0.0}) < 1e-14);
}

TEST_CASE("round trips stay within 1e-12") {
    std::mt19937_64 rng(23);
    std::vector<GroupSpec> groups = {GroupSpec({64}), GroupSpec({3, 2}),
                                     GroupSpec(std::vector<std::uint32_t>(12, 2)),
                                     GroupSpec({5, 3, 4})};
    for (int t = 0; t < 6; ++t) groups.push_back(testutil::random_group(rng, 4096));
    for (const GroupSpec& g : groups) {
        const DenseFunction f = testutil::random_dense(rng, g, Side::Primal);
        const DenseFunction rt = idft(dft(f));
        for (ordinal_t i = 0; i < f.size(); ++i) CHECK(rel_err(f.values[i], rt.values[i]) < 1e-12);

        const DenseFunction fhat = testutil::random_dense(rng, g, Side::Fourier);
        const DenseFunction rt2 = dft(idft(fhat));
        for (ordinal_t i = 0; i < fhat.size(); ++i)
            CHECK(rel_err(fhat.values[i], rt2.values[i]) < 1e-12);
    }
}

TEST_CASE("axis factorization equals the dense matrix oracle") {
    std::mt19937_64 rng(29);
    for (const GroupSpec& g : {GroupSpec({4, 3, 2}), GroupSpec({2, 2, 2, 2, 2, 2, 2, 2}),
                               GroupSpec({6, 6}), GroupSpec({5, 7}), GroupSpec({64}),
                               GroupSpec({4, 3, 2}, Ordering::LeastSignificantFirst)}) {
        REQUIRE(g.cardinality() <= 256);
        const DenseFunction f = testutil::random_dense(rng, g, Side::Primal);
        const DenseFunction fast = dft(f);
        const DenseFunction oracle = testutil::kron_dft_oracle(f);
        for (ordinal_t i = 0; i < f.size(); ++i)
            CHECK(rel_err(fast.values[i], oracle.values[i]) < 1e-12);
    }
}

TEST_CASE("large single-axis sizes take the unmaterialized path") {
    std::mt19937_64 rng(259);
    const GroupSpec g({1500});
    const DenseFunction f = testutil::random_dense(rng, g, Side::Primal);
    const DenseFunction fhat = dft(f);
    CHECK(rel_err(fhat.values[0], mean_of(f)) < 1e-11);
    const DenseFunction rt = idft(fhat);
    for (ordinal_t i = 0; i < f.size(); ++i)
        CHECK(rel_err(f.values[i], rt.values[i]) < 1e-11);
}

TEST_CASE("entry zero is the mean") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        const GroupSpec g = testutil::random_group(rng, 512);
        const DenseFunction f = testutil::random_dense(rng, g, Side::Primal);
        CHECK(rel_err(dft(f).values[0], mean_of(f)) < 1e-12);
    }
}

TEST_CASE("real functions are exactly the conjugate-symmetric spectra") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 8; ++t) {
        const GroupSpec g = testutil::random_group(rng, 256);
        const DenseFunction f = testutil::random_dense(rng, g, Side::Primal, /*real=*/true);
        CHECK(is_conjugate_symmetric(dft(f)));

        // symmetrize a random spectrum, then the inverse must be real
        DenseFunction fhat = testutil::random_dense(rng, g, Side::Fourier);
        DenseFunction sym(g, Side::Fourier);
        for (ordinal_t j = 0; j < g.cardinality(); ++j)
            sym.values[j] =
                0.5 * (fhat.values[j] + std::conj(fhat.values[negate_ord(g, j)]));
        CHECK(is_real_valued(idft(sym)));

        // and a generic complex spectrum must not pass the check
        fhat.values[1] += cplx{0.0, 1.0};
        CHECK_FALSE(is_conjugate_symmetric(fhat));
    }
}

TEST_CASE("dot products and the isometry gap") {
    std::mt19937_64 rng(41);
    const GroupSpec g({6, 4});
    auto basis = [&](ordinal_t j) {
        DenseFunction e(g, Side::Primal);
        e.values[j] = cplx{1.0, 0.0};
        return e;
    };
    for (ordinal_t i = 0; i < g.cardinality(); ++i)
        for (ordinal_t j = 0; j < g.cardinality(); ++j) {
            const cplx d = dot(basis(i), basis(j));
            CHECK(rel_err(d, i == j ? cplx{1.0, 0.0} : cplx{}) < 1e-15);
        }

    for (int t = 0; t < 100; ++t) {
        const GroupSpec rg = testutil::random_group(rng, 256);
        const DenseFunction f = testutil::random_dense(rng, rg, Side::Primal);
        const DenseFunction h = testutil::random_dense(rng, rg, Side::Primal);
        CHECK(parseval_gap(f, h) <= 1e-10 * static_cast<double>(rg.cardinality()));

        DenseFunction ones(rg, Side::Primal);
        for (cplx& z : ones.values) z = cplx{1.0, 0.0};
        CHECK(rel_err(dot(f, ones) / static_cast<double>(rg.cardinality()), mean_of(f)) <
              1e-12);
    }
}

TEST_CASE("diminish only touches entry zero") {
    const GroupSpec g({8});
    DenseFunction fhat(g, Side::Fourier);
    for (ordinal_t j = 0; j < 8; ++j) fhat.values[j] = cplx{double(j), 1.0};
    const cplx mu = fhat.values[0];

    const DenseFunction same = diminish(fhat, MomentCenter::raw());
    CHECK(same.values == fhat.values);

    const DenseFunction centered = diminish(fhat, MomentCenter::at(mu));
    CHECK(centered.values[0] == cplx{});
    for (ordinal_t j = 1; j < 8; ++j) CHECK(centered.values[j] == fhat.values[j]);

    const DenseFunction twice = diminish(centered, MomentCenter::raw());
    CHECK(twice.values == centered.values);
}

TEST_CASE("reversal") {
    std::mt19937_64 rng(43);
    const GroupSpec z64({64});
    const DenseFunction v = testutil::random_dense(rng, z64, Side::Fourier);
    const DenseFunction r = reverse(v);
    CHECK(r.values[61] == v.values[3]);
    CHECK(r.values[3] == v.values[61]);
    CHECK(reverse(r).values == v.values);

    const GroupSpec z2n({2, 2, 2, 2, 2});
    const DenseFunction b = testutil::random_dense(rng, z2n, Side::Fourier);
    CHECK(reverse(b).values == b.values);
}

TEST_CASE("sparse-dense conversions") {
    const GroupSpec g({64});
    SparseSpectrum s(g);
    CHECK(to_dense(s).values == std::vector<cplx>(64, cplx{}));

    s.set(3, cplx{1.22, 0.19});
    s.set(61, cplx{1.22, -0.19});
    const DenseFunction d = to_dense(s);
    std::size_t nonzeros = 0;
    for (const cplx& z : d.values) nonzeros += z != cplx{};
    CHECK(nonzeros == 2);

    const SparseSpectrum back = to_sparse(d, 0.0);
    CHECK(back.entries == s.entries);

    // explicit zeros never stored
    s.set(5, cplx{});
    CHECK(s.entries.count(5) == 0);
}

TEST_CASE("side mismatches are rejected") {
    const GroupSpec g({4});
    const DenseFunction p(g, Side::Primal);
    const DenseFunction f(g, Side::Fourier);
    CHECK_THROWS_AS(dft(f), GroupMismatchError);
    CHECK_THROWS_AS(idft(p), GroupMismatchError);
    CHECK_THROWS_AS(dot(p, f), GroupMismatchError);
    const DenseFunction other(GroupSpec({5}), Side::Primal);
    CHECK_THROWS_AS(dot(p, other), GroupMismatchError);
}

TEST_SUITE_END();
