#include <map>

#include "testutil.hpp"

#include "specmom/io.hpp"
#include "specmom/moments.hpp"
#include "specmom/symbolic.hpp"

using namespace specmom;
using testutil::rel_err;

TEST_SUITE_BEGIN("symbolic");

namespace {

// Exhaustive reference: every ordered m-tuple over the universe, grouped by
// sorted multiset, kept when the indices annihilate.
std::vector<Term> brute_terms(const GroupSpec& g, int m, CenterMode mode,
                              const std::vector<ordinal_t>& universe) {
    std::map<std::vector<ordinal_t>, std::uint64_t> grouped;
    std::vector<std::size_t> pos(static_cast<std::size_t>(m), 0);
    const std::size_t n = universe.size();
    if (n == 0) return {};
    for (;;) {
        std::vector<ordinal_t> tuple;
        ordinal_t sum = 0;
        bool skip = false;
        for (std::size_t q = 0; q < pos.size(); ++q) {
            const ordinal_t j = universe[pos[q]];
            if (mode == CenterMode::Central && j == 0) skip = true;
            tuple.push_back(j);
            sum = add_ord(g, sum, j);
        }
        if (!skip && sum == 0) {
            std::sort(tuple.begin(), tuple.end());
            grouped[tuple] += 1;
        }
        std::size_t q = 0;
        while (q < pos.size() && ++pos[q] == n) pos[q++] = 0;
        if (q == pos.size()) break;
    }
    std::vector<Term> out;
    for (const auto& [indices, count] : grouped) out.push_back(Term{indices, count});
    return out;
}

std::vector<ordinal_t> all_ordinals(const GroupSpec& g) {
    std::vector<ordinal_t> u(g.cardinality());
    for (ordinal_t j = 0; j < g.cardinality(); ++j) u[j] = j;
    return u;
}

} // namespace

TEST_CASE("ternary-binary third raw moment has the 10 printed terms") {
    const GroupSpec g({3, 2});
    const SymbolicMoment sym = annihilating_terms(g, 3, CenterMode::Raw);
    REQUIRE(sym.terms.size() == 10);

    const std::vector<std::pair<std::vector<ordinal_t>, std::uint64_t>> expected = {
        {{0, 0, 0}, 1}, {{2, 2, 2}, 1}, {{4, 4, 4}, 1},
        {{0, 1, 1}, 3}, {{2, 3, 3}, 3}, {{4, 5, 5}, 3},
        {{0, 2, 4}, 6}, {{1, 3, 4}, 6}, {{1, 2, 5}, 6}, {{0, 3, 5}, 6}};
    for (const auto& [indices, mult] : expected) {
        bool found = false;
        for (const Term& t : sym.terms)
            if (t.indices == indices && t.multiplicity == mult) found = true;
        CAPTURE(indices[0]);
        CHECK(found);
    }

    // 56 possible 3-coefficient combinations, only 10 survive
    const std::size_t universe = 8 * 7 * 6 / 6; // C(6+3-1, 3)
    CHECK(universe == 56);

    // every emitted multiset annihilates
    for (const Term& t : sym.terms) {
        ordinal_t sum = 0;
        for (ordinal_t j : t.indices) sum = add_ord(g, sum, j);
        CHECK(sum == 0);
    }
}

TEST_CASE("first-order expansions") {
    const GroupSpec g({5, 2});
    const SymbolicMoment raw = annihilating_terms(g, 1, CenterMode::Raw);
    REQUIRE(raw.terms.size() == 1);
    CHECK(raw.terms[0].indices == std::vector<ordinal_t>{0});
    CHECK(raw.terms[0].multiplicity == 1);

    const SymbolicMoment central = annihilating_terms(g, 1, CenterMode::Central);
    CHECK(central.terms.empty());

    CHECK_THROWS_AS(annihilating_terms(g, 0, CenterMode::Raw), InvalidIndexError);
}

TEST_CASE("binary cube central third moment: seven triples of multiplicity six") {
    const GroupSpec g({2, 2, 2});
    const SymbolicMoment sym = annihilating_terms(g, 3, CenterMode::Central);
    REQUIRE(sym.terms.size() == 7);
    for (const Term& t : sym.terms) {
        CHECK(t.multiplicity == 6);
        CHECK((t.indices[0] ^ t.indices[1] ^ t.indices[2]) == 0);
        CHECK(t.indices[0] < t.indices[1]);
        CHECK(t.indices[1] < t.indices[2]);
    }
}

TEST_CASE("enumeration matches exhaustive ordered-tuple grouping") {
    for (const GroupSpec& g : {GroupSpec({2, 2, 2}), GroupSpec({3, 2}), GroupSpec({16}),
                               GroupSpec({4, 3}), GroupSpec({2, 2, 2, 2})}) {
        REQUIRE(g.cardinality() <= 16);
        for (int m = 1; m <= 4; ++m)
            for (CenterMode mode : {CenterMode::Raw, CenterMode::Central}) {
                const SymbolicMoment sym = annihilating_terms(g, m, mode);
                const std::vector<Term> brute = brute_terms(g, m, mode, all_ordinals(g));
                REQUIRE(sym.terms.size() == brute.size());
                for (std::size_t i = 0; i < brute.size(); ++i) {
                    CHECK(sym.terms[i].indices == brute[i].indices);
                    CHECK(sym.terms[i].multiplicity == brute[i].multiplicity);
                }
            }
    }
}

TEST_CASE("support restriction matches brute force over the support") {
    std::mt19937_64 rng(131);
    const GroupSpec g({4, 2, 2});
    const SparseSpectrum s = testutil::random_sparse(rng, g, 0.4);
    const std::vector<ordinal_t> support = s.support();
    for (int m = 2; m <= 4; ++m) {
        const SymbolicMoment sym = annihilating_terms(g, m, CenterMode::Raw, support);
        const std::vector<Term> brute = brute_terms(g, m, CenterMode::Raw, support);
        REQUIRE(sym.terms.size() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i)
            CHECK(sym.terms[i] == brute[i]);
    }
}

TEST_CASE("inheritance: lower terms times a square reappear two orders up") {
    const GroupSpec g({2, 2, 2});
    for (int m : {4, 5}) {
        const SymbolicMoment lower = annihilating_terms(g, m - 2, CenterMode::Central);
        const SymbolicMoment upper = annihilating_terms(g, m, CenterMode::Central);
        for (const Term& t : lower.terms)
            for (ordinal_t q = 1; q < g.cardinality(); ++q) {
                std::vector<ordinal_t> want = t.indices;
                want.push_back(q);
                want.push_back(q);
                std::sort(want.begin(), want.end());
                bool found = false;
                for (const Term& u : upper.terms) found = found || u.indices == want;
                CHECK(found);
            }
    }
}

TEST_CASE("odd-degree support cannot annihilate at odd order") {
    const GroupSpec g({2, 2, 2, 2});
    std::vector<ordinal_t> odd;
    for (ordinal_t j = 1; j < g.cardinality(); ++j)
        if (degree(g, j) % 2 == 1) odd.push_back(j);
    CHECK(annihilating_terms(g, 3, CenterMode::Central, odd).terms.empty());
    CHECK(annihilating_terms(g, 5, CenterMode::Central, odd).terms.empty());
}

TEST_CASE("evaluation equals the numeric engine") {
    std::mt19937_64 rng(137);
    for (int t = 0; t < 40; ++t) {
        const GroupSpec g = testutil::random_group(rng, 24);
        const SparseSpectrum s = testutil::random_sparse(rng, g, 0.5);
        std::uniform_int_distribution<int> m_d(1, 4);
        const int m = m_d(rng);
        const CenterMode mode = t % 2 ? CenterMode::Raw : CenterMode::Central;
        const cplx a = mode == CenterMode::Raw ? cplx{} : s.at(0);
        const cplx sym =
            evaluate(annihilating_terms(g, m, mode, s.support()), s, MomentCenter::at(a));
        const cplx num = fourier_general_moment(to_dense(s), MomentCenter::at(a), m);
        CHECK(rel_err(sym, num) < 1e-9);
    }
    const SymbolicMoment empty{GroupSpec({2, 2}), 3, CenterMode::Central, {}};
    CHECK(evaluate(empty, SparseSpectrum(GroupSpec({2, 2}))) == cplx{});
}

TEST_CASE("gene-network terms reproduce the tabulated contributions") {
    const SparseSpectrum s =
        read_spectrum_json(std::string(SPECMOM_DATA_DIR) + "/gene_network13.json");
    const SymbolicMoment sym =
        annihilating_terms(s.group, 3, CenterMode::Central, s.support());
    REQUIRE(sym.terms.size() == 5);
    const std::vector<cplx> contrib = evaluate_terms(sym, s);

    // contributions sorted descending match the printed table
    std::vector<double> mags;
    for (const cplx& c : contrib) mags.push_back(std::abs(c));
    std::sort(mags.rbegin(), mags.rend());
    const std::vector<double> expected = {0.0400, 0.0137, 0.0021, 0.0015, 0.0012};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(std::abs(mags[i] - expected[i]) < 0.0005);

    // the degree-3 coefficient on loci {4,5,9} cannot cancel locus 5
    for (const Term& t : sym.terms)
        for (ordinal_t j : t.indices) CHECK(j != 280);
}

TEST_CASE("rendering") {
    const GroupSpec g({3, 2});
    const SymbolicMoment sym = annihilating_terms(g, 3, CenterMode::Raw);
    const std::string text = render(sym);
    CHECK(text.find("fh0^3") != std::string::npos);
    CHECK(text.find("3(") != std::string::npos);
    CHECK(text.find("6(") != std::string::npos);
    CHECK(text.find("fh0 fh1^2") != std::string::npos);
    CHECK(text.find("fh0 fh2 fh4") != std::string::npos);

    const SymbolicMoment m1 = annihilating_terms(g, 1, CenterMode::Raw);
    CHECK(render(m1) == "fh0");

    const GroupSpec b({2, 2, 2});
    const SymbolicMoment bsym = annihilating_terms(b, 3, CenterMode::Central);
    const std::string set_text = render(bsym, Notation::Set);
    CHECK(set_text.find("fh{1,2}") != std::string::npos);
    CHECK(set_text.find("symmetric-difference") != std::string::npos);
    const std::string bin_text = render(bsym, Notation::Binary);
    CHECK(bin_text.find("fh[110]") != std::string::npos);

    CHECK_THROWS_AS(render(sym, Notation::Set), UnsupportedOperationError);
}

TEST_CASE("closed forms on binary groups") {
    // direct-effect spectra have known values
    for (int n : {3, 6, 9}) {
        SparseSpectrum s(GroupSpec(std::vector<std::uint32_t>(n, 2)));
        const double d = 0.7;
        for (int l = 0; l < n; ++l) s.set(ordinal_t{1} << l, cplx{d, 0.0});
        CHECK(rel_err(z2n_central_closed_form(s, 2), cplx{n * d * d}) < 1e-12);
        CHECK(std::abs(z2n_central_closed_form(s, 3)) < 1e-12);
        CHECK(rel_err(z2n_central_closed_form(s, 4),
                      cplx{(3.0 * n * n - 2.0 * n) * std::pow(d, 4)}) < 1e-12);
        CHECK(std::abs(z2n_central_closed_form(s, 5)) < 1e-12);
        CHECK(rel_err(z2n_central_closed_form(s, 6),
                      cplx{(15.0 * n * n * n - 30.0 * n * n + 16.0 * n) * std::pow(d, 6)}) <
              1e-12);
    }

    // random sparse spectra against the general engine
    std::mt19937_64 rng(139);
    const GroupSpec g(std::vector<std::uint32_t>(6, 2));
    for (int t = 0; t < 10; ++t) {
        const SparseSpectrum s = testutil::random_sparse(rng, g, 0.2);
        const DenseFunction fhat = to_dense(s);
        const cplx mu = fhat.values[0];
        for (int m = 2; m <= 6; ++m) {
            const cplx closed = z2n_central_closed_form(s, m);
            const cplx engine = fourier_general_moment(fhat, MomentCenter::at(mu), m);
            CHECK(rel_err(closed, engine) < 1e-9);
        }
    }

    CHECK_THROWS_AS(z2n_central_closed_form(SparseSpectrum(GroupSpec({3, 2})), 3),
                    UnsupportedOperationError);
    CHECK_THROWS_AS(z2n_central_closed_form(SparseSpectrum(GroupSpec({2, 2})), 7),
                    UnsupportedOperationError);
}

TEST_CASE("enumeration guard names its bound") {
    const GroupSpec g({2, 2, 2, 2, 2, 2, 2, 2});
    try {
        annihilating_terms(g, 4, CenterMode::Raw, std::nullopt, 100);
        FAIL("guard did not trip");
    } catch (const ResourceLimitError& e) {
        CHECK(std::string(e.what()).find("100") != std::string::npos);
    }
}

TEST_CASE("feasibility residuals") {
    // phases of a known real function are self-consistent
    const SparseSpectrum s =
        read_spectrum_json(std::string(SPECMOM_DATA_DIR) + "/z64_sparse8.json");
    std::map<ordinal_t, double> mags, phases;
    for (const auto& [j, c] : s.entries) {
        mags[j] = std::abs(c);
        phases[j] = std::arg(c);
    }
    const DenseFunction fhat = to_dense(s);
    const cplx mu = fhat.values[0];
    std::map<int, cplx> targets = {
        {3, fourier_general_moment(fhat, MomentCenter::at(mu), 3)},
        {4, fourier_general_moment(fhat, MomentCenter::at(mu), 4)}};
    const FeasibilityReport rep =
        feasibility_residual(s.group, mags, phases, targets, CenterMode::Central);
    CHECK(rep.max_residual < 1e-9);
    for (const auto& fo : rep.orders) CHECK(fo.terms.size() == fo.contributions.size());

    // random phase perturbations leave a strictly positive residual
    std::mt19937_64 rng(149);
    std::uniform_real_distribution<double> jitter(0.05, 0.4);
    int positive = 0;
    for (int t = 0; t < 100; ++t) {
        std::map<ordinal_t, double> bent = phases;
        for (auto& [j, phi] : bent) phi += jitter(rng);
        const FeasibilityReport r2 =
            feasibility_residual(s.group, mags, bent, targets, CenterMode::Central);
        positive += r2.max_residual > 1e-9;
    }
    CHECK(positive == 100);

    // normal-shape constraint targets
    const auto gt = gaussian_targets(2.0);
    CHECK(gt.at(3) == cplx{});
    CHECK(gt.at(4) == cplx{12.0, 0.0});

    CHECK_THROWS_AS(
        feasibility_residual(s.group, mags, std::map<ordinal_t, double>{}, targets,
                             CenterMode::Central),
        GroupMismatchError);
    CHECK_THROWS_AS(feasibility_residual(s.group, mags, phases, {}, CenterMode::Central),
                    InvalidIndexError);
}

TEST_SUITE_END();
