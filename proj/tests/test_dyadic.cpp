#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bouss/dyadic.hpp"
#include "bouss/initial.hpp"

#include <random>

using namespace bouss;

namespace {

const Grid g1(1, 32.0 * Grid::pi(), 512);

} // namespace

TEST_CASE("partition construction and supports")
{
    const DyadicPartition p(g1);
    CHECK(p.j_min() == -1);
    CHECK(p.j_max() >= 1);
    // default grid resolves |xi| up to 16, so blocks reach j = 4
    CHECK(p.j_max() == 4);

    CHECK(DyadicPartition::chi(0.0) == 1.0);
    CHECK(DyadicPartition::chi(0.75) == 1.0);
    CHECK(DyadicPartition::chi(4.0 / 3 + 1e-12) == 0.0);
    CHECK(DyadicPartition::phi(0.74) == 0.0);
    CHECK(DyadicPartition::phi(8.0 / 3 + 1e-12) == 0.0);
    CHECK(DyadicPartition::phi(1.0) > 0.0);
    for (Real rho : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        CHECK(DyadicPartition::chi(rho) >= 0.0);
        CHECK(DyadicPartition::chi(rho) <= 1.0);
        CHECK(DyadicPartition::phi(rho) >= 0.0);
        CHECK(DyadicPartition::phi(rho) <= 1.0);
    }

    // too coarse to host blocks -1, 0, 1: |xi|max = pi N / L
    CHECK_THROWS(DyadicPartition(Grid(1, 32.0 * Grid::pi(), 8)));
}

TEST_CASE("partition of unity at 500 random resolved radii")
{
    const DyadicPartition p(g1);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<Real> radius(0.0, g1.max_freq());
    Real sup = 0;
    for (int i = 0; i < 500; ++i) {
        const Real rho = radius(rng);
        Real s = DyadicPartition::chi(rho);
        for (int j = 0; j <= p.j_max() + 1; ++j)
            s += DyadicPartition::phi(std::ldexp(rho, -j));
        sup = std::max(sup, std::abs(s - 1.0));
    }
    CHECK(sup <= 1e-12);

    // and exactly on the tabulated grid modes
    Array sum = p.block_weight(-1);
    for (int j = 0; j <= p.j_max(); ++j) sum += p.block_weight(j);
    CHECK((sum - 1.0).abs().maxCoeff() <= 1e-12);
}

TEST_CASE("disjoint supports and square-sum bounds")
{
    const DyadicPartition p(g1);
    for (int j = 0; j <= p.j_max(); ++j)
        for (int l = j + 2; l <= p.j_max(); ++l)
            CHECK((p.block_weight(j) * p.block_weight(l)).abs().maxCoeff() == 0.0);
    for (int j = 1; j <= p.j_max(); ++j)
        CHECK((p.block_weight(-1) * p.block_weight(j)).abs().maxCoeff() == 0.0);

    Array sq = p.block_weight(-1).square();
    for (int j = 0; j <= p.j_max(); ++j) sq += p.block_weight(j).square();
    CHECK(sq.minCoeff() >= 0.5 - 1e-12);
    CHECK(sq.maxCoeff() <= 1.0 + 1e-12);
}

TEST_CASE("dyadic blocks: range, vanishing, single-mode support")
{
    const DyadicPartition p(g1);
    const Field u = random_field(g1, 1.0, 7, 2.0);
    CHECK(norm_l2(dyadic_block(p, u, -2)) == 0.0);
    CHECK_THROWS(dyadic_block(p, u, -3));
    CHECK_THROWS(dyadic_block(p, u, p.j_max() + 1));

    // |xi0| = 2^{j0}: only blocks j0-1, j0, j0+1 can see it
    const int j0 = 2;
    const Real xi0 = std::ldexp(1.0, j0);
    const int mode = static_cast<int>(std::round(xi0 * g1.length() / (2.0 * Grid::pi())));
    const Field m = single_mode_field(g1, 1.0, {mode, 0});
    for (int j = -1; j <= p.j_max(); ++j) {
        const Real nj = norm_l2(dyadic_block(p, m, j));
        if (j < j0 - 1 || j > j0 + 1) CHECK(nj <= 1e-12);
    }
}

TEST_CASE("block calculus: reconstruction, orthogonality, low pass")
{
    const DyadicPartition p(g1);
    std::mt19937_64 seeds(2025);
    for (int trial = 0; trial < 20; ++trial) {
        const Field u = random_field(g1, 1.0, seeds(), 2.0);
        const Real nu = norm_l2(u);

        Array sum = Array::Zero(g1.modes());
        for (int j = -1; j <= p.j_max(); ++j) sum += dyadic_block(p, u, j).values();
        CHECK(std::sqrt(g1.quad_weight() * (sum - u.values()).square().sum()) <= 1e-12 * nu);

        for (int j = -1; j <= p.j_max(); ++j)
            for (int l = j + 2; l <= p.j_max(); ++l)
                CHECK(norm_l2(dyadic_block(p, dyadic_block(p, u, l), j)) <= 1e-12 * nu);

        const Field s = low_pass(p, u, p.j_max() + 1);
        CHECK((s.values() - u.values()).abs().maxCoeff() <= 1e-12 * u.max_abs());

        // S_j is the partial sum of blocks below j
        const int j = 2;
        Array partial = Array::Zero(g1.modes());
        for (int k = -1; k <= j - 1; ++k) partial += dyadic_block(p, u, k).values();
        const Field sj = low_pass(p, u, j);
        CHECK((sj.values() - partial).abs().maxCoeff() <= 1e-12 * u.max_abs());
    }

    // the sum below block -1 is empty; S_0 is exactly the chi block
    const Field u = random_field(g1, 1.0, 4242, 2.0);
    CHECK(norm_l2(low_pass(p, u, -1)) == 0.0);
    CHECK((low_pass(p, u, 0).values() - dyadic_block(p, u, -1).values())
              .abs()
              .maxCoeff() <= 1e-12 * u.max_abs());
}

TEST_CASE("almost orthogonality")
{
    const DyadicPartition p(g1);
    for (int trial = 0; trial < 30; ++trial) {
        const Field u = random_field(g1, 1.0, 400 + trial, 2.0);
        Real ss = 0;
        for (int j = -1; j <= p.j_max(); ++j) {
            const Real nj = norm_l2(dyadic_block(p, u, j));
            ss += nj * nj;
        }
        const Real n2 = inner_product_l2(u, u);
        CHECK(n2 <= 2.0 * ss);
        CHECK(ss <= 2.0 * n2);
        // the sharp window from the square-sum bounds
        CHECK(ss >= 0.5 * n2 - 1e-12 * n2);
        CHECK(ss <= n2 + 1e-12 * n2);
    }
}

TEST_CASE("besov norm basics")
{
    const DyadicPartition p(g1);
    CHECK(besov_norm(p, Field(g1), 2.0, 2.0) == 0.0);
    CHECK_THROWS(besov_norm(p, Field(g1), 2.0, 0.5)); // r must be >= 1

    // content only in block -1: norm is 2^{-s} ||Delta_{-1} u|| for every r
    const Field low = single_mode_field(g1, 1.0, {8, 0}); // |xi| = 0.5 < 3/4
    const Real nlow = norm_l2(dyadic_block(p, low, -1));
    CHECK(norm_l2(dyadic_block(p, low, 0)) <= 1e-13);
    for (Real s : {0.0, 1.5, 2.0})
        for (Real r : {1.0, 2.0, std::numeric_limits<Real>::infinity()})
            CHECK(std::abs(besov_norm(p, low, s, r) - std::pow(2.0, -s) * nlow) <=
                  1e-12 * nlow);

    // ell^r monotonicity: r = 1 >= r = 2 >= r = inf
    for (int trial = 0; trial < 20; ++trial) {
        const Field u = random_field(g1, 1.0, 500 + trial, 2.0);
        const Real b1 = besov_norm(p, u, 1.0, 1.0);
        const Real b2 = besov_norm(p, u, 1.0, 2.0);
        const Real binf = besov_norm(p, u, 1.0, std::numeric_limits<Real>::infinity());
        CHECK(b1 >= b2 - 1e-12 * b1);
        CHECK(b2 >= binf - 1e-12 * b1);
        CHECK(binf > 0.0);
    }
}

TEST_CASE("B^s_{2,2} is equivalent to the weighted spectral sum")
{
    const DyadicPartition p(g1);
    const Real s = 2.0;

    // brute-force the equivalence constants from the partition table
    Array weight = p.block_weight(-1).square() * std::pow(2.0, -2.0 * s);
    for (int j = 0; j <= p.j_max(); ++j)
        weight += p.block_weight(j).square() * std::pow(2.0, 2.0 * s * j);
    const Array sobolev = (1.0 + g1.freq_sq()).pow(s);
    const Real c_lo = (weight / sobolev).minCoeff();
    const Real c_hi = (weight / sobolev).maxCoeff();
    CHECK(c_lo > 0.0);
    CHECK(c_hi < std::numeric_limits<Real>::infinity());

    const Real vol = std::pow(g1.length(), g1.dim());
    for (int trial = 0; trial < 100; ++trial) {
        const Field u = random_field(g1, 1.0, 600 + trial, 2.0);
        const CArray c = u.spectrum();
        const Real besov = besov_norm(p, u, s, 2.0);
        const Real hs = std::sqrt(vol * (sobolev * c.abs2()).sum());
        const Real ratio = besov / hs;
        CHECK(ratio >= std::sqrt(c_lo) - 1e-12);
        CHECK(ratio <= std::sqrt(c_hi) + 1e-12);
    }

    // at s = 0 the square-sum bounds give the sharp window [1/sqrt2, 1]
    for (int trial = 0; trial < 20; ++trial) {
        const Field u = random_field(g1, 1.0, 700 + trial, 2.0);
        const Real ratio = besov_norm(p, u, 0.0, 2.0) / norm_l2(u);
        CHECK(ratio >= 1.0 / std::sqrt(2.0) - 1e-12);
        CHECK(ratio <= 1.0 + 1e-12);
    }
}

TEST_CASE("commutator ratio: degenerate inputs and refinement stability")
{
    const Grid coarse(1, 32.0 * Grid::pi(), 256);
    const DyadicPartition pc(coarse);

    const Field c(coarse, Array(Array::Constant(coarse.modes(), 2.5)));
    const Field v = random_field(coarse, 1.0, 900, 3.0);
    CHECK(commutator_ratio(pc, c, v, 2.0, 2.0) <= 1e-12);
    CHECK(commutator_ratio(pc, v, Field(coarse), 2.0, 2.0) == 0.0);

    auto fitted = [](const Grid& g, int seed0) {
        const DyadicPartition p(g);
        Real worst = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const Field u = random_field(g, 1.0, seed0 + 2 * trial, 3.0);
            const Field w = random_field(g, 1.0, seed0 + 2 * trial + 1, 3.0);
            worst = std::max(worst, commutator_ratio(p, u, w, 2.0, 2.0));
        }
        return worst;
    };
    const Real c_coarse = fitted(coarse, 1000);
    const Real c_fine = fitted(g1, 3000);
    CHECK(c_coarse > 0.0);
    CHECK(c_fine <= 2.0 * c_coarse);
}

TEST_CASE("product estimate audit")
{
    auto fitted = [](const Grid& g, int seed0) {
        const DyadicPartition p(g);
        Real worst = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const Field u = random_field(g, 1.0, seed0 + 2 * trial, 3.0);
            const Field v = random_field(g, 1.0, seed0 + 2 * trial + 1, 3.0);
            const Field uv(g, Array(u.values() * v.values()));
            const Real lhs = besov_norm(p, uv, 2.0, 2.0);
            const Real rhs = u.max_abs() * besov_norm(p, v, 2.0, 2.0) +
                             besov_norm(p, u, 2.0, 2.0) * v.max_abs();
            worst = std::max(worst, lhs / rhs);
        }
        return worst;
    };
    const Grid coarse(1, 32.0 * Grid::pi(), 256);
    const Real c_coarse = fitted(coarse, 5000);
    const Real c_fine = fitted(g1, 7000);
    CHECK(c_coarse > 0.0);
    CHECK(c_fine <= 2.0 * c_coarse);
}
