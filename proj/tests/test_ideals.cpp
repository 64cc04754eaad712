#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gr2;

namespace {

const LabeledTree& sigma1() {
    static const LabeledTree t = enumerate_trivalent(4).front();
    return t;
}

PlueckerPolynomial p(int i, int j) { return PlueckerPolynomial::var(i, j); }

}  // namespace

TEST(Ideals, InitialFormExamples) {
    const auto d = dissimilarity(EdgeWeighting::indicator(sigma1(), EdgeId::parse("e1.2")));
    const auto f = p(1, 2) * p(3, 4) - p(1, 4) * p(2, 3) + p(1, 3) * p(2, 4);
    EXPECT_EQ(initial_form(f, d), p(1, 3) * p(2, 4) - p(1, 4) * p(2, 3));
    EXPECT_EQ(initial_form(f, DissimilarityVector::zero(4)), f);
    EXPECT_EQ(initial_form(p(1, 2) * p(3, 4), d), p(1, 2) * p(3, 4));
    EXPECT_THROW(initial_form(PlueckerPolynomial(), d), undefined_value_error);
}

TEST(Ideals, MonomialMapExamples) {
    EXPECT_EQ(to_string(monomial_map(sigma1(), PlueckerMonomial::var(1, 2)), sigma1()), "y[l1]*y[l2]");
    EXPECT_EQ(to_string(monomial_map(sigma1(), PlueckerMonomial::var(1, 3)), sigma1()), "y[l1]*y[l3]*y[e1.2]");
    const auto a = monomial_map(sigma1(), PlueckerMonomial({{1, 3}, {2, 4}}));
    EXPECT_EQ(a, monomial_map(sigma1(), PlueckerMonomial({{1, 4}, {2, 3}})));
    EXPECT_EQ(a.exponents, (std::vector<int>{1, 1, 1, 1, 2}));
    EXPECT_EQ(to_string(monomial_map(sigma1(), PlueckerMonomial()), sigma1()), "1");
}

TEST(Ideals, MonomialMapIsAHomomorphism) {
    std::mt19937_64 rng(41);
    for (const auto& t : enumerate_trivalent(6)) {
        const auto f = oracle::random_polynomial(rng, 6, 2, 3);
        const auto g = oracle::random_polynomial(rng, 6, 2, 3);
        const auto& a = f.terms().begin()->first;
        const auto& b = g.terms().begin()->first;
        const auto ya = monomial_map(t, a), yb = monomial_map(t, b), yab = monomial_map(t, a * b);
        for (std::size_t k = 0; k < t.edge_count(); ++k) EXPECT_EQ(yab.exponents[k], ya.exponents[k] + yb.exponents[k]);
    }
}

TEST(Ideals, KernelMembershipExamples) {
    EXPECT_TRUE(toric_kernel_membership(sigma1(), p(1, 3) * p(2, 4) - p(1, 4) * p(2, 3)));
    EXPECT_FALSE(toric_kernel_membership(sigma1(), p(1, 2) * p(3, 4) - p(1, 4) * p(2, 3)));
    EXPECT_TRUE(toric_kernel_membership(sigma1(), PlueckerPolynomial()));
}

TEST(Ideals, InitialFormsOfRelationsAreKernelBinomialsUpToSign) {
    for (int n = 4; n <= 6; ++n)
        for (const auto& t : enumerate_trivalent(n)) {
            std::mt19937_64 rng(42);
            const auto d = dissimilarity(oracle::random_weighting(rng, t));
            const auto& order = t.planar_order();
            std::vector<int> position(static_cast<std::size_t>(n) + 1);
            for (std::size_t k = 0; k < order.size(); ++k) position[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k)
                        for (int l = k + 1; l <= n; ++l) {
                            const auto g = initial_form(plucker_relation(i, j, k, l), d);
                            ASSERT_EQ(g.size(), 2u);
                            auto it = g.terms().begin();
                            const auto& first = it->first;
                            const auto& second = (++it)->first;
                            EXPECT_EQ(monomial_map(t, first), monomial_map(t, second));
                            // Flipping p[i,j] when j precedes i in the planar order lands in the kernel.
                            PlueckerPolynomial twisted;
                            for (const auto& [m, c] : g.terms()) {
                                Rational sign = c;
                                for (auto [a, b] : m.factors())
                                    if (position[static_cast<std::size_t>(a)] > position[static_cast<std::size_t>(b)]) sign = -sign;
                                twisted.add_term(m, sign);
                            }
                            EXPECT_TRUE(toric_kernel_membership(t, twisted)) << to_string(g);
                        }
        }
}

TEST(Ideals, KernelOfTheFirstQuartetInDegreeTwo) {
    const auto k = kernel_binomials(sigma1(), 2);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(to_string(k.front()), "p[1,3] * p[2,4] - p[1,4] * p[2,3]");
}

TEST(Ideals, HilbertCheckFourLeaves) {
    const auto report = initial_ideal_hilbert_check(sigma1(), 3);
    ASSERT_EQ(report.degrees.size(), 3u);
    EXPECT_EQ(report.degrees[0].monomials, 6u);
    EXPECT_EQ(report.degrees[0].ideal_dim, 0u);
    EXPECT_EQ(report.degrees[0].quotient, 6u);
    EXPECT_EQ(report.degrees[1].monomials, 21u);
    EXPECT_EQ(report.degrees[1].ideal_dim, 1u);
    EXPECT_EQ(report.degrees[1].quotient, 20u);
    EXPECT_EQ(report.degrees[1].semigroup_count, 20u);
    EXPECT_TRUE(report.pass());
    const auto j = report.to_json();
    EXPECT_EQ(j.at("n"), 4);
    EXPECT_EQ(j.at("degrees").size(), 3u);
    EXPECT_EQ(j.at("degrees")[1].at("ideal_dim"), 1);
    EXPECT_TRUE(j.at("degrees")[1].at("pass").get<bool>());
}

TEST(Ideals, HilbertCheckFiveLeavesDegreeTwo) {
    for (const auto& t : enumerate_trivalent(5)) {
        const auto report = initial_ideal_hilbert_check(t, 2);
        EXPECT_TRUE(report.pass());
        EXPECT_EQ(report.degrees[1].quotient, oracle::hook_content_two_rows(5, 2));
    }
}

TEST(Ideals, SizeLimitNamesTheCase) {
    try {
        initial_ideal_hilbert_check(enumerate_trivalent(8).front(), 4);
        FAIL() << "expected size_limit_error";
    } catch (const size_limit_error& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("n=8"), std::string::npos);
        EXPECT_NE(what.find("d=4"), std::string::npos);
    }
    EXPECT_THROW(initial_ideal_hilbert_check(sigma1(), 0), std::invalid_argument);
}

TEST(Ideals, RankOfSmallIntegerMatrices) {
    using R = SparseRow;
    EXPECT_EQ(rank({}), 0u);
    EXPECT_EQ(rank({R{{0, 2}, {1, 4}}, R{{0, 1}, {1, 2}}}), 1u);
    EXPECT_EQ(rank({R{{0, 1}, {2, 1}}, R{{1, 1}, {2, 1}}, R{{0, 1}, {1, -1}}}), 2u);
    EXPECT_EQ(rank({R{{0, 3}}, R{{1, 5}}, R{{2, 7}}}), 3u);
}
