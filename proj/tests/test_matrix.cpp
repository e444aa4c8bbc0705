#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hullkit;
using namespace testing_support;

namespace {

FieldMatrix gf3(std::size_t rows, std::size_t cols, std::vector<Elem> values) {
    return FieldMatrix::from_indices(make_field(3, 1), rows, cols, std::move(values));
}

}  // namespace

TEST(Matmul, IdentityZeroAndScalar) {
    std::mt19937_64 rng(1);
    const FieldSpec f = gf9();
    const FieldMatrix m = random_matrix(f, 3, 4, rng);
    EXPECT_EQ(FieldMatrix::identity(f, 3) * m, m);
    EXPECT_TRUE((m * FieldMatrix::zero(f, 4, 2)).is_zero());
    const FieldElement a = omega() + f.one();
    const FieldMatrix one_by_one = FieldMatrix::from_rows(f, {{a}});
    EXPECT_EQ((one_by_one * one_by_one).at(0, 0), f.from_coeffs(std::vector<std::uint32_t>{0, 2}));
}

TEST(Matmul, MatchesOracleProduct) {
    std::mt19937_64 rng(2);
    const FieldSpec f = make_field(2, 4);
    const oracle::Gf ref(f);
    const FieldMatrix a = random_matrix(f, 3, 5, rng), b = random_matrix(f, 5, 2, rng);
    const FieldMatrix c = a * b;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            std::uint32_t acc = 0;
            for (std::size_t t = 0; t < 5; ++t) acc = ref.add(acc, ref.mul(a.raw(i, t), b.raw(t, j)));
            EXPECT_EQ(c.raw(i, j), acc);
        }
}

TEST(Matmul, Errors) {
    const FieldSpec f = gf9();
    EXPECT_HULLKIT_ERROR(FieldMatrix::zero(f, 2, 3) * FieldMatrix::zero(f, 2, 3), errc::shape_mismatch);
    EXPECT_HULLKIT_ERROR(FieldMatrix::zero(f, 2, 2) * FieldMatrix::zero(make_field(3, 1), 2, 2), errc::spec_mismatch);
    EXPECT_HULLKIT_ERROR(FieldMatrix::from_indices(f, 2, 2, {0, 1, 2}), errc::shape_mismatch);
    EXPECT_HULLKIT_ERROR(FieldMatrix::from_indices(f, 1, 1, {9}), errc::bad_field);
    EXPECT_HULLKIT_ERROR(FieldMatrix::from_rows(f, {{f.one()}, {f.one(), f.one()}}), errc::shape_mismatch);
}

TEST(ConjTranspose, Examples) {
    const FieldSpec f = gf9();
    const FieldMatrix w = FieldMatrix::from_rows(f, {{omega()}});
    EXPECT_EQ(conj_transpose(w).at(0, 0), f.from_coeffs(std::vector<std::uint32_t>{0, 2}));
    EXPECT_EQ(conj_transpose(FieldMatrix::identity(f, 4)), FieldMatrix::identity(f, 4));
    std::mt19937_64 rng(3);
    const FieldMatrix m = random_matrix(f, 2, 3, rng);
    const FieldMatrix mh = conj_transpose(m);
    EXPECT_EQ(mh.rows(), 3u);
    EXPECT_EQ(mh.cols(), 2u);
    EXPECT_EQ(conj_transpose(mh), m);
    EXPECT_HULLKIT_ERROR(conj_transpose(FieldMatrix::identity(make_field(2, 3), 2)), errc::odd_extension);
}

TEST(ConjTranspose, ReversesProducts) {
    std::mt19937_64 rng(4);
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const FieldSpec f = make_hermitian_field(q);
        for (int trial = 0; trial < 20; ++trial) {
            const FieldMatrix a = random_matrix(f, 3, 4, rng), b = random_matrix(f, 4, 2, rng);
            EXPECT_EQ(conj_transpose(a * b), conj_transpose(b) * conj_transpose(a));
        }
    }
}

TEST(Rref, Examples) {
    const FieldSpec f = gf9();
    const auto id = rref(FieldMatrix::identity(f, 3));
    EXPECT_EQ(id.matrix, FieldMatrix::identity(f, 3));
    EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));
    const auto r = rref(gf3(2, 2, {1, 1, 2, 2}));
    EXPECT_EQ(r.matrix, gf3(2, 2, {1, 1, 0, 0}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, IdempotentAndRowSpacePreserving) {
    std::mt19937_64 rng(5);
    for (std::uint32_t q : {3u, 4u}) {
        const FieldSpec f = make_hermitian_field(q);
        for (int trial = 0; trial < 50; ++trial) {
            FieldMatrix m = random_matrix(f, 1 + rng() % 4, 1 + rng() % 6, rng);
            if (trial % 3 == 0 && m.rows() > 1)  // force a dependent row
                for (std::size_t j = 0; j < m.cols(); ++j) m.raw(m.rows() - 1, j) = m.raw(0, j);
            const auto r = rref(m);
            EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
            EXPECT_TRUE(row_space_equal(r.matrix, m));
            EXPECT_TRUE(std::is_sorted(r.pivots.begin(), r.pivots.end()));
            EXPECT_EQ(std::adjacent_find(r.pivots.begin(), r.pivots.end()), r.pivots.end());
            EXPECT_EQ(rank(r.matrix), rank(m));
        }
    }
}

TEST(Rank, Examples) {
    const FieldSpec f = gf9();
    EXPECT_EQ(rank(FieldMatrix::zero(f, 3, 4)), 0u);
    EXPECT_EQ(rank(FieldMatrix::identity(f, 5)), 5u);
    EXPECT_EQ(rank(FieldMatrix::zero(f, 0, 4)), 0u);
}

TEST(Rank, MatchesMinorOracle) {
    std::mt19937_64 rng(6);
    const FieldSpec f = gf9();
    const oracle::Gf ref(f);
    for (int trial = 0; trial < 60; ++trial) {
        FieldMatrix m = random_matrix(f, 3, 5, rng);
        if (trial % 4 == 1)
            for (std::size_t j = 0; j < 5; ++j) m.raw(2, j) = ref.add(m.raw(0, j), ref.mul(2, m.raw(1, j)));
        if (trial % 4 == 2)
            for (std::size_t j = 0; j < 5; ++j) m.raw(1, j) = m.raw(2, j) = 0;
        EXPECT_EQ(rank(m), oracle::minor_rank(ref, oracle::to_mat(m)));
        EXPECT_EQ(rank(m), rank(transpose(m)));
    }
}

TEST(NullSpace, Examples) {
    const FieldMatrix ns = null_space(gf3(1, 2, {1, 1}));
    ASSERT_EQ(ns.rows(), 1u);
    EXPECT_TRUE(row_space_equal(ns, gf3(1, 2, {1, 2})));
    EXPECT_EQ(null_space(FieldMatrix::identity(gf9(), 4)).rows(), 0u);
    const FieldMatrix all = null_space(FieldMatrix::zero(gf9(), 0, 3));
    EXPECT_EQ(all, FieldMatrix::identity(gf9(), 3));
}

TEST(NullSpace, RankNullityAndOrthogonality) {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const FieldSpec f = make_hermitian_field(q);
        for (int trial = 0; trial < 40; ++trial) {
            FieldMatrix m = random_matrix(f, 1 + rng() % 5, 1 + rng() % 7, rng);
            if (trial % 5 == 0)
                for (std::size_t j = 0; j < m.cols(); ++j) m.raw(0, j) = 0;
            const FieldMatrix ns = null_space(m);
            EXPECT_EQ(ns.rows() + rank(m), m.cols());
            EXPECT_EQ(rank(ns), ns.rows());
            EXPECT_TRUE((m * transpose(ns)).is_zero());
        }
    }
}

TEST(Intersect, Examples) {
    std::mt19937_64 rng(8);
    const FieldSpec f = gf9();
    const FieldMatrix m = random_matrix(f, 3, 6, rng);
    const FieldMatrix self = intersect_row_spaces(m, m);
    EXPECT_EQ(self.rows(), rank(m));
    EXPECT_TRUE(row_space_equal(self, m));
    EXPECT_EQ(intersect_row_spaces(gf3(1, 2, {1, 0}), gf3(1, 2, {0, 1})).rows(), 0u);
    EXPECT_EQ(intersect_row_spaces(FieldMatrix::zero(f, 0, 4), FieldMatrix::identity(f, 4)).rows(), 0u);
    EXPECT_HULLKIT_ERROR(intersect_row_spaces(FieldMatrix::zero(f, 1, 3), FieldMatrix::zero(f, 1, 4)), errc::shape_mismatch);
}

TEST(Intersect, AgreesWithZassenhausAndEnumeration) {
    std::mt19937_64 rng(9);
    for (std::uint32_t q : {2u, 3u}) {
        const FieldSpec f = make_hermitian_field(q);
        const oracle::Gf ref(f);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 3 + rng() % 3;
            FieldMatrix a = random_matrix(f, 1 + rng() % 3, n, rng);
            FieldMatrix b = random_matrix(f, 1 + rng() % 3, n, rng);
            if (trial % 2 == 0)  // share a row so intersections are nontrivial
                for (std::size_t j = 0; j < n; ++j) b.raw(0, j) = ref.add(a.raw(0, j), ref.mul(2, a.raw(a.rows() - 1, j)));
            const FieldMatrix got = intersect_row_spaces(a, b);
            EXPECT_EQ(got.rows(), oracle::zassenhaus_dim(ref, oracle::to_mat(a), oracle::to_mat(b), n));
            const auto sa = oracle::row_space(ref, oracle::to_mat(a), n);
            const auto sb = oracle::row_space(ref, oracle::to_mat(b), n);
            std::size_t common = 0;
            for (const auto& w : sa) common += sb.count(w);
            EXPECT_EQ(got.rows(), oracle::log_base(common, f.size()));
            for (std::size_t r = 0; r < got.rows(); ++r) {
                const auto row = oracle::to_mat(got)[r];
                EXPECT_TRUE(sa.count(row) && sb.count(row));
            }
        }
    }
}

TEST(StandardForm, Examples) {
    const FieldSpec f = gf9();
    std::mt19937_64 rng(10);
    const FieldMatrix p = random_matrix(f, 2, 3, rng);
    const FieldMatrix g = hstack(FieldMatrix::identity(f, 2), p);
    const auto sf = standard_form(g);
    EXPECT_EQ(sf.matrix, g);
    EXPECT_EQ(sf.perm, identity_permutation(5));

    const auto swap = standard_form(gf3(1, 2, {0, 1}));
    EXPECT_EQ(swap.matrix, gf3(1, 2, {1, 0}));
    EXPECT_EQ(swap.perm, (Permutation{1, 0}));

    for (int trial = 0; trial < 30; ++trial) {
        FieldMatrix m = random_matrix(f, 2, 5, rng);
        if (rank(m) < 2) continue;
        if (trial % 3 == 0)
            for (std::size_t r = 0; r < 2; ++r) m.raw(r, 0) = 0;  // force a column move
        if (rank(m) < 2) continue;
        const auto out = standard_form(m);
        EXPECT_EQ(select_columns(out.matrix, {0, 1}), FieldMatrix::identity(f, 2));
        EXPECT_TRUE(is_permutation(out.perm, 5));
        EXPECT_TRUE(row_space_equal(out.matrix, permute_columns(m, out.perm)));
    }
    EXPECT_HULLKIT_ERROR(standard_form(gf3(2, 2, {1, 1, 2, 2})), errc::rank_deficient);
}

TEST(Permutations, ComposeAndInvert) {
    const Permutation a{2, 0, 1, 3}, b{3, 2, 1, 0};
    std::mt19937_64 rng(11);
    const FieldMatrix m = random_matrix(gf9(), 2, 4, rng);
    EXPECT_EQ(permute_columns(permute_columns(m, a), b), permute_columns(m, compose_permutations(a, b)));
    EXPECT_EQ(permute_columns(permute_columns(m, a), inverse_permutation(a)), m);
    EXPECT_EQ(compose_permutations(a, inverse_permutation(a)), identity_permutation(4));
    EXPECT_FALSE(is_permutation({0, 0, 1}, 3));
    EXPECT_FALSE(is_permutation({0, 1}, 3));
    EXPECT_HULLKIT_ERROR(permute_columns(m, {0, 1, 1, 2}), errc::bad_permutation);
}

TEST(Stacking, ShapesAndErrors) {
    const FieldSpec f = gf9();
    EXPECT_EQ(vstack(FieldMatrix::zero(f, 0, 3), FieldMatrix::identity(f, 3)), FieldMatrix::identity(f, 3));
    EXPECT_EQ(hstack(FieldMatrix::identity(f, 2), FieldMatrix::zero(f, 2, 0)), FieldMatrix::identity(f, 2));
    EXPECT_HULLKIT_ERROR(vstack(FieldMatrix::zero(f, 1, 2), FieldMatrix::zero(f, 1, 3)), errc::shape_mismatch);
    EXPECT_HULLKIT_ERROR(hstack(FieldMatrix::zero(f, 1, 2), FieldMatrix::zero(f, 2, 2)), errc::shape_mismatch);
}
