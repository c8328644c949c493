/*
 * Copyright 2026 The hyperdet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <random>

#include "hyperdet/tensor.hpp"
#include "test_support.hpp"

using namespace hyperdet;
using namespace hyperdet::testing;

TEST_CASE("slice fixes one index") {
    MultiMatrix id2 = from_matrix(ExactMatrix::identity(2));
    MultiMatrix row = slice(id2, 0, 0);
    CHECK(row.format() == Format{2});
    CHECK(row.at({0}) == 1);
    CHECK(row.at({1}) == 0);

    std::mt19937 rng(21);
    MultiMatrix a = random_tensor(Format{3, 2, 2}, rng);
    MultiMatrix s = slice(a, 0, 1);
    CHECK(s.format() == Format{2, 2});
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) CHECK(s.at({j, k}) == a.at({1, j, k}));

    // fixing two indices commutes
    CHECK(slice(slice(a, 0, 2), 0, 1) == slice(slice(a, 1, 1), 0, 2));

    CHECK_THROWS_AS(slice(a, 3, 0), domain_error);
    CHECK_THROWS_AS(slice(a, 0, 5), domain_error);
}

TEST_CASE("swap_slices is an involution and matches permutation action") {
    std::mt19937 rng(22);
    MultiMatrix a = random_tensor(Format{3, 2, 2}, rng);
    CHECK(swap_slices(swap_slices(a, 1, 0, 1), 1, 0, 1) == a);

    MultiMatrix id2 = from_matrix(ExactMatrix::identity(2));
    MultiMatrix anti = swap_slices(id2, 0, 0, 1);
    CHECK(anti.at({0, 0}) == 0);
    CHECK(anti.at({0, 1}) == 1);
    CHECK(exact_determinant(as_matrix(anti)) == -exact_determinant(as_matrix(id2)));

    // permutation matrix on one axis = slice swap
    ExactMatrix perm(3, 3);
    perm(0, 1) = 1;
    perm(1, 0) = 1;
    perm(2, 2) = 1;
    std::vector<ExactMatrix> g{perm, ExactMatrix::identity(2), ExactMatrix::identity(2)};
    CHECK(multilinear_apply(a, g) == swap_slices(a, 0, 0, 1));
}

TEST_CASE("flattening shapes and ranks") {
    std::mt19937 rng(23);
    MultiMatrix a = random_tensor(Format{3, 2, 2}, rng);
    CHECK(flattening(a, 0).rows() == 3);
    CHECK(flattening(a, 0).cols() == 4);
    CHECK(flattening(a, 1).rows() == 2);
    CHECK(flattening(a, 1).cols() == 6);
    CHECK(flattening(a, 2).rows() == 2);
    CHECK(flattening(a, 2).cols() == 6);

    MultiMatrix pure = random_rank_one(Format{3, 2, 2}, rng);
    for (int i = 0; i < 3; ++i) CHECK(exact_rank(flattening(pure, i)) <= 1);

    // e0 (x) e0 (x) e0 + e1 (x) e1 (x) e1: each 2x4 flattening has rank 2
    MultiMatrix diag{Format{2, 2, 2}};
    diag.at({0, 0, 0}) = 1;
    diag.at({1, 1, 1}) = 1;
    for (int i = 0; i < 3; ++i) CHECK(exact_rank(flattening(diag, i)) == 2);
}

TEST_CASE("decomposability by flattening ranks") {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 5; ++trial) {
        MultiMatrix pure = random_rank_one(Format{2, 3, 2}, rng);
        if (pure.is_zero()) continue;
        CHECK(is_decomposable(pure));
    }

    MultiMatrix diag{Format{2, 2, 2}};
    diag.at({0, 0, 0}) = 1;
    diag.at({1, 1, 1}) = 1;
    CHECK_FALSE(is_decomposable(diag));

    ExactMatrix outer(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) outer(i, j) = (i + 1) * (j + 2);
    CHECK(is_decomposable(from_matrix(outer)));

    CHECK_THROWS_AS(is_decomposable(MultiMatrix{Format{2, 2}}), domain_error);
}

TEST_CASE("multilinear apply basics") {
    std::mt19937 rng(25);
    MultiMatrix a = random_tensor(Format{2, 3, 2}, rng);

    std::vector<ExactMatrix> id{ExactMatrix::identity(2), ExactMatrix::identity(3),
                                ExactMatrix::identity(2)};
    CHECK(multilinear_apply(a, id) == a);

    std::vector<ExactMatrix> scaled = id;
    scaled[1] = Rational(3) * ExactMatrix::identity(3);
    MultiMatrix b = multilinear_apply(a, scaled);
    for (size_t i = 0; i < a.entries().size(); ++i) CHECK(b.entries()[i] == 3 * a.entries()[i]);

    std::vector<ExactMatrix> bad{ExactMatrix::identity(3), ExactMatrix::identity(3),
                                 ExactMatrix::identity(2)};
    CHECK_THROWS_AS(multilinear_apply(a, bad), dimension_error);
}

TEST_CASE("flattening ranks are invariant under invertible changes of basis") {
    std::mt19937 rng(26);
    for (int trial = 0; trial < 10; ++trial) {
        MultiMatrix a = random_tensor(Format{2, 2, 3}, rng, -3, 3);
        std::vector<ExactMatrix> g{random_invertible(2, rng), random_invertible(2, rng),
                                   random_invertible(3, rng)};
        MultiMatrix b = multilinear_apply(a, g);
        for (int i = 0; i < 3; ++i) {
            CHECK(exact_rank(flattening(a, i)) == exact_rank(flattening(b, i)));
        }
    }
}

TEST_CASE("convolution") {
    std::mt19937 rng(27);

    // p = q = 1: ordinary matrix product
    ExactMatrix ma = random_matrix(3, 3, rng);
    ExactMatrix mb = random_matrix(3, 3, rng);
    CHECK(as_matrix(convolve(from_matrix(ma), from_matrix(mb))) == ma * mb);

    // identity on the last axis
    MultiMatrix a = random_tensor(Format{3, 2, 2}, rng);
    CHECK(convolve(a, from_matrix(ExactMatrix::identity(2))) == a);

    // direct-summation oracle
    MultiMatrix b = random_tensor(Format{2, 2}, rng);
    MultiMatrix c = convolve(a, b);
    CHECK(c.format() == Format{3, 2, 2});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Rational expect = a.at({i, j, 0}) * b.at({0, k}) + a.at({i, j, 1}) * b.at({1, k});
                CHECK(c.at({i, j, k}) == expect);
            }

    // associativity on compatible boundary-format triples
    for (int trial = 0; trial < 5; ++trial) {
        MultiMatrix t1 = random_tensor(Format{3, 2, 2}, rng, -4, 4);
        MultiMatrix t2 = random_tensor(Format{2, 2}, rng, -4, 4);
        MultiMatrix t3 = random_tensor(Format{2, 1, 2}, rng, -4, 4);
        CHECK(convolve(convolve(t1, t2), t3) == convolve(t1, convolve(t2, t3)));
    }

    // non-boundary inputs are rejected
    MultiMatrix nb = random_tensor(Format{2, 2, 2}, rng);
    CHECK_THROWS_AS(convolve(nb, from_matrix(ExactMatrix::identity(2))), format_error);
    CHECK_THROWS_AS(convolve(a, from_matrix(random_matrix(3, 3, rng))), dimension_error);
}

TEST_CASE("kernel_check certificates") {
    MultiMatrix id2 = from_matrix(ExactMatrix::identity(2));
    PointTuple x{{{Rational(1), Rational(1)}, {Rational(1), Rational(-2)}}};
    CHECK_FALSE(kernel_check(id2, x));

    // zero out every entry with at least two zero indices: (e0, e0, e0)
    // certifies degeneracy by construction
    std::mt19937 rng(28);
    MultiMatrix corner = random_tensor(Format{3, 2, 2}, rng);
    for (int k = 0; k < 2; ++k) corner.at({0, 0, k}) = 0;
    for (int j = 0; j < 2; ++j) corner.at({0, j, 0}) = 0;
    for (int i = 0; i < 3; ++i) corner.at({i, 0, 0}) = 0;
    PointTuple e0{{{Rational(1), Rational(0), Rational(0)},
                   {Rational(1), Rational(0)},
                   {Rational(1), Rational(0)}}};
    CHECK(kernel_check(corner, e0));

    // v (x) v (x) v against (w, w, w) with <w, v> = 0
    std::vector<Rational> v{Rational(2), Rational(3)};
    std::vector<Rational> w{Rational(-3), Rational(2)};
    MultiMatrix pure = rank_one(Format{2, 2, 2}, {v, v, v});
    CHECK(kernel_check(pure, PointTuple{{w, w, w}}));

    PointTuple zero{{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}}};
    CHECK_THROWS_AS(kernel_check(pure, zero), domain_error);
}

TEST_CASE("kernel_check transforms contragrediently") {
    std::mt19937 rng(29);
    std::vector<Rational> v{Rational(2), Rational(3)};
    std::vector<Rational> w{Rational(-3), Rational(2)};
    MultiMatrix a = rank_one(Format{2, 2, 2}, {v, v, v});
    PointTuple x{{w, w, w}};
    REQUIRE(kernel_check(a, x));

    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ExactMatrix> g;
        for (int i = 0; i < 3; ++i) g.push_back(random_invertible(2, rng));
        MultiMatrix b = multilinear_apply(a, g);

        // y = (g^t)^{-1} x, done exactly via the adjugate over 2x2
        PointTuple y;
        for (int i = 0; i < 3; ++i) {
            const ExactMatrix& m = g[i];
            const Rational det = exact_determinant(m);
            // inverse-transpose of [[a,b],[c,d]] is 1/det [[d,-c],[-b,a]]
            std::vector<Rational> t(2);
            t[0] = (m(1, 1) * x.vectors[i][0] - m(1, 0) * x.vectors[i][1]) / det;
            t[1] = (-m(0, 1) * x.vectors[i][0] + m(0, 0) * x.vectors[i][1]) / det;
            y.vectors.push_back(t);
        }
        CHECK(kernel_check(b, y));
    }
}

TEST_CASE("symmetric embedding") {
    // cube-sum cubic: three unit entries on the main diagonal
    Polynomial fermat(3);
    fermat.add_term({3, 0, 0}, 1);
    fermat.add_term({0, 3, 0}, 1);
    fermat.add_term({0, 0, 3}, 1);
    MultiMatrix a = symmetric_embed(fermat);
    CHECK(a.format() == Format{3, 3, 3});
    std::vector<int> idx(3, 0);
    do {
        const bool diag = idx[0] == idx[1] && idx[1] == idx[2];
        CHECK(a.at(idx) == (diag ? 1 : 0));
    } while (next_index(a.format().dims, idx));

    // polarization of x0 x1
    Polynomial q(2);
    q.add_term({1, 1}, 1);
    MultiMatrix m = symmetric_embed(q);
    CHECK(m.at({0, 1}) == Rational(1, 2));
    CHECK(m.at({1, 0}) == Rational(1, 2));
    CHECK(m.at({0, 0}) == 0);

    // full contraction reproduces the form at random points
    std::mt19937 rng(30);
    std::uniform_int_distribution<int> dist(-5, 5);
    Polynomial f(3);
    f.add_term({2, 1, 0}, 3);
    f.add_term({1, 1, 1}, -2);
    f.add_term({0, 0, 3}, 5);
    MultiMatrix t = symmetric_embed(f);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> x{Rational(dist(rng)), Rational(dist(rng)), frac(dist(rng), 2)};
        Rational contraction = 0;
        std::vector<int> j(3, 0);
        do {
            contraction += t.at(j) * x[j[0]] * x[j[1]] * x[j[2]];
        } while (next_index(t.format().dims, j));
        CHECK(contraction == f.evaluate(x));
    }

    // invariance under index permutations (exhaustive, d <= 3, n <= 2)
    std::vector<int> axes012{0, 1, 2};
    std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms) CHECK(transpose(t, perm) == t);

    Polynomial inhom(2);
    inhom.add_term({2, 0}, 1);
    inhom.add_term({1, 0}, 1);
    CHECK_THROWS_AS(symmetric_embed(inhom), format_error);
}
