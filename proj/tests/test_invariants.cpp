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

#include "hyperdet/invariants.hpp"
#include "hyperdet/poly_parse.hpp"
#include "test_support.hpp"

using namespace hyperdet;
using namespace hyperdet::testing;

namespace {

MultiMatrix sum_of_rank_ones(int count, std::mt19937& rng) {
    MultiMatrix total{Format{3, 3, 3}};
    for (int i = 0; i < count; ++i) {
        const MultiMatrix t = random_rank_one(Format{3, 3, 3}, rng, -4, 4);
        for (size_t e = 0; e < total.entries().size(); ++e) total.entries()[e] += t.entries()[e];
    }
    return total;
}

}  // namespace

TEST_CASE("multilinear rank") {
    std::mt19937 rng(81);
    const MultiMatrix pure = random_rank_one(Format{3, 3, 3}, rng);
    CHECK(multilinear_rank(pure) == std::vector<int>{1, 1, 1});

    CHECK(multilinear_rank(MultiMatrix{Format{2, 3, 2}}) == std::vector<int>{0, 0, 0});

    int generic = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const MultiMatrix two = sum_of_rank_ones(2, rng);
        if (multilinear_rank(two) == std::vector<int>{2, 2, 2}) ++generic;
    }
    CHECK(generic >= 4);  // two random pure tensors are almost surely independent
}

TEST_CASE("degree-9 invariant vanishes exactly on small-rank tensors") {
    std::mt19937 rng(82);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(strassen_invariant(random_rank_one(Format{3, 3, 3}, rng)) == 0);
        CHECK(strassen_invariant(sum_of_rank_ones(4, rng)) == 0);
    }
    int nonzero = 0;
    for (int trial = 0; trial < 10; ++trial) {
        if (strassen_invariant(sum_of_rank_ones(5, rng)) != 0) ++nonzero;
    }
    CHECK(nonzero == 10);  // generic rank-5 sums lie off the hypersurface
}

TEST_CASE("degree-9 invariant scales as c^9 and vanishes axis-independently") {
    std::mt19937 rng(83);
    MultiMatrix a = random_tensor(Format{3, 3, 3}, rng, -3, 3);
    const Rational c(5, 3);
    MultiMatrix scaled = a;
    for (auto& e : scaled.entries()) e *= c;
    CHECK(strassen_invariant(scaled) == rational_pow(c, 9) * strassen_invariant(a));

    // 100 tensors: 50 inside the rank-4 locus, 50 generic
    for (int trial = 0; trial < 50; ++trial) {
        const MultiMatrix low = sum_of_rank_ones(4, rng);
        for (int axis = 0; axis < 3; ++axis) CHECK(strassen_invariant(low, axis) == 0);
        const MultiMatrix generic = sum_of_rank_ones(5, rng);
        const bool v0 = strassen_invariant(generic, 0) == 0;
        for (int axis = 1; axis < 3; ++axis) {
            CHECK((strassen_invariant(generic, axis) == 0) == v0);
        }
    }

    CHECK_THROWS_AS(strassen_invariant(MultiMatrix{Format{2, 2, 2}}), format_error);
}

TEST_CASE("the block matrix is skew for symmetric tensors") {
    const Polynomial f = parse_polynomial("x0^3 - 2*x0*x1*x2 + 5*x2^3 + x1^2*x2", 3);
    const MultiMatrix a = symmetric_embed(f);
    const ExactMatrix m = strassen_matrix(a);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) CHECK(m(i, j) == -m(j, i));
    // det of an odd-order skew matrix is 0: the degree-9 invariant vanishes
    // identically on symmetric tensors, which is why the 8x8 pfaffians exist
    CHECK(exact_determinant(m) == 0);
}

TEST_CASE("pfaffian system of plane cubics") {
    // sum of three cubes: all nine pfaffians vanish
    const auto fermat = aronhold_pfaffians(parse_polynomial("x0^3 + x1^3 + x2^3", 3));
    REQUIRE(fermat.size() == 9);
    for (const auto& v : fermat) CHECK(v == 0);

    // a perfect cube: rank 1, still inside the vanishing locus
    const auto cube = aronhold_pfaffians(parse_polynomial("(x0 + 2*x1 - x2)^3", 3));
    for (const auto& v : cube) CHECK(v == 0);

    // generic cubics: some pfaffian is nonzero
    std::mt19937 rng(84);
    std::uniform_int_distribution<int> dist(-4, 4);
    int with_nonzero = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial f(3);
        std::vector<int> e(3, 0);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                e[0] = i;
                e[1] = j;
                e[2] = 3 - i - j;
                f.add_term(e, dist(rng));
            }
        if (f.is_zero() || !f.is_homogeneous(3)) continue;
        const auto pf = aronhold_pfaffians(f);
        bool any = false;
        for (const auto& v : pf) any = any || v != 0;
        if (any) ++with_nonzero;

        // degree-4 scaling in the coefficients
        const Rational c(3, 2);
        const auto scaled = aronhold_pfaffians(f * c);
        for (int r = 0; r < 9; ++r) CHECK(scaled[r] == rational_pow(c, 4) * pf[r]);
    }
    CHECK(with_nonzero >= 9);  // generic cubics are not sums of three cubes

    CHECK_THROWS_AS(aronhold_pfaffians(parse_polynomial("x0^2 + x1^2", 3)), format_error);
    CHECK_THROWS_AS(aronhold_pfaffians(parse_polynomial("x0^3 + x1", 3)), format_error);
}
