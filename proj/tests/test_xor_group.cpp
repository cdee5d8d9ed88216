/*
 *   Copyright 2026 The bckcode authors
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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace bckcode;
using namespace bckcode::testing;

TEST_CASE("xor group construction") {
    SECTION("span of the last two unit vectors") {
        CHECK(xor_group(code_of({"0000", "0001", "0010", "0011"})) == klein4());
    }

    SECTION("word order is ascending regardless of input order") {
        CHECK(xor_group(code_of({"0011", "0001", "0000", "0010"})) == klein4());
    }

    SECTION("singleton zero code") {
        CHECK(xor_group(code_of({"000"})) == CayleyTable::from_rows({{0}}));
    }

    SECTION("the full length-2 code") {
        CHECK(xor_group(code_of({"00", "01", "10", "11"})) == klein4());
    }

    SECTION("rejections") {
        CHECK_THROWS_WITH(xor_group(code_of({"000", "001", "010"})),
                          Catch::Matchers::ContainsSubstring("011"));
        CHECK_THROWS_WITH(xor_group(code_of({"110", "101"})),
                          Catch::Matchers::ContainsSubstring("zero word"));
        CHECK_THROWS_AS(xor_group(code_of({"00", "00"})), std::invalid_argument);
        CHECK_THROWS_AS(xor_group(BlockCode{}), std::invalid_argument);
    }
}

TEST_CASE("group certification") {
    SECTION("xor tables are abelian groups") {
        CHECK(certify_group(klein4()).abelian_group());
        CHECK(certify_group(CayleyTable::from_rows({{0}})).abelian_group());
    }

    SECTION("a BCK table is not a group") {
        const GroupReport rep = certify_group(diamond5());
        CHECK_FALSE(rep.abelian_group());
        CHECK_FALSE(rep.associativity.holds);
        CHECK(rep.associativity.witness == std::vector<Element>{1, 0, 1});
        CHECK_FALSE(rep.commutativity.holds);
        CHECK(rep.commutativity.witness == std::vector<Element>{0, 1});
        CHECK_FALSE(rep.identity.holds);
        CHECK(rep.identity.witness == std::vector<Element>{1});
        CHECK(rep.inverses.holds);  // x*x = theta both ways
    }
}

TEST_CASE("xor groups over all linear codes up to length 4") {
    std::size_t seen = 0;
    for (std::size_t length = 1; length <= 4; ++length) {
        for (const BlockCode& c : all_linear_codes(length)) {
            ++seen;
            const CayleyTable t = xor_group(c);

            CHECK(certify_group(t).abelian_group());
            const AxiomReport rep = verify_bck(t);
            CHECK(rep.bci_certified());
            if (c.size() >= 2) {
                REQUIRE(rep.bck5.has_value());
                CHECK_FALSE(rep.bck5->holds);
                CHECK(rep.bck5->witness == std::vector<Element>{1});
            } else {
                CHECK(rep.bck_certified());
            }

            for (Element i = 0; i < t.size(); ++i) {
                CHECK(t.apply(i, i) == 0);  // self-inverse
                for (Element j = 0; j < t.size(); ++j) CHECK(t.apply(i, j) == t.apply(j, i));
            }
        }
    }
    CHECK(seen == 2 + 5 + 16 + 67);  // subspace counts of F2^1..F2^4
}
