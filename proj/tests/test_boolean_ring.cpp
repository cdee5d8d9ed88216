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

#include <random>

#include "helpers.hpp"

using namespace bckcode;
using namespace bckcode::testing;

TEST_CASE("codewords and subsets correspond") {
    CHECK(codeword_to_subset(Codeword::from_string("0011")).members ==
          std::vector<std::size_t>{3, 4});
    CHECK(codeword_to_subset(Codeword::from_string("0000")).empty());
    CHECK(codeword_to_subset(Codeword::from_string("0100")).members ==
          std::vector<std::size_t>{2});

    CHECK(subset_to_codeword(Subset{{4}}, 4).to_string() == "0001");
    CHECK(subset_to_codeword(Subset{}, 3).to_string() == "000");
    CHECK_THROWS_AS(subset_to_codeword(Subset{{5}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(subset_to_codeword(Subset{{0}}, 4), std::invalid_argument);

    SECTION("round trip and operation transport on random words") {
        std::mt19937 rng(13);
        for (int round = 0; round < 100; ++round) {
            const std::size_t n = 1 + rng() % 10;
            const Codeword a = random_codeword(rng, n);
            const Codeword b = random_codeword(rng, n);
            CHECK(subset_to_codeword(codeword_to_subset(a), n) == a);
            CHECK(codeword_to_subset(a ^ b) ==
                  symmetric_difference(codeword_to_subset(a), codeword_to_subset(b)));
            CHECK(codeword_to_subset(a & b) ==
                  intersection(codeword_to_subset(a), codeword_to_subset(b)));
        }
    }
}

TEST_CASE("subset rendering") {
    CHECK(Subset{}.to_string() == "{}");
    CHECK(Subset{{3, 4}}.to_string() == "{3,4}");
}

TEST_CASE("boolean subring predicate") {
    SECTION("the family of a span of two unit vectors") {
        const SubsetFamily f = code_family(code_of({"0000", "0001", "0010", "0011"}));
        CHECK(f.members == std::vector<Subset>{Subset{}, Subset{{4}}, Subset{{3}}, Subset{{3, 4}}});
        CHECK(is_boolean_subring(f).subring);
    }

    SECTION("the empty set alone is a subring") {
        CHECK(is_boolean_subring(SubsetFamily{3, {Subset{}}}).subring);
    }

    SECTION("the even-weight family fails intersection closure") {
        const SubringReport rep = is_boolean_subring(code_family(code_of({"000", "110", "101", "011"})));
        CHECK_FALSE(rep.subring);
        CHECK(rep.failure == SubringReport::Failure::intersection);
        CHECK(rep.first == 1);
        CHECK(rep.second == 2);
        CHECK(rep.missing == Subset{{1}});
    }

    SECTION("a family without the empty set is rejected") {
        const SubringReport rep = is_boolean_subring(code_family(code_of({"10", "01"})));
        CHECK_FALSE(rep.subring);
        CHECK(rep.failure == SubringReport::Failure::missing_empty_set);
    }
}

TEST_CASE("code families") {
    CHECK(code_family(BlockCode{}).members.empty());

    const SubsetFamily f = code_family(code_of({"11111", "01111", "00101", "00011", "00001"}));
    CHECK(f.members == std::vector<Subset>{
                           Subset{{1, 2, 3, 4, 5}},
                           Subset{{2, 3, 4, 5}},
                           Subset{{3, 5}},
                           Subset{{4, 5}},
                           Subset{{5}},
                       });
}

TEST_CASE("linearity and ring closure") {
    SECTION("every linear code's family contains the empty set and is delta-closed") {
        for (std::size_t length = 1; length <= 4; ++length) {
            for (const BlockCode& c : all_linear_codes(length)) {
                const SubsetFamily f = code_family(c);
                CHECK(f.contains(Subset{}));
                for (const Subset& a : f.members)
                    for (const Subset& b : f.members)
                        CHECK(f.contains(symmetric_difference(a, b)));
            }
        }
    }

    SECTION("a subring family always comes from a linear code") {
        std::mt19937 rng(14);
        int subrings_seen = 0;
        for (int round = 0; round < 300; ++round) {
            const BlockCode c = random_code(rng, 6, 1 + rng() % 4);
            if (is_boolean_subring(code_family(c)).subring) {
                ++subrings_seen;
                CHECK(is_linear(c).linear);
            }
        }
        CHECK(subrings_seen > 0);
    }
}
