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

/**
 * @file xor_group.hpp
 * @brief The row-XOR multiplication on a linear block code and exhaustive
 *        group certification.
 */

#ifndef BCKCODE_XOR_GROUP_HPP
#define BCKCODE_XOR_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "codeword.hpp"

namespace bckcode {

/// Cayley table with entry (i, j) the index of word_i XOR word_j. Words are
/// indexed in ascending lexicographic order, so the zero word is element 0.
/// Requires a duplicate-free linear code.
inline CayleyTable xor_group(const BlockCode& c) {
    if (c.size() == 0) throw std::invalid_argument("code is empty");
    if (c.has_duplicates()) throw std::invalid_argument("code has duplicate codewords");
    const LinearityReport lin = is_linear(c);
    if (!lin) {
        if (lin.failure == LinearityReport::Failure::no_zero_word)
            throw std::invalid_argument("code is not linear: zero word missing");
        throw std::invalid_argument("code is not linear: " + c[lin.first].to_string() + " XOR " +
                                    c[lin.second].to_string() + " = " + lin.escaped.to_string() +
                                    " is not a codeword");
    }

    const BlockCode sorted = lex_sorted(c, LexOrder::ascending);
    auto index_of = [&sorted](const Codeword& w) -> Element {
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] == w) return k;
        throw std::logic_error("XOR escaped a linear code");
    };

    CayleyTable t(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j < sorted.size(); ++j)
            t.set(i, j, index_of(sorted[i] ^ sorted[j]));
    return t;
}

struct GroupReport {
    CheckResult associativity;  // witness (x, y, z)
    CheckResult commutativity;  // witness (x, y)
    CheckResult identity;       // witness (x) with theta*x != x or x*theta != x
    CheckResult inverses;       // witness (x) lacking a two-sided inverse

    bool abelian_group() const {
        return associativity.holds && commutativity.holds && identity.holds && inverses.holds;
    }
};

/// Exhaustive abelian-group certification of a finite table with candidate
/// identity theta.
inline GroupReport certify_group(const CayleyTable& t) {
    const std::size_t n = t.size();
    const Element th = t.zero();
    GroupReport rep;

    for (Element x = 0; x < n && rep.associativity.holds; ++x)
        for (Element y = 0; y < n && rep.associativity.holds; ++y)
            for (Element z = 0; z < n; ++z)
                if (t.apply(t.apply(x, y), z) != t.apply(x, t.apply(y, z))) {
                    rep.associativity = {false, {x, y, z}};
                    break;
                }

    for (Element x = 0; x < n && rep.commutativity.holds; ++x)
        for (Element y = 0; y < n; ++y)
            if (t.apply(x, y) != t.apply(y, x)) {
                rep.commutativity = {false, {x, y}};
                break;
            }

    for (Element x = 0; x < n; ++x)
        if (t.apply(th, x) != x || t.apply(x, th) != x) {
            rep.identity = {false, {x}};
            break;
        }

    for (Element x = 0; x < n; ++x) {
        bool found = false;
        for (Element y = 0; y < n && !found; ++y)
            found = t.apply(x, y) == th && t.apply(y, x) == th;
        if (!found) {
            rep.inverses = {false, {x}};
            break;
        }
    }

    return rep;
}

}  // namespace bckcode

#endif  // BCKCODE_XOR_GROUP_HPP
