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

// Shared fixtures and independent oracles for the test suites. The oracles
// here re-derive expected values from first principles and must not call
// into the code paths they check.

#ifndef BCKCODE_TESTS_HELPERS_HPP
#define BCKCODE_TESTS_HELPERS_HPP

#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "bckcode/bckcode.hpp"

namespace bckcode::testing {

// Five-element BCK algebra whose order is 0 < 1 < {2,3} < 4.
inline CayleyTable diamond5() {
    return CayleyTable::from_rows({
        {0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0},
        {2, 1, 0, 1, 0},
        {3, 3, 3, 0, 0},
        {4, 4, 4, 4, 0},
    });
}

// Five-element BCK algebra whose order is 0 below the chains 1 < 3, 2 < 4.
inline CayleyTable twochain5() {
    return CayleyTable::from_rows({
        {0, 0, 0, 0, 0},
        {1, 0, 1, 0, 1},
        {2, 2, 0, 2, 0},
        {3, 1, 3, 0, 3},
        {4, 4, 2, 4, 0},
    });
}

// XOR group on four elements (self-inverse, x*y = x xor y on indices).
inline CayleyTable klein4() {
    return CayleyTable::from_rows({
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    });
}

inline Poset poset_from_matrix_or_fail(const BitMatrix& rel) {
    auto result = Poset::from_matrix(rel);
    if (std::holds_alternative<OrderViolation>(result))
        throw std::logic_error("fixture relation is not a poset");
    return std::get<Poset>(result);
}

inline Poset diamond5_poset() {
    return poset_from_matrix_or_fail({
        {1, 1, 1, 1, 1},
        {0, 1, 1, 1, 1},
        {0, 0, 1, 0, 1},
        {0, 0, 0, 1, 1},
        {0, 0, 0, 0, 1},
    });
}

inline Poset twochain5_poset() {
    return poset_from_matrix_or_fail({
        {1, 1, 1, 1, 1},
        {0, 1, 0, 1, 0},
        {0, 0, 1, 0, 1},
        {0, 0, 0, 1, 0},
        {0, 0, 0, 0, 1},
    });
}

// Four elements with 1 < 0, 2 < 1, 3 < 1; element 0 is the top.
inline Poset tree4_poset() {
    return poset_from_matrix_or_fail({
        {1, 0, 0, 0},
        {1, 1, 0, 0},
        {1, 1, 1, 0},
        {1, 1, 0, 1},
    });
}

inline BlockCode code_of(const std::vector<std::string>& rows) {
    return BlockCode::from_strings(rows);
}

inline std::vector<std::string> strings_of(const BlockCode& c) {
    std::vector<std::string> out;
    for (const auto& w : c.words()) out.push_back(w.to_string());
    return out;
}

// Independent partial-order validator used by the property suites.
inline bool oracle_is_partial_order(const BitMatrix& rel) {
    const std::size_t n = rel.size();
    for (std::size_t a = 0; a < n; ++a)
        if (!rel[a][a]) return false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && rel[a][b] && rel[b][a]) return false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (rel[a][b] && rel[b][c] && !rel[a][c]) return false;
    return true;
}

// Brute-force covering pairs straight from the definition.
inline std::vector<std::pair<Element, Element>> oracle_covers(const Poset& p) {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < p.size(); ++a)
        for (Element b = 0; b < p.size(); ++b) {
            if (a == b || !p.leq(a, b)) continue;
            bool strict_between = false;
            for (Element c = 0; c < p.size(); ++c)
                if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) strict_between = true;
            if (!strict_between) out.emplace_back(a, b);
        }
    return out;
}

// All-pairs minimum Hamming distance, counted bit by bit.
inline std::size_t oracle_min_distance(const std::vector<std::string>& words) {
    std::size_t best = words.at(0).size() + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            std::size_t d = 0;
            for (std::size_t k = 0; k < words[i].size(); ++k)
                if (words[i][k] != words[j][k]) ++d;
            best = std::min(best, d);
        }
    return best;
}

// Relabels a poset: new_of_old[e] is the new index of element e.
inline Poset relabel_poset(const Poset& p, const std::vector<Element>& new_of_old) {
    BitMatrix rel(p.size(), std::vector<std::uint8_t>(p.size(), 0));
    for (Element a = 0; a < p.size(); ++a)
        for (Element b = 0; b < p.size(); ++b)
            rel[new_of_old[a]][new_of_old[b]] = p.leq(a, b) ? 1 : 0;
    return poset_from_matrix_or_fail(rel);
}

// Conjugates a Cayley table by a permutation of its elements.
inline CayleyTable conjugate_table(const CayleyTable& t, const std::vector<Element>& new_of_old) {
    CayleyTable out(t.size());
    for (Element x = 0; x < t.size(); ++x)
        for (Element y = 0; y < t.size(); ++y)
            out.set(new_of_old[x], new_of_old[y], new_of_old[t.apply(x, y)]);
    return out;
}

// Random poset via covering pairs on a shuffled base order.
inline Poset random_poset(std::mt19937& rng, std::size_t n, double edge_bias = 0.4) {
    std::vector<Element> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution edge(edge_bias);
    std::vector<std::pair<Element, Element>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) covers.emplace_back(perm[i], perm[j]);
    auto result = Poset::from_covers(n, covers);
    return std::get<Poset>(result);  // a DAG closure cannot violate the axioms
}

inline Codeword random_codeword(std::mt19937& rng, std::size_t length) {
    std::bernoulli_distribution bit(0.5);
    Codeword w(length);
    for (std::size_t i = 0; i < length; ++i) w.set_bit(i, bit(rng));
    return w;
}

// Duplicate-free random code with at least one word.
inline BlockCode random_code(std::mt19937& rng, std::size_t max_words, std::size_t length) {
    std::uniform_int_distribution<std::size_t> count(1, max_words);
    std::set<std::string> seen;
    BlockCode c(length);
    const std::size_t want = count(rng);
    while (c.size() < want && seen.size() < (std::size_t{1} << length)) {
        Codeword w = random_codeword(rng, length);
        if (seen.insert(w.to_string()).second) c.add(std::move(w));
    }
    return c;
}

// Every labeled partial order on n elements, built by assigning one of
// {incomparable, a<b, b<a} to each unordered pair and keeping the
// transitive assignments.
inline std::vector<Poset> all_labeled_posets(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

    std::size_t combos = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) combos *= 3;

    std::vector<Poset> out;
    for (std::size_t code = 0; code < combos; ++code) {
        BitMatrix rel(n, std::vector<std::uint8_t>(n, 0));
        for (std::size_t a = 0; a < n; ++a) rel[a][a] = 1;
        std::size_t rest = code;
        for (const auto& [a, b] : pairs) {
            switch (rest % 3) {
                case 1: rel[a][b] = 1; break;
                case 2: rel[b][a] = 1; break;
                default: break;
            }
            rest /= 3;
        }
        if (!oracle_is_partial_order(rel)) continue;
        out.push_back(poset_from_matrix_or_fail(rel));
    }
    return out;
}

// Every XOR-closed code of the given length that contains the zero word,
// enumerated as subsets of {0,1}^length.
inline std::vector<BlockCode> all_linear_codes(std::size_t length) {
    const std::size_t space = std::size_t{1} << length;
    std::vector<BlockCode> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (space - 1)); ++mask) {
        std::vector<std::size_t> words{0};  // value 0 is the zero word
        for (std::size_t v = 1; v < space; ++v)
            if (mask & (std::size_t{1} << (v - 1))) words.push_back(v);
        bool closed = true;
        for (std::size_t i = 0; i < words.size() && closed; ++i)
            for (std::size_t j = 0; j < words.size() && closed; ++j) {
                const std::size_t x = words[i] ^ words[j];
                closed = std::find(words.begin(), words.end(), x) != words.end();
            }
        if (!closed) continue;
        BlockCode c(length);
        for (std::size_t v : words) {
            Codeword w(length);
            for (std::size_t b = 0; b < length; ++b)
                w.set_bit(b, (v >> (length - 1 - b)) & 1);
            c.add(std::move(w));
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Every duplicate-free code with exactly m words of length q, as sets.
inline std::vector<BlockCode> all_codes(std::size_t m, std::size_t q) {
    const std::size_t space = std::size_t{1} << q;
    std::vector<BlockCode> out;
    if (m == 0 || m > space) return out;
    std::vector<std::size_t> pick(m);
    // lexicographically next combination of word values
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        BlockCode c(q);
        for (std::size_t v : pick) {
            Codeword w(q);
            for (std::size_t b = 0; b < q; ++b) w.set_bit(b, (v >> (q - 1 - b)) & 1);
            c.add(std::move(w));
        }
        out.push_back(std::move(c));
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (pick[i] + (m - i) < space) break;
            if (i == 0) return out;
        }
        ++pick[i];
        for (std::size_t j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace bckcode::testing

#endif  // BCKCODE_TESTS_HELPERS_HPP
