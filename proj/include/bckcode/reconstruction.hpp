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
 * @file reconstruction.hpp
 * @brief Embedding an arbitrary binary block code into a BCK-algebra and
 *        recovering it through cut functions.
 *
 * A code with m words of length q extends to an (m+q+1) x (m+q+1) 0/1
 * matrix with the block layout
 *
 *     row 0            all ones
 *     rows 1..m        0 | m x m identity | codewords sorted descending
 *     rows m+1..m+q    0 | 0              | q x q identity
 *
 * Read as an order relation this matrix is a poset with minimum 0, and the
 * canonical BCK structure on it recovers the code: element r in 1..m and
 * position x in m+1..m+q give bit 1 exactly when r*x = theta.
 */

#ifndef BCKCODE_RECONSTRUCTION_HPP
#define BCKCODE_RECONSTRUCTION_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cayley.hpp"
#include "codeword.hpp"
#include "poset.hpp"

namespace bckcode {

class ExtendedMatrix {
public:
    std::size_t word_count() const noexcept { return m_; }   // m
    std::size_t word_length() const noexcept { return q_; }  // q
    std::size_t size() const noexcept { return m_ + q_ + 1; }

    bool cell(std::size_t i, std::size_t j) const { return cells_.at(i).at(j) != 0; }
    const BitMatrix& cells() const noexcept { return cells_; }

    /// The input code in descending lexicographic order, as embedded.
    const BlockCode& sorted_words() const noexcept { return sorted_; }

private:
    friend ExtendedMatrix code_to_matrix(const BlockCode&);

    ExtendedMatrix(std::size_t m, std::size_t q, BitMatrix cells, BlockCode sorted)
        : m_(m), q_(q), cells_(std::move(cells)), sorted_(std::move(sorted)) {}

    std::size_t m_, q_;
    BitMatrix cells_;
    BlockCode sorted_;
};

/// Builds the extended matrix of a duplicate-free code.
inline ExtendedMatrix code_to_matrix(const BlockCode& c) {
    const std::size_t m = c.size(), q = c.length();
    if (m < 1 || q < 1)
        throw std::invalid_argument("code must have at least one word of positive length");
    if (c.has_duplicates())
        throw std::invalid_argument("code has duplicate codewords");

    BlockCode sorted = lex_sorted(c, LexOrder::descending);
    const std::size_t n = m + q + 1;
    BitMatrix cells(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) cells[0][j] = 1;
    for (std::size_t i = 1; i <= m; ++i) {
        cells[i][i] = 1;
        for (std::size_t j = 0; j < q; ++j)
            cells[i][m + 1 + j] = sorted[i - 1].bit(j) ? 1 : 0;
    }
    for (std::size_t i = m + 1; i < n; ++i) cells[i][i] = 1;
    return ExtendedMatrix(m, q, std::move(cells), std::move(sorted));
}

/// The matrix read as an order relation. Layout-conforming matrices always
/// form a poset; the axioms are still checked.
inline Poset matrix_to_poset(const ExtendedMatrix& mat) {
    auto result = Poset::from_matrix(mat.cells());
    if (auto* violation = std::get_if<OrderViolation>(&result))
        throw std::logic_error(std::string("extended matrix is not an order: ") +
                               to_string(violation->property) + " fails");
    return std::get<Poset>(std::move(result));
}

/// BCK-algebra built from a code, with the two element sets of the
/// embedding: positions index codeword bits, word elements yield one
/// recovered codeword each.
struct ReconstructedAlgebra {
    CayleyTable table;
    std::vector<Element> positions;      // indices m+1 .. m+q
    std::vector<Element> word_elements;  // indices 1 .. m
};

inline ReconstructedAlgebra code_to_bck(const BlockCode& c) {
    const ExtendedMatrix mat = code_to_matrix(c);
    PosetAlgebra pa = poset_to_bck(matrix_to_poset(mat));

    std::vector<Element> positions(mat.word_length());
    std::iota(positions.begin(), positions.end(), mat.word_count() + 1);
    std::vector<Element> word_elements(mat.word_count());
    std::iota(word_elements.begin(), word_elements.end(), Element{1});
    return {std::move(pa.table), std::move(positions), std::move(word_elements)};
}

/// For each word element r, the codeword over the positions x with bit 1
/// iff r*x = theta.
inline BlockCode recover_code(const CayleyTable& t, const std::vector<Element>& positions,
                              const std::vector<Element>& word_elements) {
    for (Element e : positions)
        if (e >= t.size()) throw std::out_of_range("position element out of range");
    for (Element e : word_elements)
        if (e >= t.size()) throw std::out_of_range("word element out of range");

    BlockCode c(positions.size());
    for (Element r : word_elements) {
        Codeword w(positions.size());
        for (std::size_t i = 0; i < positions.size(); ++i)
            w.set_bit(i, t.apply(r, positions[i]) == t.zero());
        c.add(std::move(w));
    }
    return c;
}

/// theta together with the position elements forms a closed right ideal in
/// every reconstructed algebra; this checks one instance exhaustively.
inline CheckResult verify_closed_right_ideal(const CayleyTable& t, std::size_t m, std::size_t q) {
    if (t.size() != m + q + 1)
        throw std::invalid_argument("table size does not match m + q + 1");
    std::vector<Element> ideal{0};
    for (std::size_t i = 0; i < q; ++i) ideal.push_back(m + 1 + i);
    return is_closed_ideal(t, ideal);
}

}  // namespace bckcode

#endif  // BCKCODE_RECONSTRUCTION_HPP
