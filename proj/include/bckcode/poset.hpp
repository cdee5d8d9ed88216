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
 * @file poset.hpp
 * @brief Finite partially ordered sets, cut vectors, the canonical BCK
 *        structure on a poset with minimum, and the order derived from a
 *        Cayley table.
 *
 * The cut vector of q lists, per element b, whether q <= b; collecting cut
 * vectors over all elements yields a binary block code whose matrix equals
 * the order relation itself.
 */

#ifndef BCKCODE_POSET_HPP
#define BCKCODE_POSET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "cayley.hpp"
#include "codeword.hpp"

namespace bckcode {

enum class OrderProperty { reflexivity, antisymmetry, transitivity };

struct OrderViolation {
    OrderProperty property;
    std::vector<Element> witness;
};

inline const char* to_string(OrderProperty p) {
    switch (p) {
        case OrderProperty::reflexivity: return "reflexivity";
        case OrderProperty::antisymmetry: return "antisymmetry";
        case OrderProperty::transitivity: return "transitivity";
    }
    return "?";
}

namespace detail {

/// First violated poset axiom of a square 0/1 relation, checked in the
/// order reflexivity, antisymmetry, transitivity with lexicographic
/// witnesses, or nullopt when the relation is a partial order.
inline std::optional<OrderViolation> order_violation(const BitMatrix& rel) {
    const std::size_t n = rel.size();
    for (std::size_t a = 0; a < n; ++a)
        if (!rel[a][a]) return OrderViolation{OrderProperty::reflexivity, {a}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && rel[a][b] && rel[b][a])
                return OrderViolation{OrderProperty::antisymmetry, {a, b}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!rel[a][b]) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (rel[b][c] && !rel[a][c])
                    return OrderViolation{OrderProperty::transitivity, {a, b, c}};
        }
    return std::nullopt;
}

}  // namespace detail

class Poset {
public:
    /// Validates the relation; returns the violated axiom instead of a poset
    /// when the input is not a partial order.
    static std::variant<Poset, OrderViolation> from_matrix(const BitMatrix& rel) {
        if (rel.empty()) throw std::invalid_argument("poset needs at least one element");
        for (const auto& row : rel)
            if (row.size() != rel.size())
                throw std::invalid_argument("relation matrix must be square");
        if (auto v = detail::order_violation(rel)) return *v;
        Poset p(rel.size());
        for (std::size_t a = 0; a < rel.size(); ++a)
            for (std::size_t b = 0; b < rel.size(); ++b)
                p.leq_[a * rel.size() + b] = rel[a][b] ? 1 : 0;
        return p;
    }

    /// Builds the reflexive-transitive closure of covering pairs a < b.
    /// A cycle surfaces as an antisymmetry violation.
    static std::variant<Poset, OrderViolation> from_covers(
        std::size_t n, const std::vector<std::pair<Element, Element>>& covers) {
        if (n == 0) throw std::invalid_argument("poset needs at least one element");
        BitMatrix rel(n, std::vector<std::uint8_t>(n, 0));
        for (std::size_t a = 0; a < n; ++a) rel[a][a] = 1;
        for (const auto& [a, b] : covers) {
            if (a >= n || b >= n) throw std::invalid_argument("cover element out of range");
            if (a == b) throw std::invalid_argument("cover relates an element to itself");
            rel[a][b] = 1;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (rel[a][k] && rel[k][b]) rel[a][b] = 1;
        return from_matrix(rel);
    }

    std::size_t size() const noexcept { return n_; }

    bool leq(Element a, Element b) const {
        if (a >= n_ || b >= n_) throw std::out_of_range("element index out of range");
        return leq_[a * n_ + b] != 0;
    }

    BitMatrix matrix() const {
        BitMatrix m(n_, std::vector<std::uint8_t>(n_, 0));
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) m[a][b] = leq_[a * n_ + b];
        return m;
    }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    explicit Poset(std::size_t n) : n_(n), leq_(n * n, 0) {}

    std::size_t n_;
    std::vector<std::uint8_t> leq_;
};

/// Bit b of the result is 1 iff q <= b.
inline Codeword cut_vector(const Poset& p, Element q) {
    Codeword w(p.size());
    for (Element b = 0; b < p.size(); ++b) w.set_bit(b, p.leq(q, b));
    return w;
}

/// One cut vector per element, in element order. The code matrix equals the
/// order relation matrix.
inline BlockCode poset_to_code(const Poset& p) {
    BlockCode c(p.size());
    for (Element q = 0; q < p.size(); ++q) c.add(cut_vector(p, q));
    return c;
}

/// The element below every other one, if the poset has one.
inline std::optional<Element> minimum(const Poset& p) {
    for (Element a = 0; a < p.size(); ++a) {
        bool below_all = true;
        for (Element b = 0; b < p.size() && below_all; ++b) below_all = p.leq(a, b);
        if (below_all) return a;
    }
    return std::nullopt;
}

/// Covering pairs (lower, upper): a < b with nothing strictly between.
inline std::vector<std::pair<Element, Element>> hasse_edges(const Poset& p) {
    std::vector<std::pair<Element, Element>> edges;
    for (Element a = 0; a < p.size(); ++a)
        for (Element b = 0; b < p.size(); ++b) {
            if (a == b || !p.leq(a, b)) continue;
            bool covering = true;
            for (Element c = 0; c < p.size() && covering; ++c)
                if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) covering = false;
            if (covering) edges.emplace_back(a, b);
        }
    return edges;
}

/// Cayley table together with the renumbering it was built under;
/// element_of_index[i] is the original poset element now called i.
struct PosetAlgebra {
    CayleyTable table;
    std::vector<Element> element_of_index;
};

/// Canonical BCK structure on a poset with minimum: x*y = theta when x <= y
/// and x*y = x otherwise. The minimum becomes element 0; the remaining
/// elements keep their relative order.
inline PosetAlgebra poset_to_bck(const Poset& p) {
    const auto min = minimum(p);
    if (!min) throw std::invalid_argument("poset has no minimum element");

    std::vector<Element> element_of_index;
    element_of_index.reserve(p.size());
    element_of_index.push_back(*min);
    for (Element e = 0; e < p.size(); ++e)
        if (e != *min) element_of_index.push_back(e);

    CayleyTable t(p.size());
    for (Element i = 0; i < p.size(); ++i)
        for (Element j = 0; j < p.size(); ++j)
            t.set(i, j, p.leq(element_of_index[i], element_of_index[j]) ? 0 : i);
    return {std::move(t), std::move(element_of_index)};
}

/// Relation x <= y iff x*y = theta, validated as a partial order.
inline std::variant<Poset, OrderViolation> derived_order(const CayleyTable& t) {
    BitMatrix rel(t.size(), std::vector<std::uint8_t>(t.size(), 0));
    for (Element x = 0; x < t.size(); ++x)
        for (Element y = 0; y < t.size(); ++y)
            rel[x][y] = t.apply(x, y) == t.zero() ? 1 : 0;
    return Poset::from_matrix(rel);
}

}  // namespace bckcode

#endif  // BCKCODE_POSET_HPP
