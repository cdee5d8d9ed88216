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
 * @file cayley.hpp
 * @brief Finite algebras of type (2,0) as Cayley tables, with exhaustive
 *        verification of the BCI/BCK axioms and related predicates.
 *
 * Elements are indices 0..n-1 with index 0 playing the role of the
 * distinguished element theta. The axioms checked are
 *
 *   BCI-1  ((x*y)*(x*z))*(z*y) = theta
 *   BCI-2  (x*(x*y))*y = theta
 *   BCI-3  x*x = theta
 *   BCI-4  x*y = theta and y*x = theta imply x = y
 *   BCK-5  theta*x = theta
 *
 * All checks run to completion over every tuple and record the
 * lexicographically smallest counterexample of each failing axiom.
 */

#ifndef BCKCODE_CAYLEY_HPP
#define BCKCODE_CAYLEY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bckcode {

using Element = std::size_t;

/// Outcome of one exhaustive check. The witness is the smallest violating
/// tuple in lexicographic order, empty while the property holds.
struct CheckResult {
    bool holds = true;
    std::vector<Element> witness;

    explicit operator bool() const noexcept { return holds; }
};

class CayleyTable {
public:
    /// n-element table with every product theta.
    explicit CayleyTable(std::size_t n) : n_(n), cells_(n * n, 0) {
        if (n == 0) throw std::invalid_argument("algebra needs at least one element");
    }

    /// Builds from explicit rows; entries must be indices in [0, n).
    static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows) {
        CayleyTable t(rows.size());
        for (std::size_t x = 0; x < rows.size(); ++x) {
            if (rows[x].size() != rows.size())
                throw std::invalid_argument("Cayley table must be square");
            for (std::size_t y = 0; y < rows.size(); ++y) t.set(x, y, rows[x][y]);
        }
        return t;
    }

    std::size_t size() const noexcept { return n_; }
    Element zero() const noexcept { return 0; }

    Element apply(Element x, Element y) const {
        check_index(x);
        check_index(y);
        return cells_[x * n_ + y];
    }

    void set(Element x, Element y, Element value) {
        check_index(x);
        check_index(y);
        if (value >= n_) throw std::invalid_argument("table entry out of range");
        cells_[x * n_ + y] = value;
    }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
    void check_index(Element e) const {
        if (e >= n_) throw std::out_of_range("element index out of range");
    }

    std::size_t n_;
    std::vector<Element> cells_;
};

struct AxiomReport {
    CheckResult bci1, bci2, bci3, bci4;
    std::optional<CheckResult> bck5;  // filled by verify_bck only

    bool bci_certified() const {
        return bci1.holds && bci2.holds && bci3.holds && bci4.holds;
    }
    bool bck_certified() const {
        return bci_certified() && bck5.has_value() && bck5->holds;
    }
};

inline AxiomReport verify_bci(const CayleyTable& t) {
    const std::size_t n = t.size();
    const Element th = t.zero();
    AxiomReport rep;

    for (Element x = 0; x < n && rep.bci1.holds; ++x)
        for (Element y = 0; y < n && rep.bci1.holds; ++y)
            for (Element z = 0; z < n; ++z) {
                const Element lhs = t.apply(t.apply(t.apply(x, y), t.apply(x, z)), t.apply(z, y));
                if (lhs != th) {
                    rep.bci1 = {false, {x, y, z}};
                    break;
                }
            }

    for (Element x = 0; x < n && rep.bci2.holds; ++x)
        for (Element y = 0; y < n; ++y) {
            if (t.apply(t.apply(x, t.apply(x, y)), y) != th) {
                rep.bci2 = {false, {x, y}};
                break;
            }
        }

    for (Element x = 0; x < n; ++x) {
        if (t.apply(x, x) != th) {
            rep.bci3 = {false, {x}};
            break;
        }
    }

    for (Element x = 0; x < n && rep.bci4.holds; ++x)
        for (Element y = 0; y < n; ++y) {
            if (x != y && t.apply(x, y) == th && t.apply(y, x) == th) {
                rep.bci4 = {false, {x, y}};
                break;
            }
        }

    return rep;
}

inline AxiomReport verify_bck(const CayleyTable& t) {
    AxiomReport rep = verify_bci(t);
    CheckResult bck5;
    for (Element x = 0; x < t.size(); ++x) {
        if (t.apply(t.zero(), x) != t.zero()) {
            bck5 = {false, {x}};
            break;
        }
    }
    rep.bck5 = std::move(bck5);
    return rep;
}

/// x*(x*y) = y*(y*x) for all pairs.
inline CheckResult is_commutative(const CayleyTable& t) {
    for (Element x = 0; x < t.size(); ++x)
        for (Element y = 0; y < t.size(); ++y)
            if (t.apply(x, t.apply(x, y)) != t.apply(y, t.apply(y, x)))
                return {false, {x, y}};
    return {};
}

/// x*(y*x) = x for all pairs.
inline CheckResult is_implicative(const CayleyTable& t) {
    for (Element x = 0; x < t.size(); ++x)
        for (Element y = 0; y < t.size(); ++y)
            if (t.apply(x, t.apply(y, x)) != x) return {false, {x, y}};
    return {};
}

struct MorphismReport {
    CheckResult preserves;  // f(x*y) = f(x) o f(y); witness (x, y)
    bool bijective = false;

    bool morphism() const { return preserves.holds; }
    bool isomorphism() const { return preserves.holds && bijective; }
};

/// Checks f : X -> Y against the defining identity. f must be total on X
/// with values inside Y.
inline MorphismReport check_morphism(const CayleyTable& tx, const CayleyTable& ty,
                                     std::span<const Element> f) {
    if (f.size() != tx.size())
        throw std::invalid_argument("map must be total on the source algebra");
    for (Element v : f)
        if (v >= ty.size()) throw std::invalid_argument("map value out of range");

    MorphismReport rep;
    for (Element x = 0; x < tx.size() && rep.preserves.holds; ++x)
        for (Element y = 0; y < tx.size(); ++y) {
            if (f[tx.apply(x, y)] != ty.apply(f[x], f[y])) {
                rep.preserves = {false, {x, y}};
                break;
            }
        }

    if (tx.size() == ty.size()) {
        std::vector<bool> hit(ty.size(), false);
        for (Element v : f) hit[v] = true;
        rep.bijective = std::find(hit.begin(), hit.end(), false) == hit.end();
    }
    return rep;
}

namespace detail {

inline std::vector<bool> subset_mask(const CayleyTable& t, const std::vector<Element>& subset) {
    std::vector<bool> mask(t.size(), false);
    for (Element e : subset) {
        if (e >= t.size()) throw std::invalid_argument("subset element out of range");
        mask[e] = true;
    }
    return mask;
}

}  // namespace detail

/// theta in I and x in I, y in X imply x*y in I.
/// A failing result carries witness {} when theta is missing, {x, y} otherwise.
inline CheckResult is_right_ideal(const CayleyTable& t, const std::vector<Element>& subset) {
    const auto mask = detail::subset_mask(t, subset);
    if (!mask[t.zero()]) return {false, {}};
    for (Element x = 0; x < t.size(); ++x) {
        if (!mask[x]) continue;
        for (Element y = 0; y < t.size(); ++y)
            if (!mask[t.apply(x, y)]) return {false, {x, y}};
    }
    return {};
}

/// Right ideal that is also a subalgebra (x, y in I imply x*y in I).
inline CheckResult is_closed_ideal(const CayleyTable& t, const std::vector<Element>& subset) {
    CheckResult right = is_right_ideal(t, subset);
    if (!right.holds) return right;
    const auto mask = detail::subset_mask(t, subset);
    for (Element x = 0; x < t.size(); ++x) {
        if (!mask[x]) continue;
        for (Element y = 0; y < t.size(); ++y)
            if (mask[y] && !mask[t.apply(x, y)]) return {false, {x, y}};
    }
    return {};
}

}  // namespace bckcode

#endif  // BCKCODE_CAYLEY_HPP
