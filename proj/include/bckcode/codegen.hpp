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
 * @file codegen.hpp
 * @brief Block-code generation from a BCK-algebra via cut functions, and
 *        the codeword order.
 *
 * A BCK-function maps an index set {0..n-1} into an algebra; its cut
 * function at q sets bit i exactly when q * f(i) = theta. One codeword per
 * algebra element gives the generated block code.
 */

#ifndef BCKCODE_CODEGEN_HPP
#define BCKCODE_CODEGEN_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "codeword.hpp"

namespace bckcode {

class BckFunction {
public:
    explicit BckFunction(std::vector<Element> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("BCK-function needs a nonempty domain");
    }

    static BckFunction identity(std::size_t n) {
        std::vector<Element> v(n);
        std::iota(v.begin(), v.end(), Element{0});
        return BckFunction(std::move(v));
    }

    std::size_t domain_size() const noexcept { return values_.size(); }
    Element value(std::size_t i) const { return values_.at(i); }
    const std::vector<Element>& values() const noexcept { return values_; }

    bool maps_into(const CayleyTable& t) const {
        for (Element v : values_)
            if (v >= t.size()) return false;
        return true;
    }

private:
    std::vector<Element> values_;
};

namespace detail {

inline void require_bck(const CayleyTable& t) {
    const AxiomReport rep = verify_bck(t);
    if (rep.bck_certified()) return;
    std::string which = !rep.bci1.holds   ? "BCI-1"
                        : !rep.bci2.holds ? "BCI-2"
                        : !rep.bci3.holds ? "BCI-3"
                        : !rep.bci4.holds ? "BCI-4"
                                          : "BCK-5";
    throw std::invalid_argument("not a BCK-algebra (" + which + " fails)");
}

inline void require_compatible(const CayleyTable& t, const BckFunction& f) {
    if (!f.maps_into(t))
        throw std::invalid_argument("BCK-function value out of the algebra's range");
}

inline Codeword cut_row(const CayleyTable& t, const BckFunction& f, Element q) {
    Codeword w(f.domain_size());
    for (std::size_t i = 0; i < f.domain_size(); ++i)
        w.set_bit(i, t.apply(q, f.value(i)) == t.zero());
    return w;
}

}  // namespace detail

/// Bit i is 1 iff q * f(i) = theta. Rejects non-BCK tables.
inline Codeword cut_function(const CayleyTable& t, const BckFunction& f, Element q) {
    detail::require_bck(t);
    detail::require_compatible(t, f);
    if (q >= t.size()) throw std::out_of_range("element index out of range");
    return detail::cut_row(t, f, q);
}

/// One codeword per algebra element, in element order. Row theta is all
/// ones. Duplicate codewords from a non-injective f are preserved.
inline BlockCode generate_code(const CayleyTable& t, const BckFunction& f) {
    detail::require_bck(t);
    detail::require_compatible(t, f);
    BlockCode c(f.domain_size());
    for (Element q = 0; q < t.size(); ++q) c.add(detail::cut_row(t, f, q));
    return c;
}

/// u <= v in the codeword order iff every bit of v is at or below the
/// corresponding bit of u.
inline bool leq_c(const Codeword& u, const Codeword& v) {
    if (u.length() != v.length())
        throw std::invalid_argument("codeword length mismatch");
    for (std::size_t i = 0; i < u.length(); ++i)
        if (v.bit(i) && !u.bit(i)) return false;
    return true;
}

}  // namespace bckcode

#endif  // BCKCODE_CODEGEN_HPP
