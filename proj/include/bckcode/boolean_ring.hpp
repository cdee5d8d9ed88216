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
 * @file boolean_ring.hpp
 * @brief Codewords as subsets of {1..n} and the Boolean-subring closure
 *        test under symmetric difference and intersection.
 */

#ifndef BCKCODE_BOOLEAN_RING_HPP
#define BCKCODE_BOOLEAN_RING_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "codeword.hpp"

namespace bckcode {

/// Subset of a ground set {1..n}, kept as sorted 1-based members.
struct Subset {
    std::vector<std::size_t> members;

    bool empty() const noexcept { return members.empty(); }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(members[i]);
        }
        return s + "}";
    }

    friend bool operator==(const Subset&, const Subset&) = default;
};

inline Subset symmetric_difference(const Subset& a, const Subset& b) {
    Subset r;
    std::set_symmetric_difference(a.members.begin(), a.members.end(), b.members.begin(),
                                  b.members.end(), std::back_inserter(r.members));
    return r;
}

inline Subset intersection(const Subset& a, const Subset& b) {
    Subset r;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(r.members));
    return r;
}

struct SubsetFamily {
    std::size_t ground_size = 0;
    std::vector<Subset> members;

    bool contains(const Subset& s) const {
        return std::find(members.begin(), members.end(), s) != members.end();
    }
};

/// Support of the word, 1-based.
inline Subset codeword_to_subset(const Codeword& c) {
    Subset s;
    for (std::size_t i = 0; i < c.length(); ++i)
        if (c.bit(i)) s.members.push_back(i + 1);
    return s;
}

inline Codeword subset_to_codeword(const Subset& s, std::size_t n) {
    Codeword c(n);
    for (std::size_t e : s.members) {
        if (e == 0 || e > n) throw std::invalid_argument("subset member outside the ground set");
        c.set_bit(e - 1, true);
    }
    return c;
}

struct SubringReport {
    enum class Failure { none, missing_empty_set, symmetric_difference, intersection };

    bool subring = true;
    Failure failure = Failure::none;
    std::size_t first = 0;  // member indices of the violating pair
    std::size_t second = 0;
    Subset missing;

    explicit operator bool() const noexcept { return subring; }
};

/// Subring of the Boolean ring on the power set: contains the empty set and
/// is closed under symmetric difference and intersection.
inline SubringReport is_boolean_subring(const SubsetFamily& f) {
    SubringReport rep;
    if (!f.contains(Subset{})) {
        rep.subring = false;
        rep.failure = SubringReport::Failure::missing_empty_set;
        return rep;
    }
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i; j < f.members.size(); ++j) {
            Subset d = symmetric_difference(f.members[i], f.members[j]);
            if (!f.contains(d)) {
                rep.subring = false;
                rep.failure = SubringReport::Failure::symmetric_difference;
                rep.first = i;
                rep.second = j;
                rep.missing = std::move(d);
                return rep;
            }
            Subset c = intersection(f.members[i], f.members[j]);
            if (!f.contains(c)) {
                rep.subring = false;
                rep.failure = SubringReport::Failure::intersection;
                rep.first = i;
                rep.second = j;
                rep.missing = std::move(c);
                return rep;
            }
        }
    return rep;
}

/// Member i is the support set of word i.
inline SubsetFamily code_family(const BlockCode& c) {
    SubsetFamily f;
    f.ground_size = c.length();
    for (const auto& w : c.words()) f.members.push_back(codeword_to_subset(w));
    return f;
}

}  // namespace bckcode

#endif  // BCKCODE_BOOLEAN_RING_HPP
