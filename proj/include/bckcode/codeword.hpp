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
 * @file codeword.hpp
 * @brief Fixed-length binary codewords and block codes.
 *
 * A Codeword is an immutable-length bit vector; a BlockCode is an ordered
 * list of codewords sharing one length. Duplicates are preserved by the
 * container and rejected by the operations that need set semantics.
 */

#ifndef BCKCODE_CODEWORD_HPP
#define BCKCODE_CODEWORD_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bckcode {

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

class Codeword {
public:
    Codeword() = default;

    /// All-zero word of the given length.
    explicit Codeword(std::size_t length) : bits_(length, 0) {}

    /// Parses a contiguous 0/1 string, e.g. "00101".
    static Codeword from_string(std::string_view s) {
        Codeword w(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                w.bits_[i] = 1;
            } else if (s[i] != '0') {
                throw std::invalid_argument("codeword may contain only '0' and '1'");
            }
        }
        return w;
    }

    std::size_t length() const noexcept { return bits_.size(); }

    bool bit(std::size_t i) const { return bits_.at(i) != 0; }

    void set_bit(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }

    std::size_t weight() const {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
    }

    bool is_zero() const { return weight() == 0; }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s[i] = '1';
        return s;
    }

    friend Codeword operator^(const Codeword& a, const Codeword& b) {
        if (a.length() != b.length())
            throw std::invalid_argument("codeword length mismatch");
        Codeword r(a.length());
        for (std::size_t i = 0; i < a.length(); ++i) r.bits_[i] = a.bits_[i] ^ b.bits_[i];
        return r;
    }

    friend Codeword operator&(const Codeword& a, const Codeword& b) {
        if (a.length() != b.length())
            throw std::invalid_argument("codeword length mismatch");
        Codeword r(a.length());
        for (std::size_t i = 0; i < a.length(); ++i) r.bits_[i] = a.bits_[i] & b.bits_[i];
        return r;
    }

    friend bool operator==(const Codeword&, const Codeword&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Left-to-right comparison with bit 1 above bit 0, i.e. plain string order.
inline bool lex_less(const Codeword& a, const Codeword& b) {
    const std::string sa = a.to_string(), sb = b.to_string();
    return sa < sb;
}

enum class LexOrder { ascending, descending };

class BlockCode {
public:
    BlockCode() = default;

    /// Empty code whose words must have the given length.
    explicit BlockCode(std::size_t length) : length_(length), length_fixed_(true) {}

    static BlockCode from_strings(const std::vector<std::string>& rows) {
        BlockCode c;
        for (const auto& r : rows) c.add(Codeword::from_string(r));
        return c;
    }

    void add(Codeword w) {
        if (!length_fixed_) {
            length_ = w.length();
            length_fixed_ = true;
        } else if (w.length() != length_) {
            throw std::invalid_argument("codeword length mismatch");
        }
        words_.push_back(std::move(w));
    }

    std::size_t size() const noexcept { return words_.size(); }
    std::size_t length() const noexcept { return length_; }

    const Codeword& operator[](std::size_t i) const { return words_.at(i); }
    const std::vector<Codeword>& words() const noexcept { return words_; }

    bool contains(const Codeword& w) const {
        return std::find(words_.begin(), words_.end(), w) != words_.end();
    }

    bool has_duplicates() const {
        std::set<std::string> seen;
        for (const auto& w : words_)
            if (!seen.insert(w.to_string()).second) return true;
        return false;
    }

    friend bool operator==(const BlockCode&, const BlockCode&) = default;

private:
    std::size_t length_ = 0;
    bool length_fixed_ = false;
    std::vector<Codeword> words_;
};

/// Number of positions at which two equal-length words differ.
inline std::size_t hamming_distance(const Codeword& u, const Codeword& v) {
    if (u.length() != v.length())
        throw std::invalid_argument("codeword length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.length(); ++i)
        if (u.bit(i) != v.bit(i)) ++d;
    return d;
}

/// Minimum pairwise Hamming distance. Requires at least two words, no duplicates.
inline std::size_t min_distance(const BlockCode& c) {
    if (c.has_duplicates())
        throw std::invalid_argument("min_distance requires distinct codewords");
    if (c.size() < 2)
        throw std::invalid_argument("min_distance requires at least two codewords");
    std::size_t best = c.length() + 1;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            best = std::min(best, hamming_distance(c[i], c[j]));
    return best;
}

struct LinearityReport {
    enum class Failure { none, no_zero_word, xor_escapes };

    bool linear = true;
    Failure failure = Failure::none;
    std::size_t first = 0;   // word indices of the violating pair
    std::size_t second = 0;
    Codeword escaped;        // the XOR that left the code

    explicit operator bool() const noexcept { return linear; }
};

/// A code is linear when it contains the zero word and is closed under XOR.
inline LinearityReport is_linear(const BlockCode& c) {
    LinearityReport rep;
    if (!c.contains(Codeword(c.length())) || c.size() == 0) {
        rep.linear = false;
        rep.failure = LinearityReport::Failure::no_zero_word;
        return rep;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i; j < c.size(); ++j) {
            Codeword x = c[i] ^ c[j];
            if (!c.contains(x)) {
                rep.linear = false;
                rep.failure = LinearityReport::Failure::xor_escapes;
                rep.first = i;
                rep.second = j;
                rep.escaped = std::move(x);
                return rep;
            }
        }
    }
    return rep;
}

/// Stable reordering by string-lexicographic comparison.
inline BlockCode lex_sorted(const BlockCode& c, LexOrder order) {
    std::vector<Codeword> ws = c.words();
    std::stable_sort(ws.begin(), ws.end(), [order](const Codeword& a, const Codeword& b) {
        return order == LexOrder::ascending ? lex_less(a, b) : lex_less(b, a);
    });
    BlockCode out(c.length());
    for (auto& w : ws) out.add(std::move(w));
    return out;
}

/// Row i of the result is word i.
inline BitMatrix code_matrix(const BlockCode& c) {
    BitMatrix m(c.size(), std::vector<std::uint8_t>(c.length(), 0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.length(); ++j) m[i][j] = c[i].bit(j) ? 1 : 0;
    return m;
}

}  // namespace bckcode

#endif  // BCKCODE_CODEWORD_HPP
