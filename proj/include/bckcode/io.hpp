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
 * @file io.hpp
 * @brief Line-oriented text formats for algebras, posets and codes.
 *
 * Algebra:  `algebra n`, then n rows of n entries, then an optional
 *           `map v0 .. v(n-1)` line. Entry 0 is theta. Sparse labels are
 *           renumbered to 0..n-1 by sorted order.
 * Poset:    `poset n`, then `matrix` with n rows of n bits, or `covers`
 *           with one `a b` pair per line meaning a < b covering.
 * Code:     one contiguous 0/1 string per line.
 *
 * `#` starts a comment anywhere; blank lines are ignored. All emitters
 * produce output that re-parses under the matching format.
 */

#ifndef BCKCODE_IO_HPP
#define BCKCODE_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cayley.hpp"
#include "codegen.hpp"
#include "codeword.hpp"
#include "poset.hpp"

namespace bckcode {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

/// Splits into tokens, dropping comments and blank lines.
inline std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

inline long long parse_int(const Line& line, const std::string& tok) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace detail

struct AlgebraInput {
    CayleyTable table;
    std::optional<BckFunction> map;
    std::vector<long long> display_labels;  // original label of each element
};

inline AlgebraInput parse_algebra(std::istream& in) {
    const auto lines = detail::tokenize(in);
    std::size_t k = 0;
    if (k >= lines.size() || lines[k].tokens[0] != "algebra")
        throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 'algebra n' header");
    if (lines[k].tokens.size() != 2)
        throw ParseError(lines[k].number, "expected 'algebra n' header");
    const long long n = detail::parse_int(lines[k], lines[k].tokens[1]);
    if (n < 1) throw ParseError(lines[k].number, "element count must be at least 1");
    ++k;

    std::vector<std::vector<long long>> raw;
    for (long long r = 0; r < n; ++r, ++k) {
        if (k >= lines.size()) throw ParseError(lines.back().number, "missing table row");
        const auto& line = lines[k];
        if (line.tokens.size() != static_cast<std::size_t>(n))
            throw ParseError(line.number, "expected " + std::to_string(n) + " entries in row");
        std::vector<long long> row;
        for (const auto& tok : line.tokens) {
            long long v = detail::parse_int(line, tok);
            if (v < 0) throw ParseError(line.number, "labels must be non-negative");
            row.push_back(v);
        }
        raw.push_back(std::move(row));
    }

    // Dense labels are taken as element indices; a sparse n-label set
    // containing 0 is renumbered by sorted order.
    std::vector<long long> labels(n);
    std::map<long long, Element> index_of;
    bool dense = true;
    for (const auto& row : raw)
        for (long long v : row)
            if (v >= n) dense = false;
    if (dense) {
        for (long long i = 0; i < n; ++i) {
            labels[i] = i;
            index_of[i] = static_cast<Element>(i);
        }
    } else {
        std::vector<long long> distinct;
        for (const auto& row : raw)
            for (long long v : row) distinct.push_back(v);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() != static_cast<std::size_t>(n) || distinct.front() != 0)
            throw ParseError(lines[1].number,
                             "table entry out of range (labels must be 0..n-1, or n distinct "
                             "values including 0)");
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            labels[i] = distinct[i];
            index_of[distinct[i]] = i;
        }
    }

    CayleyTable t(static_cast<std::size_t>(n));
    for (std::size_t x = 0; x < raw.size(); ++x)
        for (std::size_t y = 0; y < raw.size(); ++y) {
            auto it = index_of.find(raw[x][y]);
            if (it == index_of.end())
                throw ParseError(lines[1 + x].number, "table entry out of range");
            t.set(x, y, it->second);
        }

    std::optional<BckFunction> map;
    if (k < lines.size() && lines[k].tokens[0] == "map") {
        const auto& line = lines[k];
        if (line.tokens.size() != static_cast<std::size_t>(n) + 1)
            throw ParseError(line.number, "map needs one value per element");
        std::vector<Element> values;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            long long v = detail::parse_int(line, line.tokens[i]);
            auto it = index_of.find(v);
            if (it == index_of.end()) throw ParseError(line.number, "map value out of range");
            values.push_back(it->second);
        }
        map = BckFunction(std::move(values));
        ++k;
    }
    if (k < lines.size()) throw ParseError(lines[k].number, "unexpected trailing content");
    return {std::move(t), std::move(map), std::move(labels)};
}

inline Poset parse_poset(std::istream& in) {
    const auto lines = detail::tokenize(in);
    std::size_t k = 0;
    if (k >= lines.size() || lines[k].tokens[0] != "poset")
        throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 'poset n' header");
    if (lines[k].tokens.size() != 2)
        throw ParseError(lines[k].number, "expected 'poset n' header");
    const long long n = detail::parse_int(lines[k], lines[k].tokens[1]);
    if (n < 1) throw ParseError(lines[k].number, "element count must be at least 1");
    ++k;
    if (k >= lines.size()) throw ParseError(lines.back().number, "expected 'matrix' or 'covers'");

    std::variant<Poset, OrderViolation> result = OrderViolation{};
    const auto& mode = lines[k];
    if (mode.tokens.size() == 1 && mode.tokens[0] == "matrix") {
        ++k;
        BitMatrix rel(n, std::vector<std::uint8_t>(n, 0));
        for (long long r = 0; r < n; ++r, ++k) {
            if (k >= lines.size()) throw ParseError(lines.back().number, "missing matrix row");
            const auto& line = lines[k];
            std::string bits;
            for (const auto& tok : line.tokens) bits += tok;
            if (bits.size() != static_cast<std::size_t>(n))
                throw ParseError(line.number, "expected " + std::to_string(n) + " bits in row");
            for (long long c = 0; c < n; ++c) {
                if (bits[c] != '0' && bits[c] != '1')
                    throw ParseError(line.number, "matrix rows may contain only 0 and 1");
                rel[r][c] = bits[c] == '1' ? 1 : 0;
            }
        }
        if (k < lines.size()) throw ParseError(lines[k].number, "unexpected trailing content");
        result = Poset::from_matrix(rel);
    } else if (mode.tokens.size() == 1 && mode.tokens[0] == "covers") {
        ++k;
        std::vector<std::pair<Element, Element>> covers;
        for (; k < lines.size(); ++k) {
            const auto& line = lines[k];
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "expected a cover pair 'a b'");
            long long a = detail::parse_int(line, line.tokens[0]);
            long long b = detail::parse_int(line, line.tokens[1]);
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError(line.number, "cover element out of range");
            covers.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
        }
        result = Poset::from_covers(static_cast<std::size_t>(n), covers);
    } else {
        throw ParseError(mode.number, "expected 'matrix' or 'covers'");
    }

    if (auto* violation = std::get_if<OrderViolation>(&result)) {
        std::string msg = std::string("relation is not a partial order: ") +
                          to_string(violation->property) + " fails at (";
        for (std::size_t i = 0; i < violation->witness.size(); ++i) {
            if (i) msg += ", ";
            msg += std::to_string(violation->witness[i]);
        }
        throw ParseError(lines[0].number, msg + ")");
    }
    return std::get<Poset>(std::move(result));
}

inline BlockCode parse_code(std::istream& in) {
    const auto lines = detail::tokenize(in);
    BlockCode c;
    for (const auto& line : lines) {
        std::string bits;
        for (const auto& tok : line.tokens) bits += tok;
        for (char ch : bits)
            if (ch != '0' && ch != '1')
                throw ParseError(line.number, "codewords may contain only 0 and 1");
        try {
            c.add(Codeword::from_string(bits));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, e.what());
        }
    }
    return c;
}

inline std::string format_algebra(const CayleyTable& t) {
    std::string out = "algebra " + std::to_string(t.size()) + "\n";
    for (Element x = 0; x < t.size(); ++x) {
        for (Element y = 0; y < t.size(); ++y) {
            if (y) out += ' ';
            out += std::to_string(t.apply(x, y));
        }
        out += '\n';
    }
    return out;
}

inline std::string format_poset(const Poset& p) {
    std::string out = "poset " + std::to_string(p.size()) + "\nmatrix\n";
    for (Element a = 0; a < p.size(); ++a) {
        for (Element b = 0; b < p.size(); ++b) {
            if (b) out += ' ';
            out += p.leq(a, b) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

inline std::string format_code(const BlockCode& c) {
    std::string out;
    for (const auto& w : c.words()) {
        out += w.to_string();
        out += '\n';
    }
    return out;
}

/// Plain digraph, one edge per covering pair, lower element first.
inline std::string hasse_dot(const Poset& p) {
    std::string out = "digraph hasse {\n";
    for (Element a = 0; a < p.size(); ++a) out += "  " + std::to_string(a) + ";\n";
    for (const auto& [lo, hi] : hasse_edges(p))
        out += "  " + std::to_string(lo) + " -> " + std::to_string(hi) + ";\n";
    return out + "}\n";
}

/// Display label: theta for element 0, w2, w3, ... beyond it.
inline std::string element_label(Element e) {
    return e == 0 ? std::string("theta") : "w" + std::to_string(e + 1);
}

}  // namespace bckcode

#endif  // BCKCODE_IO_HPP
