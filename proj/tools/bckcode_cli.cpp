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

// Command-line front end. Exit status 0 on success or a true verdict, 1 on
// a false verdict (with a witness printed), 2 on input or precondition
// errors. Output is deterministic line-oriented ASCII.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "bckcode/bckcode.hpp"

namespace {

using namespace bckcode;

constexpr int kExitOk = 0;
constexpr int kExitFalseVerdict = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AlgebraInput load_algebra(const std::string& path) {
    std::istringstream in(read_input(path));
    return parse_algebra(in);
}

Poset load_poset(const std::string& path) {
    std::istringstream in(read_input(path));
    return parse_poset(in);
}

BlockCode load_code(const std::string& path) {
    std::istringstream in(read_input(path));
    return parse_code(in);
}

std::string tuple_string(const std::vector<Element>& witness) {
    std::string s = "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(witness[i]) + " [" + element_label(witness[i]) + "]";
    }
    return s + ")";
}

void print_axiom_line(const char* name, const CheckResult& check) {
    if (check.holds)
        std::cout << name << ": ok\n";
    else
        std::cout << name << ": fail at " << tuple_string(check.witness) << "\n";
}

int cmd_verify_algebra(const std::string& path, bool bci_only) {
    const AlgebraInput input = load_algebra(path);
    const AxiomReport rep = bci_only ? verify_bci(input.table) : verify_bck(input.table);
    print_axiom_line("BCI-1", rep.bci1);
    print_axiom_line("BCI-2", rep.bci2);
    print_axiom_line("BCI-3", rep.bci3);
    print_axiom_line("BCI-4", rep.bci4);
    if (rep.bck5) print_axiom_line("BCK-5", *rep.bck5);
    std::cout << "BCI: " << (rep.bci_certified() ? "certified" : "refuted") << "\n";
    if (!bci_only)
        std::cout << "BCK: " << (rep.bck_certified() ? "certified" : "refuted") << "\n";
    const bool ok = bci_only ? rep.bci_certified() : rep.bck_certified();
    return ok ? kExitOk : kExitFalseVerdict;
}

int cmd_algebra_order(const std::string& path) {
    const AlgebraInput input = load_algebra(path);
    auto result = derived_order(input.table);
    if (auto* violation = std::get_if<OrderViolation>(&result)) {
        std::cout << "not a partial order: " << to_string(violation->property) << " fails at "
                  << tuple_string(violation->witness) << "\n";
        return kExitFalseVerdict;
    }
    std::cout << format_poset(std::get<Poset>(result));
    return kExitOk;
}

int cmd_algebra_to_code(const std::string& path, bool identity) {
    const AlgebraInput input = load_algebra(path);
    std::optional<BckFunction> f = input.map;
    if (identity || !f) {
        if (!identity && !f)
            throw std::runtime_error("no 'map' line in input; pass --identity or add one");
        f = BckFunction::identity(input.table.size());
    }
    std::cout << format_code(generate_code(input.table, *f));
    return kExitOk;
}

int cmd_poset_to_code(const std::string& path) {
    std::cout << format_code(poset_to_code(load_poset(path)));
    return kExitOk;
}

int cmd_poset_to_bck(const std::string& path) {
    const PosetAlgebra pa = poset_to_bck(load_poset(path));
    bool renumbered = false;
    for (Element i = 0; i < pa.element_of_index.size(); ++i)
        if (pa.element_of_index[i] != i) renumbered = true;
    if (renumbered)
        for (Element i = 0; i < pa.element_of_index.size(); ++i)
            std::cout << "# element " << i << " = input element " << pa.element_of_index[i]
                      << "\n";
    std::cout << format_algebra(pa.table);
    return kExitOk;
}

int cmd_hasse_dot(const std::string& path) {
    std::cout << hasse_dot(load_poset(path));
    return kExitOk;
}

int cmd_leq_c(const std::string& u, const std::string& v) {
    const bool holds = leq_c(Codeword::from_string(u), Codeword::from_string(v));
    std::cout << (holds ? "true" : "false") << "\n";
    return holds ? kExitOk : kExitFalseVerdict;
}

int cmd_min_distance(const std::string& path) {
    std::cout << min_distance(load_code(path)) << "\n";
    return kExitOk;
}

int cmd_is_linear(const std::string& path) {
    const BlockCode c = load_code(path);
    const LinearityReport rep = is_linear(c);
    if (rep) {
        std::cout << "linear\n";
        return kExitOk;
    }
    if (rep.failure == LinearityReport::Failure::no_zero_word)
        std::cout << "not linear: zero word missing\n";
    else
        std::cout << "not linear: " << c[rep.first].to_string() << " XOR "
                  << c[rep.second].to_string() << " = " << rep.escaped.to_string()
                  << " is not a codeword\n";
    return kExitFalseVerdict;
}

int cmd_code_group(const std::string& path) {
    const BlockCode c = load_code(path);
    const CayleyTable t = xor_group(c);
    const BlockCode sorted = lex_sorted(c, LexOrder::ascending);
    std::cout << format_algebra(t);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        std::cout << "# word " << i << " [" << element_label(i) << "] = " << sorted[i].to_string()
                  << "\n";
    const GroupReport rep = certify_group(t);
    std::cout << "# associativity: " << (rep.associativity.holds ? "ok" : "fail") << "\n"
              << "# commutativity: " << (rep.commutativity.holds ? "ok" : "fail") << "\n"
              << "# identity: " << (rep.identity.holds ? "ok" : "fail") << "\n"
              << "# inverses: " << (rep.inverses.holds ? "ok" : "fail") << "\n"
              << "# abelian group: " << (rep.abelian_group() ? "certified" : "refuted") << "\n";
    return rep.abelian_group() ? kExitOk : kExitFalseVerdict;
}

int cmd_code_to_bck(const std::string& path) {
    const BlockCode c = load_code(path);
    const ReconstructedAlgebra rec = code_to_bck(c);
    std::cout << format_algebra(rec.table);
    std::cout << "# positions:";
    for (Element e : rec.positions) std::cout << " " << e << " [" << element_label(e) << "]";
    std::cout << "\n# words:";
    for (Element e : rec.word_elements) std::cout << " " << e << " [" << element_label(e) << "]";
    std::cout << "\n";
    return kExitOk;
}

int cmd_extended_matrix(const std::string& path) {
    const ExtendedMatrix mat = code_to_matrix(load_code(path));
    for (std::size_t i = 0; i < mat.size(); ++i) {
        for (std::size_t j = 0; j < mat.size(); ++j) std::cout << (mat.cell(i, j) ? '1' : '0');
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_recover(const std::string& path, const std::vector<std::size_t>& positions,
                const std::vector<std::size_t>& words) {
    const AlgebraInput input = load_algebra(path);
    std::cout << format_code(recover_code(input.table, positions, words));
    return kExitOk;
}

int cmd_check_ideal(const std::string& path, const std::vector<std::size_t>& ideal) {
    const AlgebraInput input = load_algebra(path);
    const CheckResult right = is_right_ideal(input.table, ideal);
    const CheckResult closed = is_closed_ideal(input.table, ideal);
    auto describe = [](const CheckResult& r) -> std::string {
        if (r.holds) return "yes";
        if (r.witness.empty()) return "no (theta not in the subset)";
        return "no (witness " + std::to_string(r.witness[0]) + " * " +
               std::to_string(r.witness[1]) + " escapes)";
    };
    std::cout << "right ideal: " << describe(right) << "\n";
    std::cout << "closed ideal: " << describe(closed) << "\n";
    return closed.holds ? kExitOk : kExitFalseVerdict;
}

int cmd_boolean_ring(const std::string& path) {
    const BlockCode c = load_code(path);
    const SubsetFamily family = code_family(c);
    std::cout << "Q = { ";
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << family.members[i].to_string();
    }
    std::cout << " }\n";
    const SubringReport rep = is_boolean_subring(family);
    std::cout << "subring = " << (rep.subring ? "true" : "false") << "\n";
    if (!rep.subring) {
        if (rep.failure == SubringReport::Failure::missing_empty_set) {
            std::cout << "witness: empty set not in family\n";
        } else {
            const char* op = rep.failure == SubringReport::Failure::intersection
                                 ? "intersection"
                                 : "symmetric difference";
            std::cout << "witness: " << op << " of " << family.members[rep.first].to_string()
                      << " and " << family.members[rep.second].to_string() << " = "
                      << rep.missing.to_string() << " not in family\n";
        }
        return kExitFalseVerdict;
    }
    return kExitOk;
}

int cmd_morphism_check(const std::string& path_x, const std::string& path_y,
                       const std::vector<std::size_t>& map) {
    const AlgebraInput x = load_algebra(path_x);
    const AlgebraInput y = load_algebra(path_y);
    const MorphismReport rep = check_morphism(x.table, y.table, map);
    if (rep.preserves.holds)
        std::cout << "morphism: yes\n";
    else
        std::cout << "morphism: no, fails at " << tuple_string(rep.preserves.witness) << "\n";
    std::cout << "bijective: " << (rep.bijective ? "yes" : "no") << "\n";
    std::cout << "isomorphism: " << (rep.isomorphism() ? "yes" : "no") << "\n";
    return rep.morphism() ? kExitOk : kExitFalseVerdict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary block codes from BCK-algebras and posets"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string in_path2;
    std::string word_u, word_v;
    std::vector<std::size_t> opt_positions, opt_words, opt_ideal, opt_map;
    bool flag_identity = false, flag_bci = false;

    auto* verify = app.add_subcommand("verify-algebra", "check the BCI/BCK axioms");
    verify->add_option("input", in_path, "algebra file or - for stdin");
    verify->add_flag("--bci", flag_bci, "require only the BCI axioms");

    auto* order = app.add_subcommand("algebra-order", "derived order of an algebra");
    order->add_option("input", in_path, "algebra file or - for stdin");

    auto* a2c = app.add_subcommand("algebra-to-code", "generate the cut-function code");
    a2c->add_option("input", in_path, "algebra file or - for stdin");
    a2c->add_flag("--identity", flag_identity, "use the identity BCK-function");

    auto* p2c = app.add_subcommand("poset-to-code", "cut vectors of a poset");
    p2c->add_option("input", in_path, "poset file or - for stdin");

    auto* p2b = app.add_subcommand("poset-to-bck", "canonical BCK-algebra on a poset");
    p2b->add_option("input", in_path, "poset file or - for stdin");

    auto* dot = app.add_subcommand("hasse-dot", "covering relation as a DOT digraph");
    dot->add_option("input", in_path, "poset file or - for stdin");

    auto* lc = app.add_subcommand("leq-c", "codeword order comparison");
    lc->add_option("u", word_u, "left codeword")->required();
    lc->add_option("v", word_v, "right codeword")->required();

    auto* md = app.add_subcommand("min-distance", "minimum pairwise Hamming distance");
    md->add_option("input", in_path, "code file or - for stdin");

    auto* lin = app.add_subcommand("is-linear", "zero word and XOR closure check");
    lin->add_option("input", in_path, "code file or - for stdin");

    auto* grp = app.add_subcommand("code-group", "row-XOR group on a linear code");
    grp->add_option("input", in_path, "code file or - for stdin");

    auto* c2b = app.add_subcommand("code-to-bck", "BCK-algebra embedding a code");
    c2b->add_option("input", in_path, "code file or - for stdin");

    auto* ext = app.add_subcommand("extended-matrix", "embedding matrix of a code");
    ext->add_option("input", in_path, "code file or - for stdin");

    auto* rec = app.add_subcommand("recover", "recover a code from an algebra");
    rec->add_option("input", in_path, "algebra file or - for stdin");
    rec->add_option("--positions", opt_positions, "elements indexing codeword bits")
        ->required()
        ->expected(-1);
    rec->add_option("--words", opt_words, "elements yielding one codeword each")
        ->required()
        ->expected(-1);

    auto* ideal = app.add_subcommand("check-ideal", "right/closed ideal predicates");
    ideal->add_option("input", in_path, "algebra file or - for stdin");
    ideal->add_option("--ideal", opt_ideal, "candidate subset")->required()->expected(-1);

    auto* ring = app.add_subcommand("boolean-ring", "subset family and subring verdict");
    ring->add_option("input", in_path, "code file or - for stdin");

    auto* morph = app.add_subcommand("morphism-check", "check a map between algebras");
    morph->add_option("source", in_path, "source algebra file")->required();
    morph->add_option("target", in_path2, "target algebra file")->required();
    morph->add_option("--map", opt_map, "image of each source element")
        ->required()
        ->expected(-1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify_algebra(in_path, flag_bci);
        if (order->parsed()) return cmd_algebra_order(in_path);
        if (a2c->parsed()) return cmd_algebra_to_code(in_path, flag_identity);
        if (p2c->parsed()) return cmd_poset_to_code(in_path);
        if (p2b->parsed()) return cmd_poset_to_bck(in_path);
        if (dot->parsed()) return cmd_hasse_dot(in_path);
        if (lc->parsed()) return cmd_leq_c(word_u, word_v);
        if (md->parsed()) return cmd_min_distance(in_path);
        if (lin->parsed()) return cmd_is_linear(in_path);
        if (grp->parsed()) return cmd_code_group(in_path);
        if (c2b->parsed()) return cmd_code_to_bck(in_path);
        if (ext->parsed()) return cmd_extended_matrix(in_path);
        if (rec->parsed()) return cmd_recover(in_path, opt_positions, opt_words);
        if (ideal->parsed()) return cmd_check_ideal(in_path, opt_ideal);
        if (ring->parsed()) return cmd_boolean_ring(in_path);
        if (morph->parsed()) return cmd_morphism_check(in_path, in_path2, opt_map);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
