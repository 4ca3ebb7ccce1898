#pragma once

#include <map>
#include <string>
#include <vector>

#include "clogic/kernel.hpp"
#include "clogic/semantics.hpp"
#include "clogic/syntax.hpp"

namespace clogic {

// A parsed theory together with the `var` declarations that give default sorts.
struct TheoryDocument {
    Theory theory;
    std::map<std::string, std::string> variables;
};

struct ProofDocument {
    Theory theory;  // the supplied theory extended by the file's own declarations
    Derivation derivation;
};

// One side of a unification problem: items written `[ctx] body;`.
struct UnifyDocument {
    std::vector<TermInContext> terms;
    std::vector<FormulaInContext> formulae;
};

enum class UnifyItemKind { Term, Formula };

// All parsers throw LogicError; syntax problems carry kind ParseError and a
// "source:line:column: " prefix, as do symbol errors found while parsing.
TheoryDocument parse_theory(const std::string& text, const std::string& source = "<input>");
Sequent parse_sequent(const std::string& text, const TheoryDocument& doc, const std::string& source = "<input>");
FiniteModel parse_model(const std::string& text, const Signature& sig, const std::string& source = "<input>");
ProofDocument parse_proof(const std::string& text, const TheoryDocument& base = {},
                          const std::string& source = "<input>");
UnifyDocument parse_unify_items(const std::string& text, const TheoryDocument& doc, UnifyItemKind kind,
                                const std::string& source = "<input>");

std::string print_theory(const Theory& t);
std::string print_model(const FiniteModel& m);
// Declarations of the theory (when given) followed by the numbered lines.
std::string print_proof(const Derivation& d, const Theory* declarations = nullptr);

std::string read_text_file(const std::string& path);

}  // namespace clogic
