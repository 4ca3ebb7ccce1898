#pragma once

#include <string>

#include "clogic/frontend.hpp"

namespace clogic::testing {

inline TheoryDocument theory(const std::string& declarations) { return parse_theory("version 1;\n" + declarations); }

inline Sequent sequent(const TheoryDocument& doc, const std::string& text) { return parse_sequent(text, doc); }

inline FormulaInContext formula_in_context(const TheoryDocument& doc, const std::string& item) {
    return parse_unify_items("version 1;\n" + item + ";", doc, UnifyItemKind::Formula).formulae.at(0);
}

inline TermInContext term_in_context(const TheoryDocument& doc, const std::string& item) {
    return parse_unify_items("version 1;\n" + item + ";", doc, UnifyItemKind::Term).terms.at(0);
}

inline Formula formula(const TheoryDocument& doc, const std::string& item) { return formula_in_context(doc, item).body; }

inline Term term(const TheoryDocument& doc, const std::string& item) { return term_in_context(doc, item).body; }

}  // namespace clogic::testing
