#pragma once

#include <vector>

#include "clogic/syntax.hpp"

namespace clogic {

// (φ₁ ∧ … ∧ φₙ) ⊢_x ψ with atomic-or-top premises and conclusion.
struct NormalHornSequent {
    std::vector<Formula> premises;  // empty when the left side is top
    Context ctx;
    Formula conclusion;
    Formula lhs;  // the left side as written

    Sequent to_sequent() const { return Sequent(lhs, ctx, conclusion); }
    bool operator==(const NormalHornSequent& o) const { return to_sequent() == o.to_sequent(); }
};

bool is_atomic_or_top(const Formula& f);
bool is_normal_horn(const Sequent& s);
// Validates the shape and splits the left side; throws NotNormalForm.
NormalHornSequent as_normal_horn(const Sequent& s);

std::vector<Formula> atomic_subformulae(const Formula& f);
std::vector<Formula> unique_atomic_subformulae(const Formula& f);

std::vector<NormalHornSequent> horn_normal_form(const Sequent& s);
Theory horn_theory_normal_form(const Theory& t);

Formula sequent_to_formula(const Sequent& s);
// ⊤ ⊢₁ (∀x)(α ⇒ β) read back as α ⊢_x β; throws ShapeMismatch.
Sequent formula_to_sequent(const Formula& f);

struct Literal {
    bool positive;
    Formula atom;
};

Sequent horn_clause_to_sequent(const std::vector<Literal>& literals, const Context& ctx);

}  // namespace clogic
