#include "clogic/normal_form.hpp"

#include <algorithm>

namespace clogic {

bool is_atomic_or_top(const Formula& f) { return f.is_atomic() || f.kind() == Formula::Kind::Top; }

bool is_normal_horn(const Sequent& s) {
    if (!is_atomic_or_top(s.rhs())) return false;
    for (const auto& c : conjuncts(s.lhs()))
        if (!is_atomic_or_top(c)) return false;
    return true;
}

NormalHornSequent as_normal_horn(const Sequent& s) {
    if (!is_normal_horn(s)) throw LogicError(ErrorKind::NotNormalForm, to_string(s));
    std::vector<Formula> premises;
    if (s.lhs().kind() != Formula::Kind::Top) premises = conjuncts(s.lhs());
    return {std::move(premises), s.ctx(), s.rhs(), s.lhs()};
}

std::vector<Formula> atomic_subformulae(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Top:
        case K::Bot:
        case K::Rel:
        case K::Eq: return {f};
        case K::Not:
        case K::Exists:
        case K::Forall: return atomic_subformulae(f.body());
        default: {
            auto out = atomic_subformulae(f.left());
            auto rhs = atomic_subformulae(f.right());
            out.insert(out.end(), rhs.begin(), rhs.end());
            return out;
        }
    }
}

std::vector<Formula> unique_atomic_subformulae(const Formula& f) {
    std::vector<Formula> out;
    for (const auto& a : atomic_subformulae(f))
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    return out;
}

std::vector<NormalHornSequent> horn_normal_form(const Sequent& s) {
    if (classify(s) > Fragment::Horn) throw LogicError(ErrorKind::NotHorn, to_string(s));
    std::vector<NormalHornSequent> out;
    for (const auto& a : unique_atomic_subformulae(s.rhs()))
        out.push_back(as_normal_horn(Sequent(s.lhs(), s.ctx(), a)));
    return out;
}

Theory horn_theory_normal_form(const Theory& t) {
    Theory out{t.signature, {}};
    for (std::size_t i = 0; i < t.axioms.size(); ++i) {
        std::vector<NormalHornSequent> parts;
        try {
            parts = horn_normal_form(t.axioms[i]);
        } catch (const LogicError& e) {
            if (e.kind() != ErrorKind::NotHorn) throw;
            throw LogicError(ErrorKind::NotHorn, "axiom " + std::to_string(i + 1) + ": " + to_string(t.axioms[i]));
        }
        for (const auto& p : parts) {
            Sequent q = p.to_sequent();
            if (std::find(out.axioms.begin(), out.axioms.end(), q) == out.axioms.end()) out.axioms.push_back(q);
        }
    }
    return out;
}

Formula sequent_to_formula(const Sequent& s) {
    Formula body = Formula::implies(s.lhs(), s.rhs());
    for (std::size_t i = s.ctx().size(); i-- > 0;) body = Formula::forall(s.ctx()[i], body);
    return body;
}

Sequent formula_to_sequent(const Formula& f) {
    std::vector<Variable> vars;
    const Formula* cur = &f;
    while (cur->kind() == Formula::Kind::Forall) {
        if (std::find(vars.begin(), vars.end(), cur->bound()) != vars.end())
            throw LogicError(ErrorKind::ShapeMismatch, "variable " + to_string(cur->bound()) + " bound twice");
        vars.push_back(cur->bound());
        cur = &cur->body();
    }
    if (cur->kind() != Formula::Kind::Implies)
        throw LogicError(ErrorKind::ShapeMismatch, "expected (forall x)(a => b), got " + to_string(f));
    return Sequent(cur->left(), Context(vars), cur->right());
}

Sequent horn_clause_to_sequent(const std::vector<Literal>& literals, const Context& ctx) {
    std::vector<Formula> negatives;
    std::vector<Formula> positives;
    for (const auto& l : literals) {
        if (!l.atom.is_atomic()) throw LogicError(ErrorKind::NotHorn, "literal " + to_string(l.atom) + " is not atomic");
        (l.positive ? positives : negatives).push_back(l.atom);
    }
    if (positives.empty()) throw LogicError(ErrorKind::NoPositiveLiteral, "clause has no positive literal");
    if (positives.size() > 1) throw LogicError(ErrorKind::NotHorn, "clause has more than one positive literal");
    return Sequent(conjunction(negatives), ctx, positives[0]);
}

}  // namespace clogic
