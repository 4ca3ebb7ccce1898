#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clogic/substitution.hpp"
#include "clogic/syntax.hpp"

namespace clogic {

enum class NoUnifierReason {
    LengthMismatch,
    SortClash,
    SymbolClash,
    OccursCheck,
    QuantifierSortClash,
    BoundVariableEscape,
    FuelExhausted,
};

std::string to_string(NoUnifierReason r);

struct UnifyStep {
    std::string rule;  // "A".."E" for terms, or a formula case name
    Substitution theta;
};

struct UnifyOutcome {
    std::optional<Substitution> unifier;
    NoUnifierReason reason = NoUnifierReason::SymbolClash;
    std::vector<UnifyStep> trace;

    bool ok() const { return unifier.has_value(); }
    const Substitution& theta() const { return *unifier; }
};

struct UnifyOptions {
    // Upper bound on recursive steps; exhausting it is reported as FuelExhausted.
    std::size_t fuel = 1000000;
};

UnifyOutcome unify_terms(const std::vector<Term>& as, const std::vector<Term>& bs,
                         const Substitution& theta0 = {}, const UnifyOptions& opts = {});

UnifyOutcome unify_formulae(const std::vector<Formula>& as, const std::vector<Formula>& bs,
                            const Substitution& theta0 = {}, const UnifyOptions& opts = {});

UnifyOutcome unify_terms_in_context(const std::vector<TermInContext>& as, const std::vector<TermInContext>& bs,
                                    const Substitution& theta0 = {}, const UnifyOptions& opts = {});

UnifyOutcome unify_formulae_in_context(const std::vector<FormulaInContext>& as,
                                       const std::vector<FormulaInContext>& bs, const Substitution& theta0 = {},
                                       const UnifyOptions& opts = {});

}  // namespace clogic
