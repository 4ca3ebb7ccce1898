#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clogic/syntax.hpp"

namespace clogic {

// Produces variables named <base>_<n> that avoid a growing set of names.
// Names are avoided across all sorts so printed output stays unambiguous.
class FreshVariableSource {
public:
    FreshVariableSource() = default;
    explicit FreshVariableSource(const std::set<Variable>& avoid);

    void avoid(const Variable& v);
    void avoid(const std::set<Variable>& vs);
    void avoid(const Context& ctx);
    void avoid(const Formula& f);
    void avoid(const Term& t);
    bool is_avoided(const std::string& name) const { return names_.count(name) > 0; }

    Variable fresh(const Variable& like);
    Variable fresh(const std::string& base, const std::string& sort);

private:
    std::set<std::string> names_;
};

class Substitution {
public:
    using Pair = std::pair<Term, Variable>;

    Substitution() = default;
    // Pairs are (replacement, target). Targets must be distinct and sorts must agree.
    explicit Substitution(std::vector<Pair> pairs);
    Substitution(const std::vector<Term>& replacements, const Context& targets);

    static Substitution identity(const Context& ctx);

    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    std::optional<Term> lookup(const Variable& v) const;
    bool targets_variable(const Variable& v) const;
    Context targets() const;
    std::vector<Term> replacements() const;
    // True when every pair maps its target to itself.
    bool is_inert() const;

    bool operator==(const Substitution& other) const { return pairs_ == other.pairs_; }

private:
    std::vector<Pair> pairs_;
};

// Extension to a context: appends identity pairs for context variables not yet targeted.
Substitution extend(const Substitution& theta, const Context& z);

Term apply(const Term& t, const Substitution& theta);
std::vector<Term> apply(const std::vector<Term>& ts, const Substitution& theta);
Formula apply(const Formula& f, const Substitution& theta, FreshVariableSource& fresh);
Formula apply(const Formula& f, const Substitution& theta);

TermInContext apply_in_context(const TermInContext& zt, const Substitution& theta);
FormulaInContext apply_in_context(const FormulaInContext& zf, const Substitution& theta, FreshVariableSource& fresh);
FormulaInContext apply_in_context(const FormulaInContext& zf, const Substitution& theta);

// Context produced by applying theta to anything whose context is z.
Context result_context(const Substitution& theta, const Context& z);

// Flattened composition: applying the result equals applying theta then theta2.
Substitution compose(const Substitution& theta, const Substitution& theta2);

// Keeps the map but drops identity pairs.
Substitution without_inert(const Substitution& theta);

// Same image for every variable (identity pairs are ignored).
bool same_map(const Substitution& a, const Substitution& b);

// Renames bound variables of f so none lies in avoid.
Formula rename_apart(const Formula& f, const std::set<Variable>& avoid, FreshVariableSource& fresh);

std::string to_string(const Substitution& theta, bool show_inert = false);

}  // namespace clogic
