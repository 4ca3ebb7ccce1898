#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clogic/substitution.hpp"
#include "clogic/syntax.hpp"

namespace clogic {

enum class RuleKind {
    Identity,
    Cut,
    Sub,
    Eq0,
    Eq1,
    Top,
    Bot,
    AndE0,
    AndE1,
    AndI,
    OrI0,
    OrI1,
    OrRule,
    ImpliesDown,
    ImpliesUp,
    Implies,  // either direction of the double-line rule
    Distributive,
    ExistsDown,
    ExistsUp,
    Exists,
    ForallDown,
    ForallUp,
    Forall,
    ExcludedMiddle,
    Frobenius,
    AlphaRename,
    NegDef,
    Hypothesis,
    TheoremRef,
};

struct Rule {
    RuleKind kind = RuleKind::Identity;
    Substitution theta;        // Sub
    std::size_t axiom = 0;     // Hypothesis, 1-based
    std::string theorem;       // TheoremRef

    static Rule of(RuleKind k) { return Rule{k, {}, 0, {}}; }
    static Rule sub(Substitution theta) { return Rule{RuleKind::Sub, std::move(theta), 0, {}}; }
    static Rule hypothesis(std::size_t i) { return Rule{RuleKind::Hypothesis, {}, i, {}}; }
    static Rule theorem_ref(std::string name) { return Rule{RuleKind::TheoremRef, {}, 0, std::move(name)}; }
};

Fragment rule_fragment(RuleKind k);
std::string rule_name(RuleKind k);
std::optional<RuleKind> rule_from_name(const std::string& name);
std::size_t rule_premise_count(RuleKind k);  // TheoremRef is variable and reports 0

struct DerivationLine {
    int number = 0;
    Sequent sequent;
    Rule rule;
    std::vector<int> premises;
};

struct Derivation {
    Fragment fragment = Fragment::Intuitionistic;
    std::vector<DerivationLine> lines;
    // Line numbers whose sequents are the proved results; empty means the last line.
    std::vector<int> conclusions;

    const DerivationLine* find(int number) const;
    std::vector<Sequent> concluded() const;
};

enum class StepErrorKind {
    ContextMismatch,
    SchemaMismatch,
    SideConditionViolated,
    FragmentViolation,
    BadReference,
    UnknownCorpusEntry,
};

std::string to_string(StepErrorKind k);

struct StepError {
    int line = 0;
    StepErrorKind kind = StepErrorKind::SchemaMismatch;
    std::string message;
};

std::string to_string(const StepError& e);

// The substitution of a Sub step written out over the whole premise context, in
// context order, followed by any targets outside it. When a Sub rule lists every
// premise variable, the checker requires exactly this order.
Substitution over_premise_context(const Substitution& theta, const Context& premise_ctx);

// Checks one primitive inference. Hypothesis needs the theory; TheoremRef is
// not primitive and is rejected here.
std::optional<StepError> check_step(const Rule& rule, const std::vector<Sequent>& premises, const Sequent& conclusion,
                                    const Theory* theory = nullptr);

// A proof that may be cited by name: the theory supplies its hypotheses.
struct CitedProof {
    Theory theory;
    Derivation derivation;
};

using TheoremResolver = std::function<const CitedProof*(const std::string&)>;

struct CheckReport {
    std::vector<StepError> errors;
    // Rule-primitive version of the checked derivation (citations expanded).
    Derivation expanded;

    bool ok() const { return errors.empty(); }
};

CheckReport check_derivation(const Derivation& d, const Theory& theory, const TheoremResolver& resolver = {});

// Rule name followed by its arguments, as written in proof scripts
// ("cut 2,1", "hyp 1", "sub [w_2 / w_1]", "thm two-rule-or 3").
// With the derivation at hand, Sub targets outside the premise context carry their sort.
std::string format_rule(const DerivationLine& line, const Derivation* d = nullptr);

}  // namespace clogic
