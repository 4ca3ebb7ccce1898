#include "clogic/kernel.hpp"

#include <algorithm>
#include <set>

namespace clogic {

namespace {

struct RuleInfo {
    RuleKind kind;
    const char* name;
    Fragment fragment;
    std::size_t premises;
};

constexpr RuleInfo kRules[] = {
    {RuleKind::Identity, "id", Fragment::Atomic, 0},
    {RuleKind::Cut, "cut", Fragment::Atomic, 2},
    {RuleKind::Sub, "sub", Fragment::Atomic, 1},
    {RuleKind::Eq0, "eq0", Fragment::Atomic, 0},
    {RuleKind::Eq1, "eq1", Fragment::Horn, 0},
    {RuleKind::Top, "top", Fragment::Horn, 0},
    {RuleKind::Bot, "bot", Fragment::Coherent, 0},
    {RuleKind::AndE0, "ande0", Fragment::Horn, 0},
    {RuleKind::AndE1, "ande1", Fragment::Horn, 0},
    {RuleKind::AndI, "andi", Fragment::Horn, 2},
    {RuleKind::OrI0, "ori0", Fragment::Coherent, 0},
    {RuleKind::OrI1, "ori1", Fragment::Coherent, 0},
    {RuleKind::OrRule, "or", Fragment::Coherent, 2},
    {RuleKind::ImpliesDown, "impdown", Fragment::Intuitionistic, 1},
    {RuleKind::ImpliesUp, "impup", Fragment::Intuitionistic, 1},
    {RuleKind::Implies, "imp", Fragment::Intuitionistic, 1},
    {RuleKind::Distributive, "dist", Fragment::Coherent, 0},
    {RuleKind::ExistsDown, "existsdown", Fragment::Regular, 1},
    {RuleKind::ExistsUp, "existsup", Fragment::Regular, 1},
    {RuleKind::Exists, "exists", Fragment::Regular, 1},
    {RuleKind::ForallDown, "foralldown", Fragment::Intuitionistic, 1},
    {RuleKind::ForallUp, "forallup", Fragment::Intuitionistic, 1},
    {RuleKind::Forall, "forall", Fragment::Intuitionistic, 1},
    {RuleKind::ExcludedMiddle, "em", Fragment::Classical, 0},
    {RuleKind::Frobenius, "frobenius", Fragment::Regular, 0},
    {RuleKind::AlphaRename, "alpha", Fragment::Atomic, 1},
    {RuleKind::NegDef, "negdef", Fragment::Intuitionistic, 1},
    {RuleKind::Hypothesis, "hyp", Fragment::Atomic, 0},
    {RuleKind::TheoremRef, "thm", Fragment::Atomic, 0},
};

const RuleInfo& info(RuleKind k) {
    for (const auto& r : kRules)
        if (r.kind == k) return r;
    throw LogicError(ErrorKind::UnknownSymbol, "unknown rule");
}

}  // namespace

Fragment rule_fragment(RuleKind k) { return info(k).fragment; }
std::string rule_name(RuleKind k) { return info(k).name; }
std::size_t rule_premise_count(RuleKind k) { return info(k).premises; }

std::optional<RuleKind> rule_from_name(const std::string& name) {
    for (const auto& r : kRules)
        if (name == r.name) return r.kind;
    return std::nullopt;
}

const DerivationLine* Derivation::find(int number) const {
    for (const auto& l : lines)
        if (l.number == number) return &l;
    return nullptr;
}

std::vector<Sequent> Derivation::concluded() const {
    std::vector<Sequent> out;
    if (conclusions.empty()) {
        if (!lines.empty()) out.push_back(lines.back().sequent);
        return out;
    }
    for (int n : conclusions)
        if (const auto* l = find(n)) out.push_back(l->sequent);
    return out;
}

std::string to_string(StepErrorKind k) {
    switch (k) {
        case StepErrorKind::ContextMismatch: return "ContextMismatch";
        case StepErrorKind::SchemaMismatch: return "SchemaMismatch";
        case StepErrorKind::SideConditionViolated: return "SideConditionViolated";
        case StepErrorKind::FragmentViolation: return "FragmentViolation";
        case StepErrorKind::BadReference: return "BadReference";
        case StepErrorKind::UnknownCorpusEntry: return "UnknownCorpusEntry";
    }
    return "?";
}

std::string to_string(const StepError& e) {
    return "line " + std::to_string(e.line) + ": " + to_string(e.kind) + ": " + e.message;
}

namespace {

using K = Formula::Kind;

StepError err(StepErrorKind k, std::string msg) { return StepError{0, k, std::move(msg)}; }
StepError schema(std::string msg) { return err(StepErrorKind::SchemaMismatch, std::move(msg)); }

std::optional<StepError> same_context(const std::vector<Sequent>& ps, const Sequent& c) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].ctx() != c.ctx())
            return err(StepErrorKind::ContextMismatch, "premise " + std::to_string(i + 1) + " has context " +
                                                           to_string(ps[i].ctx()) + " but the conclusion has " +
                                                           to_string(c.ctx()));
    return std::nullopt;
}

Formula desugar_negation(const Formula& f) {
    switch (f.kind()) {
        case K::Rel:
        case K::Eq:
        case K::Top:
        case K::Bot: return f;
        case K::Not: return Formula::implies(desugar_negation(f.body()), Formula::bot());
        case K::Exists:
        case K::Forall: return Formula::quantifier(f.kind(), f.bound(), desugar_negation(f.body()));
        default: return Formula::binary(f.kind(), desugar_negation(f.left()), desugar_negation(f.right()));
    }
}

std::optional<StepError> check_implies(bool down, const Sequent& p, const Sequent& c) {
    // Upper form psi |- (phi => chi); lower form (phi & psi) |- chi, with the
    // conjuncts taken in either order. A negation ~phi on the upper right side
    // reads as (phi => bot).
    const Sequent& upper = down ? p : c;
    const Sequent& lower = down ? c : p;
    if (upper.rhs().kind() != K::Implies && upper.rhs().kind() != K::Not)
        return schema("upper sequent's right side is not an implication");
    if (lower.lhs().kind() != K::And) return schema("lower sequent's left side is not a conjunction");
    const Formula imp = upper.rhs().kind() == K::Not ? Formula::implies(upper.rhs().body(), Formula::bot())
                                                     : upper.rhs();
    const Formula& a = lower.lhs().left();
    const Formula& b = lower.lhs().right();
    bool straight = a == imp.left() && b == upper.lhs();
    bool swapped = b == imp.left() && a == upper.lhs();
    if (!straight && !swapped) return schema("lower conjuncts are not the antecedent and the upper left side");
    if (lower.rhs() != imp.right()) return schema("consequent does not match the lower right side");
    return std::nullopt;
}

std::optional<StepError> check_quantifier(K q, bool down, const Sequent& p, const Sequent& c) {
    // Upper sequent has context x,y; lower has x with the quantifier introduced.
    const Sequent& upper = down ? p : c;
    const Sequent& lower = down ? c : p;
    if (upper.ctx().size() != lower.ctx().size() + 1)
        return err(StepErrorKind::ContextMismatch, "upper context must extend the lower context by one variable");
    for (std::size_t i = 0; i < lower.ctx().size(); ++i)
        if (upper.ctx()[i] != lower.ctx()[i])
            return err(StepErrorKind::ContextMismatch, "upper context " + to_string(upper.ctx()) +
                                                           " does not extend " + to_string(lower.ctx()));
    const Variable& y = upper.ctx()[upper.ctx().size() - 1];
    const Formula& quantified = q == K::Exists ? lower.lhs() : lower.rhs();
    const Formula& plain = q == K::Exists ? lower.rhs() : lower.lhs();
    const Formula& upper_q = q == K::Exists ? upper.lhs() : upper.rhs();
    const Formula& upper_plain = q == K::Exists ? upper.rhs() : upper.lhs();
    if (quantified.kind() != q || quantified.bound() != y)
        return schema("expected a quantifier over " + to_string(y));
    if (quantified.body() != upper_q) return schema("quantifier body does not match");
    if (plain != upper_plain) return schema("side formulas differ");
    if (free_variables(plain).count(y))
        return err(StepErrorKind::SideConditionViolated, to_string(y) + " is free in the side formula");
    return std::nullopt;
}

}  // namespace

std::optional<StepError> check_step(const Rule& rule, const std::vector<Sequent>& ps, const Sequent& c,
                                    const Theory* theory) {
    const RuleInfo& ri = info(rule.kind);
    // The definition of negation may also be stated outright, as a sequent
    // whose sides agree once negation is unfolded.
    if (rule.kind == RuleKind::NegDef && ps.empty()) {
        if (desugar_negation(c.lhs()) != desugar_negation(c.rhs()))
            return schema("sides differ by more than the definition of negation");
        return std::nullopt;
    }
    if (rule.kind != RuleKind::TheoremRef && ps.size() != ri.premises)
        return err(StepErrorKind::BadReference, rule_name(rule.kind) + " takes " + std::to_string(ri.premises) +
                                                    " premises, got " + std::to_string(ps.size()));
    const Formula& l = c.lhs();
    const Formula& r = c.rhs();
    switch (rule.kind) {
        case RuleKind::Identity:
            if (l != r) return schema("identity needs equal sides");
            return std::nullopt;
        case RuleKind::Cut:
            if (auto e = same_context(ps, c)) return e;
            if (ps[0].rhs() != ps[1].lhs()) return schema("cut formulas differ");
            if (l != ps[0].lhs() || r != ps[1].rhs()) return schema("conclusion is not the composite");
            return std::nullopt;
        case RuleKind::Sub: {
            const Sequent& p = ps[0];
            bool full = true;
            for (const auto& x : p.ctx()) full = full && rule.theta.lookup(x).has_value();
            if (full && !p.ctx().empty()) {
                const auto& pairs = rule.theta.pairs();
                for (std::size_t i = 0; i < p.ctx().size(); ++i)
                    if (pairs[i].second != p.ctx()[i])
                        return err(StepErrorKind::ContextMismatch, "substitution targets " +
                                                                       to_string(rule.theta.targets()) +
                                                                       " do not list the premise context " +
                                                                       to_string(p.ctx()));
            }
            Substitution ext = extend(rule.theta, p.ctx());
            for (const auto& x : p.ctx()) {
                Term img = *ext.lookup(x);
                if (!suitable(c.ctx(), img))
                    return err(StepErrorKind::ContextMismatch,
                               "context " + to_string(c.ctx()) + " is not suitable for " + to_string(img));
            }
            FreshVariableSource fresh;
            fresh.avoid(c.ctx());
            if (!alpha_equivalent(apply(p.lhs(), ext, fresh), l) || !alpha_equivalent(apply(p.rhs(), ext, fresh), r))
                return schema("conclusion is not the premise under " + to_string(rule.theta, true));
            return std::nullopt;
        }
        case RuleKind::Eq0:
            if (l.kind() != K::Top || r.kind() != K::Eq) return schema("expected top |- (x = x)");
            if (!r.args()[0].is_var() || r.args()[0] != r.args()[1]) return schema("expected a reflexive equation");
            return std::nullopt;
        case RuleKind::Eq1: {
            if (l.kind() != K::And) return schema("expected (equations & phi) on the left");
            std::vector<Substitution::Pair> pairs;
            for (const auto& e : conjuncts(l.left())) {
                if (e.kind() != K::Eq || !e.args()[0].is_var() || !e.args()[1].is_var())
                    return schema("left conjunct must be equations between variables");
                for (const auto& q : pairs)
                    if (q.second == e.args()[0].variable()) return schema("equated variables must be distinct");
                pairs.emplace_back(e.args()[1], e.args()[0].variable());
            }
            if (!alpha_equivalent(apply(l.right(), Substitution(pairs)), r))
                return schema("right side is not the substituted formula");
            return std::nullopt;
        }
        case RuleKind::Top:
            if (r.kind() != K::Top) return schema("right side must be top");
            return std::nullopt;
        case RuleKind::Bot:
            if (l.kind() != K::Bot) return schema("left side must be bot");
            return std::nullopt;
        case RuleKind::AndE0:
        case RuleKind::AndE1:
            if (l.kind() != K::And) return schema("left side must be a conjunction");
            if ((rule.kind == RuleKind::AndE0 ? l.left() : l.right()) != r) return schema("wrong conjunct");
            return std::nullopt;
        case RuleKind::OrI0:
        case RuleKind::OrI1:
            if (r.kind() != K::Or) return schema("right side must be a disjunction");
            if ((rule.kind == RuleKind::OrI0 ? r.left() : r.right()) != l) return schema("wrong disjunct");
            return std::nullopt;
        case RuleKind::AndI: {
            if (auto e = same_context(ps, c)) return e;
            if (r.kind() != K::And) return schema("right side must be a conjunction");
            if (ps[0].lhs() != l || ps[1].lhs() != l) return schema("premises must share the left side");
            bool fwd = ps[0].rhs() == r.left() && ps[1].rhs() == r.right();
            bool rev = ps[0].rhs() == r.right() && ps[1].rhs() == r.left();
            if (!fwd && !rev) return schema("premises do not prove the two conjuncts");
            return std::nullopt;
        }
        case RuleKind::OrRule: {
            if (auto e = same_context(ps, c)) return e;
            if (l.kind() != K::Or) return schema("left side must be a disjunction");
            if (ps[0].rhs() != r || ps[1].rhs() != r) return schema("premises must share the right side");
            bool fwd = ps[0].lhs() == l.left() && ps[1].lhs() == l.right();
            bool rev = ps[0].lhs() == l.right() && ps[1].lhs() == l.left();
            if (!fwd && !rev) return schema("premises do not cover the two disjuncts");
            return std::nullopt;
        }
        case RuleKind::ImpliesDown:
        case RuleKind::ImpliesUp:
        case RuleKind::Implies: {
            if (auto e = same_context(ps, c)) return e;
            if (rule.kind == RuleKind::ImpliesDown) return check_implies(true, ps[0], c);
            if (rule.kind == RuleKind::ImpliesUp) return check_implies(false, ps[0], c);
            auto down = check_implies(true, ps[0], c);
            if (!down) return std::nullopt;
            auto up = check_implies(false, ps[0], c);
            if (!up) return std::nullopt;
            return ps[0].rhs().kind() == K::Implies ? down : up;
        }
        case RuleKind::Distributive: {
            bool ok = l.kind() == K::And && l.right().kind() == K::Or && r.kind() == K::Or &&
                      r.left().kind() == K::And && r.right().kind() == K::And;
            if (!ok) return schema("expected (phi & (psi | chi)) |- ((phi & psi) | (phi & chi))");
            const Formula& phi = l.left();
            if (r.left().left() != phi || r.right().left() != phi || r.left().right() != l.right().left() ||
                r.right().right() != l.right().right())
                return schema("distributive instance does not match");
            return std::nullopt;
        }
        case RuleKind::ExistsDown: return check_quantifier(K::Exists, true, ps[0], c);
        case RuleKind::ExistsUp: return check_quantifier(K::Exists, false, ps[0], c);
        case RuleKind::ForallDown: return check_quantifier(K::Forall, true, ps[0], c);
        case RuleKind::ForallUp: return check_quantifier(K::Forall, false, ps[0], c);
        case RuleKind::Exists:
        case RuleKind::Forall: {
            K q = rule.kind == RuleKind::Exists ? K::Exists : K::Forall;
            bool down = ps[0].ctx().size() == c.ctx().size() + 1;
            return check_quantifier(q, down, ps[0], c);
        }
        case RuleKind::ExcludedMiddle:
            if (l.kind() != K::Top || r.kind() != K::Or || r.right().kind() != K::Not || r.right().body() != r.left())
                return schema("expected top |- (phi | ~phi)");
            return std::nullopt;
        case RuleKind::Frobenius: {
            bool ok = l.kind() == K::And && l.right().kind() == K::Exists && r.kind() == K::Exists &&
                      r.body().kind() == K::And;
            if (!ok) return schema("expected (phi & exists y. psi) |- exists y. (phi & psi)");
            const Variable& y = l.right().bound();
            if (r.bound() != y || r.body().left() != l.left() || r.body().right() != l.right().body())
                return schema("Frobenius instance does not match");
            if (c.ctx().contains(y) || free_variables(l.left()).count(y))
                return err(StepErrorKind::SideConditionViolated, to_string(y) + " occurs in the context or in phi");
            return std::nullopt;
        }
        case RuleKind::AlphaRename:
            if (auto e = same_context(ps, c)) return e;
            if (!alpha_equivalent(ps[0].lhs(), l) || !alpha_equivalent(ps[0].rhs(), r))
                return schema("sides are not alpha-equivalent to the premise");
            return std::nullopt;
        case RuleKind::NegDef:
            if (auto e = same_context(ps, c)) return e;
            if (desugar_negation(ps[0].lhs()) != desugar_negation(l) ||
                desugar_negation(ps[0].rhs()) != desugar_negation(r))
                return schema("sides differ by more than the definition of negation");
            return std::nullopt;
        case RuleKind::Hypothesis:
            if (!theory) return err(StepErrorKind::BadReference, "no theory supplied for hypothesis");
            if (rule.axiom == 0 || rule.axiom > theory->axioms.size())
                return err(StepErrorKind::BadReference, "no axiom " + std::to_string(rule.axiom));
            if (theory->axioms[rule.axiom - 1] != c)
                return schema("sequent is not axiom " + std::to_string(rule.axiom));
            return std::nullopt;
        case RuleKind::TheoremRef:
            return schema("theorem citations must be expanded before checking");
    }
    return schema("unknown rule");
}

namespace {

bool schematic_rule(RuleKind k) {
    switch (k) {
        case RuleKind::Sub:
        case RuleKind::Eq0:
        case RuleKind::Eq1:
        case RuleKind::ExistsDown:
        case RuleKind::ExistsUp:
        case RuleKind::Exists:
        case RuleKind::ForallDown:
        case RuleKind::ForallUp:
        case RuleKind::Forall:
        case RuleKind::Frobenius: return false;
        default: return true;
    }
}

using Bindings = std::map<std::string, Formula>;

bool match(const Formula& pat, const Formula& f, const std::set<std::string>& metas, Bindings& b) {
    if (pat.kind() == K::Rel && pat.args().empty() && metas.count(pat.relation())) {
        auto it = b.find(pat.relation());
        if (it != b.end()) return it->second == f;
        b.emplace(pat.relation(), f);
        return true;
    }
    if (pat.kind() != f.kind()) return false;
    switch (pat.kind()) {
        case K::Top:
        case K::Bot: return true;
        case K::Not: return match(pat.body(), f.body(), metas, b);
        case K::And:
        case K::Or:
        case K::Implies: return match(pat.left(), f.left(), metas, b) && match(pat.right(), f.right(), metas, b);
        default: return pat == f;
    }
}

Formula instantiate(const Formula& f, const std::set<std::string>& metas, const Bindings& b) {
    switch (f.kind()) {
        case K::Rel:
            if (f.args().empty() && metas.count(f.relation())) {
                auto it = b.find(f.relation());
                return it == b.end() ? Formula::top() : it->second;
            }
            return f;
        case K::Not: return Formula::negation(instantiate(f.body(), metas, b));
        case K::And:
        case K::Or:
        case K::Implies:
            return Formula::binary(f.kind(), instantiate(f.left(), metas, b), instantiate(f.right(), metas, b));
        default: return f;
    }
}

// Axiom indices of the hypothesis lines that the given line depends on.
std::vector<std::size_t> hypotheses_used(const Derivation& d, int line) {
    std::set<std::size_t> out;
    std::set<int> seen;
    std::vector<int> todo{line};
    while (!todo.empty()) {
        int n = todo.back();
        todo.pop_back();
        if (!seen.insert(n).second) continue;
        const DerivationLine* l = d.find(n);
        if (!l) continue;
        if (l->rule.kind == RuleKind::Hypothesis) out.insert(l->rule.axiom);
        for (int p : l->premises) todo.push_back(p);
    }
    return {out.begin(), out.end()};
}

class Expander {
public:
    Expander(const Derivation& d, const Theory& theory, const TheoremResolver& resolver)
        : d_(d), theory_(theory), resolver_(resolver) {
        out_.fragment = d.fragment;
    }

    CheckReport run() {
        std::map<int, int> host_to_out;
        int previous = 0;
        bool first = true;
        for (const auto& line : d_.lines) {
            if (!first && line.number <= previous)
                add_error(line.number, StepErrorKind::BadReference, "line numbers must increase");
            first = false;
            previous = line.number;
            std::vector<int> prem_out;
            bool refs_ok = true;
            for (int p : line.premises) {
                auto it = host_to_out.find(p);
                if (it == host_to_out.end() || p >= line.number) {
                    add_error(line.number, StepErrorKind::BadReference,
                              "premise " + std::to_string(p) + " is not an earlier line");
                    refs_ok = false;
                } else {
                    prem_out.push_back(it->second);
                }
            }
            if (!refs_ok) {
                host_to_out[line.number] = emit(line.sequent, line.rule, {}, line.number, false);
                continue;
            }
            if (line.rule.kind == RuleKind::TheoremRef) {
                std::vector<std::string> stack;
                auto n = expand_citation(line.rule.theorem, line.sequent, prem_out, line.number, stack);
                host_to_out[line.number] = n ? *n : emit(line.sequent, line.rule, prem_out, line.number, false);
            } else {
                host_to_out[line.number] = emit(line.sequent, line.rule, prem_out, line.number, true);
            }
        }
        for (int c : d_.conclusions) {
            auto it = host_to_out.find(c);
            if (it == host_to_out.end())
                add_error(c, StepErrorKind::BadReference, "concluded line " + std::to_string(c) + " does not exist");
            else
                out_.conclusions.push_back(it->second);
        }
        check_all();
        CheckReport rep;
        rep.errors = std::move(errors_);
        std::stable_sort(rep.errors.begin(), rep.errors.end(),
                         [](const StepError& a, const StepError& b) { return a.line < b.line; });
        rep.expanded = std::move(out_);
        return rep;
    }

private:
    struct Origin {
        int host_line;
        bool checkable;
        std::string note;
    };

    int emit(const Sequent& s, const Rule& r, std::vector<int> prems, int host, bool checkable,
             std::string note = {}) {
        int n = static_cast<int>(out_.lines.size()) + 1;
        out_.lines.push_back(DerivationLine{n, s, r, std::move(prems)});
        origins_.push_back(Origin{host, checkable, std::move(note)});
        return n;
    }

    void add_error(int line, StepErrorKind k, std::string msg) { errors_.push_back(StepError{line, k, std::move(msg)}); }

    std::optional<int> expand_citation(const std::string& name, const Sequent& target, const std::vector<int>& prems,
                                       int host, std::vector<std::string>& stack) {
        const CitedProof* cited = resolver_ ? resolver_(name) : nullptr;
        if (!cited) {
            add_error(host, StepErrorKind::UnknownCorpusEntry, "no citable theorem named " + name);
            return std::nullopt;
        }
        if (std::find(stack.begin(), stack.end(), name) != stack.end()) {
            add_error(host, StepErrorKind::SchemaMismatch, "circular citation of " + name);
            return std::nullopt;
        }
        std::set<std::string> metas;
        for (const auto& rd : cited->theory.signature.relations())
            if (rd.args.empty()) metas.insert(rd.name);
        for (const auto& l : cited->derivation.lines)
            if (!l.sequent.ctx().empty() || !schematic_rule(l.rule.kind)) {
                add_error(host, StepErrorKind::SchemaMismatch, name + " is not a propositional schema");
                return std::nullopt;
            }
        for (int p : prems)
            if (out_.lines[p - 1].sequent.ctx() != target.ctx()) {
                add_error(host, StepErrorKind::ContextMismatch, "cited premises must share the line's context");
                return std::nullopt;
            }
        const auto& axioms = cited->theory.axioms;
        std::vector<int> candidates = cited->derivation.conclusions;
        if (candidates.empty() && !cited->derivation.lines.empty())
            candidates.push_back(cited->derivation.lines.back().number);
        std::optional<std::size_t> arity;
        for (int c : candidates) {
            const DerivationLine* cl = cited->derivation.find(c);
            if (!cl) continue;
            // Host premises stand for the hypotheses this conclusion depends on, in axiom order.
            std::vector<std::size_t> used = hypotheses_used(cited->derivation, c);
            if (used.size() != prems.size()) {
                arity = used.size();
                continue;
            }
            Bindings b;
            bool ok = match(cl->sequent.lhs(), target.lhs(), metas, b) &&
                      match(cl->sequent.rhs(), target.rhs(), metas, b);
            for (std::size_t i = 0; ok && i < used.size(); ++i) {
                if (used[i] == 0 || used[i] > axioms.size()) {
                    ok = false;
                    break;
                }
                const Sequent& ps = out_.lines[prems[i] - 1].sequent;
                const Sequent& ax = axioms[used[i] - 1];
                ok = match(ax.lhs(), ps.lhs(), metas, b) && match(ax.rhs(), ps.rhs(), metas, b);
            }
            if (!ok) {
                arity.reset();
                continue;
            }
            stack.push_back(name);
            auto result = replay(*cited, name, c, metas, b, target.ctx(), prems, used, host, stack);
            stack.pop_back();
            return result;
        }
        if (arity) {
            add_error(host, StepErrorKind::BadReference,
                      name + " needs " + std::to_string(*arity) + " premises, got " + std::to_string(prems.size()));
            return std::nullopt;
        }
        add_error(host, StepErrorKind::SchemaMismatch, "line is not an instance of " + name);
        return std::nullopt;
    }

    std::optional<int> replay(const CitedProof& cited, const std::string& name, int upto,
                              const std::set<std::string>& metas, const Bindings& b, const Context& ctx,
                              const std::vector<int>& prems, const std::vector<std::size_t>& used, int host,
                              std::vector<std::string>& stack) {
        std::map<int, int> local;
        for (const auto& l : cited.derivation.lines) {
            if (l.number > upto) break;
            std::optional<Sequent> s;
            try {
                s = Sequent(instantiate(l.sequent.lhs(), metas, b), ctx, instantiate(l.sequent.rhs(), metas, b));
            } catch (const LogicError& e) {
                add_error(host, StepErrorKind::SchemaMismatch,
                          "instantiating " + name + " line " + std::to_string(l.number) + ": " + e.what());
                return std::nullopt;
            }
            std::vector<int> mapped;
            for (int p : l.premises) {
                auto it = local.find(p);
                if (it == local.end()) {
                    add_error(host, StepErrorKind::BadReference,
                              name + " line " + std::to_string(l.number) + " cites a missing line");
                    return std::nullopt;
                }
                mapped.push_back(it->second);
            }
            if (l.rule.kind == RuleKind::Hypothesis) {
                auto pos = std::find(used.begin(), used.end(), l.rule.axiom);
                int prem = pos == used.end() ? 0 : prems[static_cast<std::size_t>(pos - used.begin())];
                if (!prem || out_.lines[prem - 1].sequent != *s) {
                    add_error(host, StepErrorKind::SchemaMismatch,
                              name + " line " + std::to_string(l.number) + " does not match a cited premise");
                    return std::nullopt;
                }
                local[l.number] = prem;
            } else if (l.rule.kind == RuleKind::TheoremRef) {
                auto n = expand_citation(l.rule.theorem, *s, mapped, host, stack);
                if (!n) return std::nullopt;
                local[l.number] = *n;
            } else {
                local[l.number] = emit(*s, l.rule, mapped, host, true, name + " line " + std::to_string(l.number));
            }
        }
        return local.at(upto);
    }

    void check_all() {
        for (std::size_t i = 0; i < out_.lines.size(); ++i) {
            const auto& line = out_.lines[i];
            const Origin& o = origins_[i];
            if (!o.checkable) continue;
            std::string where = o.note.empty() ? "" : " (in " + o.note + ")";
            if (rule_fragment(line.rule.kind) > out_.fragment) {
                add_error(o.host_line, StepErrorKind::FragmentViolation,
                          "rule " + rule_name(line.rule.kind) + " needs fragment " +
                              to_string(rule_fragment(line.rule.kind)) + where);
                continue;
            }
            if (classify(line.sequent) > out_.fragment) {
                add_error(o.host_line, StepErrorKind::FragmentViolation,
                          "sequent lies in fragment " + to_string(classify(line.sequent)) + where);
                continue;
            }
            std::vector<Sequent> ps;
            for (int p : line.premises) ps.push_back(out_.lines[p - 1].sequent);
            if (auto e = check_step(line.rule, ps, line.sequent, &theory_)) {
                e->line = o.host_line;
                e->message += where;
                errors_.push_back(*e);
            }
        }
    }

    const Derivation& d_;
    const Theory& theory_;
    const TheoremResolver& resolver_;
    Derivation out_;
    std::vector<Origin> origins_;
    std::vector<StepError> errors_;
};

}  // namespace

Substitution over_premise_context(const Substitution& theta, const Context& premise_ctx) {
    std::vector<Substitution::Pair> pairs;
    for (const auto& x : premise_ctx) {
        auto img = theta.lookup(x);
        pairs.emplace_back(img ? *img : Term::var(x), x);
    }
    for (const auto& pr : theta.pairs())
        if (!premise_ctx.contains(pr.second)) pairs.push_back(pr);
    return Substitution(pairs);
}

CheckReport check_derivation(const Derivation& d, const Theory& theory, const TheoremResolver& resolver) {
    return Expander(d, theory, resolver).run();
}

std::string format_rule(const DerivationLine& line, const Derivation* d) {
    std::string out = rule_name(line.rule.kind);
    switch (line.rule.kind) {
        case RuleKind::Hypothesis: out += " " + std::to_string(line.rule.axiom); break;
        case RuleKind::TheoremRef: out += " " + line.rule.theorem; break;
        case RuleKind::Sub: {
            const Substitution shown = without_inert(line.rule.theta);
            const DerivationLine* premise = d && !line.premises.empty() ? d->find(line.premises[0]) : nullptr;
            std::string lhs, rhs;
            for (std::size_t i = 0; i < shown.size(); ++i) {
                const auto& [s, y] = shown.pairs()[i];
                if (i) {
                    lhs += ", ";
                    rhs += ", ";
                }
                lhs += to_string(s);
                rhs += premise && !premise->sequent.ctx().contains(y) ? to_string(y) : y.name;
            }
            out += shown.empty() ? " []" : " [" + lhs + " / " + rhs + "]";
            break;
        }
        default: break;
    }
    for (std::size_t i = 0; i < line.premises.size(); ++i)
        out += (i ? "," : " ") + std::to_string(line.premises[i]);
    return out;
}

}  // namespace clogic
