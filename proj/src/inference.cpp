#include "clogic/inference.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <deque>
#include <map>
#include <set>

#include "clogic/unification.hpp"

namespace clogic {

std::string to_string(ChainStatus s) {
    switch (s) {
        case ChainStatus::Derivable: return "derivable";
        case ChainStatus::NotDerivable: return "not derivable";
        case ChainStatus::BudgetExhausted: return "budget exhausted";
    }
    return "?";
}

std::string to_string(const FactInContext& f) { return to_string(FormulaInContext{f.ctx, f.atom}); }

namespace {

using K = Formula::Kind;

// Appends numbered lines and provides the projection helper shared by both chainers.
class Builder {
public:
    int add(const Sequent& s, Rule r, std::vector<int> premises) {
        int n = static_cast<int>(d.lines.size()) + 1;
        d.lines.push_back(DerivationLine{n, s, std::move(r), std::move(premises)});
        return n;
    }

    const Sequent& seq(int n) const { return d.lines[n - 1].sequent; }

    int cut(int a, int b) {
        return add(Sequent(seq(a).lhs(), seq(a).ctx(), seq(b).rhs()), Rule::of(RuleKind::Cut), {a, b});
    }

    int and_intro(int a, int b) {
        return add(Sequent(seq(a).lhs(), seq(a).ctx(), Formula::conj(seq(a).rhs(), seq(b).rhs())),
                   Rule::of(RuleKind::AndI), {a, b});
    }

    int top(const Formula& lhs, const Context& ctx) {
        return add(Sequent(lhs, ctx, Formula::top()), Rule::of(RuleKind::Top), {});
    }

    int sub(int premise, const Substitution& theta, const Context& ctx) {
        const Sequent& p = seq(premise);
        Substitution ext = extend(theta, p.ctx());
        FreshVariableSource fresh;
        fresh.avoid(ctx);
        Formula lhs = apply(p.lhs(), ext, fresh);
        Formula rhs = apply(p.rhs(), ext, fresh);
        return add(Sequent(lhs, ctx, rhs), Rule::sub(over_premise_context(theta, p.ctx())), {premise});
    }

    // A line proving from |- to, built from identity, conjunction elimination,
    // conjunction introduction, top and cut.
    int project(const Context& ctx, const Formula& from, const Formula& to) {
        if (from == to) return add(Sequent(from, ctx, to), Rule::of(RuleKind::Identity), {});
        if (to.kind() == K::Top) return top(from, ctx);
        std::vector<bool> path;
        if (find_path(from, to, path)) {
            int line = 0;
            Formula cur = from;
            for (bool right : path) {
                Formula next = right ? cur.right() : cur.left();
                int step = add(Sequent(cur, ctx, next), Rule::of(right ? RuleKind::AndE1 : RuleKind::AndE0), {});
                line = line ? cut(line, step) : step;
                cur = next;
            }
            return line;
        }
        if (to.kind() == K::And) {
            int l = project(ctx, from, to.left());
            int r = project(ctx, from, to.right());
            return and_intro(l, r);
        }
        throw LogicError(ErrorKind::ShapeMismatch, to_string(to) + " is not a conjunct of " + to_string(from));
    }

    Derivation d;

private:
    static bool find_path(const Formula& from, const Formula& to, std::vector<bool>& path) {
        if (from == to) return true;
        if (from.kind() != K::And) return false;
        path.push_back(false);
        if (find_path(from.left(), to, path)) return true;
        path.back() = true;
        if (find_path(from.right(), to, path)) return true;
        path.pop_back();
        return false;
    }
};

bool is_proposition(const Formula& f) { return f.kind() == K::Rel && f.args().empty(); }

void require_propositional(const Sequent& s, const std::string& what) {
    if (!s.ctx().empty()) throw LogicError(ErrorKind::NotPropositional, what + " has a non-empty context");
    for (const auto& side : {s.lhs(), s.rhs()})
        for (const auto& a : atomic_subformulae(side))
            if (a.kind() != K::Top && !is_proposition(a))
                throw LogicError(ErrorKind::NotPropositional, what + " mentions " + to_string(a));
}

std::string line_text(const Derivation& d, int n) {
    const DerivationLine& l = d.lines[n - 1];
    return std::to_string(n) + ". " + to_string(l.sequent) + "   " + format_rule(l, &d);
}

}  // namespace

// ---------------------------------------------------------------- propositional chaining

ChainResult propositional_forward_chaining(const Theory& t, const NormalHornSequent& goal) {
    const Sequent goal_seq = goal.to_sequent();
    require_propositional(goal_seq, "goal");
    struct Axiom {
        std::vector<std::string> premises;  // distinct symbols, excluding top
        Formula lhs;
        Formula conclusion;
    };
    std::vector<Axiom> axioms;
    for (std::size_t i = 0; i < t.axioms.size(); ++i) {
        const std::string where = "axiom " + std::to_string(i + 1);
        if (!is_normal_horn(t.axioms[i])) throw LogicError(ErrorKind::NotNormalForm, where);
        require_propositional(t.axioms[i], where);
        Axiom a{{}, t.axioms[i].lhs(), t.axioms[i].rhs()};
        for (const auto& p : conjuncts(a.lhs))
            if (is_proposition(p) &&
                std::find(a.premises.begin(), a.premises.end(), p.relation()) == a.premises.end())
                a.premises.push_back(p.relation());
        axioms.push_back(std::move(a));
    }

    ChainResult result;
    Builder b;
    const Formula& G = goal.lhs;
    const Context ctx;
    if (goal.conclusion.kind() == K::Top) {
        b.top(G, ctx);
        result.status = ChainStatus::Derivable;
        b.d.fragment = Fragment::Horn;
        result.derivation = std::move(b.d);
        return result;
    }
    const std::string target = goal.conclusion.relation();

    std::set<std::string> in_goal;
    for (const auto& p : conjuncts(G))
        if (is_proposition(p)) in_goal.insert(p.relation());

    std::vector<std::string> history;
    std::vector<bool> settled;
    std::deque<std::size_t> queue;  // indices into history
    std::map<std::string, int> line_of;     // derived symbol -> line proving G |- U
    std::map<std::string, std::size_t> top_axiom;  // symbol -> axiom with a top left side
    std::set<std::string> queued;
    auto push = [&](const std::string& s) {
        queued.insert(s);
        history.push_back(s);
        settled.push_back(false);
        queue.push_back(history.size() - 1);
    };
    for (const auto& p : conjuncts(G))
        if (is_proposition(p) && !queued.count(p.relation())) push(p.relation());
    for (std::size_t i = 0; i < axioms.size(); ++i)
        if (axioms[i].premises.empty() && is_proposition(axioms[i].conclusion) &&
            !queued.count(axioms[i].conclusion.relation())) {
            top_axiom[axioms[i].conclusion.relation()] = i;
            push(axioms[i].conclusion.relation());
        }

    Formula conj = G;
    int conj_line = 0;
    std::set<std::string> conjoined = in_goal;
    std::set<std::string> inferred;
    std::vector<std::size_t> count;
    for (const auto& a : axioms) count.push_back(a.premises.size());

    // Line proving conj |- Q_i followed by the axiom, lifted to G.
    auto fire = [&](std::size_t i, const Formula& from) {
        int proj = from == axioms[i].lhs ? 0 : b.project(ctx, from, axioms[i].lhs);
        int hyp = b.add(t.axioms[i], Rule::hypothesis(i + 1), {});
        int line = proj ? b.cut(proj, hyp) : hyp;
        if (from != G) line = b.cut(conj_line, line);
        return line;
    };
    std::function<int(const std::string&)> line_for = [&](const std::string& u) -> int {
        auto it = line_of.find(u);
        if (it != line_of.end()) return it->second;
        int line;
        if (in_goal.count(u))
            line = b.project(ctx, G, Formula::rel(u, {}));
        else
            line = fire(top_axiom.at(u), G);
        line_of[u] = line;
        return line;
    };

    while (!queue.empty()) {
        std::size_t hi = queue.front();
        queue.pop_front();
        settled[hi] = true;
        const std::string u = history[hi];
        TraceRow row;
        row.popped = u;
        row.history = history;  // as it stands when u is popped
        row.settled = settled;
        std::size_t first_line = b.d.lines.size() + 1;
        if (u == target) {
            int line = line_for(u);
            b.d.conclusions = {line};
            for (std::size_t n = first_line; n <= b.d.lines.size(); ++n)
                row.derived.push_back(line_text(b.d, static_cast<int>(n)));
            result.trace.push_back(std::move(row));
            result.status = ChainStatus::Derivable;
            b.d.fragment = Fragment::Horn;
            result.derivation = std::move(b.d);
            return result;
        }
        if (!inferred.count(u)) {
            inferred.insert(u);
            for (std::size_t i = 0; i < axioms.size(); ++i) {
                const auto& prem = axioms[i].premises;
                if (std::find(prem.begin(), prem.end(), u) == prem.end()) continue;
                --count[i];
                row.counted.push_back(i + 1);
                const Formula& q = axioms[i].conclusion;
                if (!is_proposition(q) || queued.count(q.relation())) continue;
                for (const auto& p : prem) {
                    if (conjoined.count(p) || !queued.count(p)) continue;
                    if (!conj_line) conj_line = b.add(Sequent(G, ctx, G), Rule::of(RuleKind::Identity), {});
                    conj_line = b.and_intro(conj_line, line_for(p));
                    conj = b.seq(conj_line).rhs();
                    conjoined.insert(p);
                }
                if (count[i] == 0) {
                    line_of[q.relation()] = fire(i, conj);
                    push(q.relation());
                }
            }
        }
        for (std::size_t n = first_line; n <= b.d.lines.size(); ++n)
            row.derived.push_back(line_text(b.d, static_cast<int>(n)));
        result.trace.push_back(std::move(row));
    }
    result.status = ChainStatus::NotDerivable;
    return result;
}

// ---------------------------------------------------------------- closed sorts

bool sort_closed(const Signature& sig, const std::string& sort) {
    if (!sig.has_sort(sort)) throw LogicError(ErrorKind::UnknownSort, "unknown sort " + sort);
    std::deque<std::string> queue;
    std::vector<std::size_t> count;
    for (const auto& f : sig.functions()) {
        count.push_back(f.args.size());
        if (f.args.empty()) queue.push_back(f.result);
    }
    std::set<std::string> closed;
    while (!queue.empty()) {
        std::string s = queue.front();
        queue.pop_front();
        if (s == sort) return true;
        if (closed.count(s)) continue;
        closed.insert(s);
        const auto& fs = sig.functions();
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (const auto& a : fs[i].args)
                if (a == s && --count[i] == 0) queue.push_back(fs[i].result);
    }
    return false;
}

std::optional<Term> closed_term_witness(const Signature& sig, const std::string& sort) {
    if (!sig.has_sort(sort)) throw LogicError(ErrorKind::UnknownSort, "unknown sort " + sort);
    std::map<std::string, Term> best;
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::string, Term> found;
        for (const auto& f : sig.functions()) {
            if (best.count(f.result) || found.count(f.result)) continue;
            std::vector<Term> args;
            bool ok = true;
            for (const auto& a : f.args) {
                auto it = best.find(a);
                if (it == best.end()) {
                    ok = false;
                    break;
                }
                args.push_back(it->second);
            }
            if (ok) found.emplace(f.result, Term::app(f.name, std::move(args), f.result));
        }
        for (auto& [s, term] : found) {
            best.emplace(s, term);
            changed = true;
        }
        if (best.count(sort)) return best.at(sort);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- first-order chaining

void enumerate_premise_tuples(std::size_t queue_size, std::size_t n,
                              const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(n, 0);
    if (n > 0 && queue_size == 0) return;
    while (true) {
        if (!visit(idx)) return;
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < queue_size) break;
            idx[k] = 0;
            if (k == 0) return;
        }
        if (n == 0) return;
    }
}

namespace {

enum class FactOrigin { Goal, Top };

struct Fact {
    FactInContext fic;
    FactOrigin origin;
    enum class Kind { GoalPremise, TopAxiom, Derived } kind;
    std::size_t index = 0;          // goal premise position or axiom index
    Substitution axiom_rename;      // TopAxiom and Derived
    std::vector<std::size_t> tuple;  // Derived
    std::vector<Substitution> fact_renames;
    Substitution theta;
};

class FirstOrderChainer {
public:
    FirstOrderChainer(const Theory& t, const NormalHornSequent& goal, const IterationBudget& budget)
        : t_(t), goal_(goal), budget_(budget) {
        for (const auto& v : goal.ctx) goal_vars_.insert(v);
        for (std::size_t i = 0; i < t.axioms.size(); ++i) {
            if (!is_normal_horn(t.axioms[i]))
                throw LogicError(ErrorKind::NotNormalForm, "axiom " + std::to_string(i + 1));
            axioms_.push_back(as_normal_horn(t.axioms[i]));
        }
    }

    ChainResult run() {
        ChainResult result;
        const Formula& S = goal_.conclusion;
        if (S.kind() == K::Top) {
            b_.top(goal_.lhs, goal_.ctx);
            return finish(result);
        }
        for (std::size_t j = 0; j < goal_.premises.size(); ++j) {
            if (goal_.premises[j].kind() == K::Top) continue;
            Fact f{{goal_.ctx, goal_.premises[j]}, FactOrigin::Goal, Fact::Kind::GoalPremise, j, {}, {}, {}, {}};
            if (novel(f)) facts_.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < axioms_.size(); ++i) {
            if (!non_top(axioms_[i]).empty() || axioms_[i].conclusion.kind() == K::Top) continue;
            FreshVariableSource fresh;
            fresh.avoid(goal_.ctx);
            fresh.avoid(axioms_[i].ctx);
            std::vector<Substitution::Pair> ren;
            std::vector<Variable> ctx;
            for (const auto& v : axioms_[i].ctx) {
                if (is_goal_name(v.name)) {
                    Variable v2 = fresh.fresh(v);
                    ren.emplace_back(Term::var(v2), v);
                    ctx.push_back(v2);
                } else {
                    ctx.push_back(v);
                }
            }
            Substitution rho(ren);
            Fact f{{Context(ctx), apply(axioms_[i].conclusion, rho)}, FactOrigin::Top, Fact::Kind::TopAxiom, i, rho,
                   {}, {}, {}};
            if (novel(f)) facts_.push_back(std::move(f));
        }
        TraceRow init;
        init.popped = "initial queue";
        init.history = history();
        init.settled.assign(facts_.size(), false);
        result.trace.push_back(init);
        for (std::size_t i = 0; i < facts_.size(); ++i)
            if (try_goal(i)) return finish(result);

        std::size_t frontier = 0;
        for (std::size_t pass = 1;; ++pass) {
            if (pass > budget_.passes) {
                result.status = ChainStatus::BudgetExhausted;
                return result;
            }
            std::size_t n_facts = facts_.size();
            bool added = false;
            bool done = false;
            bool exhausted = false;
            for (std::size_t ai = 0; ai < axioms_.size() && !done && !exhausted; ++ai) {
                std::size_t arity = non_top(axioms_[ai]).size();
                if (arity == 0 || axioms_[ai].conclusion.kind() == K::Top) continue;
                enumerate_premise_tuples(n_facts, arity, [&](const std::vector<std::size_t>& tuple) {
                    if (pass > 1 && std::all_of(tuple.begin(), tuple.end(),
                                                [&](std::size_t k) { return k < frontier; }))
                        return true;
                    auto f = combine(ai, tuple);
                    if (!f || !novel(*f)) return true;
                    facts_.push_back(std::move(*f));
                    added = true;
                    TraceRow row;
                    row.history = history();
                    row.settled.assign(facts_.size(), false);
                    for (std::size_t k = 0; k < n_facts; ++k) row.settled[k] = k < frontier;
                    row.popped = tuple_text(tuple);
                    row.counted = {ai + 1};
                    row.derived.push_back(to_string(facts_.back().fic) + "   by " +
                                          to_string(facts_.back().theta));
                    result.trace.push_back(std::move(row));
                    if (try_goal(facts_.size() - 1)) {
                        done = true;
                        return false;
                    }
                    if (facts_.size() > budget_.queue) {
                        exhausted = true;
                        return false;
                    }
                    return true;
                });
            }
            if (done) return finish(result);
            if (exhausted) {
                result.status = ChainStatus::BudgetExhausted;
                return result;
            }
            if (!added) {
                result.status = ChainStatus::NotDerivable;
                return result;
            }
            frontier = n_facts;
        }
    }

private:
    static std::vector<Formula> non_top(const NormalHornSequent& a) {
        std::vector<Formula> out;
        for (const auto& p : a.premises)
            if (p.kind() != K::Top) out.push_back(p);
        return out;
    }

    bool is_goal_name(const std::string& name) const {
        for (const auto& v : goal_vars_)
            if (v.name == name) return true;
        return false;
    }

    std::vector<std::string> history() const {
        std::vector<std::string> out;
        for (const auto& f : facts_) out.push_back(to_string(f.fic));
        return out;
    }

    std::string tuple_text(const std::vector<std::size_t>& tuple) const {
        std::string out;
        for (std::size_t k = 0; k < tuple.size(); ++k) out += (k ? "; " : "") + to_string(facts_[tuple[k]].fic);
        return out;
    }

    // Positional variant test; an existing top fact also covers a goal fact.
    bool novel(const Fact& f) const {
        for (const auto& e : facts_) {
            if (e.origin == FactOrigin::Goal && f.origin == FactOrigin::Top) continue;
            if (e.fic.ctx.size() != f.fic.ctx.size()) continue;
            std::vector<Substitution::Pair> ren;
            bool ok = true;
            for (std::size_t i = 0; i < e.fic.ctx.size() && ok; ++i) {
                const Variable& a = e.fic.ctx[i];
                const Variable& b = f.fic.ctx[i];
                if (a.sort != b.sort) ok = false;
                else if (e.origin == FactOrigin::Goal && (goal_vars_.count(a) || goal_vars_.count(b)) && a != b)
                    ok = false;
                else
                    ren.emplace_back(Term::var(b), a);
            }
            if (ok && apply(e.fic.atom, Substitution(ren)) == f.fic.atom) return false;
        }
        return true;
    }

    std::optional<Fact> combine(std::size_t ai, const std::vector<std::size_t>& tuple) const {
        const NormalHornSequent& ax = axioms_[ai];
        FreshVariableSource fresh;
        fresh.avoid(goal_.ctx);
        fresh.avoid(ax.ctx);
        for (auto k : tuple) fresh.avoid(facts_[k].fic.ctx);
        std::set<std::string> used;
        for (const auto& v : goal_vars_) used.insert(v.name);
        bool has_goal_fact = false;
        std::vector<Substitution> renames;
        std::vector<FormulaInContext> rhs;
        for (auto k : tuple) {
            const Fact& f = facts_[k];
            if (f.origin == FactOrigin::Goal) has_goal_fact = true;
            std::vector<Substitution::Pair> ren;
            std::vector<Variable> ctx;
            for (const auto& v : f.fic.ctx) {
                if (goal_vars_.count(v)) {
                    ctx.push_back(v);
                } else if (used.count(v.name)) {
                    Variable v2 = fresh.fresh(v);
                    used.insert(v2.name);
                    ren.emplace_back(Term::var(v2), v);
                    ctx.push_back(v2);
                } else {
                    used.insert(v.name);
                    ctx.push_back(v);
                }
            }
            Substitution rho(ren);
            renames.push_back(rho);
            rhs.push_back({Context(ctx), apply(f.fic.atom, rho)});
        }
        std::vector<Substitution::Pair> ren;
        std::vector<Variable> actx;
        for (const auto& v : ax.ctx) {
            if (used.count(v.name)) {
                Variable v2 = fresh.fresh(v);
                ren.emplace_back(Term::var(v2), v);
                actx.push_back(v2);
            } else {
                actx.push_back(v);
            }
        }
        Substitution sigma(ren);
        Context axiom_ctx(actx);
        std::vector<FormulaInContext> lhs;
        for (const auto& p : non_top(ax)) lhs.push_back({axiom_ctx, apply(p, sigma)});
        UnifyOutcome u = unify_formulae_in_context(lhs, rhs);
        if (!u.ok()) return std::nullopt;
        const Substitution& theta = u.theta();
        if (has_goal_fact && !fixes_goal(theta)) return std::nullopt;
        FormulaInContext q = apply_in_context(FormulaInContext{axiom_ctx, apply(ax.conclusion, sigma)}, theta);
        Fact f{{q.ctx, q.body},
               has_goal_fact ? FactOrigin::Goal : FactOrigin::Top,
               Fact::Kind::Derived,
               ai,
               sigma,
               tuple,
               renames,
               theta};
        return f;
    }

    bool fixes_goal(const Substitution& theta) const {
        for (const auto& g : goal_vars_) {
            auto r = theta.lookup(g);
            if (r && !(r->is_var() && r->variable() == g)) return false;
        }
        return true;
    }

    bool try_goal(std::size_t fi) {
        const Fact& f = facts_[fi];
        UnifyOutcome u = unify_formulae_in_context({FormulaInContext{f.fic.ctx, f.fic.atom}},
                                                   {FormulaInContext{goal_.ctx, goal_.conclusion}});
        if (!u.ok() || !fixes_goal(u.theta())) return false;
        const Substitution& delta = u.theta();
        Context z = result_context(delta, f.fic.ctx);
        std::vector<Variable> residual;
        for (const auto& v : z)
            if (!goal_.ctx.contains(v)) residual.push_back(v);
        std::sort(residual.begin(), residual.end(), [](const Variable& a, const Variable& b) { return a.name < b.name; });
        std::vector<std::pair<Variable, Term>> elim;
        for (const auto& r : residual) {
            std::optional<Term> t;
            for (const auto& g : goal_.ctx)
                if (g.sort == r.sort) {
                    t = Term::var(g);
                    break;
                }
            if (!t) t = closed_term_witness(t_.signature, r.sort);
            if (!t) return false;
            elim.emplace_back(r, *t);
        }
        int line = line_of(fi);
        if (!(without_inert(delta).empty() && z == f.fic.ctx)) line = b_.sub(line, delta, z);
        for (const auto& [r, t] : elim) {
            Substitution step({{t, r}});
            line = b_.sub(line, step, result_context(step, b_.seq(line).ctx()));
        }
        if (b_.seq(line).ctx() != goal_.ctx) line = b_.sub(line, Substitution(), goal_.ctx);
        if (b_.seq(line).lhs() != goal_.lhs) line = b_.cut(b_.top(goal_.lhs, goal_.ctx), line);
        return true;
    }

    const Formula& lhs_for(const Fact& f) const {
        static const Formula top = Formula::top();
        return f.origin == FactOrigin::Goal ? goal_.lhs : top;
    }

    int line_of(std::size_t fi) {
        auto it = lines_.find(fi);
        if (it != lines_.end()) return it->second;
        const Fact& f = facts_[fi];
        int line = 0;
        switch (f.kind) {
            case Fact::Kind::GoalPremise:
                line = b_.project(goal_.ctx, goal_.lhs, goal_.premises[f.index]);
                break;
            case Fact::Kind::TopAxiom: {
                const NormalHornSequent& ax = axioms_[f.index];
                line = b_.add(t_.axioms[f.index], Rule::hypothesis(f.index + 1), {});
                if (ax.lhs.kind() != K::Top) line = b_.cut(b_.project(ax.ctx, Formula::top(), ax.lhs), line);
                if (!f.axiom_rename.empty()) line = b_.sub(line, f.axiom_rename, f.fic.ctx);
                break;
            }
            case Fact::Kind::Derived: {
                const NormalHornSequent& ax = axioms_[f.index];
                const Formula& H = lhs_for(f);
                std::vector<int> leaves;
                for (std::size_t k = 0; k < f.tuple.size(); ++k) {
                    std::size_t src = f.tuple[k];
                    int l = line_of(src);
                    Substitution step = compose(f.fact_renames[k], f.theta);
                    if (!(without_inert(step).empty() && b_.seq(l).ctx() == f.fic.ctx)) l = b_.sub(l, step, f.fic.ctx);
                    if (b_.seq(l).lhs() != H) l = b_.cut(b_.top(H, f.fic.ctx), l);
                    leaves.push_back(l);
                }
                int hyp = b_.add(t_.axioms[f.index], Rule::hypothesis(f.index + 1), {});
                int inst = b_.sub(hyp, compose(f.axiom_rename, f.theta), f.fic.ctx);
                std::size_t next = 0;
                int premise = build_conjunction(b_.seq(inst).lhs(), H, f.fic.ctx, leaves, next);
                (void)ax;
                line = b_.cut(premise, inst);
                break;
            }
        }
        lines_[fi] = line;
        return line;
    }

    int build_conjunction(const Formula& p, const Formula& H, const Context& ctx, const std::vector<int>& leaves,
                          std::size_t& next) {
        if (p.kind() == K::And) {
            int l = build_conjunction(p.left(), H, ctx, leaves, next);
            int r = build_conjunction(p.right(), H, ctx, leaves, next);
            return b_.and_intro(l, r);
        }
        if (p.kind() == K::Top) return b_.top(H, ctx);
        return leaves.at(next++);
    }

    ChainResult& finish(ChainResult& result) {
        result.status = ChainStatus::Derivable;
        b_.d.fragment = Fragment::Horn;
        b_.d.conclusions = {static_cast<int>(b_.d.lines.size())};
        result.derivation = std::move(b_.d);
        return result;
    }

    const Theory& t_;
    const NormalHornSequent& goal_;
    IterationBudget budget_;
    std::set<Variable> goal_vars_;
    std::vector<NormalHornSequent> axioms_;
    std::vector<Fact> facts_;
    std::map<std::size_t, int> lines_;
    Builder b_;
};

}  // namespace

ChainResult forward_chaining(const Theory& t, const NormalHornSequent& goal, const IterationBudget& budget) {
    return FirstOrderChainer(t, goal, budget).run();
}

// ---------------------------------------------------------------- trace rendering

std::string format_trace(const ChainResult& r) {
    std::vector<std::array<std::string, 3>> rows;
    std::vector<std::vector<std::string>> derived;
    for (const auto& row : r.trace) {
        std::string hist;
        for (std::size_t i = 0; i < row.history.size(); ++i) {
            if (i) hist += " & ";
            bool s = i < row.settled.size() && row.settled[i];
            hist += s ? "_" + row.history[i] + "_" : row.history[i];
        }
        std::string counted;
        for (std::size_t i = 0; i < row.counted.size(); ++i) counted += (i ? "," : "") + std::to_string(row.counted[i]);
        rows.push_back({hist, row.popped, counted});
        derived.push_back(row.derived);
    }
    std::array<std::size_t, 3> width{7, 1, 5};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 3; ++c) width[c] = std::max(width[c], row[c].size());
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
    std::string out = pad("History", width[0]) + "  " + pad("U", width[1]) + "  " + pad("Count", width[2]) +
                      "  Derivation\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string head = pad(rows[i][0], width[0]) + "  " + pad(rows[i][1], width[1]) + "  " + pad(rows[i][2], width[2]);
        if (derived[i].empty()) {
            out += head + "\n";
            continue;
        }
        for (std::size_t k = 0; k < derived[i].size(); ++k)
            out += (k ? std::string(head.size(), ' ') : head) + "  " + derived[i][k] + "\n";
    }
    out += "Result: " + to_string(r.status) + "\n";
    return out;
}

}  // namespace clogic
