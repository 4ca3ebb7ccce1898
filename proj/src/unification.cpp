#include "clogic/unification.hpp"

#include <deque>

namespace clogic {

std::string to_string(NoUnifierReason r) {
    switch (r) {
        case NoUnifierReason::LengthMismatch: return "LengthMismatch";
        case NoUnifierReason::SortClash: return "SortClash";
        case NoUnifierReason::SymbolClash: return "SymbolClash";
        case NoUnifierReason::OccursCheck: return "OccursCheck";
        case NoUnifierReason::QuantifierSortClash: return "QuantifierSortClash";
        case NoUnifierReason::BoundVariableEscape: return "BoundVariableEscape";
        case NoUnifierReason::FuelExhausted: return "FuelExhausted";
    }
    return "?";
}

namespace {

struct Failure {
    NoUnifierReason reason;
};

// Running state shared by the term and formula procedures: the accumulated
// substitution, the part added since the caller's checkpoint, and the trace.
struct State {
    Substitution theta;
    Substitution delta;
    std::vector<UnifyStep> trace;
    std::size_t fuel;

    void burn() {
        if (fuel == 0) throw Failure{NoUnifierReason::FuelExhausted};
        --fuel;
    }

    void record(const std::string& rule, const Substitution& step) {
        theta = compose(theta, step);
        delta = compose(delta, step);
        trace.push_back({rule, step});
    }
};

Context remove_vars(const Context& c, const std::set<Variable>& drop) {
    std::vector<Variable> out;
    for (const auto& v : c)
        if (!drop.count(v)) out.push_back(v);
    return Context(std::move(out));
}

Substitution with_identity_prefix(const Context& z, std::vector<Substitution::Pair> tail) {
    std::vector<Substitution::Pair> ps;
    for (const auto& v : z) ps.emplace_back(Term::var(v), v);
    for (auto& p : tail) ps.push_back(std::move(p));
    return Substitution(std::move(ps));
}

// ------------------------------------------------------------ bare terms

void bare_terms(std::deque<Term> as, std::deque<Term> bs, State& st) {
    if (as.size() != bs.size()) throw Failure{NoUnifierReason::LengthMismatch};
    while (!as.empty()) {
        st.burn();
        Term a = as.front();
        Term b = bs.front();
        as.pop_front();
        bs.pop_front();
        if (a.sort() != b.sort()) throw Failure{NoUnifierReason::SortClash};
        if (!a.is_var() && b.is_var()) {
            as.push_front(b);
            bs.push_front(a);
            continue;
        }
        if (a.is_var()) {
            if (b.is_var() && b.variable() == a.variable()) continue;
            if (!b.is_var() && occurs_in(a.variable(), b)) throw Failure{NoUnifierReason::OccursCheck};
            Substitution step({{b, a.variable()}});
            for (auto& t : as) t = apply(t, step);
            for (auto& t : bs) t = apply(t, step);
            st.record(b.is_var() ? "var" : "bind", step);
            continue;
        }
        if (a.function() != b.function() || a.args().size() != b.args().size())
            throw Failure{NoUnifierReason::SymbolClash};
        for (std::size_t i = a.args().size(); i-- > 0;) {
            as.push_front(a.args()[i]);
            bs.push_front(b.args()[i]);
        }
    }
}

// ------------------------------------------------------------ terms in context

void apply_rest(std::deque<TermInContext>& xs, const Substitution& step) {
    for (auto& t : xs) t = apply_in_context(t, step);
}

void context_terms(std::deque<TermInContext> as, std::deque<TermInContext> bs, State& st) {
    if (as.size() != bs.size()) throw Failure{NoUnifierReason::LengthMismatch};
    while (!as.empty()) {
        st.burn();
        TermInContext a = as.front();
        TermInContext b = bs.front();
        as.pop_front();
        bs.pop_front();
        if (a.body.sort() != b.body.sort()) throw Failure{NoUnifierReason::SortClash};
        Context joined = concat_contexts(a.ctx, b.ctx);
        if (a.body.is_var()) {
            const Variable& x = a.body.variable();
            Substitution step;
            std::string rule;
            if (b.body.is_var() && b.body.variable() == x) {
                rule = "A";
                step = with_identity_prefix(remove_vars(joined, {x}), {{a.body, x}});
            } else if (b.body.is_var()) {
                rule = "B";
                const Variable& y = b.body.variable();
                step = with_identity_prefix(remove_vars(joined, {x, y}), {{b.body, x}});
            } else {
                rule = "C";
                if (occurs_in(x, b.body)) throw Failure{NoUnifierReason::OccursCheck};
                std::set<Variable> drop = free_variables(b.body);
                drop.insert(x);
                step = with_identity_prefix(remove_vars(joined, drop), {{b.body, x}});
            }
            apply_rest(as, step);
            apply_rest(bs, step);
            st.record(rule, step);
            continue;
        }
        if (b.body.is_var()) {
            as.push_front(b);
            bs.push_front(a);
            st.trace.push_back({"D", {}});
            continue;
        }
        if (a.body.function() != b.body.function() || a.body.args().size() != b.body.args().size())
            throw Failure{NoUnifierReason::SymbolClash};
        if (a.body.args().empty()) {
            // Identical constants: keep both contexts alive as inert pairs so
            // every expression ends up over the same context.
            Substitution step = Substitution::identity(joined);
            apply_rest(as, step);
            apply_rest(bs, step);
            st.record("E", step);
            continue;
        }
        for (std::size_t i = a.body.args().size(); i-- > 0;) {
            as.push_front({a.ctx, a.body.args()[i]});
            bs.push_front({b.ctx, b.body.args()[i]});
        }
        st.trace.push_back({"E", {}});
    }
}

// ------------------------------------------------------------ formulae

struct PendingBinder {
    Variable var;
};

void check_binders(const Substitution& theta, const std::vector<PendingBinder>& binders) {
    for (const auto& b : binders) {
        for (const auto& [s, y] : theta.pairs()) {
            if (y == b.var) {
                if (!(s.is_var() && s.variable() == b.var)) throw Failure{NoUnifierReason::BoundVariableEscape};
            } else if (occurs_in(b.var, s)) {
                throw Failure{NoUnifierReason::BoundVariableEscape};
            }
        }
    }
}

std::set<Variable> vars_of(const std::deque<Formula>& fs) {
    std::set<Variable> out;
    for (const auto& f : fs) {
        auto v = all_variables(f);
        out.insert(v.begin(), v.end());
    }
    return out;
}

std::set<Variable> vars_of(const std::deque<FormulaInContext>& fs) {
    std::set<Variable> out;
    for (const auto& f : fs) {
        auto v = all_variables(f.body);
        out.insert(v.begin(), v.end());
        out.insert(f.ctx.begin(), f.ctx.end());
    }
    return out;
}

void substitution_vars(const Substitution& theta, std::set<Variable>& out) {
    for (const auto& [s, y] : theta.pairs()) {
        out.insert(y);
        auto fv = free_variables(s);
        out.insert(fv.begin(), fv.end());
    }
}

void bare_formulae(std::deque<Formula> as, std::deque<Formula> bs, State& st) {
    using K = Formula::Kind;
    if (as.size() != bs.size()) throw Failure{NoUnifierReason::LengthMismatch};
    std::vector<PendingBinder> binders;
    while (!as.empty()) {
        st.burn();
        Formula a = as.front();
        Formula b = bs.front();
        if (a.kind() != b.kind()) throw Failure{NoUnifierReason::SymbolClash};
        as.pop_front();
        bs.pop_front();
        switch (a.kind()) {
            case K::Rel:
            case K::Eq: {
                if (a.kind() == K::Rel && (a.relation() != b.relation() || a.args().size() != b.args().size()))
                    throw Failure{NoUnifierReason::SymbolClash};
                Substitution outer_delta = st.delta;
                st.delta = {};
                bare_terms({a.args().begin(), a.args().end()}, {b.args().begin(), b.args().end()}, st);
                Substitution step = st.delta;
                st.delta = compose(outer_delta, step);
                if (!step.empty()) {
                    for (auto& f : as) f = apply(f, step);
                    for (auto& f : bs) f = apply(f, step);
                }
                break;
            }
            case K::Top:
            case K::Bot: break;
            case K::Not:
                as.push_front(a.body());
                bs.push_front(b.body());
                break;
            case K::Exists:
            case K::Forall: {
                const Variable& x = a.bound();
                const Variable& y = b.bound();
                if (x.sort != y.sort) throw Failure{NoUnifierReason::QuantifierSortClash};
                std::set<Variable> avoid = vars_of(as);
                auto more = vars_of(bs);
                avoid.insert(more.begin(), more.end());
                for (const auto& f : {a, b}) {
                    auto v = all_variables(f);
                    avoid.insert(v.begin(), v.end());
                }
                substitution_vars(st.theta, avoid);
                FreshVariableSource fresh(avoid);
                Variable u1 = fresh.fresh(x);
                Variable u2 = fresh.fresh(x);
                Variable u3 = x == y ? u2 : fresh.fresh(x);
                Substitution rest = x == y ? Substitution({{Term::var(u2), x}})
                                           : Substitution({{Term::var(u2), x}, {Term::var(u3), y}});
                Formula left = apply(a.body(), Substitution({{Term::var(u1), x}}), fresh);
                if (!(x == y)) left = apply(left, Substitution({{Term::var(u3), y}}), fresh);
                Formula right = apply(b.body(), Substitution({{Term::var(u1), y}}), fresh);
                if (!(x == y)) right = apply(right, Substitution({{Term::var(u2), x}}), fresh);
                for (auto& f : as) f = apply(f, rest, fresh);
                for (auto& f : bs) f = apply(f, rest, fresh);
                as.push_front(left);
                bs.push_front(right);
                st.record("Q", rest);
                binders.push_back({u1});
                break;
            }
            default:
                as.push_front(a.right());
                as.push_front(a.left());
                bs.push_front(b.right());
                bs.push_front(b.left());
                break;
        }
    }
    check_binders(st.theta, binders);
}

void apply_rest(std::deque<FormulaInContext>& xs, const Substitution& step, FreshVariableSource& fresh) {
    for (auto& f : xs) f = apply_in_context(f, step, fresh);
}

void context_formulae(std::deque<FormulaInContext> as, std::deque<FormulaInContext> bs, State& st) {
    using K = Formula::Kind;
    if (as.size() != bs.size()) throw Failure{NoUnifierReason::LengthMismatch};
    std::vector<PendingBinder> binders;
    while (!as.empty()) {
        st.burn();
        FormulaInContext a = as.front();
        FormulaInContext b = bs.front();
        if (a.body.kind() != b.body.kind()) throw Failure{NoUnifierReason::SymbolClash};
        as.pop_front();
        bs.pop_front();
        FreshVariableSource fresh(vars_of(as));
        fresh.avoid(vars_of(bs));
        switch (a.body.kind()) {
            case K::Rel:
            case K::Eq: {
                if (a.body.kind() == K::Rel &&
                    (a.body.relation() != b.body.relation() || a.body.args().size() != b.body.args().size()))
                    throw Failure{NoUnifierReason::SymbolClash};
                Substitution step;
                if (a.body.args().empty()) {
                    step = Substitution::identity(concat_contexts(a.ctx, b.ctx));
                    st.record("atom", step);
                } else {
                    Substitution outer_delta = st.delta;
                    st.delta = {};
                    std::deque<TermInContext> ta, tb;
                    for (const auto& t : a.body.args()) ta.push_back({a.ctx, t});
                    for (const auto& t : b.body.args()) tb.push_back({b.ctx, t});
                    context_terms(std::move(ta), std::move(tb), st);
                    step = st.delta;
                    st.delta = compose(outer_delta, step);
                }
                apply_rest(as, step, fresh);
                apply_rest(bs, step, fresh);
                break;
            }
            case K::Top:
            case K::Bot: {
                Substitution step = Substitution::identity(concat_contexts(a.ctx, b.ctx));
                apply_rest(as, step, fresh);
                apply_rest(bs, step, fresh);
                st.record("const", step);
                break;
            }
            case K::Not:
                as.push_front({a.ctx, a.body.body()});
                bs.push_front({b.ctx, b.body.body()});
                break;
            case K::Exists:
            case K::Forall: {
                const Variable& x = a.body.bound();
                const Variable& y = b.body.bound();
                if (x.sort != y.sort) throw Failure{NoUnifierReason::QuantifierSortClash};
                std::set<Variable> avoid = vars_of(as);
                auto more = vars_of(bs);
                avoid.insert(more.begin(), more.end());
                for (const auto* f : {&a, &b}) {
                    auto v = all_variables(f->body);
                    avoid.insert(v.begin(), v.end());
                    avoid.insert(f->ctx.begin(), f->ctx.end());
                }
                substitution_vars(st.theta, avoid);
                fresh.avoid(avoid);
                Variable u1 = fresh.fresh(x);
                Variable u2 = fresh.fresh(x);
                Variable u3 = x == y ? u2 : fresh.fresh(x);
                Substitution rest = x == y ? Substitution({{Term::var(u2), x}})
                                           : Substitution({{Term::var(u2), x}, {Term::var(u3), y}});
                std::vector<Variable> lctx = a.ctx.vars();
                lctx.push_back(u1);
                std::vector<Variable> rctx = b.ctx.vars();
                rctx.push_back(u1);
                FormulaInContext left{Context(lctx), apply(a.body.body(), Substitution({{Term::var(u1), x}}), fresh)};
                FormulaInContext right{Context(rctx), apply(b.body.body(), Substitution({{Term::var(u1), y}}), fresh)};
                left = apply_in_context(left, Substitution({{Term::var(u3), y}}), fresh);
                right = apply_in_context(right, Substitution({{Term::var(u2), x}}), fresh);
                apply_rest(as, rest, fresh);
                apply_rest(bs, rest, fresh);
                as.push_front(left);
                bs.push_front(right);
                st.record("Q", rest);
                binders.push_back({u1});
                break;
            }
            default:
                as.push_front({a.ctx, a.body.right()});
                as.push_front({a.ctx, a.body.left()});
                bs.push_front({b.ctx, b.body.right()});
                bs.push_front({b.ctx, b.body.left()});
                break;
        }
    }
    check_binders(st.theta, binders);
}

template <typename Fn>
UnifyOutcome run(const Substitution& theta0, const UnifyOptions& opts, Fn&& fn) {
    State st{theta0, {}, {}, opts.fuel};
    UnifyOutcome out;
    try {
        fn(st);
        out.unifier = st.theta;
    } catch (const Failure& f) {
        out.reason = f.reason;
    }
    out.trace = std::move(st.trace);
    return out;
}

}  // namespace

UnifyOutcome unify_terms(const std::vector<Term>& as, const std::vector<Term>& bs, const Substitution& theta0,
                         const UnifyOptions& opts) {
    return run(theta0, opts, [&](State& st) { bare_terms({as.begin(), as.end()}, {bs.begin(), bs.end()}, st); });
}

UnifyOutcome unify_formulae(const std::vector<Formula>& as, const std::vector<Formula>& bs,
                            const Substitution& theta0, const UnifyOptions& opts) {
    return run(theta0, opts, [&](State& st) { bare_formulae({as.begin(), as.end()}, {bs.begin(), bs.end()}, st); });
}

UnifyOutcome unify_terms_in_context(const std::vector<TermInContext>& as, const std::vector<TermInContext>& bs,
                                    const Substitution& theta0, const UnifyOptions& opts) {
    return run(theta0, opts, [&](State& st) { context_terms({as.begin(), as.end()}, {bs.begin(), bs.end()}, st); });
}

UnifyOutcome unify_formulae_in_context(const std::vector<FormulaInContext>& as,
                                       const std::vector<FormulaInContext>& bs, const Substitution& theta0,
                                       const UnifyOptions& opts) {
    return run(theta0, opts,
               [&](State& st) { context_formulae({as.begin(), as.end()}, {bs.begin(), bs.end()}, st); });
}

}  // namespace clogic
