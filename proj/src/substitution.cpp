#include "clogic/substitution.hpp"

#include <algorithm>
#include <cctype>

namespace clogic {

// ---------------------------------------------------------------- fresh names

FreshVariableSource::FreshVariableSource(const std::set<Variable>& avoid_set) { avoid(avoid_set); }

void FreshVariableSource::avoid(const Variable& v) { names_.insert(v.name); }

void FreshVariableSource::avoid(const std::set<Variable>& vs) {
    for (const auto& v : vs) names_.insert(v.name);
}

void FreshVariableSource::avoid(const Context& ctx) {
    for (const auto& v : ctx) names_.insert(v.name);
}

void FreshVariableSource::avoid(const Formula& f) { avoid(all_variables(f)); }

void FreshVariableSource::avoid(const Term& t) { avoid(free_variables(t)); }

namespace {

std::string strip_suffix(const std::string& name) {
    auto pos = name.rfind('_');
    if (pos == std::string::npos || pos == 0 || pos + 1 == name.size()) return name;
    for (std::size_t i = pos + 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return name;
    return name.substr(0, pos);
}

}  // namespace

Variable FreshVariableSource::fresh(const std::string& base_name, const std::string& sort) {
    std::string base = strip_suffix(base_name);
    for (std::size_t n = 1;; ++n) {
        std::string candidate = base + "_" + std::to_string(n);
        if (!names_.count(candidate)) {
            names_.insert(candidate);
            return Variable{candidate, sort};
        }
    }
}

Variable FreshVariableSource::fresh(const Variable& like) { return fresh(like.name, like.sort); }

// ---------------------------------------------------------------- substitution

Substitution::Substitution(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const auto& [s, y] = pairs_[i];
        if (s.sort() != y.sort)
            throw LogicError(ErrorKind::SortMismatch, "substitution replaces " + to_string(y) + " with " +
                                                          to_string(s) + " of sort " + s.sort());
        for (std::size_t j = 0; j < i; ++j)
            if (pairs_[j].second == y)
                throw LogicError(ErrorKind::DuplicateVariable, "substitution targets " + to_string(y) + " twice");
    }
}

Substitution::Substitution(const std::vector<Term>& replacements, const Context& targets)
    : Substitution([&] {
          if (replacements.size() != targets.size())
              throw LogicError(ErrorKind::ArityMismatch, "substitution has " + std::to_string(replacements.size()) +
                                                             " terms for " + std::to_string(targets.size()) +
                                                             " variables");
          std::vector<Pair> ps;
          for (std::size_t i = 0; i < targets.size(); ++i) ps.emplace_back(replacements[i], targets[i]);
          return ps;
      }()) {}

Substitution Substitution::identity(const Context& ctx) {
    std::vector<Pair> ps;
    for (const auto& v : ctx) ps.emplace_back(Term::var(v), v);
    return Substitution(std::move(ps));
}

std::optional<Term> Substitution::lookup(const Variable& v) const {
    for (const auto& [s, y] : pairs_)
        if (y == v) return s;
    return std::nullopt;
}

bool Substitution::targets_variable(const Variable& v) const {
    for (const auto& p : pairs_)
        if (p.second == v) return true;
    return false;
}

Context Substitution::targets() const {
    std::vector<Variable> out;
    for (const auto& p : pairs_) out.push_back(p.second);
    return Context(std::move(out));
}

std::vector<Term> Substitution::replacements() const {
    std::vector<Term> out;
    for (const auto& p : pairs_) out.push_back(p.first);
    return out;
}

bool Substitution::is_inert() const {
    for (const auto& [s, y] : pairs_)
        if (!(s.is_var() && s.variable() == y)) return false;
    return true;
}

Substitution extend(const Substitution& theta, const Context& z) {
    std::vector<Substitution::Pair> ps = theta.pairs();
    for (const auto& v : z)
        if (!theta.targets_variable(v)) ps.emplace_back(Term::var(v), v);
    return Substitution(std::move(ps));
}

Term apply(const Term& t, const Substitution& theta) {
    if (theta.empty()) return t;
    if (t.is_var()) {
        auto r = theta.lookup(t.variable());
        return r ? *r : t;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(apply(a, theta));
    return Term::app(t.function(), std::move(args), t.sort());
}

std::vector<Term> apply(const std::vector<Term>& ts, const Substitution& theta) {
    std::vector<Term> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(apply(t, theta));
    return out;
}

namespace {

// Variables whose capture must be avoided when pushing theta under a binder.
std::set<Variable> clash_set(const Substitution& theta) {
    std::set<Variable> out;
    for (const auto& [s, y] : theta.pairs()) {
        out.insert(y);
        auto fv = free_variables(s);
        out.insert(fv.begin(), fv.end());
    }
    return out;
}

Formula apply_rec(const Formula& f, const Substitution& theta, const std::set<Variable>& clash,
                  FreshVariableSource& fresh) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Rel: return Formula::rel(f.relation(), apply(f.args(), theta));
        case K::Eq: return Formula::eq(apply(f.args()[0], theta), apply(f.args()[1], theta));
        case K::Top:
        case K::Bot: return f;
        case K::Not: return Formula::negation(apply_rec(f.body(), theta, clash, fresh));
        case K::Exists:
        case K::Forall: {
            const Variable& u = f.bound();
            if (!clash.count(u)) return Formula::quantifier(f.kind(), u, apply_rec(f.body(), theta, clash, fresh));
            fresh.avoid(clash);
            fresh.avoid(f.body());
            fresh.avoid(u);
            Variable u2 = fresh.fresh(u);
            Formula renamed = apply_rec(f.body(), Substitution({{Term::var(u2), u}}), {u, u2}, fresh);
            return Formula::quantifier(f.kind(), u2, apply_rec(renamed, theta, clash, fresh));
        }
        default:
            return Formula::binary(f.kind(), apply_rec(f.left(), theta, clash, fresh),
                                   apply_rec(f.right(), theta, clash, fresh));
    }
}

}  // namespace

Formula apply(const Formula& f, const Substitution& theta, FreshVariableSource& fresh) {
    if (theta.empty()) return f;
    fresh.avoid(f);
    return apply_rec(f, theta, clash_set(theta), fresh);
}

Formula apply(const Formula& f, const Substitution& theta) {
    FreshVariableSource fresh;
    return apply(f, theta, fresh);
}

Context result_context(const Substitution& theta, const Context& z) {
    return canonical_context(extend(theta, z).replacements());
}

TermInContext apply_in_context(const TermInContext& zt, const Substitution& theta) {
    Substitution ext = extend(theta, zt.ctx);
    return {canonical_context(ext.replacements()), apply(zt.body, ext)};
}

FormulaInContext apply_in_context(const FormulaInContext& zf, const Substitution& theta, FreshVariableSource& fresh) {
    Substitution ext = extend(theta, zf.ctx);
    return {canonical_context(ext.replacements()), apply(zf.body, ext, fresh)};
}

FormulaInContext apply_in_context(const FormulaInContext& zf, const Substitution& theta) {
    FreshVariableSource fresh;
    return apply_in_context(zf, theta, fresh);
}

Substitution compose(const Substitution& theta, const Substitution& theta2) {
    std::vector<Substitution::Pair> ps;
    for (const auto& [s, y] : theta.pairs()) ps.emplace_back(apply(s, theta2), y);
    for (const auto& [s, y] : theta2.pairs())
        if (!theta.targets_variable(y)) ps.emplace_back(s, y);
    std::stable_partition(ps.begin(), ps.end(),
                          [](const Substitution::Pair& p) { return p.first.is_var() && p.first.variable() == p.second; });
    return Substitution(std::move(ps));
}

Substitution without_inert(const Substitution& theta) {
    std::vector<Substitution::Pair> ps;
    for (const auto& p : theta.pairs())
        if (!(p.first.is_var() && p.first.variable() == p.second)) ps.push_back(p);
    return Substitution(std::move(ps));
}

bool same_map(const Substitution& a, const Substitution& b) {
    auto na = without_inert(a);
    auto nb = without_inert(b);
    if (na.size() != nb.size()) return false;
    for (const auto& [s, y] : na.pairs()) {
        auto r = nb.lookup(y);
        if (!r || !(*r == s)) return false;
    }
    return true;
}

Formula rename_apart(const Formula& f, const std::set<Variable>& avoid, FreshVariableSource& fresh) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Rel:
        case K::Eq:
        case K::Top:
        case K::Bot: return f;
        case K::Not: return Formula::negation(rename_apart(f.body(), avoid, fresh));
        case K::Exists:
        case K::Forall: {
            Formula body = rename_apart(f.body(), avoid, fresh);
            const Variable& u = f.bound();
            if (!avoid.count(u)) return Formula::quantifier(f.kind(), u, body);
            fresh.avoid(avoid);
            fresh.avoid(body);
            Variable u2 = fresh.fresh(u);
            return Formula::quantifier(f.kind(), u2, apply(body, Substitution({{Term::var(u2), u}}), fresh));
        }
        default:
            return Formula::binary(f.kind(), rename_apart(f.left(), avoid, fresh),
                                   rename_apart(f.right(), avoid, fresh));
    }
}

std::string to_string(const Substitution& theta, bool show_inert) {
    const Substitution shown = show_inert ? theta : without_inert(theta);
    std::string lhs, rhs;
    for (std::size_t i = 0; i < shown.size(); ++i) {
        if (i) {
            lhs += ", ";
            rhs += ", ";
        }
        lhs += to_string(shown.pairs()[i].first);
        rhs += shown.pairs()[i].second.name;
    }
    if (shown.empty()) return "[]";
    return "[" + lhs + " / " + rhs + "]";
}

}  // namespace clogic
