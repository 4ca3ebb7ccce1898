#include "clogic/syntax.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace clogic {

std::string to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ErrorKind::UnknownSort: return "UnknownSort";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::SortMismatch: return "SortMismatch";
        case ErrorKind::DuplicateSymbol: return "DuplicateSymbol";
        case ErrorKind::DuplicateVariable: return "DuplicateVariable";
        case ErrorKind::UnsuitableContext: return "UnsuitableContext";
        case ErrorKind::BoundFreeClash: return "BoundFreeClash";
        case ErrorKind::NotHorn: return "NotHorn";
        case ErrorKind::NotNormalForm: return "NotNormalForm";
        case ErrorKind::NotPropositional: return "NotPropositional";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NoPositiveLiteral: return "NoPositiveLiteral";
        case ErrorKind::UnknownCorpusEntry: return "UnknownCorpusEntry";
        case ErrorKind::ModelError: return "ModelError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SizeLimit: return "SizeLimit";
    }
    return "Unknown";
}

LogicError::LogicError(ErrorKind kind, const std::string& message)
    : std::runtime_error(to_string(kind) + ": " + message), kind_(kind) {}

// ---------------------------------------------------------------- signature

void Signature::require_sort(const std::string& name, const std::string& where) const {
    if (!has_sort(name)) throw LogicError(ErrorKind::UnknownSort, "sort '" + name + "' in " + where);
}

void Signature::add_sort(const std::string& name) {
    if (name.empty()) throw LogicError(ErrorKind::ParseError, "empty sort name");
    if (has_sort(name)) throw LogicError(ErrorKind::DuplicateSymbol, "sort '" + name + "'");
    sorts_.push_back(name);
}

void Signature::add_function(const std::string& name, std::vector<std::string> args, const std::string& result) {
    if (function_index_.count(name)) throw LogicError(ErrorKind::DuplicateSymbol, "function '" + name + "'");
    for (const auto& a : args) require_sort(a, "function '" + name + "'");
    require_sort(result, "function '" + name + "'");
    function_index_[name] = functions_.size();
    functions_.push_back({name, std::move(args), result});
}

void Signature::add_relation(const std::string& name, std::vector<std::string> args) {
    if (relation_index_.count(name)) throw LogicError(ErrorKind::DuplicateSymbol, "relation '" + name + "'");
    for (const auto& a : args) require_sort(a, "relation '" + name + "'");
    relation_index_[name] = relations_.size();
    relations_.push_back({name, std::move(args)});
}

bool Signature::has_sort(const std::string& name) const {
    return std::find(sorts_.begin(), sorts_.end(), name) != sorts_.end();
}

const FunctionDecl* Signature::find_function(const std::string& name) const {
    auto it = function_index_.find(name);
    return it == function_index_.end() ? nullptr : &functions_[it->second];
}

const RelationDecl* Signature::find_relation(const std::string& name) const {
    auto it = relation_index_.find(name);
    return it == relation_index_.end() ? nullptr : &relations_[it->second];
}

bool Signature::operator==(const Signature& other) const {
    if (sorts_ != other.sorts_ || functions_.size() != other.functions_.size() ||
        relations_.size() != other.relations_.size())
        return false;
    for (std::size_t i = 0; i < functions_.size(); ++i) {
        const auto& a = functions_[i];
        const auto& b = other.functions_[i];
        if (a.name != b.name || a.args != b.args || a.result != b.result) return false;
    }
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        if (relations_[i].name != other.relations_[i].name || relations_[i].args != other.relations_[i].args)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- terms

struct Term::Node {
    Kind kind;
    Variable var;
    std::string fn;
    std::vector<Term> args;
    std::string sort;
};

Term Term::var(Variable v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->sort = v.sort;
    n->var = std::move(v);
    return Term(std::move(n));
}

Term Term::var(const std::string& name, const std::string& sort) { return var(Variable{name, sort}); }

Term Term::app(const std::string& fn, std::vector<Term> args, const std::string& result_sort) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::App;
    n->fn = fn;
    n->args = std::move(args);
    n->sort = result_sort;
    return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

const Variable& Term::variable() const {
    if (node_->kind != Kind::Var) throw std::logic_error("term is not a variable");
    return node_->var;
}

const std::string& Term::function() const {
    if (node_->kind != Kind::App) throw std::logic_error("term is not an application");
    return node_->fn;
}

const std::vector<Term>& Term::args() const { return node_->args; }
const std::string& Term::sort() const { return node_->sort; }

bool Term::operator==(const Term& other) const {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind || node_->sort != other.node_->sort) return false;
    if (node_->kind == Kind::Var) return node_->var == other.node_->var;
    return node_->fn == other.node_->fn && node_->args == other.node_->args;
}

bool Term::operator<(const Term& other) const { return to_string(*this) < to_string(other); }

Term make_app(const Signature& sig, const std::string& fn, std::vector<Term> args) {
    const FunctionDecl* decl = sig.find_function(fn);
    if (!decl) throw LogicError(ErrorKind::UnknownSymbol, "function '" + fn + "'");
    if (decl->args.size() != args.size())
        throw LogicError(ErrorKind::ArityMismatch, "'" + fn + "' expects " + std::to_string(decl->args.size()) +
                                                       " arguments, got " + std::to_string(args.size()));
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].sort() != decl->args[i])
            throw LogicError(ErrorKind::SortMismatch, "argument " + std::to_string(i + 1) + " of '" + fn +
                                                          "' is " + to_string(args[i]) + " : " + args[i].sort() +
                                                          ", expected " + decl->args[i]);
    }
    return Term::app(fn, std::move(args), decl->result);
}

// ---------------------------------------------------------------- formulae

struct Formula::Node {
    Kind kind;
    std::string rel;
    std::vector<Term> args;
    std::vector<Formula> subs;
    Variable bound;
};

Formula Formula::rel(const std::string& name, std::vector<Term> args) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Rel;
    n->rel = name;
    n->args = std::move(args);
    return Formula(std::move(n));
}

Formula Formula::eq(Term lhs, Term rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Eq;
    n->args = {std::move(lhs), std::move(rhs)};
    return Formula(std::move(n));
}

Formula Formula::top() {
    static const Formula t = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Top;
        return Formula(std::move(n));
    }();
    return t;
}

Formula Formula::bot() {
    static const Formula b = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Bot;
        return Formula(std::move(n));
    }();
    return b;
}

Formula Formula::binary(Kind kind, Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->subs = {std::move(a), std::move(b)};
    return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::implies(Formula a, Formula b) { return binary(Kind::Implies, std::move(a), std::move(b)); }

Formula Formula::negation(Formula a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->subs = {std::move(a)};
    return Formula(std::move(n));
}

Formula Formula::quantifier(Kind kind, Variable v, Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->bound = std::move(v);
    n->subs = {std::move(body)};
    return Formula(std::move(n));
}

Formula Formula::exists(Variable v, Formula body) { return quantifier(Kind::Exists, std::move(v), std::move(body)); }
Formula Formula::forall(Variable v, Formula body) { return quantifier(Kind::Forall, std::move(v), std::move(body)); }

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
    auto k = node_->kind;
    return k == Kind::And || k == Kind::Or || k == Kind::Implies;
}

bool Formula::is_quantifier() const { return node_->kind == Kind::Exists || node_->kind == Kind::Forall; }

const std::string& Formula::relation() const { return node_->rel; }
const std::vector<Term>& Formula::args() const { return node_->args; }

const Formula& Formula::left() const {
    if (!is_binary()) throw std::logic_error("formula is not binary");
    return node_->subs[0];
}

const Formula& Formula::right() const {
    if (!is_binary()) throw std::logic_error("formula is not binary");
    return node_->subs[1];
}

const Formula& Formula::body() const {
    if (node_->kind != Kind::Not && !is_quantifier()) throw std::logic_error("formula has no body");
    return node_->subs[0];
}

const Variable& Formula::bound() const {
    if (!is_quantifier()) throw std::logic_error("formula is not quantified");
    return node_->bound;
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    const Node& a = *node_;
    const Node& b = *other.node_;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Kind::Rel: return a.rel == b.rel && a.args == b.args;
        case Kind::Eq: return a.args == b.args;
        case Kind::Top:
        case Kind::Bot: return true;
        case Kind::Exists:
        case Kind::Forall: return a.bound == b.bound && a.subs == b.subs;
        default: return a.subs == b.subs;
    }
}

Formula make_rel(const Signature& sig, const std::string& name, std::vector<Term> args) {
    const RelationDecl* decl = sig.find_relation(name);
    if (!decl) throw LogicError(ErrorKind::UnknownSymbol, "relation '" + name + "'");
    if (decl->args.size() != args.size())
        throw LogicError(ErrorKind::ArityMismatch, "'" + name + "' expects " + std::to_string(decl->args.size()) +
                                                       " arguments, got " + std::to_string(args.size()));
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].sort() != decl->args[i])
            throw LogicError(ErrorKind::SortMismatch, "argument " + std::to_string(i + 1) + " of '" + name +
                                                          "' is " + to_string(args[i]) + " : " + args[i].sort() +
                                                          ", expected " + decl->args[i]);
    }
    return Formula::rel(name, std::move(args));
}

Formula make_eq(Term lhs, Term rhs) {
    if (lhs.sort() != rhs.sort())
        throw LogicError(ErrorKind::SortMismatch, "equation " + to_string(lhs) + " = " + to_string(rhs) +
                                                      " relates sorts " + lhs.sort() + " and " + rhs.sort());
    return Formula::eq(std::move(lhs), std::move(rhs));
}

Formula conjunction(const std::vector<Formula>& parts) {
    if (parts.empty()) return Formula::top();
    Formula acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
    return acc;
}

std::vector<Formula> conjuncts(const Formula& f) {
    std::vector<Formula> out;
    std::function<void(const Formula&)> walk = [&](const Formula& g) {
        if (g.kind() == Formula::Kind::And) {
            walk(g.left());
            walk(g.right());
        } else {
            out.push_back(g);
        }
    };
    walk(f);
    return out;
}

// ---------------------------------------------------------------- contexts

Context::Context(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw LogicError(ErrorKind::DuplicateVariable, "variable " + to_string(vars_[i]) + " repeated in context");
}

Context::Context(std::initializer_list<Variable> vars) : Context(std::vector<Variable>(vars)) {}

bool Context::contains(const Variable& v) const { return std::find(vars_.begin(), vars_.end(), v) != vars_.end(); }

std::optional<std::size_t> Context::index_of(const Variable& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::vector<std::string> Context::type() const {
    std::vector<std::string> out;
    for (const auto& v : vars_) out.push_back(v.sort);
    return out;
}

// ---------------------------------------------------------------- variables

namespace {

void term_vars_ordered(const Term& t, std::vector<Variable>& out) {
    if (t.is_var()) {
        if (std::find(out.begin(), out.end(), t.variable()) == out.end()) out.push_back(t.variable());
        return;
    }
    for (const auto& a : t.args()) term_vars_ordered(a, out);
}

void formula_vars_ordered(const Formula& f, std::vector<Variable> bound, std::vector<Variable>& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Rel:
        case K::Eq: {
            std::vector<Variable> tmp;
            for (const auto& a : f.args()) term_vars_ordered(a, tmp);
            for (const auto& v : tmp) {
                if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            }
            return;
        }
        case K::Top:
        case K::Bot: return;
        case K::Not: formula_vars_ordered(f.body(), bound, out); return;
        case K::Exists:
        case K::Forall:
            bound.push_back(f.bound());
            formula_vars_ordered(f.body(), bound, out);
            return;
        default:
            formula_vars_ordered(f.left(), bound, out);
            formula_vars_ordered(f.right(), bound, out);
            return;
    }
}

void collect_all(const Formula& f, std::set<Variable>& out, bool include_free, bool include_bound) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Rel:
        case K::Eq:
            if (include_free)
                for (const auto& a : f.args()) {
                    auto vs = free_variables(a);
                    out.insert(vs.begin(), vs.end());
                }
            return;
        case K::Top:
        case K::Bot: return;
        case K::Not: collect_all(f.body(), out, include_free, include_bound); return;
        case K::Exists:
        case K::Forall:
            if (include_bound) out.insert(f.bound());
            collect_all(f.body(), out, include_free, include_bound);
            return;
        default:
            collect_all(f.left(), out, include_free, include_bound);
            collect_all(f.right(), out, include_free, include_bound);
            return;
    }
}

}  // namespace

std::set<Variable> free_variables(const Term& t) {
    std::vector<Variable> tmp;
    term_vars_ordered(t, tmp);
    return {tmp.begin(), tmp.end()};
}

std::set<Variable> free_variables(const Formula& f) {
    std::vector<Variable> tmp;
    formula_vars_ordered(f, {}, tmp);
    return {tmp.begin(), tmp.end()};
}

std::set<Variable> all_variables(const Formula& f) {
    std::set<Variable> out;
    collect_all(f, out, true, true);
    return out;
}

std::set<Variable> bound_variables(const Formula& f) {
    std::set<Variable> out;
    collect_all(f, out, false, true);
    return out;
}

bool occurs_in(const Variable& v, const Term& t) {
    if (t.is_var()) return t.variable() == v;
    for (const auto& a : t.args())
        if (occurs_in(v, a)) return true;
    return false;
}

Context canonical_context(const Term& t) {
    std::vector<Variable> tmp;
    term_vars_ordered(t, tmp);
    return Context(std::move(tmp));
}

Context canonical_context(const std::vector<Term>& ts) {
    std::vector<Variable> tmp;
    for (const auto& t : ts) term_vars_ordered(t, tmp);
    return Context(std::move(tmp));
}

Context canonical_context(const Formula& f) {
    std::vector<Variable> tmp;
    formula_vars_ordered(f, {}, tmp);
    return Context(std::move(tmp));
}

Context concat_contexts(const Context& a, const Context& b) {
    std::vector<Variable> out = a.vars();
    for (const auto& v : b)
        if (!a.contains(v)) out.push_back(v);
    return Context(std::move(out));
}

bool suitable(const Context& ctx, const Term& t) {
    for (const auto& v : free_variables(t))
        if (!ctx.contains(v)) return false;
    return true;
}

bool suitable(const Context& ctx, const Formula& f) {
    for (const auto& v : free_variables(f))
        if (!ctx.contains(v)) return false;
    return true;
}

// ---------------------------------------------------------------- sequents

Sequent::Sequent(Formula lhs, Context ctx, Formula rhs)
    : lhs_(std::move(lhs)), ctx_(std::move(ctx)), rhs_(std::move(rhs)) {
    for (const Formula* side : {&lhs_, &rhs_}) {
        for (const auto& v : free_variables(*side))
            if (!ctx_.contains(v))
                throw LogicError(ErrorKind::UnsuitableContext,
                                 "context " + to_string(ctx_) + " does not contain free variable " + to_string(v));
    }
    std::set<Variable> free = free_variables(lhs_);
    auto rf = free_variables(rhs_);
    free.insert(rf.begin(), rf.end());
    for (const Formula* side : {&lhs_, &rhs_}) {
        for (const auto& v : bound_variables(*side)) {
            if (free.count(v) || ctx_.contains(v))
                throw LogicError(ErrorKind::BoundFreeClash,
                                 "variable " + to_string(v) + " occurs both bound and free in the sequent");
        }
    }
}

bool Sequent::operator==(const Sequent& other) const {
    return ctx_ == other.ctx_ && lhs_ == other.lhs_ && rhs_ == other.rhs_;
}

// ---------------------------------------------------------------- alpha

namespace {

bool alpha_terms(const Term& a, const Term& b, const std::vector<std::pair<Variable, Variable>>& env) {
    if (a.is_var() != b.is_var()) return false;
    if (a.is_var()) {
        const Variable& x = a.variable();
        const Variable& y = b.variable();
        for (auto it = env.rbegin(); it != env.rend(); ++it) {
            bool lx = it->first == x;
            bool ry = it->second == y;
            if (lx || ry) return lx && ry;
        }
        return x == y;
    }
    if (a.function() != b.function() || a.args().size() != b.args().size() || a.sort() != b.sort()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_terms(a.args()[i], b.args()[i], env)) return false;
    return true;
}

bool alpha_rec(const Formula& a, const Formula& b, std::vector<std::pair<Variable, Variable>>& env) {
    using K = Formula::Kind;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case K::Rel:
            if (a.relation() != b.relation()) return false;
            [[fallthrough]];
        case K::Eq:
            if (a.args().size() != b.args().size()) return false;
            for (std::size_t i = 0; i < a.args().size(); ++i)
                if (!alpha_terms(a.args()[i], b.args()[i], env)) return false;
            return true;
        case K::Top:
        case K::Bot: return true;
        case K::Not: return alpha_rec(a.body(), b.body(), env);
        case K::Exists:
        case K::Forall: {
            if (a.bound().sort != b.bound().sort) return false;
            env.emplace_back(a.bound(), b.bound());
            bool ok = alpha_rec(a.body(), b.body(), env);
            env.pop_back();
            return ok;
        }
        default: return alpha_rec(a.left(), b.left(), env) && alpha_rec(a.right(), b.right(), env);
    }
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
    std::vector<std::pair<Variable, Variable>> env;
    return alpha_rec(a, b, env);
}

// ---------------------------------------------------------------- fragments

std::string to_string(Fragment f) {
    switch (f) {
        case Fragment::Atomic: return "atomic";
        case Fragment::Horn: return "horn";
        case Fragment::Regular: return "regular";
        case Fragment::Coherent: return "coherent";
        case Fragment::Intuitionistic: return "intuitionistic";
        case Fragment::Classical: return "classical";
    }
    return "?";
}

std::optional<Fragment> fragment_from_string(const std::string& s) {
    for (Fragment f : {Fragment::Atomic, Fragment::Horn, Fragment::Regular, Fragment::Coherent,
                       Fragment::Intuitionistic, Fragment::Classical})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

Fragment classify(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Rel:
        case K::Eq: return Fragment::Atomic;
        case K::Top: return Fragment::Horn;
        case K::Bot: return Fragment::Coherent;
        case K::And: return std::max({Fragment::Horn, classify(f.left()), classify(f.right())});
        case K::Or: return std::max({Fragment::Coherent, classify(f.left()), classify(f.right())});
        case K::Implies: return std::max({Fragment::Intuitionistic, classify(f.left()), classify(f.right())});
        case K::Not: return std::max(Fragment::Intuitionistic, classify(f.body()));
        case K::Exists: return std::max(Fragment::Regular, classify(f.body()));
        case K::Forall: return std::max(Fragment::Intuitionistic, classify(f.body()));
    }
    return Fragment::Classical;
}

Fragment classify(const Sequent& s) { return std::max(classify(s.lhs()), classify(s.rhs())); }

Fragment classify(const Theory& t) {
    Fragment f = Fragment::Atomic;
    for (const auto& a : t.axioms) f = std::max(f, classify(a));
    return f;
}

// ---------------------------------------------------------------- checking

std::string sort_of(const Signature& sig, const Term& t) {
    if (t.is_var()) {
        if (!sig.has_sort(t.variable().sort))
            throw LogicError(ErrorKind::UnknownSort, "variable " + to_string(t.variable()));
        return t.variable().sort;
    }
    const FunctionDecl* decl = sig.find_function(t.function());
    if (!decl) throw LogicError(ErrorKind::UnknownSymbol, "function '" + t.function() + "' in " + to_string(t));
    if (decl->args.size() != t.args().size())
        throw LogicError(ErrorKind::ArityMismatch, "'" + t.function() + "' expects " +
                                                       std::to_string(decl->args.size()) + " arguments in " +
                                                       to_string(t));
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        std::string s = sort_of(sig, t.args()[i]);
        if (s != decl->args[i])
            throw LogicError(ErrorKind::SortMismatch, "subterm " + to_string(t.args()[i]) + " has sort " + s +
                                                          ", expected " + decl->args[i] + " in " + to_string(t));
    }
    if (t.sort() != decl->result)
        throw LogicError(ErrorKind::SortMismatch, "term " + to_string(t) + " carries sort " + t.sort() +
                                                      ", declared " + decl->result);
    return decl->result;
}

void check_formula(const Signature& sig, const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Rel: {
            const RelationDecl* decl = sig.find_relation(f.relation());
            if (!decl) throw LogicError(ErrorKind::UnknownSymbol, "relation '" + f.relation() + "'");
            if (decl->args.size() != f.args().size())
                throw LogicError(ErrorKind::ArityMismatch, "'" + f.relation() + "' expects " +
                                                               std::to_string(decl->args.size()) + " arguments");
            for (std::size_t i = 0; i < f.args().size(); ++i) {
                std::string s = sort_of(sig, f.args()[i]);
                if (s != decl->args[i])
                    throw LogicError(ErrorKind::SortMismatch, "argument " + to_string(f.args()[i]) + " of '" +
                                                                  f.relation() + "' has sort " + s + ", expected " +
                                                                  decl->args[i]);
            }
            return;
        }
        case K::Eq: {
            std::string a = sort_of(sig, f.args()[0]);
            std::string b = sort_of(sig, f.args()[1]);
            if (a != b)
                throw LogicError(ErrorKind::SortMismatch,
                                 "equation sides have sorts " + a + " and " + b + " in " + to_string(f));
            return;
        }
        case K::Top:
        case K::Bot: return;
        case K::Not: check_formula(sig, f.body()); return;
        case K::Exists:
        case K::Forall:
            if (!sig.has_sort(f.bound().sort))
                throw LogicError(ErrorKind::UnknownSort, "bound variable " + to_string(f.bound()));
            check_formula(sig, f.body());
            return;
        default:
            check_formula(sig, f.left());
            check_formula(sig, f.right());
    }
}

void check_sequent(const Signature& sig, const Sequent& s) {
    for (const auto& v : s.ctx())
        if (!sig.has_sort(v.sort)) throw LogicError(ErrorKind::UnknownSort, "context variable " + to_string(v));
    check_formula(sig, s.lhs());
    check_formula(sig, s.rhs());
}

void check_theory(const Theory& t) {
    for (const auto& a : t.axioms) check_sequent(t.signature, a);
}

// ---------------------------------------------------------------- printing

std::string to_string(const Variable& v) { return v.name + ":" + v.sort; }

std::string to_string(const Term& t) {
    if (t.is_var()) return t.variable().name;
    if (t.args().empty()) return t.function();
    std::string out = t.function() + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        out += to_string(t.args()[i]);
    }
    return out + ")";
}

namespace {

// Precedence levels: 4 atoms/negation, 3 conjunction, 2 disjunction, 1 implication, 0 quantifier body.
int level(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::And: return 3;
        case K::Or: return 2;
        case K::Implies: return 1;
        case K::Exists:
        case K::Forall: return 0;
        default: return 4;
    }
}

std::string print_formula(const Formula& f, const PrintOptions& o, bool final_position);

// Wraps a subformula in parentheses when its binding is weaker than required.
// A quantifier that is not at the end of the enclosing text is always wrapped,
// since its body extends as far to the right as possible.
std::string print_sub(const Formula& f, int required, bool final_position, const PrintOptions& o) {
    int l = level(f);
    bool wrap = l < required || (l == 0 && !final_position);
    if (wrap) return "(" + print_formula(f, o, true) + ")";
    return print_formula(f, o, final_position);
}

std::string print_formula(const Formula& f, const PrintOptions& o, bool fin) {
    using K = Formula::Kind;
    const bool u = o.unicode;
    switch (f.kind()) {
        case K::Rel: {
            if (f.args().empty()) return f.relation();
            std::string out = f.relation() + "(";
            for (std::size_t i = 0; i < f.args().size(); ++i) {
                if (i) out += ", ";
                out += to_string(f.args()[i]);
            }
            return out + ")";
        }
        case K::Eq: return to_string(f.args()[0]) + " = " + to_string(f.args()[1]);
        case K::Top: return u ? "⊤" : "top";
        case K::Bot: return u ? "⊥" : "bot";
        case K::Not: return std::string(u ? "¬" : "~") + print_sub(f.body(), 4, fin, o);
        case K::And:
            return print_sub(f.left(), 3, false, o) + (u ? " ∧ " : " & ") + print_sub(f.right(), 4, fin, o);
        case K::Or:
            return print_sub(f.left(), 2, false, o) + (u ? " ∨ " : " | ") + print_sub(f.right(), 3, fin, o);
        case K::Implies:
            return print_sub(f.left(), 2, false, o) + (u ? " ⇒ " : " => ") + print_sub(f.right(), 1, fin, o);
        case K::Exists:
        case K::Forall: {
            std::string q = f.kind() == K::Exists ? (u ? "∃" : "exists ") : (u ? "∀" : "forall ");
            return q + to_string(f.bound()) + ". " + print_sub(f.body(), 0, true, o);
        }
    }
    return "?";
}

}  // namespace

std::string to_string(const Formula& f, const PrintOptions& opts) { return print_formula(f, opts, true); }

std::string to_string(const Context& c, const PrintOptions&) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += to_string(c[i]);
    }
    return out + "]";
}

std::string to_string(const Sequent& s, const PrintOptions& opts) {
    return to_string(s.ctx(), opts) + " " + to_string(s.lhs(), opts) + (opts.unicode ? " ⊢ " : " |- ") +
           to_string(s.rhs(), opts);
}

std::string to_string(const TermInContext& t) {
    std::string out;
    for (std::size_t i = 0; i < t.ctx.size(); ++i) {
        if (i) out += ", ";
        out += t.ctx[i].name;
    }
    return out + " . " + to_string(t.body);
}

std::string to_string(const FormulaInContext& f, const PrintOptions& opts) {
    std::string out;
    for (std::size_t i = 0; i < f.ctx.size(); ++i) {
        if (i) out += ", ";
        out += f.ctx[i].name;
    }
    return out + " . " + to_string(f.body, opts);
}

}  // namespace clogic
