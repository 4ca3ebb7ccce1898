#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace clogic {

enum class ErrorKind {
    UnknownSymbol,
    UnknownSort,
    ArityMismatch,
    SortMismatch,
    DuplicateSymbol,
    DuplicateVariable,
    UnsuitableContext,
    BoundFreeClash,
    NotHorn,
    NotNormalForm,
    NotPropositional,
    ShapeMismatch,
    NoPositiveLiteral,
    UnknownCorpusEntry,
    ModelError,
    ParseError,
    SizeLimit,
};

std::string to_string(ErrorKind kind);

class LogicError : public std::runtime_error {
public:
    LogicError(ErrorKind kind, const std::string& message);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct Variable {
    std::string name;
    std::string sort;

    auto operator<=>(const Variable&) const = default;
    bool operator==(const Variable&) const = default;
};

struct FunctionDecl {
    std::string name;
    std::vector<std::string> args;
    std::string result;
};

struct RelationDecl {
    std::string name;
    std::vector<std::string> args;
};

class Signature {
public:
    void add_sort(const std::string& name);
    void add_function(const std::string& name, std::vector<std::string> args, const std::string& result);
    void add_relation(const std::string& name, std::vector<std::string> args);

    bool has_sort(const std::string& name) const;
    const FunctionDecl* find_function(const std::string& name) const;
    const RelationDecl* find_relation(const std::string& name) const;

    const std::vector<std::string>& sorts() const { return sorts_; }
    const std::vector<FunctionDecl>& functions() const { return functions_; }
    const std::vector<RelationDecl>& relations() const { return relations_; }

    bool operator==(const Signature& other) const;

private:
    void require_sort(const std::string& name, const std::string& where) const;

    std::vector<std::string> sorts_;
    std::vector<FunctionDecl> functions_;
    std::vector<RelationDecl> relations_;
    std::map<std::string, std::size_t> function_index_;
    std::map<std::string, std::size_t> relation_index_;
};

class Term {
public:
    enum class Kind { Var, App };

    static Term var(Variable v);
    static Term var(const std::string& name, const std::string& sort);
    // Builds an application whose result sort is supplied by the caller.
    static Term app(const std::string& fn, std::vector<Term> args, const std::string& result_sort);

    Kind kind() const;
    bool is_var() const { return kind() == Kind::Var; }
    const Variable& variable() const;
    const std::string& function() const;
    const std::vector<Term>& args() const;
    const std::string& sort() const;

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }
    bool operator<(const Term& other) const;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Checked construction of an application against a signature.
Term make_app(const Signature& sig, const std::string& fn, std::vector<Term> args);

class Formula {
public:
    enum class Kind { Rel, Eq, Top, Bot, And, Or, Implies, Not, Exists, Forall };

    static Formula rel(const std::string& name, std::vector<Term> args);
    static Formula eq(Term lhs, Term rhs);
    static Formula top();
    static Formula bot();
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula negation(Formula a);
    static Formula exists(Variable v, Formula body);
    static Formula forall(Variable v, Formula body);
    static Formula binary(Kind kind, Formula a, Formula b);
    static Formula quantifier(Kind kind, Variable v, Formula body);

    Kind kind() const;
    bool is_atomic() const { return kind() == Kind::Rel || kind() == Kind::Eq; }
    bool is_binary() const;
    bool is_quantifier() const;

    const std::string& relation() const;
    // Rel arguments, or the two sides of an equation.
    const std::vector<Term>& args() const;
    const Formula& left() const;
    const Formula& right() const;
    // Body of Not or of a quantifier.
    const Formula& body() const;
    const Variable& bound() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Formula make_rel(const Signature& sig, const std::string& name, std::vector<Term> args);
Formula make_eq(Term lhs, Term rhs);

// Left-associated conjunction; the empty list gives top.
Formula conjunction(const std::vector<Formula>& parts);
// Leaves of a conjunction tree, left to right.
std::vector<Formula> conjuncts(const Formula& f);

class Context {
public:
    Context() = default;
    Context(std::vector<Variable> vars);
    Context(std::initializer_list<Variable> vars);

    const std::vector<Variable>& vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }
    const Variable& operator[](std::size_t i) const { return vars_[i]; }
    auto begin() const { return vars_.begin(); }
    auto end() const { return vars_.end(); }
    bool contains(const Variable& v) const;
    std::optional<std::size_t> index_of(const Variable& v) const;
    std::vector<std::string> type() const;

    bool operator==(const Context& other) const { return vars_ == other.vars_; }
    bool operator!=(const Context& other) const { return vars_ != other.vars_; }

private:
    std::vector<Variable> vars_;
};

struct TermInContext {
    Context ctx;
    Term body;
    bool operator==(const TermInContext&) const = default;
};

struct FormulaInContext {
    Context ctx;
    Formula body;
    bool operator==(const FormulaInContext&) const = default;
};

class Sequent {
public:
    // Rejects a context that is not suitable for both sides, and any variable
    // occurring both bound and free (or bound and in the context).
    Sequent(Formula lhs, Context ctx, Formula rhs);

    const Formula& lhs() const { return lhs_; }
    const Context& ctx() const { return ctx_; }
    const Formula& rhs() const { return rhs_; }

    bool operator==(const Sequent& other) const;
    bool operator!=(const Sequent& other) const { return !(*this == other); }

private:
    Formula lhs_;
    Context ctx_;
    Formula rhs_;
};

struct Theory {
    Signature signature;
    std::vector<Sequent> axioms;
};

enum class Fragment { Atomic, Horn, Regular, Coherent, Intuitionistic, Classical };

std::string to_string(Fragment f);
std::optional<Fragment> fragment_from_string(const std::string& s);

std::set<Variable> free_variables(const Term& t);
std::set<Variable> free_variables(const Formula& f);
// Every variable occurring in the formula, free or bound.
std::set<Variable> all_variables(const Formula& f);
std::set<Variable> bound_variables(const Formula& f);
bool occurs_in(const Variable& v, const Term& t);

Context canonical_context(const Term& t);
Context canonical_context(const std::vector<Term>& ts);
Context canonical_context(const Formula& f);
Context concat_contexts(const Context& a, const Context& b);

bool suitable(const Context& ctx, const Term& t);
bool suitable(const Context& ctx, const Formula& f);

bool alpha_equivalent(const Formula& a, const Formula& b);

Fragment classify(const Formula& f);
Fragment classify(const Sequent& s);
Fragment classify(const Theory& t);

std::string sort_of(const Signature& sig, const Term& t);
void check_formula(const Signature& sig, const Formula& f);
void check_sequent(const Signature& sig, const Sequent& s);
void check_theory(const Theory& t);

struct PrintOptions {
    bool unicode = false;
};

std::string to_string(const Variable& v);
std::string to_string(const Term& t);
std::string to_string(const Formula& f, const PrintOptions& opts = {});
std::string to_string(const Context& c, const PrintOptions& opts = {});
std::string to_string(const Sequent& s, const PrintOptions& opts = {});
std::string to_string(const TermInContext& t);
std::string to_string(const FormulaInContext& f, const PrintOptions& opts = {});

}  // namespace clogic
