#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "clogic/frontend.hpp"

namespace clogic {

namespace {

struct Token {
    enum class Type { Ident, Number, Symbol, End };
    Type type;
    std::string text;
    int line;
    int col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(const std::string& text, const std::string& source) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    static const char* two[] = {"=>", "|-", "->"};
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        int l = line, cl = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() &&
                   (ident_char(text[j]) || (text[j] == '-' && j + 1 < text.size() && ident_char(text[j + 1]) &&
                                            j > i)))
                ++j;
            out.push_back({Token::Type::Ident, text.substr(i, j - i), l, cl});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Type::Number, text.substr(i, j - i), l, cl});
            advance(j - i);
            continue;
        }
        bool matched = false;
        for (const char* t : two)
            if (text.compare(i, 2, t) == 0) {
                out.push_back({Token::Type::Symbol, t, l, cl});
                advance(2);
                matched = true;
                break;
            }
        if (matched) continue;
        if (std::string("()[]{},;:./=&|~").find(c) != std::string::npos) {
            out.push_back({Token::Type::Symbol, std::string(1, c), l, cl});
            advance(1);
            continue;
        }
        throw LogicError(ErrorKind::ParseError, source + ":" + std::to_string(l) + ":" + std::to_string(cl) +
                                                    ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({Token::Type::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, std::string source)
        : toks_(tokenize(text, source)), source_(std::move(source)) {}

    // ---------------------------------------------------------------- token helpers

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at_end() const { return peek().type == Token::Type::End; }
    const Token& next() {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    bool is_sym(const std::string& s, std::size_t ahead = 0) const {
        return peek(ahead).type == Token::Type::Symbol && peek(ahead).text == s;
    }
    bool is_word(const std::string& s, std::size_t ahead = 0) const {
        return peek(ahead).type == Token::Type::Ident && peek(ahead).text == s;
    }
    bool accept(const std::string& s) {
        if (is_sym(s)) {
            next();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const Token& t, const std::string& msg, ErrorKind kind = ErrorKind::ParseError) const {
        throw LogicError(kind, where(t) + msg);
    }
    std::string where(const Token& t) const {
        return source_ + ":" + std::to_string(t.line) + ":" + std::to_string(t.col) + ": ";
    }
    [[noreturn]] void rethrow(const Token& t, const LogicError& e) const { throw LogicError(e.kind(), where(t) + e.what()); }

    void expect(const std::string& s) {
        if (!accept(s)) fail(peek(), "expected '" + s + "'" + found());
    }
    std::string found() const { return at_end() ? ", found end of input" : ", found '" + peek().text + "'"; }
    std::string ident(const std::string& what = "identifier") {
        if (peek().type != Token::Type::Ident) fail(peek(), "expected " + what + found());
        return next().text;
    }
    int number() {
        if (peek().type != Token::Type::Number) fail(peek(), "expected a number" + found());
        return std::stoi(next().text);
    }
    // Element labels may be identifiers or numerals.
    std::string label() {
        if (peek().type != Token::Type::Ident && peek().type != Token::Type::Number)
            fail(peek(), "expected an element label" + found());
        return next().text;
    }

    void header() {
        if (!is_word("version")) fail(peek(), "expected 'version 1;' header" + found());
        next();
        const Token& t = peek();
        if (number() != 1) fail(t, "unsupported version");
        expect(";");
    }

    // ---------------------------------------------------------------- declarations

    bool declaration(TheoryDocument& doc) {
        Signature& sig = doc.theory.signature;
        const Token& start = peek();
        if (start.type != Token::Type::Ident) return false;
        const std::string& w = start.text;
        if (w != "sort" && w != "fun" && w != "const" && w != "rel" && w != "prop" && w != "var" && w != "axiom")
            return false;
        next();
        try {
            if (w == "sort" || w == "prop") {
                do {
                    const Token& t = peek();
                    std::string name = ident();
                    try {
                        if (w == "sort")
                            sig.add_sort(name);
                        else
                            sig.add_relation(name, {});
                    } catch (const LogicError& e) {
                        rethrow(t, e);
                    }
                } while (accept(","));
            } else if (w == "fun" || w == "const") {
                const Token& t = peek();
                std::string name = ident();
                expect(":");
                std::vector<std::string> args;
                if (w == "fun") {
                    if (!is_sym("->")) {
                        do args.push_back(ident("sort")); while (accept(","));
                    }
                    expect("->");
                }
                std::string result = ident("sort");
                try {
                    sig.add_function(name, args, result);
                } catch (const LogicError& e) {
                    rethrow(t, e);
                }
            } else if (w == "rel") {
                const Token& t = peek();
                std::string name = ident();
                std::vector<std::string> args;
                if (accept(":") && !is_sym(";")) {
                    do args.push_back(ident("sort")); while (accept(","));
                }
                try {
                    sig.add_relation(name, args);
                } catch (const LogicError& e) {
                    rethrow(t, e);
                }
            } else if (w == "var") {
                std::vector<Token> names;
                do {
                    names.push_back(peek());
                    ident();
                } while (accept(","));
                expect(":");
                const Token& st = peek();
                std::string sort = ident("sort");
                if (!sig.has_sort(sort)) fail(st, "unknown sort " + sort, ErrorKind::UnknownSort);
                for (const auto& n : names) {
                    if (doc.variables.count(n.text)) fail(n, "variable " + n.text + " declared twice", ErrorKind::DuplicateVariable);
                    doc.variables[n.text] = sort;
                }
            } else {
                doc.theory.axioms.push_back(sequent(doc));
            }
        } catch (const LogicError& e) {
            if (std::string(e.what()).rfind(source_, 0) == 0) throw;
            rethrow(start, e);
        }
        expect(";");
        return true;
    }

    // ---------------------------------------------------------------- contexts, terms, formulae

    Context context(const TheoryDocument& doc) {
        expect("[");
        std::vector<Variable> vars;
        if (!is_sym("]")) {
            do {
                const Token& t = peek();
                std::string name = ident("variable");
                std::string sort;
                if (accept(":")) {
                    const Token& st = peek();
                    sort = ident("sort");
                    if (!doc.theory.signature.has_sort(sort)) fail(st, "unknown sort " + sort, ErrorKind::UnknownSort);
                } else {
                    auto it = doc.variables.find(name);
                    if (it == doc.variables.end()) fail(t, "variable " + name + " needs a sort", ErrorKind::UnknownSort);
                    sort = it->second;
                }
                vars.push_back(Variable{name, sort});
            } while (accept(","));
        }
        expect("]");
        try {
            return Context(vars);
        } catch (const LogicError& e) {
            rethrow(peek(), e);
        }
    }

    struct Scope {
        const TheoryDocument& doc;
        const Context& ctx;
        std::vector<Variable> bound;
    };

    std::optional<Variable> lookup_variable(const Scope& s, const std::string& name) const {
        for (auto it = s.bound.rbegin(); it != s.bound.rend(); ++it)
            if (it->name == name) return *it;
        for (const auto& v : s.ctx)
            if (v.name == name) return v;
        return std::nullopt;
    }

    Term term(Scope& s) {
        const Token& t = peek();
        std::string name = ident("term");
        const Signature& sig = s.doc.theory.signature;
        if (accept("(")) {
            std::vector<Term> args;
            if (!is_sym(")")) {
                do args.push_back(term(s)); while (accept(","));
            }
            expect(")");
            try {
                return make_app(sig, name, std::move(args));
            } catch (const LogicError& e) {
                rethrow(t, e);
            }
        }
        if (auto v = lookup_variable(s, name)) return Term::var(*v);
        if (const FunctionDecl* f = sig.find_function(name)) {
            if (!f->args.empty()) fail(t, "function " + name + " needs arguments", ErrorKind::ArityMismatch);
            return Term::app(name, {}, f->result);
        }
        auto it = s.doc.variables.find(name);
        if (it != s.doc.variables.end()) return Term::var(name, it->second);
        fail(t, "unknown variable or constant " + name, ErrorKind::UnknownSymbol);
    }

    Formula formula(Scope& s) {
        Formula lhs = disjunction(s);
        if (accept("=>")) return Formula::implies(lhs, formula(s));
        return lhs;
    }

    Formula disjunction(Scope& s) {
        Formula f = conjunction_(s);
        while (accept("|")) f = Formula::disj(f, conjunction_(s));
        return f;
    }

    Formula conjunction_(Scope& s) {
        Formula f = unary(s);
        while (accept("&")) f = Formula::conj(f, unary(s));
        return f;
    }

    Formula unary(Scope& s) {
        if (accept("~")) return Formula::negation(unary(s));
        if (is_word("exists") || is_word("forall")) {
            bool ex = next().text == "exists";
            const Token& t = peek();
            std::string name = ident("variable");
            std::string sort;
            if (accept(":")) {
                const Token& st = peek();
                sort = ident("sort");
                if (!s.doc.theory.signature.has_sort(sort)) fail(st, "unknown sort " + sort, ErrorKind::UnknownSort);
            } else {
                auto it = s.doc.variables.find(name);
                if (it == s.doc.variables.end()) fail(t, "bound variable " + name + " needs a sort", ErrorKind::UnknownSort);
                sort = it->second;
            }
            expect(".");
            Variable v{name, sort};
            s.bound.push_back(v);
            Formula body = formula(s);
            s.bound.pop_back();
            return ex ? Formula::exists(v, body) : Formula::forall(v, body);
        }
        return atom(s);
    }

    Formula atom(Scope& s) {
        if (accept("(")) {
            Formula f = formula(s);
            expect(")");
            return f;
        }
        if (is_word("top")) {
            next();
            return Formula::top();
        }
        if (is_word("bot")) {
            next();
            return Formula::bot();
        }
        const Token& t = peek();
        if (t.type == Token::Type::Ident && s.doc.theory.signature.find_relation(t.text) &&
            !lookup_variable(s, t.text)) {
            next();
            std::vector<Term> args;
            if (accept("(")) {
                if (!is_sym(")")) {
                    do args.push_back(term(s)); while (accept(","));
                }
                expect(")");
            }
            try {
                return make_rel(s.doc.theory.signature, t.text, std::move(args));
            } catch (const LogicError& e) {
                rethrow(t, e);
            }
        }
        Term a = term(s);
        const Token& eq = peek();
        expect("=");
        Term b = term(s);
        try {
            return make_eq(a, b);
        } catch (const LogicError& e) {
            rethrow(eq, e);
        }
    }

    // `[ctx] lhs |- rhs` or `lhs [ctx] |- rhs`.
    Sequent sequent(const TheoryDocument& doc) {
        const Token& start = peek();
        Context ctx;
        std::size_t resume = 0;
        std::size_t lhs_end = 0;
        if (is_sym("[")) {
            ctx = context(doc);
        } else {
            std::size_t depth = 0, k = pos_;
            for (; k < toks_.size(); ++k) {
                const Token& t = toks_[k];
                if (t.type == Token::Type::End || (t.type == Token::Type::Symbol && t.text == ";")) break;
                if (t.type != Token::Type::Symbol) continue;
                if (t.text == "(") ++depth;
                if (t.text == ")" && depth) --depth;
                if (t.text == "[" && depth == 0) break;
            }
            if (k >= toks_.size() || toks_[k].text != "[") fail(start, "expected a context '[...]' in the sequent");
            std::size_t lhs_start = pos_;
            pos_ = k;
            ctx = context(doc);
            resume = pos_;
            lhs_end = k;
            pos_ = lhs_start;
        }
        Scope scope{doc, ctx, {}};
        Formula lhs = formula(scope);
        if (resume) {
            if (pos_ != lhs_end) fail(peek(), "unexpected token before the context" + found());
            pos_ = resume;
        }
        expect("|-");
        Formula rhs = formula(scope);
        try {
            return Sequent(lhs, ctx, rhs);
        } catch (const LogicError& e) {
            rethrow(start, e);
        }
    }

    // ---------------------------------------------------------------- documents

    TheoryDocument theory_document() {
        TheoryDocument doc;
        header();
        while (!at_end())
            if (!declaration(doc)) fail(peek(), "expected a declaration" + found());
        return doc;
    }

    Sequent lone_sequent(const TheoryDocument& doc) {
        Sequent s = sequent(doc);
        accept(";");
        if (!at_end()) fail(peek(), "trailing input" + found());
        return s;
    }

    ProofDocument proof_document(const TheoryDocument& base) {
        TheoryDocument doc = base;
        header();
        ProofDocument out{{}, {}};
        bool have_fragment = false;
        while (!at_end()) {
            if (is_word("fragment")) {
                const Token& t = next();
                const Token& ft = peek();
                std::string name = ident("fragment name");
                auto f = fragment_from_string(name);
                if (!f) fail(ft, "unknown fragment " + name);
                if (have_fragment) fail(t, "fragment declared twice");
                out.derivation.fragment = *f;
                have_fragment = true;
                expect(";");
            } else if (is_word("conclude")) {
                next();
                do out.derivation.conclusions.push_back(number()); while (accept(","));
                expect(";");
            } else if (peek().type == Token::Type::Number) {
                if (!have_fragment) fail(peek(), "proof needs a 'fragment <name>;' header before its lines");
                out.derivation.lines.push_back(proof_line(doc, out.derivation));
            } else if (!declaration(doc)) {
                fail(peek(), "expected a proof line or declaration" + found());
            }
        }
        if (!have_fragment) fail(peek(), "proof needs a 'fragment <name>;' header");
        for (int c : out.derivation.conclusions)
            if (!out.derivation.find(c)) fail(peek(), "concluded line " + std::to_string(c) + " does not exist");
        out.theory = doc.theory;
        return out;
    }

    DerivationLine proof_line(const TheoryDocument& doc, const Derivation& so_far) {
        int n = number();
        expect(":");
        Sequent s = sequent(doc);
        expect(";");
        const Token& rt = peek();
        std::string name = ident("rule name");
        auto kind = rule_from_name(name);
        if (!kind) fail(rt, "unknown rule " + name);
        Rule rule = Rule::of(*kind);
        std::vector<int> premises;
        std::size_t sub_start = 0;
        if (*kind == RuleKind::Hypothesis) {
            rule.axiom = static_cast<std::size_t>(number());
        } else if (*kind == RuleKind::TheoremRef) {
            rule.theorem = ident("theorem name");
        } else if (*kind == RuleKind::Sub) {
            sub_start = pos_;
            std::size_t depth = 0;
            do {
                if (is_sym("[")) ++depth;
                if (is_sym("]")) --depth;
                if (at_end()) fail(rt, "unterminated substitution");
                next();
            } while (depth);
        }
        if (peek().type == Token::Type::Number) {
            do premises.push_back(number()); while (accept(","));
        }
        if (*kind == RuleKind::Sub) {
            std::size_t after = pos_;
            pos_ = sub_start;
            const DerivationLine* prem = premises.empty() ? nullptr : so_far.find(premises[0]);
            rule.theta = substitution(doc, s.ctx(), prem ? prem->sequent.ctx() : Context());
            if (prem) rule.theta = over_premise_context(rule.theta, prem->sequent.ctx());
            pos_ = after;
        }
        expect(";");
        return DerivationLine{n, s, rule, premises};
    }

    Substitution substitution(const TheoryDocument& doc, const Context& ctx, const Context& premise_ctx) {
        const Token& start = peek();
        expect("[");
        std::vector<Term> reps;
        std::vector<Variable> targets;
        if (!accept("]")) {
            Scope scope{doc, ctx, {}};
            do reps.push_back(term(scope)); while (accept(","));
            expect("/");
            do {
                const Token& t = peek();
                std::string name = ident("variable");
                if (accept(":")) {
                    std::string sort = ident("sort");
                    targets.push_back(Variable{name, sort});
                    continue;
                }
                std::optional<Variable> v;
                for (const auto& x : premise_ctx)
                    if (x.name == name) v = x;
                if (!v) {
                    auto it = doc.variables.find(name);
                    if (it == doc.variables.end())
                        fail(t, "substitution target " + name + " is not in the premise context", ErrorKind::UnknownSymbol);
                    v = Variable{name, it->second};
                }
                targets.push_back(*v);
            } while (accept(","));
            expect("]");
        }
        try {
            return Substitution(reps, Context(targets));
        } catch (const LogicError& e) {
            rethrow(start, e);
        }
    }

    FiniteModel model_document(const Signature& sig) {
        header();
        FiniteModel m(sig);
        std::set<std::string> seen;
        while (!at_end()) {
            const Token& start = peek();
            std::string kw = ident("'iterator', 'fun' or 'rel'");
            const Token& nt = peek();
            std::string name = ident();
            if (!seen.insert(kw + " " + name).second) fail(nt, kw + " " + name + " given twice", ErrorKind::DuplicateSymbol);
            expect("{");
            try {
                if (kw == "iterator") {
                    iterator_block(m, name, nt);
                } else if (kw == "fun") {
                    function_block(m, name, nt);
                } else if (kw == "rel") {
                    relation_block(m, name, nt);
                } else {
                    fail(start, "expected 'iterator', 'fun' or 'rel'");
                }
            } catch (const LogicError& e) {
                if (std::string(e.what()).rfind(source_, 0) == 0) throw;
                rethrow(nt, e);
            }
            expect("}");
        }
        for (const auto& s : sig.sorts())
            if (!m.has_sort(s)) fail(peek(), "no iterator for sort " + s, ErrorKind::ModelError);
        for (const auto& f : sig.functions())
            if (!m.has_function(f.name)) fail(peek(), "no table for function " + f.name, ErrorKind::ModelError);
        for (const auto& r : sig.relations())
            if (!m.has_relation(r.name)) m.set_relation(r.name, std::vector<char>(m.product_size(r.args), 0));
        auto problems = validate_model(m);
        if (!problems.empty()) {
            std::string msg = source_ + ": model is not a valid structure:";
            for (const auto& p : problems) msg += "\n  " + p;
            throw LogicError(ErrorKind::ModelError, msg);
        }
        return m;
    }

    void iterator_block(FiniteModel& m, const std::string& sort, const Token& nt) {
        if (!m.signature().has_sort(sort)) fail(nt, "unknown sort " + sort, ErrorKind::UnknownSort);
        FiniteIterator it;
        bool has_step = false;
        std::map<std::string, std::string> steps;
        while (!is_sym("}")) {
            const Token& kt = peek();
            std::string kw = ident("'elems' or 'step'");
            if (kw == "elems") {
                while (!is_sym(";")) {
                    const Token& lt = peek();
                    std::string l = label();
                    if (it.index_of(l)) fail(lt, "element " + l + " listed twice", ErrorKind::DuplicateSymbol);
                    it.elems.push_back(l);
                    accept(",");
                }
            } else if (kw == "step") {
                has_step = true;
                while (!is_sym(";")) {
                    const Token& lt = peek();
                    std::string a = label();
                    expect("->");
                    std::string b = label();
                    if (!steps.emplace(a, b).second) fail(lt, "element " + a + " steps twice");
                    accept(",");
                }
            } else {
                fail(kt, "expected 'elems' or 'step'");
            }
            expect(";");
        }
        it.step.resize(it.elems.size());
        for (std::size_t i = 0; i < it.elems.size(); ++i) {
            if (!has_step) {
                it.step[i] = i;
                continue;
            }
            auto s = steps.find(it.elems[i]);
            if (s == steps.end()) fail(nt, "iterator " + sort + " has no step for " + it.elems[i]);
            auto j = it.index_of(s->second);
            if (!j) fail(nt, "iterator " + sort + " steps " + it.elems[i] + " to unknown element " + s->second);
            it.step[i] = *j;
        }
        for (const auto& [a, b] : steps)
            if (!it.index_of(a)) fail(nt, "step mentions unknown element " + a);
        m.set_sort(sort, std::move(it));
    }

    std::vector<std::size_t> tuple(const FiniteModel& m, const std::vector<std::string>& sorts) {
        std::vector<std::string> labels;
        const Token& t = peek();
        if (accept("(")) {
            if (!is_sym(")")) {
                do labels.push_back(label()); while (accept(","));
            }
            expect(")");
        } else {
            labels.push_back(label());
        }
        if (labels.size() != sorts.size())
            fail(t, "expected " + std::to_string(sorts.size()) + " elements", ErrorKind::ArityMismatch);
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < sorts.size(); ++i) {
            auto j = m.carrier(sorts[i]).index_of(labels[i]);
            if (!j) fail(t, labels[i] + " is not an element of " + sorts[i]);
            out.push_back(*j);
        }
        return out;
    }

    void function_block(FiniteModel& m, const std::string& name, const Token& nt) {
        const FunctionDecl* fd = m.signature().find_function(name);
        if (!fd) fail(nt, "unknown function " + name, ErrorKind::UnknownSymbol);
        std::size_t n = m.product_size(fd->args);
        std::vector<std::size_t> table(n, 0);
        std::vector<char> given(n, 0);
        while (!is_sym("}")) {
            const Token& t = peek();
            auto args = tuple(m, fd->args);
            expect("->");
            const Token& rt = peek();
            std::string r = label();
            auto j = m.carrier(fd->result).index_of(r);
            if (!j) fail(rt, r + " is not an element of " + fd->result);
            std::size_t k = m.encode(fd->args, args);
            if (given[k]) fail(t, "entry given twice");
            given[k] = 1;
            table[k] = *j;
            expect(";");
        }
        for (std::size_t k = 0; k < n; ++k)
            if (!given[k]) fail(nt, "function " + name + " has no entry for " + m.tuple_label(fd->args, k));
        m.set_function(name, std::move(table));
    }

    void relation_block(FiniteModel& m, const std::string& name, const Token& nt) {
        const RelationDecl* rd = m.signature().find_relation(name);
        if (!rd) fail(nt, "unknown relation " + name, ErrorKind::UnknownSymbol);
        std::vector<char> mem(m.product_size(rd->args), 0);
        while (!is_sym("}")) {
            auto args = tuple(m, rd->args);
            mem[m.encode(rd->args, args)] = 1;
            expect(";");
        }
        m.set_relation(name, std::move(mem));
    }

    UnifyDocument unify_document(const TheoryDocument& base, UnifyItemKind kind) {
        TheoryDocument doc = base;
        header();
        UnifyDocument out;
        while (!at_end()) {
            if (declaration(doc)) continue;
            Context ctx = context(doc);
            Scope scope{doc, ctx, {}};
            const Token& t = peek();
            if (kind == UnifyItemKind::Term) {
                Term body = term(scope);
                if (!suitable(ctx, body)) fail(t, "context is not suitable for the term", ErrorKind::UnsuitableContext);
                out.terms.push_back({ctx, body});
            } else {
                Formula body = formula(scope);
                if (!suitable(ctx, body))
                    fail(t, "context is not suitable for the formula", ErrorKind::UnsuitableContext);
                out.formulae.push_back({ctx, body});
            }
            expect(";");
        }
        return out;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string source_;
};

}  // namespace

TheoryDocument parse_theory(const std::string& text, const std::string& source) {
    return Parser(text, source).theory_document();
}

Sequent parse_sequent(const std::string& text, const TheoryDocument& doc, const std::string& source) {
    return Parser(text, source).lone_sequent(doc);
}

FiniteModel parse_model(const std::string& text, const Signature& sig, const std::string& source) {
    return Parser(text, source).model_document(sig);
}

ProofDocument parse_proof(const std::string& text, const TheoryDocument& base, const std::string& source) {
    return Parser(text, source).proof_document(base);
}

UnifyDocument parse_unify_items(const std::string& text, const TheoryDocument& doc, UnifyItemKind kind,
                                const std::string& source) {
    return Parser(text, source).unify_document(doc, kind);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LogicError(ErrorKind::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace clogic
