#include "clogic/semantics.hpp"

#include <algorithm>

namespace clogic {

std::optional<std::size_t> FiniteIterator::index_of(const std::string& label) const {
    auto it = std::find(elems.begin(), elems.end(), label);
    if (it == elems.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elems.begin());
}

FiniteIterator FiniteIterator::plain_set(std::vector<std::string> elems) {
    FiniteIterator it;
    it.step.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) it.step[i] = i;
    it.elems = std::move(elems);
    return it;
}

std::size_t Subset::count() const {
    return static_cast<std::size_t>(std::count(members.begin(), members.end(), char{1}));
}

FiniteModel::FiniteModel(Signature sig) : sig_(std::move(sig)) {}

void FiniteModel::set_sort(const std::string& sort, FiniteIterator it) {
    if (!sig_.has_sort(sort)) throw LogicError(ErrorKind::UnknownSort, "model interprets unknown sort " + sort);
    if (it.step.size() != it.elems.size())
        throw LogicError(ErrorKind::ModelError, "carrier of " + sort + " has a step of the wrong length");
    for (auto s : it.step)
        if (s >= it.elems.size())
            throw LogicError(ErrorKind::ModelError, "carrier of " + sort + " steps outside itself");
    sorts_[sort] = std::move(it);
}

void FiniteModel::set_function(const std::string& fn, std::vector<std::size_t> table) {
    if (!sig_.find_function(fn)) throw LogicError(ErrorKind::UnknownSymbol, "model interprets unknown function " + fn);
    funs_[fn] = std::move(table);
}

void FiniteModel::set_relation(const std::string& rel, std::vector<char> members) {
    if (!sig_.find_relation(rel)) throw LogicError(ErrorKind::UnknownSymbol, "model interprets unknown relation " + rel);
    rels_[rel] = std::move(members);
}

const FiniteIterator& FiniteModel::carrier(const std::string& sort) const {
    auto it = sorts_.find(sort);
    if (it == sorts_.end()) throw LogicError(ErrorKind::ModelError, "model has no carrier for sort " + sort);
    return it->second;
}

const std::vector<std::size_t>& FiniteModel::function_table(const std::string& fn) const {
    auto it = funs_.find(fn);
    if (it == funs_.end()) throw LogicError(ErrorKind::ModelError, "model does not interpret function " + fn);
    return it->second;
}

const std::vector<char>& FiniteModel::relation_members(const std::string& rel) const {
    auto it = rels_.find(rel);
    if (it == rels_.end()) throw LogicError(ErrorKind::ModelError, "model does not interpret relation " + rel);
    return it->second;
}

std::size_t FiniteModel::product_size(const std::vector<std::string>& sorts) const {
    std::size_t n = 1;
    for (const auto& s : sorts) {
        std::size_t k = carrier(s).size();
        if (k == 0) return 0;
        if (n > kProductCap / k)
            throw LogicError(ErrorKind::SizeLimit, "product of carriers exceeds " + std::to_string(kProductCap));
        n *= k;
    }
    return n;
}

std::vector<std::size_t> FiniteModel::decode(const std::vector<std::string>& sorts, std::size_t index) const {
    std::vector<std::size_t> out(sorts.size());
    for (std::size_t i = sorts.size(); i-- > 0;) {
        std::size_t k = carrier(sorts[i]).size();
        out[i] = index % k;
        index /= k;
    }
    return out;
}

std::size_t FiniteModel::encode(const std::vector<std::string>& sorts, const std::vector<std::size_t>& tuple) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < sorts.size(); ++i) index = index * carrier(sorts[i]).size() + tuple[i];
    return index;
}

std::size_t FiniteModel::product_step(const std::vector<std::string>& sorts, std::size_t index) const {
    auto tuple = decode(sorts, index);
    for (std::size_t i = 0; i < sorts.size(); ++i) tuple[i] = carrier(sorts[i]).step[tuple[i]];
    return encode(sorts, tuple);
}

std::string FiniteModel::tuple_label(const std::vector<std::string>& sorts, std::size_t index) const {
    auto tuple = decode(sorts, index);
    if (sorts.size() == 1) return carrier(sorts[0]).elems[tuple[0]];
    std::string out = "(";
    for (std::size_t i = 0; i < sorts.size(); ++i) {
        if (i) out += ",";
        out += carrier(sorts[i]).elems[tuple[i]];
    }
    return out + ")";
}

std::vector<std::string> validate_model(const FiniteModel& m) {
    std::vector<std::string> problems;
    const Signature& sig = m.signature();
    for (const auto& s : sig.sorts())
        if (!m.has_sort(s)) problems.push_back("sort " + s + " has no carrier");
    if (!problems.empty()) return problems;

    for (const auto& fd : sig.functions()) {
        if (!m.has_function(fd.name)) {
            problems.push_back("function " + fd.name + " is not interpreted");
            continue;
        }
        const auto& table = m.function_table(fd.name);
        std::size_t n = m.product_size(fd.args);
        if (table.size() != n) {
            problems.push_back("function " + fd.name + " has " + std::to_string(table.size()) + " entries, expected " +
                               std::to_string(n));
            continue;
        }
        const auto& out = m.carrier(fd.result);
        bool in_range = true;
        for (std::size_t i = 0; i < n; ++i)
            if (table[i] >= out.size()) {
                problems.push_back("function " + fd.name + " maps " + m.tuple_label(fd.args, i) +
                                   " outside its result sort");
                in_range = false;
            }
        if (!in_range) continue;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t lhs = table[m.product_step(fd.args, i)];
            std::size_t rhs = out.step[table[i]];
            if (lhs != rhs)
                problems.push_back("function " + fd.name + " does not commute with the step at " +
                                   m.tuple_label(fd.args, i) + ": " + out.elems[lhs] + " vs " + out.elems[rhs]);
        }
    }

    for (const auto& rd : sig.relations()) {
        if (!m.has_relation(rd.name)) {
            problems.push_back("relation " + rd.name + " is not interpreted");
            continue;
        }
        const auto& mem = m.relation_members(rd.name);
        std::size_t n = m.product_size(rd.args);
        if (mem.size() != n) {
            problems.push_back("relation " + rd.name + " has " + std::to_string(mem.size()) + " flags, expected " +
                               std::to_string(n));
            continue;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (mem[i] && !mem[m.product_step(rd.args, i)])
                problems.push_back("relation " + rd.name + " is not closed: " + m.tuple_label(rd.args, i) +
                                   " steps to " + m.tuple_label(rd.args, m.product_step(rd.args, i)));
    }
    return problems;
}

Subset interior(const FiniteModel& m, const Subset& u) {
    Subset v = u;
    std::size_t n = v.members.size();
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = m.product_step(u.sorts, i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            if (v.members[i] && !v.members[next[i]]) {
                v.members[i] = 0;
                changed = true;
            }
    }
    return v;
}

bool is_closed(const FiniteModel& m, const Subset& s) {
    for (std::size_t i = 0; i < s.members.size(); ++i)
        if (s.members[i] && !s.members[m.product_step(s.sorts, i)]) return false;
    return true;
}

namespace {

std::size_t eval_term(const FiniteModel& m, const Context& ctx, const std::vector<std::size_t>& env, const Term& t) {
    if (t.is_var()) {
        auto i = ctx.index_of(t.variable());
        if (!i)
            throw LogicError(ErrorKind::UnsuitableContext,
                             "variable " + to_string(t.variable()) + " is not in context " + to_string(ctx));
        return env[*i];
    }
    const FunctionDecl* fd = m.signature().find_function(t.function());
    if (!fd) throw LogicError(ErrorKind::UnknownSymbol, "unknown function " + t.function());
    std::vector<std::size_t> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(eval_term(m, ctx, env, a));
    return m.function_table(t.function())[m.encode(fd->args, args)];
}

Subset formula_subset(const FiniteModel& m, const Context& ctx, const Formula& f);

Subset pointwise(const FiniteModel& m, const Context& ctx, const Formula& f) {
    auto sorts = ctx.type();
    Subset out{sorts, std::vector<char>(m.product_size(sorts), 0)};
    const std::vector<char>* mem = nullptr;
    const RelationDecl* rd = nullptr;
    if (f.kind() == Formula::Kind::Rel) {
        rd = m.signature().find_relation(f.relation());
        if (!rd) throw LogicError(ErrorKind::UnknownSymbol, "unknown relation " + f.relation());
        mem = &m.relation_members(f.relation());
    }
    for (std::size_t i = 0; i < out.members.size(); ++i) {
        auto env = m.decode(sorts, i);
        if (rd) {
            std::vector<std::size_t> vals;
            for (const auto& a : f.args()) vals.push_back(eval_term(m, ctx, env, a));
            out.members[i] = (*mem)[m.encode(rd->args, vals)];
        } else {
            out.members[i] = eval_term(m, ctx, env, f.args()[0]) == eval_term(m, ctx, env, f.args()[1]);
        }
    }
    return out;
}

Subset quantified(const FiniteModel& m, const Context& ctx, const Formula& f) {
    Variable y = f.bound();
    Formula body = f.body();
    if (ctx.contains(y)) {
        FreshVariableSource fresh;
        fresh.avoid(ctx);
        fresh.avoid(f);
        Variable y2 = fresh.fresh(y);
        body = apply(body, Substitution({{Term::var(y2), y}}), fresh);
        y = y2;
    }
    std::vector<Variable> ext = ctx.vars();
    ext.push_back(y);
    Subset inner = formula_subset(m, Context(ext), body);
    auto sorts = ctx.type();
    std::size_t k = m.carrier(y.sort).size();
    Subset out{sorts, std::vector<char>(m.product_size(sorts), 0)};
    bool exists = f.kind() == Formula::Kind::Exists;
    for (std::size_t i = 0; i < out.members.size(); ++i) {
        bool acc = !exists;
        for (std::size_t b = 0; b < k; ++b) {
            bool in = inner.members[i * k + b] != 0;
            if (exists && in) {
                acc = true;
                break;
            }
            if (!exists && !in) {
                acc = false;
                break;
            }
        }
        out.members[i] = acc;
    }
    return exists ? out : interior(m, out);
}

Subset formula_subset(const FiniteModel& m, const Context& ctx, const Formula& f) {
    using K = Formula::Kind;
    auto sorts = ctx.type();
    std::size_t n = m.product_size(sorts);
    switch (f.kind()) {
        case K::Rel:
        case K::Eq: return pointwise(m, ctx, f);
        case K::Top: return {sorts, std::vector<char>(n, 1)};
        case K::Bot: return {sorts, std::vector<char>(n, 0)};
        case K::And:
        case K::Or: {
            Subset a = formula_subset(m, ctx, f.left());
            Subset b = formula_subset(m, ctx, f.right());
            for (std::size_t i = 0; i < n; ++i)
                a.members[i] = f.kind() == K::And ? (a.members[i] && b.members[i]) : (a.members[i] || b.members[i]);
            return a;
        }
        case K::Implies: {
            Subset a = formula_subset(m, ctx, f.left());
            Subset b = formula_subset(m, ctx, f.right());
            for (std::size_t i = 0; i < n; ++i) a.members[i] = !a.members[i] || b.members[i];
            return interior(m, a);
        }
        case K::Not: {
            Subset a = formula_subset(m, ctx, f.body());
            for (std::size_t i = 0; i < n; ++i) a.members[i] = !a.members[i];
            return interior(m, a);
        }
        case K::Exists:
        case K::Forall: return quantified(m, ctx, f);
    }
    throw LogicError(ErrorKind::ModelError, "unhandled formula kind");
}

}  // namespace

std::vector<std::size_t> interpret_term(const FiniteModel& m, const TermInContext& t) {
    auto sorts = t.ctx.type();
    std::size_t n = m.product_size(sorts);
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = eval_term(m, t.ctx, m.decode(sorts, i), t.body);
    return out;
}

Subset interpret_formula(const FiniteModel& m, const FormulaInContext& f) {
    if (!suitable(f.ctx, f.body))
        throw LogicError(ErrorKind::UnsuitableContext, "context " + to_string(f.ctx) + " is not suitable for " +
                                                           to_string(f.body));
    return formula_subset(m, f.ctx, f.body);
}

bool satisfies(const FiniteModel& m, const Sequent& s) {
    Subset l = interpret_formula(m, {s.ctx(), s.lhs()});
    Subset r = interpret_formula(m, {s.ctx(), s.rhs()});
    for (std::size_t i = 0; i < l.members.size(); ++i)
        if (l.members[i] && !r.members[i]) return false;
    return true;
}

namespace {

// Sends each point of the result context to the tuple of replacement values.
struct Reindexing {
    Context source;
    Context target;
    std::vector<std::size_t> map;
};

Reindexing reindex(const FiniteModel& m, const Substitution& ext) {
    Reindexing r{canonical_context(ext.replacements()), ext.targets(), {}};
    auto src = r.source.type();
    auto tgt = r.target.type();
    std::size_t n = m.product_size(src);
    r.map.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto env = m.decode(src, i);
        std::vector<std::size_t> vals;
        for (const auto& [s, y] : ext.pairs()) vals.push_back(eval_term(m, r.source, env, s));
        r.map[i] = m.encode(tgt, vals);
    }
    return r;
}

}  // namespace

std::optional<std::string> check_substitution_properties(const FiniteModel& m, const TermInContext& t,
                                                         const Substitution& theta) {
    Substitution ext = extend(theta, t.ctx);
    TermInContext substituted = apply_in_context(t, theta);
    auto left = interpret_term(m, substituted);
    Reindexing r = reindex(m, ext);
    auto right = interpret_term(m, {r.target, t.body});
    auto src = r.source.type();
    const auto& out = m.carrier(t.body.sort());
    for (std::size_t i = 0; i < left.size(); ++i)
        if (left[i] != right[r.map[i]])
            return "at " + m.tuple_label(src, i) + ": substituted term gives " + out.elems[left[i]] +
                   ", composite gives " + out.elems[right[r.map[i]]];
    return std::nullopt;
}

std::optional<std::string> check_substitution_properties(const FiniteModel& m, const FormulaInContext& f,
                                                         const Substitution& theta) {
    Substitution ext = extend(theta, f.ctx);
    FormulaInContext substituted = apply_in_context(f, theta);
    Subset left = interpret_formula(m, substituted);
    Reindexing r = reindex(m, ext);
    Subset right = interpret_formula(m, {r.target, f.body});
    auto src = r.source.type();
    for (std::size_t i = 0; i < left.members.size(); ++i)
        if (left.members[i] != right.members[r.map[i]])
            return "at " + m.tuple_label(src, i) + ": substituted formula " +
                   (left.members[i] ? "holds" : "fails") + ", pullback " +
                   (right.members[r.map[i]] ? "holds" : "fails");
    return std::nullopt;
}

}  // namespace clogic
