#pragma once

// Independent reference computations and instance generators shared by the
// property tests and the acceptance binary.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clogic/normal_form.hpp"
#include "clogic/semantics.hpp"
#include "clogic/syntax.hpp"
#include "generators.hpp"

namespace clogic::oracle {

using testgen::chance;
using testgen::pick;
using testgen::Rng;
using testgen::uniform;

// Builds closed terms round by round (a round adds one level of nesting) and keeps
// a few of each sort, which is enough to decide inhabitation.
inline std::optional<Term> enumerate_closed_term(const Signature& sig, const std::string& sort, std::size_t rounds,
                                                 std::size_t keep = 2) {
    std::map<std::string, std::vector<Term>> found;
    for (std::size_t r = 0; r < rounds; ++r) {
        auto next = found;
        for (const auto& f : sig.functions()) {
            std::vector<const std::vector<Term>*> pools;
            bool ok = true;
            for (const auto& a : f.args) {
                auto it = found.find(a);
                if (it == found.end() || it->second.empty()) {
                    ok = false;
                    break;
                }
                pools.push_back(&it->second);
            }
            if (!ok) continue;
            std::vector<std::size_t> pos(pools.size(), 0);
            for (;;) {
                std::vector<Term> args;
                for (std::size_t i = 0; i < pools.size(); ++i) args.push_back((*pools[i])[pos[i]]);
                Term t = make_app(sig, f.name, args);
                auto& bucket = next[f.result];
                if (bucket.size() < keep && std::find(bucket.begin(), bucket.end(), t) == bucket.end())
                    bucket.push_back(t);
                std::size_t i = 0;
                while (i < pos.size() && ++pos[i] == pools[i]->size()) pos[i++] = 0;
                if (i == pos.size()) break;
            }
        }
        found = std::move(next);
    }
    auto it = found.find(sort);
    if (it == found.end() || it->second.empty()) return std::nullopt;
    return it->second.front();
}

inline bool is_closed_term(const Term& t) { return free_variables(t).empty(); }

// Every endofunction of {0..n-1}.
inline void for_each_step(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> step(n, 0);
    for (;;) {
        visit(step);
        std::size_t i = 0;
        while (i < n && ++step[i] == n) step[i++] = 0;
        if (i == n) return;
    }
}

using Mask = std::uint32_t;

inline bool closed_mask(const std::vector<std::size_t>& step, Mask s) {
    for (std::size_t i = 0; i < step.size(); ++i)
        if ((s >> i & 1u) && !(s >> step[i] & 1u)) return false;
    return true;
}

inline std::vector<Mask> closed_masks(const std::vector<std::size_t>& step) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << step.size()); ++s)
        if (closed_mask(step, s)) out.push_back(s);
    return out;
}

// Union of every closed subset contained in u.
inline Mask brute_interior(const std::vector<Mask>& closed, Mask u) {
    Mask out = 0;
    for (Mask c : closed)
        if ((c & ~u) == 0) out |= c;
    return out;
}

inline Subset to_subset(const std::string& sort, std::size_t n, Mask s) {
    Subset out{{sort}, std::vector<char>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) out.members[i] = static_cast<char>(s >> i & 1u);
    return out;
}

inline Mask to_mask(const Subset& s) {
    Mask out = 0;
    for (std::size_t i = 0; i < s.members.size(); ++i)
        if (s.members[i]) out |= Mask{1} << i;
    return out;
}

inline FiniteIterator iterator_of(const std::vector<std::size_t>& step, const std::string& prefix = "e") {
    FiniteIterator it;
    for (std::size_t i = 0; i < step.size(); ++i) it.elems.push_back(prefix + std::to_string(i));
    it.step = step;
    return it;
}

// ---- unification instances ----

enum class UnifyMode { Generalized, Random, Occurs };

struct UnifyInstance {
    Signature sig;
    std::vector<TermInContext> as;
    std::vector<TermInContext> bs;
    UnifyMode mode = UnifyMode::Random;
};

// A random signature that always has an endomorphism h and a constant c on S0.
inline Signature unification_signature(Rng& rng) {
    testgen::SignatureShape shape;
    shape.max_sorts = 3;
    shape.max_functions = 4;
    shape.max_relations = 0;
    shape.max_arity = 2;
    Signature sig = testgen::random_signature(rng, shape);
    sig.add_function("h", {"S0"}, "S0");
    sig.add_function("c", {}, "S0");
    return sig;
}

namespace detail {

inline Term abstract(Rng& rng, const Term& t, const std::string& prefix, std::size_t& counter, double p) {
    if (chance(rng, p)) return Term::var(prefix + std::to_string(counter++), t.sort());
    if (t.is_var()) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(abstract(rng, a, prefix, counter, p));
    return Term::app(t.function(), args, t.sort());
}

inline Context context_for(Rng& rng, const Term& t, const Context& pool) {
    const Context canonical = canonical_context(t);
    std::vector<Variable> vs(canonical.begin(), canonical.end());
    for (const auto& v : pool)
        if (chance(rng, 0.15) && std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::shuffle(vs.begin(), vs.end(), rng);
    return Context(vs);
}

inline Context shared_pool(Rng& rng, const Signature& sig) {
    std::vector<Variable> vs;
    for (std::size_t i = 0; i < sig.sorts().size(); ++i) vs.push_back({"v" + std::to_string(i), sig.sorts()[i]});
    std::size_t extra = uniform(rng, 0, 3);
    for (std::size_t i = 0; i < extra; ++i)
        vs.push_back({"v" + std::to_string(vs.size()), pick(rng, sig.sorts())});
    return Context(vs);
}

inline Term random_deep_term(Rng& rng, const Signature& sig, const Context& pool, const std::string& sort,
                             std::size_t max_depth) {
    for (int attempt = 0; attempt < 16; ++attempt)
        if (auto t = testgen::random_term(rng, sig, pool, sort, uniform(rng, 0, max_depth))) return *t;
    for (const auto& v : pool)
        if (v.sort == sort) return Term::var(v);
    throw std::logic_error("the pool covers every sort");
}

}  // namespace detail

// Generalized: both sides are generalizations of common instances, so a unifier
// exists. Random: independent terms, mostly clashing. Occurs: a variable against a
// proper term containing it, wrapped in matching applications of h.
inline UnifyInstance random_unify_instance(Rng& rng, UnifyMode mode, std::size_t max_depth = 6) {
    UnifyInstance out;
    out.mode = mode;
    out.sig = unification_signature(rng);
    const Signature& sig = out.sig;
    Context pool = detail::shared_pool(rng, sig);
    if (mode == UnifyMode::Occurs) {
        Variable x = pool[0];
        Term q = detail::random_deep_term(rng, sig, pool, "S0", max_depth > 2 ? max_depth - 2 : 0);
        if (!occurs_in(x, q)) q = Term::var(x);
        Term lhs = Term::var(x);
        Term rhs = make_app(sig, "h", {q});
        for (std::size_t k = uniform(rng, 0, 1); k > 0; --k) {
            lhs = make_app(sig, "h", {lhs});
            rhs = make_app(sig, "h", {rhs});
        }
        bool flip = chance(rng, 0.5);
        Context ctx = concat_contexts(canonical_context(lhs), canonical_context(rhs));
        out.as.push_back({ctx, flip ? rhs : lhs});
        out.bs.push_back({ctx, flip ? lhs : rhs});
        return out;
    }
    std::size_t n = uniform(rng, 1, 3);
    std::size_t left_counter = 0, right_counter = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string sort = pick(rng, sig.sorts());
        auto pair = [&]() -> std::pair<Term, Term> {
            if (mode == UnifyMode::Generalized) {
                Term p = detail::random_deep_term(rng, sig, pool, sort, max_depth);
                Term a = detail::abstract(rng, p, "l", left_counter, 0.15);
                return {a, detail::abstract(rng, p, "r", right_counter, 0.15)};
            }
            Term a = detail::random_deep_term(rng, sig, pool, sort, max_depth);
            const std::string other = chance(rng, 0.1) ? pick(rng, sig.sorts()) : sort;
            return {a, detail::random_deep_term(rng, sig, pool, other, max_depth)};
        };
        auto [a, b] = pair();
        out.as.push_back({detail::context_for(rng, a, pool), a});
        out.bs.push_back({detail::context_for(rng, b, pool), b});
    }
    return out;
}

// ---- Horn theories and models that satisfy them ----

// A normal Horn sequent whose conclusion is a relation atom.
inline std::optional<Sequent> random_horn_axiom(Rng& rng, const Signature& sig, std::size_t max_premises,
                                                std::size_t term_depth) {
    Context ctx = sig.sorts().empty() ? Context() : testgen::random_context(rng, sig, 3);
    testgen::FormulaShape shape{Fragment::Horn, 1, term_depth, true};
    testgen::FormulaShape rel_only{Fragment::Horn, 1, term_depth, false};
    std::vector<Formula> premises;
    std::size_t n = uniform(rng, 0, max_premises);
    for (std::size_t i = 0; i < n; ++i)
        if (auto a = testgen::random_atom(rng, sig, ctx, shape)) premises.push_back(*a);
    auto conclusion = testgen::random_atom(rng, sig, ctx, rel_only);
    if (!conclusion) return std::nullopt;
    return Sequent(premises.empty() ? Formula::top() : conjunction(premises), ctx, *conclusion);
}

// Adds tuples (and their forward orbits) to relations until every axiom whose
// conclusion is a relation atom holds.
inline void saturate(FiniteModel& m, const Theory& t) {
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& ax : t.axioms) {
            const Formula& c = ax.rhs();
            if (c.kind() != Formula::Kind::Rel) continue;
            Subset lhs = interpret_formula(m, {ax.ctx(), ax.lhs()});
            Subset rhs = interpret_formula(m, {ax.ctx(), c});
            const RelationDecl* decl = m.signature().find_relation(c.relation());
            std::vector<std::vector<std::size_t>> values;
            for (const auto& a : c.args()) values.push_back(interpret_term(m, {ax.ctx(), a}));
            auto members = m.relation_members(c.relation());
            bool touched = false;
            for (std::size_t i = 0; i < lhs.members.size(); ++i) {
                if (!lhs.members[i] || rhs.members[i]) continue;
                std::vector<std::size_t> tuple;
                for (const auto& v : values) tuple.push_back(v[i]);
                std::size_t idx = m.encode(decl->args, tuple);
                while (!members[idx]) {
                    members[idx] = 1;
                    touched = true;
                    idx = m.product_step(decl->args, idx);
                }
            }
            if (touched) {
                m.set_relation(c.relation(), members);
                changed = true;
            }
        }
    }
}

}  // namespace clogic::oracle
