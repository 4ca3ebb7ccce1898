#pragma once

// Single-line perturbations of derivations, shared by the kernel tests and the
// acceptance binary.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clogic/kernel.hpp"
#include "clogic/substitution.hpp"
#include "clogic/syntax.hpp"

namespace clogic::testgen {

enum class MutationKind { SwapContext, RenameOneSide, AlterConnective, ExtendContext };

inline std::string to_string(MutationKind k) {
    switch (k) {
    case MutationKind::SwapContext: return "swap-context";
    case MutationKind::RenameOneSide: return "rename-one-side";
    case MutationKind::AlterConnective: return "alter-connective";
    case MutationKind::ExtendContext: return "extend-context";
    }
    return "?";
}

struct Mutant {
    Derivation derivation;
    int line = 0;
    MutationKind kind = MutationKind::SwapContext;
};

namespace detail {

using K = Formula::Kind;

inline std::size_t count_nodes(const Formula& f, bool (*want)(const Formula&)) {
    std::size_t n = want(f) ? 1 : 0;
    if (f.is_binary()) return n + count_nodes(f.left(), want) + count_nodes(f.right(), want);
    if (f.kind() == K::Not || f.is_quantifier()) return n + count_nodes(f.body(), want);
    return n;
}

inline bool alterable(const Formula& f) {
    return f.is_binary() || f.kind() == K::Top || f.kind() == K::Bot || f.is_quantifier() || f.kind() == K::Not;
}

inline Formula alter_at(const Formula& f, std::size_t& index, std::mt19937_64& rng) {
    if (alterable(f)) {
        if (index == 0) {
            --index;
            switch (f.kind()) {
            case K::Top: return Formula::bot();
            case K::Bot: return Formula::top();
            case K::Not: return f.body();
            case K::Exists: return Formula::forall(f.bound(), f.body());
            case K::Forall: return Formula::exists(f.bound(), f.body());
            default: {
                std::vector<K> others;
                for (K k : {K::And, K::Or, K::Implies})
                    if (k != f.kind()) others.push_back(k);
                return Formula::binary(others[std::uniform_int_distribution<std::size_t>(0, 1)(rng)], f.left(),
                                       f.right());
            }
            }
        }
        --index;
    }
    if (f.is_binary()) {
        Formula l = alter_at(f.left(), index, rng);
        Formula r = alter_at(f.right(), index, rng);
        return Formula::binary(f.kind(), l, r);
    }
    if (f.kind() == K::Not) return Formula::negation(alter_at(f.body(), index, rng));
    if (f.is_quantifier()) return Formula::quantifier(f.kind(), f.bound(), alter_at(f.body(), index, rng));
    return f;
}

}  // namespace detail

// Produces a structurally different derivation by changing one line, or nothing when
// the drawn perturbation does not apply to that line.
inline std::optional<Mutant> try_mutate(const Derivation& d, std::mt19937_64& rng) {
    using detail::K;
    if (d.lines.empty()) return std::nullopt;
    auto draw = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    const std::size_t li = draw(d.lines.size());
    Mutant m{d, d.lines[li].number, static_cast<MutationKind>(draw(4))};
    DerivationLine& line = m.derivation.lines[li];
    const Sequent& s = line.sequent;
    std::vector<Variable> ctx(s.ctx().begin(), s.ctx().end());
    try {
        switch (m.kind) {
        case MutationKind::SwapContext: {
            if (ctx.size() < 2) return std::nullopt;
            std::size_t i = draw(ctx.size()), j = draw(ctx.size() - 1);
            if (j >= i) ++j;
            std::swap(ctx[i], ctx[j]);
            line.sequent = Sequent(s.lhs(), Context(ctx), s.rhs());
            break;
        }
        case MutationKind::ExtendContext: {
            if (ctx.empty()) return std::nullopt;
            FreshVariableSource fresh;
            fresh.avoid(s.ctx());
            fresh.avoid(s.lhs());
            fresh.avoid(s.rhs());
            ctx.insert(ctx.begin() + static_cast<std::ptrdiff_t>(draw(ctx.size() + 1)), fresh.fresh(ctx[draw(ctx.size())]));
            line.sequent = Sequent(s.lhs(), Context(ctx), s.rhs());
            break;
        }
        case MutationKind::RenameOneSide: {
            bool left = draw(2) == 0;
            const Formula& side = left ? s.lhs() : s.rhs();
            auto fv = free_variables(side);
            if (fv.empty()) return std::nullopt;
            std::vector<Variable> from(fv.begin(), fv.end());
            Variable v = from[draw(from.size())];
            std::vector<Variable> to;
            for (const auto& c : ctx)
                if (c.sort == v.sort && c != v) to.push_back(c);
            if (to.empty()) return std::nullopt;
            Formula renamed = apply(side, Substitution({{Term::var(to[draw(to.size())]), v}}));
            if (renamed == side) return std::nullopt;
            line.sequent = left ? Sequent(renamed, s.ctx(), s.rhs()) : Sequent(s.lhs(), s.ctx(), renamed);
            break;
        }
        case MutationKind::AlterConnective: {
            bool left = draw(2) == 0;
            const Formula& side = left ? s.lhs() : s.rhs();
            std::size_t n = detail::count_nodes(side, detail::alterable);
            if (n == 0) return std::nullopt;
            std::size_t index = draw(n);
            Formula altered = detail::alter_at(side, index, rng);
            if (altered == side) return std::nullopt;
            line.sequent = left ? Sequent(altered, s.ctx(), s.rhs()) : Sequent(s.lhs(), s.ctx(), altered);
            break;
        }
        }
    } catch (const LogicError&) {
        return std::nullopt;  // the perturbed sequent is not well formed
    }
    return m;
}

inline Mutant mutate(const Derivation& d, std::mt19937_64& rng) {
    for (;;)
        if (auto m = try_mutate(d, rng)) return *m;
}

// A mutant is rejected when the checker reports an error or the mutant no longer
// proves the original conclusions.
inline bool rejected(const Derivation& original, const Mutant& m, const Theory& theory,
                     const TheoremResolver& resolver) {
    CheckReport r = check_derivation(m.derivation, theory, resolver);
    if (!r.ok()) return true;
    return m.derivation.concluded() != original.concluded();
}

}  // namespace clogic::testgen
