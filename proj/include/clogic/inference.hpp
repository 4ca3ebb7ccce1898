#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clogic/kernel.hpp"
#include "clogic/normal_form.hpp"
#include "clogic/substitution.hpp"
#include "clogic/syntax.hpp"

namespace clogic {

enum class ChainStatus { Derivable, NotDerivable, BudgetExhausted };

std::string to_string(ChainStatus s);

// One entry into the main loop.
struct TraceRow {
    std::vector<std::string> history;  // every item ever queued, in order
    std::vector<bool> settled;         // item no longer in the queue
    std::string popped;                // the item taken (or the premise tuple used)
    std::vector<std::size_t> counted;  // 1-based axiom indices touched
    std::vector<std::string> derived;  // derived sequents with their justification
};

struct ChainResult {
    ChainStatus status = ChainStatus::NotDerivable;
    std::vector<TraceRow> trace;
    std::optional<Derivation> derivation;

    bool derivable() const { return status == ChainStatus::Derivable; }
};

struct IterationBudget {
    std::size_t passes = 64;
    std::size_t queue = 4096;
};

struct FactInContext {
    Context ctx;
    Formula atom;
};

std::string to_string(const FactInContext& f);

ChainResult propositional_forward_chaining(const Theory& t, const NormalHornSequent& goal);

bool sort_closed(const Signature& sig, const std::string& sort);
std::optional<Term> closed_term_witness(const Signature& sig, const std::string& sort);

ChainResult forward_chaining(const Theory& t, const NormalHornSequent& goal, const IterationBudget& budget = {});

// Index tuples over a queue of the given size, lexicographic, with repetition.
// The visitor returns false to stop early.
void enumerate_premise_tuples(std::size_t queue_size, std::size_t n,
                              const std::function<bool(const std::vector<std::size_t>&)>& visit);

// Aligned text rendering of a trace.
std::string format_trace(const ChainResult& r);

}  // namespace clogic
