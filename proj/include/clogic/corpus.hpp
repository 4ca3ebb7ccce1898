#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "clogic/frontend.hpp"
#include "clogic/kernel.hpp"

namespace clogic {

// One bundled artifact. File roles are "theory", "model", "proof", "lhs" and "rhs";
// paths are absolute once loaded.
struct CorpusEntry {
    std::string name;
    std::string kind;  // theory | model | proof | unify-case | chain-case
    std::string group;
    std::map<std::string, std::string> files;
    std::string expected;
    // Kind-specific extras: "goal" for chain cases; "item-kind" and "displayed"
    // (the same map with identity pairs in another order) for unify cases;
    // "sequents" (newline separated) with "verdicts" for models.
    std::map<std::string, std::string> extra;

    const std::string& file(const std::string& role) const;
};

// CLOGIC_CORPUS from the environment when set, otherwise the installed location.
std::string corpus_directory();

std::vector<CorpusEntry> list_corpus(const std::string& dir = corpus_directory());

// Loads entries on demand and resolves `thm` citations against the proof entries.
class CorpusLibrary {
public:
    explicit CorpusLibrary(std::string dir = corpus_directory());

    const std::vector<CorpusEntry>& entries() const { return entries_; }
    // Throws LogicError(UnknownCorpusEntry).
    const CorpusEntry& find(const std::string& name) const;

    TheoryDocument theory(const std::string& name) const;
    const ProofDocument& proof(const std::string& name) const;
    FiniteModel model(const std::string& name) const;

    TheoremResolver resolver() const;
    CheckReport check_proof(const std::string& name) const;

private:
    std::string dir_;
    std::vector<CorpusEntry> entries_;
    mutable std::map<std::string, std::unique_ptr<ProofDocument>> proofs_;
    mutable std::map<std::string, std::unique_ptr<CitedProof>> cited_;
};

}  // namespace clogic
