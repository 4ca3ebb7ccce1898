#include "clogic/corpus.hpp"

#include <cstdlib>
#include <filesystem>

#include <json.hpp>

#ifndef CLOGIC_CORPUS_DIR
#define CLOGIC_CORPUS_DIR "corpus"
#endif

namespace clogic {

namespace fs = std::filesystem;

const std::string& CorpusEntry::file(const std::string& role) const {
    auto it = files.find(role);
    if (it == files.end())
        throw LogicError(ErrorKind::UnknownCorpusEntry, "corpus entry " + name + " has no " + role + " file");
    return it->second;
}

std::string corpus_directory() {
    if (const char* env = std::getenv("CLOGIC_CORPUS"); env && *env) return env;
    return CLOGIC_CORPUS_DIR;
}

std::vector<CorpusEntry> list_corpus(const std::string& dir) {
    const fs::path root(dir);
    const fs::path manifest = root / "manifest.json";
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(manifest.string()));
    } catch (const nlohmann::json::exception& e) {
        throw LogicError(ErrorKind::ParseError, manifest.string() + ": " + e.what());
    }
    std::vector<CorpusEntry> out;
    for (const auto& e : j.at("entries")) {
        CorpusEntry c;
        c.name = e.at("name").get<std::string>();
        c.kind = e.at("kind").get<std::string>();
        c.group = e.value("group", "");
        c.expected = e.value("expected", "");
        for (const auto& [role, path] : e.at("files").items()) c.files[role] = (root / path.get<std::string>()).string();
        if (e.contains("extra"))
            for (const auto& [k, v] : e.at("extra").items()) c.extra[k] = v.get<std::string>();
        out.push_back(std::move(c));
    }
    return out;
}

CorpusLibrary::CorpusLibrary(std::string dir) : dir_(std::move(dir)), entries_(list_corpus(dir_)) {}

const CorpusEntry& CorpusLibrary::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw LogicError(ErrorKind::UnknownCorpusEntry, "no corpus entry named " + name);
}

TheoryDocument CorpusLibrary::theory(const std::string& name) const {
    const std::string& path = find(name).file("theory");
    return parse_theory(read_text_file(path), path);
}

const ProofDocument& CorpusLibrary::proof(const std::string& name) const {
    auto it = proofs_.find(name);
    if (it != proofs_.end()) return *it->second;
    const CorpusEntry& e = find(name);
    TheoryDocument base;
    if (e.files.count("theory")) base = parse_theory(read_text_file(e.file("theory")), e.file("theory"));
    const std::string& path = e.file("proof");
    auto doc = std::make_unique<ProofDocument>(parse_proof(read_text_file(path), base, path));
    return *proofs_.emplace(name, std::move(doc)).first->second;
}

FiniteModel CorpusLibrary::model(const std::string& name) const {
    const CorpusEntry& e = find(name);
    TheoryDocument t = parse_theory(read_text_file(e.file("theory")), e.file("theory"));
    return parse_model(read_text_file(e.file("model")), t.theory.signature, e.file("model"));
}

TheoremResolver CorpusLibrary::resolver() const {
    return [this](const std::string& name) -> const CitedProof* {
        auto it = cited_.find(name);
        if (it != cited_.end()) return it->second.get();
        const CorpusEntry* entry = nullptr;
        for (const auto& e : entries_)
            if (e.name == name && e.kind == "proof") entry = &e;
        if (!entry) return nullptr;
        const ProofDocument& p = proof(name);
        auto c = std::make_unique<CitedProof>(CitedProof{p.theory, p.derivation});
        return cited_.emplace(name, std::move(c)).first->second.get();
    };
}

CheckReport CorpusLibrary::check_proof(const std::string& name) const {
    const ProofDocument& p = proof(name);
    return check_derivation(p.derivation, p.theory, resolver());
}

}  // namespace clogic
