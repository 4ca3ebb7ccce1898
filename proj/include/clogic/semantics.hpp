#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clogic/substitution.hpp"
#include "clogic/syntax.hpp"

namespace clogic {

// A finite set with an endofunction (a discrete-time dynamical system).
struct FiniteIterator {
    std::vector<std::string> elems;
    std::vector<std::size_t> step;

    std::size_t size() const { return elems.size(); }
    std::optional<std::size_t> index_of(const std::string& label) const;
    static FiniteIterator plain_set(std::vector<std::string> elems);
};

// Membership flags over the lexicographically ordered product of some sorts.
struct Subset {
    std::vector<std::string> sorts;
    std::vector<char> members;

    std::size_t count() const;
    bool contains(std::size_t i) const { return members[i] != 0; }
    bool operator==(const Subset& o) const { return sorts == o.sorts && members == o.members; }
};

class FiniteModel {
public:
    static constexpr std::size_t kProductCap = 1000000;

    explicit FiniteModel(Signature sig);

    const Signature& signature() const { return sig_; }

    void set_sort(const std::string& sort, FiniteIterator it);
    // Table indexed by the lexicographic product of the argument sorts.
    void set_function(const std::string& fn, std::vector<std::size_t> table);
    void set_relation(const std::string& rel, std::vector<char> members);

    const FiniteIterator& carrier(const std::string& sort) const;
    const std::vector<std::size_t>& function_table(const std::string& fn) const;
    const std::vector<char>& relation_members(const std::string& rel) const;
    bool has_sort(const std::string& s) const { return sorts_.count(s) > 0; }
    bool has_function(const std::string& f) const { return funs_.count(f) > 0; }
    bool has_relation(const std::string& r) const { return rels_.count(r) > 0; }

    // Product helpers over a list of sorts.
    std::size_t product_size(const std::vector<std::string>& sorts) const;
    std::vector<std::size_t> decode(const std::vector<std::string>& sorts, std::size_t index) const;
    std::size_t encode(const std::vector<std::string>& sorts, const std::vector<std::size_t>& tuple) const;
    std::size_t product_step(const std::vector<std::string>& sorts, std::size_t index) const;
    std::string tuple_label(const std::vector<std::string>& sorts, std::size_t index) const;

private:
    Signature sig_;
    std::map<std::string, FiniteIterator> sorts_;
    std::map<std::string, std::vector<std::size_t>> funs_;
    std::map<std::string, std::vector<char>> rels_;
};

std::vector<std::string> validate_model(const FiniteModel& m);

// Greatest step-closed subset contained in u.
Subset interior(const FiniteModel& m, const Subset& u);
bool is_closed(const FiniteModel& m, const Subset& s);

// Value of the term at every point of the context's product, as element indices.
std::vector<std::size_t> interpret_term(const FiniteModel& m, const TermInContext& t);
Subset interpret_formula(const FiniteModel& m, const FormulaInContext& f);
bool satisfies(const FiniteModel& m, const Sequent& s);

// Compares the syntactic substitution path against composition (terms) or
// pullback (formulae); returns a description of the first disagreement.
std::optional<std::string> check_substitution_properties(const FiniteModel& m, const TermInContext& t,
                                                         const Substitution& theta);
std::optional<std::string> check_substitution_properties(const FiniteModel& m, const FormulaInContext& f,
                                                         const Substitution& theta);

}  // namespace clogic
