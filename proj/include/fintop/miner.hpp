#pragma once

#include "fintop/genclass.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fintop
{

/// A boolean goal over predicate tokens, e.g. `pigdhat-closed(A) & !closed(A)`
/// or `softly-pigdhat & !quasi-pigdhat`. Operators `!`, `&`, `|` (also `¬`,
/// `∧`, `∨`) and parentheses; `&` binds tighter than `|`. Set predicates take
/// the single set variable `A`; normality kinds and pigdhat-t1/t2/t3 take no argument.
class Goal
{
public:
    struct Node;

    /// Throws UnknownPredicateToken for an unknown token, std::invalid_argument
    /// for malformed syntax.
    [[nodiscard]] static Goal parse( std::string_view text );

    [[nodiscard]] bool uses_set() const { return _uses_set; }
    [[nodiscard]] bool evaluate( const ClassTable& table, Subset a = {} ) const;
    [[nodiscard]] const std::string& text() const { return _text; }

    /// Atoms that must hold (positive) or fail (under a negation) for the goal
    /// to be a plain conjunction of literals; empty if the goal is not one.
    struct Literal
    {
        std::string token;
        bool on_set = false;
        bool positive = true;
    };
    [[nodiscard]] std::vector< Literal > literals() const;

private:
    std::shared_ptr< const Node > _root;
    bool _uses_set = false;
    std::string _text;
};

struct MineResult
{
    bool found = false;
    /// Witness space, relabeled to its canonical form.
    std::optional< Topology > space;
    std::string key;
    std::optional< Subset > set;
    /// Canonical spaces examined in full before the witness, over all n.
    std::size_t spaces_scanned = 0;
};

/// First canonical space with 1..max_n points (ordered by n, then canonical
/// key) satisfying the goal; for set goals, the first subset in canonical
/// order. The result does not depend on `jobs`. Throws ScopeTooLarge for max_n > 5.
[[nodiscard]] MineResult mine( const Goal& goal, unsigned max_n, unsigned jobs = 1 );

/// Mines `target(A) & !source(A)` for an implication arrow.
[[nodiscard]] MineResult find_strictness_witness( const SetArrow& arrow, unsigned max_n, unsigned jobs = 1 );

} // namespace fintop
