#pragma once

#include "fintop/genclass.hpp"
#include "fintop/verdict.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fintop
{

class UnknownPredicateToken : public std::invalid_argument
{
public:
    explicit UnknownPredicateToken( const std::string& token )
        : std::invalid_argument( "unknown predicate token '" + token + "'" ), _token{ token } {}
    [[nodiscard]] const std::string& token() const { return _token; }

private:
    std::string _token;
};

/// `name` or `name(arg, arg, ...)`; arguments may themselves hold set literals.
struct Call
{
    std::string name;
    std::vector< std::string > args;
    bool has_args = false;
};

/// Throws std::invalid_argument on unbalanced parentheses or trailing text.
[[nodiscard]] Call parse_call( std::string_view text );

/// Whole-space predicates: the normality tokens and pigdhat-t1, pigdhat-t2, pigdhat-t3.
[[nodiscard]] bool is_space_predicate( std::string_view token );

/// Throws UnknownPredicateToken if `token` is not a space predicate.
[[nodiscard]] Verdict evaluate_space_predicate( const ClassTable& table, std::string_view token );

} // namespace fintop
