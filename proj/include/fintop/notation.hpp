#pragma once

#include "fintop/subset.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fintop
{

/// Set-literal syntax shared by files, the command line and reports:
/// `{a,b}` lists labels, `{}` is empty, `{*}` is the full set.
[[nodiscard]] std::string format_subset( Subset s, const std::vector< std::string >& labels );

/// One literal per member, comma-separated, in family order.
[[nodiscard]] std::string format_family( const SubsetFamily& f, const std::vector< std::string >& labels );

class NotationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Parses a set literal against `labels`; throws NotationError naming the bad token.
[[nodiscard]] Subset parse_subset( std::string_view text, const std::vector< std::string >& labels );

/// Parses a comma-separated list of set literals, e.g. `{},{a},{a,b}`.
[[nodiscard]] std::vector< Subset > parse_subset_list( std::string_view text,
                                                       const std::vector< std::string >& labels );

/// Splits on commas that are not nested inside braces or parentheses.
[[nodiscard]] std::vector< std::string > split_top_level( std::string_view text, char separator = ',' );

[[nodiscard]] std::string_view trim( std::string_view text );

} // namespace fintop
