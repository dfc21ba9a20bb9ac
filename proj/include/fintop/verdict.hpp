#pragma once

#include "fintop/notation.hpp"
#include "fintop/subset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fintop
{

/// Outcome of a predicate or theorem check. Witness sets are named by role
/// ("A", "B", "U", "V", ...) so a failure can be replayed.
struct Verdict
{
    bool holds = true;
    std::vector< std::pair< std::string, Subset > > witness;
    std::string detail;

    [[nodiscard]] static Verdict pass() { return {}; }
    [[nodiscard]] static Verdict fail( std::vector< std::pair< std::string, Subset > > witness, std::string detail = {} )
    {
        return { false, std::move( witness ), std::move( detail ) };
    }

    [[nodiscard]] std::optional< Subset > get( std::string_view role ) const
    {
        for ( const auto& [ name, set ] : witness )
            if ( name == role )
                return set;
        return std::nullopt;
    }

    /// `A={a} B={c}` followed by the detail text, if any.
    [[nodiscard]] std::string render( const std::vector< std::string >& labels ) const
    {
        std::string out;
        for ( const auto& [ name, set ] : witness )
        {
            if ( !out.empty() )
                out += ' ';
            out += name + "=" + format_subset( set, labels );
        }
        if ( !detail.empty() )
            out += out.empty() ? detail : " " + detail;
        return out;
    }
};

} // namespace fintop
