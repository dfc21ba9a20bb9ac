#include "fintop/predicates.hpp"

#include "fintop/normality.hpp"
#include "fintop/notation.hpp"

namespace fintop
{

namespace
{

std::optional< SeparationAxiom > parse_axiom( std::string_view token )
{
    if ( token == "pigdhat-t1" )
        return SeparationAxiom::T1;
    if ( token == "pigdhat-t2" )
        return SeparationAxiom::T2;
    if ( token == "pigdhat-t3" )
        return SeparationAxiom::T3;
    return std::nullopt;
}

} // namespace

Call parse_call( std::string_view text )
{
    text = trim( text );
    Call out;
    const auto open = text.find( '(' );
    if ( open == std::string_view::npos )
    {
        if ( text.find( ')' ) != std::string_view::npos )
            throw std::invalid_argument( "unbalanced ')' in '" + std::string( text ) + "'" );
        out.name = std::string( text );
        return out;
    }
    if ( text.back() != ')' )
        throw std::invalid_argument( "expected ')' at the end of '" + std::string( text ) + "'" );
    out.name = std::string( trim( text.substr( 0, open ) ) );
    out.has_args = true;
    const auto inner = text.substr( open + 1, text.size() - open - 2 );
    int depth = 0;
    for ( char c : inner )
    {
        depth += ( c == '(' ) - ( c == ')' );
        if ( depth < 0 )
            throw std::invalid_argument( "unbalanced ')' in '" + std::string( text ) + "'" );
    }
    if ( depth != 0 )
        throw std::invalid_argument( "unbalanced '(' in '" + std::string( text ) + "'" );
    if ( !trim( inner ).empty() )
        for ( const auto& arg : split_top_level( inner ) )
            out.args.emplace_back( trim( arg ) );
    return out;
}

bool is_space_predicate( std::string_view token )
{
    return parse_normality_kind( token ).has_value() || parse_axiom( token ).has_value();
}

Verdict evaluate_space_predicate( const ClassTable& table, std::string_view token )
{
    if ( auto k = parse_normality_kind( token ) )
        return is_normal_kind( table, *k );
    if ( auto a = parse_axiom( token ) )
        return separation_axiom( table, *a );
    throw UnknownPredicateToken( std::string( token ) );
}

} // namespace fintop
