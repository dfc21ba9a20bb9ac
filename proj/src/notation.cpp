#include "fintop/notation.hpp"

#include <algorithm>

namespace fintop
{

std::string_view trim( std::string_view text )
{
    const auto first = text.find_first_not_of( " \t\r\n" );
    if ( first == std::string_view::npos )
        return {};
    const auto last = text.find_last_not_of( " \t\r\n" );
    return text.substr( first, last - first + 1 );
}

std::string format_subset( Subset s, const std::vector< std::string >& labels )
{
    std::string out = "{";
    bool first = true;
    for ( unsigned p : points_of( s ) )
    {
        if ( !first )
            out += ',';
        out += p < labels.size() ? labels[ p ] : "#" + std::to_string( p );
        first = false;
    }
    return out + "}";
}

std::string format_family( const SubsetFamily& f, const std::vector< std::string >& labels )
{
    std::string out;
    for ( Subset s : f )
    {
        if ( !out.empty() )
            out += ',';
        out += format_subset( s, labels );
    }
    return out;
}

Subset parse_subset( std::string_view text, const std::vector< std::string >& labels )
{
    text = trim( text );
    if ( text.size() < 2 || text.front() != '{' || text.back() != '}' )
        throw NotationError( "expected a set literal like {a,b}, got '" + std::string( text ) + "'" );
    const auto body = trim( text.substr( 1, text.size() - 2 ) );
    if ( body.empty() )
        return Subset::empty();
    if ( body == "*" )
        return Subset::full( static_cast< unsigned >( labels.size() ) );

    Subset out;
    for ( const auto& token : split_top_level( body ) )
    {
        const auto name = trim( token );
        const auto it = std::find( labels.begin(), labels.end(), name );
        if ( it == labels.end() )
            throw NotationError( "unknown point '" + std::string( name ) + "'" );
        out = out.with( static_cast< unsigned >( it - labels.begin() ) );
    }
    return out;
}

std::vector< Subset > parse_subset_list( std::string_view text, const std::vector< std::string >& labels )
{
    std::vector< Subset > out;
    if ( trim( text ).empty() )
        return out;
    for ( const auto& item : split_top_level( text ) )
        out.push_back( parse_subset( item, labels ) );
    return out;
}

std::vector< std::string > split_top_level( std::string_view text, char separator )
{
    std::vector< std::string > out;
    int depth = 0;
    std::string current;
    for ( char c : text )
    {
        if ( c == '{' || c == '(' )
            ++depth;
        else if ( c == '}' || c == ')' )
            --depth;
        if ( c == separator && depth == 0 )
        {
            out.emplace_back( trim( current ) );
            current.clear();
            continue;
        }
        current += c;
    }
    out.emplace_back( trim( current ) );
    return out;
}

} // namespace fintop
