#include "fintop/io.hpp"

#include "fintop/notation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace fintop
{

InputError::InputError( const std::string& source, unsigned line, const std::string& reason )
    : std::runtime_error( line ? source + ":" + std::to_string( line ) + ": " + reason : source + ": " + reason ),
      _line{ line }
{
}

namespace
{

struct Line
{
    unsigned number;
    std::string key;
    std::string value;
};

/// Non-blank lines as `key: value`, comments stripped.
std::vector< Line > key_lines( std::string_view text, const std::string& source )
{
    std::vector< Line > out;
    std::istringstream in{ std::string( text ) };
    std::string raw;
    unsigned number = 0;
    while ( std::getline( in, raw ) )
    {
        ++number;
        if ( const auto hash = raw.find( '#' ); hash != std::string::npos )
            raw.erase( hash );
        const auto body = trim( raw );
        if ( body.empty() )
            continue;
        const auto colon = body.find( ':' );
        if ( colon == std::string_view::npos )
            throw InputError( source, number, "expected 'key: value', got '" + std::string( body ) + "'" );
        out.push_back( { number, std::string( trim( body.substr( 0, colon ) ) ),
                         std::string( trim( body.substr( colon + 1 ) ) ) } );
    }
    return out;
}

bool valid_label( const std::string& label )
{
    return !label.empty() && std::none_of( label.begin(), label.end(), []( char c ) {
        return c == '{' || c == '}' || c == ',' || c == '*' || c == '(' || c == ')' || c == '-' || c == '>' ||
               std::isspace( static_cast< unsigned char >( c ) );
    } );
}

} // namespace

SpaceFile parse_space( std::string_view text, const std::string& source )
{
    SpaceFile out;
    bool have_points = false;
    for ( const Line& line : key_lines( text, source ) )
    {
        if ( line.key == "points" )
        {
            if ( have_points )
                throw InputError( source, line.number, "second 'points' line" );
            have_points = true;
            std::set< std::string > seen;
            for ( const auto& label : split_top_level( line.value ) )
            {
                std::string name{ trim( label ) };
                if ( !valid_label( name ) )
                    throw InputError( source, line.number, "bad point label '" + name + "'" );
                if ( !seen.insert( name ).second )
                    throw InputError( source, line.number, "duplicate point '" + name + "'" );
                out.labels.push_back( std::move( name ) );
            }
            if ( out.labels.empty() || out.labels.size() > max_points )
                throw InputError( source, line.number,
                                  "need 1 to " + std::to_string( max_points ) + " points, got " +
                                      std::to_string( out.labels.size() ) );
        }
        else if ( line.key == "open" )
        {
            if ( !have_points )
                throw InputError( source, line.number, "'open' before 'points'" );
            try
            {
                out.family.push_back( parse_subset( line.value, out.labels ) );
            }
            catch ( const NotationError& e )
            {
                throw InputError( source, line.number, e.what() );
            }
        }
        else
            throw InputError( source, line.number, "unknown key '" + line.key + "'" );
    }
    if ( !have_points )
        throw InputError( source, 0, "missing 'points' line" );
    return out;
}

std::string read_file( const std::filesystem::path& path )
{
    std::ifstream in{ path, std::ios::binary };
    if ( !in )
        throw InputError( path.string(), 0, "cannot open file" );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SpaceFile load_space( const std::filesystem::path& path ) { return parse_space( read_file( path ), path.string() ); }

std::string format_space( const Topology& t )
{
    std::string out = "points: ";
    for ( unsigned i = 0; i < t.size(); ++i )
        out += ( i ? "," : "" ) + t.labels()[ i ];
    out += '\n';
    for ( Subset u : t.opens() )
        out += "open: " + format_subset( u, t.labels() ) + '\n';
    return out;
}

MapFile parse_map( std::string_view text, const std::string& source, const std::filesystem::path& base )
{
    MapFile out;
    out.source = source;
    for ( const Line& line : key_lines( text, source ) )
    {
        if ( line.key == "from" || line.key == "to" )
        {
            auto& slot = line.key == "from" ? out.from : out.to;
            if ( !slot.empty() )
                throw InputError( source, line.number, "second '" + line.key + "' line" );
            if ( line.value.empty() )
                throw InputError( source, line.number, "empty path" );
            const std::filesystem::path p{ line.value };
            slot = p.is_absolute() ? p : base / p;
        }
        else if ( line.key == "assign" )
        {
            if ( out.assign_line )
                throw InputError( source, line.number, "second 'assign' line" );
            out.assign_line = line.number;
            for ( const auto& item : split_top_level( line.value ) )
            {
                const auto arrow = item.find( "->" );
                if ( arrow == std::string::npos )
                    throw InputError( source, line.number, "expected 'x->y', got '" + std::string( trim( item ) ) + "'" );
                out.assign.emplace_back( std::string( trim( std::string_view{ item }.substr( 0, arrow ) ) ),
                                         std::string( trim( std::string_view{ item }.substr( arrow + 2 ) ) ) );
            }
        }
        else
            throw InputError( source, line.number, "unknown key '" + line.key + "'" );
    }
    if ( out.from.empty() )
        throw InputError( source, 0, "missing 'from' line" );
    if ( out.to.empty() )
        throw InputError( source, 0, "missing 'to' line" );
    if ( !out.assign_line )
        throw InputError( source, 0, "missing 'assign' line" );
    return out;
}

MapFile load_map( const std::filesystem::path& path )
{
    return parse_map( read_file( path ), path.string(), path.parent_path() );
}

std::vector< std::uint8_t > MapFile::resolve( const std::vector< std::string >& dom,
                                              const std::vector< std::string >& cod ) const
{
    const auto index = []( const std::vector< std::string >& labels, const std::string& name ) -> int {
        const auto it = std::find( labels.begin(), labels.end(), name );
        return it == labels.end() ? -1 : static_cast< int >( it - labels.begin() );
    };
    std::vector< int > image( dom.size(), -1 );
    for ( const auto& [ x, y ] : assign )
    {
        const int i = index( dom, x );
        const int j = index( cod, y );
        if ( i < 0 )
            throw InputError( source, assign_line, "unknown domain point '" + x + "'" );
        if ( j < 0 )
            throw InputError( source, assign_line, "unknown codomain point '" + y + "'" );
        if ( image[ i ] >= 0 )
            throw InputError( source, assign_line, "point '" + x + "' assigned twice" );
        image[ i ] = j;
    }
    std::vector< std::uint8_t > out;
    for ( std::size_t i = 0; i < image.size(); ++i )
    {
        if ( image[ i ] < 0 )
            throw InputError( source, assign_line, "point '" + dom[ i ] + "' has no image" );
        out.push_back( static_cast< std::uint8_t >( image[ i ] ) );
    }
    return out;
}

} // namespace fintop
