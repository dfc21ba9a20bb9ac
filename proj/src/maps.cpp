#include "fintop/maps.hpp"

#include <stdexcept>

namespace fintop
{

SpaceMap::SpaceMap( const ClassTable& dom, const ClassTable& cod, std::vector< std::uint8_t > assign )
    : _dom{ &dom }, _cod{ &cod }, _assign{ std::move( assign ) }
{
    if ( _assign.size() != dom.size() )
        throw std::invalid_argument( "map assignment does not cover the domain" );
    for ( auto y : _assign )
        if ( y >= cod.size() )
            throw std::invalid_argument( "map assignment leaves the codomain" );
}

Subset SpaceMap::image( Subset a ) const
{
    Subset out;
    for ( unsigned x = 0; x < _assign.size(); ++x )
        if ( a.contains( x ) )
            out = out.with( _assign[ x ] );
    return out;
}

Subset SpaceMap::preimage( Subset b ) const
{
    Subset out;
    for ( unsigned x = 0; x < _assign.size(); ++x )
        if ( b.contains( _assign[ x ] ) )
            out = out.with( x );
    return out;
}

bool SpaceMap::injective() const { return image( Subset::full( dom().size() ) ).size() == dom().size(); }

bool SpaceMap::surjective() const { return image( Subset::full( dom().size() ) ) == Subset::full( cod().size() ); }

std::string SpaceMap::describe() const
{
    std::string out;
    for ( unsigned x = 0; x < _assign.size(); ++x )
    {
        if ( x )
            out += ", ";
        out += dom().space().labels()[ x ] + "->" + cod().space().labels()[ _assign[ x ] ];
    }
    return out;
}

std::string SpaceMap::code() const
{
    std::string out;
    for ( auto y : _assign )
        out += static_cast< char >( '0' + y );
    return out;
}

namespace
{

struct ClassInfo
{
    std::string_view token;
    std::optional< MapScheme > scheme;
};

using D = MapScheme::Direction;
using S = MapScheme::Source;

constexpr std::array< ClassInfo, all_map_classes.size() > class_info{ {
    { "continuous", MapScheme{ D::Preimage, S::Closed, "closed" } },
    { "open", MapScheme{ D::Image, S::Open, "open" } },
    { "closed", MapScheme{ D::Image, S::Closed, "closed" } },
    { "almost-closed", MapScheme{ D::Image, S::RegularClosed, "closed" } },
    { "pigdhat-closed", MapScheme{ D::Image, S::Closed, "pigdhat-closed" } },
    { "almost-pigdhat-closed", MapScheme{ D::Image, S::RegularClosed, "pigdhat-closed" } },
    { "pi-continuous", MapScheme{ D::Preimage, S::Closed, "pi-closed" } },
    { "pigalpha-continuous", MapScheme{ D::Preimage, S::Closed, "pigalpha-closed" } },
    { "pigdhat-continuous", MapScheme{ D::Preimage, S::Closed, "pigdhat-closed" } },
    { "almost-continuous", MapScheme{ D::Preimage, S::RegularClosed, "closed" } },
    { "almost-pi-continuous", MapScheme{ D::Preimage, S::RegularClosed, "pi-closed" } },
    { "almost-pigalpha-continuous", MapScheme{ D::Preimage, S::RegularClosed, "pigalpha-closed" } },
    { "almost-pigdhat-continuous", MapScheme{ D::Preimage, S::RegularClosed, "pigdhat-closed" } },
    { "rc-preserving", MapScheme{ D::Image, S::RegularClosed, "rc-closed" } },
    { "softly-pigdhat-irresolute", std::nullopt },
    { "alpha-closed", MapScheme{ D::Image, S::Closed, "alpha-closed" } },
    { "galpha-closed", MapScheme{ D::Image, S::Closed, "alphag-closed" } },
    { "pigalpha-closed", MapScheme{ D::Image, S::Closed, "pigalpha-closed" } },
    { "pig-closed", MapScheme{ D::Image, S::Closed, "pig-closed" } },
    { "almost-dhat-closed", MapScheme{ D::Image, S::RegularClosed, "dhat-closed" } },
    { "almost-gdhat-closed", MapScheme{ D::Image, S::RegularClosed, "gdhat-closed" } },
    { "almost-pigalpha-closed", MapScheme{ D::Image, S::RegularClosed, "pigalpha-closed" } },
    { "pigdhat-irresolute", MapScheme{ D::Preimage, S::PiGDhatClosed, "pigdhat-closed" } },
} };

const SubsetFamily& source_family( const ClassTable& table, S source )
{
    switch ( source )
    {
    case S::Open: return table.open_family( OpenKind::Open );
    case S::Closed: return table.space().closeds();
    case S::RegularClosed: return table.regular_closed();
    case S::PiGDhatClosed: return table.family( ClosedClass::PiGDhat );
    }
    throw std::logic_error( "unhandled map source" );
}

Verdict check_irresolute( const SpaceMap& f )
{
    const ClassTable& dom = f.dom();
    const ClassTable& cod = f.cod();
    for ( unsigned x = 0; x < dom.size(); ++x )
        for ( Subset v : all_subsets( cod.size() ) )
        {
            if ( !is_pigdhat_neighbourhood( cod, f( x ), v ) )
                continue;
            const Subset hull = dom.closure( ClosureKind::PiGDhatCl, f.preimage( v ) );
            if ( !is_pigdhat_neighbourhood( dom, x, hull ) )
                return Verdict::fail( { { "x", Subset::singleton( x ) }, { "V", v } } );
        }
    return Verdict::pass();
}

} // namespace

std::string_view token( MapClass c ) { return class_info[ static_cast< std::size_t >( c ) ].token; }

std::optional< MapClass > parse_map_class( std::string_view text )
{
    for ( MapClass c : all_map_classes )
        if ( token( c ) == text )
            return c;
    return std::nullopt;
}

std::optional< MapScheme > scheme_of( MapClass c ) { return class_info[ static_cast< std::size_t >( c ) ].scheme; }

Verdict check_map_class( const SpaceMap& f, MapClass c )
{
    const auto scheme = scheme_of( c );
    if ( !scheme )
        return check_irresolute( f );
    const auto target = resolve_set_predicate( scheme->target );
    if ( scheme->direction == D::Image )
    {
        for ( Subset s : source_family( f.dom(), scheme->source ) )
            if ( !( *target )( f.cod(), f.image( s ) ) )
                return Verdict::fail( { { "F", s } } );
    }
    else
    {
        for ( Subset s : source_family( f.cod(), scheme->source ) )
            if ( !( *target )( f.dom(), f.preimage( s ) ) )
                return Verdict::fail( { { "F", s } } );
    }
    return Verdict::pass();
}

bool is_homeomorphism( const SpaceMap& f )
{
    return f.injective() && f.surjective() && is_map_class( f, MapClass::Continuous ) &&
           is_map_class( f, MapClass::OpenMap );
}

bool is_pigdhat_neighbourhood( const ClassTable& table, unsigned y, Subset v )
{
    if ( !v.contains( y ) )
        return false;
    for ( Subset w : table.open_family( OpenKind::PiGDhatOpen ) )
        if ( w.contains( y ) && w.subset_of( v ) )
            return true;
    return false;
}

void for_each_map( const ClassTable& dom, const ClassTable& cod, const std::function< bool( const SpaceMap& ) >& visit,
                   std::optional< unsigned > leading )
{
    const unsigned n = dom.size();
    const unsigned m = cod.size();
    std::vector< std::uint8_t > assign( n, 0 );
    if ( leading )
    {
        if ( *leading >= m )
            return;
        assign[ 0 ] = static_cast< std::uint8_t >( *leading );
    }
    const int floor = leading ? 1 : 0;
    while ( visit( SpaceMap{ dom, cod, assign } ) )
    {
        // odometer with the last point least significant
        int i = static_cast< int >( n ) - 1;
        for ( ; i >= floor && ++assign[ i ] == m; --i )
            assign[ i ] = 0;
        if ( i < floor )
            return;
    }
}

std::vector< SpaceMap > enumerate_maps( const ClassTable& dom, const ClassTable& cod, std::span< const MapClass > filter )
{
    std::vector< SpaceMap > out;
    for_each_map( dom, cod, [ & ]( const SpaceMap& f ) {
        for ( MapClass c : filter )
            if ( !is_map_class( f, c ) )
                return true;
        out.push_back( f );
        return true;
    } );
    return out;
}

std::span< const MapArrow > map_arrows()
{
    using M = MapClass;
    static constexpr std::array< MapArrow, 18 > arrows{ {
        { M::ClosedMap, M::AlmostClosed },
        { M::AlphaClosed, M::AlmostDhatClosed },
        { M::GAlphaClosed, M::AlmostGDhatClosed },
        { M::PiGAlphaClosed, M::AlmostPiGDhatClosed },
        { M::ClosedMap, M::AlphaClosed },
        { M::AlphaClosed, M::GAlphaClosed },
        { M::GAlphaClosed, M::PiGAlphaClosed },
        { M::AlmostClosed, M::AlmostDhatClosed },
        { M::AlmostDhatClosed, M::AlmostGDhatClosed },
        { M::AlmostGDhatClosed, M::AlmostPiGDhatClosed },
        { M::ClosedMap, M::PiGDhatClosed },
        { M::PiGAlphaClosed, M::PiGDhatClosed },
        { M::PiGDhatClosed, M::AlmostPiGDhatClosed },
        { M::PiGAlphaClosed, M::AlmostPiGAlphaClosed },
        { M::Continuous, M::AlmostContinuous },
        { M::PiContinuous, M::Continuous },
        { M::PiContinuous, M::AlmostPiContinuous },
        { M::PiGDhatContinuous, M::AlmostPiGDhatContinuous },
    } };
    return arrows;
}

std::optional< MapArrow > check_map_diagram( const SpaceMap& f )
{
    for ( const MapArrow& arrow : map_arrows() )
        if ( is_map_class( f, arrow.from ) && !is_map_class( f, arrow.to ) )
            return arrow;
    return std::nullopt;
}

} // namespace fintop
