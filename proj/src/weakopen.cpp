#include "fintop/weakopen.hpp"

#include "fintop/genclass.hpp"

#include <stdexcept>

namespace fintop
{

namespace
{

constexpr std::array< std::string_view, all_open_kinds.size() > open_tokens{
    "open", "ro", "pre", "semi", "alpha", "sp", "pi", "g", "w", "d", "dhat", "pigdhat",
};

constexpr std::array< std::string_view, all_closure_kinds.size() > closure_tokens{
    "cl", "scl", "pcl", "alphacl", "spcl", "dhatcl", "pigdhatcl",
};

} // namespace

std::string_view token( OpenKind k ) { return open_tokens[ static_cast< std::size_t >( k ) ]; }

std::string_view token( ClosureKind k ) { return closure_tokens[ static_cast< std::size_t >( k ) ]; }

std::optional< OpenKind > parse_open_kind( std::string_view text )
{
    for ( OpenKind k : all_open_kinds )
        if ( token( k ) == text )
            return k;
    return std::nullopt;
}

OpenKind open_side( ClosureKind k )
{
    switch ( k )
    {
    case ClosureKind::Cl: return OpenKind::Open;
    case ClosureKind::SCl: return OpenKind::SemiOpen;
    case ClosureKind::PCl: return OpenKind::PreOpen;
    case ClosureKind::AlphaCl: return OpenKind::AlphaOpen;
    case ClosureKind::SPCl: return OpenKind::SemiPreOpen;
    case ClosureKind::DhatCl: return OpenKind::DhatOpen;
    case ClosureKind::PiGDhatCl: return OpenKind::PiGDhatOpen;
    }
    throw std::invalid_argument( "unknown closure kind" );
}

bool is_kind_open( const Topology& t, OpenKind k, Subset a )
{
    const auto cl = [ & ]( Subset s ) { return t.closure( s ); };
    const auto in = [ & ]( Subset s ) { return t.interior( s ); };
    switch ( k )
    {
    case OpenKind::Open: return t.is_open( a );
    case OpenKind::RegularOpen: return a == in( cl( a ) );
    case OpenKind::PreOpen: return a.subset_of( in( cl( a ) ) );
    case OpenKind::SemiOpen: return a.subset_of( cl( in( a ) ) );
    case OpenKind::AlphaOpen: return a.subset_of( in( cl( in( a ) ) ) );
    case OpenKind::SemiPreOpen: return a.subset_of( cl( in( cl( a ) ) ) );
    case OpenKind::PiOpen: return pi_open_family( t ).contains( a );
    default: break;
    }
    throw std::invalid_argument( "open kind '" + std::string( token( k ) ) + "' needs a class table" );
}

bool is_kind_open( const ClassTable& table, OpenKind k, Subset a ) { return table.is_open( k, a ); }

SubsetFamily pi_open_family( const Topology& t )
{
    std::vector< Subset > members;
    FamilyMask seen;
    for ( Subset u : t.opens() )
        if ( u == t.interior( t.closure( u ) ) )
        {
            members.push_back( u );
            seen.set( u.bits() );
        }
    // Union closure by worklist; the family is finite so this terminates.
    for ( std::size_t i = 0; i < members.size(); ++i )
        for ( std::size_t j = 0; j < i; ++j )
        {
            const Subset joined = members[ i ] | members[ j ];
            if ( !seen.test( joined.bits() ) )
            {
                seen.set( joined.bits() );
                members.push_back( joined );
            }
        }
    return { t.size(), seen };
}

Subset intersect_supersets( const SubsetFamily& closed, Subset a )
{
    Subset out = Subset::full( closed.ground_size() );
    for ( Subset f : closed )
        if ( a.subset_of( f ) )
            out &= f;
    return out;
}

Subset kind_closure( const ClassTable& table, ClosureKind k, Subset a ) { return table.closure( k, a ); }

Subset kind_interior( const ClassTable& table, ClosureKind k, Subset a ) { return table.interior( k, a ); }

} // namespace fintop
