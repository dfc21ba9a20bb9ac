#include "fintop/atlas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fintop
{

namespace
{

FamilyMask mask_of( const Topology& t )
{
    FamilyMask m;
    for ( Subset u : t.opens() )
        m.set( u.bits() );
    return m;
}

std::string hex_of( const FamilyMask& m, unsigned n )
{
    static constexpr char digits[] = "0123456789abcdef";
    const unsigned bits = 1U << n;
    const unsigned width = std::max( 1U, bits / 4 );
    std::string out;
    for ( unsigned d = width; d-- > 0; )
    {
        unsigned nibble = 0;
        for ( unsigned b = 0; b < 4; ++b )
        {
            const unsigned index = d * 4 + b;
            if ( index < bits && m.test( index ) )
                nibble |= 1U << b;
        }
        out += digits[ nibble ];
    }
    return out;
}

/// Open sets of the preorder `le` are its up-sets.
std::vector< Subset > up_sets( unsigned n, const std::vector< std::uint32_t >& above )
{
    std::vector< Subset > out;
    for ( Subset s : all_subsets( n ) )
    {
        bool up = true;
        for ( unsigned i = 0; up && i < n; ++i )
            if ( s.contains( i ) )
                up = Subset{ above[ i ] }.subset_of( s );
        if ( up )
            out.push_back( s );
    }
    return out;
}

} // namespace

std::string family_hex( const Topology& t ) { return hex_of( mask_of( t ), t.size() ); }

std::string space_id( const Topology& t ) { return "n" + std::to_string( t.size() ) + ":" + family_hex( t ); }

CanonicalSpace canonical_form( const Topology& t )
{
    const unsigned n = t.size();
    std::vector< unsigned > perm( n );
    std::iota( perm.begin(), perm.end(), 0U );
    std::vector< unsigned > best_perm = perm;
    std::string best_key;
    std::set< std::string > seen;
    do
    {
        FamilyMask moved;
        for ( Subset u : t.opens() )
            moved.set( permute( u, perm ).bits() );
        std::string key = hex_of( moved, n );
        if ( best_key.empty() || key < best_key )
        {
            best_key = key;
            best_perm = perm;
        }
        seen.insert( std::move( key ) );
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
    return { make_topology( n, relabel( t, best_perm ).opens().members() ), best_key, seen.size() };
}

std::vector< Topology > enumerate_topologies( unsigned n, bool up_to_homeo )
{
    if ( n == 0 || n > max_enumeration_points )
        throw ScopeTooLarge( "exhaustive enumeration supports 1 to " + std::to_string( max_enumeration_points ) +
                             " points, got " + std::to_string( n ) );

    // Finite topologies correspond to preorders: x ≤ y iff every open set containing x contains y.
    std::vector< std::pair< unsigned, unsigned > > pairs;
    for ( unsigned i = 0; i < n; ++i )
        for ( unsigned j = 0; j < n; ++j )
            if ( i != j )
                pairs.emplace_back( i, j );

    std::map< std::string, Topology > found;
    std::vector< std::uint32_t > above( n );
    for ( std::uint32_t r = 0; r < ( 1U << pairs.size() ); ++r )
    {
        for ( unsigned i = 0; i < n; ++i )
            above[ i ] = 1U << i;
        for ( std::size_t k = 0; k < pairs.size(); ++k )
            if ( r >> k & 1U )
                above[ pairs[ k ].first ] |= 1U << pairs[ k ].second;
        bool transitive = true;
        for ( unsigned i = 0; transitive && i < n; ++i )
            for ( unsigned j = 0; transitive && j < n; ++j )
                if ( above[ i ] >> j & 1U )
                    transitive = Subset{ above[ j ] }.subset_of( Subset{ above[ i ] } );
        if ( !transitive )
            continue;
        Topology t = make_topology( n, up_sets( n, above ) );
        if ( up_to_homeo )
        {
            auto c = canonical_form( t );
            found.emplace( c.key, std::move( c.topology ) );
        }
        else
            found.emplace( family_hex( t ), std::move( t ) );
    }

    std::vector< Topology > out;
    out.reserve( found.size() );
    for ( auto& [ key, t ] : found )
        out.push_back( std::move( t ) );
    return out;
}

} // namespace fintop
