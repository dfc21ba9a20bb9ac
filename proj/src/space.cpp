#include "fintop/space.hpp"

#include "fintop/notation.hpp"

#include <algorithm>

namespace fintop
{

std::string TopologyError::describe( const std::vector< std::string >& labels ) const
{
    switch ( kind )
    {
    case TopologyErrorKind::BadPointCount:
        return "point count must be between 1 and " + std::to_string( max_points );
    case TopologyErrorKind::SubsetOutOfRange:
        return "open set mentions a point outside the ground set";
    case TopologyErrorKind::MissingEmpty:
        return "family does not contain the empty set";
    case TopologyErrorKind::MissingFull:
        return "family does not contain the full set";
    case TopologyErrorKind::NotClosedUnderUnion:
        return "not closed under union: " + format_subset( first, labels ) + " ∪ " +
               format_subset( second, labels ) + " = " + format_subset( first | second, labels ) + " is missing";
    case TopologyErrorKind::NotClosedUnderIntersection:
        return "not closed under intersection: " + format_subset( first, labels ) + " ∩ " +
               format_subset( second, labels ) + " = " + format_subset( first & second, labels ) + " is missing";
    }
    return "invalid topology";
}

std::vector< std::string > default_labels( unsigned n )
{
    std::vector< std::string > out;
    for ( unsigned i = 0; i < n; ++i )
        out.emplace_back( 1, static_cast< char >( 'a' + i ) );
    return out;
}

Topology::Topology( unsigned n, SubsetFamily opens, std::vector< std::string > labels )
    : _n{ n }, _opens{ std::move( opens ) }, _closeds{ _opens.complements() }, _labels{ std::move( labels ) }
{
    const std::size_t count = std::size_t{ 1 } << n;
    _interior.resize( count );
    _closure.resize( count );
    for ( Subset a : all_subsets( n ) )
    {
        Subset inner;
        for ( Subset u : _opens )
            if ( u.subset_of( a ) )
                inner |= u;
        _interior[ a.bits() ] = inner;
    }
    for ( Subset a : all_subsets( n ) )
        _closure[ a.bits() ] = _interior[ a.complement( n ).bits() ].complement( n );
}

Validation validate_topology( unsigned n, std::span< const Subset > family, std::vector< std::string > labels )
{
    if ( n == 0 || n > max_points )
        return TopologyError{ TopologyErrorKind::BadPointCount, {}, {} };
    const Subset full = Subset::full( n );
    for ( Subset s : family )
        if ( !s.subset_of( full ) )
            return TopologyError{ TopologyErrorKind::SubsetOutOfRange, s, {} };

    SubsetFamily opens{ n, family };
    if ( !opens.contains( Subset::empty() ) )
        return TopologyError{ TopologyErrorKind::MissingEmpty, {}, {} };
    if ( !opens.contains( full ) )
        return TopologyError{ TopologyErrorKind::MissingFull, {}, {} };

    const auto& members = opens.members();
    for ( std::size_t i = 0; i < members.size(); ++i )
        for ( std::size_t j = i + 1; j < members.size(); ++j )
        {
            if ( !opens.contains( members[ i ] | members[ j ] ) )
                return TopologyError{ TopologyErrorKind::NotClosedUnderUnion, members[ i ], members[ j ] };
            if ( !opens.contains( members[ i ] & members[ j ] ) )
                return TopologyError{ TopologyErrorKind::NotClosedUnderIntersection, members[ i ], members[ j ] };
        }

    if ( labels.empty() )
        labels = default_labels( n );
    labels.resize( n );
    return Topology{ n, std::move( opens ), std::move( labels ) };
}

Topology make_topology( unsigned n, std::span< const Subset > family, std::vector< std::string > labels )
{
    auto result = validate_topology( n, family, labels );
    if ( auto* error = std::get_if< TopologyError >( &result ) )
    {
        auto names = labels.empty() ? default_labels( std::min( n, max_points ) ) : labels;
        throw TopologyException( *error, error->describe( names ) );
    }
    return std::get< Topology >( std::move( result ) );
}

Topology make_topology( unsigned n, const FamilyMask& family, std::vector< std::string > labels )
{
    SubsetFamily members{ n, family };
    return make_topology( n, members.members(), std::move( labels ) );
}

Subset Subspace::restrict( Subset a ) const
{
    Subset out;
    for ( unsigned i = 0; i < embedding.size(); ++i )
        if ( a.contains( embedding[ i ] ) )
            out = out.with( i );
    return out;
}

Subset Subspace::lift( Subset a ) const
{
    Subset out;
    for ( unsigned i = 0; i < embedding.size(); ++i )
        if ( a.contains( i ) )
            out = out.with( embedding[ i ] );
    return out;
}

Subspace subspace( const Topology& t, Subset carrier )
{
    if ( carrier.is_empty() )
        throw std::invalid_argument( "subspace carrier is empty" );
    Subspace out{ t, points_of( carrier ) };
    std::vector< std::string > labels;
    for ( unsigned p : out.embedding )
        labels.push_back( t.labels()[ p ] );
    std::vector< Subset > opens;
    for ( Subset u : t.opens() )
        opens.push_back( out.restrict( u ) );
    out.topology = make_topology( static_cast< unsigned >( out.embedding.size() ), opens, std::move( labels ) );
    return out;
}

Subset permute( Subset a, std::span< const unsigned > perm )
{
    Subset out;
    for ( unsigned i = 0; i < perm.size(); ++i )
        if ( a.contains( i ) )
            out = out.with( perm[ i ] );
    return out;
}

Topology relabel( const Topology& t, std::span< const unsigned > perm )
{
    std::vector< Subset > opens;
    for ( Subset u : t.opens() )
        opens.push_back( permute( u, perm ) );
    std::vector< std::string > labels( t.size() );
    for ( unsigned i = 0; i < t.size(); ++i )
        labels[ perm[ i ] ] = t.labels()[ i ];
    return make_topology( t.size(), opens, std::move( labels ) );
}

} // namespace fintop
