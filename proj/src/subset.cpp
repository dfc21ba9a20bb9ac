#include "fintop/subset.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fintop
{

namespace
{

std::array< std::vector< Subset >, max_points + 1 > make_orders()
{
    std::array< std::vector< Subset >, max_points + 1 > orders;
    for ( unsigned n = 0; n <= max_points; ++n )
    {
        auto& order = orders[ n ];
        for ( std::uint32_t bits = 0; bits < ( 1U << n ); ++bits )
            order.emplace_back( bits );
        std::sort( order.begin(), order.end() );
    }
    return orders;
}

} // namespace

std::span< const Subset > all_subsets( unsigned n )
{
    static const auto orders = make_orders();
    if ( n > max_points )
        throw std::out_of_range( "ground set larger than " + std::to_string( max_points ) + " points" );
    return orders[ n ];
}

std::vector< unsigned > points_of( Subset s )
{
    std::vector< unsigned > out;
    for ( std::uint32_t bits = s.bits(); bits != 0; bits &= bits - 1 )
        out.push_back( static_cast< unsigned >( std::countr_zero( bits ) ) );
    return out;
}

SubsetFamily::SubsetFamily( unsigned n, const FamilyMask& mask ) : _n{ n }, _mask{ mask }
{
    for ( Subset s : all_subsets( n ) )
        if ( _mask.test( s.bits() ) )
            _members.push_back( s );
}

SubsetFamily::SubsetFamily( unsigned n, std::span< const Subset > members ) : _n{ n }
{
    const Subset full = Subset::full( n );
    for ( Subset s : members )
    {
        if ( !s.subset_of( full ) )
            throw std::out_of_range( "subset outside the ground set" );
        _mask.set( s.bits() );
    }
    for ( Subset s : all_subsets( n ) )
        if ( _mask.test( s.bits() ) )
            _members.push_back( s );
}

SubsetFamily SubsetFamily::complements() const
{
    FamilyMask out;
    for ( Subset s : _members )
        out.set( s.complement( _n ).bits() );
    return { _n, out };
}

} // namespace fintop
