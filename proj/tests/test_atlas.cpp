#include "doctest.h"
#include "spaces.hpp"

#include "fintop/atlas.hpp"
#include "fintop/maps.hpp"

#include <set>

using namespace fintop;
using namespace testing;

TEST_CASE( "labeled and canonical counts" )
{
    const std::array< std::size_t, 6 > labeled{ 0, 1, 4, 29, 355, 6942 };
    const std::array< std::size_t, 6 > canonical{ 0, 1, 3, 9, 33, 139 };
    for ( unsigned n = 1; n <= 5; ++n )
    {
        CHECK( enumerate_topologies( n ).size() == labeled[ n ] );
        CHECK( enumerate_topologies( n, true ).size() == canonical[ n ] );
    }
    CHECK_THROWS_AS( (void)enumerate_topologies( 6 ), ScopeTooLarge );
    CHECK_THROWS_AS( (void)enumerate_topologies( 0 ), ScopeTooLarge );
}

TEST_CASE( "enumeration agrees with brute force and is ordered by mask" )
{
    for ( int n = 1; n <= 4; ++n )
    {
        const auto spaces = enumerate_topologies( static_cast< unsigned >( n ) );
        std::set< std::string > from_engine;
        for ( const auto& t : spaces )
            from_engine.insert( family_hex( t ) );
        CHECK( from_engine.size() == spaces.size() );
        std::set< std::string > from_oracle;
        for ( const auto& t : oracle_spaces( n ) )
            from_oracle.insert( family_hex( t ) );
        CHECK( from_engine == from_oracle );
        for ( std::size_t i = 1; i < spaces.size(); ++i )
            CHECK( family_hex( spaces[ i - 1 ] ) < family_hex( spaces[ i ] ) );
    }
}

TEST_CASE( "space ids" )
{
    CHECK( space_id( indiscrete( 1 ) ) == "n1:3" );
    CHECK( space_id( indiscrete( 2 ) ) == "n2:9" );
    CHECK( space_id( discrete( 2 ) ) == "n2:f" );
    // {∅, {a}, {b}, {a,b}, X}: subsets 0, 1, 2, 3, 7
    CHECK( space_id( ex_2_14() ) == "n3:8f" );
}

TEST_CASE( "canonical forms" )
{
    const auto t = ex_2_14();
    const std::array< unsigned, 3 > swap{ 1, 0, 2 };
    CHECK( canonical_form( t ).key == canonical_form( relabel( t, swap ) ).key );
    CHECK( canonical_form( discrete( 2 ) ).key != canonical_form( indiscrete( 2 ) ).key );
    CHECK( canonical_form( t ).labeled_count == 3 );
    CHECK( canonical_form( discrete( 3 ) ).labeled_count == 1 );
    for ( unsigned n = 1; n <= 4; ++n )
        for ( const auto& s : enumerate_topologies( n ) )
        {
            const auto c = canonical_form( s );
            REQUIRE( canonical_form( c.topology ).key == c.key );
            REQUIRE( family_hex( c.topology ) == c.key );
            REQUIRE( c.topology.labels() == default_labels( n ) );
        }
}

TEST_CASE( "labeled counts of canonical classes add up" )
{
    for ( unsigned n = 1; n <= 4; ++n )
    {
        std::size_t total = 0;
        for ( const auto& c : enumerate_topologies( n, true ) )
            total += canonical_form( c ).labeled_count;
        CHECK( total == enumerate_topologies( n ).size() );
    }
}

TEST_CASE( "equal canonical keys exactly when some bijection is a homeomorphism" )
{
    for ( unsigned n = 1; n <= 3; ++n )
    {
        const auto spaces = enumerate_topologies( n );
        std::vector< ClassTable > tables;
        for ( const auto& t : spaces )
            tables.emplace_back( t );
        for ( std::size_t i = 0; i < spaces.size(); ++i )
            for ( std::size_t j = 0; j < spaces.size(); ++j )
            {
                bool homeomorphic = false;
                for_each_map( tables[ i ], tables[ j ], [ & ]( const SpaceMap& f ) {
                    homeomorphic = is_homeomorphism( f );
                    return !homeomorphic;
                } );
                REQUIRE( homeomorphic == ( canonical_form( spaces[ i ] ).key == canonical_form( spaces[ j ] ).key ) );
            }
    }
}
