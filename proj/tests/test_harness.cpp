#include "doctest.h"

#include "fintop/harness.hpp"

using namespace fintop;

namespace
{

std::vector< std::string > aliases( const std::vector< TheoremId >& ids )
{
    std::vector< std::string > out;
    for ( TheoremId id : ids )
        out.emplace_back( info( id ).alias );
    return out;
}

bool same( const std::vector< TheoremLedger >& a, const std::vector< TheoremLedger >& b )
{
    if ( a.size() != b.size() )
        return false;
    for ( std::size_t i = 0; i < a.size(); ++i )
    {
        const auto& x = a[ i ];
        const auto& y = b[ i ];
        if ( x.id != y.id || x.pass != y.pass || x.vacuous != y.vacuous || x.counterexamples != y.counterexamples ||
             x.instances != y.instances || x.first.has_value() != y.first.has_value() )
            return false;
        if ( x.first && ( x.first->dom != y.first->dom || x.first->cod != y.first->cod ||
                          x.first->map != y.first->map || x.first->witness != y.first->witness ) )
            return false;
    }
    return true;
}

} // namespace

TEST_CASE( "theorem lists" )
{
    CHECK( aliases( parse_theorem_list( "5.1-5.8" ) ) ==
           std::vector< std::string >{ "5.1", "5.2", "5.3", "5.3s", "5.4", "5.5", "5.5p", "5.6", "5.6p", "5.7", "5.8" } );
    CHECK( aliases( parse_theorem_list( "4.5, cover,3.15" ) ) == std::vector< std::string >{ "3.13", "3.15", "4.5" } );
    CHECK( parse_theorem_list( "all" ).size() == all_theorems.size() );
    CHECK_THROWS_AS( (void)parse_theorem_list( "9.9" ), std::invalid_argument );
    CHECK_THROWS_AS( (void)parse_theorem_list( "no-such-theorem" ), std::invalid_argument );
    for ( TheoremId id : all_theorems )
    {
        CHECK( parse_theorem_list( info( id ).token ) == std::vector{ id } );
        CHECK( info( id ).id == id );
    }
}

TEST_CASE( "identity on one point satisfies the pi-continuous surjection theorem" )
{
    HarnessOptions options;
    options.max_points = 1;
    options.map_points = 1;
    const std::array ids{ TheoremId::PiContinuousSurjection };
    const auto ledger = run_harness( ids, options );
    REQUIRE( ledger.size() == 1 );
    CHECK( ledger[ 0 ].pass == 1 );
    CHECK( ledger[ 0 ].vacuous == 0 );
    CHECK( ledger[ 0 ].counterexamples == 0 );
}

TEST_CASE( "scope three covers every space pair and every map" )
{
    HarnessOptions options;
    const auto ids = parse_theorem_list( "all" );
    const auto ledger = run_harness( ids, options );
    for ( const auto& l : ledger )
    {
        switch ( info( l.id ).scope )
        {
        case Scope::Map:
            CHECK( l.instances.at( { 3, 3 } ) == 29 * 29 * 27 );
            CHECK( l.instances.at( { 2, 3 } ) == 4 * 29 * 9 );
            CHECK( l.total() == 24872 );
            break;
        case Scope::Space: CHECK( l.total() == 34 ); break;
        case Scope::Subspace: CHECK( l.total() > 0 ); break;
        }
        CHECK_MESSAGE( l.counterexamples == 0, info( l.id ).token );
    }
}

TEST_CASE( "ledgers do not depend on the number of jobs" )
{
    HarnessOptions one;
    one.max_points = 4;
    HarnessOptions many = one;
    many.jobs = 6;
    const auto ids = parse_theorem_list( "all" );
    CHECK( same( run_harness( ids, one ), run_harness( ids, many ) ) );
}

TEST_CASE( "trace and open-set characterizations fail on four points" )
{
    HarnessOptions options;
    options.max_points = 4;
    const auto ledger = run_harness( parse_theorem_list( "closed-domain-trace,pigdhat-open-char" ), options );
    REQUIRE( ledger.size() == 2 );
    // τ = P({a,b,c}) ∪ {X}; the trace of the πgD̂-open set {c,d} on M = {a,b,d} is {d},
    // whose complement {a,b} in M is π-open there but has D̂-closure M.
    REQUIRE( ledger[ 0 ].first );
    CHECK( ledger[ 0 ].first->dom == "n4:80ff" );
    CHECK( ledger[ 0 ].first->cod == "{a,b,d}" );
    CHECK( ledger[ 0 ].first->witness == "A={c,d}" );
    // τ = {∅, {a}, {b}, {a,b}, X}: {c,d} is not πgD̂-open, yet its πgD̂-interior is {c,d}
    REQUIRE( ledger[ 1 ].first );
    CHECK( ledger[ 1 ].first->dom == "n4:800f" );
    CHECK( ledger[ 1 ].first->witness == "A={c,d}" );
}

TEST_CASE( "budget" )
{
    HarnessOptions options;
    options.map_points = 4;
    const auto ids = parse_theorem_list( "5.1" );
    CHECK( estimate_cost( ids, options ) > options.budget );
    CHECK_THROWS_AS( (void)run_harness( ids, options ), ScopeTooLarge );
    options.map_points = 1;
    options.budget = 0;
    CHECK_THROWS_AS( (void)run_harness( ids, options ), ScopeTooLarge );
}
