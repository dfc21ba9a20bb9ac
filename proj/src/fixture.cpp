#include "fintop/fixture.hpp"

#include "fintop/io.hpp"
#include "fintop/maps.hpp"
#include "fintop/normality.hpp"
#include "fintop/notation.hpp"
#include "fintop/predicates.hpp"
#include "fintop/weakopen.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fintop
{

std::string_view token( FixtureStatus s )
{
    switch ( s )
    {
    case FixtureStatus::Confirmed:
        return "Confirmed";
    case FixtureStatus::Discrepant:
        return "Discrepant";
    case FixtureStatus::InvalidInput:
        return "InvalidInput";
    }
    return "?";
}

std::size_t FixtureReport::mismatches() const
{
    return static_cast< std::size_t >(
        std::count_if( claims.begin(), claims.end(), []( const ClaimResult& r ) { return !r.match; } ) );
}

std::vector< Claim > parse_claims( std::string_view text, const std::string& source )
{
    std::vector< Claim > out;
    std::istringstream in{ std::string( text ) };
    std::string raw;
    unsigned number = 0;
    while ( std::getline( in, raw ) )
    {
        ++number;
        if ( !raw.empty() && raw.back() == '\r' )
            raw.pop_back();
        const auto body = trim( raw );
        if ( body.empty() || body.front() == '#' || body.starts_with( "fixture-id" ) )
            continue;
        std::vector< std::string > cells;
        std::istringstream row{ raw };
        for ( std::string cell; std::getline( row, cell, '\t' ); )
            cells.emplace_back( trim( cell ) );
        if ( cells.size() < 3 )
            throw InputError( source, number, "expected fixture-id, predicate, expected[, locator] separated by tabs" );
        out.push_back( { cells[ 0 ], cells[ 1 ], cells[ 2 ], cells.size() > 3 ? cells[ 3 ] : std::string{}, number } );
    }
    return out;
}

std::vector< Claim > load_claims( const std::filesystem::path& path )
{
    return parse_claims( read_file( path ), path.string() );
}

namespace
{

bool parse_bool( const std::string& text, bool& out )
{
    if ( text == "true" )
        out = true;
    else if ( text == "false" )
        out = false;
    else
        return false;
    return true;
}

std::string show( bool b ) { return b ? "true" : "false"; }

void compare_bool( ClaimResult& r, bool actual, const std::string& witness = {} )
{
    r.actual = show( actual );
    bool expected = false;
    if ( !parse_bool( r.claim.expected, expected ) )
    {
        r.diff = "expected value '" + r.claim.expected + "' is not true/false";
        return;
    }
    r.match = expected == actual;
    if ( !r.match )
    {
        r.diff = "expected=" + r.claim.expected + " actual=" + r.actual;
        if ( !witness.empty() )
            r.diff += " witness " + witness;
    }
}

SetPredicate set_predicate( const std::string& name )
{
    auto p = resolve_set_predicate( name );
    if ( !p )
        throw UnknownPredicateToken( name );
    return *p;
}

void compare_family( ClaimResult& r, const ClassTable& table, const SubsetFamily& actual )
{
    const auto& labels = table.space().labels();
    r.actual = format_family( actual, labels );
    std::vector< Subset > listed;
    std::vector< std::string > unrecognized;
    if ( !trim( r.claim.expected ).empty() )
        for ( const auto& literal : split_top_level( r.claim.expected ) )
        {
            try
            {
                listed.push_back( parse_subset( literal, labels ) );
            }
            catch ( const NotationError& )
            {
                unrecognized.emplace_back( trim( literal ) );
            }
        }
    const SubsetFamily expected{ table.size(), listed };
    std::vector< Subset > missing, extra;
    for ( Subset s : actual )
        if ( !expected.contains( s ) )
            missing.push_back( s );
    for ( Subset s : expected )
        if ( !actual.contains( s ) )
            extra.push_back( s );
    r.match = missing.empty() && extra.empty() && unrecognized.empty();
    if ( r.match )
        return;
    const auto list = [ & ]( const std::vector< Subset >& sets ) {
        std::string s;
        for ( Subset x : sets )
            s += ( s.empty() ? "" : "," ) + format_subset( x, labels );
        return s;
    };
    std::string bad;
    for ( const auto& u : unrecognized )
        bad += ( bad.empty() ? "" : "," ) + u;
    r.diff = "missing=[" + list( missing ) + "] extra=[" + list( extra ) + "] unrecognized=[" + bad + "]";
}

ClaimResult evaluate( const ClassTable& table, const Claim& claim )
{
    ClaimResult r{ claim, {}, false, {} };
    const auto& labels = table.space().labels();
    const Call call = parse_call( claim.predicate );
    if ( call.name == "valid" && !call.has_args )
    {
        compare_bool( r, true );
        return r;
    }
    if ( call.name == "family" )
    {
        if ( call.args.size() != 1 )
            throw std::invalid_argument( "family() takes one predicate token" );
        const SetPredicate p = set_predicate( call.args[ 0 ] );
        std::vector< Subset > members;
        for ( Subset s : all_subsets( table.size() ) )
            if ( p( table, s ) )
                members.push_back( s );
        compare_family( r, table, SubsetFamily{ table.size(), members } );
        return r;
    }
    if ( call.name == "separated" )
    {
        if ( call.args.size() != 5 )
            throw std::invalid_argument( "separated() takes a kind and four sets" );
        const auto kind = parse_open_kind( call.args[ 0 ] );
        if ( !kind )
            throw UnknownPredicateToken( call.args[ 0 ] );
        Subset sets[ 4 ];
        for ( int i = 0; i < 4; ++i )
            sets[ i ] = parse_subset( call.args[ i + 1 ], labels );
        compare_bool( r, separates( table, *kind, sets[ 0 ], sets[ 1 ], sets[ 2 ], sets[ 3 ] ) );
        return r;
    }
    if ( !call.has_args )
    {
        if ( !is_space_predicate( call.name ) )
            throw UnknownPredicateToken( call.name );
        const Verdict v = evaluate_space_predicate( table, call.name );
        compare_bool( r, v.holds, v.render( labels ) );
        return r;
    }
    if ( call.args.size() != 1 )
        throw std::invalid_argument( "'" + call.name + "' takes one set literal" );
    const SetPredicate p = set_predicate( call.name );
    compare_bool( r, p( table, parse_subset( call.args[ 0 ], labels ) ) );
    return r;
}

FixtureStatus status_of( const std::vector< ClaimResult >& claims )
{
    const bool all = std::all_of( claims.begin(), claims.end(), []( const ClaimResult& r ) { return r.match; } );
    return all ? FixtureStatus::Confirmed : FixtureStatus::Discrepant;
}

/// Invalid input: only `valid` claims are evaluated, the rest are recorded unevaluated.
FixtureReport invalid( std::string id, const std::string& reason, std::span< const Claim > claims )
{
    FixtureReport out{ std::move( id ), FixtureStatus::InvalidInput, reason, {} };
    for ( const Claim& c : claims )
    {
        ClaimResult r{ c, "n/a", false, "not evaluated: " + reason };
        if ( trim( c.predicate ) == "valid" )
        {
            compare_bool( r, false );
            if ( !r.match )
                r.diff += " (" + reason + ")";
        }
        out.claims.push_back( std::move( r ) );
    }
    return out;
}

FixtureReport run_map_fixture( const std::filesystem::path& path, const std::string& id,
                               std::span< const Claim > claims )
{
    const MapFile file = load_map( path );
    const SpaceFile from = load_space( file.from );
    const SpaceFile to = load_space( file.to );
    auto dom = from.validate();
    if ( auto* err = std::get_if< TopologyError >( &dom ) )
        return invalid( id, "domain: " + err->describe( from.labels ), claims );
    auto cod = to.validate();
    if ( auto* err = std::get_if< TopologyError >( &cod ) )
        return invalid( id, "codomain: " + err->describe( to.labels ), claims );
    const ClassTable dt{ std::get< Topology >( std::move( dom ) ) };
    const ClassTable ct{ std::get< Topology >( std::move( cod ) ) };
    const SpaceMap f{ dt, ct, file.resolve( from.labels, to.labels ) };

    FixtureReport out{ id, FixtureStatus::Confirmed, {}, {} };
    for ( const Claim& claim : claims )
    {
        ClaimResult r{ claim, {}, false, {} };
        const Call call = parse_call( claim.predicate );
        if ( call.name != "map" || call.args.size() != 1 )
            throw std::invalid_argument( "map fixtures take claims of the form map(CLASS), got '" + claim.predicate +
                                         "'" );
        const auto c = parse_map_class( call.args[ 0 ] );
        if ( !c )
            throw UnknownPredicateToken( call.args[ 0 ] );
        const Verdict v = check_map_class( f, *c );
        const auto scheme = scheme_of( *c );
        const bool in_cod = scheme && scheme->direction == MapScheme::Direction::Preimage;
        compare_bool( r, v.holds, v.render( in_cod ? to.labels : from.labels ) );
        out.claims.push_back( std::move( r ) );
    }
    out.status = status_of( out.claims );
    return out;
}

} // namespace

FixtureReport check_claims( const ClassTable& table, std::string id, std::span< const Claim > claims )
{
    FixtureReport out{ std::move( id ), FixtureStatus::Confirmed, {}, {} };
    for ( const Claim& c : claims )
        out.claims.push_back( evaluate( table, c ) );
    out.status = status_of( out.claims );
    return out;
}

FixtureReport run_fixture( const std::filesystem::path& corpus, const std::string& id,
                           std::span< const Claim > claims )
{
    const auto map_path = corpus / ( id + ".map" );
    if ( std::filesystem::exists( map_path ) )
        return run_map_fixture( map_path, id, claims );
    const SpaceFile file = load_space( corpus / ( id + ".top" ) );
    auto checked = file.validate();
    if ( auto* err = std::get_if< TopologyError >( &checked ) )
        return invalid( id, err->describe( file.labels ), claims );
    return check_claims( ClassTable{ std::get< Topology >( std::move( checked ) ) }, id, claims );
}

std::vector< FixtureReport > run_corpus( const std::filesystem::path& corpus )
{
    const auto claims = load_claims( corpus / "claims.tsv" );
    std::vector< std::string > order;
    std::map< std::string, std::vector< Claim > > grouped;
    for ( const Claim& c : claims )
    {
        if ( !grouped.contains( c.fixture ) )
            order.push_back( c.fixture );
        grouped[ c.fixture ].push_back( c );
    }
    std::vector< FixtureReport > out;
    for ( const auto& id : order )
        out.push_back( run_fixture( corpus, id, grouped[ id ] ) );
    return out;
}

std::string format_reports_tsv( std::span< const FixtureReport > reports )
{
    std::string out;
    for ( const auto& report : reports )
        for ( const auto& r : report.claims )
        {
            out += report.id;
            for ( const std::string_view cell : { token( report.status ), std::string_view( r.claim.locator ),
                                                  std::string_view( r.claim.predicate ),
                                                  std::string_view( r.claim.expected ), std::string_view( r.actual ),
                                                  r.match ? std::string_view( "match" ) : std::string_view( r.diff ) } )
                ( out += '\t' ) += cell;
            out += '\n';
        }
    return out;
}

} // namespace fintop
