// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fintop/atlas.hpp"
#include "fintop/fixture.hpp"
#include "fintop/harness.hpp"
#include "fintop/miner.hpp"
#include "fintop/normality.hpp"
#include "fintop/weakopen.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

using namespace fintop;

namespace
{

// Time limits, in seconds.
constexpr double fixture_limit = 1.0;
constexpr double diagram_limit = 60.0;
constexpr double harness_limit = 120.0;

const std::filesystem::path corpus{ FINTOP_CORPUS_DIR };

struct Outcome
{
    bool pass = true;
    std::string detail;

    void require( bool ok, const std::string& what )
    {
        if ( !ok && pass )
            detail = what;
        pass &= ok;
    }
};

std::map< std::string, FixtureReport > corpus_reports()
{
    std::map< std::string, FixtureReport > out;
    for ( auto& r : run_corpus( corpus ) )
        out.emplace( r.id, std::move( r ) );
    return out;
}

std::vector< Topology > spaces_up_to( unsigned n )
{
    std::vector< Topology > out;
    for ( unsigned k = 1; k <= n; ++k )
        for ( auto& t : enumerate_topologies( k ) )
            out.push_back( std::move( t ) );
    return out;
}

Outcome fixture_reproduction()
{
    Outcome o;
    const auto all = load_claims( corpus / "claims.tsv" );
    std::vector< Claim > claims;
    std::copy_if( all.begin(), all.end(), std::back_inserter( claims ),
                  []( const Claim& c ) { return c.fixture == "ex-2.14"; } );
    const auto start = std::chrono::steady_clock::now();
    const auto report = run_fixture( corpus, "ex-2.14", claims );
    const double seconds = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();

    // The printed D̂-, gD̂- and πgD̂-closed families, compared as sets.
    const std::vector< std::string > labels{ "a", "b", "c" };
    const auto as_family = [ & ]( const std::string& literals ) {
        return format_family( SubsetFamily{ 3, parse_subset_list( literals, labels ) }, labels );
    };
    const std::string printed = as_family( "{},{a},{b},{c},{a,c},{b,c},{a,b,c}" );
    unsigned confirmed = 0;
    for ( const auto& r : report.claims )
    {
        const auto& loc = r.claim.locator;
        if ( loc.ends_with( "(2)" ) )
            continue;
        o.require( r.match, loc + " not confirmed: " + r.diff );
        confirmed += r.match;
        if ( !loc.ends_with( "(1)" ) )
            o.require( as_family( r.claim.expected ) == printed, loc + " does not hold the printed list" );
    }
    o.require( confirmed == 4, "expected items (1),(3),(4),(5), confirmed " + std::to_string( confirmed ) );
    o.require( seconds < fixture_limit, "took " + std::to_string( seconds ) + " s" );
    if ( o.pass )
        o.detail = "items (1),(3),(4),(5) confirmed in " + std::to_string( seconds ) + " s";
    return o;
}

Outcome discrepancies_detected()
{
    Outcome o;
    const auto reports = corpus_reports();
    const auto mismatch = [ & ]( const std::string& id, const std::string& predicate ) -> std::string {
        for ( const auto& r : reports.at( id ).claims )
            if ( r.claim.predicate == predicate && !r.match )
                return r.diff;
        return {};
    };
    o.require( reports.at( "ex-2.14" ).status == FixtureStatus::Discrepant, "Ex 2.14 not Discrepant" );
    o.require( mismatch( "ex-2.14", "family(g-closed)" ).find( "unrecognized=[{a,c,d}]" ) != std::string::npos,
               "Ex 2.14(2) diff does not name the phantom point" );
    o.require( reports.at( "ex-2.8" ).status == FixtureStatus::Discrepant, "Ex 2.8 not Discrepant" );
    o.require( !mismatch( "ex-2.8", "pigdhat-closed({a,b})" ).empty(), "Ex 2.8 diff missing" );
    o.require( reports.at( "ex-3.9" ).status == FixtureStatus::Discrepant, "Ex 3.9 not Discrepant" );
    o.require( mismatch( "ex-3.9", "pigdhat-normal" ) == "expected=false actual=true", "Ex 3.9 diff missing" );
    o.require( reports.at( "ex-3.11" ).status == FixtureStatus::InvalidInput, "Ex 3.11 not InvalidInput" );
    o.require( reports.at( "ex-3.11" ).reason.find( "{a} ∪ {d}" ) != std::string::npos,
               "Ex 3.11 reason does not cite the missing union" );

    // Every mismatch shows up as a TSV row with a non-empty diff cell.
    std::vector< FixtureReport > flagged;
    for ( const char* id : { "ex-2.14", "ex-2.8", "ex-3.9", "ex-3.11" } )
        flagged.push_back( reports.at( id ) );
    std::istringstream tsv{ format_reports_tsv( flagged ) };
    unsigned diff_rows = 0;
    for ( std::string row; std::getline( tsv, row ); )
        diff_rows += !row.ends_with( "\tmatch" );
    o.require( diff_rows >= 5, "expected at least 5 diff rows, got " + std::to_string( diff_rows ) );
    if ( o.pass )
        o.detail = "2.14(2), 2.8, 3.9 Discrepant; 3.11 InvalidInput; " + std::to_string( diff_rows ) + " diff rows";
    return o;
}

Outcome positive_claims()
{
    Outcome o;
    const auto reports = corpus_reports();
    for ( const char* id : { "ex-2.11", "ex-2.13", "ex-3.7", "ex-3.8" } )
    {
        const auto& r = reports.at( id );
        o.require( r.status == FixtureStatus::Confirmed, std::string( id ) + " is " + std::string( token( r.status ) ) );
        o.require( r.claims.size() >= 2, std::string( id ) + " has too few claims" );
    }
    const auto& ex37 = reports.at( "ex-3.7" ).claims;
    o.require( std::any_of( ex37.begin(), ex37.end(),
                            []( const ClaimResult& r ) {
                                return r.claim.predicate == "separated(open,{a},{c},{a},{b,c,d})" && r.match;
                            } ),
               "Ex 3.7 separators U={a}, V={b,c,d} not confirmed" );
    if ( o.pass )
        o.detail = "2.11, 2.13, 3.7, 3.8 Confirmed";
    return o;
}

Outcome diagram_soundness()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto spaces = enumerate_topologies( 4 );
    unsigned violations = 0;
    for ( const auto& t : spaces )
    {
        const ClassTable table{ t };
        violations += check_implication_diagram( table ).has_value();
        violations += !check_normality_diagram( table ).holds;
    }
    const double seconds = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();
    o.require( spaces.size() == 355, "enumerated " + std::to_string( spaces.size() ) + " spaces" );
    o.require( violations == 0, std::to_string( violations ) + " violations" );
    o.require( seconds < diagram_limit, "took " + std::to_string( seconds ) + " s" );
    if ( o.pass )
        o.detail = "0 violations over 355 spaces in " + std::to_string( seconds ) + " s";
    return o;
}

Outcome diagram_strictness()
{
    Outcome o;
    unsigned witnessed = 0;
    std::string names;
    for ( const auto& arrow : grid_arrows() )
    {
        const auto r = find_strictness_witness( arrow, 4 );
        if ( !r.found )
            continue;
        o.require( r.space->size() <= 4 && r.set.has_value(), "bad witness for " + std::string( arrow.name ) );
        const std::string literal = format_subset( *r.set, r.space->labels() );
        const std::vector< Claim > claims{
            { "witness", std::string( arrow.target ) + "(" + literal + ")", "true", std::string( arrow.name ), 1 },
            { "witness", std::string( arrow.source ) + "(" + literal + ")", "false", std::string( arrow.name ), 2 },
        };
        const auto replay = check_claims( ClassTable{ *r.space }, space_id( *r.space ), claims );
        o.require( replay.status == FixtureStatus::Confirmed, "witness for " + std::string( arrow.name ) +
                                                                   " does not replay" );
        ++witnessed;
        names += ( names.empty() ? "" : " " ) + std::string( arrow.name ) + "@" + space_id( *r.space );
    }
    o.require( witnessed >= 6, "only " + std::to_string( witnessed ) + " arrows witnessed" );
    if ( o.pass )
        o.detail = std::to_string( witnessed ) + "/12 grid arrows strict at n<=4: " + names;
    return o;
}

Outcome equivalence_ledgers()
{
    Outcome o;
    const auto spaces = spaces_up_to( 4 );
    std::array< unsigned, 2 > agree{}, disagree{};
    for ( const auto& t : spaces )
    {
        const ClassTable table{ t };
        const std::array reports{ check_interpolation_equivalence( table ), check_cover_equivalence( table ) };
        for ( std::size_t i = 0; i < reports.size(); ++i )
        {
            o.require( reports[ i ].conditions.size() == reports[ i ].names.size() &&
                           reports[ i ].conditions.size() >= 2,
                       "malformed report on " + space_id( t ) );
            if ( reports[ i ].agree() )
            {
                ++agree[ i ];
                continue;
            }
            ++disagree[ i ];
            const Verdict v = reports[ i ].as_verdict();
            o.require( !v.holds && !v.witness.empty(), "disagreement without witness on " + space_id( t ) );
            std::cout << "  disagreement " << ( i ? "3.13" : "3.12" ) << ' ' << space_id( t ) << ' '
                      << v.render( t.labels() ) << '\n';
        }
    }
    o.require( agree[ 0 ] + disagree[ 0 ] == spaces.size() && agree[ 1 ] + disagree[ 1 ] == spaces.size(),
               "skipped spaces" );
    if ( o.pass )
        o.detail = std::to_string( spaces.size() ) + " spaces; 3.12 agree=" + std::to_string( agree[ 0 ] ) +
                   " disagree=" + std::to_string( disagree[ 0 ] ) + "; 3.13 agree=" + std::to_string( agree[ 1 ] ) +
                   " disagree=" + std::to_string( disagree[ 1 ] );
    return o;
}

Outcome harness_scope_three()
{
    Outcome o;
    const auto ids = parse_theorem_list( "3.15,4.4,4.5,5.1-5.8,3.17,5.2,5.4,3.18,3.19" );
    HarnessOptions options;
    options.max_points = 3;
    options.map_points = 3;
    const auto start = std::chrono::steady_clock::now();
    const auto ledgers = run_harness( ids, options );
    const double seconds = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();
    for ( const auto& l : ledgers )
    {
        const auto& th = info( l.id );
        std::cout << "  " << th.label() << " pass=" << l.pass << " vacuous=" << l.vacuous
                  << " counterexamples=" << l.counterexamples << '\n';
        if ( th.scope == Scope::Map )
        {
            const auto it = l.instances.find( { 3, 3 } );
            o.require( it != l.instances.end() && it->second == 29 * 29 * 27,
                       std::string( th.label() ) + " does not cover 29x29 pairs x 27 maps" );
        }
        else
            o.require( l.total() > 0, std::string( th.label() ) + " ran no instances" );
    }
    o.require( ledgers.size() == ids.size(), "missing ledgers" );
    o.require( seconds < harness_limit, "took " + std::to_string( seconds ) + " s" );
    if ( o.pass )
        o.detail = std::to_string( ledgers.size() ) + " theorems in " + std::to_string( seconds ) + " s";
    return o;
}

Outcome enumeration_counts()
{
    Outcome o;
    const std::array< std::pair< std::size_t, std::size_t >, 3 > expected{ { { 4, 3 }, { 29, 9 }, { 355, 33 } } };
    std::string shown;
    for ( unsigned n = 2; n <= 4; ++n )
    {
        const auto labeled = enumerate_topologies( n ).size();
        const auto canonical = enumerate_topologies( n, true ).size();
        o.require( labeled == expected[ n - 2 ].first && canonical == expected[ n - 2 ].second,
                   "n=" + std::to_string( n ) + ": " + std::to_string( labeled ) + "/" + std::to_string( canonical ) );
        shown += " n=" + std::to_string( n ) + ":" + std::to_string( labeled ) + "/" + std::to_string( canonical );
    }
    if ( o.pass )
        o.detail = "labeled/canonical" + shown;
    return o;
}

std::string run_cli( const std::string& args, int& status )
{
    const std::string command = std::string( FINTOP_CLI ) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen( command.c_str(), "r" );
    if ( !pipe )
    {
        status = -1;
        return out;
    }
    std::array< char, 65536 > buffer;
    for ( std::size_t got; ( got = fread( buffer.data(), 1, buffer.size(), pipe ) ) > 0; )
        out.append( buffer.data(), got );
    status = pclose( pipe );
    return out;
}

Outcome determinism()
{
    Outcome o;
    int s1 = 0, s8 = 0;
    const auto one = run_cli( "verify --n 4 --jobs 1 --format tsv", s1 );
    const auto eight = run_cli( "verify --n 4 --jobs 8 --format tsv", s8 );
    o.require( !one.empty(), "empty ledger" );
    o.require( WIFEXITED( s1 ) && WIFEXITED( s8 ) && WEXITSTATUS( s1 ) != 2 && WEXITSTATUS( s1 ) == WEXITSTATUS( s8 ),
               "unexpected exit status" );
    o.require( one == eight, "ledgers differ" );
    if ( o.pass )
        o.detail = std::to_string( std::count( one.begin(), one.end(), '\n' ) ) + " identical tsv rows";
    return o;
}

std::vector< std::vector< unsigned > > permutations( unsigned n )
{
    std::vector< unsigned > p( n );
    std::iota( p.begin(), p.end(), 0u );
    std::vector< std::vector< unsigned > > out;
    do
        out.push_back( p );
    while ( std::next_permutation( p.begin(), p.end() ) );
    return out;
}

Outcome property_suites()
{
    Outcome o;
    const auto spaces = spaces_up_to( 4 );
    const std::array< std::string_view, 5 > into_pigdhat{ "closed", "alpha-closed", "pre-closed", "semi-closed",
                                                          "w-closed" };
    const auto pigdhat = *resolve_set_predicate( "pigdhat-closed" );
    for ( const auto& t : spaces )
    {
        const ClassTable table{ t };
        const unsigned n = t.size();
        const auto id = space_id( t );
        const auto subsets = all_subsets( n );
        for ( ClosureKind k : all_closure_kinds )
            for ( Subset a : subsets )
            {
                const Subset c = table.closure( k, a );
                o.require( kind_interior( table, k, a ) == kind_closure( table, k, a.complement( n ) ).complement( n ),
                           "duality fails for " + std::string( token( k ) ) + " on " + id );
                o.require( a.subset_of( c ), "closure not extensive on " + id );
                o.require( table.closure( k, c ) == c, "closure not idempotent on " + id );
                for ( Subset b : subsets )
                    if ( a.subset_of( b ) )
                        o.require( c.subset_of( table.closure( k, b ) ), "closure not monotone on " + id );
            }
        for ( auto token : into_pigdhat )
        {
            const auto p = *resolve_set_predicate( token );
            for ( Subset a : subsets )
                o.require( !p( table, a ) || pigdhat( table, a ),
                           std::string( token ) + " set outside the pigdhat-closed family on " + id );
        }
        o.require( !separation_axiom( table, SeparationAxiom::T3 ).holds ||
                       separation_axiom( table, SeparationAxiom::T2 ).holds,
                   "T3 without T2 on " + id );

        const auto profile = normality_profile( table );
        for ( const auto& perm : permutations( n ) )
        {
            const ClassTable moved{ relabel( t, perm ) };
            const auto same_family = [ & ]( const SubsetFamily& before, const SubsetFamily& after ) {
                if ( before.size() != after.size() )
                    return false;
                return std::all_of( before.begin(), before.end(),
                                    [ & ]( Subset s ) { return after.contains( permute( s, perm ) ); } );
            };
            o.require( same_family( t.opens(), moved.space().opens() ), "relabel inconsistent on " + id );
            for ( ClosedClass c : all_closed_classes )
                o.require( same_family( table.family( c ), moved.family( c ) ),
                           std::string( token( c ) ) + " family not equivariant on " + id );
            for ( OpenKind k : all_open_kinds )
                o.require( same_family( table.open_family( k ), moved.open_family( k ) ),
                           std::string( token( k ) ) + " family not equivariant on " + id );
            const auto moved_profile = normality_profile( moved );
            for ( std::size_t i = 0; i < profile.size(); ++i )
                o.require( profile[ i ].holds == moved_profile[ i ].holds, "normality verdict not equivariant on " + id );
            for ( auto axiom : { SeparationAxiom::T1, SeparationAxiom::T2, SeparationAxiom::T3 } )
                o.require( separation_axiom( table, axiom ).holds == separation_axiom( moved, axiom ).holds,
                           "separation axiom not equivariant on " + id );
        }
    }
    if ( o.pass )
        o.detail = "dualities, closure laws, inclusions, equivariance, T3=>T2 over " + std::to_string( spaces.size() ) +
                   " spaces";
    return o;
}

} // namespace

int main()
{
    const std::array< std::pair< const char*, std::function< Outcome() > >, 10 > criteria{ {
        { "fixture reproduction (Example 2.14 items 1,3,4,5)", fixture_reproduction },
        { "fixture discrepancies detected", discrepancies_detected },
        { "positive claims verified", positive_claims },
        { "diagram soundness over 355 four-point spaces", diagram_soundness },
        { "diagram strictness witnesses", diagram_strictness },
        { "interpolation and cover equivalence ledgers", equivalence_ledgers },
        { "theorem harness at scope 3", harness_scope_three },
        { "enumeration counts", enumeration_counts },
        { "determinism across worker counts", determinism },
        { "property suites over n<=4", property_suites },
    } };
    unsigned failed = 0;
    for ( std::size_t i = 0; i < criteria.size(); ++i )
    {
        Outcome o;
        try
        {
            o = criteria[ i ].second();
        }
        catch ( const std::exception& e )
        {
            o = { false, std::string( "threw: " ) + e.what() };
        }
        failed += !o.pass;
        std::cout << ( o.pass ? "PASS" : "FAIL" ) << " criterion " << i + 1 << ": " << criteria[ i ].first << " -- "
                  << o.detail << std::endl;
    }
    std::cout << ( criteria.size() - failed ) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
