// Command-line front end for the finite topology engine.

#include "CLI11.hpp"

#include "fintop/atlas.hpp"
#include "fintop/fixture.hpp"
#include "fintop/harness.hpp"
#include "fintop/io.hpp"
#include "fintop/maps.hpp"
#include "fintop/miner.hpp"
#include "fintop/normality.hpp"
#include "fintop/predicates.hpp"

#include <cstdio>
#include <iostream>
#include <mutex>
#include <unistd.h>

using namespace fintop;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;

/// Raised for bad flag values that CLI11 cannot see, such as an unknown class token.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string format = "plain";
    unsigned jobs = 1;
    bool progress = false;

    [[nodiscard]] bool tsv() const { return format == "tsv"; }
};

/// One output record; plain output renders `check: VERDICT witness`.
void emit( const Options& o, const std::string& subject, std::string_view check, std::string_view verdict,
           const std::string& witness )
{
    if ( o.tsv() )
        std::cout << subject << '\t' << check << '\t' << verdict << '\t' << ( witness.empty() ? "-" : witness )
                  << '\n';
    else
        std::cout << check << ": " << verdict << ( witness.empty() ? "" : " witness " + witness ) << '\n';
}

ClassTable load_table( const std::string& path )
{
    const SpaceFile file = load_space( path );
    auto checked = file.validate();
    if ( auto* err = std::get_if< TopologyError >( &checked ) )
        throw InputError( path, 0, "not a topology: " + err->describe( file.labels ) );
    return ClassTable{ std::get< Topology >( std::move( checked ) ) };
}

/// A class token (`pigdhat`) or any set predicate token (`pigdhat-closed`, `semi-open`).
std::pair< std::string, SetPredicate > class_predicate( const std::string& token )
{
    if ( parse_closed_class( token ) )
        return { token + "-closed", *resolve_set_predicate( token + "-closed" ) };
    if ( auto p = resolve_set_predicate( token ) )
        return { token, *p };
    throw UsageError( "unknown class '" + token + "'" );
}

int cmd_validate( const Options& o, const std::string& path )
{
    const SpaceFile file = load_space( path );
    auto checked = file.validate();
    if ( auto* err = std::get_if< TopologyError >( &checked ) )
    {
        std::cerr << path << ": not a topology: " << err->describe( file.labels ) << '\n';
        return exit_input;
    }
    const auto& t = std::get< Topology >( checked );
    if ( o.tsv() )
        std::cout << space_id( t ) << "\tvalid\t" << t.size() << '\t' << t.opens().size() << '\n';
    else
        std::cout << path << ": valid topology, " << t.size() << " points, " << t.opens().size() << " open sets, id "
                  << space_id( t ) << '\n';
    return exit_ok;
}

int cmd_families( const Options& o, const std::string& path, const std::string& which )
{
    const ClassTable table = load_table( path );
    const auto& labels = table.space().labels();
    std::vector< std::string > tokens;
    if ( which == "all" )
        for ( ClosedClass c : all_closed_classes )
            tokens.emplace_back( token( c ) );
    else
        tokens.push_back( which );
    for ( const auto& tok : tokens )
    {
        const auto [ name, predicate ] = class_predicate( tok );
        if ( !o.tsv() && tokens.size() > 1 )
            std::cout << name << ":\n";
        for ( Subset a : all_subsets( table.size() ) )
        {
            if ( !predicate( table, a ) )
                continue;
            if ( o.tsv() )
                std::cout << name << '\t' << format_subset( a, labels ) << '\n';
            else
                std::cout << ( tokens.size() > 1 ? "  " : "" ) << format_subset( a, labels ) << '\n';
        }
    }
    return exit_ok;
}

int cmd_classify( const Options& o, const std::string& path, const std::string& literal, const std::string& cls )
{
    const ClassTable table = load_table( path );
    const Subset a = parse_subset( literal, table.space().labels() );
    const auto [ name, predicate ] = class_predicate( cls );
    const bool member = predicate( table, a );
    const std::string shown = format_subset( a, table.space().labels() );
    if ( o.tsv() )
        std::cout << space_id( table.space() ) << '\t' << name << '\t' << ( member ? "member" : "non-member" ) << '\t'
                  << shown << '\n';
    else
        std::cout << shown << ( member ? " is " : " is not " ) << name << '\n';
    return member ? exit_ok : exit_negative;
}

/// With --kind, the exit code is the verdict. Without, every kind and axiom is
/// listed and only a broken implication diagram is a failure.
int cmd_normality( const Options& o, const std::string& path, const std::string& kind )
{
    const ClassTable table = load_table( path );
    const auto& labels = table.space().labels();
    const std::string id = space_id( table.space() );
    if ( !kind.empty() )
    {
        if ( !is_space_predicate( kind ) )
            throw UsageError( "unknown normality kind '" + kind + "'" );
        const Verdict v = evaluate_space_predicate( table, kind );
        emit( o, id, kind, v.holds ? "HOLDS" : "FAILS", v.render( labels ) );
        return v.holds ? exit_ok : exit_negative;
    }
    for ( NormalityKind k : all_normality_kinds )
    {
        const Verdict v = is_normal_kind( table, k );
        emit( o, id, token( k ), v.holds ? "HOLDS" : "FAILS", v.render( labels ) );
    }
    for ( const char* axiom : { "pigdhat-t1", "pigdhat-t2", "pigdhat-t3" } )
    {
        const Verdict v = evaluate_space_predicate( table, axiom );
        emit( o, id, axiom, v.holds ? "HOLDS" : "FAILS", v.render( labels ) );
    }
    const Verdict diagram = check_normality_diagram( table );
    emit( o, id, "normality-diagram", diagram.holds ? "HOLDS" : "FAILS", diagram.render( labels ) );
    return diagram.holds ? exit_ok : exit_negative;
}

/// Both diagrams on one space; returns the number of violations emitted.
unsigned diagram_of( const Options& o, const ClassTable& table, bool quiet_passes )
{
    const auto& labels = table.space().labels();
    const std::string id = space_id( table.space() );
    unsigned failures = 0;
    const auto set = check_implication_diagram( table );
    if ( set )
        ++failures;
    if ( set || !quiet_passes )
        emit( o, id, "set-diagram", set ? "FAILS" : "HOLDS",
              set ? std::string( set->arrow ) + " A=" + format_subset( set->set, labels ) : std::string{} );
    const Verdict normal = check_normality_diagram( table );
    if ( !normal.holds )
        ++failures;
    if ( !normal.holds || !quiet_passes )
        emit( o, id, "normality-diagram", normal.holds ? "HOLDS" : "FAILS", normal.render( labels ) );
    return failures;
}

int cmd_diagram( const Options& o, const std::string& path, unsigned n )
{
    if ( !path.empty() )
        return diagram_of( o, load_table( path ), false ) ? exit_negative : exit_ok;
    if ( n == 0 )
        throw UsageError( "give a space file or --n N" );
    unsigned failures = 0, spaces = 0;
    for ( unsigned k = 1; k <= n; ++k )
        for ( const auto& t : enumerate_topologies( k ) )
        {
            failures += diagram_of( o, ClassTable{ t }, true );
            ++spaces;
        }
    if ( o.tsv() )
        std::cout << "summary\tdiagram\t" << ( failures ? "FAILS" : "HOLDS" ) << "\tspaces=" << spaces
                  << " violations=" << failures << '\n';
    else
        std::cout << spaces << " spaces checked, " << failures << " violations\n";
    return failures ? exit_negative : exit_ok;
}

int cmd_mapcheck( const Options& o, const std::string& path, const std::string& cls )
{
    const MapFile file = load_map( path );
    const ClassTable dom = load_table( file.from.string() );
    const ClassTable cod = load_table( file.to.string() );
    const SpaceMap f{ dom, cod, file.resolve( dom.space().labels(), cod.space().labels() ) };
    const std::string subject = space_id( dom.space() ) + ">" + space_id( cod.space() ) + ":" + f.code();
    const auto render = [ & ]( MapClass c, const Verdict& v ) {
        const auto scheme = scheme_of( c );
        const bool in_cod = scheme && scheme->direction == MapScheme::Direction::Preimage;
        return v.render( in_cod ? cod.space().labels() : dom.space().labels() );
    };
    if ( !cls.empty() )
    {
        const auto c = parse_map_class( cls );
        if ( !c )
            throw UsageError( "unknown map class '" + cls + "'" );
        const Verdict v = check_map_class( f, *c );
        emit( o, subject, cls, v.holds ? "HOLDS" : "FAILS", render( *c, v ) );
        return v.holds ? exit_ok : exit_negative;
    }
    for ( MapClass c : all_map_classes )
    {
        const Verdict v = check_map_class( f, c );
        emit( o, subject, token( c ), v.holds ? "HOLDS" : "FAILS", render( c, v ) );
    }
    const auto broken = check_map_diagram( f );
    emit( o, subject, "map-diagram", broken ? "FAILS" : "HOLDS", broken ? std::string( token( broken->from ) ) + "=>" + std::string( token( broken->to ) ) : "" );
    return broken ? exit_negative : exit_ok;
}

std::string_view subject_verdict( const SubjectRecord& r )
{
    if ( r.counterexamples )
        return "counterexample";
    return r.pass ? "pass" : "vacuous";
}

int cmd_verify( const Options& o, unsigned n, std::optional< unsigned > map_n, const std::string& theorems,
                std::uint64_t budget )
{
    const auto ids = parse_theorem_list( theorems );
    HarnessOptions options;
    options.max_points = n;
    options.map_points = map_n.value_or( std::min( n, 3u ) );
    options.jobs = o.jobs;
    options.budget = budget;
    options.records = o.tsv();
    std::mutex lock;
    if ( o.progress )
        options.progress = [ & ]( const std::string& line ) {
            std::lock_guard guard{ lock };
            std::cerr << line << '\n';
        };
    const auto ledgers = run_harness( ids, options );

    bool failed = false;
    for ( const auto& l : ledgers )
    {
        const auto& th = info( l.id );
        failed |= l.counterexamples > 0;
        const std::string_view verdict = l.counterexamples ? "counterexample" : l.pass ? "pass" : "vacuous";
        const std::string counts = "pass=" + std::to_string( l.pass ) + " vacuous=" + std::to_string( l.vacuous ) +
                                   " counterexamples=" + std::to_string( l.counterexamples );
        if ( o.tsv() )
        {
            for ( const auto& r : l.records )
                std::cout << r.subject << '\t' << th.label() << '\t' << subject_verdict( r ) << '\t'
                          << ( r.witness.empty() ? "-" : r.witness ) << '\n';
            std::cout << "summary\t" << th.label() << '\t' << verdict << '\t' << counts << '\n';
            continue;
        }
        std::cout << th.label() << " (" << th.token << ( th.hard ? ", hard" : "" ) << "): " << verdict << ", "
                  << counts << '\n';
        if ( l.first )
        {
            std::cout << "  first counterexample: " << l.first->dom;
            if ( !l.first->cod.empty() )
                std::cout << ( info( l.id ).scope == Scope::Map ? " -> " : " on " ) << l.first->cod;
            if ( !l.first->map.empty() )
                std::cout << " map=" << l.first->map;
            std::cout << ' ' << l.first->witness << '\n';
        }
    }
    return failed ? exit_negative : exit_ok;
}

int cmd_enumerate( const Options& o, unsigned n, bool canonical, bool count_only )
{
    const auto spaces = enumerate_topologies( n, canonical );
    if ( count_only )
    {
        std::cout << spaces.size() << '\n';
        return exit_ok;
    }
    for ( const auto& t : spaces )
    {
        const std::string family = format_family( t.opens(), t.labels() );
        if ( !canonical )
        {
            std::cout << space_id( t ) << ( o.tsv() ? "\t" : "  " ) << family << '\n';
            continue;
        }
        const auto c = canonical_form( t );
        if ( o.tsv() )
            std::cout << space_id( t ) << '\t' << c.labeled_count << '\t' << family << '\n';
        else
            std::cout << space_id( t ) << "  x" << c.labeled_count << "  " << family << '\n';
    }
    return exit_ok;
}

int cmd_mine( const Options& o, const std::string& text, unsigned n )
{
    const Goal goal = Goal::parse( text );
    const MineResult r = mine( goal, n, o.jobs );
    if ( !r.found )
    {
        if ( o.tsv() )
            std::cout << "-\tmine\tnot-found\tspaces=" << r.spaces_scanned << '\n';
        else
            std::cout << "NotFound: no space with at most " << n << " points (" << r.spaces_scanned
                      << " canonical spaces)\n";
        return exit_negative;
    }
    const auto& labels = r.space->labels();
    std::string witness = r.set ? "A=" + format_subset( *r.set, labels ) : std::string{};
    if ( o.tsv() )
    {
        std::cout << space_id( *r.space ) << "\tmine\tfound\t" << ( witness.empty() ? "-" : witness ) << '\n';
        return exit_ok;
    }
    std::cout << "found " << space_id( *r.space ) << ( witness.empty() ? "" : " " + witness ) << '\n'
              << format_space( *r.space );
    return exit_ok;
}

int cmd_fixtures( const Options& o, const std::string& dir )
{
    const auto reports = run_corpus( dir );
    bool clean = true;
    for ( const auto& r : reports )
        clean &= r.status == FixtureStatus::Confirmed;
    if ( o.tsv() )
    {
        std::cout << format_reports_tsv( reports );
        return clean ? exit_ok : exit_negative;
    }
    for ( const auto& r : reports )
    {
        std::cout << r.id << ": " << token( r.status );
        if ( !r.reason.empty() )
            std::cout << " (" << r.reason << ")";
        std::cout << '\n';
        for ( const auto& c : r.claims )
            if ( !c.match )
                std::cout << "  " << c.claim.locator << ": " << c.claim.predicate << ": " << c.diff << '\n';
    }
    return clean ? exit_ok : exit_negative;
}

void usage_error( const CLI::App& app, const std::string& reason )
{
    std::cerr << "fintop: " << reason << '\n' << app.help( "", CLI::AppFormatMode::Normal );
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Finite topology engine: generalized closed sets, normality variants and map classes.", "fintop" };
    app.require_subcommand( 1 );
    app.fallthrough();

    Options o;
    o.progress = isatty( STDERR_FILENO );
    app.add_option( "--format", o.format, "Output format" )
        ->check( CLI::IsMember( { "plain", "tsv" } ) )
        ->capture_default_str();
    app.add_option( "-j,--jobs", o.jobs, "Worker threads" )
        ->envname( "FINTOP_JOBS" )
        ->check( CLI::Range( 1u, 256u ) )
        ->capture_default_str();

    std::string path, set, cls = "all", kind, goal, theorems = "all", corpus = "corpus";
    unsigned n = 0, verify_n = 3;
    std::optional< unsigned > map_n;
    std::uint64_t budget = HarnessOptions{}.budget;
    bool canonical = false, count_only = false;

    auto* validate = app.add_subcommand( "validate", "Check that a .top file describes a topology" );
    validate->add_option( "file", path, "Space file" )->required();

    auto* families = app.add_subcommand( "families", "List the members of a set family" );
    families->add_option( "file", path, "Space file" )->required();
    families->add_option( "--class", cls, "Class token (pigdhat, g, ...), set predicate token, or all" )
        ->capture_default_str();

    auto* classify = app.add_subcommand( "classify", "Test one set for class membership; exit 0 if member" );
    classify->add_option( "file", path, "Space file" )->required();
    classify->add_option( "--set", set, "Set literal, e.g. {a,b}" )->required();
    classify->add_option( "--class", cls, "Class or set predicate token" )->required();

    auto* normality = app.add_subcommand( "normality", "Normality verdicts with witnesses" );
    normality->add_option( "file", path, "Space file" )->required();
    normality->add_option( "--kind", kind, "Single normality kind or pigdhat-t1/t2/t3" );

    auto* diagram = app.add_subcommand( "diagram", "Check the implication diagrams on a space or on all spaces" );
    diagram->add_option( "file", path, "Space file" );
    diagram->add_option( "--n", n, "Check every labeled space with 1..N points" )->check( CLI::Range( 1u, 5u ) );

    auto* mapcheck = app.add_subcommand( "mapcheck", "Map class verdicts for a .map file" );
    mapcheck->add_option( "file", path, "Map file" )->required();
    mapcheck->add_option( "--class", kind, "Single map class token" );

    auto* verify = app.add_subcommand( "verify", "Run the theorem harness exhaustively" );
    verify->add_option( "--n", verify_n, "Space theorems over 1..N points" )
        ->check( CLI::Range( 1u, 5u ) )
        ->capture_default_str();
    verify->add_option( "--map-n", map_n, "Map theorems over 1..M points (default min(N,3))" )
        ->check( CLI::Range( 1u, 5u ) );
    verify->add_option( "--theorems", theorems, "Comma list of ids, aliases or ranges such as 5.1-5.8" )
        ->capture_default_str();
    verify->add_option( "--budget", budget, "Ceiling on estimated membership checks" )->capture_default_str();

    auto* enumerate = app.add_subcommand( "enumerate", "List every topology on N points" );
    enumerate->add_option( "--n", n, "Number of points" )->required()->check( CLI::Range( 1u, 5u ) );
    enumerate->add_flag( "--canonical", canonical, "One representative per relabeling class" );
    enumerate->add_flag( "--count-only", count_only, "Print only the count" );

    auto* mine_cmd = app.add_subcommand( "mine", "Search for the smallest space satisfying a goal" );
    mine_cmd->add_option( "--goal", goal, "Boolean goal, e.g. \"pigdhat-closed(A) & !closed(A)\"" )->required();
    mine_cmd->add_option( "--n", n, "Largest point count" )->required()->check( CLI::Range( 1u, 5u ) );

    auto* fixtures = app.add_subcommand( "fixtures", "Evaluate the claims in a fixture corpus" );
    fixtures->add_option( "dir", corpus, "Corpus directory holding claims.tsv" )->capture_default_str();

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::CallForHelp& e )
    {
        return app.exit( e );
    }
    catch ( const CLI::CallForAllHelp& e )
    {
        return app.exit( e );
    }
    catch ( const CLI::ParseError& e )
    {
        const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        usage_error( *sub, e.what() );
        return exit_input;
    }

    const CLI::App* active = app.get_subcommands().front();
    try
    {
        if ( active == validate )
            return cmd_validate( o, path );
        if ( active == families )
            return cmd_families( o, path, cls );
        if ( active == classify )
            return cmd_classify( o, path, set, cls );
        if ( active == normality )
            return cmd_normality( o, path, kind );
        if ( active == diagram )
            return cmd_diagram( o, path, n );
        if ( active == mapcheck )
            return cmd_mapcheck( o, path, kind );
        if ( active == verify )
            return cmd_verify( o, verify_n, map_n, theorems, budget );
        if ( active == enumerate )
            return cmd_enumerate( o, n, canonical, count_only );
        if ( active == mine_cmd )
            return cmd_mine( o, goal, n );
        if ( active == fixtures )
            return cmd_fixtures( o, corpus );
    }
    catch ( const UsageError& e )
    {
        usage_error( *active, e.what() );
        return exit_input;
    }
    catch ( const std::exception& e )
    {
        // Input files, set literals, tokens and scope limits.
        std::cerr << "fintop: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
