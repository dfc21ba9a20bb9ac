#include "fintop/harness.hpp"

#include "fintop/maps.hpp"
#include "fintop/normality.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fintop
{

namespace
{

using T = TheoremId;

constexpr std::array< TheoremInfo, all_theorems.size() > theorem_info{ {
    { T::Interpolation, "interpolation", "3.12", Scope::Space, false,
      "softly pigdhat-normal iff each interpolation condition holds" },
    { T::Cover, "cover", "3.13", Scope::Space, false, "softly pigdhat-normal iff the cover condition holds" },
    { T::Urysohn, "urysohn", "3.14", Scope::Space, false,
      "softly pigdhat-normal iff every (pi-closed, regular closed) pair has a continuous separating function" },
    { T::OpenInjectiveImage, "open-injective-image", "3.15", Scope::Map, false,
      "open continuous injection from a softly pigdhat-normal space has a softly pigdhat-normal image" },
    { T::ClosedDomainTrace, "closed-domain-trace", "3.17", Scope::Subspace, false,
      "pigdhat-open sets trace to pigdhat-open sets on a regular closed subspace" },
    { T::ClosedDomainHereditary, "closed-domain-hereditary", "3.18", Scope::Subspace, false,
      "regular closed subspaces of softly pigdhat-normal spaces are softly pigdhat-normal" },
    { T::ClopenHereditary, "clopen-hereditary", "3.19", Scope::Subspace, false,
      "clopen subspaces of softly pigdhat-normal spaces are softly pigdhat-normal" },
    { T::T3ImpliesT2, "t3-implies-t2", "3.21", Scope::Space, false, "pigdhat-T3 implies pigdhat-T2" },
    { T::PiGDhatImage, "pigdhat-image", "4.4", Scope::Map, false,
      "almost pi-continuous pigdhat-closed maps send pigdhat-closed sets to pigdhat-closed sets" },
    { T::AlmostClosedSurjectionChar, "almost-closed-surjection-char", "4.5", Scope::Map, false,
      "a surjection is almost pigdhat-closed iff the regular-open shrinking condition holds" },
    { T::ContinuousClosedSurjection, "continuous-closed-surjection", "5.1", Scope::Map, false,
      "continuous pigdhat-closed surjections preserve softly pigdhat-normality" },
    { T::PiGDhatOpenChar, "pigdhat-open-char", "5.2", Scope::Space, false,
      "A is pigdhat-open iff every closed F inside A lies in the pigdhat-interior of A" },
    { T::IrresoluteInjection, "irresolute-injection", "5.3", Scope::Map, false,
      "closed pigdhat-irresolute injections reflect softly pigdhat-normality" },
    { T::SoftlyIrresoluteInjection, "softly-irresolute-injection", "5.3s", Scope::Map, false,
      "closed softly pigdhat-irresolute injections reflect softly pigdhat-normality" },
    { T::AlmostClosedChar, "almost-closed-char", "5.4", Scope::Map, false,
      "a map is almost pigdhat-closed iff the regular-open shrinking condition holds" },
    { T::RcPreservingInjection, "rc-preserving-injection", "5.5", Scope::Map, false,
      "almost pigdhat-continuous rc-preserving injections reflect softly pigdhat-normality" },
    { T::RcPreservingInjectionQuasi, "rc-preserving-injection-quasi", "5.5p", Scope::Map, false,
      "almost pigdhat-continuous rc-preserving injections reflect quasi pigdhat-normality" },
    { T::PiContinuousSurjection, "pi-continuous-surjection", "5.6", Scope::Map, false,
      "pi-continuous pigdhat-closed surjections preserve softly pigdhat-normality" },
    { T::PiContinuousSurjectionClosedPairs, "pi-continuous-surjection-closed-pairs", "5.6p", Scope::Map, false,
      "pi-continuous pigdhat-closed surjections separate disjoint closed pairs of the image by pigdhat-open sets" },
    { T::AlmostPiContinuousSurjection, "almost-pi-continuous-surjection", "5.7", Scope::Map, false,
      "almost pi-continuous almost pigdhat-closed surjections preserve softly pigdhat-normality" },
    { T::AlmostContinuousSurjection, "almost-continuous-surjection", "5.8", Scope::Map, false,
      "almost continuous almost closed surjections from normal spaces have softly pigdhat-normal images" },
    { T::SetDiagram, "diagram", "", Scope::Space, true,
      "the subset implication diagram and the normality diagram hold" },
    { T::MapDiagram, "map-diagram", "", Scope::Map, true, "the map-class implication diagram holds" },
} };

/// "5.6p" -> (5, 6); anything else -> nullopt.
std::optional< std::pair< int, int > > alias_number( std::string_view alias )
{
    const auto dot = alias.find( '.' );
    if ( dot == std::string_view::npos )
        return std::nullopt;
    int major = 0;
    int minor = 0;
    const char* end = alias.data() + alias.size();
    auto [ p1, e1 ] = std::from_chars( alias.data(), alias.data() + dot, major );
    auto [ p2, e2 ] = std::from_chars( alias.data() + dot + 1, end, minor );
    if ( e1 != std::errc{} || e2 != std::errc{} || p1 != alias.data() + dot )
        return std::nullopt;
    return std::pair{ major, minor };
}

const NormalityScheme closed_pairs{ PairSide::Closed, PairSide::Closed, OpenKind::PiGDhatOpen };

struct SpaceFacts
{
    explicit SpaceFacts( const Topology& t ) : table{ t }, id{ space_id( t ) }
    {
        softly = is_normal_kind( table, NormalityKind::SoftlyPiGDhat ).holds;
        quasi = is_normal_kind( table, NormalityKind::QuasiPiGDhat ).holds;
        normal = is_normal_kind( table, NormalityKind::Normal ).holds;
        closed_pair_separation = check_scheme( table, closed_pairs ).holds;
    }

    ClassTable table;
    std::string id;
    bool softly;
    bool quasi;
    bool normal;
    bool closed_pair_separation;
};

enum class Outcome
{
    Pass,
    Vacuous,
    Fail,
};

/// Witness text with the map or subspace that produced it.
std::string locate( const Counterexample& c )
{
    std::string where;
    if ( !c.map.empty() )
        where = "map=" + c.map;
    else if ( c.cod != c.dom )
        where = "M=" + c.cod;
    if ( where.empty() || c.witness.empty() )
        return where + c.witness;
    return where + " " + c.witness;
}

/// Ledgers for the requested theorems, filled by one work unit.
class Tally
{
public:
    Tally( std::span< const TheoremId > theorems, bool records ) : _records{ records }
    {
        for ( TheoremId id : theorems )
            _ledgers.push_back( TheoremLedger{ id } );
    }

    [[nodiscard]] bool wants( TheoremId id ) const { return find( id ) != nullptr; }

    /// `counterexample` is only called on failure.
    template < typename Make >
    void record( TheoremId id, std::pair< unsigned, unsigned > size, std::string_view subject, Outcome outcome,
                 Make&& counterexample )
    {
        TheoremLedger* l = find( id );
        ++l->instances[ size ];
        SubjectRecord* r = nullptr;
        if ( _records )
        {
            if ( l->records.empty() || l->records.back().subject != subject )
                l->records.push_back( SubjectRecord{ std::string( subject ) } );
            r = &l->records.back();
        }
        switch ( outcome )
        {
        case Outcome::Pass:
            ++l->pass;
            if ( r )
                ++r->pass;
            break;
        case Outcome::Vacuous:
            ++l->vacuous;
            if ( r )
                ++r->vacuous;
            break;
        case Outcome::Fail:
            ++l->counterexamples;
            if ( !l->first || ( r && !r->counterexamples ) )
            {
                Counterexample c = counterexample();
                if ( r && !r->counterexamples )
                    r->witness = locate( c );
                if ( !l->first )
                    l->first = std::move( c );
            }
            if ( r )
                ++r->counterexamples;
            break;
        }
    }

    void merge_into( std::vector< TheoremLedger >& out ) const
    {
        for ( std::size_t i = 0; i < _ledgers.size(); ++i )
        {
            const auto& src = _ledgers[ i ];
            auto& dst = out[ i ];
            dst.pass += src.pass;
            dst.vacuous += src.vacuous;
            dst.counterexamples += src.counterexamples;
            for ( const auto& [ k, v ] : src.instances )
                dst.instances[ k ] += v;
            if ( !dst.first && src.first )
                dst.first = src.first;
            dst.records.insert( dst.records.end(), src.records.begin(), src.records.end() );
        }
    }

private:
    TheoremLedger* find( TheoremId id )
    {
        for ( auto& l : _ledgers )
            if ( l.id == id )
                return &l;
        return nullptr;
    }
    [[nodiscard]] const TheoremLedger* find( TheoremId id ) const
    {
        for ( const auto& l : _ledgers )
            if ( l.id == id )
                return &l;
        return nullptr;
    }

    bool _records;
    std::vector< TheoremLedger > _ledgers;
};

Outcome implication( bool hypothesis, bool conclusion )
{
    if ( !hypothesis )
        return Outcome::Vacuous;
    return conclusion ? Outcome::Pass : Outcome::Fail;
}

Outcome agreement( bool agree ) { return agree ? Outcome::Pass : Outcome::Fail; }

void run_space( const SpaceFacts& x, Tally& tally )
{
    const auto& table = x.table;
    const auto& labels = table.space().labels();
    const unsigned n = table.size();
    const std::pair size{ n, n };
    const auto make = [ & ]( std::string witness ) {
        return [ &, witness = std::move( witness ) ] { return Counterexample{ x.id, x.id, {}, witness }; };
    };

    const auto equivalence = [ & ]( TheoremId id, const EquivalenceReport& report ) {
        tally.record( id, size, x.id, agreement( report.agree() ), make( report.as_verdict().render( labels ) ) );
    };
    if ( tally.wants( T::Interpolation ) )
        equivalence( T::Interpolation, check_interpolation_equivalence( table ) );
    if ( tally.wants( T::Cover ) )
        equivalence( T::Cover, check_cover_equivalence( table ) );
    if ( tally.wants( T::Urysohn ) )
        equivalence( T::Urysohn, check_urysohn_equivalence( table ) );
    if ( tally.wants( T::T3ImpliesT2 ) )
    {
        const auto t2 = separation_axiom( table, SeparationAxiom::T2 );
        tally.record( T::T3ImpliesT2, size, x.id,
                      implication( separation_axiom( table, SeparationAxiom::T3 ).holds, t2.holds ),
                      make( t2.render( labels ) ) );
    }
    if ( tally.wants( T::SetDiagram ) )
    {
        const auto sets = check_implication_diagram( table );
        const auto kinds = check_normality_diagram( table );
        tally.record( T::SetDiagram, size, x.id, agreement( !sets && kinds.holds ), [ & ] {
            if ( sets )
                return make( std::string( sets->arrow ) + " A=" + format_subset( sets->set, labels ) )();
            return make( kinds.render( labels ) )();
        } );
    }
    if ( tally.wants( T::PiGDhatOpenChar ) )
    {
        std::optional< Subset > bad;
        for ( Subset a : all_subsets( n ) )
        {
            const Subset inner = table.interior( ClosureKind::PiGDhatCl, a );
            bool covered = true;
            for ( Subset f : table.space().closeds() )
                if ( f.subset_of( a ) && !f.subset_of( inner ) )
                    covered = false;
            if ( covered != table.is_open( OpenKind::PiGDhatOpen, a ) )
            {
                bad = a;
                break;
            }
        }
        tally.record( T::PiGDhatOpenChar, size, x.id, agreement( !bad ),
                      make( bad ? "A=" + format_subset( *bad, labels ) : std::string{} ) );
    }
}

void run_subspaces( const SpaceFacts& x, Tally& tally )
{
    const bool trace = tally.wants( T::ClosedDomainTrace );
    const bool hereditary = tally.wants( T::ClosedDomainHereditary );
    const bool clopen = tally.wants( T::ClopenHereditary );
    if ( !trace && !hereditary && !clopen )
        return;
    const auto& table = x.table;
    const auto& t = table.space();
    const auto& labels = t.labels();
    for ( Subset m : all_subsets( t.size() ) )
    {
        if ( m.is_empty() )
            continue;
        const bool domain = table.regular_closed().contains( m );
        const bool both = t.is_clopen( m );
        if ( !domain && !( clopen && both ) )
            continue;
        const Subspace sub = subspace( t, m );
        const ClassTable st{ sub.topology };
        const std::pair size{ t.size(), m.size() };
        const std::string carrier = format_subset( m, labels );
        std::optional< bool > sub_softly;
        const auto softly = [ & ] {
            if ( !sub_softly )
                sub_softly = is_normal_kind( st, NormalityKind::SoftlyPiGDhat ).holds;
            return *sub_softly;
        };
        const auto make = [ & ]( std::string witness ) {
            return [ &, witness = std::move( witness ) ] { return Counterexample{ x.id, carrier, {}, witness }; };
        };

        if ( domain && trace )
        {
            std::optional< Subset > bad;
            for ( Subset a : table.open_family( OpenKind::PiGDhatOpen ) )
                if ( !st.is_open( OpenKind::PiGDhatOpen, sub.restrict( a ) ) )
                {
                    bad = a;
                    break;
                }
            tally.record( T::ClosedDomainTrace, size, x.id, agreement( !bad ),
                          make( bad ? "A=" + format_subset( *bad, labels ) : std::string{} ) );
        }
        const auto render_sub = [ & ] {
            return is_normal_kind( st, NormalityKind::SoftlyPiGDhat ).render( sub.topology.labels() );
        };
        if ( domain && hereditary )
            tally.record( T::ClosedDomainHereditary, size, x.id, implication( x.softly, x.softly && softly() ),
                          make( x.softly ? render_sub() : std::string{} ) );
        if ( both && clopen )
            tally.record( T::ClopenHereditary, size, x.id, implication( x.softly, x.softly && softly() ),
                          make( x.softly ? render_sub() : std::string{} ) );
    }
}

/// Lazily evaluated class memberships of one map.
class MapFacts
{
public:
    explicit MapFacts( const SpaceMap& f ) : _f{ f } { _cache.fill( -1 ); }

    bool operator()( MapClass c )
    {
        auto& slot = _cache[ static_cast< std::size_t >( c ) ];
        if ( slot < 0 )
            slot = is_map_class( _f, c ) ? 1 : 0;
        return slot == 1;
    }

private:
    const SpaceMap& _f;
    std::array< signed char, all_map_classes.size() > _cache;
};

/// The regular-open shrinking condition; returns the failing (S, U) if any.
std::optional< std::pair< Subset, Subset > > shrinking_failure( const SpaceMap& f )
{
    const auto& ro = f.dom().open_family( OpenKind::RegularOpen );
    const auto& opens = f.cod().open_family( OpenKind::PiGDhatOpen );
    for ( Subset s : all_subsets( f.cod().size() ) )
    {
        const Subset pre = f.preimage( s );
        for ( Subset u : ro )
        {
            if ( !pre.subset_of( u ) )
                continue;
            const bool found = std::any_of( opens.begin(), opens.end(), [ & ]( Subset v ) {
                return s.subset_of( v ) && f.preimage( v ).subset_of( u );
            } );
            if ( !found )
                return std::pair{ s, u };
        }
    }
    return std::nullopt;
}

struct SubspaceNormality
{
    /// Softly πgD̂-normality of every subspace, indexed by carrier bits.
    std::vector< signed char > softly;
};

SubspaceNormality subspace_normality( const Topology& t )
{
    SubspaceNormality out{ std::vector< signed char >( 1U << t.size(), 0 ) };
    for ( Subset m : all_subsets( t.size() ) )
        if ( !m.is_empty() )
            out.softly[ m.bits() ] =
                is_normal_kind( ClassTable{ subspace( t, m ).topology }, NormalityKind::SoftlyPiGDhat ).holds;
    return out;
}

void run_map( const SpaceFacts& x, const SpaceFacts& y, const SubspaceNormality* images, const SpaceMap& f,
              std::string_view subject, Tally& tally )
{
    MapFacts is{ f };
    const std::pair size{ x.table.size(), y.table.size() };
    const auto& xl = x.table.space().labels();
    const auto& yl = y.table.space().labels();
    const bool injective = f.injective();
    const bool surjective = f.surjective();
    const auto make = [ & ]( std::string witness ) {
        return [ &, witness = std::move( witness ) ] { return Counterexample{ x.id, y.id, f.code(), witness }; };
    };
    const auto softly_of = [ & ]( const SpaceFacts& s ) {
        return is_normal_kind( s.table, NormalityKind::SoftlyPiGDhat ).render( s.table.space().labels() );
    };
    using M = MapClass;

    if ( tally.wants( T::OpenInjectiveImage ) )
    {
        const bool hyp = x.softly && injective && is( M::Continuous ) && is( M::OpenMap );
        const Subset img = f.image( x.table.space().full() );
        tally.record( T::OpenInjectiveImage, size, subject, implication( hyp, !hyp || images->softly[ img.bits() ] ),
                      make( "image=" + format_subset( img, yl ) ) );
    }
    if ( tally.wants( T::PiGDhatImage ) )
    {
        const bool hyp = is( M::AlmostPiContinuous ) && is( M::PiGDhatClosed );
        std::optional< Subset > bad;
        if ( hyp )
            for ( Subset a : x.table.family( ClosedClass::PiGDhat ) )
                if ( !y.table.in_class( ClosedClass::PiGDhat, f.image( a ) ) )
                {
                    bad = a;
                    break;
                }
        tally.record( T::PiGDhatImage, size, subject, implication( hyp, !bad ),
                      make( bad ? "A=" + format_subset( *bad, xl ) : std::string{} ) );
    }
    const auto characterization = [ & ]( TheoremId id, bool applies ) {
        if ( !tally.wants( id ) )
            return;
        if ( !applies )
        {
            tally.record( id, size, subject, Outcome::Vacuous, [] { return Counterexample{}; } );
            return;
        }
        const auto failure = shrinking_failure( f );
        const bool closed = is( M::AlmostPiGDhatClosed );
        tally.record( id, size, subject, agreement( closed == !failure ), [ & ] {
            if ( failure )
                return make( "S=" + format_subset( failure->first, yl ) + " U=" + format_subset( failure->second, xl ) +
                             " condition fails but the map is almost pigdhat-closed" )();
            return make( check_map_class( f, M::AlmostPiGDhatClosed ).render( xl ) +
                         " condition holds but the map is not almost pigdhat-closed" )();
        } );
    };
    if ( tally.wants( T::MapDiagram ) )
    {
        const auto bad = check_map_diagram( f );
        tally.record( T::MapDiagram, size, subject, agreement( !bad ), [ & ] {
            return make( bad ? std::string( token( bad->from ) ) + " without " + std::string( token( bad->to ) )
                             : std::string{} )();
        } );
    }
    characterization( T::AlmostClosedSurjectionChar, surjective );
    characterization( T::AlmostClosedChar, true );

    const auto forward = [ & ]( TheoremId id, bool hyp, bool conclusion, auto witness ) {
        if ( tally.wants( id ) )
            tally.record( id, size, subject, implication( hyp, conclusion ), [ & ] { return make( witness() )(); } );
    };
    if ( tally.wants( T::ContinuousClosedSurjection ) )
        forward( T::ContinuousClosedSurjection,
                 surjective && x.softly && is( M::Continuous ) && is( M::PiGDhatClosed ), y.softly,
                 [ & ] { return softly_of( y ); } );
    if ( tally.wants( T::IrresoluteInjection ) )
        forward( T::IrresoluteInjection,
                 injective && y.softly && is( M::ClosedMap ) && is( M::PiGDhatIrresolute ), x.softly,
                 [ & ] { return softly_of( x ); } );
    if ( tally.wants( T::SoftlyIrresoluteInjection ) )
        forward( T::SoftlyIrresoluteInjection,
                 injective && y.softly && is( M::ClosedMap ) && is( M::SoftlyPiGDhatIrresolute ), x.softly,
                 [ & ] { return softly_of( x ); } );
    if ( tally.wants( T::RcPreservingInjection ) || tally.wants( T::RcPreservingInjectionQuasi ) )
    {
        const bool hyp = injective && y.softly && is( M::AlmostPiGDhatContinuous ) && is( M::RcPreserving );
        forward( T::RcPreservingInjection, hyp, x.softly, [ & ] { return softly_of( x ); } );
        forward( T::RcPreservingInjectionQuasi, hyp, x.quasi, [ & ] {
            return is_normal_kind( x.table, NormalityKind::QuasiPiGDhat ).render( xl );
        } );
    }
    if ( tally.wants( T::PiContinuousSurjection ) || tally.wants( T::PiContinuousSurjectionClosedPairs ) )
    {
        const bool hyp = surjective && x.softly && is( M::PiContinuous ) && is( M::PiGDhatClosed );
        forward( T::PiContinuousSurjection, hyp, y.softly, [ & ] { return softly_of( y ); } );
        forward( T::PiContinuousSurjectionClosedPairs, hyp, y.closed_pair_separation,
                 [ & ] { return check_scheme( y.table, closed_pairs ).render( yl ); } );
    }
    if ( tally.wants( T::AlmostPiContinuousSurjection ) )
        forward( T::AlmostPiContinuousSurjection,
                 surjective && x.softly && is( M::AlmostPiContinuous ) && is( M::AlmostPiGDhatClosed ), y.softly,
                 [ & ] { return softly_of( y ); } );
    if ( tally.wants( T::AlmostContinuousSurjection ) )
        forward( T::AlmostContinuousSurjection,
                 surjective && x.normal && is( M::AlmostContinuous ) && is( M::AlmostClosed ), y.softly,
                 [ & ] { return softly_of( y ); } );
}

std::vector< Topology > spaces_up_to( unsigned n )
{
    std::vector< Topology > out;
    for ( unsigned k = 1; k <= n; ++k )
        for ( auto& t : enumerate_topologies( k ) )
            out.push_back( std::move( t ) );
    return out;
}

std::uint64_t count_spaces( unsigned n )
{
    static constexpr std::array< std::uint64_t, 6 > labeled{ 0, 1, 4, 29, 355, 6942 };
    if ( n >= labeled.size() )
        throw ScopeTooLarge( "exhaustive enumeration supports at most " + std::to_string( max_enumeration_points ) +
                             " points" );
    return labeled[ n ];
}

std::uint64_t power( std::uint64_t base, unsigned exp )
{
    std::uint64_t out = 1;
    while ( exp-- > 0 )
        out *= base;
    return out;
}

} // namespace

const TheoremInfo& info( TheoremId id ) { return theorem_info[ static_cast< std::size_t >( id ) ]; }

std::vector< TheoremId > parse_theorem_list( std::string_view text )
{
    std::vector< TheoremId > out;
    const auto add = [ & ]( TheoremId id ) {
        if ( std::find( out.begin(), out.end(), id ) == out.end() )
            out.push_back( id );
    };
    for ( const auto& raw : split_top_level( text ) )
    {
        const std::string item{ trim( raw ) };
        if ( item.empty() )
            continue;
        if ( item == "all" )
        {
            for ( TheoremId id : all_theorems )
                add( id );
            continue;
        }
        bool matched = false;
        for ( const auto& i : theorem_info )
            if ( i.token == item || i.alias == item )
            {
                add( i.id );
                matched = true;
            }
        const auto dash = item.find( '-', 1 );
        if ( !matched && dash != std::string::npos )
        {
            const auto lo = alias_number( std::string_view{ item }.substr( 0, dash ) );
            const auto hi = alias_number( std::string_view{ item }.substr( dash + 1 ) );
            if ( lo && hi )
                for ( const auto& i : theorem_info )
                    if ( auto v = alias_number( i.alias ); v && *lo <= *v && *v <= *hi )
                    {
                        add( i.id );
                        matched = true;
                    }
        }
        if ( !matched )
            throw std::invalid_argument( "unknown theorem '" + item + "'" );
    }
    std::sort( out.begin(), out.end() );
    return out;
}

std::uint64_t estimate_cost( std::span< const TheoremId > theorems, const HarnessOptions& options )
{
    bool spaces = false;
    bool maps = false;
    for ( TheoremId id : theorems )
        ( info( id ).scope == Scope::Map ? maps : spaces ) = true;
    std::uint64_t cost = 0;
    if ( spaces )
        for ( unsigned n = 1; n <= options.max_points; ++n )
            cost += count_spaces( n ) * power( 4, n ) * 16;
    if ( maps )
        for ( unsigned n = 1; n <= options.map_points; ++n )
            for ( unsigned m = 1; m <= options.map_points; ++m )
                cost += count_spaces( n ) * count_spaces( m ) * power( m, n ) * ( ( 1ULL << n ) + ( 1ULL << m ) ) * 8;
    return cost;
}

std::vector< TheoremLedger > run_harness( std::span< const TheoremId > theorems, const HarnessOptions& options )
{
    if ( options.max_points < 1 || options.map_points < 1 )
        throw std::invalid_argument( "harness scope must be at least one point" );
    const std::uint64_t cost = estimate_cost( theorems, options );
    if ( cost > options.budget )
        throw ScopeTooLarge( "estimated " + std::to_string( cost ) + " membership checks exceed the budget of " +
                             std::to_string( options.budget ) );

    bool spaces = false;
    bool maps = false;
    for ( TheoremId id : theorems )
        ( info( id ).scope == Scope::Map ? maps : spaces ) = true;

    const unsigned reach = std::max( spaces ? options.max_points : 0U, maps ? options.map_points : 0U );
    const auto topologies = spaces_up_to( reach );
    std::vector< std::unique_ptr< SpaceFacts > > facts( topologies.size() );
    std::vector< SubspaceNormality > images( topologies.size() );
    const bool need_images =
        maps && std::find( theorems.begin(), theorems.end(), T::OpenInjectiveImage ) != theorems.end();

    // Work units: one per space for the space theorems, one per domain space for the map theorems.
    std::vector< std::size_t > space_units;
    std::vector< std::size_t > map_units;
    std::vector< std::size_t > cod_range;
    for ( std::size_t i = 0; i < topologies.size(); ++i )
    {
        const unsigned n = topologies[ i ].size();
        if ( spaces && n <= options.max_points )
            space_units.push_back( i );
        if ( maps && n <= options.map_points )
        {
            map_units.push_back( i );
            cod_range.push_back( i );
        }
    }

    const unsigned jobs = std::max( 1U, options.jobs );
    std::mutex progress_lock;
    const auto report = [ & ]( const std::string& line ) {
        if ( !options.progress )
            return;
        std::lock_guard lock{ progress_lock };
        options.progress( line );
    };
    const auto parallel = [ & ]( std::size_t count, const std::function< void( std::size_t ) >& body,
                                 const std::string& label ) {
        std::atomic< std::size_t > next{ 0 };
        std::atomic< std::size_t > done{ 0 };
        std::atomic< bool > failed{ false };
        std::exception_ptr error;
        std::mutex error_lock;
        const auto worker = [ & ] {
            for ( std::size_t i; !failed && ( i = next++ ) < count; )
            {
                try
                {
                    body( i );
                }
                catch ( ... )
                {
                    std::lock_guard lock{ error_lock };
                    if ( !error )
                        error = std::current_exception();
                    failed = true;
                }
                const std::size_t d = ++done;
                if ( count >= 20 && d % ( count / 10 ) == 0 )
                    report( label + " " + std::to_string( d ) + "/" + std::to_string( count ) );
            }
        };
        std::vector< std::thread > pool;
        for ( unsigned j = 1; j < jobs; ++j )
            pool.emplace_back( worker );
        worker();
        for ( auto& t : pool )
            t.join();
        if ( error )
            std::rethrow_exception( error );
    };

    parallel( topologies.size(), [ & ]( std::size_t i ) {
        facts[ i ] = std::make_unique< SpaceFacts >( topologies[ i ] );
        if ( need_images && topologies[ i ].size() <= options.map_points )
            images[ i ] = subspace_normality( topologies[ i ] );
    }, "tables" );

    std::vector< TheoremId > space_ids;
    std::vector< TheoremId > map_ids;
    for ( TheoremId id : theorems )
        ( info( id ).scope == Scope::Map ? map_ids : space_ids ).push_back( id );

    std::vector< Tally > space_tallies( space_units.size(), Tally{ space_ids, options.records } );
    parallel( space_units.size(), [ & ]( std::size_t u ) {
        const SpaceFacts& x = *facts[ space_units[ u ] ];
        run_space( x, space_tallies[ u ] );
        run_subspaces( x, space_tallies[ u ] );
    }, "spaces" );

    std::vector< Tally > map_tallies( map_units.size(), Tally{ map_ids, options.records } );
    parallel( map_units.size(), [ & ]( std::size_t u ) {
        const SpaceFacts& x = *facts[ map_units[ u ] ];
        for ( std::size_t j : cod_range )
        {
            const SpaceFacts& y = *facts[ j ];
            const SubspaceNormality* img = need_images ? &images[ j ] : nullptr;
            const std::string subject = x.id + ">" + y.id;
            for_each_map( x.table, y.table, [ & ]( const SpaceMap& f ) {
                run_map( x, y, img, f, subject, map_tallies[ u ] );
                return true;
            } );
        }
    }, "maps" );

    std::vector< TheoremLedger > space_out;
    std::vector< TheoremLedger > map_out;
    for ( TheoremId id : space_ids )
        space_out.push_back( TheoremLedger{ id } );
    for ( TheoremId id : map_ids )
        map_out.push_back( TheoremLedger{ id } );
    for ( const auto& t : space_tallies )
        t.merge_into( space_out );
    for ( const auto& t : map_tallies )
        t.merge_into( map_out );

    std::vector< TheoremLedger > out;
    for ( TheoremId id : theorems )
    {
        auto& src = info( id ).scope == Scope::Map ? map_out : space_out;
        for ( auto& l : src )
            if ( l.id == id )
                out.push_back( std::move( l ) );
    }
    return out;
}

} // namespace fintop
