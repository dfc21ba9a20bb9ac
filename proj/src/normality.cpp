#include "fintop/normality.hpp"

#include <stdexcept>

namespace fintop
{

namespace
{

constexpr std::array< std::string_view, all_normality_kinds.size() > kind_tokens{
    "normal",         "quasi",         "almost",         "mildly",         "softly",         "pi-normal",
    "pigdhat-normal", "quasi-pigdhat", "almost-pigdhat", "mildly-pigdhat", "softly-pigdhat",
};

using enum NormalityKind;

constexpr std::array< NormalityArrow, 14 > arrows{ {
    { "normal->pi-normal", Normal, PiNormal },
    { "pi-normal->almost", PiNormal, AlmostNormal },
    { "almost->softly", AlmostNormal, SoftlyNormal },
    { "softly->mildly", SoftlyNormal, MildlyNormal },
    { "normal->quasi", Normal, QuasiNormal },
    { "quasi->quasi-pigdhat", QuasiNormal, QuasiPiGDhat },
    { "quasi-pigdhat->softly-pigdhat", QuasiPiGDhat, SoftlyPiGDhat },
    { "softly-pigdhat->mildly-pigdhat", SoftlyPiGDhat, MildlyPiGDhat },
    { "pi-normal->pigdhat-normal", PiNormal, PiGDhatNormal },
    { "almost->almost-pigdhat", AlmostNormal, AlmostPiGDhat },
    { "softly->softly-pigdhat", SoftlyNormal, SoftlyPiGDhat },
    { "mildly->mildly-pigdhat", MildlyNormal, MildlyPiGDhat },
    { "pigdhat-normal->almost-pigdhat", PiGDhatNormal, AlmostPiGDhat },
    { "almost-pigdhat->softly-pigdhat", AlmostPiGDhat, SoftlyPiGDhat },
} };

// Some πgD̂-open U with a ⊆ U and πgD̂cl(U) ⊆ b.
bool interpolates( const ClassTable& table, Subset a, Subset b )
{
    for ( Subset u : table.open_family( OpenKind::PiGDhatOpen ) )
        if ( a.subset_of( u ) && table.closure( ClosureKind::PiGDhatCl, u ).subset_of( b ) )
            return true;
    return false;
}

Verdict interpolation_condition( const ClassTable& table, const SubsetFamily& inner, const SubsetFamily& outer )
{
    for ( Subset a : inner )
        for ( Subset b : outer )
            if ( a.subset_of( b ) && !interpolates( table, a, b ) )
                return Verdict::fail( { { "A", a }, { "B", b } } );
    return Verdict::pass();
}

} // namespace

std::string_view token( NormalityKind k ) { return kind_tokens[ static_cast< std::size_t >( k ) ]; }

std::optional< NormalityKind > parse_normality_kind( std::string_view text )
{
    for ( NormalityKind k : all_normality_kinds )
        if ( token( k ) == text )
            return k;
    return std::nullopt;
}

NormalityScheme scheme_of( NormalityKind k )
{
    using enum PairSide;
    constexpr OpenKind open = OpenKind::Open;
    constexpr OpenKind weak = OpenKind::PiGDhatOpen;
    switch ( k )
    {
    case Normal: return { Closed, Closed, open };
    case QuasiNormal: return { PiClosed, PiClosed, open };
    case AlmostNormal: return { Closed, RegularClosed, open };
    case MildlyNormal: return { RegularClosed, RegularClosed, open };
    case SoftlyNormal: return { PiClosed, RegularClosed, open };
    case PiNormal: return { Closed, PiClosed, open };
    case PiGDhatNormal: return { Closed, PiClosed, weak };
    case QuasiPiGDhat: return { PiClosed, PiClosed, weak };
    case AlmostPiGDhat: return { Closed, RegularClosed, weak };
    case MildlyPiGDhat: return { RegularClosed, RegularClosed, weak };
    case SoftlyPiGDhat: return { PiClosed, RegularClosed, weak };
    }
    throw std::invalid_argument( "unknown normality kind" );
}

const SubsetFamily& side_family( const ClassTable& table, PairSide side )
{
    switch ( side )
    {
    case PairSide::Closed: return table.space().closeds();
    case PairSide::PiClosed: return table.pi_closed();
    case PairSide::RegularClosed: return table.regular_closed();
    }
    throw std::invalid_argument( "unknown pair side" );
}

std::optional< std::pair< Subset, Subset > > find_separators( const SubsetFamily& separators, Subset a, Subset b )
{
    for ( Subset u : separators )
    {
        if ( !a.subset_of( u ) || !u.disjoint_from( b ) )
            continue;
        for ( Subset v : separators )
            if ( b.subset_of( v ) && u.disjoint_from( v ) )
                return std::pair{ u, v };
    }
    return std::nullopt;
}

bool separates( const ClassTable& table, OpenKind separator, Subset a, Subset b, Subset u, Subset v )
{
    return table.is_open( separator, u ) && table.is_open( separator, v ) && a.subset_of( u ) && b.subset_of( v ) &&
           u.disjoint_from( v );
}

Verdict check_scheme( const ClassTable& table, const NormalityScheme& scheme )
{
    const auto& separators = table.open_family( scheme.separator );
    for ( Subset a : side_family( table, scheme.first ) )
        for ( Subset b : side_family( table, scheme.second ) )
        {
            if ( !a.disjoint_from( b ) )
                continue;
            // ∅ against anything is separated by (∅, X), which every separator family contains.
            if ( a.is_empty() || b.is_empty() )
                continue;
            if ( !find_separators( separators, a, b ) )
                return Verdict::fail( { { "A", a }, { "B", b } } );
        }
    return Verdict::pass();
}

Verdict is_normal_kind( const ClassTable& table, NormalityKind k ) { return check_scheme( table, scheme_of( k ) ); }

bool is_unseparated_pair( const ClassTable& table, const NormalityScheme& scheme, Subset a, Subset b )
{
    return side_family( table, scheme.first ).contains( a ) && side_family( table, scheme.second ).contains( b ) &&
           a.disjoint_from( b ) && !find_separators( table.open_family( scheme.separator ), a, b );
}

NormalityProfile normality_profile( const ClassTable& table )
{
    NormalityProfile out;
    for ( NormalityKind k : all_normality_kinds )
        out[ static_cast< std::size_t >( k ) ] = is_normal_kind( table, k );
    return out;
}

std::span< const NormalityArrow > normality_arrows() { return arrows; }

Verdict check_normality_diagram( const NormalityProfile& profile )
{
    for ( const auto& arrow : arrows )
        if ( profile[ static_cast< std::size_t >( arrow.from ) ].holds &&
             !profile[ static_cast< std::size_t >( arrow.to ) ].holds )
            return Verdict::fail( profile[ static_cast< std::size_t >( arrow.to ) ].witness, std::string( arrow.name ) );
    return Verdict::pass();
}

Verdict check_normality_diagram( const ClassTable& table ) { return check_normality_diagram( normality_profile( table ) ); }

bool EquivalenceReport::agree() const { return !first_disagreement(); }

std::optional< std::pair< std::size_t, std::size_t > > EquivalenceReport::first_disagreement() const
{
    for ( std::size_t i = 0; i < conditions.size(); ++i )
        for ( std::size_t j = i + 1; j < conditions.size(); ++j )
            if ( conditions[ i ].holds != conditions[ j ].holds )
                return std::pair{ i, j };
    return std::nullopt;
}

Verdict EquivalenceReport::as_verdict() const
{
    const auto split = first_disagreement();
    if ( !split )
        return Verdict::pass();
    const auto [ i, j ] = *split;
    const std::size_t failing = conditions[ i ].holds ? j : i;
    const std::size_t holding = failing == i ? j : i;
    return Verdict::fail( conditions[ failing ].witness, names[ holding ] + " holds but " + names[ failing ] + " fails" );
}

EquivalenceReport check_interpolation_equivalence( const ClassTable& table )
{
    EquivalenceReport report;
    report.names = { "softly-pigdhat", "pi-closed-in-regular-open", "regular-closed-in-pi-open", "closure-separation" };
    report.conditions.push_back( is_normal_kind( table, NormalityKind::SoftlyPiGDhat ) );
    report.conditions.push_back(
        interpolation_condition( table, table.pi_closed(), table.open_family( OpenKind::RegularOpen ) ) );
    report.conditions.push_back(
        interpolation_condition( table, table.regular_closed(), table.open_family( OpenKind::PiOpen ) ) );

    Verdict separated;
    const auto& weak = table.open_family( OpenKind::PiGDhatOpen );
    for ( Subset a : table.pi_closed() )
    {
        for ( Subset b : table.regular_closed() )
        {
            if ( !a.disjoint_from( b ) )
                continue;
            bool found = false;
            for ( Subset u : weak )
            {
                if ( !a.subset_of( u ) || !u.disjoint_from( b ) )
                    continue;
                const Subset cu = table.closure( ClosureKind::PiGDhatCl, u );
                for ( Subset v : weak )
                    if ( b.subset_of( v ) && u.disjoint_from( v ) &&
                         cu.disjoint_from( table.closure( ClosureKind::PiGDhatCl, v ) ) )
                    {
                        found = true;
                        break;
                    }
                if ( found )
                    break;
            }
            if ( !found )
            {
                separated = Verdict::fail( { { "A", a }, { "B", b } } );
                break;
            }
        }
        if ( !separated.holds )
            break;
    }
    report.conditions.push_back( separated );
    return report;
}

EquivalenceReport check_cover_equivalence( const ClassTable& table )
{
    EquivalenceReport report;
    report.names = { "softly-pigdhat", "cover-shrinking", "pi-closed-in-regular-open" };
    report.conditions.push_back( is_normal_kind( table, NormalityKind::SoftlyPiGDhat ) );

    const unsigned n = table.size();
    const Subset full = table.space().full();
    const auto& weakClosed = table.family( ClosedClass::PiGDhat );
    Verdict cover;
    for ( Subset u : table.open_family( OpenKind::PiOpen ) )
    {
        for ( Subset v : table.open_family( OpenKind::RegularOpen ) )
        {
            if ( ( u | v ) != full )
                continue;
            bool found = false;
            for ( Subset g : weakClosed )
            {
                const Subset h = g.complement( n );
                if ( g.subset_of( u ) && h.subset_of( v ) && weakClosed.contains( h ) )
                {
                    found = true;
                    break;
                }
            }
            if ( !found )
            {
                cover = Verdict::fail( { { "U", u }, { "V", v } } );
                break;
            }
        }
        if ( !cover.holds )
            break;
    }
    report.conditions.push_back( cover );
    report.conditions.push_back(
        interpolation_condition( table, table.pi_closed(), table.open_family( OpenKind::RegularOpen ) ) );
    return report;
}

std::optional< Subset > clopen_separator( const Topology& t, Subset a, Subset b )
{
    for ( Subset c : t.opens() )
        if ( t.is_closed( c ) && b.subset_of( c ) && a.disjoint_from( c ) )
            return c;
    return std::nullopt;
}

EquivalenceReport check_urysohn_equivalence( const ClassTable& table )
{
    EquivalenceReport report;
    report.names = { "softly-pigdhat", "continuous-separation" };
    report.conditions.push_back( is_normal_kind( table, NormalityKind::SoftlyPiGDhat ) );
    Verdict functional;
    for ( Subset a : table.pi_closed() )
    {
        for ( Subset b : table.regular_closed() )
            if ( a.disjoint_from( b ) && !clopen_separator( table.space(), a, b ) )
            {
                functional = Verdict::fail( { { "A", a }, { "B", b } } );
                break;
            }
        if ( !functional.holds )
            break;
    }
    report.conditions.push_back( functional );
    return report;
}

Verdict separation_axiom( const ClassTable& table, SeparationAxiom axiom )
{
    const unsigned n = table.size();
    switch ( axiom )
    {
    case SeparationAxiom::T1:
        for ( unsigned x = 0; x < n; ++x )
            if ( !table.in_class( ClosedClass::PiGDhat, Subset::singleton( x ) ) )
                return Verdict::fail( { { "x", Subset::singleton( x ) } } );
        return Verdict::pass();
    case SeparationAxiom::T2:
        for ( unsigned x = 0; x < n; ++x )
            for ( unsigned y = x + 1; y < n; ++y )
                if ( !find_separators( table.open_family( OpenKind::PiGDhatOpen ), Subset::singleton( x ),
                                       Subset::singleton( y ) ) )
                    return Verdict::fail( { { "x", Subset::singleton( x ) }, { "y", Subset::singleton( y ) } } );
        return Verdict::pass();
    case SeparationAxiom::T3:
    {
        auto softly = is_normal_kind( table, NormalityKind::SoftlyPiGDhat );
        if ( !softly.holds )
            return softly;
        return separation_axiom( table, SeparationAxiom::T1 );
    }
    }
    throw std::invalid_argument( "unknown separation axiom" );
}

} // namespace fintop
