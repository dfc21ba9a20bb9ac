#include "fintop/genclass.hpp"

#include <stdexcept>

namespace fintop
{

namespace
{

constexpr std::array< std::string_view, all_closed_classes.size() > class_tokens{
    "closed", "g", "pig", "alphag", "pigalpha", "gsp", "rg", "gpr", "w", "presemi", "d", "dhat", "gdhat", "pigdhat",
};

constexpr std::array< SetArrow, 12 > grid{ {
    { "closed->g-closed", "closed", "g-closed" },
    { "g-closed->pig-closed", "g-closed", "pig-closed" },
    { "alpha-closed->alphag-closed", "alpha-closed", "alphag-closed" },
    { "alphag-closed->pigalpha-closed", "alphag-closed", "pigalpha-closed" },
    { "dhat-closed->gdhat-closed", "dhat-closed", "gdhat-closed" },
    { "gdhat-closed->pigdhat-closed", "gdhat-closed", "pigdhat-closed" },
    { "closed->alpha-closed", "closed", "alpha-closed" },
    { "alpha-closed->dhat-closed", "alpha-closed", "dhat-closed" },
    { "g-closed->alphag-closed", "g-closed", "alphag-closed" },
    { "alphag-closed->gdhat-closed", "alphag-closed", "gdhat-closed" },
    { "pig-closed->pigalpha-closed", "pig-closed", "pigalpha-closed" },
    { "pigalpha-closed->pigdhat-closed", "pigalpha-closed", "pigdhat-closed" },
} };

constexpr std::array< SetArrow, 17 > all_arrows{ {
    grid[ 0 ], grid[ 1 ], grid[ 2 ], grid[ 3 ], grid[ 4 ], grid[ 5 ],
    grid[ 6 ], grid[ 7 ], grid[ 8 ], grid[ 9 ], grid[ 10 ], grid[ 11 ],
    { "closed->pigdhat-closed", "closed", "pigdhat-closed" },
    { "alpha-closed->pigdhat-closed", "alpha-closed", "pigdhat-closed" },
    { "pre-closed->pigdhat-closed", "pre-closed", "pigdhat-closed" },
    { "semi-closed->pigdhat-closed", "semi-closed", "pigdhat-closed" },
    { "w-closed->pigdhat-closed", "w-closed", "pigdhat-closed" },
} };

// Marks every A that fails the scheme against some guard U ⊇ A. Guard-major,
// enumerating the submasks of each guard.
FamilyMask guarded_members( unsigned n, const std::vector< Subset >& closure, const std::vector< Subset >& guards,
                            const Topology* interiorize )
{
    FamilyMask members;
    for ( Subset a : all_subsets( n ) )
        members.set( a.bits() );
    for ( Subset u : guards )
    {
        const Subset bound = interiorize ? interiorize->interior( u ) : u;
        for ( std::uint32_t sub = u.bits();; sub = ( sub - 1 ) & u.bits() )
        {
            if ( !closure[ sub ].subset_of( bound ) )
                members.reset( sub );
            if ( sub == 0 )
                break;
        }
    }
    return members;
}

} // namespace

std::string_view token( ClosedClass c ) { return class_tokens[ static_cast< std::size_t >( c ) ]; }

std::optional< ClosedClass > parse_closed_class( std::string_view text )
{
    for ( ClosedClass c : all_closed_classes )
        if ( token( c ) == text )
            return c;
    return std::nullopt;
}

ClassScheme scheme_of( ClosedClass c )
{
    using enum ClosureKind;
    switch ( c )
    {
    case ClosedClass::Closed: return { Cl, std::nullopt };
    case ClosedClass::G: return { Cl, OpenKind::Open };
    case ClosedClass::PiG: return { Cl, OpenKind::PiOpen };
    case ClosedClass::AlphaG: return { AlphaCl, OpenKind::Open };
    case ClosedClass::PiGAlpha: return { AlphaCl, OpenKind::PiOpen };
    case ClosedClass::GSP: return { SPCl, OpenKind::Open };
    case ClosedClass::RG: return { Cl, OpenKind::RegularOpen };
    case ClosedClass::GPR: return { PCl, OpenKind::RegularOpen };
    case ClosedClass::W: return { Cl, OpenKind::SemiOpen };
    case ClosedClass::PreSemi: return { SPCl, OpenKind::GOpen };
    case ClosedClass::D: return { PCl, OpenKind::WOpen, true };
    case ClosedClass::Dhat: return { SPCl, OpenKind::DOpen };
    case ClosedClass::GDhat: return { DhatCl, OpenKind::Open };
    case ClosedClass::PiGDhat: return { DhatCl, OpenKind::PiOpen };
    }
    throw std::invalid_argument( "unknown closed class" );
}

ClassTable::ClassTable( Topology space ) : _space{ std::move( space ) }
{
    const unsigned n = _space.size();

    // τ-opens and the formula-defined kinds.
    set_open( OpenKind::Open, _space.opens() );
    for ( OpenKind k : { OpenKind::RegularOpen, OpenKind::PreOpen, OpenKind::SemiOpen, OpenKind::AlphaOpen,
                         OpenKind::SemiPreOpen } )
    {
        FamilyMask mask;
        for ( Subset a : all_subsets( n ) )
            if ( is_kind_open( _space, k, a ) )
                mask.set( a.bits() );
        set_open( k, { n, mask } );
    }
    set_open( OpenKind::PiOpen, pi_open_family( _space ) );
    for ( ClosureKind k : { ClosureKind::Cl, ClosureKind::SCl, ClosureKind::PCl, ClosureKind::AlphaCl,
                            ClosureKind::SPCl } )
        set_closure( k );

    for ( ClosedClass c : { ClosedClass::Closed, ClosedClass::G, ClosedClass::PiG, ClosedClass::AlphaG,
                            ClosedClass::PiGAlpha, ClosedClass::GSP, ClosedClass::RG, ClosedClass::GPR,
                            ClosedClass::W } )
        set_class( c, build_class( c ) );
    set_open( OpenKind::GOpen, family( ClosedClass::G ).complements() );
    set_open( OpenKind::WOpen, family( ClosedClass::W ).complements() );

    set_class( ClosedClass::PreSemi, build_class( ClosedClass::PreSemi ) );
    set_class( ClosedClass::D, build_class( ClosedClass::D ) );
    set_open( OpenKind::DOpen, family( ClosedClass::D ).complements() );

    set_class( ClosedClass::Dhat, build_class( ClosedClass::Dhat ) );
    set_open( OpenKind::DhatOpen, family( ClosedClass::Dhat ).complements() );
    set_closure( ClosureKind::DhatCl );

    set_class( ClosedClass::GDhat, build_class( ClosedClass::GDhat ) );
    set_class( ClosedClass::PiGDhat, build_class( ClosedClass::PiGDhat ) );
    set_open( OpenKind::PiGDhatOpen, family( ClosedClass::PiGDhat ).complements() );
    set_closure( ClosureKind::PiGDhatCl );
}

void ClassTable::set_open( OpenKind k, SubsetFamily f )
{
    _closed[ index( k ) ] = f.complements();
    _open[ index( k ) ] = std::move( f );
}

void ClassTable::set_class( ClosedClass c, const FamilyMask& members )
{
    _classes[ index( c ) ] = SubsetFamily{ size(), members };
}

void ClassTable::set_closure( ClosureKind k )
{
    const auto& closed = closed_family( open_side( k ) );
    auto& table = _closure[ index( k ) ];
    table.assign( std::size_t{ 1 } << size(), Subset{} );
    for ( Subset a : all_subsets( size() ) )
        table[ a.bits() ] = intersect_supersets( closed, a );
}

FamilyMask ClassTable::build_class( ClosedClass c ) const
{
    const ClassScheme scheme = scheme_of( c );
    const auto& closure = _closure[ index( scheme.closure ) ];
    if ( !scheme.guard )
    {
        std::vector< Subset > every( all_subsets( size() ).begin(), all_subsets( size() ).end() );
        return guarded_members( size(), closure, every, nullptr );
    }
    return guarded_members( size(), closure, open_family( *scheme.guard ).members(),
                            scheme.guard_interiorized ? &_space : nullptr );
}

bool is_in_class( const ClassTable& table, ClosedClass c, Subset a )
{
    const ClassScheme scheme = scheme_of( c );
    const Subset hull = table.closure( scheme.closure, a );
    const Topology& space = table.space();
    if ( !scheme.guard )
    {
        // Every superset guards, including A itself.
        return hull.subset_of( a );
    }
    for ( Subset u : table.open_family( *scheme.guard ) )
    {
        if ( !a.subset_of( u ) )
            continue;
        const Subset bound = scheme.guard_interiorized ? space.interior( u ) : u;
        if ( !hull.subset_of( bound ) )
            return false;
    }
    return true;
}

std::span< const SetArrow > implication_arrows() { return all_arrows; }

std::span< const SetArrow > grid_arrows() { return grid; }

bool SetPredicate::operator()( const ClassTable& table, Subset a ) const
{
    switch ( source )
    {
    case Source::Class: return table.in_class( closed_class, a );
    case Source::KindOpen: return table.is_open( kind, a );
    case Source::KindClosed: return table.is_closed( kind, a );
    }
    return false;
}

std::optional< SetPredicate > resolve_set_predicate( std::string_view text )
{
    using Source = SetPredicate::Source;
    if ( text == "closed" )
        return SetPredicate{ Source::Class, ClosedClass::Closed };
    if ( text == "open" )
        return SetPredicate{ Source::KindOpen, ClosedClass::Closed, OpenKind::Open };

    constexpr std::string_view closed_suffix = "-closed";
    constexpr std::string_view open_suffix = "-open";
    if ( text.ends_with( closed_suffix ) )
    {
        const auto stem = text.substr( 0, text.size() - closed_suffix.size() );
        if ( stem != "closed" )
            if ( auto c = parse_closed_class( stem ) )
                return SetPredicate{ Source::Class, *c };
        if ( auto k = parse_open_kind( stem ) )
            return SetPredicate{ Source::KindClosed, ClosedClass::Closed, *k };
        if ( stem == "rc" )
            return SetPredicate{ Source::KindClosed, ClosedClass::Closed, OpenKind::RegularOpen };
    }
    else if ( text.ends_with( open_suffix ) )
    {
        const auto stem = text.substr( 0, text.size() - open_suffix.size() );
        if ( auto k = parse_open_kind( stem ) )
            return SetPredicate{ Source::KindOpen, ClosedClass::Closed, *k };
    }
    return std::nullopt;
}

std::optional< DiagramViolation > check_implication_diagram( const ClassTable& table )
{
    for ( const SetArrow& arrow : implication_arrows() )
    {
        const auto source = resolve_set_predicate( arrow.source );
        const auto target = resolve_set_predicate( arrow.target );
        for ( Subset a : all_subsets( table.size() ) )
            if ( ( *source )( table, a ) && !( *target )( table, a ) )
                return DiagramViolation{ arrow.name, a };
    }
    return std::nullopt;
}

} // namespace fintop
