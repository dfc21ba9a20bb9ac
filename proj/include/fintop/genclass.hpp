#pragma once

#include "fintop/weakopen.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace fintop
{

/// Generalized closed-set classes, each defined by a guarded closure scheme.
enum class ClosedClass
{
    Closed,
    G,
    PiG,
    AlphaG,
    PiGAlpha,
    GSP,
    RG,
    GPR,
    W,
    PreSemi,
    D,
    Dhat,
    GDhat,
    PiGDhat,
};

inline constexpr std::array all_closed_classes{
    ClosedClass::Closed, ClosedClass::G,   ClosedClass::PiG,     ClosedClass::AlphaG, ClosedClass::PiGAlpha,
    ClosedClass::GSP,    ClosedClass::RG,  ClosedClass::GPR,     ClosedClass::W,      ClosedClass::PreSemi,
    ClosedClass::D,      ClosedClass::Dhat, ClosedClass::GDhat, ClosedClass::PiGDhat,
};

[[nodiscard]] std::string_view token( ClosedClass c );
[[nodiscard]] std::optional< ClosedClass > parse_closed_class( std::string_view token );

/// A is in the class iff closure(A) ⊆ U (or ⊆ int U) for every guard-open U ⊇ A.
/// An absent guard means every subset guards, which yields exactly the closed sets.
struct ClassScheme
{
    ClosureKind closure;
    std::optional< OpenKind > guard;
    bool guard_interiorized = false;
};

[[nodiscard]] ClassScheme scheme_of( ClosedClass c );

/// Every open-kind family, every closed-class family and every closure
/// operator of one space, materialized in dependency order.
///
/// Immutable once built; share freely between threads.
class ClassTable
{
public:
    explicit ClassTable( Topology space );

    [[nodiscard]] const Topology& space() const { return _space; }
    [[nodiscard]] unsigned size() const { return _space.size(); }

    [[nodiscard]] const SubsetFamily& open_family( OpenKind k ) const { return _open[ index( k ) ]; }
    /// Complements of the k-open sets.
    [[nodiscard]] const SubsetFamily& closed_family( OpenKind k ) const { return _closed[ index( k ) ]; }
    [[nodiscard]] const SubsetFamily& family( ClosedClass c ) const { return _classes[ index( c ) ]; }

    [[nodiscard]] bool is_open( OpenKind k, Subset a ) const { return open_family( k ).contains( a ); }
    [[nodiscard]] bool is_closed( OpenKind k, Subset a ) const { return closed_family( k ).contains( a ); }
    [[nodiscard]] bool in_class( ClosedClass c, Subset a ) const { return family( c ).contains( a ); }

    [[nodiscard]] Subset closure( ClosureKind k, Subset a ) const { return _closure[ index( k ) ][ a.bits() ]; }
    [[nodiscard]] Subset interior( ClosureKind k, Subset a ) const
    {
        const unsigned n = size();
        return closure( k, a.complement( n ) ).complement( n );
    }

    /// Regular closed sets, i.e. closures of open sets that equal cl int of themselves.
    [[nodiscard]] const SubsetFamily& regular_closed() const { return closed_family( OpenKind::RegularOpen ); }
    [[nodiscard]] const SubsetFamily& pi_closed() const { return closed_family( OpenKind::PiOpen ); }

private:
    template < typename E > static constexpr std::size_t index( E e ) { return static_cast< std::size_t >( e ); }

    void set_open( OpenKind k, SubsetFamily f );
    void set_class( ClosedClass c, const FamilyMask& members );
    void set_closure( ClosureKind k );
    [[nodiscard]] FamilyMask build_class( ClosedClass c ) const;

    Topology _space;
    std::array< SubsetFamily, all_open_kinds.size() > _open;
    std::array< SubsetFamily, all_open_kinds.size() > _closed;
    std::array< SubsetFamily, all_closed_classes.size() > _classes;
    std::array< std::vector< Subset >, all_closure_kinds.size() > _closure;
};

[[nodiscard]] inline ClassTable build_class_table( const Topology& t ) { return ClassTable{ t }; }

/// Evaluates the class scheme for `a` directly, scanning the guard family per
/// query. Independent of the family materialization in ClassTable.
[[nodiscard]] bool is_in_class( const ClassTable& table, ClosedClass c, Subset a );

/// An implication between two subset predicates, as drawn in the diagram.
struct SetArrow
{
    std::string_view name;
    /// Predicate tokens understood by resolve_set_predicate.
    std::string_view source;
    std::string_view target;
};

/// Arrows checked by check_implication_diagram: the 3×3 grid of closed,
/// g-, πg-closed over plain, α-, D̂-closures, plus the inclusions of the
/// closed/α/pre/semi-closed and w-closed sets into the πgD̂-closed sets.
[[nodiscard]] std::span< const SetArrow > implication_arrows();

/// The strict grid arrows only (the twelve edges of the 3×3 diagram).
[[nodiscard]] std::span< const SetArrow > grid_arrows();

/// Resolves tokens like `closed`, `g-closed`, `alpha-closed`, `pigdhat-closed`,
/// `semi-open`, `ro-open` to a subset predicate over a ClassTable.
struct SetPredicate
{
    enum class Source
    {
        Class,
        KindOpen,
        KindClosed,
    } source;
    ClosedClass closed_class = ClosedClass::Closed;
    OpenKind kind = OpenKind::Open;

    [[nodiscard]] bool operator()( const ClassTable& table, Subset a ) const;
};

[[nodiscard]] std::optional< SetPredicate > resolve_set_predicate( std::string_view token );

struct DiagramViolation
{
    std::string_view arrow;
    Subset set;
};

/// First violating (arrow, set) in arrow order then canonical set order, if any.
[[nodiscard]] std::optional< DiagramViolation > check_implication_diagram( const ClassTable& table );

} // namespace fintop
