#pragma once

#include "fintop/space.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace fintop
{

class ClassTable;

/// Kinds of "open" sets. The first seven are defined by formulas over the
/// topology; the rest are complements of generalized closed classes and can
/// only be answered through a ClassTable.
enum class OpenKind
{
    Open,
    RegularOpen,
    PreOpen,
    SemiOpen,
    AlphaOpen,
    SemiPreOpen,
    PiOpen,
    GOpen,
    WOpen,
    DOpen,
    DhatOpen,
    PiGDhatOpen,
};

inline constexpr std::array all_open_kinds{
    OpenKind::Open,      OpenKind::RegularOpen, OpenKind::PreOpen, OpenKind::SemiOpen,
    OpenKind::AlphaOpen, OpenKind::SemiPreOpen, OpenKind::PiOpen,  OpenKind::GOpen,
    OpenKind::WOpen,     OpenKind::DOpen,       OpenKind::DhatOpen, OpenKind::PiGDhatOpen,
};

/// Closure operators: each is the intersection of all closed supersets for its kind.
enum class ClosureKind
{
    Cl,
    SCl,
    PCl,
    AlphaCl,
    SPCl,
    DhatCl,
    PiGDhatCl,
};

inline constexpr std::array all_closure_kinds{
    ClosureKind::Cl,   ClosureKind::SCl,    ClosureKind::PCl,      ClosureKind::AlphaCl,
    ClosureKind::SPCl, ClosureKind::DhatCl, ClosureKind::PiGDhatCl,
};

[[nodiscard]] std::string_view token( OpenKind k );
[[nodiscard]] std::optional< OpenKind > parse_open_kind( std::string_view token );
[[nodiscard]] std::string_view token( ClosureKind k );

[[nodiscard]] constexpr bool is_intrinsic( OpenKind k ) { return k <= OpenKind::PiOpen; }

/// The open kind whose complements are the "closed" sets of this closure operator.
[[nodiscard]] OpenKind open_side( ClosureKind k );

/// Direct evaluation of the defining formula for an intrinsic kind:
/// regular open A = int cl A, pre-open A ⊆ int cl A, semi-open A ⊆ cl int A,
/// α-open A ⊆ int cl int A, semi-preopen A ⊆ cl int cl A, π-open = finite union
/// of regular opens. Throws std::invalid_argument for a delegated kind.
[[nodiscard]] bool is_kind_open( const Topology& t, OpenKind k, Subset a );

/// Membership for any kind, consulting the memoized families of `table`.
[[nodiscard]] bool is_kind_open( const ClassTable& table, OpenKind k, Subset a );

/// Regular open sets closed under binary union.
[[nodiscard]] SubsetFamily pi_open_family( const Topology& t );

/// Intersection of all members of `closed` that contain `a`. The result need
/// not itself belong to `closed`.
[[nodiscard]] Subset intersect_supersets( const SubsetFamily& closed, Subset a );

[[nodiscard]] Subset kind_closure( const ClassTable& table, ClosureKind k, Subset a );
/// Union of all k-open subsets of `a`.
[[nodiscard]] Subset kind_interior( const ClassTable& table, ClosureKind k, Subset a );

} // namespace fintop
