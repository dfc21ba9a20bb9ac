#pragma once

#include "fintop/genclass.hpp"
#include "fintop/verdict.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace fintop
{

enum class NormalityKind
{
    Normal,
    QuasiNormal,
    AlmostNormal,
    MildlyNormal,
    SoftlyNormal,
    PiNormal,
    PiGDhatNormal,
    QuasiPiGDhat,
    AlmostPiGDhat,
    MildlyPiGDhat,
    SoftlyPiGDhat,
};

inline constexpr std::array all_normality_kinds{
    NormalityKind::Normal,        NormalityKind::QuasiNormal,  NormalityKind::AlmostNormal,
    NormalityKind::MildlyNormal,  NormalityKind::SoftlyNormal, NormalityKind::PiNormal,
    NormalityKind::PiGDhatNormal, NormalityKind::QuasiPiGDhat, NormalityKind::AlmostPiGDhat,
    NormalityKind::MildlyPiGDhat, NormalityKind::SoftlyPiGDhat,
};

[[nodiscard]] std::string_view token( NormalityKind k );
[[nodiscard]] std::optional< NormalityKind > parse_normality_kind( std::string_view token );

/// Which sets may appear on one side of a pair to be separated.
enum class PairSide
{
    Closed,
    PiClosed,
    RegularClosed,
};

/// Disjoint pairs (A, B) with A from `first` and B from `second` must be
/// separated by disjoint members U ⊇ A, V ⊇ B of the `separator` family.
/// Separation is symmetric, so "one of each" schemes need only one order.
struct NormalityScheme
{
    PairSide first;
    PairSide second;
    OpenKind separator;
};

[[nodiscard]] NormalityScheme scheme_of( NormalityKind k );

[[nodiscard]] const SubsetFamily& side_family( const ClassTable& table, PairSide side );

/// First (U, V) in canonical order with U ⊇ a, V ⊇ b, U ∩ V = ∅, both in `separators`.
[[nodiscard]] std::optional< std::pair< Subset, Subset > > find_separators( const SubsetFamily& separators, Subset a,
                                                                            Subset b );

/// Whether the given (u, v) separate (a, b) within the separator kind.
[[nodiscard]] bool separates( const ClassTable& table, OpenKind separator, Subset a, Subset b, Subset u, Subset v );

/// Holds iff every qualifying pair is separated; otherwise the witness names the
/// first failing pair as A and B.
[[nodiscard]] Verdict check_scheme( const ClassTable& table, const NormalityScheme& scheme );

[[nodiscard]] Verdict is_normal_kind( const ClassTable& table, NormalityKind k );

/// True iff (a, b) qualify for `scheme` and admit no separators: replays a failure witness.
[[nodiscard]] bool is_unseparated_pair( const ClassTable& table, const NormalityScheme& scheme, Subset a, Subset b );

/// Verdicts for every kind of one space, indexed by NormalityKind.
using NormalityProfile = std::array< Verdict, all_normality_kinds.size() >;
[[nodiscard]] NormalityProfile normality_profile( const ClassTable& table );

struct NormalityArrow
{
    std::string_view name;
    NormalityKind from;
    NormalityKind to;
};

[[nodiscard]] std::span< const NormalityArrow > normality_arrows();

/// Checks every arrow of the normality implication diagram; the first violated
/// arrow is named in the detail.
[[nodiscard]] Verdict check_normality_diagram( const ClassTable& table );
[[nodiscard]] Verdict check_normality_diagram( const NormalityProfile& profile );

/// Several characterizations of one property evaluated independently.
struct EquivalenceReport
{
    std::vector< std::string > names;
    std::vector< Verdict > conditions;

    [[nodiscard]] bool agree() const;
    /// Indices of the first pair of conditions with different truth values.
    [[nodiscard]] std::optional< std::pair< std::size_t, std::size_t > > first_disagreement() const;
    /// Summary as a Verdict: holds iff all agree; otherwise the witness of the failing side.
    [[nodiscard]] Verdict as_verdict() const;
};

/// Softly πgD̂-normality against its interpolation characterizations
/// (π-closed inside regular open, regular closed inside π-open, and
/// separation with disjoint πgD̂-closures).
[[nodiscard]] EquivalenceReport check_interpolation_equivalence( const ClassTable& table );

/// Softly πgD̂-normality against the cover characterization (a π-open and a
/// regular open set covering X shrink to complementary πgD̂-closed sets) and
/// the π-closed/regular-open interpolation.
[[nodiscard]] EquivalenceReport check_cover_equivalence( const ClassTable& table );

/// Some clopen C has b ⊆ C and a ∩ C = ∅. On a finite space this is exactly
/// when a continuous f into [0, 1] has f ≡ 0 on a and f ≡ 1 on b, since every
/// fiber of such f is open and hence clopen.
[[nodiscard]] std::optional< Subset > clopen_separator( const Topology& t, Subset a, Subset b );

/// Softly πgD̂-normality against clopen separation of every disjoint
/// (π-closed, regular closed) pair.
[[nodiscard]] EquivalenceReport check_urysohn_equivalence( const ClassTable& table );

enum class SeparationAxiom
{
    T1,
    T2,
    T3,
};

/// πgD̂ separation: T1 means every singleton is πgD̂-closed, T2 means distinct
/// points have disjoint πgD̂-open neighbourhoods, T3 means softly πgD̂-normal and T1.
[[nodiscard]] Verdict separation_axiom( const ClassTable& table, SeparationAxiom axiom );

} // namespace fintop
