#pragma once

#include "fintop/genclass.hpp"
#include "fintop/verdict.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace fintop
{

/// A point function between two finite spaces, stored as a dense index array.
///
/// Holds references to the class tables of both spaces; they must outlive the map.
class SpaceMap
{
public:
    SpaceMap( const ClassTable& dom, const ClassTable& cod, std::vector< std::uint8_t > assign );

    [[nodiscard]] const ClassTable& dom() const { return *_dom; }
    [[nodiscard]] const ClassTable& cod() const { return *_cod; }
    [[nodiscard]] const std::vector< std::uint8_t >& assign() const { return _assign; }
    [[nodiscard]] unsigned operator()( unsigned point ) const { return _assign[ point ]; }

    [[nodiscard]] Subset image( Subset a ) const;
    [[nodiscard]] Subset preimage( Subset b ) const;
    [[nodiscard]] bool injective() const;
    [[nodiscard]] bool surjective() const;

    /// `a->x, b->y` using the labels of both spaces.
    [[nodiscard]] std::string describe() const;
    /// Codomain indices as a digit string, point 0 first: "0120".
    [[nodiscard]] std::string code() const;

private:
    const ClassTable* _dom;
    const ClassTable* _cod;
    std::vector< std::uint8_t > _assign;
};

enum class MapClass
{
    Continuous,
    OpenMap,
    ClosedMap,
    AlmostClosed,
    PiGDhatClosed,
    AlmostPiGDhatClosed,
    PiContinuous,
    PiGAlphaContinuous,
    PiGDhatContinuous,
    AlmostContinuous,
    AlmostPiContinuous,
    AlmostPiGAlphaContinuous,
    AlmostPiGDhatContinuous,
    RcPreserving,
    SoftlyPiGDhatIrresolute,
    // image classes of the map diagram and the worked examples
    AlphaClosed,
    GAlphaClosed,
    PiGAlphaClosed,
    PiGClosed,
    AlmostDhatClosed,
    AlmostGDhatClosed,
    AlmostPiGAlphaClosed,
    // preimages of πgD̂-closed sets are πgD̂-closed
    PiGDhatIrresolute,
};

inline constexpr std::array all_map_classes{
    MapClass::Continuous,          MapClass::OpenMap,
    MapClass::ClosedMap,           MapClass::AlmostClosed,
    MapClass::PiGDhatClosed,       MapClass::AlmostPiGDhatClosed,
    MapClass::PiContinuous,        MapClass::PiGAlphaContinuous,
    MapClass::PiGDhatContinuous,   MapClass::AlmostContinuous,
    MapClass::AlmostPiContinuous,  MapClass::AlmostPiGAlphaContinuous,
    MapClass::AlmostPiGDhatContinuous, MapClass::RcPreserving,
    MapClass::SoftlyPiGDhatIrresolute, MapClass::AlphaClosed,
    MapClass::GAlphaClosed,        MapClass::PiGAlphaClosed,
    MapClass::PiGClosed,           MapClass::AlmostDhatClosed,
    MapClass::AlmostGDhatClosed,   MapClass::AlmostPiGAlphaClosed,
    MapClass::PiGDhatIrresolute,
};

[[nodiscard]] std::string_view token( MapClass c );
[[nodiscard]] std::optional< MapClass > parse_map_class( std::string_view token );

/// Image classes send every source set of the domain to a target set of the
/// codomain; preimage classes pull every source set of the codomain back to a
/// target set of the domain. The softly πgD̂-irresolute class has no scheme.
struct MapScheme
{
    enum class Direction
    {
        Image,
        Preimage,
    } direction;
    enum class Source
    {
        Open,
        Closed,
        RegularClosed,
        PiGDhatClosed,
    } source;
    std::string_view target;   // set predicate token
};

[[nodiscard]] std::optional< MapScheme > scheme_of( MapClass c );

/// Holds iff the class condition is met; otherwise the witness names the
/// offending source set as F (and the point x and neighbourhood V for the
/// irresolute class).
[[nodiscard]] Verdict check_map_class( const SpaceMap& f, MapClass c );
[[nodiscard]] inline bool is_map_class( const SpaceMap& f, MapClass c ) { return check_map_class( f, c ).holds; }

/// Bijective, continuous and open.
[[nodiscard]] bool is_homeomorphism( const SpaceMap& f );

/// Some w in the πgD̂-open family has y ∈ w ⊆ v.
[[nodiscard]] bool is_pigdhat_neighbourhood( const ClassTable& table, unsigned y, Subset v );

/// Calls `visit` on every map dom → cod in lexicographic order of the
/// assignment, point 0 most significant. Stops early when `visit` returns false.
/// `leading`, when set, fixes the image of point 0 (one shard of the enumeration).
void for_each_map( const ClassTable& dom, const ClassTable& cod, const std::function< bool( const SpaceMap& ) >& visit,
                   std::optional< unsigned > leading = std::nullopt );

/// All maps passing every class in `filter`, in for_each_map order.
[[nodiscard]] std::vector< SpaceMap > enumerate_maps( const ClassTable& dom, const ClassTable& cod,
                                                      std::span< const MapClass > filter = {} );

struct MapArrow
{
    MapClass from;
    MapClass to;
};

/// The grid of closed-type map classes (closed, α, gα, πgα against their
/// almost D̂-variants) plus the closed and πgD̂-closed rows and the
/// continuity strengthenings.
[[nodiscard]] std::span< const MapArrow > map_arrows();

/// First violated arrow for `f`, if any.
[[nodiscard]] std::optional< MapArrow > check_map_diagram( const SpaceMap& f );

} // namespace fintop
