#pragma once

#include <bit>
#include <bitset>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace fintop
{

/// Largest supported ground set. Every family of subsets then fits a 256-bit mask.
inline constexpr unsigned max_points = 8;
inline constexpr unsigned max_subsets = 1U << max_points;

/// A subset of the ground set {0, ..., n-1}, stored as a membership bit vector.
///
/// The owning space supplies `n`; a Subset never carries it. Ordering is the
/// canonical one used for every family: by cardinality first, then by numeric
/// value of the bit vector.
class Subset
{
public:
    constexpr Subset() = default;
    constexpr explicit Subset( std::uint32_t bits ) : _bits{ bits } {}

    [[nodiscard]] static constexpr Subset empty() { return Subset{}; }
    [[nodiscard]] static constexpr Subset full( unsigned n ) { return Subset{ ( 1U << n ) - 1U }; }
    [[nodiscard]] static constexpr Subset singleton( unsigned point ) { return Subset{ 1U << point }; }

    [[nodiscard]] constexpr std::uint32_t bits() const { return _bits; }
    [[nodiscard]] constexpr unsigned size() const { return static_cast< unsigned >( std::popcount( _bits ) ); }
    [[nodiscard]] constexpr bool is_empty() const { return _bits == 0; }
    [[nodiscard]] constexpr bool contains( unsigned point ) const { return ( _bits >> point ) & 1U; }
    [[nodiscard]] constexpr bool subset_of( Subset other ) const { return ( _bits & ~other._bits ) == 0; }
    [[nodiscard]] constexpr bool disjoint_from( Subset other ) const { return ( _bits & other._bits ) == 0; }
    [[nodiscard]] constexpr Subset complement( unsigned n ) const { return Subset{ ~_bits & full( n )._bits }; }

    [[nodiscard]] constexpr Subset with( unsigned point ) const { return Subset{ _bits | ( 1U << point ) }; }

    constexpr Subset operator|( Subset o ) const { return Subset{ _bits | o._bits }; }
    constexpr Subset operator&( Subset o ) const { return Subset{ _bits & o._bits }; }
    constexpr Subset operator-( Subset o ) const { return Subset{ _bits & ~o._bits }; }
    constexpr Subset& operator|=( Subset o ) { _bits |= o._bits; return *this; }
    constexpr Subset& operator&=( Subset o ) { _bits &= o._bits; return *this; }

    constexpr bool operator==( const Subset& ) const = default;
    constexpr std::strong_ordering operator<=>( const Subset& o ) const
    {
        if ( auto c = size() <=> o.size(); c != 0 )
            return c;
        return _bits <=> o._bits;
    }

private:
    std::uint32_t _bits = 0;
};

/// All 2^n subsets of an n-point ground set, in canonical order.
[[nodiscard]] std::span< const Subset > all_subsets( unsigned n );

/// Members of `s` as point indices in increasing order.
[[nodiscard]] std::vector< unsigned > points_of( Subset s );

/// Membership mask over the 2^n possible subsets, indexed by Subset::bits().
using FamilyMask = std::bitset< max_subsets >;

/// A duplicate-free family of subsets kept in canonical order, with O(1) membership.
class SubsetFamily
{
public:
    SubsetFamily() = default;
    explicit SubsetFamily( unsigned n ) : _n{ n } {}
    SubsetFamily( unsigned n, const FamilyMask& mask );
    SubsetFamily( unsigned n, std::span< const Subset > members );

    [[nodiscard]] unsigned ground_size() const { return _n; }
    [[nodiscard]] bool contains( Subset s ) const { return _mask.test( s.bits() ); }
    [[nodiscard]] std::size_t size() const { return _members.size(); }
    [[nodiscard]] const std::vector< Subset >& members() const { return _members; }
    [[nodiscard]] const FamilyMask& mask() const { return _mask; }

    [[nodiscard]] auto begin() const { return _members.begin(); }
    [[nodiscard]] auto end() const { return _members.end(); }

    /// The family of complements of every member.
    [[nodiscard]] SubsetFamily complements() const;

    bool operator==( const SubsetFamily& o ) const { return _n == o._n && _mask == o._mask; }

private:
    unsigned _n = 0;
    FamilyMask _mask;
    std::vector< Subset > _members;
};

} // namespace fintop
