#pragma once

#include "fintop/subset.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fintop
{

enum class TopologyErrorKind
{
    BadPointCount,
    SubsetOutOfRange,
    MissingEmpty,
    MissingFull,
    NotClosedUnderUnion,
    NotClosedUnderIntersection,
};

/// Why a family was rejected. For the closure failures `first` and `second`
/// are the first offending pair in canonical order.
struct TopologyError
{
    TopologyErrorKind kind;
    Subset first;
    Subset second;

    [[nodiscard]] std::string describe( const std::vector< std::string >& labels ) const;
};

class Topology;

using Validation = std::variant< Topology, TopologyError >;

/// A finite topological space: a validated open-set family over n points.
///
/// Immutable after construction. Interior and closure of every subset are
/// tabulated up front, so both are O(1) lookups.
class Topology
{
public:
    [[nodiscard]] unsigned size() const { return _n; }
    [[nodiscard]] Subset full() const { return Subset::full( _n ); }
    [[nodiscard]] const SubsetFamily& opens() const { return _opens; }
    [[nodiscard]] const SubsetFamily& closeds() const { return _closeds; }
    [[nodiscard]] const std::vector< std::string >& labels() const { return _labels; }

    [[nodiscard]] bool is_open( Subset a ) const { return _opens.contains( a ); }
    [[nodiscard]] bool is_closed( Subset a ) const { return _closeds.contains( a ); }
    [[nodiscard]] bool is_clopen( Subset a ) const { return is_open( a ) && is_closed( a ); }

    /// Largest open subset of `a`.
    [[nodiscard]] Subset interior( Subset a ) const { return _interior[ a.bits() ]; }
    /// Smallest closed superset of `a`.
    [[nodiscard]] Subset closure( Subset a ) const { return _closure[ a.bits() ]; }

    /// Equality compares the open family only; labels are presentation.
    bool operator==( const Topology& o ) const { return _n == o._n && _opens == o._opens; }

private:
    Topology( unsigned n, SubsetFamily opens, std::vector< std::string > labels );

    friend Validation validate_topology( unsigned, std::span< const Subset >, std::vector< std::string > );

    unsigned _n;
    SubsetFamily _opens;
    SubsetFamily _closeds;
    std::vector< std::string > _labels;
    std::vector< Subset > _interior;
    std::vector< Subset > _closure;
};

/// Labels a, b, c, ... for an n-point space.
[[nodiscard]] std::vector< std::string > default_labels( unsigned n );

/// Checks that `family` contains the empty and the full set and is closed
/// under binary union and intersection. Empty `labels` selects default_labels.
[[nodiscard]] Validation validate_topology( unsigned n, std::span< const Subset > family,
                                            std::vector< std::string > labels = {} );

class TopologyException : public std::runtime_error
{
public:
    explicit TopologyException( TopologyError error, const std::string& what )
        : std::runtime_error( what ), _error{ error } {}
    [[nodiscard]] const TopologyError& error() const { return _error; }

private:
    TopologyError _error;
};

/// validate_topology for inputs known to be valid; throws TopologyException otherwise.
[[nodiscard]] Topology make_topology( unsigned n, std::span< const Subset > family,
                                      std::vector< std::string > labels = {} );
[[nodiscard]] Topology make_topology( unsigned n, const FamilyMask& family, std::vector< std::string > labels = {} );

[[nodiscard]] inline Subset interior( const Topology& t, Subset a ) { return t.interior( a ); }
[[nodiscard]] inline Subset closure( const Topology& t, Subset a ) { return t.closure( a ); }
[[nodiscard]] inline bool is_clopen( const Topology& t, Subset a ) { return t.is_clopen( a ); }

/// A subspace together with the map from its point indices to the parent's.
struct Subspace
{
    Topology topology;
    std::vector< unsigned > embedding;

    /// `a ∩ carrier`, expressed in subspace indices.
    [[nodiscard]] Subset restrict( Subset a ) const;
    /// Subspace subset expressed in parent indices.
    [[nodiscard]] Subset lift( Subset a ) const;
};

/// Relative topology on `carrier`. Throws std::invalid_argument on an empty carrier.
[[nodiscard]] Subspace subspace( const Topology& t, Subset carrier );

/// Image of `a` under the point permutation `perm` (point i goes to perm[i]).
[[nodiscard]] Subset permute( Subset a, std::span< const unsigned > perm );

/// The space obtained by renaming point i to perm[i]; labels travel with points.
[[nodiscard]] Topology relabel( const Topology& t, std::span< const unsigned > perm );

} // namespace fintop
