#pragma once

#include "fintop/space.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fintop
{

/// Requested work exceeds what exhaustive enumeration supports.
class ScopeTooLarge : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned max_enumeration_points = 5;

/// Family mask as fixed-width hex, most significant subset first.
[[nodiscard]] std::string family_hex( const Topology& t );

/// `n{N}:{hex}`, unique per labeled space.
[[nodiscard]] std::string space_id( const Topology& t );

/// Every topology on n points exactly once, ordered by family mask. With
/// `up_to_homeo`, one canonical representative per relabeling class, ordered
/// by canonical key. Throws ScopeTooLarge for n > 5.
[[nodiscard]] std::vector< Topology > enumerate_topologies( unsigned n, bool up_to_homeo = false );

struct CanonicalSpace
{
    Topology topology;
    /// family_hex of the relabeling with the smallest mask.
    std::string key;
    /// Number of distinct labeled spaces in the relabeling class.
    std::size_t labeled_count;
};

[[nodiscard]] CanonicalSpace canonical_form( const Topology& t );

} // namespace fintop
