#pragma once

#include "fintop/space.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fintop
{

/// Malformed input file; the message reads `source:line: reason`.
class InputError : public std::runtime_error
{
public:
    InputError( const std::string& source, unsigned line, const std::string& reason );

    [[nodiscard]] unsigned line() const { return _line; }

private:
    unsigned _line;
};

/// A parsed `.top` file. The family is not yet validated as a topology.
///
///     points: a,b,c
///     open: {}
///     open: {a}
///     open: {*}      # the full set
struct SpaceFile
{
    std::vector< std::string > labels;
    std::vector< Subset > family;

    [[nodiscard]] Validation validate() const { return validate_topology( size(), family, labels ); }
    [[nodiscard]] unsigned size() const { return static_cast< unsigned >( labels.size() ); }
};

[[nodiscard]] SpaceFile parse_space( std::string_view text, const std::string& source = "<input>" );
[[nodiscard]] SpaceFile load_space( const std::filesystem::path& path );

/// Renders `t` in the `.top` format, one open set per line in canonical order.
[[nodiscard]] std::string format_space( const Topology& t );

/// A parsed `.map` file; paths are resolved against the map file's directory.
///
///     from: tau.top
///     to: sigma.top
///     assign: a->a, b->b
struct MapFile
{
    std::filesystem::path from;
    std::filesystem::path to;
    std::vector< std::pair< std::string, std::string > > assign;
    std::string source;
    unsigned assign_line = 0;

    /// Codomain index for each domain point. Throws InputError on unknown,
    /// repeated or missing points.
    [[nodiscard]] std::vector< std::uint8_t > resolve( const std::vector< std::string >& dom,
                                                       const std::vector< std::string >& cod ) const;
};

[[nodiscard]] MapFile parse_map( std::string_view text, const std::string& source = "<input>",
                                 const std::filesystem::path& base = {} );
[[nodiscard]] MapFile load_map( const std::filesystem::path& path );

[[nodiscard]] std::string read_file( const std::filesystem::path& path );

} // namespace fintop
