#pragma once

#include "fintop/atlas.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fintop
{

enum class TheoremId
{
    Interpolation,
    Cover,
    Urysohn,
    OpenInjectiveImage,
    ClosedDomainTrace,
    ClosedDomainHereditary,
    ClopenHereditary,
    T3ImpliesT2,
    PiGDhatImage,
    AlmostClosedSurjectionChar,
    ContinuousClosedSurjection,
    PiGDhatOpenChar,
    IrresoluteInjection,
    SoftlyIrresoluteInjection,
    AlmostClosedChar,
    RcPreservingInjection,
    RcPreservingInjectionQuasi,
    PiContinuousSurjection,
    PiContinuousSurjectionClosedPairs,
    AlmostPiContinuousSurjection,
    AlmostContinuousSurjection,
    SetDiagram,
    MapDiagram,
};

inline constexpr std::array all_theorems{
    TheoremId::Interpolation,
    TheoremId::Cover,
    TheoremId::Urysohn,
    TheoremId::OpenInjectiveImage,
    TheoremId::ClosedDomainTrace,
    TheoremId::ClosedDomainHereditary,
    TheoremId::ClopenHereditary,
    TheoremId::T3ImpliesT2,
    TheoremId::PiGDhatImage,
    TheoremId::AlmostClosedSurjectionChar,
    TheoremId::ContinuousClosedSurjection,
    TheoremId::PiGDhatOpenChar,
    TheoremId::IrresoluteInjection,
    TheoremId::SoftlyIrresoluteInjection,
    TheoremId::AlmostClosedChar,
    TheoremId::RcPreservingInjection,
    TheoremId::RcPreservingInjectionQuasi,
    TheoremId::PiContinuousSurjection,
    TheoremId::PiContinuousSurjectionClosedPairs,
    TheoremId::AlmostPiContinuousSurjection,
    TheoremId::AlmostContinuousSurjection,
    TheoremId::SetDiagram,
    TheoremId::MapDiagram,
};

/// What one instance of a theorem ranges over.
enum class Scope
{
    Space,      // one space
    Subspace,   // one space and one nonempty subspace carrier
    Map,        // one map between two spaces
};

struct TheoremInfo
{
    TheoremId id;
    std::string_view token;
    std::string_view alias;   // numeric label, e.g. "5.6" or "5.6p"; empty for the diagrams
    Scope scope;
    /// Hard invariants must never fail; the other theorems are reported, not asserted.
    bool hard;
    std::string_view statement;

    /// The alias if there is one, else the token.
    [[nodiscard]] std::string_view label() const { return alias.empty() ? token : alias; }
};

[[nodiscard]] const TheoremInfo& info( TheoremId id );

/// Comma-separated list of tokens, aliases and alias ranges ("5.1-5.8"); `all` selects everything.
/// Throws std::invalid_argument on an unknown item.
[[nodiscard]] std::vector< TheoremId > parse_theorem_list( std::string_view text );

struct Counterexample
{
    std::string dom;        // space id
    std::string cod;        // space id, or subspace carrier for subspace theorems
    std::string map;        // assignment code, empty unless a map theorem
    std::string witness;    // rendered failing sets
};

/// Outcome counts for one subject: a space, or a (domain, codomain) pair for map theorems.
struct SubjectRecord
{
    std::string subject;
    std::uint64_t pass = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t counterexamples = 0;
    /// First counterexample within the subject.
    std::string witness = {};
};

struct TheoremLedger
{
    TheoremId id;
    std::uint64_t pass = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t counterexamples = 0;
    /// Instances per (domain points, codomain or subspace points).
    std::map< std::pair< unsigned, unsigned >, std::uint64_t > instances = {};
    /// First counterexample in enumeration order.
    std::optional< Counterexample > first = {};
    /// Per-subject outcomes in enumeration order, filled when HarnessOptions::records is set.
    std::vector< SubjectRecord > records = {};

    [[nodiscard]] std::uint64_t total() const { return pass + vacuous + counterexamples; }
};

struct HarnessOptions
{
    /// Space and subspace theorems run over every space with 1..max_points points.
    unsigned max_points = 3;
    /// Map theorems run over every pair of spaces with 1..map_points points.
    unsigned map_points = 3;
    unsigned jobs = 1;
    /// Ceiling on estimated elementary membership checks.
    std::uint64_t budget = 100'000'000;
    bool records = false;
    /// Called with a short status line; may be invoked from worker threads, serialized.
    std::function< void( const std::string& ) > progress;
};

/// Estimated elementary checks for the requested theorems at the given scope.
[[nodiscard]] std::uint64_t estimate_cost( std::span< const TheoremId > theorems, const HarnessOptions& options );

/// Runs every requested theorem exhaustively; the result is independent of
/// `jobs`. Throws ScopeTooLarge when the estimate exceeds the budget.
[[nodiscard]] std::vector< TheoremLedger > run_harness( std::span< const TheoremId > theorems,
                                                        const HarnessOptions& options );

} // namespace fintop
