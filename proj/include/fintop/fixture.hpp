#pragma once

#include "fintop/genclass.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fintop
{

/// One row of `claims.tsv`: fixture-id, predicate, expected, locator.
///
/// Predicates on a space fixture:
///     valid                         expected true/false
///     pigdhat-closed({a,b})         any set predicate applied to a literal
///     family(g-closed)              expected is a list of set literals
///     softly-pigdhat, pigdhat-t2    normality kinds and separation axioms
///     separated(open,A,B,U,V)       U,V disjoint kind-open with A⊆U, B⊆V
/// On a map fixture:
///     map(pigdhat-closed)           map class membership
struct Claim
{
    std::string fixture;
    std::string predicate;
    std::string expected;
    std::string locator;
    unsigned line = 0;
};

enum class FixtureStatus
{
    Confirmed,
    Discrepant,
    InvalidInput,
};

[[nodiscard]] std::string_view token( FixtureStatus s );

struct ClaimResult
{
    Claim claim;
    std::string actual;
    bool match = false;
    /// Empty on a match. For families `missing=... extra=... unrecognized=...`;
    /// otherwise `expected=X actual=Y` plus a witness when there is one.
    std::string diff;
};

struct FixtureReport
{
    std::string id;
    FixtureStatus status = FixtureStatus::Confirmed;
    /// Why the input was rejected, for InvalidInput.
    std::string reason;
    std::vector< ClaimResult > claims;

    [[nodiscard]] std::size_t mismatches() const;
};

/// Reads `claims.tsv`. Blank lines, `#` comments and a header row starting
/// with `fixture-id` are skipped. Throws InputError on a short row.
[[nodiscard]] std::vector< Claim > parse_claims( std::string_view text, const std::string& source = "<input>" );
[[nodiscard]] std::vector< Claim > load_claims( const std::filesystem::path& path );

/// Evaluates claims against an already validated space.
[[nodiscard]] FixtureReport check_claims( const ClassTable& table, std::string id, std::span< const Claim > claims );

/// Loads `<corpus>/<id>.top` or `<corpus>/<id>.map` and checks `claims`.
/// Claims naming an unknown predicate throw UnknownPredicateToken.
[[nodiscard]] FixtureReport run_fixture( const std::filesystem::path& corpus, const std::string& id,
                                         std::span< const Claim > claims );

/// Every fixture named in `<corpus>/claims.tsv`, in order of first mention.
[[nodiscard]] std::vector< FixtureReport > run_corpus( const std::filesystem::path& corpus );

/// Tab-separated rows: fixture, status, locator, predicate, expected, actual, diff.
[[nodiscard]] std::string format_reports_tsv( std::span< const FixtureReport > reports );

} // namespace fintop
