#pragma once

// Naive reference implementations over std::set, used only by the tests.
// Everything here follows the textbook definitions literally and shares no
// code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

namespace oracle
{

using Set = std::set< int >;
using Family = std::set< Set >;

inline Set full( int n )
{
    Set s;
    for ( int i = 0; i < n; ++i )
        s.insert( i );
    return s;
}

inline bool subset( const Set& a, const Set& b ) { return std::includes( b.begin(), b.end(), a.begin(), a.end() ); }

inline Set unite( const Set& a, const Set& b )
{
    Set out = a;
    out.insert( b.begin(), b.end() );
    return out;
}

inline Set meet( const Set& a, const Set& b )
{
    Set out;
    for ( int x : a )
        if ( b.count( x ) )
            out.insert( x );
    return out;
}

inline Set minus( const Set& a, const Set& b )
{
    Set out;
    for ( int x : a )
        if ( !b.count( x ) )
            out.insert( x );
    return out;
}

inline std::vector< Set > powerset( int n )
{
    std::vector< Set > out;
    for ( int mask = 0; mask < ( 1 << n ); ++mask )
    {
        Set s;
        for ( int i = 0; i < n; ++i )
            if ( mask >> i & 1 )
                s.insert( i );
        out.push_back( s );
    }
    return out;
}

inline std::uint32_t bits( const Set& s )
{
    std::uint32_t out = 0;
    for ( int x : s )
        out |= 1U << x;
    return out;
}

inline Set from_bits( std::uint32_t b )
{
    Set s;
    for ( int i = 0; i < 32; ++i )
        if ( b >> i & 1 )
            s.insert( i );
    return s;
}

/// Every family on n points containing ∅ and X and closed under ∪ and ∩,
/// found by testing all 2^(2^n - 2) candidate families. Feasible for n ≤ 4.
inline std::vector< Family > all_topologies( int n )
{
    const auto subsets = powerset( n );
    std::vector< Set > middle;
    for ( const auto& s : subsets )
        if ( !s.empty() && s != full( n ) )
            middle.push_back( s );
    std::vector< Family > out;
    const std::uint64_t count = std::uint64_t{ 1 } << middle.size();
    for ( std::uint64_t pick = 0; pick < count; ++pick )
    {
        Family f{ Set{}, full( n ) };
        for ( std::size_t i = 0; i < middle.size(); ++i )
            if ( pick >> i & 1 )
                f.insert( middle[ i ] );
        bool ok = true;
        for ( auto it = f.begin(); ok && it != f.end(); ++it )
            for ( auto jt = f.begin(); ok && jt != f.end(); ++jt )
                ok = f.count( unite( *it, *jt ) ) && f.count( meet( *it, *jt ) );
        if ( ok )
            out.push_back( f );
    }
    return out;
}

struct Space
{
    int n;
    Family opens;

    [[nodiscard]] Set X() const { return full( n ); }
    [[nodiscard]] Set comp( const Set& a ) const { return minus( X(), a ); }

    [[nodiscard]] Set interior( const Set& a ) const
    {
        Set out;
        for ( const auto& u : opens )
            if ( subset( u, a ) )
                out = unite( out, u );
        return out;
    }

    [[nodiscard]] Set closure( const Set& a ) const
    {
        Set out = X();
        for ( const auto& u : opens )
        {
            const Set f = comp( u );
            if ( subset( a, f ) )
                out = meet( out, f );
        }
        return out;
    }

    [[nodiscard]] Family filter( const std::function< bool( const Set& ) >& pred ) const
    {
        Family out;
        for ( const auto& s : powerset( n ) )
            if ( pred( s ) )
                out.insert( s );
        return out;
    }

    [[nodiscard]] Family complements( const Family& f ) const
    {
        Family out;
        for ( const auto& s : f )
            out.insert( comp( s ) );
        return out;
    }

    /// Intersection of all members of `closed` containing a.
    [[nodiscard]] Set hull( const Family& closed, const Set& a ) const
    {
        Set out = X();
        for ( const auto& f : closed )
            if ( subset( a, f ) )
                out = meet( out, f );
        return out;
    }

    /// cl(A) ⊆ U (or int U) for every guard U ⊇ A.
    [[nodiscard]] Family guarded( const Family& closedForHull, const Family& guards, bool interiorize ) const
    {
        return filter( [ & ]( const Set& a ) {
            const Set h = hull( closedForHull, a );
            for ( const auto& u : guards )
                if ( subset( a, u ) && !subset( h, interiorize ? interior( u ) : u ) )
                    return false;
            return true;
        } );
    }
};

/// All families of one space, keyed by the library's tokens.
struct Families
{
    std::map< std::string, Family > open;    // open-kind token -> family
    std::map< std::string, Family > klass;   // closed-class token -> family
};

inline Families compute( const Space& s )
{
    Families out;
    auto& o = out.open;
    auto& c = out.klass;
    o[ "open" ] = s.opens;
    o[ "ro" ] = s.filter( [ & ]( const Set& a ) { return a == s.interior( s.closure( a ) ); } );
    o[ "pre" ] = s.filter( [ & ]( const Set& a ) { return subset( a, s.interior( s.closure( a ) ) ); } );
    o[ "semi" ] = s.filter( [ & ]( const Set& a ) { return subset( a, s.closure( s.interior( a ) ) ); } );
    o[ "alpha" ] = s.filter( [ & ]( const Set& a ) { return subset( a, s.interior( s.closure( s.interior( a ) ) ) ); } );
    o[ "sp" ] = s.filter( [ & ]( const Set& a ) { return subset( a, s.closure( s.interior( s.closure( a ) ) ) ); } );
    // π-open: A is the union of the regular opens it contains.
    o[ "pi" ] = s.filter( [ & ]( const Set& a ) {
        Set joined;
        for ( const auto& r : o[ "ro" ] )
            if ( subset( r, a ) )
                joined = unite( joined, r );
        return joined == a;
    } );

    const Family closed = s.complements( o[ "open" ] );
    const Family alphaClosed = s.complements( o[ "alpha" ] );
    const Family preClosed = s.complements( o[ "pre" ] );
    const Family spClosed = s.complements( o[ "sp" ] );

    c[ "closed" ] = closed;
    c[ "g" ] = s.guarded( closed, o[ "open" ], false );
    c[ "pig" ] = s.guarded( closed, o[ "pi" ], false );
    c[ "alphag" ] = s.guarded( alphaClosed, o[ "open" ], false );
    c[ "pigalpha" ] = s.guarded( alphaClosed, o[ "pi" ], false );
    c[ "gsp" ] = s.guarded( spClosed, o[ "open" ], false );
    c[ "rg" ] = s.guarded( closed, o[ "ro" ], false );
    c[ "gpr" ] = s.guarded( preClosed, o[ "ro" ], false );
    c[ "w" ] = s.guarded( closed, o[ "semi" ], false );
    o[ "g" ] = s.complements( c[ "g" ] );
    o[ "w" ] = s.complements( c[ "w" ] );
    c[ "presemi" ] = s.guarded( spClosed, o[ "g" ], false );
    c[ "d" ] = s.guarded( preClosed, o[ "w" ], true );
    o[ "d" ] = s.complements( c[ "d" ] );
    c[ "dhat" ] = s.guarded( spClosed, o[ "d" ], false );
    o[ "dhat" ] = s.complements( c[ "dhat" ] );
    c[ "gdhat" ] = s.guarded( c[ "dhat" ], o[ "open" ], false );
    c[ "pigdhat" ] = s.guarded( c[ "dhat" ], o[ "pi" ], false );
    o[ "pigdhat" ] = s.complements( c[ "pigdhat" ] );
    return out;
}

} // namespace oracle

namespace oracle
{

inline bool separated( const Family& separators, const Set& a, const Set& b )
{
    for ( const auto& u : separators )
        for ( const auto& v : separators )
            if ( subset( a, u ) && subset( b, v ) && meet( u, v ).empty() )
                return true;
    return false;
}

/// Every disjoint (a, b) from first × second is separated.
inline bool pairs_separated( const Family& first, const Family& second, const Family& separators )
{
    for ( const auto& a : first )
        for ( const auto& b : second )
            if ( meet( a, b ).empty() && !separated( separators, a, b ) )
                return false;
    return true;
}

/// Whether some f : X -> {0, 1/2, 1} that is continuous into [0, 1] has
/// f = 0 on a and f = 1 on b. A finite image carries the discrete subspace
/// topology, so continuity means every preimage of a set of values is open.
inline bool continuous_separation( const Space& s, const Set& a, const Set& b )
{
    int total = 1;
    for ( int i = 0; i < s.n; ++i )
        total *= 3;
    for ( int code = 0; code < total; ++code )
    {
        std::vector< int > value( s.n );
        for ( int i = 0, c = code; i < s.n; ++i, c /= 3 )
            value[ i ] = c % 3;
        bool ok = true;
        for ( int x : a )
            ok = ok && value[ x ] == 0;
        for ( int x : b )
            ok = ok && value[ x ] == 2;
        for ( int values = 0; ok && values < 8; ++values )
        {
            Set pre;
            for ( int i = 0; i < s.n; ++i )
                if ( values >> value[ i ] & 1 )
                    pre.insert( i );
            ok = s.opens.count( pre ) > 0;
        }
        if ( ok )
            return true;
    }
    return false;
}

} // namespace oracle

namespace oracle
{

/// Point i goes to assign[i].
using Assign = std::vector< int >;

inline Set image( const Assign& f, const Set& a )
{
    Set out;
    for ( int x : a )
        out.insert( f[ x ] );
    return out;
}

inline Set preimage( const Assign& f, const Set& b )
{
    Set out;
    for ( int x = 0; x < static_cast< int >( f.size() ); ++x )
        if ( b.count( f[ x ] ) )
            out.insert( x );
    return out;
}

struct Side
{
    const Space& space;
    const Families& families;

    [[nodiscard]] Family closed() const { return space.complements( space.opens ); }
    [[nodiscard]] Family regular_closed() const { return space.complements( families.open.at( "ro" ) ); }

    /// Sets satisfying a target token of the map classes.
    [[nodiscard]] Family target( const std::string& name ) const
    {
        if ( name == "open" )
            return space.opens;
        if ( name == "closed" )
            return closed();
        if ( name == "pi-closed" )
            return space.complements( families.open.at( "pi" ) );
        if ( name == "alpha-closed" )
            return space.complements( families.open.at( "alpha" ) );
        if ( name == "rc" )
            return regular_closed();
        return families.klass.at( name );
    }

    [[nodiscard]] bool neighbourhood( int y, const Set& v ) const
    {
        for ( const auto& w : space.complements( families.klass.at( "pigdhat" ) ) )
            if ( w.count( y ) && subset( w, v ) )
                return true;
        return false;
    }
};

/// Map-class membership straight from the definitions; tokens match the library's.
inline bool map_class( const Side& x, const Side& y, const Assign& f, const std::string& name )
{
    const auto forward = [ & ]( const Family& sources, const Family& targets ) {
        for ( const auto& s : sources )
            if ( !targets.count( image( f, s ) ) )
                return false;
        return true;
    };
    const auto backward = [ & ]( const Family& sources, const Family& targets ) {
        for ( const auto& s : sources )
            if ( !targets.count( preimage( f, s ) ) )
                return false;
        return true;
    };
    if ( name == "continuous" ) return backward( y.closed(), x.closed() );
    if ( name == "open" ) return forward( x.space.opens, y.space.opens );
    if ( name == "closed" ) return forward( x.closed(), y.closed() );
    if ( name == "almost-closed" ) return forward( x.regular_closed(), y.closed() );
    if ( name == "pigdhat-closed" ) return forward( x.closed(), y.target( "pigdhat" ) );
    if ( name == "almost-pigdhat-closed" ) return forward( x.regular_closed(), y.target( "pigdhat" ) );
    if ( name == "pi-continuous" ) return backward( y.closed(), x.target( "pi-closed" ) );
    if ( name == "pigalpha-continuous" ) return backward( y.closed(), x.target( "pigalpha" ) );
    if ( name == "pigdhat-continuous" ) return backward( y.closed(), x.target( "pigdhat" ) );
    if ( name == "almost-continuous" ) return backward( y.regular_closed(), x.closed() );
    if ( name == "almost-pi-continuous" ) return backward( y.regular_closed(), x.target( "pi-closed" ) );
    if ( name == "almost-pigalpha-continuous" ) return backward( y.regular_closed(), x.target( "pigalpha" ) );
    if ( name == "almost-pigdhat-continuous" ) return backward( y.regular_closed(), x.target( "pigdhat" ) );
    if ( name == "rc-preserving" ) return forward( x.regular_closed(), y.regular_closed() );
    if ( name == "alpha-closed" ) return forward( x.closed(), y.target( "alpha-closed" ) );
    if ( name == "galpha-closed" ) return forward( x.closed(), y.target( "alphag" ) );
    if ( name == "pigalpha-closed" ) return forward( x.closed(), y.target( "pigalpha" ) );
    if ( name == "pig-closed" ) return forward( x.closed(), y.target( "pig" ) );
    if ( name == "almost-dhat-closed" ) return forward( x.regular_closed(), y.target( "dhat" ) );
    if ( name == "almost-gdhat-closed" ) return forward( x.regular_closed(), y.target( "gdhat" ) );
    if ( name == "almost-pigalpha-closed" ) return forward( x.regular_closed(), y.target( "pigalpha" ) );
    if ( name == "pigdhat-irresolute" ) return backward( y.target( "pigdhat" ), x.target( "pigdhat" ) );
    if ( name == "softly-pigdhat-irresolute" )
    {
        const Family closed = x.target( "pigdhat" );
        for ( int p = 0; p < x.space.n; ++p )
            for ( const auto& v : powerset( y.space.n ) )
                if ( y.neighbourhood( f[ p ], v ) &&
                     !x.neighbourhood( p, x.space.hull( closed, preimage( f, v ) ) ) )
                    return false;
        return true;
    }
    throw std::invalid_argument( "unknown map class " + name );
}

} // namespace oracle
