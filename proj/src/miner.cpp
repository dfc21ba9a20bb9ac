#include "fintop/miner.hpp"

#include "fintop/atlas.hpp"
#include "fintop/predicates.hpp"

#include <atomic>
#include <cctype>
#include <stdexcept>
#include <thread>

namespace fintop
{

struct Goal::Node
{
    enum class Op
    {
        Atom,
        Not,
        And,
        Or,
    } op = Op::Atom;
    std::string token;
    bool on_set = false;
    SetPredicate set_predicate{};
    std::shared_ptr< const Node > left, right;
};

namespace
{

using NodePtr = std::shared_ptr< const Goal::Node >;
using Op = Goal::Node::Op;

class Parser
{
public:
    explicit Parser( std::string_view text ) : _text{ text } {}

    NodePtr parse()
    {
        auto node = disjunction();
        skip();
        if ( _pos != _text.size() )
            fail( "unexpected '" + std::string( _text.substr( _pos, 1 ) ) + "'" );
        return node;
    }

    bool uses_set = false;

private:
    void fail( const std::string& why ) const
    {
        throw std::invalid_argument( "goal: " + why + " at offset " + std::to_string( _pos ) );
    }

    void skip()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            ++_pos;
    }

    /// Consumes any of the spellings of one operator.
    bool accept( std::initializer_list< std::string_view > spellings )
    {
        skip();
        for ( auto s : spellings )
            if ( _text.substr( _pos ).starts_with( s ) )
            {
                _pos += s.size();
                return true;
            }
        return false;
    }

    NodePtr binary( Op op, NodePtr l, NodePtr r )
    {
        auto n = std::make_shared< Goal::Node >();
        n->op = op;
        n->left = std::move( l );
        n->right = std::move( r );
        return n;
    }

    NodePtr disjunction()
    {
        auto node = conjunction();
        while ( accept( { "|", "∨" } ) )
            node = binary( Op::Or, node, conjunction() );
        return node;
    }

    NodePtr conjunction()
    {
        auto node = unary();
        while ( accept( { "&", "∧" } ) )
            node = binary( Op::And, node, unary() );
        return node;
    }

    NodePtr unary()
    {
        if ( accept( { "!", "¬" } ) )
        {
            auto n = std::make_shared< Goal::Node >();
            n->op = Op::Not;
            n->left = unary();
            return n;
        }
        if ( accept( { "(" } ) )
        {
            auto node = disjunction();
            if ( !accept( { ")" } ) )
                fail( "expected ')'" );
            return node;
        }
        return atom();
    }

    NodePtr atom()
    {
        skip();
        const auto start = _pos;
        while ( _pos < _text.size() &&
                ( std::isalnum( static_cast< unsigned char >( _text[ _pos ] ) ) || _text[ _pos ] == '-' ) )
            ++_pos;
        if ( _pos == start )
            fail( "expected a predicate token" );
        auto n = std::make_shared< Goal::Node >();
        n->token = std::string( _text.substr( start, _pos - start ) );
        if ( accept( { "(" } ) )
        {
            if ( !accept( { "A" } ) || !accept( { ")" } ) )
                fail( "set predicates take the variable A, as in " + n->token + "(A)" );
            const auto p = resolve_set_predicate( n->token );
            if ( !p )
                throw UnknownPredicateToken( n->token );
            n->on_set = true;
            n->set_predicate = *p;
            uses_set = true;
        }
        else if ( !is_space_predicate( n->token ) )
            throw UnknownPredicateToken( n->token );
        return n;
    }

    std::string_view _text;
    std::size_t _pos = 0;
};

bool eval( const Goal::Node& n, const ClassTable& table, Subset a )
{
    switch ( n.op )
    {
    case Op::Atom:
        return n.on_set ? n.set_predicate( table, a ) : evaluate_space_predicate( table, n.token ).holds;
    case Op::Not:
        return !eval( *n.left, table, a );
    case Op::And:
        return eval( *n.left, table, a ) && eval( *n.right, table, a );
    case Op::Or:
        return eval( *n.left, table, a ) || eval( *n.right, table, a );
    }
    return false;
}

bool collect( const Goal::Node& n, bool positive, std::vector< Goal::Literal >& out )
{
    switch ( n.op )
    {
    case Op::Atom:
        out.push_back( { n.token, n.on_set, positive } );
        return true;
    case Op::Not:
        return n.left->op == Op::Atom && collect( *n.left, !positive, out );
    case Op::And:
        return positive && collect( *n.left, true, out ) && collect( *n.right, true, out );
    case Op::Or:
        return false;
    }
    return false;
}

/// First satisfying subset of one space, or nullopt. Space-only goals use the empty set.
std::optional< Subset > search( const Goal& goal, const ClassTable& table )
{
    if ( !goal.uses_set() )
        return goal.evaluate( table ) ? std::optional< Subset >{ Subset{} } : std::nullopt;
    for ( Subset a : all_subsets( table.size() ) )
        if ( goal.evaluate( table, a ) )
            return a;
    return std::nullopt;
}

} // namespace

Goal Goal::parse( std::string_view text )
{
    Parser parser{ text };
    Goal out;
    out._root = parser.parse();
    out._uses_set = parser.uses_set;
    out._text = std::string( text );
    return out;
}

bool Goal::evaluate( const ClassTable& table, Subset a ) const { return eval( *_root, table, a ); }

std::vector< Goal::Literal > Goal::literals() const
{
    std::vector< Literal > out;
    if ( !collect( *_root, true, out ) )
        out.clear();
    return out;
}

MineResult mine( const Goal& goal, unsigned max_n, unsigned jobs )
{
    if ( max_n > max_enumeration_points )
        throw ScopeTooLarge( "mining is limited to " + std::to_string( max_enumeration_points ) + " points" );
    jobs = std::max( 1u, jobs );
    MineResult out;
    for ( unsigned n = 1; n <= max_n; ++n )
    {
        const auto spaces = enumerate_topologies( n, true );
        std::vector< std::optional< Subset > > hits( spaces.size() );
        std::atomic< std::size_t > next{ 0 };
        // Workers skip spaces past the best hit so far; the minimum index wins.
        std::atomic< std::size_t > best{ spaces.size() };
        const auto work = [ & ] {
            for ( std::size_t i = next++; i < spaces.size(); i = next++ )
            {
                if ( i > best.load() )
                    break;
                hits[ i ] = search( goal, ClassTable{ spaces[ i ] } );
                if ( hits[ i ] )
                    for ( auto b = best.load(); i < b && !best.compare_exchange_weak( b, i ); )
                        ;
            }
        };
        std::vector< std::jthread > pool;
        for ( unsigned j = 1; j < jobs; ++j )
            pool.emplace_back( work );
        work();
        pool.clear();

        const std::size_t i = best.load();
        if ( i < spaces.size() )
        {
            out.found = true;
            out.space = spaces[ i ];
            out.key = family_hex( spaces[ i ] );
            if ( goal.uses_set() )
                out.set = hits[ i ];
            out.spaces_scanned += i;
            return out;
        }
        out.spaces_scanned += spaces.size();
    }
    return out;
}

MineResult find_strictness_witness( const SetArrow& arrow, unsigned max_n, unsigned jobs )
{
    return mine( Goal::parse( std::string( arrow.target ) + "(A) & !" + std::string( arrow.source ) + "(A)" ), max_n,
                 jobs );
}

} // namespace fintop
