#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tg/error.hpp"

namespace tg {

// A mark sequence over {1,2,3} describing how two finite sets interleave:
// reading the sorted union left to right, 1 = first set only, 2 = second set
// only, 3 = both.  A *type* is a balanced sequence (as many {1,3}-marks as
// {2,3}-marks), i.e. the order type of a pair of equal-size sets.  The same
// struct also carries unbalanced fragments such as single blocks.
struct OrderType {
    std::vector<std::uint8_t> marks;  // values in {1,2,3}

    OrderType() = default;
    explicit OrderType(std::vector<std::uint8_t> m);  // validates digit range

    int length() const { return static_cast<int>(marks.size()); }
    int ones() const;  // #marks in {1,3}
    int twos() const;  // #marks in {2,3}

    bool is_type() const { return ones() == twos(); }
    int width() const;  // common set size; throws NotAType unless balanced

    bool trivial() const;  // all marks are 3 (the empty sequence counts)
    std::string str() const;

    bool operator==(const OrderType&) const = default;
    // Lexicographic on digits; handy for canonical catalogues.
    bool operator<(const OrderType& o) const { return marks < o.marks; }
};

// Parse a digit string; "" is the empty type.  parse_type additionally
// requires balance, parse_marks accepts arbitrary fragments.
OrderType parse_type(const std::string& digits);
OrderType parse_marks(const std::string& digits);

// (count of {1,3}-marks, count of {2,3}-marks).
std::pair<int, int> marks_count(const OrderType& seq);

OrderType dual(const OrderType& tau);  // swap 1 <-> 2, fix 3; involution
OrderType concat(const OrderType& a, const OrderType& b);

// Split into the unique sequence of irreducible factors: a factor boundary
// falls after every proper prefix with equally many {1,3}- and {2,3}-marks.
std::vector<OrderType> factorize(const OrderType& tau);
bool is_irreducible(const OrderType& tau);

// sigma(k) = 1 3^{k-1} 2, the generalised shift template of width k >= 2.
OrderType sigma(int k);

enum class Polarity { primary, secondary, trivial };

// Output of the block algorithm on an irreducible type.
struct BlockDecomposition {
    std::vector<OrderType> blocks;  // fragments B_1 ... B_b
    Polarity polarity = Polarity::trivial;
    std::vector<int> s;  // s[i-1] = #({2,3}-marks in B_1...B_i), i = 1..b

    int b() const { return static_cast<int>(blocks.size()); }
};

// Block decomposition: B_1 is the maximal initial run of 1s, and each B_{i+1}
// is the longest following segment whose {2,3}-count equals the {1,3}-count
// of B_i.  Secondary types are handled by dualising, decomposing, and
// dualising each block back; the trivial type "3" is its own single block.
BlockDecomposition block_decompose(const OrderType& tau);

}  // namespace tg
