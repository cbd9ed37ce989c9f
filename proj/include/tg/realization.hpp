#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "tg/error.hpp"
#include "tg/order_type.hpp"

namespace tg {

// Exact rational scalar; all realisation arithmetic avoids floating point so
// that set orderings are unambiguous.
using Rational = boost::rational<long long>;

// Strictly increasing sequence of exact rationals.
using RationalSet = std::vector<Rational>;

Rational parse_rational(const std::string& text);  // "p" or "p/q"
std::string rational_str(const Rational& r);       // integer fast path: no "/1"

// Sorts and validates strict increase (rejects duplicates).
RationalSet make_rational_set(std::vector<Rational> elems);
RationalSet to_rational_set(const std::vector<int>& ints);

// The mark sequence of the pair (X, Y) over the sorted union: 1 = X only,
// 2 = Y only, 3 = both.  Either set may be empty.
OrderType order_type_of(const RationalSet& X, const RationalSet& Y);
OrderType order_type_of(const std::vector<int>& X, const std::vector<int>& Y);

// Integer realisation over the ground set [length]: X collects the positions
// of {1,3}-marks, Y the positions of {2,3}-marks.
std::pair<RationalSet, RationalSet> canonical_realization(const OrderType& tau);

// Given the right-hand set Y with |Y| = #({2,3}-marks of B), build X with
// order_type_of(X, Y) = B.  Marks 2/3 consume the next element of Y (3 also
// adds it to X); each run of 1s becomes equally spaced rationals strictly
// between the surrounding consumed elements (virtual anchors min(Y)-run-1 /
// max(Y)+run+1 at the ends).
RationalSet extend_left(const OrderType& B, const RationalSet& Y);

// Replace every element by its 1-based rank within the union of all input
// sets; preserves all pairwise order types.
std::vector<std::vector<int>> rank_normalize(const std::vector<RationalSet>& sets);

}  // namespace tg
