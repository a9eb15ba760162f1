#pragma once

#include <stdexcept>
#include <string>

#include "autxy/sigma.hpp"

namespace autxy {

// Parse failure with the offset of the offending character.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at);
};

// Expression syntax: integers, t, x, y, + - * / ^ and parentheses, with
// juxtaposition as multiplication.  Division is only by x,y-free factors.
TPoly parse_tpoly(const std::string& s, int p);
RatFunc parse_ratfunc(const std::string& s, int p);
RPoly parse_rpoly(const std::string& s, int p);
BiPoly parse_bipoly(const std::string& s, int p, RingTag tag);

// "x -> <poly>; y -> <poly>"
Auto parse_auto(const std::string& s, int p, RingTag tag);

// Letters introduced by "A:" or "B:" markers, each followed by an
// automorphism; letters are parsed over K.
Word parse_word(const std::string& s, int p);

// empty | all | ppowers | pmult | {n,...} | 2..k | pscaled(n,k)
// | pscaledall(n) | ppowerpair(n), combined with & (binds tighter) and |.
PStableSet parse_pset(const std::string& s, int p);

// Canonical forms: graded lexicographic, descending, residues in 0..p-1.
// Every printer round-trips through its parser.
std::string str(const TPoly& v);
std::string str(const RatFunc& v);
std::string str(const RPoly& v);
std::string str(const BiPoly& v);
std::string str(const Auto& v);
std::string str(const Word& v);

}  // namespace autxy
