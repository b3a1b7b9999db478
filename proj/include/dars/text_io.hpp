#pragma once

#include <string>

#include "dars/affine_permutation.hpp"
#include "dars/dars_map.hpp"
#include "dars/finite_permutation.hpp"
#include "dars/partition.hpp"
#include "dars/tabloid.hpp"

namespace dars {

// Textual formats (all failures raise ParseError):
//   partition   "6,6,5"; the empty string is the empty partition
//   tabloid     "1,3/2/4"
//   window      "[10,3,-3,12]", brackets optional
//   permutation "3,6,5,2,1,4"
//   tuple JSON  {"p":"1,3/2/4","q":"1,2/3/4","lambda":[6,6,5],"n0":7,
//                "n":4,"index":3}; n and index are derived and optional on
//                input, but must be consistent when present.
Partition parse_partition(const std::string& text);
Tabloid parse_tabloid(const std::string& text);
AffinePermutation parse_window(const std::string& text);
FinitePermutation parse_finite_permutation(const std::string& text);

std::string window_to_string(const AffinePermutation& w);
std::string tuple_to_json(const DarsTuple& t);
DarsTuple tuple_from_json(const std::string& text);

}  // namespace dars
