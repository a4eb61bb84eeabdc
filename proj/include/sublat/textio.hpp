#pragma once

#include <string>

#include "sublat/beta.hpp"

namespace sublat {

/*
 * Group descriptor grammar, one p-component per "p:[d1,d2,...]" segment,
 * segments joined by ';':  2:[1,3];3:[2]
 * Parts may appear in any order and are canonicalized to descending.
 * The empty string denotes the trivial group. Throws
 * std::invalid_argument on anything outside the grammar.
 */
AbelianGroupSpec parse_group_spec(const std::string& text);

}  // namespace sublat
