// Copyright 2026 The ncpqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCPQG_COLOUR_HPP_
#define NCPQG_COLOUR_HPP_

#include <compare>
#include <string>
#include <vector>

namespace ncpqg {

// A point colour together with the name of its inverse under the involutive
// pairing a <-> a^{-1} on the colour set. Rotating a point across rows swaps
// the two names.
struct Colour {
  std::string symbol;
  std::string inverse;

  Colour inverted() const { return Colour{inverse, symbol}; }
  bool self_inverse() const { return symbol == inverse; }

  friend bool operator==(const Colour&, const Colour&) = default;
  friend auto operator<=>(const Colour&, const Colour&) = default;
};

// Shorthand for a self-inverse colour.
inline Colour colour(std::string symbol) {
  std::string inv = symbol;
  return Colour{std::move(symbol), std::move(inv)};
}

inline Colour colour(std::string symbol, std::string inverse) {
  return Colour{std::move(symbol), std::move(inverse)};
}

using ColouredWord = std::vector<Colour>;

inline ColouredWord word_concat(const ColouredWord& a, const ColouredWord& b) {
  ColouredWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Symbols joined without separator; empty word prints as the empty string.
std::string word_str(const ColouredWord& w);

}  // namespace ncpqg

#endif  // NCPQG_COLOUR_HPP_
