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

#ifndef NCPQG_ERRORS_HPP_
#define NCPQG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ncpqg {

enum class errc {
  invalid_partition,  // blocks do not partition the point set
  row_mismatch,       // glued words differ in vertical concatenation
  empty_row,          // rotation out of an empty row
  empty_word,         // pi/beta on empty words
  not_projective,
  out_of_range,       // contraction index k outside 1..min(t(p),t(q))
  unknown_letter,
  mixed_groups,       // elements of distinct group oracles combined
  modulus_mismatch,   // M_l labels with different l
  alphabet_mismatch,  // partition colours foreign to a category predicate
  not_member,
  parity_violation,   // falsified invariant in O^{++} label extraction
  budget_exceeded,
  underdetermined,    // dimension system has free variables
  empty_operand,      // star() with an empty side
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ncpqg

#endif  // NCPQG_ERRORS_HPP_
