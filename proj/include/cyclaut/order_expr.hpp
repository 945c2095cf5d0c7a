/*
   Copyright 2026 The cyclaut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLAUT_ORDER_EXPR_HPP
#define CYCLAUT_ORDER_EXPR_HPP

#include <string_view>

#include "cyclaut/group.hpp"

namespace cyclaut {

/*
   Exact evaluation of group-order formulas such as "2*168^2" or
   "7!*(14!)^7". Grammar (whitespace ignored):

     product  := power ('*' power)*
     power    := factorial ('^' factorial)?
     factorial:= atom '!'*
     atom     := digits | '(' product ')'

   Exponents and factorial arguments are capped at 100000. Throws
   std::invalid_argument on malformed input.
*/
BigInt evaluate_order_expression(std::string_view text);

}  // namespace cyclaut

#endif  // CYCLAUT_ORDER_EXPR_HPP
