// Copyright 2026 The geuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generalized Euler numbers for the quadratic character mod 3, a symmetric
// identity check, and a fermionic partial sum.

#include <iostream>

#include "geuler/geuler.hpp"

int main()
{
    using namespace geuler;

    const Character chi = character(3, 1);
    std::cout << "character " << chi.label() << ", conductor " << conductor(chi) << "\n";

    const auto table = gen_euler_numbers(chi, 8);
    for (std::size_t n = 0; n < table.numbers.size(); ++n) {
        std::cout << "E_" << n << ",chi = " << table.numbers[n].to_rational() << "\n";
    }
    std::cout << "E_2,chi(x) = " << gen_euler_poly(chi, 2).str() << "\n";

    const auto report = check_symmetric_convolution(chi, 3, 5, 6, true);
    std::cout << "symmetric convolution, w1=3 w2=5 l=6: " << (report.passed ? "holds" : "fails") << "\n";

    const auto s = fermionic_partial_sum(chi, 4, 5, 2, Rational(0));
    const auto e = table.numbers[4];
    std::cout << "S_2 - E_4,chi has 5-adic valuation " << padic_valuation(s - e, 5) << "\n";
}
