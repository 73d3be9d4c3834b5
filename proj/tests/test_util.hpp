/*
   Copyright 2026 charp-sing contributors

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

#ifndef CHARP_TEST_UTIL_HPP
#define CHARP_TEST_UTIL_HPP

#include <random>

#include "charp/polynomial.hpp"

namespace charp_test {

inline charp::Monomial random_monomial(std::mt19937_64& rng,
                                       std::uint32_t nvars,
                                       std::uint32_t max_exp) {
    std::uniform_int_distribution<std::uint32_t> d(0, max_exp);
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = d(rng);
    return charp::Monomial{std::move(e)};
}

inline charp::Poly random_poly(std::mt19937_64& rng, const charp::Ring& r,
                               std::uint32_t max_terms, std::uint32_t max_exp,
                               bool allow_zero = true) {
    std::uniform_int_distribution<std::uint32_t> nt(allow_zero ? 0 : 1,
                                                    max_terms);
    std::uniform_int_distribution<std::uint32_t> cd(0, r.modulus() - 1);
    charp::Poly f(r);
    std::uint32_t terms = nt(rng);
    for (std::uint32_t i = 0; i < terms; ++i)
        f = f + charp::Poly::term(r, random_monomial(rng, r.nvars(), max_exp),
                                  cd(rng));
    if (!allow_zero && f.is_zero()) return charp::Poly::constant(r, 1);
    return f;
}

} // namespace charp_test

#endif
