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

#ifndef CHARP_ORDER_HPP
#define CHARP_ORDER_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "charp/monomial.hpp"

namespace charp {

enum class OrderKind {
    grevlex,
    lex,
    weighted_grevlex,
    // Block order eliminating the last variable: compares its exponent
    // first, then grevlex on the full vector.  Used by colon ideals and
    // inverse computations; not part of the user-facing surface.
    eliminate_last,
};

class MonomialOrder {
public:
    MonomialOrder() : kind_(OrderKind::grevlex) {}
    explicit MonomialOrder(OrderKind k) : kind_(k) {
        if (k == OrderKind::weighted_grevlex)
            throw std::invalid_argument("order: weighted grevlex needs weights");
    }
    static MonomialOrder grevlex() { return MonomialOrder(); }
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
    static MonomialOrder weighted(std::vector<std::uint32_t> w) {
        for (auto x : w)
            if (x == 0) throw std::invalid_argument("order: weights must be positive");
        MonomialOrder o;
        o.kind_ = OrderKind::weighted_grevlex;
        o.weights_ = std::move(w);
        return o;
    }
    static MonomialOrder eliminate_last() {
        MonomialOrder o;
        o.kind_ = OrderKind::eliminate_last;
        return o;
    }

    OrderKind kind() const { return kind_; }
    const std::vector<std::uint32_t>& weights() const { return weights_; }

    /// <0 when a < b, 0 when equal, >0 when a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case OrderKind::grevlex:
            return cmp_grevlex(a, b);
        case OrderKind::lex:
            return cmp_lex(a, b);
        case OrderKind::weighted_grevlex: {
            std::uint64_t da = a.weighted_degree(weights_);
            std::uint64_t db = b.weighted_degree(weights_);
            if (da != db) return da < db ? -1 : 1;
            return cmp_grevlex_tie(a, b);
        }
        case OrderKind::eliminate_last: {
            std::uint32_t n = a.nvars();
            std::uint32_t ta = a.exp(n - 1), tb = b.exp(n - 1);
            if (ta != tb) return ta < tb ? -1 : 1;
            return cmp_grevlex(a, b);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) < 0;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) > 0;
    }

private:
    static int cmp_grevlex(const Monomial& a, const Monomial& b) {
        std::uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        return cmp_grevlex_tie(a, b);
    }
    // Equal (weighted) degree: the monomial with the smaller exponent at
    // the last position where they differ is the larger one.
    static int cmp_grevlex_tie(const Monomial& a, const Monomial& b) {
        for (std::uint32_t i = a.nvars(); i-- > 0;) {
            if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
        }
        return 0;
    }
    static int cmp_lex(const Monomial& a, const Monomial& b) {
        for (std::uint32_t i = 0; i < a.nvars(); ++i)
            if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
        return 0;
    }

    OrderKind kind_;
    std::vector<std::uint32_t> weights_;
};

} // namespace charp

#endif
