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

#ifndef CHARP_RING_HPP
#define CHARP_RING_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace charp {

/// Coefficients live in Z/p^k as least non-negative residues stored in a
/// machine word.  Construction enforces p prime and p^k <= 2^31 so that
/// products of two residues never overflow 64-bit intermediates.
class Ring {
public:
    Ring() = default;

    static Ring make(std::uint32_t p, std::uint32_t k,
                     std::vector<std::string> vars) {
        if (k != 1 && k != 2)
            throw std::invalid_argument("ring: exponent k must be 1 or 2");
        if (!is_prime(p))
            throw std::invalid_argument("ring: " + std::to_string(p) +
                                        " is not prime");
        if (vars.empty())
            throw std::invalid_argument("ring: need at least one variable");
        std::uint64_t m = p;
        for (std::uint32_t i = 1; i < k; ++i) m *= p;
        if (m > (1ull << 31))
            throw std::invalid_argument("ring: modulus p^k exceeds 2^31");
        Ring r;
        r.data_ = std::make_shared<const Data>(
            Data{p, k, static_cast<std::uint32_t>(m), std::move(vars)});
        return r;
    }

    static Ring make(std::uint32_t p, std::uint32_t k, std::uint32_t nvars) {
        std::vector<std::string> vars;
        vars.reserve(nvars);
        for (std::uint32_t i = 1; i <= nvars; ++i)
            vars.push_back("x" + std::to_string(i));
        return make(p, k, std::move(vars));
    }

    std::uint32_t p() const { return data_->p; }
    std::uint32_t k() const { return data_->k; }
    std::uint32_t modulus() const { return data_->modulus; }
    std::uint32_t nvars() const {
        return static_cast<std::uint32_t>(data_->vars.size());
    }
    const std::string& var_name(std::uint32_t i) const {
        return data_->vars.at(i);
    }
    const std::vector<std::string>& var_names() const { return data_->vars; }

    /// -1 when the name is not a ring variable.
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < data_->vars.size(); ++i)
            if (data_->vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    /// Same variables, coefficient ring switched to Z/p^k'.
    Ring with_exponent(std::uint32_t k) const {
        return make(data_->p, k, data_->vars);
    }

    /// Same coefficients, one fresh variable appended (Rabinowitsch trick,
    /// elimination).  Throws when the name collides.
    Ring with_extra_var(const std::string& name) const {
        if (var_index(name) >= 0)
            throw std::invalid_argument("ring: variable '" + name +
                                        "' already present");
        std::vector<std::string> vars = data_->vars;
        vars.push_back(name);
        return make(data_->p, data_->k, std::move(vars));
    }

    bool operator==(const Ring& o) const {
        if (data_ == o.data_) return true;
        return data_->p == o.data_->p && data_->k == o.data_->k &&
               data_->vars == o.data_->vars;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    // --- residue arithmetic mod p^k ---

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t m = data_->modulus;
        std::int64_t r = v % m;
        if (r < 0) r += m;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= data_->modulus) s -= data_->modulus;
        return static_cast<std::uint32_t>(s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b
                      : static_cast<std::uint32_t>(a + data_->modulus - b);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b %
                                          data_->modulus);
    }
    std::uint32_t neg(std::uint32_t a) const {
        return a == 0 ? 0 : data_->modulus - a;
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t r = 1, b = a, m = data_->modulus;
        while (e) {
            if (e & 1) r = r * b % m;
            b = b * b % m;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }
    /// Inverse of a unit.  Requires gcd(a, p) = 1; for k=1 this is any
    /// nonzero residue.
    std::uint32_t inv(std::uint32_t a) const {
        if (a % data_->p == 0)
            throw std::domain_error("ring: element not invertible");
        // Z/p^k has unit group of order p^(k-1)(p-1).
        std::uint64_t order =
            (data_->k == 1) ? data_->p - 1
                            : std::uint64_t(data_->p) * (data_->p - 1);
        return pow(a, order - 1);
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    struct Data {
        std::uint32_t p;
        std::uint32_t k;
        std::uint32_t modulus;
        std::vector<std::string> vars;
    };
    std::shared_ptr<const Data> data_;
};

inline void require_same_ring(const Ring& a, const Ring& b,
                              const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

} // namespace charp

#endif
