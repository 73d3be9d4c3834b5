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

#ifndef CHARP_MONOMIAL_HPP
#define CHARP_MONOMIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace charp {

/// Exponent vector.  Exponents are capped at 2^30 so that sums and
/// scalings stay inside a machine word with room to spare.
class Monomial {
public:
    static constexpr std::uint32_t kMaxExp = 1u << 30;

    Monomial() = default;
    explicit Monomial(std::uint32_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
        for (auto x : e_) check_exp(x);
    }

    std::uint32_t nvars() const { return static_cast<std::uint32_t>(e_.size()); }
    std::uint32_t exp(std::uint32_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exps() const { return e_; }

    bool is_one() const {
        for (auto x : e_) if (x) return false;
        return true;
    }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    std::uint64_t weighted_degree(const std::vector<std::uint32_t>& w) const {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            d += std::uint64_t(e_[i]) * w[i];
        return d;
    }

    Monomial mul(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::uint64_t s = std::uint64_t(r.e_[i]) + o.e_[i];
            if (s >= kMaxExp) throw std::overflow_error("monomial: exponent overflow");
            r.e_[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Requires divides(o) in the caller.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
        return r;
    }

    /// x^I -> x^(sI), the exponent scaling used by Frobenius maps.
    Monomial scaled(std::uint64_t s) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::uint64_t v = std::uint64_t(r.e_[i]) * s;
            if (v >= kMaxExp) throw std::overflow_error("monomial: exponent overflow");
            r.e_[i] = static_cast<std::uint32_t>(v);
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    static Monomial var(std::uint32_t nvars, std::uint32_t i,
                        std::uint32_t e = 1) {
        Monomial m(nvars);
        check_exp(e);
        m.e_[i] = e;
        return m;
    }

private:
    static void check_exp(std::uint32_t x) {
        if (x >= kMaxExp) throw std::overflow_error("monomial: exponent overflow");
    }
    std::vector<std::uint32_t> e_;
};

} // namespace charp

#endif
