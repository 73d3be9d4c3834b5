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

#ifndef CHARP_POLYNOMIAL_HPP
#define CHARP_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charp/monomial.hpp"
#include "charp/order.hpp"
#include "charp/ring.hpp"

namespace charp {

struct Term {
    Monomial mon;
    std::uint32_t coeff; // least non-negative residue, never 0 when stored
};

/// Sparse multivariate polynomial over Z/p^k.  Terms are kept sorted in
/// descending grevlex order with no zero coefficients, so equal values
/// have equal representations and printing is reproducible byte for byte.
class Poly {
public:
    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly zero(const Ring& r) { return Poly(r); }

    static Poly constant(const Ring& r, std::int64_t c) {
        Poly f(r);
        std::uint32_t v = r.reduce(c);
        if (v) f.terms_.push_back({Monomial(r.nvars()), v});
        return f;
    }

    static Poly variable(const Ring& r, std::uint32_t i, std::uint32_t e = 1) {
        Poly f(r);
        if (e == 0) return constant(r, 1);
        f.terms_.push_back({Monomial::var(r.nvars(), i, e), 1u});
        return f;
    }

    static Poly term(const Ring& r, const Monomial& m, std::int64_t c) {
        Poly f(r);
        std::uint32_t v = r.reduce(c);
        if (v) f.terms_.push_back({m, v});
        return f;
    }

    static Poly from_terms(const Ring& r,
                           std::vector<std::pair<Monomial, std::int64_t>> ts) {
        Poly f(r);
        for (auto& [m, c] : ts) f = f + term(r, m, c);
        return f;
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
    }
    std::uint32_t constant_coeff() const {
        for (const auto& t : terms_)
            if (t.mon.is_one()) return t.coeff;
        return 0;
    }

    std::uint64_t degree() const { // 0 for the zero polynomial
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mon.degree());
        return d;
    }
    std::uint64_t weighted_degree(const std::vector<std::uint32_t>& w) const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mon.weighted_degree(w));
        return d;
    }
    bool is_homogeneous(const std::vector<std::uint32_t>& w) const {
        if (terms_.empty()) return true;
        std::uint64_t d = terms_[0].mon.weighted_degree(w);
        for (const auto& t : terms_)
            if (t.mon.weighted_degree(w) != d) return false;
        return true;
    }

    std::uint32_t coeff_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mon == m) return t.coeff;
        return 0;
    }

    bool operator==(const Poly& o) const {
        if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != o.terms_[i].coeff ||
                terms_[i].mon != o.terms_[i].mon)
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mon, ring_.neg(t.coeff)});
        return r;
    }

    Poly operator+(const Poly& o) const {
        require_same_ring(ring_, o.ring_, "poly_add");
        Poly r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        MonomialOrder ord; // storage order: grevlex
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                std::uint32_t s = ring_.add(terms_[i].coeff, o.terms_[j].coeff);
                if (s) r.terms_.push_back({terms_[i].mon, s});
                ++i, ++j;
            }
        }
        while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
        while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator+(std::int64_t c) const { return *this + constant(ring_, c); }
    Poly operator-(std::int64_t c) const { return *this + constant(ring_, -c); }

    Poly operator*(const Poly& o) const {
        require_same_ring(ring_, o.ring_, "poly_mul");
        if (is_zero() || o.is_zero()) return Poly(ring_);
        struct GrevlexGreater {
            bool operator()(const Monomial& a, const Monomial& b) const {
                return MonomialOrder().greater(a, b);
            }
        };
        std::map<Monomial, std::uint32_t, GrevlexGreater> acc;
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.mon.mul(b.mon);
                std::uint32_t c = ring_.mul(a.coeff, b.coeff);
                auto [it, fresh] = acc.emplace(std::move(m), c);
                if (!fresh) it->second = ring_.add(it->second, c);
            }
        Poly r(ring_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c) r.terms_.push_back({m, c});
        return r;
    }

    Poly scaled(std::int64_t c) const {
        std::uint32_t v = ring_.reduce(c);
        Poly r(ring_);
        if (v == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::uint32_t s = ring_.mul(t.coeff, v);
            if (s) r.terms_.push_back({t.mon, s});
        }
        return r;
    }

    Poly mul_term(const Monomial& m, std::uint32_t c) const {
        Poly r(ring_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::uint32_t s = ring_.mul(t.coeff, c);
            if (s) r.terms_.push_back({t.mon.mul(m), s});
        }
        return r; // grevlex order is multiplicative, sortedness survives
    }

    Poly pow(std::uint64_t e) const {
        Poly r = constant(ring_, 1);
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    /// f -> f^p over F_p by exponent scaling; equals pow(p) on the prime
    /// field since c^p = c there.
    Poly frobenius_pth_power() const {
        if (ring_.k() != 1)
            throw std::domain_error("frobenius_pth_power: needs k = 1");
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mon.scaled(ring_.p()), t.coeff});
        sort_terms(r.terms_);
        return r;
    }

    /// The Frobenius endomorphism of Z/p^2[x]: x^I -> x^{pI}, coefficients
    /// fixed (the Witt-vector Frobenius is the identity on Z/p^2 residues).
    Poly witt_frobenius_endo() const {
        if (ring_.k() != 2)
            throw std::domain_error("witt_frobenius_endo: needs k = 2");
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mon.scaled(ring_.p()), t.coeff});
        sort_terms(r.terms_);
        return r;
    }

    /// Least-residue coefficientwise section F_p -> Z/p^2.
    Poly canonical_lift() const {
        if (ring_.k() != 1)
            throw std::domain_error("canonical_lift: needs k = 1");
        Ring up = ring_.with_exponent(2);
        Poly r(up);
        r.terms_ = terms_;
        return r;
    }

    Poly reduce_mod_p() const {
        if (ring_.k() != 2)
            throw std::domain_error("reduce_mod_p: needs k = 2");
        Ring down = ring_.with_exponent(1);
        Poly r(down);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::uint32_t c = t.coeff % down.modulus();
            if (c) r.terms_.push_back({t.mon, c});
        }
        return r;
    }

    /// The unique q over F_p with p * lift(q) = this.  A non-divisible
    /// coefficient means a broken invariant upstream, not bad input.
    Poly exact_divide_by_p() const {
        if (ring_.k() != 2)
            throw std::domain_error("exact_divide_by_p: needs k = 2");
        Ring down = ring_.with_exponent(1);
        Poly r(down);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (t.coeff % ring_.p() != 0)
                throw std::domain_error(
                    "exact_divide_by_p: coefficient not divisible by p");
            std::uint32_t c = t.coeff / ring_.p();
            if (c) r.terms_.push_back({t.mon, c});
        }
        return r;
    }

    Poly partial_derivative(std::uint32_t i) const {
        if (i >= ring_.nvars())
            throw std::out_of_range("partial_derivative: variable index");
        Poly r(ring_);
        for (const auto& t : terms_) {
            std::uint32_t e = t.mon.exp(i);
            if (e == 0) continue;
            std::uint32_t c = ring_.mul(t.coeff, ring_.reduce(e));
            if (c == 0) continue;
            std::vector<std::uint32_t> exps = t.mon.exps();
            exps[i] -= 1;
            r.terms_.push_back({Monomial(std::move(exps)), c});
        }
        sort_terms(r.terms_);
        return r;
    }

    /// Simultaneous substitution x_i -> assignment[i] (nullopt keeps x_i).
    Poly substitute(const std::vector<std::optional<Poly>>& assignment) const {
        if (assignment.size() != ring_.nvars())
            throw std::invalid_argument("substitute: assignment arity");
        for (const auto& a : assignment)
            if (a) require_same_ring(ring_, a->ring(), "substitute");
        Poly acc(ring_);
        for (const auto& t : terms_) {
            Poly prod = constant(ring_, t.coeff);
            Monomial rest(ring_.nvars());
            for (std::uint32_t i = 0; i < ring_.nvars(); ++i) {
                std::uint32_t e = t.mon.exp(i);
                if (e == 0) continue;
                if (assignment[i])
                    prod = prod * assignment[i]->pow(e);
                else
                    rest = rest.mul(Monomial::var(ring_.nvars(), i, e));
            }
            acc = acc + prod.mul_term(rest, 1);
        }
        return acc;
    }

    /// Leading term under an arbitrary order; storage stays grevlex.
    const Term& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty())
            throw std::domain_error("leading_term: zero polynomial");
        if (ord.kind() == OrderKind::grevlex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].mon, terms_[best].mon)) best = i;
        return terms_[best];
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            bool unit = t.coeff == 1 && !t.mon.is_one();
            if (!unit) os << t.coeff;
            bool any = !unit;
            for (std::uint32_t i = 0; i < ring_.nvars(); ++i) {
                std::uint32_t e = t.mon.exp(i);
                if (e == 0) continue;
                if (any) os << "*";
                os << ring_.var_name(i);
                if (e > 1) os << "^" << e;
                any = true;
            }
        }
        return os.str();
    }

    /// Transplants the polynomial into a ring with more variables (same p,
    /// k); existing variables map by name.
    Poly into_ring(const Ring& target) const {
        Poly r(target);
        for (const auto& t : terms_) {
            std::vector<std::uint32_t> exps(target.nvars(), 0);
            for (std::uint32_t i = 0; i < ring_.nvars(); ++i) {
                if (t.mon.exp(i) == 0) continue;
                int j = target.var_index(ring_.var_name(i));
                if (j < 0)
                    throw std::invalid_argument("into_ring: missing variable " +
                                                ring_.var_name(i));
                exps[static_cast<std::uint32_t>(j)] = t.mon.exp(i);
            }
            r = r + term(target, Monomial(std::move(exps)), t.coeff);
        }
        return r;
    }

    static void sort_terms(std::vector<Term>& ts) {
        MonomialOrder ord;
        std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
            return ord.greater(a.mon, b.mon);
        });
    }

    /// Trusted constructor for internal callers that already hold a
    /// canonical (sorted, zero-free) term vector.
    static Poly from_sorted_terms(const Ring& r, std::vector<Term> ts) {
        Poly f(r);
        f.terms_ = std::move(ts);
        return f;
    }

private:
    Ring ring_;
    std::vector<Term> terms_;
};

inline Poly operator*(std::int64_t c, const Poly& f) { return f.scaled(c); }

} // namespace charp

#endif
