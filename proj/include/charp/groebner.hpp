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

#ifndef CHARP_GROEBNER_HPP
#define CHARP_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charp/linalg.hpp"
#include "charp/polynomial.hpp"

namespace charp {

/// Generator-list presentation of an ideal over F_p.
struct Ideal {
    Ring ring;
    std::vector<Poly> gens;

    static Ideal make(const Ring& r, std::vector<Poly> gens) {
        for (const auto& g : gens) {
            require_same_ring(r, g.ring(), "ideal");
            if (g.is_zero())
                throw std::invalid_argument("ideal: zero generator");
        }
        return Ideal{r, std::move(gens)};
    }

    /// The irrelevant maximal ideal (x_1, ..., x_n).
    static Ideal max_ideal(const Ring& r) {
        std::vector<Poly> gens;
        for (std::uint32_t i = 0; i < r.nvars(); ++i)
            gens.push_back(Poly::variable(r, i));
        return Ideal{r, std::move(gens)};
    }
};

struct GroebnerBasis {
    Ring ring;
    MonomialOrder order;
    std::vector<Poly> basis; // reduced, monic, ascending by leading monomial
    std::vector<Poly> original;
    // basis[i] == sum_j cofactors[i][j] * original[j]; empty unless tracked
    std::vector<std::vector<Poly>> cofactors;
    bool tracked = false;
};

/// Replayable evidence for a membership decision.  A positive certificate
/// carries coordinates over the original generators; a negative one
/// carries the nonzero normal form together with the reduced basis.
struct MembershipCertificate {
    bool member = false;
    std::vector<Poly> coords;
    std::vector<Poly> generators;
    Poly normal_form;
    std::vector<Poly> reduced_basis;

    bool replay(const Poly& target) const {
        if (member) {
            Poly acc(target.ring());
            for (std::size_t i = 0; i < coords.size(); ++i)
                acc = acc + coords[i] * generators[i];
            return acc == target;
        }
        return !normal_form.is_zero();
    }
};

namespace detail {

inline std::vector<Term> to_ordered(const Poly& f, const MonomialOrder& ord) {
    std::vector<Term> ts = f.terms();
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mon, b.mon);
    });
    return ts;
}

inline Poly from_ordered(const Ring& r, std::vector<Term> ts) {
    Poly::sort_terms(ts);
    return Poly::from_sorted_terms(r, std::move(ts));
}

// h - c * x^u * g, all term vectors sorted descending under ord.
inline std::vector<Term> sub_mul(const std::vector<Term>& h,
                                 const std::vector<Term>& g, const Monomial& u,
                                 std::uint32_t c, const Ring& ring,
                                 const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() && j < g.size()) {
        Monomial gm = g[j].mon.mul(u);
        int cmp = ord.compare(h[i].mon, gm);
        if (cmp > 0) {
            out.push_back(h[i++]);
        } else if (cmp < 0) {
            std::uint32_t v = ring.neg(ring.mul(g[j].coeff, c));
            if (v) out.push_back({gm, v});
            ++j;
        } else {
            std::uint32_t v = ring.sub(h[i].coeff, ring.mul(g[j].coeff, c));
            if (v) out.push_back({h[i].mon, v});
            ++i, ++j;
        }
    }
    while (i < h.size()) out.push_back(h[i++]);
    while (j < g.size()) {
        Monomial gm = g[j].mon.mul(u);
        std::uint32_t v = ring.neg(ring.mul(g[j].coeff, c));
        if (v) out.push_back({gm, v});
        ++j;
    }
    return out;
}

} // namespace detail

struct DivisionResult {
    Poly remainder;
    std::vector<Poly> quotients; // one per divisor, in the given list order
};

/// Multivariate division by an ordered list of divisors.  Scans the list
/// front to back for a leading-monomial divisor, so the result is
/// deterministic for a fixed list and order.
inline DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors,
                             const MonomialOrder& ord) {
    const Ring& ring = f.ring();
    struct Div {
        Monomial lm;
        std::uint32_t lc;
        std::vector<Term> terms;
    };
    std::vector<Div> ds;
    ds.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero())
            throw std::invalid_argument("divide: zero divisor");
        auto ts = detail::to_ordered(g, ord);
        Monomial lm = ts.front().mon;
        std::uint32_t lc = ts.front().coeff;
        ds.push_back({std::move(lm), lc, std::move(ts)});
    }
    std::vector<Term> h = detail::to_ordered(f, ord);
    std::vector<Term> rem;
    std::vector<Poly> q(divisors.size(), Poly::zero(ring));
    std::size_t head = 0; // h[0..head) already emitted to rem
    while (head < h.size()) {
        const Term lead = h[head];
        bool reduced = false;
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (!ds[j].lm.divides(lead.mon)) continue;
            Monomial u = ds[j].lm.divide_into(lead.mon);
            std::uint32_t c = ring.mul(lead.coeff, ring.inv(ds[j].lc));
            std::vector<Term> tail(h.begin() + head, h.end());
            std::vector<Term> next =
                detail::sub_mul(tail, ds[j].terms, u, c, ring, ord);
            h.resize(head);
            h.insert(h.end(), next.begin(), next.end());
            q[j] = q[j] + Poly::term(ring, u, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lead);
            ++head;
        }
    }
    return {detail::from_ordered(ring, std::move(rem)), std::move(q)};
}

/// Buchberger with sugar selection and the product/chain pair criteria.
/// With track=true every basis element carries its coordinates over the
/// original generators, at extra cost.
inline GroebnerBasis buchberger(const Ideal& ideal,
                                const MonomialOrder& ord = MonomialOrder(),
                                bool track = false) {
    if (ideal.ring.k() != 1)
        throw std::domain_error("buchberger: only over F_p (k = 1)");
    const Ring& ring = ideal.ring;

    struct Row {
        Poly f;
        Monomial lm;
        std::uint64_t sugar;
        std::vector<Poly> cof;
    };
    std::vector<Row> rows;
    std::vector<Poly> current; // rows[i].f, kept in sync for division calls
    auto add_row = [&](Poly f, std::uint64_t sugar, std::vector<Poly> cof) {
        std::uint32_t lc = f.leading_term(ord).coeff;
        if (lc != 1) {
            std::uint32_t inv = ring.inv(lc);
            f = f.scaled(inv);
            for (auto& c : cof) c = c.scaled(inv);
        }
        Monomial lm = f.leading_term(ord).mon;
        current.push_back(f);
        rows.push_back({std::move(f), std::move(lm), sugar, std::move(cof)});
    };

    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
        std::vector<Poly> cof;
        if (track) {
            cof.assign(ideal.gens.size(), Poly::zero(ring));
            cof[i] = Poly::constant(ring, 1);
        }
        add_row(ideal.gens[i], ideal.gens[i].degree(), std::move(cof));
    }

    GroebnerBasis out;
    out.ring = ring;
    out.order = ord;
    out.original = ideal.gens;
    out.tracked = track;
    if (rows.empty()) return out;

    struct Pair {
        std::uint64_t sugar;
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> alive;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = rows[i].lm.lcm(rows[j].lm);
            std::uint64_t sug = std::max(
                rows[i].sugar + l.degree() - rows[i].lm.degree(),
                rows[j].sugar + l.degree() - rows[j].lm.degree());
            pending.push_back({sug, std::move(l), i, j});
            alive.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < rows.size(); ++j) push_pairs_for(j);

    auto pair_done = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return alive.find({a, b}) == alive.end();
    };

    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (pair_less(pending[k], pending[best])) best = k;
        Pair pr = pending[best];
        pending.erase(pending.begin() + best);
        alive.erase({pr.i, pr.j});

        // product criterion
        if (pr.lcm == rows[pr.i].lm.mul(rows[pr.j].lm)) continue;
        // chain criterion
        bool chained = false;
        for (std::size_t k = 0; k < rows.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (rows[k].lm.divides(pr.lcm) && pair_done(pr.i, k) &&
                pair_done(pr.j, k))
                chained = true;
        }
        if (chained) continue;

        Monomial ui = rows[pr.i].lm.divide_into(pr.lcm);
        Monomial uj = rows[pr.j].lm.divide_into(pr.lcm);
        Poly s = rows[pr.i].f.mul_term(ui, 1) - rows[pr.j].f.mul_term(uj, 1);
        if (s.is_zero()) continue;
        DivisionResult dr = divide(s, current, ord);
        if (dr.remainder.is_zero()) continue;
        std::vector<Poly> cof;
        if (track) {
            cof.assign(ideal.gens.size(), Poly::zero(ring));
            for (std::size_t t = 0; t < cof.size(); ++t) {
                cof[t] = rows[pr.i].cof[t].mul_term(ui, 1) -
                         rows[pr.j].cof[t].mul_term(uj, 1);
                for (std::size_t r = 0; r < rows.size(); ++r)
                    if (!dr.quotients[r].is_zero())
                        cof[t] = cof[t] - dr.quotients[r] * rows[r].cof[t];
            }
        }
        add_row(std::move(dr.remainder), pr.sugar, std::move(cof));
        push_pairs_for(rows.size() - 1);
    }

    // minimalize: drop rows whose leading monomial another row's divides
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < rows.size() && !redundant; ++j) {
            if (i == j) continue;
            if (rows[j].lm.divides(rows[i].lm) &&
                (rows[j].lm != rows[i].lm || j < i))
                redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
        return ord.less(rows[a].lm, rows[b].lm);
    });

    // tail-reduce each survivor against the others, keeping cofactors in
    // step with the (possibly already reduced) divisors actually used
    std::vector<Poly> minimal;
    std::vector<std::vector<Poly>> mincof;
    minimal.reserve(keep.size());
    for (std::size_t k : keep) {
        minimal.push_back(rows[k].f);
        if (track) mincof.push_back(rows[k].cof);
    }
    for (std::size_t a = 0; a < keep.size(); ++a) {
        std::vector<Poly> others;
        std::vector<std::size_t> omap;
        for (std::size_t b = 0; b < keep.size(); ++b)
            if (b != a) {
                others.push_back(minimal[b]);
                omap.push_back(b);
            }
        if (others.empty()) {
            out.basis.push_back(minimal[a]);
            if (track) out.cofactors.push_back(mincof[a]);
            continue;
        }
        DivisionResult dr = divide(minimal[a], others, ord);
        out.basis.push_back(dr.remainder);
        minimal[a] = dr.remainder;
        if (track) {
            std::vector<Poly> cof = mincof[a];
            for (std::size_t t = 0; t < cof.size(); ++t)
                for (std::size_t b = 0; b < others.size(); ++b)
                    if (!dr.quotients[b].is_zero())
                        cof[t] = cof[t] - dr.quotients[b] * mincof[omap[b]][t];
            out.cofactors.push_back(cof);
            mincof[a] = std::move(cof);
        }
    }
    return out;
}

inline Poly normal_form(const Poly& f, const GroebnerBasis& g) {
    require_same_ring(f.ring(), g.ring, "normal_form");
    if (g.basis.empty()) return f;
    return divide(f, g.basis, g.order).remainder;
}

inline std::pair<bool, MembershipCertificate>
ideal_member(const Poly& f, const GroebnerBasis& g) {
    require_same_ring(f.ring(), g.ring, "ideal_member");
    MembershipCertificate cert;
    cert.generators = g.original;
    cert.reduced_basis = g.basis;
    if (g.basis.empty()) {
        cert.member = f.is_zero();
        cert.normal_form = f;
        cert.coords.assign(g.original.size(), Poly::zero(f.ring()));
        return {cert.member, cert};
    }
    DivisionResult dr = divide(f, g.basis, g.order);
    cert.normal_form = dr.remainder;
    cert.member = dr.remainder.is_zero();
    if (cert.member) {
        if (!g.tracked)
            throw std::logic_error(
                "ideal_member: certificate needs a tracked basis");
        cert.coords.assign(g.original.size(), Poly::zero(f.ring()));
        for (std::size_t b = 0; b < g.basis.size(); ++b)
            for (std::size_t t = 0; t < g.original.size(); ++t)
                if (!dr.quotients[b].is_zero())
                    cert.coords[t] =
                        cert.coords[t] + dr.quotients[b] * g.cofactors[b][t];
    }
    return {cert.member, cert};
}

inline std::pair<bool, MembershipCertificate> ideal_member(const Poly& f,
                                                           const Ideal& ideal) {
    GroebnerBasis g = buchberger(ideal, MonomialOrder(), /*track=*/true);
    return ideal_member(f, g);
}

/// Membership in a monomial ideal needs no basis: every term must be
/// divisible by some generator monomial.
inline bool monomial_ideal_member(const Poly& f,
                                  const std::vector<Monomial>& gens) {
    for (const auto& t : f.terms()) {
        bool hit = false;
        for (const auto& m : gens)
            if (m.divides(t.mon)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

/// I^[p^e]: generators raised to the p^e-th power (coefficientwise
/// Frobenius is the identity over F_p, so exponent scaling is exact).
inline Ideal bracket_power(const Ideal& ideal, std::uint32_t e) {
    if (e < 1) throw std::invalid_argument("bracket_power: e >= 1");
    if (ideal.ring.k() != 1)
        throw std::domain_error("bracket_power: only over F_p");
    std::vector<Poly> gens;
    gens.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) {
        Poly h = g;
        for (std::uint32_t i = 0; i < e; ++i) h = h.frobenius_pth_power();
        gens.push_back(std::move(h));
    }
    return Ideal{ideal.ring, std::move(gens)};
}

namespace detail {

inline const char* kElimVar = "@t";

// Generators of the intersection of two ideals by eliminating a fresh
// variable from t*A + (1-t)*B.
inline std::vector<Poly> eliminate_intersection(const Ring& base,
                                                const std::vector<Poly>& a,
                                                const std::vector<Poly>& b) {
    Ring ext = base.with_extra_var(kElimVar);
    Poly t = Poly::variable(ext, ext.nvars() - 1);
    Poly one_minus_t = Poly::constant(ext, 1) - t;
    std::vector<Poly> gens;
    for (const auto& g : a) gens.push_back(t * g.into_ring(ext));
    for (const auto& g : b) gens.push_back(one_minus_t * g.into_ring(ext));
    GroebnerBasis gb = buchberger(Ideal{ext, std::move(gens)},
                                  MonomialOrder::eliminate_last());
    std::vector<Poly> result;
    for (const auto& bp : gb.basis) {
        bool has_t = false;
        for (const auto& term : bp.terms())
            if (term.mon.exp(ext.nvars() - 1)) { has_t = true; break; }
        if (!has_t) result.push_back(bp.into_ring(base));
    }
    return result;
}

inline Poly divide_exact(const Poly& h, const Poly& f) {
    DivisionResult dr = divide(h, {f}, MonomialOrder());
    if (!dr.remainder.is_zero())
        throw std::logic_error("divide_exact: not divisible");
    return dr.quotients[0];
}

} // namespace detail

/// Canonical generators (a reduced grevlex basis) for the span of the
/// given presentation.
inline Ideal canonicalize(const Ideal& ideal) {
    GroebnerBasis gb = buchberger(ideal);
    return Ideal{ideal.ring, gb.basis};
}

/// (I : J) computed as the intersection over J's generators of
/// (I : f) = (1/f) * (I \cap (f)), each via variable elimination.
inline Ideal colon_ideal(const Ideal& ideal, const Ideal& j) {
    require_same_ring(ideal.ring, j.ring, "colon_ideal");
    const Ring& ring = ideal.ring;
    if (j.gens.empty()) // (I : 0) is the whole ring
        return Ideal{ring, {Poly::constant(ring, 1)}};
    std::vector<Poly> acc;
    bool first = true;
    for (const auto& f : j.gens) {
        std::vector<Poly> part;
        for (const auto& h :
             detail::eliminate_intersection(ring, ideal.gens, {f}))
            part.push_back(detail::divide_exact(h, f));
        if (first) {
            acc = std::move(part);
            first = false;
            continue;
        }
        if (acc.empty() || part.empty()) {
            acc.clear();
            break;
        }
        acc = detail::eliminate_intersection(ring, acc, part);
    }
    if (acc.empty()) return Ideal{ring, {}};
    return canonicalize(Ideal{ring, std::move(acc)});
}

namespace detail {

inline void enumerate_tuples(
    const std::vector<std::uint32_t>& caps, std::vector<std::uint32_t>& cur,
    std::size_t i,
    const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    if (i == caps.size()) {
        fn(cur);
        return;
    }
    for (std::uint32_t e = 0; e < caps[i]; ++e) {
        cur[i] = e;
        enumerate_tuples(caps, cur, i + 1, fn);
    }
}

} // namespace detail

/// Standard monomials of R/I.  Requires the initial ideal to contain a
/// pure power of every variable; dimension is capped.
inline std::vector<Monomial> quotient_basis(const GroebnerBasis& gb,
                                            std::size_t dim_cap = 1000000) {
    const Ring& ring = gb.ring;
    std::uint32_t n = ring.nvars();
    std::vector<std::uint32_t> caps(n, 0);
    std::vector<bool> have(n, false);
    std::vector<Monomial> lms;
    for (const auto& b : gb.basis) {
        Monomial lm = b.leading_term(gb.order).mon;
        if (lm.is_one()) return {}; // 1 in I, zero quotient
        std::uint32_t nz = 0, var = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            if (lm.exp(i)) { ++nz; var = i; }
        if (nz == 1) {
            if (!have[var] || lm.exp(var) < caps[var]) caps[var] = lm.exp(var);
            have[var] = true;
        }
        lms.push_back(std::move(lm));
    }
    for (std::uint32_t i = 0; i < n; ++i)
        if (!have[i])
            throw std::domain_error(
                "quotient_basis: quotient not finite-dimensional");
    std::size_t dim = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        dim *= caps[i];
        if (dim > dim_cap)
            throw std::domain_error("quotient_basis: dimension cap exceeded");
    }
    std::vector<Monomial> result;
    std::vector<std::uint32_t> cur(n, 0);
    detail::enumerate_tuples(caps, cur, 0,
                             [&](const std::vector<std::uint32_t>& e) {
        Monomial m{std::vector<std::uint32_t>(e)};
        for (const auto& lm : lms)
            if (lm.divides(m)) return;
        result.push_back(std::move(m));
    });
    return result;
}

inline std::vector<Monomial> quotient_basis(const Ideal& ideal,
                                            std::size_t dim_cap = 1000000) {
    return quotient_basis(buchberger(ideal), dim_cap);
}

/// Gröbner-free membership oracle for ideals presented with literal pure
/// powers x_i^{d_i} among the generators: exact row reduction on the
/// truncated space spanned by {m * g mod (x_1^{d_1}, ..., x_n^{d_n})}.
inline bool member_by_linear_algebra(const Poly& f, const Ideal& ideal,
                                     std::size_t dim_cap = 1000000) {
    require_same_ring(f.ring(), ideal.ring, "member_by_linear_algebra");
    const Ring& ring = ideal.ring;
    if (ring.k() != 1)
        throw std::domain_error("member_by_linear_algebra: only over F_p");
    std::uint32_t n = ring.nvars();
    std::vector<std::uint32_t> caps(n, 0);
    std::vector<bool> have(n, false);
    std::vector<bool> pure(ideal.gens.size(), false);
    for (std::size_t gi = 0; gi < ideal.gens.size(); ++gi) {
        const Poly& g = ideal.gens[gi];
        if (g.term_count() != 1) continue;
        const Monomial& m = g.terms()[0].mon;
        std::uint32_t nz = 0, var = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            if (m.exp(i)) { ++nz; var = i; }
        if (nz != 1) continue;
        pure[gi] = true;
        if (!have[var] || m.exp(var) < caps[var]) caps[var] = m.exp(var);
        have[var] = true;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        if (!have[i])
            throw std::domain_error("member_by_linear_algebra: no pure-power "
                                    "generator for every variable");
    std::size_t dim = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        dim *= caps[i];
        if (dim > dim_cap)
            throw std::domain_error(
                "member_by_linear_algebra: dimension cap exceeded");
    }
    std::vector<std::size_t> stride(n, 1);
    for (std::uint32_t i = 1; i < n; ++i)
        stride[i] = stride[i - 1] * caps[i - 1];
    auto truncate_to_vec = [&](const Poly& g, const Monomial& shift,
                               std::vector<std::uint32_t>& v) -> bool {
        bool any = false;
        for (const auto& t : g.terms()) {
            std::size_t idx = 0;
            bool dead = false;
            for (std::uint32_t i = 0; i < n; ++i) {
                std::uint64_t e = std::uint64_t(t.mon.exp(i)) + shift.exp(i);
                if (e >= caps[i]) { dead = true; break; }
                idx += std::size_t(e) * stride[i];
            }
            if (dead) continue;
            v[idx] = ring.add(v[idx], t.coeff);
            any = true;
        }
        return any;
    };

    FpEchelon ech(ring.p(), dim);
    std::vector<std::uint32_t> cur(n, 0);
    for (std::size_t gi = 0; gi < ideal.gens.size(); ++gi) {
        if (pure[gi]) continue; // multiples vanish in the truncation
        if (ech.rank() == dim) break;
        detail::enumerate_tuples(caps, cur, 0,
                                 [&](const std::vector<std::uint32_t>& e) {
            if (ech.rank() == dim) return;
            std::vector<std::uint32_t> v(dim, 0);
            if (truncate_to_vec(ideal.gens[gi],
                                Monomial{std::vector<std::uint32_t>(e)}, v))
                ech.insert(std::move(v));
        });
    }
    std::vector<std::uint32_t> vf(dim, 0);
    truncate_to_vec(f, Monomial(n), vf);
    return ech.contains(std::move(vf));
}

namespace detail {

inline void monomials_of_degree_rec(std::uint32_t n, std::uint64_t d,
                                    std::vector<std::uint32_t>& cur,
                                    std::size_t i, std::vector<Monomial>& out) {
    if (i + 1 == n) {
        cur[i] = static_cast<std::uint32_t>(d);
        out.push_back(Monomial{std::vector<std::uint32_t>(cur)});
        return;
    }
    for (std::uint64_t e = 0; e <= d; ++e) {
        cur[i] = static_cast<std::uint32_t>(e);
        monomials_of_degree_rec(n, d - e, cur, i + 1, out);
    }
}

} // namespace detail

inline std::vector<Monomial> monomials_of_degree(std::uint32_t nvars,
                                                 std::uint64_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(nvars, 0);
    detail::monomials_of_degree_rec(nvars, d, cur, 0, out);
    return out;
}

/// Dimension of the degree-d piece of the homogeneous ideal spanned by
/// `gens`.  Generators need not be homogeneous themselves; the degree-d
/// components of their multiples are collected.
inline std::size_t graded_piece_dim(const Ring& ring,
                                    const std::vector<Poly>& gens,
                                    std::uint64_t d) {
    std::vector<Monomial> cols = monomials_of_degree(ring.nvars(), d);
    std::map<std::vector<std::uint32_t>, std::size_t> colidx;
    for (std::size_t i = 0; i < cols.size(); ++i) colidx[cols[i].exps()] = i;
    FpEchelon ech(ring.p(), cols.size());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        std::uint64_t mindeg = g.terms().front().mon.degree();
        for (const auto& t : g.terms())
            mindeg = std::min(mindeg, t.mon.degree());
        for (std::uint64_t md = 0; md + mindeg <= d; ++md) {
            for (const auto& m : monomials_of_degree(ring.nvars(), md)) {
                std::vector<std::uint32_t> v(cols.size(), 0);
                bool any = false;
                for (const auto& t : g.terms()) {
                    if (t.mon.degree() + md != d) continue;
                    auto it = colidx.find(m.mul(t.mon).exps());
                    v[it->second] = ring.add(v[it->second], t.coeff);
                    any = true;
                }
                if (any) ech.insert(std::move(v));
            }
        }
    }
    return ech.rank();
}

} // namespace charp

#endif
