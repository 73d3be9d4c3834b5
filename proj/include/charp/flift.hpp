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

#ifndef CHARP_FLIFT_HPP
#define CHARP_FLIFT_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charp/groebner.hpp"
#include "charp/module_basis.hpp"

namespace charp {

// ---------------------------------------------------------------------
// Defect polynomial: the unique P with p*lift(P) = F(lift(f)) - lift(f)^p
// in Z/p^2[x].  Everything downstream keys on it.
// ---------------------------------------------------------------------

struct DefectPolynomial {
    Poly value; // P_f over F_p
    Poly lift;  // the canonical lift that produced it
};

/// P from an arbitrary lift over Z/p^2.
inline Poly compute_P_from_lift(const Poly& ftilde) {
    if (ftilde.ring().k() != 2)
        throw std::domain_error("compute_P_from_lift: needs k = 2");
    Poly d = ftilde.witt_frobenius_endo() - ftilde.pow(ftilde.ring().p());
    return d.exact_divide_by_p();
}

inline DefectPolynomial compute_Pf(const Poly& f) {
    if (f.ring().k() != 1)
        throw std::domain_error("compute_Pf: needs k = 1");
    Poly lift = f.canonical_lift();
    return {compute_P_from_lift(lift), lift};
}

/// Closed-form integer oracle for P_f: Fermat quotients on the diagonal
/// plus multinomial cross terms, reduced mod p at the end.  Independent of
/// the Z/p^2 arithmetic path.
inline Poly compute_Pf_oracle(const Poly& f, std::size_t composition_cap = 500000) {
    if (f.ring().k() != 1)
        throw std::domain_error("compute_Pf_oracle: needs k = 1");
    const Ring& ring = f.ring();
    const std::uint32_t p = ring.p();
    const auto& terms = f.terms();
    const std::size_t t = terms.size();
    Poly out(ring);

    // diagonal: FQ(c) * m^p with FQ(c) = (c - c^p)/p over the integers
    for (const auto& term : terms) {
        long long c = term.coeff;
        long long cp = 1;
        for (std::uint32_t i = 0; i < p; ++i) cp *= c;
        long long fq = (c - cp) / static_cast<long long>(p);
        out = out + Poly::term(ring, term.mon.scaled(p), ring.reduce(fq));
    }
    if (t < 2) return out;

    // crossing terms: -(1/p) * multinomial(p; a) * prod (c_j m_j)^{a_j}
    // over compositions a of p with no part equal to p
    std::vector<std::uint64_t> fact(p + 1, 1);
    for (std::uint32_t i = 1; i <= p; ++i) fact[i] = fact[i - 1] * i;

    std::size_t count = 1;
    for (std::uint32_t i = 1; i < t; ++i) {
        count = count * (p + i) / i; // C(p+t-1, t-1) built incrementally
        if (count > composition_cap)
            throw std::domain_error("compute_Pf_oracle: composition cap exceeded");
    }

    std::vector<std::uint32_t> alpha(t, 0);
    std::function<void(std::size_t, std::uint32_t)> rec =
        [&](std::size_t idx, std::uint32_t rest) {
        if (idx + 1 == t) {
            alpha[idx] = rest;
            std::uint32_t maxpart = 0;
            for (auto a : alpha) maxpart = std::max(maxpart, a);
            if (maxpart == p) return; // concentrated, handled above
            std::uint64_t denom = 1;
            for (auto a : alpha) denom *= fact[a];
            std::uint64_t mult_over_p = fact[p] / denom / p; // exact
            std::uint64_t coef = mult_over_p % p;
            Monomial mon(ring.nvars());
            for (std::size_t j = 0; j < t; ++j) {
                if (alpha[j] == 0) continue;
                coef = coef * ring.pow(terms[j].coeff, alpha[j]) % p;
                mon = mon.mul(terms[j].mon.scaled(alpha[j]));
            }
            out = out - Poly::term(ring, mon, static_cast<std::int64_t>(coef));
            return;
        }
        for (std::uint32_t a = 0; a <= rest; ++a) {
            alpha[idx] = a;
            rec(idx + 1, rest - a);
        }
    };
    rec(0, p);
    return out;
}

// ---------------------------------------------------------------------
// Quasi-homogeneity detection
// ---------------------------------------------------------------------

namespace detail {

struct Frac {
    long long n = 0, d = 1;
    void norm() {
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }
    static Frac of(long long v) { return {v, 1}; }
    Frac operator-(const Frac& o) const {
        Frac r{n * o.d - o.n * d, d * o.d};
        r.norm();
        return r;
    }
    Frac operator*(const Frac& o) const {
        Frac r{n * o.n, d * o.d};
        r.norm();
        return r;
    }
    Frac operator/(const Frac& o) const {
        Frac r{n * o.d, d * o.n};
        r.norm();
        return r;
    }
    bool zero() const { return n == 0; }
};

inline std::vector<std::vector<long long>>
weight_constraints(const std::vector<Poly>& fs) {
    std::vector<std::vector<long long>> rows;
    for (const auto& f : fs) {
        if (f.term_count() < 2) continue;
        const auto& base = f.terms().front().mon;
        for (std::size_t i = 1; i < f.terms().size(); ++i) {
            std::vector<long long> row(base.nvars());
            for (std::uint32_t v = 0; v < base.nvars(); ++v)
                row[v] = static_cast<long long>(f.terms()[i].mon.exp(v)) -
                         static_cast<long long>(base.exp(v));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline bool satisfies_constraints(const std::vector<std::vector<long long>>& rows,
                                  const std::vector<std::uint32_t>& w) {
    for (const auto& row : rows) {
        long long s = 0;
        for (std::size_t i = 0; i < w.size(); ++i) s += row[i] * w[i];
        if (s != 0) return false;
    }
    return true;
}

} // namespace detail

/// Positive integer weights making every input weighted-homogeneous,
/// normalized to coprime entries; the lexicographically smallest choice on
/// ties.  nullopt when no positive weights exist (or none within the
/// search bound for underdetermined systems in many variables).
inline std::optional<std::vector<std::uint32_t>>
detect_quasi_homogeneous(const std::vector<Poly>& fs) {
    if (fs.empty()) return std::nullopt;
    const std::uint32_t n = fs[0].ring().nvars();
    auto rows = detail::weight_constraints(fs);

    std::vector<std::uint32_t> ones(n, 1);
    if (detail::satisfies_constraints(rows, ones)) return ones;

    // rational row reduction to find the solution space
    std::vector<std::vector<detail::Frac>> m;
    for (const auto& r : rows) {
        std::vector<detail::Frac> fr(n);
        for (std::uint32_t i = 0; i < n; ++i) fr[i] = detail::Frac::of(r[i]);
        m.push_back(std::move(fr));
    }
    std::vector<int> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::uint32_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t r = rank; r < m.size(); ++r)
            if (!m[r][col].zero()) { sel = r; break; }
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        detail::Frac inv = detail::Frac::of(1) / m[rank][col];
        for (auto& x : m[rank]) x = x * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].zero()) continue;
            detail::Frac c = m[r][col];
            for (std::uint32_t j = 0; j < n; ++j)
                m[r][j] = m[r][j] - c * m[rank][j];
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::size_t freedom = n - rank;
    if (freedom == 0) return std::nullopt;

    if (freedom == 1) {
        // one ray: set the free variable to 1 and clear denominators
        std::uint32_t freev = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            if (pivot_of_col[i] < 0) freev = i;
        std::vector<detail::Frac> sol(n);
        sol[freev] = detail::Frac::of(1);
        for (std::uint32_t i = 0; i < n; ++i)
            if (pivot_of_col[i] >= 0)
                sol[i] = detail::Frac::of(0) - m[pivot_of_col[i]][freev];
        long long lcm = 1;
        for (const auto& s : sol) lcm = lcm / std::gcd(lcm, s.d) * s.d;
        std::vector<long long> ints(n);
        for (std::uint32_t i = 0; i < n; ++i) ints[i] = sol[i].n * (lcm / sol[i].d);
        bool neg = false, pos = false;
        for (auto v : ints) {
            if (v < 0) neg = true;
            if (v > 0) pos = true;
            if (v == 0) return std::nullopt;
        }
        if (neg && pos) return std::nullopt;
        if (neg)
            for (auto& v : ints) v = -v;
        long long g = 0;
        for (auto v : ints) g = std::gcd(g, v);
        std::vector<std::uint32_t> w(n);
        for (std::uint32_t i = 0; i < n; ++i)
            w[i] = static_cast<std::uint32_t>(ints[i] / g);
        return w;
    }

    // underdetermined: bounded lexicographic search in few variables
    if (n > 4) return std::nullopt;
    const std::uint32_t bound = 24;
    std::vector<std::uint32_t> w(n, 1);
    std::function<std::optional<std::vector<std::uint32_t>>(std::uint32_t)> rec =
        [&](std::uint32_t i) -> std::optional<std::vector<std::uint32_t>> {
        if (i == n) {
            if (detail::satisfies_constraints(rows, w)) {
                std::uint32_t g = 0;
                for (auto v : w) g = std::gcd(g, v);
                if (g == 1) return w;
            }
            return std::nullopt;
        }
        for (w[i] = 1; w[i] <= bound; ++w[i])
            if (auto r = rec(i + 1)) return r;
        return std::nullopt;
    };
    return rec(0);
}

// ---------------------------------------------------------------------
// Lift verdicts
// ---------------------------------------------------------------------

struct LiftOptions {
    enum class Method { automatic, graded, module_groebner, truncated };
    Method method = Method::automatic;
    std::uint64_t degree_bound = 0; // truncated path; 0 derives a default
    std::size_t descent_cap = 2048; // max module rank m * p^n
};

struct LiftVerdict {
    enum class Kind { Liftable, NotLiftable, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::vector<Poly> g, h; // witnesses when Liftable
    std::size_t obstructed_index = 0;
    MembershipCertificate obstruction; // NF(P_f) != 0 evidence
    std::optional<ModuleMembershipCertificate> module_obstruction;
    std::uint64_t degree_bound = 0; // when Inconclusive
    std::string method;
    bool regular_sequence_assumed = false;

    bool liftable() const { return kind == Kind::Liftable; }
};

/// Independent witness check: substitutes (g_i, h_k) into the criterion
/// and reduces; shares nothing with the solvers.
inline bool verify_flift_witness(const std::vector<Poly>& fs,
                                 const std::vector<Poly>& gs,
                                 const std::vector<Poly>& hs) {
    if (fs.empty() || gs.size() != fs.size())
        throw std::invalid_argument("verify_flift_witness: arity mismatch");
    const Ring& ring = fs[0].ring();
    if (hs.size() != ring.nvars())
        throw std::invalid_argument("verify_flift_witness: arity mismatch");
    GroebnerBasis gb = buchberger(Ideal::make(ring, fs));
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Poly residual = compute_Pf(fs[i]).value + gs[i].frobenius_pth_power();
        for (std::uint32_t k = 0; k < ring.nvars(); ++k)
            residual = residual -
                       fs[i].partial_derivative(k).frobenius_pth_power() * hs[k];
        if (!normal_form(residual, gb).is_zero()) return false;
    }
    return true;
}

namespace detail {

inline void monomials_of_weighted_degree_rec(
    const std::vector<std::uint32_t>& w, std::uint64_t target,
    std::vector<std::uint32_t>& cur, std::size_t i, std::vector<Monomial>& out) {
    if (i + 1 == w.size()) {
        if (target % w[i] == 0) {
            cur[i] = static_cast<std::uint32_t>(target / w[i]);
            out.push_back(Monomial{std::vector<std::uint32_t>(cur)});
        }
        return;
    }
    for (std::uint64_t e = 0; e * w[i] <= target; ++e) {
        cur[i] = static_cast<std::uint32_t>(e);
        monomials_of_weighted_degree_rec(w, target - e * w[i], cur, i + 1, out);
    }
}

inline std::vector<Monomial>
monomials_of_weighted_degree(const std::vector<std::uint32_t>& w,
                             std::uint64_t target) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(w.size(), 0);
    monomials_of_weighted_degree_rec(w, target, cur, 0, out);
    return out;
}

// Shared assembly for the graded and truncated linear solvers: unknowns
// are coefficients of the h_k over hmons[k] and of the g_i over gmons[i];
// one equation block per f_i from the normal form of the residual.
struct LinearLift {
    bool solved = false;
    std::vector<Poly> g, h;
};

inline std::optional<LinearLift>
solve_linear_lift(const std::vector<Poly>& fs, const GroebnerBasis& gb,
                  const std::vector<std::vector<Monomial>>& hmons,
                  const std::vector<std::vector<Monomial>>& gmons) {
    const Ring& ring = fs[0].ring();
    const std::uint32_t n = ring.nvars();
    std::size_t ncols = 0;
    std::vector<std::size_t> hoff(n), goff(fs.size());
    for (std::uint32_t k = 0; k < n; ++k) {
        hoff[k] = ncols;
        ncols += hmons[k].size();
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
        goff[i] = ncols;
        ncols += gmons[i].size();
    }

    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t> rowidx;
    std::vector<std::vector<std::uint32_t>> a;
    std::vector<std::uint32_t> b;
    auto row_of = [&](std::size_t i, const Monomial& m) -> std::size_t {
        auto key = std::make_pair(i, m.exps());
        auto it = rowidx.find(key);
        if (it != rowidx.end()) return it->second;
        std::size_t r = a.size();
        rowidx.emplace(std::move(key), r);
        a.emplace_back(ncols, 0);
        b.push_back(0);
        return r;
    };
    auto put = [&](std::size_t i, const Poly& val, std::size_t col, bool negate) {
        for (const auto& t : val.terms()) {
            std::size_t r = row_of(i, t.mon);
            std::uint32_t c = negate ? ring.neg(t.coeff) : t.coeff;
            a[r][col] = ring.add(a[r][col], c);
        }
    };

    for (std::size_t i = 0; i < fs.size(); ++i) {
        Poly nfp = normal_form(compute_Pf(fs[i]).value, gb);
        for (const auto& t : nfp.terms()) {
            std::size_t r = row_of(i, t.mon);
            b[r] = ring.add(b[r], ring.neg(t.coeff)); // move to the RHS
        }
        for (std::uint32_t k = 0; k < n; ++k) {
            Poly dpk = fs[i].partial_derivative(k).frobenius_pth_power();
            if (dpk.is_zero()) continue;
            for (std::size_t v = 0; v < hmons[k].size(); ++v) {
                Poly col = normal_form(dpk.mul_term(hmons[k][v], 1), gb);
                put(i, col, hoff[k] + v, /*negate=*/true);
            }
        }
        for (std::size_t u = 0; u < gmons[i].size(); ++u) {
            Poly col = normal_form(
                Poly::term(ring, gmons[i][u].scaled(ring.p()), 1), gb);
            put(i, col, goff[i] + u, /*negate=*/false);
        }
    }

    std::optional<std::vector<std::uint32_t>> sol;
    if (a.empty()) // no constraints at all: zero witnesses work
        sol = std::vector<std::uint32_t>(ncols, 0);
    else
        sol = solve_linear_system(ring.p(), std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    LinearLift out;
    out.solved = true;
    for (std::uint32_t k = 0; k < n; ++k) {
        Poly hk(ring);
        for (std::size_t v = 0; v < hmons[k].size(); ++v)
            hk = hk + Poly::term(ring, hmons[k][v], (*sol)[hoff[k] + v]);
        out.h.push_back(std::move(hk));
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Poly gi(ring);
        for (std::size_t u = 0; u < gmons[i].size(); ++u)
            gi = gi + Poly::term(ring, gmons[i][u], (*sol)[goff[i] + u]);
        out.g.push_back(std::move(gi));
    }
    return out;
}

inline LiftVerdict not_liftable_evidence(const std::vector<Poly>& fs,
                                         const GroebnerBasis& gb,
                                         const std::string& method) {
    LiftVerdict v;
    v.kind = LiftVerdict::Kind::NotLiftable;
    v.method = method;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Poly nfp = normal_form(compute_Pf(fs[i]).value, gb);
        if (!nfp.is_zero()) {
            v.obstructed_index = i;
            v.obstruction.member = false;
            v.obstruction.normal_form = nfp;
            v.obstruction.generators = fs;
            v.obstruction.reduced_basis = gb.basis;
            return v;
        }
    }
    throw std::logic_error("not_liftable_evidence: no nonzero defect residue");
}

} // namespace detail

/// Complete solver for weighted-homogeneous input: the unknowns h_k and
/// g_i may be forced into single weighted degrees (p*w_k and deg f_i), so
/// one exact linear system per instance decides liftability.
inline LiftVerdict graded_solver(const std::vector<Poly>& fs,
                                 const std::vector<std::uint32_t>& weights) {
    if (fs.empty()) throw std::invalid_argument("graded_solver: no input");
    const Ring& ring = fs[0].ring();
    const std::uint32_t n = ring.nvars();
    if (weights.size() != n)
        throw std::invalid_argument("graded_solver: weight arity");
    for (const auto& f : fs) {
        require_same_ring(ring, f.ring(), "graded_solver");
        if (!f.is_homogeneous(weights))
            throw std::invalid_argument("graded_solver: input not homogeneous "
                                        "for the given weights");
    }
    GroebnerBasis gb = buchberger(Ideal::make(ring, fs));
    std::vector<std::vector<Monomial>> hmons(n), gmons(fs.size());
    for (std::uint32_t k = 0; k < n; ++k)
        hmons[k] = detail::monomials_of_weighted_degree(
            weights, std::uint64_t(ring.p()) * weights[k]);
    for (std::size_t i = 0; i < fs.size(); ++i)
        gmons[i] = detail::monomials_of_weighted_degree(
            weights, fs[i].weighted_degree(weights));

    auto lin = detail::solve_linear_lift(fs, gb, hmons, gmons);
    if (!lin) return detail::not_liftable_evidence(fs, gb, "graded-linear-algebra");
    LiftVerdict v;
    v.kind = LiftVerdict::Kind::Liftable;
    v.method = "graded-linear-algebra";
    v.g = lin->g;
    v.h = lin->h;
    if (!verify_flift_witness(fs, v.g, v.h))
        throw std::logic_error("graded_solver: witness failed verification");
    return v;
}

/// Sound-but-incomplete fallback: search for witnesses of bounded total
/// degree.  May answer Liftable or Inconclusive, never NotLiftable.
inline LiftVerdict truncated_solver(const std::vector<Poly>& fs,
                                    std::uint64_t degree_bound) {
    if (fs.empty()) throw std::invalid_argument("truncated_solver: no input");
    const Ring& ring = fs[0].ring();
    const std::uint32_t n = ring.nvars();
    if (degree_bound == 0) {
        for (const auto& f : fs)
            degree_bound = std::max(degree_bound, compute_Pf(f).value.degree());
    }
    GroebnerBasis gb = buchberger(Ideal::make(ring, fs));
    std::vector<Monomial> all;
    for (std::uint64_t d = 0; d <= degree_bound; ++d)
        for (auto& m : monomials_of_degree(n, d)) all.push_back(m);
    std::vector<std::vector<Monomial>> hmons(n, all), gmons(fs.size(), all);

    auto lin = detail::solve_linear_lift(fs, gb, hmons, gmons);
    LiftVerdict v;
    v.method = "degree-truncated";
    v.degree_bound = degree_bound;
    if (!lin) {
        v.kind = LiftVerdict::Kind::Inconclusive;
        return v;
    }
    v.kind = LiftVerdict::Kind::Liftable;
    v.g = lin->g;
    v.h = lin->h;
    if (!verify_flift_witness(fs, v.g, v.h))
        throw std::logic_error("truncated_solver: witness failed verification");
    return v;
}

// ---------------------------------------------------------------------
// Frobenius-descent encoding: R = F_p[x] is free of rank p^n over its
// subring S of p-th powers with basis {x^a : a in [0,p)^n}.  Writing the
// unknowns in that basis turns the lifting criterion into membership in a
// finitely generated S-submodule of R^m, with S read as a fresh copy of
// the polynomial ring.
// ---------------------------------------------------------------------

struct DescentInstance {
    Ring ring;   // base F_p[x]; module coefficients reuse it as F_p[y]
    std::uint32_t m = 0;
    std::uint64_t rank = 0; // m * p^n
    std::vector<ModVec> gens;
    ModVec target;
    // generator bookkeeping for decoding certificates
    struct GenTag {
        enum class Kind { h_basis, g_unit, ideal_mult } kind;
        std::uint32_t k = 0;    // variable index for h_basis
        std::size_t i = 0;      // equation / component index
        Monomial basis_mon;     // the x^a shift
    };
    std::vector<GenTag> tags;
};

namespace detail {

inline std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) {
        if (r > (1ull << 40)) return 1ull << 40; // saturate, caps compare below
        r *= b;
    }
    return r;
}

inline std::size_t slot_of(const Ring& ring, std::size_t component,
                           const std::vector<std::uint32_t>& a) {
    const std::uint32_t p = ring.p();
    std::size_t idx = 0, stride = 1;
    for (std::uint32_t i = 0; i < ring.nvars(); ++i) {
        idx += a[i] * stride;
        stride *= p;
    }
    return component * stride + idx;
}

// f placed in the given component, split over the basis {x^a}.
inline void encode_into(const Ring& ring, const Poly& f, std::size_t component,
                        std::vector<std::pair<std::size_t, Term>>& out) {
    const std::uint32_t p = ring.p();
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> a(ring.nvars()), q(ring.nvars());
        for (std::uint32_t i = 0; i < ring.nvars(); ++i) {
            a[i] = t.mon.exp(i) % p;
            q[i] = t.mon.exp(i) / p;
        }
        out.push_back({slot_of(ring, component, a),
                       Term{Monomial(std::move(q)), t.coeff}});
    }
}

inline ModVec encode_modvec(const Ring& ring, std::uint64_t rank,
                            const std::vector<std::pair<std::size_t, Term>>& entries) {
    ModVec v(ring, static_cast<std::uint32_t>(rank));
    for (const auto& [slot, term] : entries)
        v = v + ModVec::unit(ring, static_cast<std::uint32_t>(rank),
                             static_cast<std::uint32_t>(slot),
                             Poly::term(ring, term.mon, term.coeff));
    return v;
}

// y-polynomial evaluated at y = x^p.
inline Poly eval_at_pth_powers(const Poly& f) {
    return f.frobenius_pth_power();
}

} // namespace detail

inline DescentInstance build_descent_instance(const std::vector<Poly>& fs,
                                              std::size_t rank_cap = 2048) {
    if (fs.empty()) throw std::invalid_argument("descent: no input");
    const Ring& ring = fs[0].ring();
    const std::uint32_t n = ring.nvars();
    const std::uint32_t p = ring.p();
    const std::uint32_t m = static_cast<std::uint32_t>(fs.size());
    std::uint64_t pn = detail::pow_u64(p, n);
    std::uint64_t rank = pn * m;
    if (rank > rank_cap)
        throw std::domain_error("descent: rank cap exceeded");

    DescentInstance inst;
    inst.ring = ring;
    inst.m = m;
    inst.rank = rank;

    // h_k contributions: one generator per (k, basis monomial x^a)
    std::vector<std::uint32_t> caps(n, p), cur(n, 0);
    std::vector<Monomial> basis_mons;
    detail::enumerate_tuples(caps, cur, 0,
                             [&](const std::vector<std::uint32_t>& a) {
        basis_mons.push_back(Monomial{std::vector<std::uint32_t>(a)});
    });

    for (std::uint32_t k = 0; k < n; ++k) {
        std::vector<Poly> dpk;
        for (const auto& f : fs)
            dpk.push_back(f.partial_derivative(k).frobenius_pth_power());
        for (const auto& a : basis_mons) {
            std::vector<std::pair<std::size_t, Term>> entries;
            for (std::uint32_t i = 0; i < m; ++i)
                detail::encode_into(ring, dpk[i].mul_term(a, 1), i, entries);
            if (entries.empty()) continue;
            inst.gens.push_back(detail::encode_modvec(ring, rank, entries));
            inst.tags.push_back({DescentInstance::GenTag::Kind::h_basis, k, 0, a});
        }
    }
    // g_i^p contributions: the slot-0 unit of component i
    for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<std::pair<std::size_t, Term>> entries;
        detail::encode_into(ring, Poly::constant(ring, 1), i, entries);
        inst.gens.push_back(detail::encode_modvec(ring, rank, entries));
        inst.tags.push_back({DescentInstance::GenTag::Kind::g_unit, 0, i,
                             Monomial(n)});
    }
    // ideal contributions: f_j * x^a in component i
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            for (const auto& a : basis_mons) {
                std::vector<std::pair<std::size_t, Term>> entries;
                detail::encode_into(ring, fs[j].mul_term(a, 1), i, entries);
                inst.gens.push_back(detail::encode_modvec(ring, rank, entries));
                inst.tags.push_back({DescentInstance::GenTag::Kind::ideal_mult,
                                     j, i, a});
            }

    std::vector<std::pair<std::size_t, Term>> tentries;
    for (std::uint32_t i = 0; i < m; ++i)
        detail::encode_into(ring, compute_Pf(fs[i]).value, i, tentries);
    inst.target = detail::encode_modvec(ring, rank, tentries);
    return inst;
}

/// Round trip used by the tests: reassemble the component polynomial from
/// its slot decomposition.
inline Poly decode_descent_component(const DescentInstance& inst,
                                     const ModVec& v, std::uint32_t component) {
    const Ring& ring = inst.ring;
    const std::uint32_t p = ring.p();
    const std::uint32_t n = ring.nvars();
    std::uint64_t pn = detail::pow_u64(p, n);
    Poly out(ring);
    for (const auto& t : v.terms()) {
        std::size_t comp = t.pos / pn;
        if (comp != component) continue;
        std::size_t rest = t.pos % pn;
        std::vector<std::uint32_t> exps(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            exps[i] = static_cast<std::uint32_t>(rest % p) + p * t.mon.exp(i);
            rest /= p;
        }
        out = out + Poly::term(ring, Monomial(std::move(exps)), t.coeff);
    }
    return out;
}

inline LiftVerdict solve_descent(const std::vector<Poly>& fs,
                                 const DescentInstance& inst) {
    const Ring& ring = inst.ring;
    ModuleBasis mb = module_buchberger(inst.gens, /*track=*/true);
    auto [ok, cert] = module_member(inst.target, mb);
    LiftVerdict v;
    v.method = "module-groebner";
    if (!ok) {
        v.kind = LiftVerdict::Kind::NotLiftable;
        v.module_obstruction = cert;
        GroebnerBasis gb = buchberger(Ideal::make(ring, fs));
        // the scalar evidence: some defect fails to reduce
        for (std::size_t i = 0; i < fs.size(); ++i) {
            Poly nfp = normal_form(compute_Pf(fs[i]).value, gb);
            if (!nfp.is_zero()) {
                v.obstructed_index = i;
                v.obstruction.member = false;
                v.obstruction.normal_form = nfp;
                v.obstruction.generators = fs;
                v.obstruction.reduced_basis = gb.basis;
                break;
            }
        }
        return v;
    }
    v.kind = LiftVerdict::Kind::Liftable;
    v.g.assign(fs.size(), Poly::zero(ring));
    v.h.assign(ring.nvars(), Poly::zero(ring));
    for (std::size_t t = 0; t < cert.coords.size(); ++t) {
        const Poly& c = cert.coords[t];
        if (c.is_zero()) continue;
        const auto& tag = inst.tags[t];
        switch (tag.kind) {
        case DescentInstance::GenTag::Kind::h_basis:
            // h_k += c(x^p) * x^a
            v.h[tag.k] = v.h[tag.k] +
                         detail::eval_at_pth_powers(c).mul_term(tag.basis_mon, 1);
            break;
        case DescentInstance::GenTag::Kind::g_unit:
            // target = ... + c * V_i means g_i^p = -c(x^p), so g_i = -c
            // with exponents read back in x
            v.g[tag.i] = v.g[tag.i] - c;
            break;
        case DescentInstance::GenTag::Kind::ideal_mult:
            break; // multiplier of f_j, irrelevant for the witness
        }
    }
    if (!verify_flift_witness(fs, v.g, v.h))
        throw std::logic_error("solve_descent: witness failed verification");
    return v;
}

// ---------------------------------------------------------------------
// Public liftability entry points
// ---------------------------------------------------------------------

inline LiftVerdict ci_f_liftable(const std::vector<Poly>& fs,
                                 const LiftOptions& opts = {}) {
    if (fs.empty()) throw std::invalid_argument("ci_f_liftable: no input");
    const Ring& ring = fs[0].ring();
    if (ring.k() != 1)
        throw std::domain_error("ci_f_liftable: needs k = 1");
    for (const auto& f : fs) {
        require_same_ring(ring, f.ring(), "ci_f_liftable");
        if (f.is_zero())
            throw std::invalid_argument("ci_f_liftable: zero generator");
        if (f.is_constant())
            throw std::invalid_argument("ci_f_liftable: unit generator");
    }
    bool reg_flag = fs.size() > 1; // single nonzero f is always regular

    auto finish = [&](LiftVerdict v) {
        v.regular_sequence_assumed = reg_flag;
        return v;
    };

    using Method = LiftOptions::Method;
    switch (opts.method) {
    case Method::graded: {
        auto w = detect_quasi_homogeneous(fs);
        if (!w)
            throw std::invalid_argument(
                "ci_f_liftable: graded method needs quasi-homogeneous input");
        return finish(graded_solver(fs, *w));
    }
    case Method::module_groebner:
        return finish(solve_descent(fs, build_descent_instance(fs, opts.descent_cap)));
    case Method::truncated:
        return finish(truncated_solver(fs, opts.degree_bound));
    case Method::automatic: {
        if (auto w = detect_quasi_homogeneous(fs))
            return finish(graded_solver(fs, *w));
        std::uint64_t rank = detail::pow_u64(ring.p(), ring.nvars()) * fs.size();
        if (rank <= opts.descent_cap)
            return finish(solve_descent(fs, build_descent_instance(fs, opts.descent_cap)));
        return finish(truncated_solver(fs, opts.degree_bound));
    }
    }
    throw std::logic_error("ci_f_liftable: unreachable");
}

inline LiftVerdict hypersurface_f_liftable(const Poly& f,
                                           const LiftOptions& opts = {}) {
    return ci_f_liftable({f}, opts);
}

// ---------------------------------------------------------------------
// Canonical W_2 lifts of complete intersections
// ---------------------------------------------------------------------

struct W2Lift {
    std::vector<Poly> lifts; // over Z/p^2
    bool regular_sequence_assumed = false;
    bool flatness_checked = false;
    std::size_t flatness_samples = 0;
    std::size_t flatness_violations = 0;
};

/// Canonical coefficientwise lifts.  In the graded finite-colength case a
/// sampled flatness check runs over Z/p^2: whenever p*c vanishes in the
/// quotient, c must lie in p*(quotient) + ideal.
inline W2Lift w2_canonical_ci_lift(const std::vector<Poly>& fs,
                                   std::size_t samples = 64,
                                   std::uint64_t seed = 1) {
    if (fs.empty()) throw std::invalid_argument("w2_canonical_ci_lift: no input");
    const Ring& ring = fs[0].ring();
    W2Lift out;
    out.regular_sequence_assumed = fs.size() > 1;
    for (const auto& f : fs) out.lifts.push_back(f.canonical_lift());

    std::vector<std::uint32_t> ones(ring.nvars(), 1);
    for (const auto& f : fs)
        if (!f.is_homogeneous(ones)) return out;
    std::vector<Monomial> std_mons;
    try {
        std_mons = quotient_basis(Ideal::make(ring, fs), 4096);
    } catch (const std::domain_error&) {
        return out; // not finite colength; no sampled check
    }

    std::uint64_t degcap = 0;
    for (const auto& m : std_mons) degcap = std::max(degcap, m.degree());
    std::vector<Monomial> cols;
    for (std::uint64_t d = 0; d <= degcap; ++d)
        for (auto& m : monomials_of_degree(ring.nvars(), d)) cols.push_back(m);
    std::map<std::vector<std::uint32_t>, std::size_t> colidx;
    for (std::size_t i = 0; i < cols.size(); ++i) colidx[cols[i].exps()] = i;

    const std::uint32_t p = ring.p();
    const std::uint32_t m2 = p * p;
    Zp2Echelon ech(p, cols.size());
    auto vec_of = [&](const Poly& f) {
        std::vector<std::uint32_t> v(cols.size(), 0);
        for (const auto& t : f.terms()) {
            auto it = colidx.find(t.mon.exps());
            if (it == colidx.end())
                throw std::logic_error("w2 flatness: degree bound violated");
            v[it->second] = (v[it->second] + t.coeff) % m2;
        }
        return v;
    };
    for (const auto& lift : out.lifts) {
        std::uint64_t dg = lift.degree();
        for (std::uint64_t d = 0; dg + d <= degcap; ++d)
            for (auto& m : monomials_of_degree(ring.nvars(), d))
                ech.insert(vec_of(lift.mul_term(m, 1)));
    }

    Ring up = ring.with_exponent(2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, m2 - 1);
    std::uniform_int_distribution<std::size_t> pick_col(0, cols.size() - 1);
    out.flatness_checked = true;
    for (std::size_t s = 0; s < samples; ++s) {
        Poly c(up);
        if (s % 2 == 0) {
            // generic element of bounded degree
            for (int t = 0; t < 4; ++t)
                c = c + Poly::term(up, cols[pick_col(rng)], coeff(rng));
        } else {
            // constructed p-torsion: p*y + ideal element
            for (int t = 0; t < 3; ++t)
                c = c + Poly::term(up, cols[pick_col(rng)],
                                   p * (coeff(rng) % p));
            for (const auto& lift : out.lifts) {
                if (lift.degree() > degcap) continue;
                std::uint64_t room = degcap - lift.degree();
                auto mons = monomials_of_degree(ring.nvars(),
                                                room ? rng() % (room + 1) : 0);
                c = c + lift.mul_term(mons[rng() % mons.size()],
                                      coeff(rng));
            }
        }
        ++out.flatness_samples;
        Poly pc = c.scaled(p);
        if (!ech.contains(vec_of(pc))) continue; // p*c != 0 in the quotient
        auto res = ech.reduce(vec_of(c));
        bool in_p_part = true;
        for (auto x : res)
            if (x % p != 0) { in_p_part = false; break; }
        if (!in_p_part) ++out.flatness_violations;
    }
    return out;
}

// ---------------------------------------------------------------------
// Truncated-quadric obstructions
// ---------------------------------------------------------------------

struct ObstructionVerdict {
    bool obstructed = false; // one-sided: membership stays inconclusive
    Poly defect;
    MembershipCertificate cert;
    std::string interpretation;
};

inline std::vector<Poly> default_pure_powers(const Ring& ring) {
    std::vector<Poly> gens;
    for (std::uint32_t i = 0; i < ring.nvars(); ++i)
        gens.push_back(Poly::variable(ring, i).pow(ring.p()));
    return gens;
}

namespace detail {

inline ObstructionVerdict defect_membership_obstruction(
    const Poly& f, const std::vector<Poly>& pure_power_gens,
    const std::string& negative_interpretation) {
    const Ring& ring = f.ring();
    Poly pf = compute_Pf(f).value;
    std::vector<Poly> gens = {f};
    for (const auto& g : pure_power_gens) gens.push_back(g);
    auto [member, cert] = ideal_member(pf, Ideal::make(ring, gens));
    ObstructionVerdict v;
    v.defect = pf;
    v.cert = cert;
    v.obstructed = !member;
    v.interpretation = v.obstructed ? negative_interpretation : "inconclusive";
    return v;
}

} // namespace detail

/// P_f outside (f, pure powers) rules out every flat lift of the truncated
/// quadric algebra; membership proves nothing, hence "inconclusive".
inline ObstructionVerdict
quadric_family_w2_obstruction(const Poly& f,
                              const std::vector<Poly>& pure_power_gens) {
    return detail::defect_membership_obstruction(f, pure_power_gens,
                                                 "not-w2-liftable");
}

/// Same membership, read against divided-power structures on the maximal
/// ideal: p! gamma_p(x) = x^p forces the defect into the ideal.
inline ObstructionVerdict
pd_obstruction(const Poly& f, const std::vector<Poly>& pure_power_gens) {
    return detail::defect_membership_obstruction(f, pure_power_gens,
                                                 "no-pd-structure");
}

} // namespace charp

#endif
