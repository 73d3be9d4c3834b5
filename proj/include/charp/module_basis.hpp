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

#ifndef CHARP_MODULE_BASIS_HPP
#define CHARP_MODULE_BASIS_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "charp/groebner.hpp"
#include "charp/polynomial.hpp"

namespace charp {

struct ModTerm {
    std::uint32_t pos;
    Monomial mon;
    std::uint32_t coeff;
};

/// Term-over-position order: grevlex on the monomials, ties broken by the
/// lower position.  This is the only module order used here.
inline int module_compare(const ModTerm& a, const ModTerm& b) {
    int c = MonomialOrder().compare(a.mon, b.mon);
    if (c != 0) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return 0;
}

/// Element of a free module F_p[x]^rank over the polynomial ring, stored
/// as sorted terms like Poly.
class ModVec {
public:
    ModVec() = default;
    ModVec(Ring ring, std::uint32_t rank)
        : ring_(std::move(ring)), rank_(rank) {}

    static ModVec from_components(const Ring& r, std::vector<Poly> comps) {
        ModVec v(r, static_cast<std::uint32_t>(comps.size()));
        for (std::uint32_t i = 0; i < comps.size(); ++i) {
            require_same_ring(r, comps[i].ring(), "module vector");
            for (const auto& t : comps[i].terms())
                v.terms_.push_back({i, t.mon, t.coeff});
        }
        v.sort();
        return v;
    }

    static ModVec unit(const Ring& r, std::uint32_t rank, std::uint32_t pos,
                       const Poly& coeff) {
        ModVec v(r, rank);
        for (const auto& t : coeff.terms()) v.terms_.push_back({pos, t.mon, t.coeff});
        v.sort();
        return v;
    }

    const Ring& ring() const { return ring_; }
    std::uint32_t rank() const { return rank_; }
    const std::vector<ModTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly component(std::uint32_t pos) const {
        Poly f(ring_);
        std::vector<Term> ts;
        for (const auto& t : terms_)
            if (t.pos == pos) ts.push_back({t.mon, t.coeff});
        Poly::sort_terms(ts);
        return Poly::from_sorted_terms(ring_, std::move(ts));
    }

    std::vector<Poly> components() const {
        std::vector<Poly> out;
        out.reserve(rank_);
        for (std::uint32_t i = 0; i < rank_; ++i) out.push_back(component(i));
        return out;
    }

    const ModTerm& leading() const {
        if (terms_.empty()) throw std::domain_error("modvec: zero vector");
        return terms_.front();
    }

    bool single_position() const {
        for (const auto& t : terms_)
            if (t.pos != terms_.front().pos) return false;
        return true;
    }

    bool operator==(const ModVec& o) const {
        if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].pos != o.terms_[i].pos ||
                terms_[i].coeff != o.terms_[i].coeff ||
                terms_[i].mon != o.terms_[i].mon)
                return false;
        return true;
    }
    bool operator!=(const ModVec& o) const { return !(*this == o); }

    ModVec operator-() const {
        ModVec r(ring_, rank_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.pos, t.mon, ring_.neg(t.coeff)});
        return r;
    }

    ModVec operator+(const ModVec& o) const {
        check_compat(o);
        ModVec r(ring_, rank_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = module_compare(terms_[i], o.terms_[j]);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                std::uint32_t s = ring_.add(terms_[i].coeff, o.terms_[j].coeff);
                if (s) r.terms_.push_back({terms_[i].pos, terms_[i].mon, s});
                ++i, ++j;
            }
        }
        while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
        while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
        return r;
    }

    ModVec operator-(const ModVec& o) const { return *this + (-o); }

    ModVec mul_term(const Monomial& m, std::uint32_t c) const {
        ModVec r(ring_, rank_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::uint32_t s = ring_.mul(t.coeff, c);
            if (s) r.terms_.push_back({t.pos, t.mon.mul(m), s});
        }
        return r;
    }

    ModVec mul_poly(const Poly& f) const {
        ModVec acc(ring_, rank_);
        for (const auto& t : f.terms()) acc = acc + mul_term(t.mon, t.coeff);
        return acc;
    }

    ModVec scaled(std::uint32_t c) const {
        return mul_term(Monomial(ring_.nvars()), c);
    }

private:
    void check_compat(const ModVec& o) const {
        require_same_ring(ring_, o.ring_, "module op");
        if (rank_ != o.rank_)
            throw std::invalid_argument("module op: rank mismatch");
    }
    void sort() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const ModTerm& a, const ModTerm& b) {
                      return module_compare(a, b) > 0;
                  });
        // merge duplicates
        std::vector<ModTerm> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!out.empty() && out.back().pos == t.pos &&
                out.back().mon == t.mon) {
                out.back().coeff = ring_.add(out.back().coeff, t.coeff);
            } else {
                out.push_back(t);
            }
        }
        terms_.clear();
        for (auto& t : out)
            if (t.coeff) terms_.push_back(std::move(t));
    }

    Ring ring_;
    std::uint32_t rank_ = 0;
    std::vector<ModTerm> terms_;
};

struct ModuleBasis {
    Ring ring;
    std::uint32_t rank = 0;
    std::vector<ModVec> basis;
    std::vector<ModVec> original;
    std::vector<std::vector<Poly>> cofactors; // over original, when tracked
    bool tracked = false;
};

struct ModuleDivision {
    ModVec remainder;
    std::vector<Poly> quotients;
};

struct ModuleMembershipCertificate {
    bool member = false;
    std::vector<Poly> coords;
    std::vector<ModVec> generators;
    ModVec normal_form;
    std::vector<ModVec> reduced_basis;

    bool replay(const ModVec& target) const {
        if (member) {
            ModVec acc(target.ring(), target.rank());
            for (std::size_t i = 0; i < coords.size(); ++i)
                acc = acc + generators[i].mul_poly(coords[i]);
            return acc == target;
        }
        return !normal_form.is_zero();
    }
};

namespace detail {

inline bool mod_lead_divides(const ModTerm& a, const ModTerm& b) {
    return a.pos == b.pos && a.mon.divides(b.mon);
}

} // namespace detail

inline ModuleDivision module_divide(const ModVec& v,
                                    const std::vector<ModVec>& divisors) {
    const Ring& ring = v.ring();
    ModVec h = v;
    ModVec rem(ring, v.rank());
    std::vector<Poly> q(divisors.size(), Poly::zero(ring));
    while (!h.is_zero()) {
        ModTerm lead = h.leading();
        bool reduced = false;
        for (std::size_t j = 0; j < divisors.size(); ++j) {
            const ModTerm& dl = divisors[j].leading();
            if (!detail::mod_lead_divides(dl, lead)) continue;
            Monomial u = dl.mon.divide_into(lead.mon);
            std::uint32_t c = ring.mul(lead.coeff, ring.inv(dl.coeff));
            h = h - divisors[j].mul_term(u, c);
            q[j] = q[j] + Poly::term(ring, u, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            ModVec lt(ring, v.rank());
            lt = ModVec::unit(ring, v.rank(), lead.pos,
                              Poly::term(ring, lead.mon, lead.coeff));
            rem = rem + lt;
            h = h - lt;
        }
    }
    return {std::move(rem), std::move(q)};
}

/// Buchberger for submodules of a free module.  S-pairs only form between
/// vectors with the same leading position; the coprimality shortcut is
/// applied only when both vectors live in a single position, where the
/// ideal-case argument carries over.
inline ModuleBasis module_buchberger(const std::vector<ModVec>& gens,
                                     bool track = false) {
    if (gens.empty())
        throw std::invalid_argument("module_buchberger: no generators");
    const Ring& ring = gens[0].ring();
    if (ring.k() != 1)
        throw std::domain_error("module_buchberger: only over F_p");
    std::uint32_t rank = gens[0].rank();
    for (const auto& g : gens)
        if (g.rank() != rank || g.ring() != ring)
            throw std::invalid_argument("module_buchberger: rank mismatch");

    struct Row {
        ModVec f;
        ModTerm lead;
        std::uint64_t sugar;
        bool single;
        std::vector<Poly> cof;
    };
    std::vector<Row> rows;
    auto add_row = [&](ModVec f, std::uint64_t sugar, std::vector<Poly> cof) {
        std::uint32_t lc = f.leading().coeff;
        if (lc != 1) {
            std::uint32_t inv = ring.inv(lc);
            f = f.scaled(inv);
            for (auto& c : cof) c = c.scaled(inv);
        }
        ModTerm lead = f.leading();
        bool single = f.single_position();
        rows.push_back({std::move(f), std::move(lead), sugar, single,
                        std::move(cof)});
    };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        std::vector<Poly> cof;
        if (track) {
            cof.assign(gens.size(), Poly::zero(ring));
            cof[i] = Poly::constant(ring, 1);
        }
        std::uint64_t deg = 0;
        for (const auto& t : gens[i].terms())
            deg = std::max(deg, t.mon.degree());
        add_row(gens[i], deg, std::move(cof));
    }

    ModuleBasis out;
    out.ring = ring;
    out.rank = rank;
    out.original = gens;
    out.tracked = track;
    if (rows.empty()) return out;

    struct Pair {
        std::uint64_t sugar;
        Monomial lcm;
        std::size_t i, j;
    };
    MonomialOrder ord;
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
            if (rows[i].lead.pos != rows[j].lead.pos) continue;
            Monomial l = rows[i].lead.mon.lcm(rows[j].lead.mon);
            std::uint64_t sug = std::max(
                rows[i].sugar + l.degree() - rows[i].lead.mon.degree(),
                rows[j].sugar + l.degree() - rows[j].lead.mon.degree());
            pending.push_back({sug, std::move(l), i, j});
            alive.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < rows.size(); ++j) push_pairs_for(j);

    auto pair_done = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return alive.find({a, b}) == alive.end();
    };

    std::vector<ModVec> current;
    current.reserve(rows.size());
    for (const auto& r : rows) current.push_back(r.f);

    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (pair_less(pending[k], pending[best])) best = k;
        Pair pr = pending[best];
        pending.erase(pending.begin() + best);
        alive.erase({pr.i, pr.j});

        if (rows[pr.i].single && rows[pr.j].single &&
            pr.lcm == rows[pr.i].lead.mon.mul(rows[pr.j].lead.mon))
            continue;
        bool chained = false;
        for (std::size_t k = 0; k < rows.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (rows[k].lead.pos == rows[pr.i].lead.pos &&
                rows[k].lead.mon.divides(pr.lcm) && pair_done(pr.i, k) &&
                pair_done(pr.j, k))
                chained = true;
        }
        if (chained) continue;

        Monomial ui = rows[pr.i].lead.mon.divide_into(pr.lcm);
        Monomial uj = rows[pr.j].lead.mon.divide_into(pr.lcm);
        ModVec s = rows[pr.i].f.mul_term(ui, 1) - rows[pr.j].f.mul_term(uj, 1);
        if (s.is_zero()) continue;
        ModuleDivision dr = module_divide(s, current);
        if (dr.remainder.is_zero()) continue;
        std::vector<Poly> cof;
        if (track) {
            cof.assign(gens.size(), Poly::zero(ring));
            for (std::size_t t = 0; t < cof.size(); ++t) {
                cof[t] = rows[pr.i].cof[t].mul_term(ui, 1) -
                         rows[pr.j].cof[t].mul_term(uj, 1);
                for (std::size_t r = 0; r < rows.size(); ++r)
                    if (!dr.quotients[r].is_zero())
                        cof[t] = cof[t] - dr.quotients[r] * rows[r].cof[t];
            }
        }
        add_row(std::move(dr.remainder), pr.sugar, std::move(cof));
        current.push_back(rows.back().f);
        push_pairs_for(rows.size() - 1);
    }

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < rows.size() && !redundant; ++j) {
            if (i == j) continue;
            if (detail::mod_lead_divides(rows[j].lead, rows[i].lead) &&
                (rows[j].lead.mon != rows[i].lead.mon || j < i))
                redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
        return module_compare(rows[a].lead, rows[b].lead) < 0;
    });

    std::vector<ModVec> minimal;
    std::vector<std::vector<Poly>> mincof;
    minimal.reserve(keep.size());
    for (std::size_t k : keep) {
        minimal.push_back(rows[k].f);
        if (track) mincof.push_back(rows[k].cof);
    }
    for (std::size_t a = 0; a < keep.size(); ++a) {
        std::vector<ModVec> others;
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
        ModuleDivision dr = module_divide(minimal[a], others);
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

inline ModVec module_normal_form(const ModVec& v, const ModuleBasis& mb) {
    if (mb.basis.empty()) return v;
    return module_divide(v, mb.basis).remainder;
}

inline std::pair<bool, ModuleMembershipCertificate>
module_member(const ModVec& v, const ModuleBasis& mb) {
    ModuleMembershipCertificate cert;
    cert.generators = mb.original;
    cert.reduced_basis = mb.basis;
    if (mb.basis.empty()) {
        cert.member = v.is_zero();
        cert.normal_form = v;
        cert.coords.assign(mb.original.size(), Poly::zero(v.ring()));
        return {cert.member, cert};
    }
    ModuleDivision dr = module_divide(v, mb.basis);
    cert.normal_form = dr.remainder;
    cert.member = dr.remainder.is_zero();
    if (cert.member) {
        if (!mb.tracked)
            throw std::logic_error(
                "module_member: certificate needs a tracked basis");
        cert.coords.assign(mb.original.size(), Poly::zero(v.ring()));
        for (std::size_t b = 0; b < mb.basis.size(); ++b)
            for (std::size_t t = 0; t < mb.original.size(); ++t)
                if (!dr.quotients[b].is_zero())
                    cert.coords[t] =
                        cert.coords[t] + dr.quotients[b] * mb.cofactors[b][t];
    }
    return {cert.member, cert};
}

inline std::pair<bool, ModuleMembershipCertificate>
module_member(const ModVec& v, const std::vector<ModVec>& gens) {
    return module_member(v, module_buchberger(gens, /*track=*/true));
}

} // namespace charp

#endif
