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

#ifndef CHARP_LINALG_HPP
#define CHARP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace charp {

/// Incremental row echelon over F_p.  Rows are normalized to pivot 1 and
/// fully reduced against each other, so reduce() is a canonical form.
class FpEchelon {
public:
    explicit FpEchelon(std::uint32_t p, std::size_t ncols)
        : p_(p), ncols_(ncols), pivot_of_col_(ncols, -1) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

    /// Reduces v in place against the current rows.
    void reduce(std::vector<std::uint32_t>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::uint32_t c = v[pivots_[r]];
            if (c) axpy(v, rows_[r], p_ - c);
        }
    }

    /// Inserts v's residue as a new row when independent; returns whether
    /// the rank grew.
    bool insert(std::vector<std::uint32_t> v) {
        reduce(v);
        std::size_t piv = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (v[j]) { piv = j; break; }
        if (piv == ncols_) return false;
        std::uint32_t inv = inv_mod(v[piv], p_);
        for (auto& x : v) x = static_cast<std::uint32_t>(std::uint64_t(x) * inv % p_);
        // keep previous rows reduced against the newcomer
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::uint32_t c = rows_[r][piv];
            if (c) axpy(rows_[r], v, p_ - c);
        }
        pivot_of_col_[piv] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    bool contains(std::vector<std::uint32_t> v) const {
        reduce(v);
        for (auto x : v)
            if (x) return false;
        return true;
    }

    static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
        std::uint64_t r = 1, b = a % p;
        std::uint32_t e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }

private:
    void axpy(std::vector<std::uint32_t>& dst,
              const std::vector<std::uint32_t>& src, std::uint32_t c) const {
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (!src[j]) continue;
            dst[j] = static_cast<std::uint32_t>(
                (dst[j] + std::uint64_t(src[j]) * c) % p_);
        }
    }

    std::uint32_t p_;
    std::size_t ncols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_of_col_;
};

/// Row reduction over the chain ring Z/p^2.  Each column owns at most one
/// row, with pivot either a unit (normalized to 1) or exactly p.  This is
/// enough to decide membership in the Z/p^2-span of the inserted rows.
class Zp2Echelon {
public:
    Zp2Echelon(std::uint32_t p, std::size_t ncols)
        : p_(p), m_(p * p), ncols_(ncols), unit_row_(ncols, -1),
          p_row_(ncols, -1) {}

    void insert(std::vector<std::uint32_t> v) {
        for (std::size_t j = 0; j < ncols_; ++j) {
            std::uint32_t c = v[j];
            if (c == 0) continue;
            if (unit_row_[j] >= 0) {
                subtract(v, rows_[unit_row_[j]], c);
                continue;
            }
            if (c % p_ == 0) {
                if (p_row_[j] >= 0) {
                    subtract(v, rows_[p_row_[j]], c / p_);
                    continue;
                }
                std::uint32_t u = (c / p_) % p_; // unit part of c = p*u
                scale(v, unit_inverse(u));
                std::vector<std::uint32_t> pv(v);
                scale(pv, p_); // keep the span closed under p * row
                p_row_[j] = static_cast<long>(rows_.size());
                rows_.push_back(std::move(v));
                insert(std::move(pv));
                return;
            }
            scale(v, unit_inverse(c));
            long displaced = p_row_[j];
            p_row_[j] = -1;
            unit_row_[j] = static_cast<long>(rows_.size());
            rows_.push_back(std::move(v));
            if (displaced >= 0) {
                std::vector<std::uint32_t> re = rows_[displaced];
                rows_[displaced].assign(ncols_, 0);
                insert(std::move(re));
            }
            return;
        }
    }

    /// Residue of v modulo the span; zero residue means membership.
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
        for (std::size_t j = 0; j < ncols_; ++j) {
            std::uint32_t c = v[j];
            if (c == 0) continue;
            if (unit_row_[j] >= 0) {
                subtract(v, rows_[unit_row_[j]], c);
            } else if (p_row_[j] >= 0 && c % p_ == 0) {
                subtract(v, rows_[p_row_[j]], c / p_);
            }
        }
        return v;
    }

    bool contains(std::vector<std::uint32_t> v) const {
        for (auto x : reduce(std::move(v)))
            if (x) return false;
        return true;
    }

private:
    std::uint32_t unit_inverse(std::uint32_t a) const {
        // unit group of Z/p^2 has order p(p-1)
        std::uint64_t r = 1, b = a % m_;
        std::uint32_t e = p_ * (p_ - 1) - 1;
        while (e) {
            if (e & 1) r = r * b % m_;
            b = b * b % m_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }
    void subtract(std::vector<std::uint32_t>& dst,
                  const std::vector<std::uint32_t>& src,
                  std::uint32_t c) const {
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (!src[j]) continue;
            std::uint64_t s = std::uint64_t(src[j]) * c % m_;
            dst[j] = static_cast<std::uint32_t>((dst[j] + m_ - s) % m_);
        }
    }
    void scale(std::vector<std::uint32_t>& v, std::uint32_t c) const {
        for (auto& x : v)
            x = static_cast<std::uint32_t>(std::uint64_t(x) * c % m_);
    }

    std::uint32_t p_, m_;
    std::size_t ncols_;
    std::vector<long> unit_row_, p_row_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

/// Solves A x = b over F_p by Gaussian elimination on the augmented
/// matrix.  Free variables are set to 0, so the answer is deterministic.
/// Returns nullopt when the system is inconsistent.
inline std::optional<std::vector<std::uint32_t>>
solve_linear_system(std::uint32_t p,
                    std::vector<std::vector<std::uint32_t>> a,
                    std::vector<std::uint32_t> b) {
    const std::size_t nrows = a.size();
    const std::size_t ncols = nrows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = nrows;
        for (std::size_t r = row; r < nrows; ++r)
            if (a[r][col]) { sel = r; break; }
        if (sel == nrows) continue;
        std::swap(a[sel], a[row]);
        std::swap(b[sel], b[row]);
        std::uint32_t inv = FpEchelon::inv_mod(a[row][col], p);
        for (auto& x : a[row])
            x = static_cast<std::uint32_t>(std::uint64_t(x) * inv % p);
        b[row] = static_cast<std::uint32_t>(std::uint64_t(b[row]) * inv % p);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || !a[r][col]) continue;
            std::uint32_t c = p - a[r][col];
            for (std::size_t j = col; j < ncols; ++j) {
                if (!a[row][j]) continue;
                a[r][j] = static_cast<std::uint32_t>(
                    (a[r][j] + std::uint64_t(a[row][j]) * c) % p);
            }
            b[r] = static_cast<std::uint32_t>((b[r] + std::uint64_t(b[row]) * c) % p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < nrows; ++r)
        if (b[r]) return std::nullopt;
    std::vector<std::uint32_t> x(ncols, 0);
    for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = b[r];
    return x;
}

} // namespace charp

#endif
