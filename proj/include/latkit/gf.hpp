// Arithmetic in the small Galois fields GF(q), q in {2,3,4,5,7,8,9},
// plus vectors over GF(q) encoded as base-q integers and row reduction.
#pragma once

#include <algorithm>
#include <vector>

#include "latkit/errors.hpp"

namespace latkit {

class GF {
public:
    explicit GF(int q) : q_(q) {
        int p = 0, k = 0;
        switch (q) {
        case 2: p = 2; k = 1; break;
        case 3: p = 3; k = 1; break;
        case 5: p = 5; k = 1; break;
        case 7: p = 7; k = 1; break;
        case 4: p = 2; k = 2; break;
        case 8: p = 2; k = 3; break;
        case 9: p = 3; k = 2; break;
        default: fail(Errc::TooLarge, "unsupported field order " + std::to_string(q));
        }
        p_ = p;
        k_ = k;
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        neg_.assign(q, 0);
        inv_.assign(q, 0);
        // Elements are vectors of F_p coefficients, little-endian base-p digits.
        // Extension fields reduce modulo a fixed irreducible polynomial.
        const std::vector<int> modulus = irreducible(q);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = add_digits(a, b);
                mul_[a * q + b] = mul_mod(a, b, modulus);
            }
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                if (add_[a * q + b] == 0) neg_[a] = b;
                if (mul_[a * q + b] == 1) inv_[a] = b;
            }
    }

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const { return inv_[a]; } // a != 0

private:
    static std::vector<int> irreducible(int q) {
        // coefficient lists of x^k + ... , little-endian, over F_p
        switch (q) {
        case 4: return {1, 1, 1};       // x^2 + x + 1 over F_2
        case 8: return {1, 1, 0, 1};    // x^3 + x + 1 over F_2
        case 9: return {1, 0, 1};       // x^2 + 1 over F_3
        default: return {};
        }
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }
    int undigits(const std::vector<int>& d) const {
        int a = 0;
        for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    }
    int add_digits(int a, int b) const {
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
        return undigits(da);
    }
    int mul_mod(int a, int b, const std::vector<int>& modulus) const {
        auto da = digits(a), db = digits(b);
        std::vector<int> prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // reduce by modulus (monic of degree k)
        for (int d = static_cast<int>(prod.size()) - 1; d >= k_; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < k_; ++i) prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus[i]) % p_ + p_) % p_;
        }
        prod.resize(k_);
        return undigits(prod);
    }

    int q_, p_, k_;
    std::vector<int> add_, mul_, neg_, inv_;
};

// --- vectors over GF(q), encoded as base-q integers of fixed dimension ---

inline int vec_encode(const GF& gf, const std::vector<int>& v) {
    int code = 0;
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) code = code * gf.q() + v[i];
    return code;
}

inline std::vector<int> vec_decode(const GF& gf, int code, int dim) {
    std::vector<int> v(dim);
    for (int i = 0; i < dim; ++i) {
        v[i] = code % gf.q();
        code /= gf.q();
    }
    return v;
}

inline std::vector<int> vec_add(const GF& gf, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = gf.add(a[i], b[i]);
    return r;
}

inline std::vector<int> vec_scale(const GF& gf, int c, const std::vector<int>& a) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = gf.mul(c, a[i]);
    return r;
}

// Reduced row echelon form; returns the nonzero rows (canonical basis of the row space).
inline std::vector<std::vector<int>> rref(const GF& gf, std::vector<std::vector<int>> rows) {
    if (rows.empty()) return {};
    const int dim = static_cast<int>(rows[0].size());
    int r = 0;
    for (int col = 0; col < dim && r < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        const int s = gf.inv(rows[r][col]);
        rows[r] = vec_scale(gf, s, rows[r]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            rows[i] = vec_add(gf, rows[i], vec_scale(gf, gf.neg(rows[i][col]), rows[r]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// All vectors (codes) of the span of the given basis rows.
inline std::vector<int> span_members(const GF& gf, const std::vector<std::vector<int>>& basis, int dim) {
    std::vector<int> out = {0};
    std::vector<int> cur(dim, 0);
    const int k = static_cast<int>(basis.size());
    // iterate over all coefficient tuples
    std::vector<int> coeff(k, 0);
    if (k == 0) return out;
    out.clear();
    while (true) {
        std::fill(cur.begin(), cur.end(), 0);
        for (int i = 0; i < k; ++i)
            if (coeff[i] != 0) cur = vec_add(gf, cur, vec_scale(gf, coeff[i], basis[i]));
        out.push_back(vec_encode(gf, cur));
        int i = 0;
        while (i < k && ++coeff[i] == gf.q()) coeff[i++] = 0;
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace latkit
