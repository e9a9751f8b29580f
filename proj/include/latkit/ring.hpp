// Finite (not necessarily unital) rings, von Neumann regularity, idempotents,
// principal right ideals and the lattice they form, ring Banaschewski
// functions, corner rings, and the induced lattice maps.
//
// Two backends share one element interface: dense tables (orders <= 256, from
// JSON or constructors) and structured matrix rings M_n(F_q) whose elements
// are base-q encodings of the entry matrix with arithmetic on demand.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "latkit/banaschewski.hpp"
#include "latkit/gf.hpp"
#include "latkit/lattice.hpp"
#include "latkit/subspace.hpp"

namespace latkit {

class FiniteRing {
public:
    static FiniteRing from_tables(int m, std::vector<int> add, std::vector<int> mul, int one = -1) {
        require(m >= 1 && m <= 256, Errc::TooLarge, "table rings are capped at order 256");
        require(static_cast<int>(add.size()) == m * m && static_cast<int>(mul.size()) == m * m,
                Errc::MalformedInput, "table size mismatch");
        FiniteRing R;
        R.m_ = m;
        R.add_ = std::move(add);
        R.mul_ = std::move(mul);
        R.one_ = one;
        R.validate_tables();
        return R;
    }

    static FiniteRing matrix_ring(int q, int n) {
        GF gf(q);
        long long size = 1;
        for (int i = 0; i < n * n; ++i) {
            size *= q;
            require(size <= (1 << 20), Errc::TooLarge, "matrix ring exceeds the element cap");
        }
        FiniteRing R;
        R.structured_ = true;
        R.gf_ = gf;
        R.dim_ = n;
        R.m_ = static_cast<int>(size);
        R.zero_ = 0;
        std::vector<int> id(n * n, 0);
        for (int i = 0; i < n; ++i) id[i * n + i] = 1;
        R.one_ = R.encode(id);
        return R;
    }

    static FiniteRing field(int q) { return matrix_ring(q, 1); }

    static FiniteRing cyclic(int n) {
        std::vector<int> add(n * n), mul(n * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                add[a * n + b] = (a + b) % n;
                mul[a * n + b] = (a * b) % n;
            }
        return from_tables(n, std::move(add), std::move(mul), n == 1 ? 0 : 1);
    }

    static FiniteRing product(const FiniteRing& A, const FiniteRing& B) {
        const int m = A.size() * B.size();
        require(m <= 256, Errc::TooLarge, "product ring exceeds the table cap");
        std::vector<int> add(m * m), mul(m * m);
        auto pack = [&](int a, int b) { return a * B.size() + b; };
        for (int a0 = 0; a0 < A.size(); ++a0)
            for (int b0 = 0; b0 < B.size(); ++b0)
                for (int a1 = 0; a1 < A.size(); ++a1)
                    for (int b1 = 0; b1 < B.size(); ++b1) {
                        add[pack(a0, b0) * m + pack(a1, b1)] = pack(A.add(a0, a1), B.add(b0, b1));
                        mul[pack(a0, b0) * m + pack(a1, b1)] = pack(A.mul(a0, a1), B.mul(b0, b1));
                    }
        const int one = (A.unital() && B.unital()) ? pack(A.one(), B.one()) : -1;
        return from_tables(m, std::move(add), std::move(mul), one);
    }

    int size() const { return m_; }
    int zero() const { return zero_; }
    bool unital() const { return one_ >= 0; }
    int one() const {
        require(unital(), Errc::PreconditionFailed, "ring has no declared unit");
        return one_;
    }
    bool structured() const { return structured_; }
    int mat_dim() const { return dim_; }
    const GF& gf() const { return *gf_; }

    int add(int a, int b) const {
        if (!structured_) return add_[a * m_ + b];
        auto x = decode(a), y = decode(b);
        for (size_t i = 0; i < x.size(); ++i) x[i] = gf_->add(x[i], y[i]);
        return encode(x);
    }
    int mul(int a, int b) const {
        if (!structured_) return mul_[a * m_ + b];
        const auto x = decode(a), y = decode(b);
        std::vector<int> z(dim_ * dim_, 0);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const int xi = x[i * dim_ + k];
                if (xi == 0) continue;
                for (int j = 0; j < dim_; ++j) z[i * dim_ + j] = gf_->add(z[i * dim_ + j], gf_->mul(xi, y[k * dim_ + j]));
            }
        return encode(z);
    }
    int neg(int a) const {
        if (!structured_) return neg_[a];
        auto x = decode(a);
        for (int& v : x) v = gf_->neg(v);
        return encode(x);
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    bool is_idempotent(int e) const { return mul(e, e) == e; }

    std::vector<int> decode(int code) const {
        return vec_decode(*gf_, code, dim_ * dim_);
    }
    int encode(const std::vector<int>& entries) const {
        return vec_encode(*gf_, entries);
    }

private:
    void validate_tables() {
        zero_ = -1;
        for (int e = 0; e < m_ && zero_ < 0; ++e) {
            bool ok = true;
            for (int a = 0; a < m_ && ok; ++a) ok = add_[e * m_ + a] == a && add_[a * m_ + e] == a;
            if (ok) zero_ = e;
        }
        require(zero_ >= 0, Errc::MalformedInput, "no additive identity");
        neg_.assign(m_, -1);
        for (int a = 0; a < m_; ++a)
            for (int b = 0; b < m_; ++b)
                if (add_[a * m_ + b] == zero_) neg_[a] = b;
        for (int a = 0; a < m_; ++a) {
            require(neg_[a] >= 0, Errc::MalformedInput, "missing additive inverse", {a});
            for (int b = 0; b < m_; ++b) {
                require(add_[a * m_ + b] == add_[b * m_ + a], Errc::MalformedInput, "addition not commutative", {a, b});
                for (int c = 0; c < m_; ++c) {
                    require(add_[add_[a * m_ + b] * m_ + c] == add_[a * m_ + add_[b * m_ + c]],
                            Errc::MalformedInput, "addition not associative", {a, b, c});
                    require(mul_[mul_[a * m_ + b] * m_ + c] == mul_[a * m_ + mul_[b * m_ + c]],
                            Errc::MalformedInput, "multiplication not associative", {a, b, c});
                    require(mul_[a * m_ + add_[b * m_ + c]] == add_[mul_[a * m_ + b] * m_ + mul_[a * m_ + c]],
                            Errc::MalformedInput, "left distributivity fails", {a, b, c});
                    require(mul_[add_[a * m_ + b] * m_ + c] == add_[mul_[a * m_ + c] * m_ + mul_[b * m_ + c]],
                            Errc::MalformedInput, "right distributivity fails", {a, b, c});
                }
            }
        }
        if (one_ >= 0)
            for (int a = 0; a < m_; ++a)
                require(mul_[one_ * m_ + a] == a && mul_[a * m_ + one_] == a, Errc::MalformedInput,
                        "declared unit is not an identity", {a});
    }

    int m_ = 0;
    std::vector<int> add_, mul_, neg_;
    int zero_ = 0, one_ = -1;
    bool structured_ = false;
    std::optional<GF> gf_;
    int dim_ = 0;
};

// Two-sided identity if one exists (finite regular rings always have one).
inline std::optional<int> find_unit(const FiniteRing& R) {
    if (R.unital()) return R.one();
    for (int e = 0; e < R.size(); ++e) {
        bool ok = true;
        for (int a = 0; a < R.size() && ok; ++a) ok = R.mul(e, a) == a && R.mul(a, e) == a;
        if (ok) return e;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// regularity
// ---------------------------------------------------------------------------

namespace detail {

// A generalized inverse of a matrix over GF(q): factor E*M*C = diag(I_r, 0),
// then y = C * diag(I_r, 0) * E satisfies M y M = M.
inline std::vector<int> mat_ginverse(const GF& gf, const std::vector<int>& M, int n) {
    std::vector<int> A = M;
    std::vector<int> E(n * n, 0), C(n * n, 0);
    for (int i = 0; i < n; ++i) E[i * n + i] = C[i * n + i] = 1;
    auto addrow = [&](std::vector<int>& T, int dst, int src, int c) { // row_dst += c*row_src
        for (int j = 0; j < n; ++j) T[dst * n + j] = gf.add(T[dst * n + j], gf.mul(c, T[src * n + j]));
    };
    auto scalerow = [&](std::vector<int>& T, int r, int c) {
        for (int j = 0; j < n; ++j) T[r * n + j] = gf.mul(c, T[r * n + j]);
    };
    auto swaprow = [&](std::vector<int>& T, int a, int b) {
        for (int j = 0; j < n; ++j) std::swap(T[a * n + j], T[b * n + j]);
    };
    // row phase: E*M = A in row echelon form with unit pivots
    int r = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && r < n; ++col) {
        int p = -1;
        for (int i = r; i < n && p < 0; ++i)
            if (A[i * n + col] != 0) p = i;
        if (p < 0) continue;
        if (p != r) {
            swaprow(A, p, r);
            swaprow(E, p, r);
        }
        const int s = gf.inv(A[r * n + col]);
        scalerow(A, r, s);
        scalerow(E, r, s);
        for (int i = 0; i < n; ++i) {
            if (i == r || A[i * n + col] == 0) continue;
            const int c = gf.neg(A[i * n + col]);
            addrow(A, i, r, c);
            addrow(E, i, r, c);
        }
        pivot_col.push_back(col);
        ++r;
    }
    // column phase on A (apply the same column ops to C on the right)
    auto addcol = [&](std::vector<int>& T, int dst, int src, int c) { // col_dst += c*col_src
        for (int i = 0; i < n; ++i) T[i * n + dst] = gf.add(T[i * n + dst], gf.mul(c, T[i * n + src]));
    };
    auto swapcol = [&](std::vector<int>& T, int a, int b) {
        for (int i = 0; i < n; ++i) std::swap(T[i * n + a], T[i * n + b]);
    };
    for (int i = 0; i < r; ++i) {
        const int pc = pivot_col[i];
        for (int j = 0; j < n; ++j) {
            if (j == pc || A[i * n + j] == 0) continue;
            const int c = gf.neg(A[i * n + j]);
            addcol(A, j, pc, c);
            addcol(C, j, pc, c);
        }
    }
    for (int i = 0; i < r; ++i) {
        if (pivot_col[i] != i) {
            swapcol(A, pivot_col[i], i);
            swapcol(C, pivot_col[i], i);
            for (int k = i + 1; k < r; ++k)
                if (pivot_col[k] == i) pivot_col[k] = pivot_col[i];
            pivot_col[i] = i;
        }
    }
    // y = C * diag(I_r, 0) * E
    std::vector<int> J(n * n, 0);
    for (int i = 0; i < r; ++i) J[i * n + i] = 1;
    auto matmul = [&](const std::vector<int>& X, const std::vector<int>& Y) {
        std::vector<int> Z(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (X[i * n + k] == 0) continue;
                for (int j = 0; j < n; ++j)
                    Z[i * n + j] = gf.add(Z[i * n + j], gf.mul(X[i * n + k], Y[k * n + j]));
            }
        return Z;
    };
    return matmul(C, matmul(J, E));
}

} // namespace detail

struct RegularityResult {
    bool regular = false;
    std::vector<int> quasi_inverse; // per element; -1 where none exists
    int witness = -1;               // first element with no quasi-inverse
};

// For each x a y with x y x = x: least index for rings up to 4096 elements,
// a computed generalized inverse for larger structured rings.
inline RegularityResult is_regular(const FiniteRing& R) {
    RegularityResult res;
    res.quasi_inverse.assign(R.size(), -1);
    res.regular = true;
    if (R.size() <= 4096 || !R.structured()) {
        for (int x = 0; x < R.size(); ++x) {
            for (int y = 0; y < R.size(); ++y)
                if (R.mul(R.mul(x, y), x) == x) {
                    res.quasi_inverse[x] = y;
                    break;
                }
            if (res.quasi_inverse[x] < 0 && res.regular) {
                res.regular = false;
                res.witness = x;
            }
        }
        return res;
    }
    const int n = R.mat_dim();
    for (int x = 0; x < R.size(); ++x) {
        const int y = R.encode(detail::mat_ginverse(R.gf(), R.decode(x), n));
        require(R.mul(R.mul(x, y), x) == x, Errc::Internal, "generalized inverse failed", {x});
        res.quasi_inverse[x] = y;
    }
    return res;
}

// ---------------------------------------------------------------------------
// idempotents
// ---------------------------------------------------------------------------

struct IdempotentPoset {
    std::vector<int> idem;  // sorted element codes
    std::vector<uint8_t> le; // k*k matrix of the relation a = ab = ba
    int k() const { return static_cast<int>(idem.size()); }
    bool leq(int i, int j) const { return le[i * idem.size() + j] != 0; }
    int index_of(int code) const {
        const auto it = std::lower_bound(idem.begin(), idem.end(), code);
        require(it != idem.end() && *it == code, Errc::Internal, "not an enumerated idempotent", {code});
        return static_cast<int>(it - idem.begin());
    }
};

namespace detail {

inline std::vector<int> small_matmul(const GF& gf, int n, const std::vector<int>& X, const std::vector<int>& Y) {
    std::vector<int> Z(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (X[i * n + k] == 0) continue;
            for (int j = 0; j < n; ++j) Z[i * n + j] = gf.add(Z[i * n + j], gf.mul(X[i * n + k], Y[k * n + j]));
        }
    return Z;
}

// Projector onto span(bu) along span(bw): T diag(I,0) T^{-1} with the two
// bases as columns of T.
inline std::vector<int> projector(const GF& gf, int n, const std::vector<std::vector<int>>& bu,
                                  const std::vector<std::vector<int>>& bw) {
    std::vector<int> T(n * n, 0);
    for (int c = 0; c < static_cast<int>(bu.size()); ++c)
        for (int r = 0; r < n; ++r) T[r * n + c] = bu[c][r];
    for (int c = 0; c < static_cast<int>(bw.size()); ++c)
        for (int r = 0; r < n; ++r) T[r * n + (bu.size() + c)] = bw[c][r];
    const auto Tinv = mat_ginverse(gf, T, n); // T is invertible, so this is the inverse
    std::vector<int> D(n * n, 0);
    for (int i = 0; i < static_cast<int>(bu.size()); ++i) D[i * n + i] = 1;
    return small_matmul(gf, n, T, small_matmul(gf, n, D, Tinv));
}

} // namespace detail

inline IdempotentPoset idempotent_poset(const FiniteRing& R) {
    IdempotentPoset P;
    if (!R.structured() || R.size() <= 4096) {
        for (int e = 0; e < R.size(); ++e)
            if (R.is_idempotent(e)) P.idem.push_back(e);
    } else {
        // structured: idempotents are the projectors onto U along W over all
        // complementary subspace pairs (image, kernel)
        const int n = R.mat_dim();
        const auto& gf = R.gf();
        const auto S = subspace_lattice(gf.q(), n, 1 << 20);
        for (int u = 0; u < S.lat.n(); ++u)
            for (int w = 0; w < S.lat.n(); ++w) {
                if (S.lat.meet(u, w) != S.lat.bottom() || S.lat.join(u, w) != S.lat.top()) continue;
                P.idem.push_back(R.encode(detail::projector(gf, n, S.basis[u], S.basis[w])));
            }
        std::sort(P.idem.begin(), P.idem.end());
        P.idem.erase(std::unique(P.idem.begin(), P.idem.end()), P.idem.end());
        for (int e : P.idem) require(R.is_idempotent(e), Errc::Internal, "projector is not idempotent", {e});
    }
    const int k = static_cast<int>(P.idem.size());
    P.le.assign(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const int a = P.idem[i], b = P.idem[j];
            const bool tri = R.mul(a, b) == a && R.mul(b, a) == a;
            // agreement of the two characterizations: a in bRb iff a = bab
            const bool sandwich = R.mul(R.mul(b, a), b) == a;
            require(tri == sandwich, Errc::Internal, "idempotent order characterizations disagree", {a, b});
            P.le[i * k + j] = tri;
        }
    return P;
}

// ---------------------------------------------------------------------------
// principal right ideals and the lattice they form
// ---------------------------------------------------------------------------

using RightIdeal = std::vector<int>; // sorted element codes

// An additive generating set: right-multiplication closure under it implies
// closure under all of R once the set is closed under addition.
inline std::vector<int> additive_generators(const FiniteRing& R) {
    if (!R.structured()) {
        std::vector<int> all(R.size());
        for (int i = 0; i < R.size(); ++i) all[i] = i;
        return all;
    }
    std::vector<int> gens; // scaled matrix units
    const int n = R.mat_dim();
    for (int pos = 0; pos < n * n; ++pos)
        for (int c = 1; c < R.gf().q(); ++c) {
            std::vector<int> mat(n * n, 0);
            mat[pos] = c;
            gens.push_back(R.encode(mat));
        }
    return gens;
}

inline bool validate_right_ideal(const FiniteRing& R, const RightIdeal& J) {
    if (J.empty() || !std::binary_search(J.begin(), J.end(), R.zero())) return false;
    const auto gens = additive_generators(R);
    for (int a : J) {
        for (int b : J)
            if (!std::binary_search(J.begin(), J.end(), R.add(a, b))) return false;
        for (int g : gens)
            if (!std::binary_search(J.begin(), J.end(), R.mul(a, g))) return false;
    }
    return true;
}

namespace detail {

inline RightIdeal pr_ideal_unchecked(const FiniteRing& R, int x) {
    RightIdeal J(R.size());
    for (int r = 0; r < R.size(); ++r) J[r] = R.mul(x, r);
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    return J;
}

} // namespace detail

// xR = {x r : r in R}; requires a regular ring so that x lies in xR.
inline RightIdeal principal_right_ideal(const FiniteRing& R, int x) {
    if (!R.structured() || R.size() <= 4096) {
        const auto reg = is_regular(R);
        require(reg.regular, Errc::NotRegular, "ideal operations need a regular ring", {reg.witness});
    }
    auto J = detail::pr_ideal_unchecked(R, x);
    require(std::binary_search(J.begin(), J.end(), x), Errc::Internal, "x not in xR of a regular ring", {x});
    return J;
}

struct RingLattice {
    FiniteLattice lat;
    std::vector<RightIdeal> ideal; // per lattice element
    std::vector<int> idem_gen;     // deterministic idempotent generator per element
    int index_of(const RightIdeal& J) const {
        const auto it = index_.find(J);
        require(it != index_.end(), Errc::Internal, "unknown principal right ideal");
        return it->second;
    }
    int index_of_element(const FiniteRing& R, int x) const { return index_of(detail::pr_ideal_unchecked(R, x)); }
    std::map<RightIdeal, int> index_;
};

// The inclusion-ordered lattice of all principal right ideals, with the
// element <-> ideal dictionary. Sectional complementation and modularity are
// asserted via the lattice predicates.
inline RingLattice build_L(const FiniteRing& R) {
    RingLattice RL;
    const auto reg = is_regular(R);
    require(reg.regular, Errc::NotRegular, "the principal right ideal lattice needs a regular ring", {reg.witness});
    const auto idems = idempotent_poset(R);

    std::vector<RightIdeal> ideals;
    if (!R.structured() || R.size() <= 4096) {
        std::map<RightIdeal, int> seen;
        for (int x = 0; x < R.size(); ++x) {
            auto J = detail::pr_ideal_unchecked(R, x);
            seen.emplace(std::move(J), 0);
        }
        // the idempotent generators give the same family
        std::map<RightIdeal, int> from_idem;
        for (int e : idems.idem) from_idem.emplace(detail::pr_ideal_unchecked(R, e), 0);
        require(seen.size() == from_idem.size(), Errc::Internal, "idempotents miss a principal ideal");
        for (auto& [J, idx] : seen) ideals.push_back(J);
    } else {
        // structured: xR is the set of matrices whose columns lie in the
        // column space of x, one ideal per subspace of F_q^n
        const int n = R.mat_dim();
        const auto& gf = R.gf();
        const auto S = subspace_lattice(gf.q(), n, 1 << 20);
        for (int u = 0; u < S.lat.n(); ++u) {
            const auto& vecs = S.members[u]; // vector codes of the column space
            RightIdeal J;
            std::vector<int> pick(n, 0);
            while (true) {
                std::vector<int> mat(n * n, 0);
                for (int j = 0; j < n; ++j) {
                    const auto col = vec_decode(gf, vecs[pick[j]], n);
                    for (int i = 0; i < n; ++i) mat[i * n + j] = col[i];
                }
                J.push_back(R.encode(mat));
                int j = 0;
                while (j < n && ++pick[j] == static_cast<int>(vecs.size())) pick[j++] = 0;
                if (j == n) break;
            }
            std::sort(J.begin(), J.end());
            J.erase(std::unique(J.begin(), J.end()), J.end());
            ideals.push_back(std::move(J));
        }
    }
    std::stable_sort(ideals.begin(), ideals.end(), [](const RightIdeal& a, const RightIdeal& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    RL.ideal = ideals;
    for (int i = 0; i < static_cast<int>(ideals.size()); ++i) RL.index_[ideals[i]] = i;

    RL.lat = FiniteLattice::from_leq(static_cast<int>(ideals.size()), [&](int a, int b) {
        return std::includes(RL.ideal[b].begin(), RL.ideal[b].end(), RL.ideal[a].begin(), RL.ideal[a].end());
    });
    require(check_modular(RL.lat).holds, Errc::Internal, "principal right ideal lattice is not modular");
    require(check_sectionally_complemented(RL.lat).holds, Errc::Internal,
            "principal right ideal lattice is not sectionally complemented");

    RL.idem_gen.assign(RL.lat.n(), -1);
    if (!R.structured() || R.size() <= 4096) {
        for (int e : idems.idem) {
            const int i = RL.index_of(detail::pr_ideal_unchecked(R, e));
            if (RL.idem_gen[i] < 0) RL.idem_gen[i] = e;
        }
    } else {
        // projector onto the column space along its least enumerated complement
        const int n = R.mat_dim();
        const auto& gf = R.gf();
        const auto S = subspace_lattice(gf.q(), n, 1 << 20);
        for (int u = 0; u < S.lat.n(); ++u) {
            int w = -1;
            for (int c = 0; c < S.lat.n() && w < 0; ++c)
                if (S.lat.meet(u, c) == S.lat.bottom() && S.lat.join(u, c) == S.lat.top()) w = c;
            const int gen = R.encode(detail::projector(gf, n, S.basis[u], S.basis[w]));
            const int i = RL.index_of(detail::pr_ideal_unchecked(R, gen));
            if (RL.idem_gen[i] < 0) RL.idem_gen[i] = gen;
        }
    }
    for (int i = 0; i < RL.lat.n(); ++i)
        require(RL.idem_gen[i] >= 0, Errc::Internal, "principal ideal without idempotent generator", {i});
    return RL;
}

// ---------------------------------------------------------------------------
// decomposition of an idempotent along a direct sum of right ideals
// ---------------------------------------------------------------------------

struct IdempotentSplit {
    int a = -1, b = -1;
};

// If eR = A (+) B then there is exactly one pair (a, b) in A x B with
// e = a + b; both parts are idempotent, ab = ba = 0, A = aR and B = bR.
inline IdempotentSplit decomp_idempotent(const FiniteRing& R, int e, const RightIdeal& A, const RightIdeal& B) {
    require(R.is_idempotent(e), Errc::PreconditionFailed, "e is not idempotent", {e});
    require(validate_right_ideal(R, A) && validate_right_ideal(R, B), Errc::PreconditionFailed,
            "operands are not right ideals");
    const auto eR = detail::pr_ideal_unchecked(R, e);
    {
        RightIdeal inter;
        std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(inter));
        require(inter == RightIdeal{R.zero()}, Errc::NotADirectSum, "A and B overlap");
        RightIdeal sum;
        for (int a : A)
            for (int b : B) sum.push_back(R.add(a, b));
        std::sort(sum.begin(), sum.end());
        sum.erase(std::unique(sum.begin(), sum.end()), sum.end());
        require(sum == eR, Errc::NotADirectSum, "A + B differs from eR");
    }
    IdempotentSplit out;
    int count = 0;
    for (int a : A) {
        const int b = R.sub(e, a);
        if (std::binary_search(B.begin(), B.end(), b)) {
            out = {a, b};
            ++count;
        }
    }
    require(count == 1, Errc::DecompositionFailed, "decomposition not unique", {count});
    require(R.is_idempotent(out.a) && R.is_idempotent(out.b), Errc::DecompositionFailed, "parts are not idempotent");
    require(R.mul(out.a, out.b) == R.zero() && R.mul(out.b, out.a) == R.zero(), Errc::DecompositionFailed,
            "parts do not annihilate");
    require(detail::pr_ideal_unchecked(R, out.a) == A && detail::pr_ideal_unchecked(R, out.b) == B,
            Errc::DecompositionFailed, "parts fail to generate the summands");
    return out;
}

// ---------------------------------------------------------------------------
// ring Banaschewski functions
// ---------------------------------------------------------------------------

struct RingBan {
    std::map<int, int> f; // element -> idempotent
    std::vector<int> domain() const {
        std::vector<int> d;
        for (const auto& [x, fx] : f) d.push_back(x);
        return d;
    }
};

struct RingBanViolation {
    enum Kind { None, Generates, Order } kind = None;
    int x = -1, y = -1;
    bool ok() const { return kind == None; }
};

// (i) xR = f(x)R and (ii) xR <= yR implies f(x) is dominated by f(y).
inline RingBanViolation verify_ring_ban(const FiniteRing& R, const RingBan& rb) {
    std::map<int, RightIdeal> ideal;
    for (const auto& [x, fx] : rb.f) ideal.emplace(x, detail::pr_ideal_unchecked(R, x));
    for (const auto& [x, fx] : rb.f)
        if (!R.is_idempotent(fx) || detail::pr_ideal_unchecked(R, fx) != ideal.at(x))
            return {RingBanViolation::Generates, x, -1};
    for (const auto& [x, fx] : rb.f)
        for (const auto& [y, fy] : rb.f) {
            const auto& Jx = ideal.at(x);
            const auto& Jy = ideal.at(y);
            if (!std::includes(Jy.begin(), Jy.end(), Jx.begin(), Jx.end())) continue;
            if (R.mul(fx, fy) != fx || R.mul(fy, fx) != fx) return {RingBanViolation::Order, x, y};
        }
    return {};
}

// Lattice-to-ring direction: f(x) is the unique element of xR with
// 1 - f(x) in phi(xR), obtained from the idempotent decomposition of 1.
inline RingBan ring_ban_from_lattice(const FiniteRing& R, const RingLattice& RL, const BanFunction& phi,
                                     const std::vector<int>& X) {
    require(R.unital(), Errc::PreconditionFailed, "needs a unital ring");
    RingBan rb;
    for (int x : X) {
        const int ix = RL.index_of_element(R, x);
        require(phi.defined(ix), Errc::PreconditionFailed, "phi is not defined on xR", {x});
        const auto split = decomp_idempotent(R, R.one(), RL.ideal[ix], RL.ideal[phi(ix)]);
        rb.f[x] = split.a;
    }
    const auto v = verify_ring_ban(R, rb);
    require(v.ok(), Errc::AxiomViolated, "derived ring function fails an axiom", {v.x, v.y});
    return rb;
}

// Ring-to-lattice direction: phi(xR) = (1 - f(x))R.
inline BanFunction lattice_ban_from_ring(const FiniteRing& R, const RingLattice& RL, const RingBan& rb) {
    require(R.unital(), Errc::PreconditionFailed, "needs a unital ring");
    BanFunction phi;
    phi.table.assign(RL.lat.n(), -1);
    for (const auto& [x, fx] : rb.f) {
        const int ix = RL.index_of_element(R, x);
        const int target = RL.index_of_element(R, R.sub(R.one(), fx));
        require(phi.table[ix] == -1 || phi.table[ix] == target, Errc::AxiomViolated,
                "phi not well defined: equal ideals got different complements", {x});
        phi.table[ix] = target;
    }
    const int top = RL.index_of_element(R, R.one());
    for (int ix = 0; ix < RL.lat.n(); ++ix) {
        if (!phi.defined(ix)) continue;
        require(RL.lat.meet(ix, phi(ix)) == RL.lat.bottom() && RL.lat.join(ix, phi(ix)) == top,
                Errc::AxiomViolated, "phi(xR) is not a complement", {ix});
        for (int iy = 0; iy < RL.lat.n(); ++iy)
            if (phi.defined(iy) && RL.lat.leq(ix, iy))
                require(RL.lat.leq(phi(iy), phi(ix)), Errc::AxiomViolated, "phi is not antitone", {ix, iy});
    }
    // round trip reproduces the function on the same domain
    std::vector<int> X;
    for (const auto& [x, fx] : rb.f) X.push_back(x);
    const auto back = ring_ban_from_lattice(R, RL, phi, X);
    for (const auto& [x, fx] : rb.f)
        require(detail::pr_ideal_unchecked(R, back.f.at(x)) == detail::pr_ideal_unchecked(R, fx),
                Errc::AxiomViolated, "round trip changed the generated ideal", {x});
    return phi;
}

inline std::vector<int> eps_from_ring_ban(const FiniteRing& R, const RingBan& rb) {
    require(static_cast<int>(rb.f.size()) == R.size(), Errc::PreconditionFailed, "needs a total function");
    std::vector<int> eps(R.size());
    for (const auto& [x, fx] : rb.f) eps[x] = fx;
    return eps;
}

struct EpsViolation {
    enum Kind { None, Generates, Sandwich } kind = None;
    int x = -1, y = -1;
    bool ok() const { return kind == None; }
};

// xR = eps(x)R and eps(xy) = eps(x) eps(xy) eps(x), for all x, y; no unit is
// required.
inline EpsViolation eps_property_check(const FiniteRing& R, const std::vector<int>& eps) {
    require(static_cast<int>(eps.size()) == R.size(), Errc::MalformedInput, "eps must be total");
    for (int x = 0; x < R.size(); ++x)
        if (!R.is_idempotent(eps[x]) ||
            detail::pr_ideal_unchecked(R, eps[x]) != detail::pr_ideal_unchecked(R, x))
            return {EpsViolation::Generates, x, -1};
    for (int x = 0; x < R.size(); ++x)
        for (int y = 0; y < R.size(); ++y) {
            const int exy = eps[R.mul(x, y)];
            if (R.mul(R.mul(eps[x], exy), eps[x]) != exy) return {EpsViolation::Sandwich, x, y};
        }
    return {};
}

// ---------------------------------------------------------------------------
// corner rings and induced lattice maps
// ---------------------------------------------------------------------------

struct RingHom {
    std::vector<int> map; // source element -> target element
};

inline void validate_hom(const FiniteRing& S, const FiniteRing& T, const RingHom& h) {
    require(static_cast<int>(h.map.size()) == S.size(), Errc::MalformedInput, "hom table size mismatch");
    for (int v : h.map) require(v >= 0 && v < T.size(), Errc::MalformedInput, "hom value out of range");
    for (int a = 0; a < S.size(); ++a)
        for (int b = 0; b < S.size(); ++b) {
            require(h.map[S.add(a, b)] == T.add(h.map[a], h.map[b]), Errc::MalformedInput,
                    "hom does not preserve addition", {a, b});
            require(h.map[S.mul(a, b)] == T.mul(h.map[a], h.map[b]), Errc::MalformedInput,
                    "hom does not preserve multiplication", {a, b});
        }
}

struct CornerRing {
    FiniteRing ring;        // eRe with unit e
    std::vector<int> embed; // corner element -> code in R
    int index_of(int code) const {
        const auto it = std::lower_bound(embed.begin(), embed.end(), code);
        require(it != embed.end() && *it == code, Errc::Internal, "element outside the corner", {code});
        return static_cast<int>(it - embed.begin());
    }
};

// eRe with unit e, together with the inclusion; the principal right ideal
// lattice of the corner is checked to match the ideal below eR.
inline CornerRing corner_ring(const FiniteRing& R, int e, bool check_lattice = true) {
    require(R.is_idempotent(e), Errc::PreconditionFailed, "corner needs an idempotent", {e});
    CornerRing C;
    if (R.unital() && e == R.one()) { // eRe = R
        C.ring = R;
        C.embed.resize(R.size());
        for (int i = 0; i < R.size(); ++i) C.embed[i] = i;
        return C;
    }
    std::vector<int> elems;
    for (int x = 0; x < R.size(); ++x) elems.push_back(R.mul(R.mul(e, x), e));
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const int k = static_cast<int>(elems.size());
    require(k <= 256, Errc::TooLarge, "corner exceeds the table cap");
    auto idx = [&](int code) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), code) - elems.begin());
    };
    std::vector<int> add(k * k), mul(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            add[i * k + j] = idx(R.add(elems[i], elems[j]));
            mul[i * k + j] = idx(R.mul(elems[i], elems[j]));
        }
    C.ring = FiniteRing::from_tables(k, std::move(add), std::move(mul), idx(e));
    C.embed = elems;

    if (check_lattice && is_regular(R).regular) {
        const auto CL = build_L(C.ring);
        const auto RL = build_L(R);
        const int eR = RL.index_of_element(R, e);
        std::vector<int> below;
        for (int i = 0; i < RL.lat.n(); ++i)
            if (RL.lat.leq(i, eR)) below.push_back(i);
        std::vector<int> image;
        for (int j = 0; j < CL.lat.n(); ++j) {
            const int gen = C.embed[CL.idem_gen[j]];
            const int i = RL.index_of(detail::pr_ideal_unchecked(R, gen)); // JR = (gen)R
            image.push_back(i);
            // inverse direction: J = JR n eRe
            RightIdeal back;
            for (int code : RL.ideal[i])
                if (std::binary_search(C.embed.begin(), C.embed.end(), code)) back.push_back(C.index_of(code));
            require(back == CL.ideal[j], Errc::Internal, "corner ideal round trip failed", {j});
        }
        std::sort(image.begin(), image.end());
        require(image == below, Errc::Internal, "corner lattice does not match the ideal below eR");
    }
    return C;
}

// The induced 0-lattice map xR -> f(x)T of a ring homomorphism, checked to be
// well defined and to preserve bottom, joins and meets.
inline std::vector<int> L_hom(const FiniteRing& S, const FiniteRing& T, const RingHom& h, const RingLattice& LS,
                              const RingLattice& LT) {
    std::vector<int> map(LS.lat.n(), -1);
    for (int x = 0; x < S.size(); ++x) {
        const int ix = LS.index_of_element(S, x);
        const int iy = LT.index_of_element(T, h.map[x]);
        if (map[ix] >= 0)
            require(map[ix] == iy, Errc::NotWellDefined, "xR = yR but f(x)T != f(y)T", {x});
        map[ix] = iy;
    }
    require(map[LS.lat.bottom()] == LT.lat.bottom(), Errc::NotWellDefined, "zero not preserved");
    for (int a = 0; a < LS.lat.n(); ++a)
        for (int b = 0; b < LS.lat.n(); ++b) {
            require(map[LS.lat.join(a, b)] == LT.lat.join(map[a], map[b]), Errc::NotWellDefined,
                    "join not preserved", {a, b});
            require(map[LS.lat.meet(a, b)] == LT.lat.meet(map[a], map[b]), Errc::NotWellDefined,
                    "meet not preserved", {a, b});
        }
    return map;
}

} // namespace latkit
