// Band-limited Fourier cochain complexes on tori: bases of trigonometric
// monomial forms with |k|_inf <= N, exact matrices of the differentials, and
// cohomology dimensions by exact rank.
#pragma once

#include "pairdiff/dolbeault.hpp"
#include "pairdiff/text.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <tuple>

namespace pairdiff {

/// One slot of a band space: forms of a fixed degree (and optionally
/// bidegree) on a periodic chart with frequencies bounded by max_freq.
struct SlotSpec {
    Chart chart;
    int degree = 0;
    int max_freq = 0;
    std::optional<Bidegree> bidegree;
};

using Slots = std::vector<Form>;
using SlotOperator = std::function<Slots(const Slots&)>;

class BandBasis {
public:
    BandBasis() = default;

    explicit BandBasis(std::vector<SlotSpec> space) : space_(std::move(space)) {
        for (int s = 0; s < static_cast<int>(space_.size()); ++s) {
            const SlotSpec& spec = space_[s];
            if (!spec.chart.is_periodic()) throw ChartMismatch("BandBasis: periodic chart required");
            if (spec.degree < 0 || spec.degree > spec.chart.dim()) continue;
            const auto modes = enumerate_modes(spec.chart.dim(), spec.max_freq);
            for (Mask I : masks_of_size(spec.chart.dim(), spec.degree)) {
                if (spec.bidegree && !(bidegree_of(I, spec.chart.n()) == *spec.bidegree)) continue;
                for (const auto& k : modes) {
                    index_.emplace(Key{s, I, k}, static_cast<int>(keys_.size()));
                    keys_.push_back(Key{s, I, k});
                }
            }
        }
    }

    const std::vector<SlotSpec>& space() const { return space_; }
    int size() const { return static_cast<int>(keys_.size()); }

    Slots zero() const {
        Slots out;
        for (const auto& spec : space_) out.emplace_back(spec.chart, spec.degree);
        return out;
    }

    Slots element(int j) const {
        const Key& key = keys_.at(j);
        Slots out = zero();
        out[key.slot].add(key.mask, ScalarExpr::exponential(space_[key.slot].chart, key.k));
        return out;
    }

    /// Coordinates of a slot tuple; throws UnsupportedScenario when a term
    /// leaves the band.
    SparseMatrix::Column encode(const Slots& v) const {
        if (v.size() != space_.size()) throw std::invalid_argument("BandBasis::encode: slot count mismatch");
        SparseMatrix::Column out;
        for (int s = 0; s < static_cast<int>(v.size()); ++s) {
            require_same_chart(v[s].chart(), space_[s].chart, "BandBasis::encode");
            for (const auto& [I, f] : v[s].components()) {
                for (const auto& [m, c] : f.terms()) {
                    auto it = index_.find(Key{s, I, m.frequencies});
                    if (it == index_.end())
                        throw UnsupportedScenario("band closure violated: term " + c.to_string() + "*e(" +
                                                  join(m.frequencies) + ") outside the band in slot " +
                                                  std::to_string(s));
                    out[it->second] += c;
                }
            }
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    Slots decode(const SparseMatrix::Column& coords) const {
        Slots out = zero();
        for (const auto& [j, c] : coords) {
            const Key& key = keys_.at(j);
            out[key.slot].add(key.mask, ScalarExpr::exponential(space_[key.slot].chart, key.k, c));
        }
        return out;
    }

private:
    struct Key {
        int slot;
        Mask mask;
        std::vector<int> k;
        auto operator<=>(const Key&) const = default;
    };

    static std::vector<std::vector<int>> enumerate_modes(int dim, int n) {
        std::vector<std::vector<int>> out;
        std::vector<int> k(dim, -n);
        for (;;) {
            out.push_back(k);
            int j = dim - 1;
            while (j >= 0 && k[j] == n) k[j--] = -n;
            if (j < 0) return out;
            ++k[j];
        }
    }

    static std::string join(const std::vector<int>& k) {
        std::string out;
        for (std::size_t j = 0; j < k.size(); ++j) out += (j ? "," : "") + std::to_string(k[j]);
        return out;
    }

    std::vector<SlotSpec> space_;
    std::vector<Key> keys_;
    std::map<Key, int> index_;
};

/// Matrix of `op` from `dom` to `cod`, assembled column by column.
inline SparseMatrix assemble(const SlotOperator& op, const BandBasis& dom, const BandBasis& cod) {
    SparseMatrix out(cod.size(), dom.size());
    for (int j = 0; j < dom.size(); ++j) out.set_column(j, cod.encode(op(dom.element(j))));
    return out;
}

/// A finite cochain complex C^{d_0} -> C^{d_0+1} -> ... with exact ranks.
struct BandComplex {
    std::string name;
    std::vector<int> degrees;
    std::vector<int> dims;
    std::vector<SparseMatrix> maps;  // maps[j]: degrees[j] -> degrees[j] + 1
    std::vector<int> ranks;
    std::vector<int> cohomology;
    bool composes_to_zero = true;
};

/// Builds the complex over `degrees` (consecutive); `space(p)` describes the
/// degree-p cochains and `op(p)` the differential out of degree p.
inline BandComplex build_complex(std::string name, const std::vector<int>& degrees,
                                 const std::function<std::vector<SlotSpec>(int)>& space,
                                 const std::function<SlotOperator(int)>& op) {
    BandComplex out;
    out.name = std::move(name);
    out.degrees = degrees;
    std::vector<BandBasis> bases;
    for (int p : degrees) bases.emplace_back(space(p));
    const BandBasis after(space(degrees.back() + 1));
    for (std::size_t j = 0; j < degrees.size(); ++j) {
        const BandBasis& cod = j + 1 < degrees.size() ? bases[j + 1] : after;
        out.dims.push_back(bases[j].size());
        out.maps.push_back(assemble(op(degrees[j]), bases[j], cod));
        out.ranks.push_back(rank(out.maps.back()));
    }
    for (std::size_t j = 0; j + 1 < out.maps.size(); ++j)
        if (!(out.maps[j + 1] * out.maps[j]).is_zero()) out.composes_to_zero = false;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
        const int incoming = j > 0 ? out.ranks[j - 1] : 0;
        out.cohomology.push_back(out.dims[j] - out.ranks[j] - incoming);
    }
    return out;
}

inline long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

/// Computed versus predicted dimensions.
struct DimTable {
    std::string name;
    std::vector<int> degrees;
    std::vector<long> dims;
    std::vector<long> predicted;
    bool pass() const { return dims == predicted; }
};

inline DimTable make_table(const BandComplex& c, const std::function<long(int)>& predicted) {
    DimTable t;
    t.name = c.name;
    t.degrees = c.degrees;
    for (std::size_t j = 0; j < c.degrees.size(); ++j) {
        t.dims.push_back(c.cohomology[j]);
        t.predicted.push_back(predicted(c.degrees[j]));
    }
    return t;
}

namespace detail {

inline std::vector<int> degree_range(int lo, int hi) {
    std::vector<int> out(hi - lo + 1);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

inline Slots pair_slots(const PairForm& a) { return {a.first(), a.second()}; }
inline PairForm slots_pair(const Slots& s) { return {s[0], s[1]}; }

inline void require_constant_field(const VectorField& X, const char* where) {
    if (!X.is_constant()) throw UnsupportedScenario(std::string(where) + ": only constant vector fields are band-closed");
}

// Largest column absolute sum of an integer matrix: bounds |A^T k|_inf / |k|_inf.
inline int pullback_band_factor(const ChartMap& f) {
    if (f.rule() != ChartMap::Rule::linear_torus) throw UnsupportedScenario("band scenarios need integer-linear torus maps");
    const IntMatrix& a = f.matrix();
    long best = 1;
    for (int b = 0; b < f.source().dim(); ++b) {
        long s = 0;
        for (const auto& row : a) s += std::labs(row[b]);
        best = std::max(best, s);
    }
    return static_cast<int>(best);
}

}  // namespace detail

/// de Rham complex of T^n on the band.
inline BandComplex de_rham_complex(const Chart& torus, int N) {
    const int n = torus.dim();
    return build_complex(
        "de Rham " + torus.to_string() + " N=" + std::to_string(N), detail::degree_range(0, n + 1),
        [&](int p) { return std::vector<SlotSpec>{{torus, p, N, {}}}; },
        [](int) { return [](const Slots& s) { return Slots{ext_d(s[0])}; }; });
}

/// The d~_X complex of pairs on T^n, degrees 0..n+2.
inline BandComplex pair_complex(const VectorField& X, int N) {
    detail::require_constant_field(X, "pair_complex");
    const Chart torus = X.chart();
    const int n = torus.dim();
    return build_complex(
        "d~_X " + torus.to_string() + " X=" + text::render(X) + " N=" + std::to_string(N),
        detail::degree_range(0, n + 2),
        [&](int p) { return std::vector<SlotSpec>{{torus, p, N, {}}, {torus, p - 1, N, {}}}; },
        [X](int) {
            return [X](const Slots& s) { return detail::pair_slots(d_tilde(X, detail::slots_pair(s))); };
        });
}

/// The d~_eta complex; rejected unless d eta = 0 (otherwise frequencies mix).
inline BandComplex eta_complex(const Form& eta, int N) {
    if (!ext_d(eta).is_zero())
        throw UnsupportedScenario("d~_eta with d eta != 0 mixes frequencies; no exact band model");
    const Chart torus = eta.chart();
    const int n = torus.dim();
    return build_complex(
        "d~_eta " + torus.to_string() + " eta=" + text::render(eta) + " N=" + std::to_string(N),
        detail::degree_range(0, n + 2),
        [&](int p) { return std::vector<SlotSpec>{{torus, p, N, {}}, {torus, p - 1, N, {}}}; },
        [eta](int) {
            return [eta](const Slots& s) { return detail::pair_slots(d_eta(eta, detail::slots_pair(s))); };
        });
}

/// The relative complex Omega(f) = Omega(M) + Omega(M')[-1] with d_{X,f}. The
/// source band is widened so that pullbacks of target modes stay inside it.
inline BandComplex relative_complex(const ChartMap& f, const VectorField& X, int N) {
    detail::require_constant_field(X, "relative_complex");
    require_same_chart(X.chart(), f.source(), "relative_complex");
    const Chart M = f.target();
    const Chart Mp = f.source();
    const int Np = N * detail::pullback_band_factor(f);
    const int top = std::max(M.dim(), Mp.dim() + 1);
    return build_complex(
        "d_{X,f} " + f.to_string() + " X=" + text::render(X) + " N=" + std::to_string(N),
        detail::degree_range(0, top + 1),
        [&](int p) { return std::vector<SlotSpec>{{M, p, N, {}}, {Mp, p - 1, Np, {}}}; },
        [f, X](int) {
            return [f, X](const Slots& s) {
                const RelPairForm r = d_rel(X, RelPairForm(f, s[0], s[1]));
                return Slots{r.first(), r.second()};
            };
        });
}

/// The primed relative complex Omega'(f) = Omega(M') + Omega(M)[-1] with d_{eta,f}.
inline BandComplex primed_relative_complex(const ChartMap& f, const Form& eta, int N) {
    require_same_chart(eta.chart(), f.target(), "primed_relative_complex");
    if (!ext_d(eta).is_zero())
        throw UnsupportedScenario("d_{eta,f} with d eta != 0 mixes frequencies; no exact band model");
    const Chart M = f.target();
    const Chart Mp = f.source();
    const int Np = N * detail::pullback_band_factor(f);
    const int top = std::max(Mp.dim(), M.dim() + 1);
    return build_complex(
        "d_{eta,f} " + f.to_string() + " eta=" + text::render(eta) + " N=" + std::to_string(N),
        detail::degree_range(0, top + 1),
        [&](int p) { return std::vector<SlotSpec>{{Mp, p, Np, {}}, {M, p - 1, N, {}}}; },
        [f, eta](int) {
            return [f, eta](const Slots& s) {
                const RelPairForm r = d_eta_rel(eta, RelPairForm(f, s[0], s[1], true));
                return Slots{r.first(), r.second()};
            };
        });
}

/// The dbar_X complex of (p,q) + (p,q-1) pairs on a complex torus for fixed p,
/// degrees q = 0..n+2.
inline BandComplex dolbeault_pair_complex(const VectorField& X, int p, int N) {
    detail::require_constant_field(X, "dolbeault_pair_complex");
    detail::require_holomorphic(X, "dolbeault_pair_complex");
    const Chart c = X.chart();
    if (!c.is_periodic()) throw ChartMismatch("dolbeault_pair_complex: complex torus required");
    const int n = c.n();
    return build_complex(
        "dbar_X " + c.to_string() + " p=" + std::to_string(p) + " X=" + text::render(X) + " N=" + std::to_string(N),
        detail::degree_range(0, n + 2),
        [c, p, N](int q) {
            return std::vector<SlotSpec>{{c, p + q, N, Bidegree{p, q}}, {c, p + q - 1, N, Bidegree{p, q - 1}}};
        },
        [X, p](int q) {
            return [X, p, q](const Slots& s) {
                const PairBigradedForm a(BigradedForm(s[0], {p, q}), BigradedForm(s[1], {p, q - 1}));
                const PairBigradedForm r = dbar_X(X, a);
                return Slots{r.first().form(), r.second().form()};
            };
        });
}

/// Predicted d~_X dimensions on T^n: C(n,p) + C(n,p-1).
inline std::function<long(int)> torus_pair_prediction(int n) {
    return [n](int p) { return binomial(n, p) + binomial(n, p - 1); };
}

/// Kernel comparison for Delta~_U on pairs of degree p:
/// ker Delta~_U versus ker d~_U intersected with ker delta.
struct HarmonicKernel {
    int degree = 0;
    int band_dim = 0;
    int laplacian_kernel = 0;
    int joint_kernel = 0;  // ker d~_U cap ker delta~_U
    std::optional<PairForm> witness;  // in ker Delta~_U but outside the joint kernel
    bool equal() const { return laplacian_kernel == joint_kernel; }
};

namespace detail {

inline HarmonicKernel kernel_comparison(const VectorField& U, int p, int N,
                                        const std::function<PairForm(const PairForm&)>& lap,
                                        const std::function<PairForm(const PairForm&)>& codiff_op) {
    const Chart t = U.chart();
    auto space = [&](int q) { return std::vector<SlotSpec>{{t, q, N, {}}, {t, q - 1, N, {}}}; };
    const BandBasis here(space(p));
    const BandBasis up(space(p + 1));
    const BandBasis down(space(p - 1));
    auto wrap = [](std::function<PairForm(const PairForm&)> fn) -> SlotOperator {
        return [fn](const Slots& s) { return pair_slots(fn(slots_pair(s))); };
    };
    const SparseMatrix L = assemble(wrap(lap), here, here);
    const SparseMatrix D = assemble(wrap([U](const PairForm& a) { return d_tilde(U, a); }), here, up);
    const SparseMatrix C = assemble(wrap(codiff_op), here, down);
    const SparseMatrix stacked = SparseMatrix::vstack(D, C);

    HarmonicKernel out;
    out.degree = p;
    out.band_dim = here.size();
    out.laplacian_kernel = here.size() - rank(L);
    out.joint_kernel = here.size() - rank(stacked);
    if (!out.equal()) {
        for (const auto& v : nullspace(L)) {
            const PairForm a = slots_pair(here.decode(v));
            if (!d_tilde(U, a).is_zero() || !codiff_op(a).is_zero()) {
                out.witness = a;
                break;
            }
        }
    }
    return out;
}

}  // namespace detail

/// ker Delta~_U versus ker d~_U cap ker delta~_U on the band.
inline HarmonicKernel harmonic_kernel(const VectorField& U, int p, int N) {
    detail::require_constant_field(U, "harmonic_kernel");
    return detail::kernel_comparison(
        U, p, N, [U](const PairForm& a) { return laplacian_tilde(U, a); },
        [U](const PairForm& a) { return delta_tilde(U, a); });
}

/// Same comparison for the skew adjoint (delta phi - L_U psi, -delta psi) and
/// its Laplacian (Delta - L_U^2).
inline HarmonicKernel skew_harmonic_kernel(const VectorField& U, int p, int N) {
    detail::require_constant_field(U, "skew_harmonic_kernel");
    return detail::kernel_comparison(
        U, p, N,
        [U](const PairForm& a) { return d_tilde(U, skew_delta_tilde(U, a)) + skew_delta_tilde(U, d_tilde(U, a)); },
        [U](const PairForm& a) { return skew_delta_tilde(U, a); });
}

/// Dimension of ker Delta_w on p-forms of the band.
inline int lichnerowicz_kernel(const Form& w, int p, int N) {
    const Chart t = w.chart();
    const BandBasis here(std::vector<SlotSpec>{{t, p, N, {}}});
    const SparseMatrix L = assemble([w](const Slots& s) { return Slots{lichnerowicz_laplacian(w, s[0])}; }, here, here);
    return here.size() - rank(L);
}

}  // namespace pairdiff
