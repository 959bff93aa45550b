// Model charts and the library's error types.
#pragma once

#include <stdexcept>
#include <string>

namespace pairdiff {

/// Raised when two operands live on different charts.
class ChartMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for scenarios the exact engine refuses to approximate.
class UnsupportedScenario : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ChartKind { affine_real, torus, affine_complex, complex_torus };

/// A coordinate chart. Real charts have n frame axes x[1..n]. Complex charts
/// of complex dimension n have 2n frame axes ordered z[1..n], zb[1..n]; the
/// frame is dz[1..n], dzb[1..n]. Torus coordinates are 2*pi periodic.
///
/// Scalar variables line up with frame axes: affine-real uses x[j],
/// affine-complex uses z[j] and zb[j] as independent polynomial variables,
/// and the tori carry one frequency per real coordinate (for the complex
/// torus: x[1..n] then y[1..n] with z = x + i*y).
class Chart {
public:
    Chart() = default;
    Chart(ChartKind kind, int n) : kind_(kind), n_(n) {
        if (n < 1) throw std::invalid_argument("Chart: dimension must be >= 1");
        if (dim() > 16) throw std::invalid_argument("Chart: dimension too large");
    }

    static Chart affine(int n) { return {ChartKind::affine_real, n}; }
    static Chart torus(int n) { return {ChartKind::torus, n}; }
    static Chart complex_affine(int n) { return {ChartKind::affine_complex, n}; }
    static Chart complex_torus(int n) { return {ChartKind::complex_torus, n}; }

    ChartKind kind() const { return kind_; }
    /// Coordinate count n (complex dimension for complex charts).
    int n() const { return n_; }
    /// Number of frame axes (= scalar variable slots).
    int dim() const { return is_complex() ? 2 * n_ : n_; }

    bool is_complex() const {
        return kind_ == ChartKind::affine_complex || kind_ == ChartKind::complex_torus;
    }
    bool is_periodic() const {
        return kind_ == ChartKind::torus || kind_ == ChartKind::complex_torus;
    }
    bool is_real_torus() const { return kind_ == ChartKind::torus; }

    /// Scalar variable name for a frame axis (0-based), e.g. "x[1]", "zb[2]".
    std::string variable_name(int axis) const {
        if (!is_complex()) return "x[" + std::to_string(axis + 1) + "]";
        if (axis < n_) return "z[" + std::to_string(axis + 1) + "]";
        return "zb[" + std::to_string(axis - n_ + 1) + "]";
    }

    /// Basis 1-form name, e.g. "dx[1]", "dzb[1]".
    std::string differential_name(int axis) const { return "d" + variable_name(axis); }

    /// Vector field basis name, e.g. "d/dx[1]".
    std::string derivation_name(int axis) const { return "d/d" + variable_name(axis); }

    std::string to_string() const {
        switch (kind_) {
            case ChartKind::affine_real: return "R^" + std::to_string(n_);
            case ChartKind::torus: return "T^" + std::to_string(n_);
            case ChartKind::affine_complex: return "C^" + std::to_string(n_);
            case ChartKind::complex_torus: return "C^" + std::to_string(n_) + "/L";
        }
        return "?";
    }

    friend bool operator==(const Chart&, const Chart&) = default;

private:
    ChartKind kind_ = ChartKind::affine_real;
    int n_ = 1;
};

inline void require_same_chart(const Chart& a, const Chart& b, const char* where) {
    if (!(a == b)) {
        throw ChartMismatch(std::string(where) + ": chart mismatch (" + a.to_string() +
                            " vs " + b.to_string() + ")");
    }
}

}  // namespace pairdiff
