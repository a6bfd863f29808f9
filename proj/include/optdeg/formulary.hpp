#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace optdeg {

// Degrees of the Chern classes c_0..c_m of an m-dimensional projective variety.
struct ChernDegrees {
    std::vector<std::int64_t> degs;

    int dim() const { return static_cast<int>(degs.size()) - 1; }
};

// Sums V_0..V_m of normalized volumes of the j-dimensional faces of a lattice polytope.
struct ToricVolumes {
    std::vector<std::int64_t> volumes;
};

// Factors (n_l, omega_l) of a Segre-Veronese product of P^{n_l - 1}.
struct SegreVeroneseSpec {
    std::vector<std::pair<int, int>> factors;

    int dim() const;
};

// All formulas use checked 64-bit arithmetic and throw invalid_argument on overflow.
std::int64_t polar_formula(std::int64_t p, const std::vector<std::int64_t>& delta, int n);
std::int64_t chern_formula(std::int64_t p, const ChernDegrees& c);
std::vector<std::int64_t> polar_from_chern(const ChernDegrees& c, int n);
std::int64_t hypersurface_formula(std::int64_t d, int n, std::int64_t p);
ChernDegrees hypersurface_chern(std::int64_t d, int n);
std::int64_t ci_bound(const std::vector<std::int64_t>& degrees, int n, std::int64_t p);
std::int64_t toric_formula(std::int64_t p, const ToricVolumes& v);
ChernDegrees segre_veronese_chern(const SegreVeroneseSpec& spec);
std::int64_t segre_veronese_formula(std::int64_t p, const SegreVeroneseSpec& spec);
std::int64_t veronese_formula(int n, std::int64_t omega, std::int64_t p);
// (p-1)^(n-1) (n p^2 - 2p + 2) for P^1 x P^(n-1).
std::int64_t segre_p1_formula(int n, std::int64_t p);
std::int64_t curve_formula(std::int64_t d, std::int64_t genus, std::int64_t p);
std::int64_t plane_curve_affine_formula(std::int64_t d, std::int64_t p);

enum class EulerMode { projective, affine };
std::int64_t euler_formula(EulerMode mode, std::int64_t p, int m, std::int64_t chi);
// chi(X \ (Q_p ∪ H)) for a smooth plane curve of degree d.
std::int64_t plane_curve_chi(std::int64_t d, std::int64_t p);
// chi(X \ (Q_p ∪ H)) for the rational normal curve of degree d.
std::int64_t rational_normal_curve_chi(std::int64_t d, std::int64_t p);

}  // namespace optdeg
