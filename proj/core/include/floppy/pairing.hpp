#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floppy/diagram.hpp"
#include "floppy/rational.hpp"

namespace floppy {

using IMat = std::vector<std::vector<Int>>;

// 2*M for one side, integer entries, rows/columns over the relevant regions.
struct PairingMatrix {
  Side side = Side::plus;
  std::vector<std::string> order;
  IMat entries2;
};

struct InertiaResult {
  long long sigma_plus = 0;
  long long sigma_minus = 0;
  long long eta = 0;
};

PairingMatrix build_matrix(const std::vector<RegionProfile>& profiles,
                           const std::map<std::pair<std::string, std::string>, SharedCorners>& shared,
                           long long k, Side side);

// Convenience: profiles + shared corners straight from a colored diagram.
PairingMatrix build_side_matrix(const CurveDiagram& d, long long k, Side side);

// Exact signature by symmetric congruence reduction (Sylvester).
InertiaResult inertia_of(const IMat& m);
InertiaResult inertia(const PairingMatrix& m);

// Basis of the integer kernel lattice, as column vectors.
std::vector<std::vector<Int>> kernel_basis(const IMat& m);

// An integer kernel vector with every entry odd, when one exists.
// The 0x0 matrix has one: the empty vector, vacuously all-odd.
std::optional<std::vector<Int>> odd_kernel_witness(const IMat& m);
std::optional<std::vector<Int>> odd_kernel_witness(const PairingMatrix& m);

Int det_abs(const IMat& m);

// |det| = b^2 * 2^exponent for some integer b? (0 passes with b = 0.)
bool det_power_square(const IMat& m, long long exponent);
bool det_power_square(const PairingMatrix& m, long long exponent);

}  // namespace floppy
