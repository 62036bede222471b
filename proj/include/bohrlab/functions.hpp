#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

inline constexpr std::size_t kDefaultOrder = 64;

namespace family {
struct MoebiusPhiA {
  double a;
};
struct HalfPlane {
  double a0;
};
struct Koebe {};
struct IdentityZ {};
struct Constant {
  Complex c;
};
}  // namespace family

using CanonicalFamily =
    std::variant<family::MoebiusPhiA, family::HalfPlane, family::Koebe, family::IdentityZ, family::Constant>;

std::string family_name(const CanonicalFamily& f);

/// Series of the family member to the given order.
TruncatedSeries build_family(const CanonicalFamily& f, std::size_t order);

/// phi_a(z) = (a - z) / (1 - a z) = a - (1 - a^2) sum_{k>=1} a^{k-1} z^k, 0 < a < 1.
TruncatedSeries moebius_phi_a(double a, std::size_t order = kDefaultOrder);

/// g(z) = a0 - 2 (1 - a0) z / (1 - z): maps the disk onto Re w < 1, g(0) = a0.
TruncatedSeries half_plane_map(double a0, std::size_t order = kDefaultOrder);

/// z / (1 - z)^2.
TruncatedSeries koebe(std::size_t order = kDefaultOrder);

/// Blaschke parameters in (0.1, 0.9) drawn deterministically from the seed.
std::vector<double> blaschke_parameters(std::uint64_t seed, int depth);

/// z * prod_i (a_i - z) / (1 - a_i z); a Schwarz function.
TruncatedSeries random_schwarz(std::uint64_t seed, std::size_t order, int depth);

/// prod_i (a_i - z) / (1 - a_i z); bounded by 1 in modulus. Needs depth >= 1.
TruncatedSeries random_unit_bounded(std::uint64_t seed, std::size_t order, int depth);

}  // namespace bohrlab
