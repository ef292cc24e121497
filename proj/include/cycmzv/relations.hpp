#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cycmzv/finite_values.hpp"
#include "cycmzv/hpoly.hpp"
#include "cycmzv/matrix.hpp"

namespace cycmzv {

/// e_k - (-1)^{wt+1} e_{reverse(dual k)}.
HPoly duality_element(const Index& k);

/// e_u tilde-star e_v - delta(delta e_u tilde-star delta e_v).
HPoly double_shuffle_element(const Index& u, const Index& v);

/// Duality elements for every index of weight k and double-shuffle elements
/// for every unordered pair of nonempty indices of total weight k. Zero and
/// repeated elements (up to sign) are dropped.
std::vector<HPoly> relation_family(int k, int jobs = 0);

struct DimensionRow {
    int k = 0;
    std::size_t num_indices = 0;
    std::size_t relation_rank = 0;
    std::size_t upper_bound = 0;
    /// Rank proven over Q (see certified_rank); false means the rank is only
    /// a lower bound, so upper_bound is an upper bound of the true bound.
    bool certified = true;
};

/// 2^{k-1} minus the rank of relation_family(k) in the basis e_k, wt(k) = k.
DimensionRow dimension_upper_bound(int k, int jobs = 0);
std::vector<DimensionRow> dimension_upper_bounds(int k_max, int jobs = 0);

/// Rank over Q of the coordinate vectors (power basis of Q(zeta_p)) of
/// z_p(k; zeta_p) over all indices of weight k.
std::size_t observed_dimension(int k, int p);

struct KerPhiPrime {
    /// Whether the image modulo (1 - zeta_p) vanishes.
    PrimeStatus finite_image = PrimeStatus::Zero;
    /// Whether the value modulo (p) lies in the F_p-span of
    /// (1 - zeta_p) Z(k') over wt(k') = wt - 1. Only meaningful when not excluded.
    bool in_varpi_span = false;
    std::string reason;
};

struct KerPhiReport {
    int weight = 0;
    std::map<std::uint64_t, KerPhiPrime> primes;
    bool finite_image_zero() const;
    bool varpi_span_member() const;
};

/// Probes whether a homogeneous hbar-free combination lies in ker(phi) and in
/// varpi * Z^cyc, prime by prime.
KerPhiReport ker_phi_probe(const HPoly& combo, const std::vector<std::uint64_t>& primes, int jobs = 0);

}  // namespace cycmzv
