#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Raw fan description, as parsed from a file or assembled by a generator.
struct FanData {
    int rank = 0;
    std::vector<Vec> rays;                   // primitive ray generators
    std::vector<std::vector<int>> max_cones; // ray-index sets, |set| = rank
    std::string name;
};

struct ValidationReport {
    bool structure = false;
    bool primitive = false;
    bool smooth = false;
    bool faces = false;
    bool complete = false;
    std::vector<std::string> failures;

    bool ok() const { return structure && primitive && smooth && faces && complete; }
    std::string describe() const;
};

struct FanError : Error {
    explicit FanError(ValidationReport r);
    ValidationReport report;
};

class Fan;
using FanPtr = std::shared_ptr<const Fan>;

// A validated fan of a smooth complete toric variety. Instances are
// immutable; every derived quantity (cone duals, ray masks) is computed at
// construction, so const access is safe from any number of threads.
class Fan {
  public:
    // Runs every invariant check and reports pass/fail per invariant with
    // the offending cone/ray indices.
    static ValidationReport check(const FanData& data);

    // Validates and wraps; throws FanError when any check fails.
    static FanPtr make(FanData data);

    int rank() const { return data_.rank; }
    std::size_t ray_count() const { return data_.rays.size(); }
    const std::vector<Vec>& rays() const { return data_.rays; }
    const Vec& ray(std::size_t i) const { return data_.rays[i]; }
    const std::vector<std::vector<int>>& max_cones() const { return data_.max_cones; }
    const std::string& name() const { return data_.name; }
    const FanData& data() const { return data_; }

    std::uint32_t cone_mask(std::size_t c) const { return masks_[c]; }
    std::uint32_t full_mask() const;
    bool is_face(std::uint32_t mask) const;

    // Inverse of the cone's ray matrix (columns = rays in index order);
    // row k is the dual character of the k-th cone ray.
    const Mat& cone_dual(std::size_t c) const { return duals_[c]; }

    // A maximal cone containing v, with the coordinates of v in that
    // cone's rays. Empty when v lies outside the support.
    std::optional<std::pair<std::size_t, Vec>> locate(const Vec& v) const;

  private:
    Fan(FanData data, std::vector<Mat> duals, std::vector<std::uint32_t> masks);

    FanData data_;
    std::vector<Mat> duals_;
    std::vector<std::uint32_t> masks_;
};

struct Divisor {
    FanPtr fan;
    Vec coeffs;  // one per ray
};

Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
Divisor operator*(const Int& c, const Divisor& a);

// -K_X: the all-ones coefficient vector.
Divisor canonical_divisor(FanPtr fan);

// div(chi^m): coefficient <m, v_i> on ray i. Linearly equivalent to zero.
Vec character_divisor(const Fan& fan, const Vec& m);

// A choice of maximal cone whose rays are struck from the coefficient
// vector; the complementary "free" rays carry a basis of Pic(X).
struct PicBasis {
    FanPtr fan;
    int base_cone = 0;
    std::vector<int> basis_rays;  // rays of the base cone, ascending
    std::vector<int> free_rays;   // the rest, ascending
    // relations(i, j) = -<m_i, v_j>: divisor of basis ray i is linearly
    // equivalent to sum_j relations(i, j) * divisor of free ray j.
    Mat relations;
};

PicBasis pic_basis(FanPtr fan, int base_cone = 0);

// The unique linearly equivalent coefficient vector vanishing on the basis
// rays. Two divisors are in the same class iff these agree.
Vec canonical_representation(const PicBasis& pic, const Vec& coeffs);
Divisor canonical_representation(const PicBasis& pic, const Divisor& d);

struct PrimitiveRelation {
    std::vector<int> collection;    // a minimal non-face, ascending
    std::vector<int> support_rays;  // rays of the cone holding the sum, ascending
    std::vector<Int> coefficients;  // positive, aligned with support_rays
};

// All primitive collections with their relations, by increasing size.
std::vector<PrimitiveRelation> primitive_collections(const Fan& fan);

// Number of maximal cones = rank of K_0(X).
std::size_t euler_characteristic(const Fan& fan);

// Coefficients of the Poincare polynomial, degree 0..2n. Odd entries are
// zero; the value at -1 equals the Euler characteristic.
std::vector<Int> poincare_polynomial(const Fan& fan);

}  // namespace toric
