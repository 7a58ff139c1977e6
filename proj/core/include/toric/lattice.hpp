#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// All lattice arithmetic is exact: arbitrary-precision integers, rationals
// only in intermediate eliminations. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);

// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const Vec& a);

// Dense row-major integer matrix.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_cols(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Mat transposed() const;
    Vec apply(const Vec& x) const;  // A * x

    bool operator==(const Mat& o) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank(Mat m);

std::size_t rank_of_rows(const std::vector<Vec>& rows);

// Determinant of a square matrix, Bareiss.
Int determinant(Mat m);

// Unique integer solution of A x = b if one exists. Returns an empty
// optional when the system is inconsistent or the unique rational solution
// is not integral. Throws NonUniqueSolution when the system is consistent
// with free variables.
std::optional<Vec> solve_integer(const Mat& a, const Vec& b);

// Inverse of a matrix with determinant +-1; throws PreconditionError
// otherwise.
Mat inverse_unimodular(const Mat& a);

// Rational polyhedron {x : normal . x <= bound} with integer data. Strict
// inequalities are normalized away at insertion time by an integer bound
// shift, so a single enumeration path suffices.
class Polyhedron {
  public:
    explicit Polyhedron(std::size_t dim) : dim_(dim) {}

    struct Halfspace {
        Vec normal;
        Int bound;
    };

    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& halfspaces() const { return hs_; }

    void add_le(Vec normal, Int bound);
    void add_ge(const Vec& normal, const Int& bound);
    void add_lt(const Vec& normal, const Int& bound);  // n.x <  b  ==  n.x <= b-1
    void add_gt(const Vec& normal, const Int& bound);  // n.x >  b  ==  n.x >= b+1
    void add_eq(const Vec& normal, const Int& bound);

  private:
    std::size_t dim_;
    std::vector<Halfspace> hs_;
};

// Rational feasibility by Fourier-Motzkin elimination.
bool feasible(const Polyhedron& p);

// True iff the recession cone {d : normal . d <= 0 for every halfspace} is
// the origin alone.
bool recession_cone_trivial(const Polyhedron& p);

// Exact enumeration of the integer points of p. Returns an empty optional
// when the recession cone is nontrivial (unbounded region), without
// enumerating anything.
std::optional<std::vector<Vec>> lattice_points(const Polyhedron& p);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int binomial(long n, long k);

}  // namespace toric
