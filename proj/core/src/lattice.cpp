#include "toric/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace toric {

Vec operator+(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec operator*(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Int dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

Int content(const Vec& a) {
    Int g = 0;
    for (const Int& x : a) g = boost::multiprecision::gcd(g, x);
    return g;
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == m.cols_);
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
    Mat m(cols.empty() ? 0 : cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        assert(cols[j].size() == m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Vec Mat::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec Mat::apply(const Vec& x) const {
    assert(x.size() == cols_);
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

namespace {

// Exact division; in the Bareiss scheme every division is remainder-free.
Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    assert(r == 0);
    return q;
}

}  // namespace

std::size_t rank(Mat m) {
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = exact_div(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::size_t rank_of_rows(const std::vector<Vec>& rows) {
    return rank(Mat::from_rows(rows));
}

Int determinant(Mat m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t p = r;
        while (p < n && m(p, r) == 0) ++p;
        if (p == n) return 0;
        if (p != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(r, r) - m(i, r) * m(r, j), prev);
            m(i, r) = 0;
        }
        prev = m(r, r);
    }
    return sign * m(n - 1, n - 1);
}

std::optional<Vec> solve_integer(const Mat& a, const Vec& b) {
    assert(b.size() == a.rows());
    const std::size_t rows = a.rows(), cols = a.cols();

    // Gauss-Jordan over the rationals on [A | b].
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rat(a(i, j));
        m[i][cols] = Rat(b[i]);
    }

    std::vector<std::ptrdiff_t> pivot_row(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rat piv = m[r][c];
        for (std::size_t j = c; j <= cols; ++j) m[r][j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_row[c] = static_cast<std::ptrdiff_t>(r);
        ++r;
    }

    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;  // inconsistent

    if (r < cols)
        throw NonUniqueSolution("solve_integer: solution space has positive dimension");

    Vec x(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const Rat& v = m[static_cast<std::size_t>(pivot_row[c])][cols];
        if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
        x[c] = boost::multiprecision::numerator(v);
    }
    return x;
}

Mat inverse_unimodular(const Mat& a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    const Int d = determinant(a);
    if (d != 1 && d != -1)
        throw PreconditionError("inverse_unimodular: determinant is not +-1");

    // Gauss-Jordan over the rationals; the result is integral because
    // det = +-1.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a(i, j));
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        const Rat piv = m[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j) m[c][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = m[i][n + j];
            assert(boost::multiprecision::denominator(v) == 1);
            inv(i, j) = boost::multiprecision::numerator(v);
        }
    return inv;
}

void Polyhedron::add_le(Vec normal, Int bound) {
    assert(normal.size() == dim_);
    hs_.push_back({std::move(normal), std::move(bound)});
}

void Polyhedron::add_ge(const Vec& normal, const Int& bound) { add_le(-normal, -bound); }
void Polyhedron::add_lt(const Vec& normal, const Int& bound) { add_le(normal, bound - 1); }
void Polyhedron::add_gt(const Vec& normal, const Int& bound) { add_ge(normal, bound + 1); }

void Polyhedron::add_eq(const Vec& normal, const Int& bound) {
    add_le(normal, bound);
    add_ge(normal, bound);
}

namespace {

using Row = std::pair<Vec, Int>;  // normal . x <= bound

void normalize_row(Row& r) {
    Int g = content(r.first);
    if (g > 1 && r.second % g == 0) {
        for (Int& x : r.first) x /= g;
        r.second /= g;
    }
}

// One Fourier-Motzkin step: eliminate coordinate `k`, keeping the exact
// rational projection onto the remaining coordinates.
std::vector<Row> fm_eliminate(const std::vector<Row>& rows, std::size_t k) {
    std::vector<Row> pos, neg, out;
    std::set<std::pair<Vec, Int>> seen;
    auto push = [&](Row r) {
        normalize_row(r);
        if (is_zero(r.first) && r.second >= 0) return;  // vacuous 0 <= b
        if (seen.insert({r.first, r.second}).second) out.push_back(std::move(r));
    };
    for (const Row& r : rows) {
        const Int& c = r.first[k];
        if (c > 0)
            pos.push_back(r);
        else if (c < 0)
            neg.push_back(r);
        else {
            Row t = r;
            t.first.erase(t.first.begin() + static_cast<std::ptrdiff_t>(k));
            push(std::move(t));
        }
    }
    for (const Row& p : pos)
        for (const Row& m : neg) {
            const Int cp = p.first[k], cm = -m.first[k];
            Row t;
            t.first.resize(p.first.size() - 1);
            std::size_t jj = 0;
            for (std::size_t j = 0; j < p.first.size(); ++j) {
                if (j == k) continue;
                t.first[jj++] = cp * m.first[j] + cm * p.first[j];
            }
            t.second = cp * m.second + cm * p.second;
            push(std::move(t));
        }
    return out;
}

bool constants_feasible(const std::vector<Row>& rows) {
    for (const Row& r : rows)
        if (is_zero(r.first) && r.second < 0) return false;
    return true;
}

std::vector<Row> to_rows(const Polyhedron& p) {
    std::vector<Row> rows;
    rows.reserve(p.halfspaces().size());
    for (const auto& h : p.halfspaces()) rows.push_back({h.normal, h.bound});
    return rows;
}

}  // namespace

bool feasible(const Polyhedron& p) {
    std::vector<Row> rows = to_rows(p);
    if (!constants_feasible(rows)) return false;
    for (std::size_t k = p.dim(); k-- > 0;) {
        std::vector<Row> kept;
        for (Row& r : rows)
            if (!is_zero(r.first)) kept.push_back(std::move(r));
        rows = fm_eliminate(kept, k);  // rows now live in dimension k
        if (!constants_feasible(rows)) return false;
    }
    return true;
}

namespace {

// Does the cone {d : n . d <= 0 for all normals n} contain a nonzero
// point? Recursion over Fourier-Motzkin projections of the cone.
bool cone_has_nonzero(const std::vector<Vec>& normals, std::size_t dim) {
    if (dim == 0) return false;
    if (dim == 1) {
        bool pos = false, neg = false;
        for (const Vec& n : normals) {
            if (n[0] > 0) pos = true;
            if (n[0] < 0) neg = true;
        }
        return !(pos && neg);
    }
    std::vector<Row> rows;
    rows.reserve(normals.size());
    for (const Vec& n : normals)
        if (!is_zero(n)) rows.push_back({n, 0});
    std::vector<Row> proj = fm_eliminate(rows, 0);
    std::vector<Vec> proj_normals;
    proj_normals.reserve(proj.size());
    for (Row& r : proj) proj_normals.push_back(std::move(r.first));
    if (cone_has_nonzero(proj_normals, dim - 1)) return true;
    // The projection is trivial, so any cone point is (d1, 0, ..., 0).
    bool pos = false, neg = false;
    for (const Vec& n : normals) {
        if (n[0] > 0) pos = true;
        if (n[0] < 0) neg = true;
    }
    return !(pos && neg);
}

}  // namespace

bool recession_cone_trivial(const Polyhedron& p) {
    std::vector<Vec> normals;
    normals.reserve(p.halfspaces().size());
    for (const auto& h : p.halfspaces()) normals.push_back(h.normal);
    return !cone_has_nonzero(normals, p.dim());
}

Int floor_div(const Int& a, const Int& b) {
    assert(b != 0);
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

namespace {

// Enumerate by coordinate descent: systems[k] constrains x_1..x_k; fixing a
// prefix turns the level-k rows into an integer interval for x_k.
void enumerate_level(const std::vector<std::vector<Row>>& systems, std::size_t level, Vec& prefix,
                     std::vector<Vec>& out) {
    const std::size_t n = systems.size() - 1;
    const std::vector<Row>& rows = systems[level];
    bool has_lo = false, has_hi = false;
    Int lo = 0, hi = 0;
    for (const Row& r : rows) {
        Int residual = r.second;
        for (std::size_t j = 0; j + 1 < level; ++j) residual -= r.first[j] * prefix[j];
        const Int& c = r.first[level - 1];
        if (c == 0) {
            if (residual < 0) return;  // prefix infeasible
        } else if (c > 0) {
            Int ub = floor_div(residual, c);
            if (!has_hi || ub < hi) hi = ub;
            has_hi = true;
        } else {
            Int lb = ceil_div(residual, c);
            if (!has_lo || lb > lo) lo = lb;
            has_lo = true;
        }
    }
    // recession_cone_trivial guarantees two-sided bounds at every level
    if (!has_lo || !has_hi) throw Error("lattice_points: missing bound on a bounded region");
    for (Int v = lo; v <= hi; ++v) {
        prefix[level - 1] = v;
        if (level == n)
            out.push_back(prefix);
        else
            enumerate_level(systems, level + 1, prefix, out);
    }
}

}  // namespace

std::optional<std::vector<Vec>> lattice_points(const Polyhedron& p) {
    const std::size_t n = p.dim();
    if (!recession_cone_trivial(p)) return std::nullopt;
    if (n == 0) {
        std::vector<Vec> out;
        if (constants_feasible(to_rows(p))) out.push_back({});
        return out;
    }

    std::vector<std::vector<Row>> systems(n + 1);
    systems[n] = to_rows(p);
    if (!constants_feasible(systems[n])) return std::vector<Vec>{};
    for (std::size_t k = n; k-- > 1;) {
        std::vector<Row> kept;
        for (const Row& r : systems[k + 1])
            if (!is_zero(r.first)) kept.push_back(r);
        systems[k] = fm_eliminate(kept, k);
        if (!constants_feasible(systems[k])) return std::vector<Vec>{};
    }

    std::vector<Vec> out;
    Vec prefix(n);
    enumerate_level(systems, 1, prefix, out);
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace toric
