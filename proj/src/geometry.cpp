#include "mdfold/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mdfold {

namespace {

using Wide = __int128;

Coord floor_div(Coord a, Coord b) {
    Coord q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Wide mod_wide(Wide a, Wide m) {
    Wide r = a % m;
    return r < 0 ? r + m : r;
}

// g = s*a + t*b, g >= 0.
Wide xgcd(Wide a, Wide b, Wide& s, Wide& t) {
    Wide s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Wide q = a / b;
        Wide r = a - q * b;
        a = b;
        b = r;
        Wide ns = s0 - q * s1;
        s0 = s1;
        s1 = ns;
        Wide nt = t0 - q * t1;
        t0 = t1;
        t1 = nt;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

void check_dim(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (expected " +
                                    std::to_string(expected) + ", got " + std::to_string(got) + ")");
    }
}

// Hermite form computed modulo d = |det|; d*e_k stays in the generating set
// until column k is processed, so every reduction mod d stays inside the lattice.
IntMatrix hermite_form(const IntMatrix& basis, Coord det) {
    const std::size_t n = basis.size();
    const Wide d = det;
    std::vector<std::vector<Wide>> rows;
    rows.reserve(2 * n);
    for (const auto& b : basis) {
        std::vector<Wide> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = mod_wide(b[j], d);
        rows.push_back(std::move(r));
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Wide> r(n, 0);
        r[k] = d;
        rows.push_back(std::move(r));
    }

    std::vector<std::vector<Wide>> pivots;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][j] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows.size()) throw std::logic_error("hermite_form: singular basis");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == piv || rows[i][j] == 0) continue;
            Wide s, t;
            const Wide a = rows[piv][j];
            const Wide b = rows[i][j];
            const Wide g = xgcd(a, b, s, t);
            std::vector<Wide> np(n), nr(n);
            for (std::size_t c = j; c < n; ++c) {
                np[c] = s * rows[piv][c] + t * rows[i][c];
                nr[c] = (b / g) * rows[piv][c] - (a / g) * rows[i][c];
            }
            for (std::size_t c = j + 1; c < n; ++c) {
                np[c] = mod_wide(np[c], d);
                nr[c] = mod_wide(nr[c], d);
            }
            rows[piv] = std::move(np);
            rows[i] = std::move(nr);
        }
        if (rows[piv][j] < 0) {
            for (auto& v : rows[piv]) v = -v;
            for (std::size_t c = j + 1; c < n; ++c) rows[piv][c] = mod_wide(rows[piv][c], d);
        }
        pivots.push_back(std::move(rows[piv]));
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Wide p = pivots[j][j];
            Wide q = pivots[i][j] / p;
            if (pivots[i][j] - q * p < 0) --q;
            if (q == 0) continue;
            for (std::size_t c = j; c < n; ++c) pivots[i][c] -= q * pivots[j][c];
        }
    }

    IntMatrix out(n, std::vector<Coord>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = static_cast<Coord>(pivots[i][j]);
    return out;
}

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return line;
    }
    return {};
}

std::size_t parse_dim_header(std::istream& in) {
    std::istringstream header(next_content_line(in));
    std::string word;
    long long dim = 0;
    if (!(header >> word >> dim) || word != "dim" || dim < 1 || dim > static_cast<long long>(kMaxDim)) {
        throw std::invalid_argument("expected header 'dim D' with 1 <= D <= 8");
    }
    return static_cast<std::size_t>(dim);
}

std::vector<Coord> parse_ints(const std::string& line, std::size_t expected) {
    std::istringstream ss(line);
    std::vector<Coord> v;
    Coord x;
    while (ss >> x) v.push_back(x);
    if (!ss.eof() || v.size() != expected) {
        throw std::invalid_argument("malformed line '" + line + "': expected " + std::to_string(expected) +
                                    " integers");
    }
    return v;
}

}  // namespace

Point operator+(const Point& a, const Point& b) {
    check_dim(a.size(), b.size(), "point addition");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point operator-(const Point& a, const Point& b) {
    check_dim(a.size(), b.size(), "point subtraction");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point zero_point(std::size_t dim) { return Point(dim, 0); }

bool is_zero(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](Coord c) { return c == 0; });
}

std::string format_point(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

Coord determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
    for (std::size_t i = 0; i < n; ++i) {
        check_dim(n, m[i].size(), "determinant");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    }
    int sign = 1;
    Wide prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Wide x, y;
                if (__builtin_mul_overflow(a[i][j], a[k][k], &x) || __builtin_mul_overflow(a[i][k], a[k][j], &y)) {
                    throw std::overflow_error("determinant: intermediate overflow");
                }
                a[i][j] = (x - y) / prev;
            }
        }
        prev = a[k][k];
    }
    const Wide det = sign * a[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("determinant: result overflow");
    return static_cast<Coord>(det);
}

Lattice::Lattice(IntMatrix basis) : basis_(std::move(basis)) {
    const std::size_t n = basis_.size();
    if (n == 0 || n > kMaxDim) throw std::invalid_argument("lattice dimension must be in [1, 8]");
    for (const auto& row : basis_) {
        check_dim(n, row.size(), "lattice basis");
        for (Coord c : row) {
            if (c > kMaxVolume || c < -kMaxVolume) throw std::invalid_argument("lattice entry out of range");
        }
    }
    const Coord det = determinant(basis_);
    if (det == 0) throw std::invalid_argument("lattice basis is singular");
    volume_ = det < 0 ? -det : det;
    if (volume_ > kMaxVolume) throw std::invalid_argument("lattice volume exceeds 2^31");
    hermite_ = hermite_form(basis_, volume_);
}

Point Lattice::reduce(Point p) const {
    check_dim(dim(), p.size(), "residue");
    for (std::size_t i = 0; i < dim(); ++i) {
        const Coord q = floor_div(p[i], hermite_[i][i]);
        if (q == 0) continue;
        for (std::size_t j = i; j < dim(); ++j) p[j] -= q * hermite_[i][j];
    }
    return p;
}

Residue Lattice::residue(const Point& p) const { return Residue{reduce(p)}; }

std::size_t Lattice::residue_index(const Point& p) const {
    const Point r = reduce(p);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i) idx = idx * static_cast<std::size_t>(hermite_[i][i]) + r[i];
    return idx;
}

bool Lattice::contains(const Point& p) const { return is_zero(reduce(p)); }

Coord volume(const Lattice& lattice) { return lattice.volume(); }

Residue residue(const Lattice& lattice, const Point& p) { return lattice.residue(p); }

Shape::Shape(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0 || dim_ > kMaxDim) throw std::invalid_argument("shape dimension must be in [1, 8]");
    for (const auto& p : points_) {
        check_dim(dim_, p.size(), "shape point");
        if (!members_.insert(p).second) throw std::invalid_argument("duplicate shape point " + format_point(p));
    }
    if (!members_.count(zero_point(dim_))) throw std::invalid_argument("shape must contain the origin");
}

std::pair<Point, Point> Shape::bounding_box() const {
    Point lo = points_.front(), hi = points_.front();
    for (const auto& p : points_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    return {lo, hi};
}

Shape Shape::translated(const Point& offset) const {
    std::vector<Point> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back(p + offset);
    return Shape(dim_, std::move(pts));
}

Shape box_shape(const std::vector<Coord>& dims) {
    if (dims.empty()) throw std::invalid_argument("box needs at least one side");
    std::size_t count = 1;
    for (Coord n : dims) {
        if (n < 1) throw std::invalid_argument("box sides must be positive");
        count *= static_cast<std::size_t>(n);
    }
    std::vector<Point> pts;
    pts.reserve(count);
    Point p(dims.size(), 0);
    for (std::size_t k = 0; k < count; ++k) {
        pts.push_back(p);
        for (std::size_t i = dims.size(); i-- > 0;) {
            if (++p[i] < dims[i]) break;
            p[i] = 0;
        }
    }
    return Shape(dims.size(), std::move(pts));
}

Shape fundamental_box(const Lattice& lattice) {
    std::vector<Coord> dims;
    for (std::size_t i = 0; i < lattice.dim(); ++i) dims.push_back(lattice.hermite()[i][i]);
    return box_shape(dims);
}

bool is_tiling(const Lattice& lattice, const Shape& shape) {
    check_dim(lattice.dim(), shape.dim(), "is_tiling");
    if (static_cast<Coord>(shape.size()) != lattice.volume()) return false;
    std::vector<bool> seen(shape.size(), false);
    for (const auto& p : shape.points()) {
        const std::size_t r = lattice.residue_index(p);
        if (seen[r]) return false;
        seen[r] = true;
    }
    return true;
}

Tiling::Tiling(Lattice lattice, Shape shape) : lattice_(std::move(lattice)), shape_(std::move(shape)) {
    if (!is_tiling(lattice_, shape_)) throw std::invalid_argument("lattice does not tile the shape");
    table_.assign(shape_.size(), 0);
    for (std::size_t i = 0; i < shape_.size(); ++i) table_[lattice_.residue_index(shape_.points()[i])] = i;
}

Point center_of(const Lattice& lattice, const Shape& shape, const Point& p) {
    return Tiling(lattice, shape).center_of(p);
}

Lattice parse_lattice(std::istream& in) {
    const std::size_t dim = parse_dim_header(in);
    IntMatrix basis;
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string line = next_content_line(in);
        if (line.empty()) throw std::invalid_argument("lattice file: expected " + std::to_string(dim) + " basis rows");
        basis.push_back(parse_ints(line, dim));
    }
    if (!next_content_line(in).empty()) throw std::invalid_argument("lattice file: trailing content");
    return Lattice(std::move(basis));
}

Shape parse_shape(std::istream& in) {
    const std::size_t dim = parse_dim_header(in);
    std::vector<Point> pts;
    Point center = zero_point(dim);
    for (std::string line = next_content_line(in); !line.empty(); line = next_content_line(in)) {
        const auto pos = line.find_first_not_of(" \t");
        if (line.compare(pos, 6, "center") == 0) {
            center = parse_ints(line.substr(pos + 6), dim);
            continue;
        }
        pts.push_back(parse_ints(line, dim));
    }
    if (!is_zero(center)) {
        for (auto& p : pts) p = p - center;
    }
    return Shape(dim, std::move(pts));
}

Lattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open lattice file " + path);
    return parse_lattice(in);
}

Shape load_shape(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open shape file " + path);
    return parse_shape(in);
}

void write_lattice(std::ostream& out, const Lattice& lattice) {
    out << "dim " << lattice.dim() << "\n";
    for (const auto& row : lattice.basis()) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
}

void write_shape(std::ostream& out, const Shape& shape) {
    out << "dim " << shape.dim() << "\n";
    for (const auto& p : shape.points()) {
        for (std::size_t j = 0; j < p.size(); ++j) out << (j ? " " : "") << p[j];
        out << "\n";
    }
}

}  // namespace mdfold
