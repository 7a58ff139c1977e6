#include "toric/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace toric {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Key/value scanner over the comment-stripped payload lines.
class Scanner {
  public:
    Scanner(std::istream& in, std::string where) : where_(std::move(where)) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno_;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            const std::string line = trim(raw);
            if (!line.empty()) lines_.push_back({lineno_, line});
        }
    }

    bool done() const { return pos_ >= lines_.size(); }
    int line() const { return done() ? lineno_ : lines_[pos_].first; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(where_, line(), 1, what);
    }

    // a token-level failure on the most recently consumed line
    [[noreturn]] void fail_at(const std::string& token, const std::string& what) const {
        const std::size_t at = pos_ > 0 ? pos_ - 1 : pos_;
        int line = lineno_, column = 1;
        if (at < lines_.size()) {
            line = lines_[at].first;
            const auto hit = lines_[at].second.find(token);
            if (hit != std::string::npos) column = static_cast<int>(hit) + 1;
        }
        throw ParseError(where_, line, column, what);
    }

    // next line must be "key: value"; returns {key, value}
    std::pair<std::string, std::string> key_value() {
        if (done()) fail("unexpected end of file");
        const std::string& line = lines_[pos_].second;
        const auto colon = line.find(':');
        if (colon == std::string::npos) fail("expected 'key: value', got '" + line + "'");
        ++pos_;
        return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
    }

    // next line must be a bare data line (no colon)
    std::string data_line() {
        if (done()) fail("unexpected end of file inside a block");
        const std::string& line = lines_[pos_].second;
        if (line.find(':') != std::string::npos)
            fail("expected a data line, got '" + line + "'");
        ++pos_;
        return line;
    }

    const std::string& where() const { return where_; }

  private:
    std::string where_;
    std::vector<std::pair<int, std::string>> lines_;
    std::size_t pos_ = 0;
    int lineno_ = 0;
};

Int parse_int(Scanner& sc, const std::string& text) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        sc.fail_at(text, "not an integer: '" + text + "'");
    }
}

long parse_long(Scanner& sc, const std::string& text) {
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        sc.fail_at(text, "not an integer: '" + text + "'");
    }
}

Vec parse_ints(Scanner& sc, const std::string& text) {
    Vec out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(parse_int(sc, tok));
    return out;
}

std::vector<int> parse_index_list(Scanner& sc, const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(static_cast<int>(parse_long(sc, tok)));
    return out;
}

// Fields of one document, in declaration order, each consumed exactly once.
class Fields {
  public:
    Fields(Scanner& sc, std::string format) : sc_(sc) {
        auto [key, value] = sc.key_value();
        if (key != "format") sc.fail_at(key, "first field must be 'format'");
        if (value != format)
            sc.fail_at(value, "expected format '" + format + "', got '" + value + "'");
    }

    std::pair<std::string, std::string> next(const std::vector<std::string>& allowed) {
        auto [key, value] = sc_.key_value();
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            sc_.fail_at(key, "unknown field '" + key + "'");
        if (!seen_.insert(key).second) sc_.fail_at(key, "field '" + key + "' repeats");
        return {key, value};
    }

    bool saw(const std::string& key) const { return seen_.count(key) > 0; }
    void require(const std::vector<std::string>& keys) {
        for (const auto& k : keys)
            if (!saw(k)) sc_.fail("missing field '" + k + "'");
    }

  private:
    Scanner& sc_;
    std::set<std::string> seen_;
};

std::string resolve(const std::string& referencing_file, const std::string& target) {
    namespace fs = std::filesystem;
    fs::path t(target);
    if (t.is_absolute() || referencing_file == "-" || referencing_file.empty()) return target;
    return (fs::path(referencing_file).parent_path() / t).string();
}

}  // namespace

ParseError::ParseError(const std::string& where_, int line_, int column_,
                       const std::string& what_)
    : Error(where_ + ":" + std::to_string(line_) + ":" + std::to_string(column_) + ": " + what_),
      where(where_),
      line(line_),
      column(column_) {}

Vec parse_int_list(const std::string& text) {
    Vec out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        try {
            out.push_back(Int(tok));
        } catch (const std::exception&) {
            throw Error("not an integer: '" + tok + "'");
        }
    }
    return out;
}

std::string format_int_list(const Vec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

FanData read_fan_data(std::istream& in, const std::string& where) {
    Scanner sc(in, where);
    Fields fields(sc, "fan/1");
    FanData d;
    while (!sc.done()) {
        auto [key, value] = fields.next({"name", "rank", "rays", "max_cones"});
        if (key == "name") d.name = value;
        if (key == "rank") d.rank = static_cast<int>(parse_long(sc, value));
        if (key == "rays") {
            const long count = parse_long(sc, value);
            for (long i = 0; i < count; ++i) d.rays.push_back(parse_ints(sc, sc.data_line()));
        }
        if (key == "max_cones") {
            const long count = parse_long(sc, value);
            for (long i = 0; i < count; ++i)
                d.max_cones.push_back(parse_index_list(sc, sc.data_line()));
        }
    }
    fields.require({"rank", "rays", "max_cones"});
    return d;
}

FanPtr read_fan(std::istream& in, const std::string& where) {
    return Fan::make(read_fan_data(in, where));
}

FanPtr read_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fan file: " + path);
    return read_fan(in, path);
}

void write_fan(std::ostream& out, const Fan& fan) {
    out << "format: fan/1\n";
    out << "name: " << fan.name() << "\n";
    out << "rank: " << fan.rank() << "\n";
    out << "rays: " << fan.ray_count() << "\n";
    for (const Vec& r : fan.rays()) out << format_int_list(r) << "\n";
    out << "max_cones: " << fan.max_cones().size() << "\n";
    for (const auto& cone : fan.max_cones()) {
        for (std::size_t i = 0; i < cone.size(); ++i) out << (i ? " " : "") << cone[i];
        out << "\n";
    }
}

Divisor read_divisor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open divisor file: " + path);
    Scanner sc(in, path);
    Fields fields(sc, "divisor/1");
    std::string fan_path;
    Vec coeffs;
    while (!sc.done()) {
        auto [key, value] = fields.next({"fan", "coeffs"});
        if (key == "fan") fan_path = value;
        if (key == "coeffs") coeffs = parse_ints(sc, value);
    }
    fields.require({"fan", "coeffs"});
    FanPtr fan = read_fan_file(resolve(path, fan_path));
    if (coeffs.size() != fan->ray_count())
        sc.fail("coefficient count does not match the fan's ray count");
    return {std::move(fan), std::move(coeffs)};
}

void write_divisor(std::ostream& out, const std::string& fan_path, const Vec& coeffs) {
    out << "format: divisor/1\n";
    out << "fan: " << fan_path << "\n";
    out << "coeffs: " << format_int_list(coeffs) << "\n";
}

BundleFile read_bundle_data(std::istream& in, const std::string& where) {
    Scanner sc(in, where);
    Fields fields(sc, "bundle/1");
    BundleFile b;
    while (!sc.done()) {
        auto [key, value] = fields.next(
            {"name", "fiber", "base", "fiber_basis_cone", "base_basis_cone", "twist"});
        if (key == "name") b.name = value;
        if (key == "fiber") b.fiber_path = value;
        if (key == "base") b.base_path = value;
        if (key == "fiber_basis_cone") b.fiber_basis_cone = static_cast<int>(parse_long(sc, value));
        if (key == "base_basis_cone") b.base_basis_cone = static_cast<int>(parse_long(sc, value));
        if (key == "twist") {
            const std::vector<int> shape = parse_index_list(sc, value);
            if (shape.size() != 2 || shape[0] < 0 || shape[1] < 0)
                sc.fail("twist wants 'rows cols' then that many rows");
            b.twist = Mat(static_cast<std::size_t>(shape[0]), static_cast<std::size_t>(shape[1]));
            for (int i = 0; i < shape[0]; ++i) {
                const Vec row = parse_ints(sc, sc.data_line());
                if (row.size() != static_cast<std::size_t>(shape[1]))
                    sc.fail("twist row has wrong length");
                for (int j = 0; j < shape[1]; ++j)
                    b.twist(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                        row[static_cast<std::size_t>(j)];
            }
        }
    }
    fields.require({"fiber", "base", "twist"});
    return b;
}

FibrationBundle read_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open bundle file: " + path);
    BundleFile b = read_bundle_data(in, path);
    FanPtr fiber = read_fan_file(resolve(path, b.fiber_path));
    FanPtr base = read_fan_file(resolve(path, b.base_path));
    return build_fibration(std::move(fiber), std::move(base), std::move(b.twist),
                           b.fiber_basis_cone, b.base_basis_cone, b.name);
}

void write_bundle(std::ostream& out, const BundleFile& b) {
    out << "format: bundle/1\n";
    out << "name: " << b.name << "\n";
    out << "fiber: " << b.fiber_path << "\n";
    out << "base: " << b.base_path << "\n";
    out << "fiber_basis_cone: " << b.fiber_basis_cone << "\n";
    out << "base_basis_cone: " << b.base_basis_cone << "\n";
    out << "twist: " << b.twist.rows() << " " << b.twist.cols() << "\n";
    for (std::size_t i = 0; i < b.twist.rows(); ++i) {
        for (std::size_t j = 0; j < b.twist.cols(); ++j)
            out << (j ? " " : "") << b.twist(i, j);
        out << "\n";
    }
}

OrderedCollection read_collection(std::istream& in, const std::string& where, FanPtr fan) {
    Scanner sc(in, where);
    Fields fields(sc, "collection/1");
    std::string fan_path;
    std::vector<Vec> classes;
    while (!sc.done()) {
        auto [key, value] = fields.next({"fan", "classes"});
        if (key == "fan") fan_path = value;
        if (key == "classes") {
            const long count = parse_long(sc, value);
            for (long i = 0; i < count; ++i) classes.push_back(parse_ints(sc, sc.data_line()));
        }
    }
    fields.require({"fan", "classes"});
    if (!fan) fan = read_fan_file(resolve(where, fan_path));
    for (const Vec& c : classes)
        if (c.size() != fan->ray_count())
            sc.fail("class coefficient count does not match the fan's ray count");
    return make_collection(std::move(fan), std::move(classes));
}

OrderedCollection read_collection_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open collection file: " + path);
    return read_collection(in, path, nullptr);
}

void write_collection(std::ostream& out, const std::string& fan_path,
                      const OrderedCollection& c) {
    out << "format: collection/1\n";
    out << "fan: " << fan_path << "\n";
    out << "classes: " << c.classes.size() << "\n";
    for (const Vec& cls : c.classes) out << format_int_list(cls) << "\n";
}

}  // namespace toric
