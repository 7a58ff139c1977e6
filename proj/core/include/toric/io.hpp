#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "toric/collections.hpp"
#include "toric/fan.hpp"
#include "toric/fibration.hpp"

namespace toric {

// Line-oriented structured text. '#' starts a comment, blank lines are
// skipped, every payload line is "key: value"; counted blocks (rays,
// max_cones, classes, twist) take exactly that many data lines. Unknown or
// repeated keys are rejected. Every format carries a version header.
struct ParseError : Error {
    ParseError(const std::string& where, int line, int column, const std::string& what);
    std::string where;
    int line;
    int column;
};

// ---- fan files (format: fan/1) ----
FanData read_fan_data(std::istream& in, const std::string& where);
FanPtr read_fan(std::istream& in, const std::string& where);
FanPtr read_fan_file(const std::string& path);
void write_fan(std::ostream& out, const Fan& fan);

// ---- divisor files (format: divisor/1); fan paths resolve relative to the
// referencing file ----
Divisor read_divisor_file(const std::string& path);
void write_divisor(std::ostream& out, const std::string& fan_path, const Vec& coeffs);

// ---- bundle files (format: bundle/1) ----
struct BundleFile {
    std::string name;
    std::string fiber_path;
    std::string base_path;
    int fiber_basis_cone = 0;
    int base_basis_cone = 0;
    Mat twist;
};
BundleFile read_bundle_data(std::istream& in, const std::string& where);
FibrationBundle read_bundle_file(const std::string& path);
void write_bundle(std::ostream& out, const BundleFile& b);

// ---- collection files (format: collection/1) ----
OrderedCollection read_collection_file(const std::string& path);
OrderedCollection read_collection(std::istream& in, const std::string& where, FanPtr fan);
void write_collection(std::ostream& out, const std::string& fan_path,
                      const OrderedCollection& c);

Vec parse_int_list(const std::string& text);
std::string format_int_list(const Vec& v);

}  // namespace toric
