// Command-line front end: parse fan/divisor/bundle/collection files,
// dispatch to the library, and emit reports.
//
// Exit codes: 0 success and every requested verdict positive; 1 a verdict
// is negative; 2 parse error; 3 validation or construction error; 4 the
// twist-scale search cap was exhausted; 64 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/catalog.hpp"
#include "toric/cohomology.hpp"
#include "toric/collections.hpp"
#include "toric/io.hpp"
#include "toric/parallel.hpp"

using namespace toric;

namespace {

constexpr int kOk = 0;
constexpr int kVerdictNegative = 1;
constexpr int kParseError = 2;
constexpr int kInvalidObject = 3;
constexpr int kCapExhausted = 4;
constexpr int kUsage = 64;

FanPtr load_fan(const std::string& path) {
    if (path == "-") return read_fan(std::cin, "<stdin>");
    return read_fan_file(path);
}

std::vector<int> parse_ray_list(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream is(cleaned);
    std::vector<int> out;
    int v = 0;
    while (is >> v) out.push_back(v);
    if (!is.eof()) throw Error("cannot parse ray indices: '" + text + "'");
    return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

void print_report(std::ostream& os, const CollectionReport& rep) {
    os << "format: collection-report/1\n";
    os << "length: " << rep.length << "\n";
    os << "k0_rank: " << rep.k0_rank << "\n";
    os << "is_exceptional: " << yn(rep.is_exceptional) << "\n";
    os << "is_strongly_exceptional: " << yn(rep.is_strongly_exceptional) << "\n";
    os << "length_equals_k0_rank: " << yn(rep.length_equals_k0_rank) << "\n";
    os << "gram_unitriangular: " << yn(rep.gram_unitriangular) << "\n";
    os << "gram: " << rep.gram.size() << "\n";
    for (const auto& row : rep.gram) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
        os << "\n";
    }
}

void print_ledger(std::ostream& os, const Fan& fan, const CohomologyTable& t, bool structured) {
    if (structured) {
        os << "contributions: " << t.ledger.size() << "\n";
        // mask points dims(-1 ..)
        for (const auto& c : t.ledger) {
            os << c.pattern << " " << c.points;
            for (std::size_t k = 0; k < c.homology.dims.size(); ++k) os << " " << c.homology.dims[k];
            os << "\n";
        }
        return;
    }
    for (const auto& c : t.ledger) {
        os << "pattern {";
        bool first = true;
        for (std::size_t i = 0; i < fan.ray_count(); ++i)
            if (c.pattern & (1u << i)) {
                os << (first ? "" : " ") << i;
                first = false;
            }
        os << "}: points " << c.points << ", homology";
        for (int q = -1; q < fan.rank(); ++q)
            if (c.homology.dim(q) != 0) os << " [deg " << q << ": " << c.homology.dim(q) << "]";
        os << "\n";
    }
}

int cmd_fan_check(const std::string& path) {
    FanData data;
    if (path == "-")
        data = read_fan_data(std::cin, "<stdin>");
    else {
        std::ifstream in(path);
        if (!in) throw Error("cannot open fan file: " + path);
        data = read_fan_data(in, path);
    }
    const ValidationReport rep = Fan::check(data);
    if (!rep.ok()) {
        std::cout << rep.describe() << "\n";
        return kVerdictNegative;
    }
    const FanPtr fan = Fan::make(std::move(data));
    std::cout << "primitive: yes, smooth: yes, faces: yes, complete: yes, primitive collections: "
              << primitive_collections(*fan).size() << "\n";
    return kOk;
}

int cmd_cohomology(const std::string& fan_path, const std::vector<std::string>& coeff_args,
                   const std::string& divisor_path, bool ledger, bool structured) {
    Divisor d;
    if (!divisor_path.empty()) {
        d = read_divisor_file(divisor_path);
    } else {
        std::string joined;
        for (const auto& a : coeff_args) joined += a + " ";
        d.fan = load_fan(fan_path);
        d.coeffs = parse_int_list(joined);
    }
    if (d.coeffs.size() != d.fan->ray_count())
        throw Error("expected " + std::to_string(d.fan->ray_count()) + " coefficients, got " +
                    std::to_string(d.coeffs.size()));
    const CohomologyTable t = cohomology(d);
    if (structured) std::cout << "format: cohomology/1\n";
    std::cout << "h: " << format_int_list(t.h) << "\n";
    if (ledger || structured) print_ledger(std::cout, *d.fan, t, structured);
    return kOk;
}

int cmd_collection_check(const std::string& fan_path, const std::string& coll_path) {
    OrderedCollection coll;
    if (fan_path.empty()) {
        coll = read_collection_file(coll_path);
    } else {
        const FanPtr fan = load_fan(fan_path);
        std::ifstream in(coll_path);
        if (!in) throw Error("cannot open collection file: " + coll_path);
        coll = read_collection(in, coll_path, fan);
    }
    const CollectionReport rep = check_collection(coll);
    print_report(std::cout, rep);
    return rep.is_strongly_exceptional ? kOk : kVerdictNegative;
}

int cmd_fibration_build(const std::string& bundle_path, const std::string& out_path) {
    const FibrationBundle b = read_bundle_file(bundle_path);
    std::ostringstream os;
    write_fan(os, *b.total);
    os << "# ray_map fiber:";
    for (int i : b.fiber_to_total) os << " " << i;
    os << "\n# ray_map base:";
    for (int j : b.base_to_total) os << " " << j;
    os << "\n";
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write: " + out_path);
        out << os.str();
        std::cout << "wrote " << out_path << "\n";
    }
    return kOk;
}

int cmd_fibration_verify(const std::string& fan_path, const std::string& rays_text) {
    const FanPtr total = load_fan(fan_path);
    const FibrationVerification v = verify_fibration(total, parse_ray_list(rays_text));
    if (!v) {
        std::cout << "fibration: no\nreason: " << v.reason << "\n";
        return kVerdictNegative;
    }
    const FibrationBundle& b = *v.bundle;
    std::cout << "fibration: yes\n";
    std::cout << "fiber_rank: " << b.fiber->rank() << "\n";
    std::cout << "base_rank: " << b.base->rank() << "\n";
    std::cout << "twist: " << b.twist.rows() << " " << b.twist.cols() << "\n";
    for (std::size_t i = 0; i < b.twist.rows(); ++i) {
        for (std::size_t j = 0; j < b.twist.cols(); ++j) std::cout << (j ? " " : "") << b.twist(i, j);
        std::cout << "\n";
    }
    return kOk;
}

int cmd_fibration_collection(const std::string& bundle_path, const std::string& fiber_coll_path,
                             const std::string& base_coll_path, const std::string& step_text,
                             int cap) {
    const FibrationBundle b = read_bundle_file(bundle_path);
    auto load_coll = [](const std::string& path, const FanPtr& fan) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open collection file: " + path);
        return read_collection(in, path, fan);
    };
    const OrderedCollection fiber_coll = load_coll(fiber_coll_path, b.fiber);
    const OrderedCollection base_coll = load_coll(base_coll_path, b.base);

    Divisor step{b.base, Vec(b.base->ray_count())};
    if (step_text.empty())
        step.coeffs[static_cast<std::size_t>(b.base_pic.free_rays[0])] = 1;
    else
        step.coeffs = parse_int_list(step_text);
    if (step.coeffs.size() != b.base->ray_count())
        throw Error("step divisor wants one coefficient per base ray");

    const FibrationCollectionResult res =
        synthesize_fibration_collection(b, fiber_coll, base_coll, step, cap);
    std::cout << "t: " << res.t << "\n";
    std::cout << "classes: " << res.collection.classes.size() << "\n";
    for (const Vec& c : res.collection.classes) std::cout << format_int_list(c) << "\n";
    print_report(std::cout, res.report);
    std::cout << "fullness: " << res.fullness << "\n";
    return kOk;
}

int cmd_catalog(const std::string& name, const std::vector<int>& params, const std::string& dir) {
    const auto entry = catalog::make(name, params);
    if (!entry) {
        std::ostringstream os;
        os << "unknown catalog entry '" << name << "' with " << params.size()
           << " parameter(s); known:";
        for (const auto& n : catalog::names()) os << " " << n;
        throw Error(os.str());
    }
    if (dir.empty()) {
        write_fan(std::cout, *entry->main_fan());
        return kOk;
    }
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const std::string stem = entry->main_fan()->name();
    auto emit = [&](const std::string& file, const auto& writer) {
        const std::string path = (fs::path(dir) / file).string();
        std::ofstream out(path);
        if (!out) throw Error("cannot write: " + path);
        writer(out);
        std::cout << "wrote " << path << "\n";
    };
    if (entry->bundle) {
        const FibrationBundle& b = *entry->bundle;
        emit(stem + ".fiber.fan", [&](std::ostream& o) { write_fan(o, *b.fiber); });
        emit(stem + ".base.fan", [&](std::ostream& o) { write_fan(o, *b.base); });
        emit(stem + ".total.fan", [&](std::ostream& o) { write_fan(o, *b.total); });
        BundleFile bf;
        bf.name = b.total->name();
        bf.fiber_path = stem + ".fiber.fan";
        bf.base_path = stem + ".base.fan";
        bf.fiber_basis_cone = b.fiber_pic.base_cone;
        bf.base_basis_cone = b.base_pic.base_cone;
        bf.twist = b.twist;
        emit(stem + ".bundle", [&](std::ostream& o) { write_bundle(o, bf); });
        if (entry->reference)
            emit(stem + ".coll", [&](std::ostream& o) {
                write_collection(o, stem + ".total.fan", *entry->reference);
            });
    } else {
        emit(stem + ".fan", [&](std::ostream& o) { write_fan(o, **entry->fan); });
        if (entry->reference)
            emit(stem + ".coll", [&](std::ostream& o) {
                write_collection(o, stem + ".fan", *entry->reference);
            });
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for fans, line-bundle cohomology, toric fibrations, and "
                 "exceptional collections"};
    app.require_subcommand(1);

    unsigned jobs = 0;
    app.add_option("--jobs", jobs, "bound worker parallelism (default: available cores)");
    std::string format = "text";
    app.add_option("--format", format, "output format: text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* fan_check = app.add_subcommand("fan-check", "validate a fan file");
    std::string fc_path;
    fan_check->add_option("fan", fc_path, "fan file, or - for stdin")->required();

    auto* cohom = app.add_subcommand("cohomology", "line-bundle cohomology dimensions");
    std::string co_fan, co_divisor;
    std::vector<std::string> co_coeffs;
    bool co_ledger = false;
    cohom->add_option("fan", co_fan, "fan file, or - for stdin");
    cohom->add_option("coeffs", co_coeffs, "divisor coefficients, one per ray");
    cohom->add_option("--divisor", co_divisor, "divisor file (instead of fan + coeffs)");
    cohom->add_flag("--ledger", co_ledger, "print the per-pattern contribution ledger");

    auto* coll_check = app.add_subcommand("collection-check", "verify an ordered collection");
    std::string cc_first, cc_second;
    coll_check->add_option("fan-or-collection", cc_first, "fan file, or the collection file itself")
        ->required();
    coll_check->add_option("collection", cc_second, "collection file (when a fan is given)");

    auto* fib_build = app.add_subcommand("fibration-build", "assemble a total fan from a bundle file");
    std::string fb_bundle, fb_out;
    fib_build->add_option("bundle", fb_bundle, "bundle file")->required();
    fib_build->add_option("--out", fb_out, "write the total fan here instead of stdout");

    auto* fib_verify = app.add_subcommand("fibration-verify", "recognize a fiber-bundle structure");
    std::string fv_fan, fv_rays;
    fib_verify->add_option("fan", fv_fan, "total fan file, or - for stdin")->required();
    fib_verify->add_option("--fiber-rays", fv_rays, "candidate fiber ray indices, e.g. 0,1")
        ->required();

    auto* fib_coll = app.add_subcommand("fibration-collection",
                                        "synthesize a collection on a fibration total space");
    std::string fl_bundle, fl_fiber, fl_base, fl_step;
    int fl_cap = 8;
    fib_coll->add_option("bundle", fl_bundle, "bundle file")->required();
    fib_coll->add_option("fiber-collection", fl_fiber, "collection file on the fiber")->required();
    fib_coll->add_option("base-collection", fl_base, "collection file on the base")->required();
    fib_coll->add_option("--step", fl_step, "step divisor coefficients on the base rays");
    fib_coll->add_option("--cap", fl_cap, "twist-scale search cap (default 8)");

    auto* cat = app.add_subcommand("catalog", "emit a built-in fan or bundle");
    std::string ct_name, ct_dir;
    std::vector<int> ct_params;
    cat->add_option("name", ct_name, "pn | product | hirzebruch | p1-over-p2")->required();
    cat->add_option("params", ct_params, "integer parameters");
    cat->add_option("--dir", ct_dir, "write the complete file set into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    if (jobs > 0) set_default_jobs(jobs);
    const bool structured = format == "structured";

    try {
        if (fan_check->parsed()) return cmd_fan_check(fc_path);
        if (cohom->parsed()) {
            if (co_divisor.empty() && co_fan.empty())
                throw Error("cohomology wants a fan and coefficients, or --divisor");
            return cmd_cohomology(co_fan, co_coeffs, co_divisor, co_ledger, structured);
        }
        if (coll_check->parsed()) {
            if (cc_second.empty()) return cmd_collection_check("", cc_first);
            return cmd_collection_check(cc_first, cc_second);
        }
        if (fib_build->parsed()) return cmd_fibration_build(fb_bundle, fb_out);
        if (fib_verify->parsed()) return cmd_fibration_verify(fv_fan, fv_rays);
        if (fib_coll->parsed())
            return cmd_fibration_collection(fl_bundle, fl_fiber, fl_base, fl_step, fl_cap);
        if (cat->parsed()) return cmd_catalog(ct_name, ct_params, ct_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const SearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "best attempt at t = " << e.best_t << ":\n";
        print_report(std::cerr, e.best);
        return kCapExhausted;
    } catch (const FanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidObject;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidObject;
    }
    return kUsage;
}
