#include "qhardy/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "qhardy/error.hpp"
#include "qhardy/hardy.hpp"
#include "qhardy/inner.hpp"
#include "qhardy/io.hpp"
#include "qhardy/outer.hpp"
#include "qhardy/series.hpp"
#include "qhardy/splitting.hpp"

namespace qhardy::cli {

namespace {

using io::json;

struct Options {
    std::optional<double> tol;
    std::optional<std::size_t> nodes;
    std::optional<std::size_t> degree;
    std::optional<std::size_t> truncate;
    std::optional<int> moments;
    std::optional<std::size_t> nmax;
    std::size_t slices = 64;
    std::string slice = "1,0,0";
    std::string point;
    std::string omega;
    std::string zeros;
    bool csv = false;
    bool moment = false;
    bool splitting = false;
    bool norm = false;
    bool factor = false;
    bool gram = false;
    std::uint64_t seed = 0;
    std::vector<std::string> files;
};

bool is_bad_input(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::NotInBall:
        case ErrorCode::FrameNotOrthogonal:
        case ErrorCode::InsufficientNodes:
        case ErrorCode::NotSlicePreserving:
            return true;
        default:
            return false;
    }
}

std::vector<double> parse_numbers(const std::string& text, const std::string& flag) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, flag + ": cannot parse '" + item + "' as a number");
        }
    }
    return v;
}

Quaternion parse_quaternion(const std::string& text, const std::string& flag) {
    const auto v = parse_numbers(text, flag);
    if (v.size() != 4) throw Error(ErrorCode::InvalidArgument, flag + ": expected \"w,x,y,z\"");
    return {v[0], v[1], v[2], v[3]};
}

UnitImaginary parse_slice(const std::string& text, std::uint64_t seed) {
    if (text == "random") {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g;
        return UnitImaginary::normalized(g(rng), g(rng), g(rng));
    }
    const auto v = parse_numbers(text, "--slice");
    if (v.size() != 3) throw Error(ErrorCode::InvalidArgument, "--slice: expected \"x,y,z\" or \"random\"");
    try {
        return UnitImaginary(v[0], v[1], v[2]);
    } catch (const Error&) {
        throw Error(ErrorCode::InvalidArgument, "--slice: x^2+y^2+z^2 must equal 1");
    }
}

std::vector<QSeries> read_inputs(const Options& opt, std::size_t count) {
    if (opt.files.size() != count) {
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(count) + " series file(s), got " + std::to_string(opt.files.size()));
    }
    std::vector<QSeries> out;
    for (const auto& f : opt.files) out.push_back(io::read_series_file(f));
    return out;
}

void emit_series(const QSeries& f, const Options& opt, std::ostream& out) {
    if (!opt.csv) {
        out << io::to_json(f).dump(2) << '\n';
        return;
    }
    out << "n,w,x,y,z\n";
    for (std::size_t n = 0; n <= f.degree(); ++n) {
        out << n << ',' << io::format_number(f[n].w) << ',' << io::format_number(f[n].x) << ','
            << io::format_number(f[n].y) << ',' << io::format_number(f[n].z) << '\n';
    }
}

void emit_json(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

int dispatch(const std::string& verb, const Options& opt, std::ostream& out) {
    if (verb == "star") {
        const auto in = read_inputs(opt, 2);
        emit_series(star_mul(in[0], in[1]), opt, out);
    } else if (verb == "conj") {
        emit_series(conjugate(read_inputs(opt, 1)[0]), opt, out);
    } else if (verb == "symm") {
        emit_series(symmetrize(read_inputs(opt, 1)[0]), opt, out);
    } else if (verb == "inv") {
        const QSeries f = read_inputs(opt, 1)[0];
        emit_series(star_inverse(f, opt.truncate.value_or(f.degree()), opt.tol.value_or(1e-12)), opt, out);
    } else if (verb == "eval") {
        if (opt.point.empty()) throw Error(ErrorCode::InvalidArgument, "--point is required");
        const Quaternion v = eval(read_inputs(opt, 1)[0], parse_quaternion(opt.point, "--point"));
        if (opt.csv) {
            out << "w,x,y,z\n" << io::format_number(v.w) << ',' << io::format_number(v.x) << ','
                << io::format_number(v.y) << ',' << io::format_number(v.z) << '\n';
        } else {
            emit_json({{"value", io::to_json(v)}}, out);
        }
    } else if (verb == "split") {
        const UnitImaginary I = parse_slice(opt.slice, opt.seed);
        emit_json(io::to_json(split(read_inputs(opt, 1)[0], I, orthogonal_unit(I))), out);
    } else if (verb == "inner") {
        const QSeries f = read_inputs(opt, 1)[0];
        const double tol = opt.tol.value_or(1e-7);
        if (int(opt.moment) + int(opt.splitting) + int(opt.norm) > 1) {
            throw Error(ErrorCode::InvalidArgument, "--moment, --splitting and --norm are exclusive");
        }
        InnerReport rep{};
        if (opt.splitting) {
            const UnitImaginary I = parse_slice(opt.slice, opt.seed);
            rep = is_inner_splitting(f, I, opt.nodes.value_or(next_pow2(2 * f.degree() + 1)), tol);
        } else if (opt.norm) {
            rep = is_inner_norm(f, BoundaryGrid::fibonacci(opt.slices, opt.nodes.value_or(1024)), tol);
        } else {
            rep = is_inner_moment(f, opt.moments.value_or(20), tol);
        }
        if (opt.csv) {
            out << "verdict,max_defect,method\n"
                << (rep.verdict ? "true" : "false") << ',' << io::format_number(rep.max_defect) << ','
                << to_string(rep.method) << '\n';
        } else {
            emit_json(io::to_json(rep), out);
        }
    } else if (verb == "zeros") {
        emit_json(io::to_json(zero_structure(read_inputs(opt, 1)[0], opt.tol.value_or(1e-8))), out);
    } else if (verb == "approximant") {
        const QSeries f = read_inputs(opt, 1)[0];
        const std::size_t n = opt.degree.value_or(1);
        if (opt.gram) {
            emit_json(io::to_json(gram(f, n)), out);
        } else {
            const ApproximantReport rep = optimal_approximant(f, n);
            if (opt.csv) {
                out << io::approximant_csv_header() << '\n' << io::approximant_csv_row(rep) << '\n';
            } else {
                emit_json(io::to_json(rep), out);
            }
        }
    } else if (verb == "cyclicity") {
        const CyclicityReport rep = cyclicity_report(read_inputs(opt, 1)[0], opt.nmax.value_or(30));
        if (opt.csv) {
            out << io::approximant_csv_header() << '\n';
            for (const auto& r : rep.reports) out << io::approximant_csv_row(r) << '\n';
        } else {
            json reports = json::array();
            for (const auto& r : rep.reports) reports.push_back(io::to_json(r));
            json target = nullptr;
            if (rep.has_target) {
                target = {{"inverse_at_0", io::to_json(rep.target_at_0)}, {"modulus", rep.target_modulus}};
            }
            emit_json({{"reports", reports}, {"target", target}}, out);
        }
    } else if (verb == "outer") {
        const QSeries f = read_inputs(opt, 1)[0];
        if (opt.factor) {
            const OuterFactor o =
                outer_factor_slice_preserving(f, opt.nodes.value_or(4096), opt.truncate.value_or(40));
            emit_json({{"outer", io::to_json(o.outer)}, {"skipped_nodes", o.skipped_nodes}}, out);
        } else {
            const OuterVerdict v = is_outer(f, opt.nodes.value_or(4096), opt.tol.value_or(1e-7));
            if (opt.csv) {
                out << "verdict,defect\n" << (v.verdict ? "true" : "false") << ',' << io::format_number(v.defect) << '\n';
            } else {
                emit_json({{"verdict", v.verdict}, {"defect", v.defect}}, out);
            }
        }
    } else if (verb == "meanvalue") {
        if (opt.point.empty()) throw Error(ErrorCode::InvalidArgument, "--point is required");
        const double d = mean_value_defect(read_inputs(opt, 1)[0], parse_quaternion(opt.point, "--point"),
                                           opt.nodes.value_or(2048));
        if (opt.csv) {
            out << "defect\n" << io::format_number(d) << '\n';
        } else {
            emit_json({{"defect", d}}, out);
        }
    } else if (verb == "blaschke") {
        read_inputs(opt, 0);
        std::vector<Quaternion> zs;
        std::stringstream ss(opt.zeros);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (!item.empty()) zs.push_back(parse_quaternion(item, "--zeros"));
        }
        emit_series(blaschke(zs, opt.truncate.value_or(60)), opt, out);
    } else if (verb == "mobius") {
        read_inputs(opt, 0);
        if (opt.omega.empty()) throw Error(ErrorCode::InvalidArgument, "--omega is required");
        emit_series(mobius(parse_quaternion(opt.omega, "--omega"), opt.truncate.value_or(100)), opt, out);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qhardy: slice regular functions on the quaternionic unit ball"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--tol", opt.tol, "Tolerance")->check(CLI::PositiveNumber);
    app.add_option("-M,--nodes,--angles", opt.nodes, "Boundary nodes per slice")->check(CLI::Range(std::size_t{1}, std::size_t{65536}));
    app.add_option("-n,--degree", opt.degree, "Approximant degree")->check(CLI::Range(std::size_t{0}, std::size_t{4096}));
    app.add_option("-N,--truncate", opt.truncate, "Truncation degree")->check(CLI::Range(std::size_t{0}, std::size_t{4096}));
    app.add_option("-K", opt.moments, "Moment count")->check(CLI::Range(1, 4096));
    app.add_option("--nmax", opt.nmax, "Largest approximant degree")->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
    app.add_option("--slices", opt.slices, "Slice directions in the boundary grid")->check(CLI::Range(std::size_t{1}, std::size_t{65536}));
    app.add_option("--slice", opt.slice, "Imaginary unit \"x,y,z\" or \"random\"");
    app.add_option("--point", opt.point, "Quaternion \"w,x,y,z\"");
    app.add_option("--omega", opt.omega, "Moebius parameter \"w,x,y,z\"");
    app.add_option("--zeros", opt.zeros, "Blaschke zeros \"w,x,y,z;w,x,y,z\"");
    app.add_option("--seed", opt.seed, "Seed for every random choice");
    app.add_flag("--csv", opt.csv, "CSV instead of JSON");
    app.add_flag("--moment", opt.moment, "inner: moment test (default)");
    app.add_flag("--splitting", opt.splitting, "inner: splitting test");
    app.add_flag("--norm", opt.norm, "inner: H2/Hinf norm test");
    app.add_flag("--factor", opt.factor, "outer: compute the outer factor of a real-coefficient series");
    app.add_flag("--gram", opt.gram, "approximant: dump the Gram system");

    const std::vector<std::pair<std::string, std::string>> verbs{
        {"star", "star product of two series"},
        {"conj", "regular conjugate"},
        {"symm", "symmetrization f * f^c"},
        {"inv", "star inverse truncated to -N"},
        {"eval", "evaluate at --point"},
        {"split", "splitting F + G J in the frame of --slice"},
        {"inner", "inner-function test"},
        {"zeros", "isolated and spherical zeros"},
        {"approximant", "optimal approximant of degree -n"},
        {"cyclicity", "approximant reports for n = 0..--nmax"},
        {"outer", "outer test (or --factor)"},
        {"meanvalue", "mean-value defect at --point"},
        {"blaschke", "Blaschke product of --zeros"},
        {"mobius", "Moebius map with parameter --omega"},
    };
    for (const auto& [name, help] : verbs) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("files", opt.files, "Series JSON files");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    std::string verb;
    for (const auto* sub : app.get_subcommands()) verb = sub->get_name();
    try {
        return dispatch(verb, opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_bad_input(e.code()) ? kBadInput : kNumerical;
    } catch (const io::json::exception& e) {
        err << "error: InvalidArgument: " << e.what() << '\n';
        return kBadInput;
    }
}

}  // namespace qhardy::cli
