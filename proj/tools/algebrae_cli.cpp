// algebrae command-line front end: every library capability behind a
// subcommand, emitting deterministic JSON lines on stdout (CSV optional for
// the trace-style commands). Diagnostics go to stderr. Exit codes: 2 for
// parse problems, 3 for domain errors.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "algebrae/algebrae.hpp"

using namespace algebrae;

namespace {

struct cli_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Number and JSON formatting. Integral values print without a decimal point;
// everything else uses the shortest round-trip representation.

std::string fmt_num(double x) {
    if (std::rint(x) == x && std::abs(x) < 1e15) {
        long long n = static_cast<long long>(std::rint(x));
        if (n == 0) n = 0;  // collapse -0
        return std::to_string(n);
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// Variant that keeps one decimal on integral values ("4.0").
std::string fmt_num_decimal(double x) {
    if (std::rint(x) == x && std::abs(x) < 1e15) return fmt_num(x) + ".0";
    return fmt_num(x);
}

std::string jarr(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt_num(v[i]);
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Input parsing.

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw cli_parse_error("trailing characters in number: " + s);
        return v;
    } catch (const std::invalid_argument&) {
        throw cli_parse_error("not a number: " + s);
    } catch (const std::out_of_range&) {
        throw cli_parse_error("number out of range: " + s);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_double(tok));
    return out;
}

AlgebraId parse_alg(const std::string& s) {
    if (s == "R") return AlgebraId(Tag::R);
    if (s == "C") return AlgebraId(Tag::C);
    if (s == "D") return AlgebraId(Tag::D);
    if (s == "Cs") return AlgebraId(Tag::Cs);
    if (s == "H") return AlgebraId(Tag::H);
    if (s == "Hs") return AlgebraId(Tag::Hs);
    if (s == "CxC") return AlgebraId(Tag::CxC);
    if (s.rfind("Kt:", 0) == 0) {
        try {
            return AlgebraId::kt(parse_double(s.substr(3)));
        } catch (const bad_argument& e) {
            throw cli_parse_error(e.what());
        }
    }
    throw cli_parse_error("unknown algebra tag: " + s);
}

MetricConvention parse_conv(const std::string& s) {
    if (s == "plus") return MetricConvention::plus();
    if (s == "minus") return MetricConvention::minus();
    throw cli_parse_error("--conv must be plus or minus: " + s);
}

std::vector<double> parse_signature(const std::string& s) {
    std::vector<double> sig;
    if (s.find(',') != std::string::npos) {
        for (const auto& tok : split(s, ',')) {
            if (tok == "+" || tok == "+1" || tok == "1")
                sig.push_back(1.0);
            else if (tok == "-" || tok == "-1")
                sig.push_back(-1.0);
            else
                throw cli_parse_error("signature entries must be + or -: " + tok);
        }
    } else {
        for (char c : s) {
            if (c == '+')
                sig.push_back(1.0);
            else if (c == '-')
                sig.push_back(-1.0);
            else
                throw cli_parse_error(std::string("signature entries must be + or -: ") + c);
        }
    }
    return sig;
}

Scalar parse_scalar(const AlgebraId& alg, const std::string& s) {
    const auto c = parse_doubles(s);
    if (c.size() != alg.dim())
        throw cli_parse_error("expected " + std::to_string(alg.dim()) + " coefficients, got " +
                              std::to_string(c.size()));
    return Scalar(alg, std::span<const double>(c.data(), c.size()));
}

ModuleVector parse_vector(const HermitianSpace& sp, const std::string& s) {
    const auto toks = split(s, ';');
    if (toks.size() != sp.n)
        throw cli_parse_error("expected " + std::to_string(sp.n) + " entries, got " +
                              std::to_string(toks.size()));
    std::vector<Scalar> entries;
    for (const auto& tok : toks) entries.push_back(parse_scalar(sp.alg, tok));
    return ModuleVector(sp, std::move(entries));
}

// Complex literal: "3", "-1.5", "i", "-i", "4i", "1+2i", "0.5-0.25i".
std::complex<double> parse_complex(std::string s) {
    if (s.empty()) throw cli_parse_error("empty complex literal");
    if (s.back() != 'i') return {parse_double(s), 0.0};
    s.pop_back();
    // Find the split between real and imaginary parts, if any.
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            const std::string re = s.substr(0, k);
            std::string im = s.substr(k);
            if (im == "+") im = "1";
            if (im == "-") im = "-1";
            return {parse_double(re), parse_double(im)};
        }
    }
    if (s.empty() || s == "+") return {0.0, 1.0};
    if (s == "-") return {0.0, -1.0};
    return {0.0, parse_double(s)};
}

// "(x,y),(z,w)" -> the list of parenthesized tuples, each a list of strings.
std::vector<std::vector<std::string>> parse_tuples(const std::string& s) {
    std::vector<std::vector<std::string>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == ',') {
            ++i;
            continue;
        }
        if (s[i] != '(') throw cli_parse_error("expected '(' in tuple list: " + s);
        const std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw cli_parse_error("unbalanced '(' in: " + s);
        out.push_back(split(s.substr(i + 1, close - i - 1), ','));
        i = close + 1;
    }
    if (out.empty()) throw cli_parse_error("no tuples in: " + s);
    return out;
}

BidiscPoint parse_bidisc_point(const std::string& s, double tol) {
    const auto tuples = parse_tuples(s);
    if (tuples.size() != 2 || tuples[0].size() != 2 || tuples[1].size() != 2)
        throw cli_parse_error("bidisc points are written (a1,b1),(a2,b2)");
    return BidiscPoint(
        ModuleVector(bidisc_space(),
                     {cxc_scalar(parse_complex(tuples[0][0]), parse_complex(tuples[0][1])),
                      cxc_scalar(parse_complex(tuples[1][0]), parse_complex(tuples[1][1]))}),
        tol);
}

// ---------------------------------------------------------------------------
// Canonical output form: scale the first unit entry to one where possible,
// otherwise unit coefficient norm with a positive leading coefficient; tiny
// coefficients are snapped to zero for byte-stable output.

ModuleVector canonical_rep(const ModuleVector& u, double tol) {
    ModuleVector v = u;
    bool scaled = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (is_unit(u[i], tol)) {
            v = inverse(u[i], tol) * u;
            scaled = true;
            break;
        }
    }
    if (!scaled) {
        v = (1.0 / u.coeff_norm()) * u;
        for (double c : v.flat_coeffs()) {
            if (c > 0.0) break;
            if (c < 0.0) {
                v = -1.0 * v;
                break;
            }
        }
    }
    double top = 0.0;
    for (double c : v.flat_coeffs()) top = std::max(top, std::abs(c));
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto c = v[i].coeffs();
        for (double& x : c)
            if (std::abs(x) <= 1e-12 * top) x = 0.0;
        entries.emplace_back(v.space().alg, std::span<const double>(c.data(), c.size()));
    }
    return ModuleVector(v.space(), std::move(entries));
}

std::vector<double> flat(const ModuleVector& u) { return u.flat_coeffs(); }

// ---------------------------------------------------------------------------
// Command implementations. Each returns the process exit code.

double global_tol() {
    if (const char* env = std::getenv("ALGEBRAE_TOL")) {
        try {
            return parse_double(env);
        } catch (const cli_parse_error&) {
            throw cli_parse_error("ALGEBRAE_TOL is not a number");
        }
    }
    return 1e-9;
}

struct AlgebraArgs {
    std::string op;
    std::string alg;
    std::string a;
    std::string b;
};

int run_algebra(const AlgebraArgs& args) {
    const double tol = global_tol();
    const AlgebraId alg = parse_alg(args.alg);
    const Scalar a = parse_scalar(alg, args.a);
    if (args.op == "mul") {
        if (args.b.empty()) throw cli_parse_error("mul needs --b");
        std::cout << "{\"result\":" << jarr(mul(a, parse_scalar(alg, args.b)).coeffs()) << "}\n";
    } else if (args.op == "conj") {
        std::cout << "{\"result\":" << jarr(conj(a).coeffs()) << "}\n";
    } else if (args.op == "inv") {
        std::cout << "{\"result\":" << jarr(inverse(a, tol).coeffs()) << "}\n";
    } else if (args.op == "unit") {
        std::cout << "{\"unit\":" << (is_unit(a, tol) ? "true" : "false") << "}\n";
    } else if (args.op == "norm") {
        std::cout << "{\"result\":" << jarr(norm_form(a).coeffs()) << "}\n";
    } else {
        throw cli_parse_error("unknown algebra operation: " + args.op);
    }
    return 0;
}

struct SpaceArgs {
    std::string alg;
    std::string sig;
};

HermitianSpace parse_space(const SpaceArgs& sa) {
    const AlgebraId alg = parse_alg(sa.alg);
    try {
        return HermitianSpace(alg, parse_signature(sa.sig));
    } catch (const bad_argument& e) {
        throw cli_parse_error(e.what());
    }
}

int run_tance(const SpaceArgs& sa, const std::string& pstr, const std::string& qstr) {
    const double tol = global_tol();
    const HermitianSpace sp = parse_space(sa);
    const ProjPoint p(parse_vector(sp, pstr), tol);
    const ProjPoint q(parse_vector(sp, qstr), tol);
    const Scalar ta = tance(p, q, tol);
    if (sp.alg.tag == Tag::CxC) {
        std::cout << "{\"tance\":[" << fmt_num(ta.raw()[0]) << "," << fmt_num(ta.raw()[2])
                  << "]}\n";
    } else {
        std::cout << "{\"tance\":" << fmt_num(ta.raw()[0]) << "}\n";
    }
    return 0;
}

// Chart embeddings for the projective lines: sphere (C), cylinder (D),
// torus (Cs). Returns an empty vector when no chart applies.
std::vector<double> chart_coords(const ProjPoint& x) {
    const HermitianSpace& sp = x.space();
    if (sp.n != 2) return {};
    if (sp.alg.tag == Tag::C) {
        const auto n = hopf(x);
        return {n[0], n[1], n[2]};
    }
    if (sp.alg.tag == Tag::D) {
        const auto line = line_from_pd1(x);
        return {line.e.real(), line.e.imag(), line.s};
    }
    if (sp.alg.tag == Tag::Cs) {
        const auto sc = pcs1_split_coords(x.rep());
        const double phi1 = 2.0 * std::atan2(sc[2], sc[0]);
        const double phi2 = 2.0 * std::atan2(sc[3], sc[1]);
        return {(2.0 + std::cos(phi2)) * std::cos(phi1), (2.0 + std::cos(phi2)) * std::sin(phi1),
                std::sin(phi2)};
    }
    return {};
}

struct TraceArgs {
    SpaceArgs space;
    std::string p;
    std::string tp;
    std::string range = "0,6.283185307179586";
    int steps = 64;
    std::string format = "json";
};

int run_trace(const TraceArgs& args) {
    const double tol = global_tol();
    const HermitianSpace sp = parse_space(args.space);
    const ProjPoint p(parse_vector(sp, args.p), tol);
    const Tangent t = tangent(p, parse_vector(sp, args.tp), tol);
    const Geodesic g = make_geodesic(p, t, tol);
    const double tt = g_metric(g.dir, g.dir, MetricConvention::plus(), tol);
    const char* sign = g.family == GeodesicFamily::Null ? "null"
                       : (tt > 0 ? "positive" : "negative");
    const auto range = parse_doubles(args.range);
    if (range.size() != 2) throw cli_parse_error("--range wants two numbers a,b");
    if (args.steps < 1) throw cli_parse_error("--steps must be positive");

    const bool csv = args.format == "csv";
    if (csv) std::cout << "theta,family,sign,point,chart\n";
    for (int i = 0; i < args.steps; ++i) {
        const double theta =
            args.steps == 1
                ? range[1]
                : range[0] + (range[1] - range[0]) * static_cast<double>(i) / (args.steps - 1);
        const ProjPoint x = geodesic_point(g, theta, tol);
        const auto pt = flat(canonical_rep(x.rep(), tol));
        const auto chart = chart_coords(x);
        if (csv) {
            std::cout << fmt_num(theta) << "," << family_name(g.family) << "," << sign << ",\""
                      << jarr(pt) << "\",\"" << (chart.empty() ? "[]" : jarr(chart)) << "\"\n";
        } else {
            std::cout << "{\"theta\":" << fmt_num(theta) << ",\"point\":" << jarr(pt)
                      << ",\"family\":\"" << family_name(g.family) << "\",\"sign\":\"" << sign
                      << "\"";
            if (!chart.empty()) std::cout << ",\"chart\":" << jarr(chart);
            std::cout << "}\n";
        }
    }
    return 0;
}

struct SampleArgs {
    unsigned seed = 1;
    int jobs = 1;
    int samples = 100;
};

// Deterministic per-index generator regardless of the job count.
std::mt19937_64 indexed_rng(unsigned seed, int index) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 0x9e3779b97f4a7c15ull +
                        static_cast<std::uint64_t>(index) + 1);
    rng.discard(8);
    return rng;
}

template <typename F>
void parallel_for(int n, int jobs, F&& f) {
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += jobs) f(i);
        });
    for (auto& th : pool) th.join();
}

int run_curvature(const std::string& space, const std::string& family, double theta,
                  const std::string& conv_str, const SampleArgs& sargs) {
    const double tol = global_tol();
    // hc2 is hyperbolic and defaults to the minus convention.
    const MetricConvention conv =
        conv_str.empty() ? (space == "hc2" ? MetricConvention::minus()
                                           : MetricConvention::plus())
                         : parse_conv(conv_str);
    if (!family.empty()) {
        // The three explicit frames over the split algebras.
        const AlgebraId alg(Tag::Cs);
        const HermitianSpace sp = HermitianSpace::standard(alg, 3);
        const ProjPoint p(ModuleVector::basis(sp, 0));
        const ModuleVector e1 = ModuleVector::basis(sp, 1);
        const ModuleVector e2 = ModuleVector::basis(sp, 2);
        const Scalar j(alg, {0, 1});
        ModuleVector w = e2;
        if (family == "sinh")
            w = std::sinh(theta) * (j * e1) + std::cosh(theta) * e2;
        else if (family == "cosh")
            w = std::cosh(theta) * (j * e1) + std::sinh(theta) * e2;
        else if (family == "rot")
            w = j * (std::cos(theta) * e1 + std::sin(theta) * e2);
        else
            throw cli_parse_error("unknown curvature family: " + family);
        const auto K = sectional(Tangent(p, e1), Tangent(p, w), conv, tol);
        std::cout << "{\"K\":" << fmt_num_decimal(K.tensor) << ",\"theta\":" << fmt_num(theta)
                  << "}\n";
        return 0;
    }
    if (space == "ps1-split" || space == "pcs1" || space == "phs1" || space == "pc1") {
        const Tag tag = space == "phs1" ? Tag::Hs : (space == "pc1" ? Tag::C : Tag::Cs);
        const AlgebraId alg(tag);
        const HermitianSpace sp = HermitianSpace::standard(alg, 2);
        const ProjPoint p(ModuleVector::basis(sp, 0));
        const ModuleVector v = ModuleVector::basis(sp, 1);
        const Scalar rot = tag == Tag::Hs ? Scalar(alg, {0, 0, 1, 0}) : Scalar(alg, {0, 1});
        const auto K = sectional(Tangent(p, v), Tangent(p, rot * v), conv, tol);
        std::cout << "{\"K\":" << fmt_num_decimal(K.tensor) << "}\n";
        return 0;
    }
    if (space == "pd2") {
        const HermitianSpace sp = HermitianSpace::standard(AlgebraId(Tag::D), 3);
        const ProjPoint p(ModuleVector::basis(sp, 0));
        const auto K = sectional(Tangent(p, ModuleVector::basis(sp, 1)),
                                 Tangent(p, ModuleVector::basis(sp, 2)), conv, tol);
        std::cout << "{\"K\":" << fmt_num_decimal(K.tensor) << "}\n";
        return 0;
    }
    if (space == "hc2") {
        // Sectional range over random planes of the complex hyperbolic plane.
        const HermitianSpace sp(AlgebraId(Tag::C), {-1, 1, 1});
        std::vector<double> ks(sargs.samples, 0.0);
        parallel_for(sargs.samples, sargs.jobs, [&](int i) {
            auto rng = indexed_rng(sargs.seed, i);
            for (;;) {
                const ProjPoint p = random_regular_point(sp, rng, tol);
                if (real_part_sum(form(p.rep(), p.rep())) >= -0.2) continue;
                const Tangent u = tangent(p, random_module_vector(sp, rng), tol);
                const double a = g_metric(u, u, conv, tol);
                if (std::abs(a) < 1e-6) continue;
                const Tangent t1(p, (1.0 / std::sqrt(std::abs(a))) * u.vec());
                const Tangent v = tangent(p, random_module_vector(sp, rng), tol);
                const ModuleVector w =
                    v.vec() - (g_metric(v, t1, conv, tol) /
                               g_metric(t1, t1, conv, tol)) *
                                  t1.vec();
                const double b =
                    g_metric(Tangent(p, w), Tangent(p, w), conv, tol);
                if (std::abs(b) < 1e-6) continue;
                const Tangent t2(p, (1.0 / std::sqrt(std::abs(b))) * w);
                ks[i] = sectional(t1, t2, conv, tol).tensor;
                return;
            }
        });
        double kmin = ks[0], kmax = ks[0];
        for (double k : ks) {
            kmin = std::min(kmin, k);
            kmax = std::max(kmax, k);
        }
        std::cout << "{\"Kmin\":" << fmt_num(kmin) << ",\"Kmax\":" << fmt_num(kmax)
                  << ",\"samples\":" << sargs.samples << "}\n";
        return 0;
    }
    throw cli_parse_error("unknown curvature space: " + space);
}

int run_signature(const std::string& space, const SpaceArgs& sa, const std::string& conv_str,
                  const SampleArgs& sargs) {
    const double tol = global_tol();
    HermitianSpace sp = HermitianSpace::standard(AlgebraId(Tag::R), 2);
    if (!space.empty()) {
        if (space == "pr1")
            sp = HermitianSpace::standard(AlgebraId(Tag::R), 2);
        else if (space == "pc1")
            sp = HermitianSpace::standard(AlgebraId(Tag::C), 2);
        else if (space == "pd1")
            sp = HermitianSpace::standard(AlgebraId(Tag::D), 2);
        else if (space == "pcs1")
            sp = HermitianSpace::standard(AlgebraId(Tag::Cs), 2);
        else if (space == "ph1")
            sp = HermitianSpace::standard(AlgebraId(Tag::H), 2);
        else if (space == "phs1")
            sp = HermitianSpace::standard(AlgebraId(Tag::Hs), 2);
        else
            throw cli_parse_error("unknown signature space: " + space);
    } else if (!sa.alg.empty()) {
        sp = parse_space(sa);
    } else {
        throw cli_parse_error("signature needs --space or --alg/--sig");
    }
    const MetricConvention conv =
        conv_str.empty() ? MetricConvention::plus() : parse_conv(conv_str);
    const std::string pattern =
        signature_of_metric(sp, conv, sargs.samples, sargs.seed, tol);
    std::cout << "{\"signature\":\"" << pattern << "\"}\n";
    return 0;
}

int run_convert(const std::string& dir, const std::string& point, const std::string& pole,
                const std::string& line, const std::string& endpoints) {
    const double tol = global_tol();
    if (dir == "s2") {
        if (!point.empty()) {
            const HermitianSpace c2 = HermitianSpace::standard(AlgebraId(Tag::C), 2);
            const ProjPoint p(parse_vector(c2, point), tol);
            const auto n = hopf(p);
            std::cout << "{\"pole\":" << jarr({n[0], n[1], n[2]}) << "}\n";
            return 0;
        }
        if (!pole.empty()) {
            const auto n = parse_doubles(pole);
            if (n.size() != 3) throw cli_parse_error("--pole wants three numbers");
            const ProjPoint p = point_from_pole({n[0], n[1], n[2]}, tol);
            std::cout << "{\"point\":" << jarr(flat(canonical_rep(p.rep(), tol))) << "}\n";
            return 0;
        }
        throw cli_parse_error("convert s2 needs --point or --pole");
    }
    if (dir == "e2") {
        if (!point.empty()) {
            const HermitianSpace d2 = HermitianSpace::standard(AlgebraId(Tag::D), 2);
            const ProjPoint p(parse_vector(d2, point), tol);
            const auto l = line_from_pd1(p, tol);
            std::cout << "{\"e\":" << jarr({l.e.real(), l.e.imag()}) << ",\"s\":" << fmt_num(l.s)
                      << "}\n";
            return 0;
        }
        if (!line.empty()) {
            const auto v = parse_doubles(line);
            if (v.size() != 3) throw cli_parse_error("--line wants e_re,e_im,s");
            const ProjPoint p = pd1_from_line({{v[0], v[1]}, v[2]});
            std::cout << "{\"point\":" << jarr(flat(canonical_rep(p.rep(), tol))) << "}\n";
            return 0;
        }
        throw cli_parse_error("convert e2 needs --point or --line");
    }
    if (dir == "h2") {
        if (!point.empty()) {
            const auto tuples = parse_tuples(point);
            if (tuples.size() != 2 || tuples[0].size() != 2 || tuples[1].size() != 2)
                throw cli_parse_error("h2 points are written (a,a'),(b,b')");
            const ProjPoint u(
                pcs1_from_split(parse_double(tuples[0][0]), parse_double(tuples[0][1]),
                                parse_double(tuples[1][0]), parse_double(tuples[1][1])),
                tol);
            const auto g = h2_from_pcs1(u, tol);
            std::cout << "{\"A\":" << jarr(flat(canonical_rep(g.A.rep(), tol)))
                      << ",\"B\":" << jarr(flat(canonical_rep(g.B.rep(), tol)))
                      << ",\"ds\":" << jarr(flat(canonical_rep(g.ds_point.rep(), tol))) << "}\n";
            return 0;
        }
        if (!endpoints.empty()) {
            const auto parts = split(endpoints, ';');
            if (parts.size() != 2) throw cli_parse_error("--endpoints wants A0,A1,A2;B0,B1,B2");
            const auto A = parse_doubles(parts[0]);
            const auto B = parse_doubles(parts[1]);
            if (A.size() != 3 || B.size() != 3)
                throw cli_parse_error("--endpoints wants two 3-vectors");
            const ProjPoint u = pcs1_from_endpoints({A[0], A[1], A[2]}, {B[0], B[1], B[2]}, tol);
            const auto sc = pcs1_split_coords(canonical_rep(u.rep(), tol));
            std::cout << "{\"point\":[[" << fmt_num(sc[0]) << "," << fmt_num(sc[1]) << "],["
                      << fmt_num(sc[2]) << "," << fmt_num(sc[3]) << "]]}\n";
            return 0;
        }
        throw cli_parse_error("convert h2 needs --point or --endpoints");
    }
    throw cli_parse_error("unknown convert direction: " + dir);
}

int run_transition(const std::string& pstr, const std::string& qstr, int grid,
                   const std::string& format) {
    const double tol = global_tol();
    if (grid < 2) throw cli_parse_error("--grid must be at least 2");
    const bool csv = format == "csv";
    if (csv) std::cout << "t,sigma_sq,tance_kt,tance_hs,exact\n";
    for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / (grid - 1);
        const AlgebraId kt = AlgebraId::kt(t);
        const HermitianSpace sp = HermitianSpace::standard(kt, 2);
        const ProjPoint p(parse_vector(sp, pstr), tol);
        const ProjPoint q(parse_vector(sp, qstr), tol);
        const Scalar ta_kt = tance(p, q, tol);
        const ProjPoint pe = transition_embed(t, p, tol);
        const ProjPoint qe = transition_embed(t, q, tol);
        const Scalar ta_hs = tance(pe, qe, tol);
        const double sq = mul(sigma(t), sigma(t)).raw()[0];
        const bool exact = ta_kt.raw() == ta_hs.raw();
        if (csv) {
            std::cout << fmt_num(t) << "," << fmt_num(sq) << "," << fmt_num(ta_kt.raw()[0]) << ","
                      << fmt_num(ta_hs.raw()[0]) << "," << (exact ? "true" : "false") << "\n";
        } else {
            std::cout << "{\"t\":" << fmt_num(t) << ",\"sigma_sq\":" << fmt_num(sq)
                      << ",\"p_embedded\":" << jarr(flat(canonical_rep(pe.rep(), tol)))
                      << ",\"tance_kt\":" << fmt_num(ta_kt.raw()[0])
                      << ",\"tance_hs\":" << fmt_num(ta_hs.raw()[0])
                      << ",\"exact\":" << (exact ? "true" : "false") << "}\n";
        }
    }
    return 0;
}

int run_bidisc(const std::string& op, const std::string& point, const std::string& other) {
    const double tol = global_tol();
    const BidiscPoint u = parse_bidisc_point(point, tol);
    if (op == "classify") {
        const Scalar h = form(u.rep, u.rep);
        std::cout << "{\"ball\":\"" << ball_name(u.ball) << "\",\"h\":[" << fmt_num(h.raw()[0])
                  << "," << fmt_num(h.raw()[2]) << "]}\n";
        return 0;
    }
    if (op == "split") {
        const auto [p1, p2] = lambda_split(u, tol);
        std::cout << "{\"p1\":" << jarr(flat(canonical_rep(p1.rep(), tol)))
                  << ",\"p2\":" << jarr(flat(canonical_rep(p2.rep(), tol))) << "}\n";
        return 0;
    }
    if (op == "tau") {
        const BidiscPoint tu = tau(u, tol);
        std::cout << "{\"result\":[" << jarr(tu.rep[0].coeffs()) << "," << jarr(tu.rep[1].coeffs())
                  << "],\"ball\":\"" << ball_name(tu.ball) << "\"}\n";
        return 0;
    }
    if (op == "tance-pair") {
        if (other.empty()) throw cli_parse_error("tance-pair needs --q");
        const BidiscPoint v = parse_bidisc_point(other, tol);
        const auto [ta, tb] = tance_pair(u, v, tol);
        std::cout << "{\"tance\":[" << fmt_num(ta) << "," << fmt_num(tb) << "]}\n";
        return 0;
    }
    throw cli_parse_error("unknown bidisc operation: " + op);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective classic geometries over involutive real algebras"};
    app.require_subcommand(1);

    AlgebraArgs algebra_args;
    auto* algebra_cmd = app.add_subcommand("algebra", "scalar arithmetic");
    algebra_cmd->add_option("op", algebra_args.op, "mul|conj|inv|unit|norm")->required();
    algebra_cmd->add_option("--alg", algebra_args.alg, "algebra tag")->required();
    algebra_cmd->add_option("--a", algebra_args.a, "coefficients of a")->required();
    algebra_cmd->add_option("--b", algebra_args.b, "coefficients of b");

    SpaceArgs tance_space;
    std::string tance_p, tance_q;
    auto* tance_cmd = app.add_subcommand("tance", "projective two-point invariant");
    tance_cmd->add_option("--alg", tance_space.alg)->required();
    tance_cmd->add_option("--sig", tance_space.sig)->required();
    tance_cmd->add_option("--p", tance_p)->required();
    tance_cmd->add_option("--q", tance_q)->required();

    TraceArgs trace_args;
    auto* trace_cmd = app.add_subcommand("geodesic-trace", "sample a geodesic");
    trace_cmd->add_option("--alg", trace_args.space.alg)->required();
    trace_cmd->add_option("--sig", trace_args.space.sig)->required();
    trace_cmd->add_option("--p", trace_args.p)->required();
    trace_cmd->add_option("--tp", trace_args.tp)->required();
    trace_cmd->add_option("--range", trace_args.range);
    trace_cmd->add_option("--steps", trace_args.steps);
    trace_cmd->add_option("--format", trace_args.format)->check(CLI::IsMember({"json", "csv"}));

    std::string curv_space, curv_family;
    double curv_theta = 0.0;
    SampleArgs curv_samples;
    curv_samples.samples = 1000;
    auto* curv_cmd = app.add_subcommand("curvature", "sectional curvature data");
    curv_cmd->add_option("--space", curv_space, "ps1-split|pcs1|phs1|pc1|pd2|hc2");
    curv_cmd->add_option("--family", curv_family, "sinh|cosh|rot");
    curv_cmd->add_option("--theta", curv_theta);
    std::string curv_conv;
    curv_cmd->add_option("--conv", curv_conv, "plus|minus");
    curv_cmd->add_option("--samples", curv_samples.samples);
    curv_cmd->add_option("--seed", curv_samples.seed);
    curv_cmd->add_option("--jobs", curv_samples.jobs);

    std::string sig_space;
    SpaceArgs sig_spacedef;
    SampleArgs sig_samples;
    auto* sig_cmd = app.add_subcommand("signature", "metric sign pattern");
    sig_cmd->add_option("--space", sig_space, "pr1|pc1|pd1|pcs1|ph1|phs1");
    sig_cmd->add_option("--alg", sig_spacedef.alg);
    sig_cmd->add_option("--sig", sig_spacedef.sig);
    std::string sig_conv;
    sig_cmd->add_option("--conv", sig_conv, "plus|minus");
    sig_cmd->add_option("--samples", sig_samples.samples);
    sig_cmd->add_option("--seed", sig_samples.seed);
    sig_cmd->add_option("--jobs", sig_samples.jobs);

    std::string conv_dir, conv_point, conv_pole, conv_line, conv_endpoints;
    auto* conv_cmd = app.add_subcommand("convert", "point <-> oriented geodesic");
    conv_cmd->add_option("direction", conv_dir, "s2|e2|h2")->required();
    conv_cmd->add_option("--point", conv_point);
    conv_cmd->add_option("--pole", conv_pole);
    conv_cmd->add_option("--line", conv_line);
    conv_cmd->add_option("--endpoints", conv_endpoints);

    std::string trans_p, trans_q, trans_format = "json";
    int trans_grid = 21;
    auto* trans_cmd = app.add_subcommand("transition", "K_t sweep into the split-quaternions");
    trans_cmd->add_option("--p", trans_p)->required();
    trans_cmd->add_option("--q", trans_q)->required();
    trans_cmd->add_option("--grid", trans_grid);
    trans_cmd->add_option("--format", trans_format)->check(CLI::IsMember({"json", "csv"}));

    std::string bidisc_op, bidisc_point, bidisc_q;
    auto* bidisc_cmd = app.add_subcommand("bidisc", "projective bidisc operations");
    bidisc_cmd->add_option("op", bidisc_op, "classify|split|tau|tance-pair")->required();
    bidisc_cmd->add_option("--point", bidisc_point)->required();
    bidisc_cmd->add_option("--q", bidisc_q);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*algebra_cmd) return run_algebra(algebra_args);
        if (*tance_cmd) return run_tance(tance_space, tance_p, tance_q);
        if (*trace_cmd) return run_trace(trace_args);
        if (*curv_cmd)
            return run_curvature(curv_space, curv_family, curv_theta, curv_conv, curv_samples);
        if (*sig_cmd) return run_signature(sig_space, sig_spacedef, sig_conv, sig_samples);
        if (*conv_cmd)
            return run_convert(conv_dir, conv_point, conv_pole, conv_line, conv_endpoints);
        if (*trans_cmd) return run_transition(trans_p, trans_q, trans_grid, trans_format);
        if (*bidisc_cmd) return run_bidisc(bidisc_op, bidisc_point, bidisc_q);
    } catch (const cli_parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
