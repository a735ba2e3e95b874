// Command-line front end: single-instance computation, exhaustive theorem
// verification sweeps, and class numbers. Exit codes: 0 = success / all
// matched, 1 = a sweep found a mismatch, 2 = usage or precondition error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polygauss/errors.hpp"
#include "polygauss/factorize.hpp"
#include "polygauss/gauss.hpp"
#include "polygauss/sweep.hpp"
#include "polygauss/symbols.hpp"

namespace {

using polygauss::BigInt;
using nlohmann::ordered_json;

ordered_json json_int(const BigInt& value) {
    if (value >= std::numeric_limits<int64_t>::min() && value <= std::numeric_limits<int64_t>::max())
        return value.convert_to<int64_t>();
    return value.str();  // too wide for a JSON number, keep it exact
}

std::vector<uint32_t> parse_code_list(const std::string& text) {
    std::vector<uint32_t> codes;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t comma = text.find(',', start);
        const size_t end = comma == std::string::npos ? text.size() : comma;
        const std::string item = text.substr(start, end - start);
        try {
            size_t used = 0;
            const unsigned long value = std::stoul(item, &used);
            if (used != item.size() || value > 0xffffffffUL) throw std::invalid_argument(item);
            codes.push_back(static_cast<uint32_t>(value));
        } catch (const std::exception&) {
            throw polygauss::Error(polygauss::errc::parse_error,
                                   "bad element code '" + item + "' in S");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return codes;
}

struct ComputeArgs {
    std::string field;
    std::string f;
    std::string s;
    int n = -1;
};

int run_compute(const ComputeArgs& args) {
    const auto ctx = polygauss::parse_field_spec(args.field);
    const polygauss::Poly f = polygauss::parse_poly(args.f, *ctx);
    if (f.is_zero()) throw polygauss::Error(polygauss::errc::bad_range, "zero polynomial");
    if (f.is_constant())
        throw polygauss::Error(polygauss::errc::constant_input,
                               "constant polynomial: G(f) = 1 by convention");

    ordered_json out;
    out["field"] = ctx->spec_string();
    out["q"] = ctx->q();
    out["f"] = polygauss::format_poly(f);
    out["G"] = polygauss::format_poly(polygauss::gauss_factorial(f));
    out["phi"] = json_int(polygauss::euler_phi(f));
    const polygauss::Factorization fac = polygauss::factor(f);
    ordered_json jfac;
    jfac["unit"] = fac.unit.code();
    jfac["factors"] = ordered_json::array();
    for (const polygauss::PrimePower& pp : fac.factors)
        jfac["factors"].push_back(
            {{"prime", polygauss::format_poly(pp.prime)}, {"exp", pp.exponent}});
    out["factorization"] = jfac;

    if (args.n >= 0) {
        out["n"] = args.n;
        out["G_n"] = polygauss::format_poly(polygauss::gauss_factorial_upto(args.n, f));
        if (args.n >= f.degree())
            out["G_n_predicted"] =
                polygauss::format_poly(polygauss::predict_gauss_factorial_upto(args.n, f));
    }

    if (!args.s.empty()) {
        const polygauss::HalfSystem s =
            polygauss::HalfSystem::make(*ctx, parse_code_list(args.s));
        out["S"] = s.to_string();
        out["delta"] = polygauss::half_system_product(s).code();
        out["M"] = polygauss::format_poly(polygauss::monic_half_product(f));
        const polygauss::Poly half = polygauss::gauss_half(f, s);
        out["G_half"] = polygauss::format_poly(half);
        const polygauss::OrderClassification cls = polygauss::classify_order(f, s);
        out["order"] = cls.order;
        out["clause"] = cls.clause;
        if (cls.witness.class_number_p1) out["h"] = json_int(*cls.witness.class_number_p1);
        ordered_json jw;
        jw["t"] = cls.witness.t;
        jw["q_mod_4"] = cls.witness.q_mod_4;
        jw["prime_degrees"] = cls.witness.prime_degrees;
        jw["delta"] = cls.witness.delta_code;
        jw["e1"] = cls.witness.e1;
        if (cls.witness.class_number_p1) jw["h"] = json_int(*cls.witness.class_number_p1);
        if (cls.witness.p1_symbol_p2) jw["P1_on_P2"] = *cls.witness.p1_symbol_p2;
        out["witnesses"] = jw;
        const polygauss::HalfValuePrediction pred = polygauss::predict_half_value(f, s);
        bool matches = false;
        if (const polygauss::Poly* residue = std::get_if<polygauss::Poly>(&pred)) {
            out["predicted"] = polygauss::format_poly(*residue);
            matches = half == *residue;
        } else {
            const auto tag = std::get<polygauss::ConstraintTag>(pred);
            out["predicted"] = polygauss::constraint_name(tag);
            const polygauss::Poly square = polygauss::mulmod(half, half, f);
            if (tag == polygauss::ConstraintTag::square_is_minus_one)
                matches = square == polygauss::divrem(polygauss::Poly::minus_one(*ctx), f).remainder;
            else
                matches = square.is_one() && !half.is_one() &&
                          half != polygauss::divrem(polygauss::Poly::minus_one(*ctx), f).remainder;
        }
        out["matches"] = matches;
    }

    std::cout << out.dump(2) << '\n';
    return 0;
}

struct VerifyArgs {
    std::string field;
    std::vector<std::string> theorems;
    int max_degree = 1;
    std::vector<std::string> s;
    std::string format = "json";
    std::string out_path;
    uint64_t budget = 10'000'000;
    int jobs = 1;
};

int run_verify(const VerifyArgs& args) {
    polygauss::SweepConfig config;
    config.ctx = polygauss::parse_field_spec(args.field);
    config.max_degree = args.max_degree;
    config.budget = args.budget;
    config.jobs = args.jobs;
    for (const std::string& spec : args.theorems) {
        size_t start = 0;
        while (start <= spec.size()) {
            const size_t comma = spec.find(',', start);
            const size_t end = comma == std::string::npos ? spec.size() : comma;
            const std::string name = spec.substr(start, end - start);
            const auto theorem = polygauss::theorem_from_name(name);
            if (!theorem)
                throw polygauss::Error(polygauss::errc::parse_error,
                                       "unknown theorem tag '" + name + "'");
            config.theorems.push_back(*theorem);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    bool any_needs_s = false;
    for (polygauss::Theorem t : config.theorems)
        any_needs_s |= polygauss::theorem_needs_half_system(t);
    if (!args.s.empty() && !any_needs_s)
        throw polygauss::Error(polygauss::errc::bad_range,
                               "--S has no effect on this theorem");
    for (const std::string& s : args.s) {
        if (s == "all") {
            config.all_half_systems = true;
        } else {
            config.explicit_half_systems.push_back(parse_code_list(s));
        }
    }

    polygauss::ReportFormat format = polygauss::ReportFormat::json;
    if (args.format == "csv")
        format = polygauss::ReportFormat::csv;
    else if (args.format != "json")
        throw polygauss::Error(polygauss::errc::parse_error, "--format is json or csv");

    const polygauss::SweepOutcome outcome = polygauss::run_sweep(config);
    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path, std::ios::binary);
        if (!file)
            throw polygauss::Error(polygauss::errc::bad_range,
                                   "cannot open output file " + args.out_path);
        polygauss::write_report(outcome.rows, format, file);
    } else {
        polygauss::write_report(outcome.rows, format, std::cout);
    }
    std::cerr << "instances: " << outcome.rows.size() << ", mismatches: " << outcome.mismatches
              << '\n';
    return outcome.mismatches == 0 ? 0 : 1;
}

struct ClassnumArgs {
    std::string field;
    std::string p;
};

int run_classnum(const ClassnumArgs& args) {
    const auto ctx = polygauss::parse_field_spec(args.field);
    const polygauss::Poly prime = polygauss::parse_poly(args.p, *ctx);
    const BigInt h = polygauss::class_number(prime);
    const BigInt total = (polygauss::norm(prime) - 1) / (ctx->q() - 1);
    ordered_json out;
    out["h"] = json_int(h);
    out["monic_total"] = json_int(total);
    out["nonresidues"] = json_int(polygauss::count_monic_nonresidues(prime));
    std::cout << out.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss factorials of polynomials over finite fields"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand(
        "compute", "G(f), Phi, factorization and the half-system data for one instance");
    compute->add_option("--field", compute_args.field, "field spec, e.g. p=3 or p=3,s=2,mod=1,0,1")
        ->required();
    compute->add_option("--f", compute_args.f, "polynomial, e.g. \"X^3+2*X+2\" or coeffs:2,2,0,1")
        ->required();
    compute->add_option("--S", compute_args.s, "half-system member codes, comma-joined");
    compute->add_option("--n", compute_args.n, "also compute G(n, f)");

    VerifyArgs verify_args;
    CLI::App* verify =
        app.add_subcommand("verify", "exhaustive sweep checking theorems against brute force");
    verify->add_option("--field", verify_args.field, "field spec")->required();
    verify->add_option("--theorem", verify_args.theorems,
                       "con1|con2|con3|extension|half_value|gpe|p1p2|p1p2p3 (repeatable)")
        ->required();
    verify->add_option("--max-degree", verify_args.max_degree, "largest deg f swept")->required();
    verify->add_option("--S", verify_args.s, "'all' or explicit member codes (repeatable)");
    verify->add_option("--format", verify_args.format, "json (default, JSON lines) or csv");
    verify->add_option("--out", verify_args.out_path, "report file (stdout when omitted)");
    verify->add_option("--budget", verify_args.budget,
                       "cap on estimated multiplications (default 10^7)");
    verify->add_option("--jobs", verify_args.jobs, "worker threads (default 1)");

    ClassnumArgs classnum_args;
    CLI::App* classnum =
        app.add_subcommand("classnum", "class number h(-P) via the finite character sum");
    classnum->add_option("--field", classnum_args.field, "field spec")->required();
    classnum->add_option("--P", classnum_args.p, "monic irreducible polynomial of odd degree")
        ->required();

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(compute_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (classnum->parsed()) return run_classnum(classnum_args);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const polygauss::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
