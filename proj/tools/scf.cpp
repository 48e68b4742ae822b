// scf: command-line driver for the simplest-cubic-field toolkit.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scf/characters.hpp"
#include "scf/construct.hpp"
#include "scf/experiments.hpp"
#include "scf/fields.hpp"
#include "scf/lfunc.hpp"
#include "scf/numcore.hpp"
#include "scf/report.hpp"
#include "scf/sieve.hpp"

namespace {

using namespace scf;
using nlohmann::json;

unsigned default_threads() {
    if (const char* env = std::getenv("SCF_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    return 1;
}

u128 parse_big(const std::string& s) {
    // Accept "1e16"-style scientific literals as well as plain integers.
    auto epos = s.find_first_of("eE");
    if (epos == std::string::npos) return parse_u128(s);
    u128 mantissa = parse_u128(s.substr(0, epos));
    long exp = std::strtol(s.c_str() + epos + 1, nullptr, 10);
    if (exp < 0 || exp > 37) throw error("exponent out of range in: " + s);
    for (long i = 0; i < exp; ++i) {
        if (mantissa > (~u128(0)) / 10) throw error("value out of range: " + s);
        mantissa *= 10;
    }
    return mantissa;
}

void write_out(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error("cannot open output file: " + path);
    f << payload;
}

std::string splitting_name(characters::SplittingType s) {
    switch (s) {
        case characters::SplittingType::Split: return "split";
        case characters::SplittingType::Inert: return "inert";
        default: return "ramified";
    }
}

int cmd_field(u64 t, const std::string& format, const std::string& out_path) {
    u128 g = fields::g_eval(t);
    bool sqfree = numcore::is_squarefree(g);
    std::ostringstream os;
    json j;
    j["t"] = t;
    j["conductor"] = to_string(g);
    j["squarefree_conductor"] = sqfree;
    os << "t: " << t << "\n";
    os << "conductor: " << to_string(g) << "\n";
    os << "squarefree_conductor: " << (sqfree ? "true" : "false") << "\n";
    auto r = fields::roots(t);
    os << "roots: " << report::format_float(r.rho1) << " "
       << report::format_float(r.rho2) << " " << report::format_float(r.rho3) << "\n";
    j["roots"] = {report::format_float(r.rho1), report::format_float(r.rho2),
                  report::format_float(r.rho3)};
    {
        std::ostringstream sp;
        json jsp = json::object();
        for (u64 p : numcore::primes_up_to(100)) {
            auto s = characters::splitting_type(t, p);
            sp << p << "=" << splitting_name(s) << " ";
            jsp[std::to_string(p)] = splitting_name(s);
        }
        os << "splitting: " << sp.str() << "\n";
        j["splitting"] = jsp;
    }
    if (!sqfree) {
        os << "discriminant: none (conductor " << to_string(g) << " not squarefree)\n";
        os << "h: none\n";
        j["discriminant"] = nullptr;
        j["h"] = nullptr;
    } else {
        os << "discriminant: " << to_string(g * g) << "\n";
        j["discriminant"] = to_string(g * g);
        auto reg = fields::regulator(t);
        os << "regulator: " << report::format_float(reg.value) << "\n";
        j["regulator"] = report::format_float(reg.value);
        if (t % 3 != 0) {
            bool exact_ok = g <= 10000000;
            if (exact_ok) {
                auto chi = characters::build_character(t);
                auto ev = lfunc::l1_exact(chi);
                os << "absL_exact: " << report::format_float(ev.abs_value) << "\n";
                j["absL_exact"] = report::format_float(ev.abs_value);
            }
            auto ee = lfunc::l1_euler_truncated(t, 4.0L, std::sqrt(2.0L) * to_ld(g));
            os << "absL_euler: " << report::format_float(ee.abs_value) << "\n";
            j["absL_euler"] = report::format_float(ee.abs_value);
            auto cn = lfunc::class_number(t, exact_ok ? lfunc::LMethod::ExactGaussSum
                                                      : lfunc::LMethod::EulerTruncated);
            os << "h: " << cn.h << "\n";
            os << "h_raw: " << report::format_float(cn.raw) << "\n";
            j["h"] = cn.h;
            j["h_raw"] = report::format_float(cn.raw);
        }
    }
    write_out(out_path, format == "json" ? j.dump(2) + "\n" : os.str());
    return 0;
}

int cmd_char(u64 t, const std::string& format, const std::string& out_path) {
    auto chi = characters::build_character(t);
    std::ostringstream os;
    json j;
    j["t"] = t;
    j["conductor"] = chi.conductor;
    os << "t: " << t << "\nconductor: " << chi.conductor << "\n";
    json comps = json::array();
    for (const auto& c : chi.components) {
        os << "component: p=" << c.p << " generator=" << c.generator
           << " exponent=" << c.exponent << "\n";
        comps.push_back({{"p", c.p}, {"generator", c.generator}, {"exponent", c.exponent}});
    }
    j["components"] = comps;
    json values = json::object();
    std::ostringstream vs;
    for (u64 n : {2, 3, 5, 7, 11, 13}) {
        int cls = chi.chi_class(n);
        std::string name = cls < 0 ? "0" : (cls == 0 ? "1" : (cls == 1 ? "w" : "w2"));
        vs << "chi(" << n << ")=" << name << " ";
        values[std::to_string(n)] = name;
    }
    os << "values: " << vs.str() << "\n";
    j["values"] = values;
    write_out(out_path, format == "json" ? j.dump(2) + "\n" : os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplest cubic fields: class numbers, characters, sieves"};
    app.require_subcommand(1);

    std::string format = "csv", out_path;
    unsigned threads = default_threads();

    u64 t_arg = 1;
    auto* field_cmd = app.add_subcommand("field", "report on a single field K_t");
    field_cmd->add_option("--t", t_arg, "family parameter t")->required();
    field_cmd->add_option("--format", format, "csv|json");
    field_cmd->add_option("--out", out_path, "output path (default stdout)");

    u64 char_t = 1;
    auto* char_cmd = app.add_subcommand("char", "cubic character attached to K_t");
    char_cmd->add_option("--t", char_t, "family parameter t")->required();
    char_cmd->add_option("--format", format, "csv|json");
    char_cmd->add_option("--out", out_path, "output path");

    u64 t_max = 100;
    double a_param = 4.0;
    std::string backend = "exact";
    auto* census_cmd = app.add_subcommand("census", "per-field census up to t-max");
    census_cmd->add_option("--t-max", t_max, "largest t")->required();
    census_cmd->add_option("--A", a_param, "Euler truncation exponent");
    census_cmd->add_option("--backend", backend, "exact|euler");
    census_cmd->add_option("--format", format, "csv|json");
    census_cmd->add_option("--out", out_path, "output path");
    census_cmd->add_option("--threads", threads, "worker threads");

    unsigned k = 2;
    std::string x_str = "1e16";
    double epsilon = 0.29;
    auto* tuples_cmd = app.add_subcommand("tuples", "k-tuple construction and sieve run");
    tuples_cmd->add_option("--k", k, "tuple length")->required();
    tuples_cmd->add_option("--x", x_str, "scale x (discriminants land in [3x/4, 3x/2])");
    tuples_cmd->add_option("--epsilon", epsilon, "epsilon (prime bound = eps log x)");
    tuples_cmd->add_option("--A", a_param, "Euler truncation exponent");
    tuples_cmd->add_option("--format", format, "csv|json");
    tuples_cmd->add_option("--out", out_path, "output path");
    tuples_cmd->add_option("--threads", threads, "worker threads");

    u64 sx = 0, sa = 0, sq = 1;
    double salpha = 0.03, sfloor = 0;
    std::string offsets_str = "0", z_str;
    bool use_brute = false;
    auto* sieve_cmd = app.add_subcommand("sieve-count", "survivor count for a sieve spec");
    sieve_cmd->add_option("--x", sx, "window start")->required();
    sieve_cmd->add_option("--alpha", salpha, "window factor, in [0.02, 1]");
    sieve_cmd->add_option("--a", sa, "progression residue")->required();
    sieve_cmd->add_option("--q", sq, "progression modulus")->required();
    sieve_cmd->add_option("--offsets", offsets_str, "comma-separated deltas, first 0");
    sieve_cmd->add_option("--floor", sfloor, "small prime floor (eps log x)");
    sieve_cmd->add_option("--z", z_str, "override z (default q^2 (log x)^{4k})");
    sieve_cmd->add_flag("--brute-force", use_brute, "use the factorization oracle");

    try {
        app.parse(argc, argv);

        if (field_cmd->parsed()) return cmd_field(t_arg, format, out_path);
        if (char_cmd->parsed()) return cmd_char(char_t, format, out_path);

        if (census_cmd->parsed()) {
            lfunc::LMethod m;
            if (backend == "exact")
                m = lfunc::LMethod::ExactGaussSum;
            else if (backend == "euler")
                m = lfunc::LMethod::EulerTruncated;
            else
                throw error("unknown backend: " + backend + " (expected exact|euler)");
            if (t_max > 100) std::cerr << "census: " << t_max << " fields...\n";
            auto census = experiments::run_census(t_max, (long double)a_param, m, threads);
            write_out(out_path, format == "json" ? report::census_json(census)
                                                 : report::census_csv(census));
            return 0;
        }
        if (tuples_cmd->parsed()) {
            auto rep = experiments::run_tuples(k, parse_big(x_str), epsilon,
                                               (long double)a_param, threads);
            write_out(out_path, format == "json" ? report::tuples_json(rep)
                                                 : report::tuples_csv(rep));
            return 0;
        }
        if (sieve_cmd->parsed()) {
            std::vector<u64> offs;
            std::stringstream ss(offsets_str);
            std::string item;
            while (std::getline(ss, item, ',')) offs.push_back(std::stoull(item));
            auto spec = sieve::SieveSpec::make(sx, salpha, sa, sq, offs, sfloor);
            if (!z_str.empty()) {
                spec.z = parse_big(z_str);
                spec.z_overridden = true;
            }
            auto res = use_brute ? sieve::brute_force_survivors(spec)
                                 : sieve::sieve_survivors(spec);
            std::cout << "n_alpha: " << res.n_alpha << "\n";
            std::cout << "progression_size: " << res.progression_size << "\n";
            std::cout << "removed_stage1: " << res.removed_stage1 << "\n";
            std::cout << "removed_stage2: " << res.removed_stage2 << "\n";
            return 0;
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const scf::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const scf::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
