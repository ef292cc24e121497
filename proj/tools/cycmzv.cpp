// Command-line front end: eval, verify, dimtable, limit.
//
// Exit codes: 0 success, 1 relation failed, 2 usage or parse error,
// 3 numeric non-convergence.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cycmzv/finite_values.hpp"
#include "cycmzv/numeric.hpp"
#include "cycmzv/parallel.hpp"
#include "cycmzv/primes.hpp"
#include "cycmzv/qseries.hpp"
#include "cycmzv/relations.hpp"
#include "cycmzv/serialize.hpp"

using namespace cycmzv;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kDefaultKmaxCeiling = 10;
constexpr int kExtendedKmaxCeiling = 12;

// "lo..hi", a single value, or a comma list (min..max of the list is not
// implied; the list is returned as given).
std::vector<long> parse_values(const std::string& text, const char* what) {
    std::vector<long> out;
    try {
        const auto dots = text.find("..");
        if (dots != std::string::npos) {
            const long lo = std::stol(text.substr(0, dots));
            const long hi = std::stol(text.substr(dots + 2));
            if (hi < lo) throw ParseError("");
            for (long v = lo; v <= hi; ++v) out.push_back(v);
            return out;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid ") + what + " '" + text + "'");
    }
    if (out.empty()) throw ParseError(std::string("empty ") + what);
    return out;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (long v : parse_values(text, "prime range"))
        if (v >= 2 && is_prime(static_cast<std::uint64_t>(v))) out.push_back(static_cast<std::uint64_t>(v));
    if (out.empty()) throw ParseError("no primes in '" + text + "'");
    return out;
}

std::vector<int> parse_schedule(const std::string& text) {
    if (std::count(text.begin(), text.end(), ':') == 2) {
        int start = 0, factor = 0, count = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(text);
        if (!(is >> start >> c1 >> factor >> c2 >> count) || c1 != ':' || c2 != ':')
            throw ParseError("invalid schedule '" + text + "'");
        return geometric_schedule(start, factor, count);
    }
    std::vector<int> out;
    for (long v : parse_values(text, "schedule")) out.push_back(static_cast<int>(v));
    return out;
}

Ring parse_ring(const std::string& s) {
    if (s == "A") return Ring::A;
    if (s == "Acyc") return Ring::Acyc;
    throw ParseError("unknown ring '" + s + "' (expected A or Acyc)");
}

int digits_for(int bits) { return std::max(6, static_cast<int>(std::floor(bits * 0.30103)) - 2); }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- eval

struct EvalOptions {
    std::string index;
    int n = 0;
    bool star = false;
    bool exact = false;
    bool numeric = false;
    int precision = 128;
    std::string format = "text";
};

int run_eval(const EvalOptions& o) {
    const Index k = parse_index(o.index);
    if (o.n < 1) throw ParseError("--n must be >= 1");
    const SumMode mode = o.star ? SumMode::Star : SumMode::Plain;
    if (o.numeric) {
        const BigComplex v = z_numeric(k, o.n, o.precision, mode);
        const int digits = digits_for(o.precision);
        if (o.format == "json") {
            Json j{{"index", format_index(k)}, {"n", o.n}, {"star", o.star}, {"precision", o.precision}};
            j["value"] = to_json(v, digits);
            print_json(j);
        } else if (o.format == "csv") {
            std::cout << "re,im\n" << format_float(v.re, digits) << ',' << format_float(v.im, digits) << '\n';
        } else {
            std::cout << format_float(v.re, digits) << " + " << format_float(v.im, digits) << " i\n";
        }
        return 0;
    }
    const CycloElem v = o.star ? z_star_exact(k, o.n) : z_exact(k, o.n);
    if (o.format == "json") {
        Json j{{"index", format_index(k)}, {"star", o.star}};
        j["value"] = to_json(v);
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << "power,coeff\n";
        const auto c = v.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) std::cout << i << ',' << format_rational(c[i]) << '\n';
    } else {
        const auto c = v.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << format_rational(c[i]);
        std::cout << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string target;
    std::string primes;
    std::string n_range;
    std::string ring = "A";
    bool star = false;
    int weight = 0;
    int jobs = 0;
    std::string format = "text";
};

struct NamedRelation {
    std::string label;
    HPoly combo;
    SumMode mode;
};

// Exact check of the degree-five star identity in Q(zeta_n).
bool star5_exact(int n) {
    const CycloElem omz = one_minus_zeta(n);
    const CycloElem lhs = z_star_exact(Index{4, 1}, n) * Rational(2) + z_star_exact(Index{3, 2}, n);
    const Integer nn(n);
    const Rational c5 = Rational((nn * nn * nn * nn - 1) * (nn + 5), Integer(1440));
    const Rational c2 = Rational(nn + 2, Integer(3));
    CycloElem rhs = omz.pow(5) * c5;
    rhs += omz.pow(2) * z_star_exact(Index{2, 1}, n) * c2;
    return lhs == rhs;
}

bool duality_exact(const Index& k, int n) {
    const CycloElem a = z_star_exact(k, n);
    CycloElem b = z_star_exact(dual_reverse(k), n);
    if (k.weight() % 2 == 0) b = -b;
    return a == b;
}

int run_verify(const VerifyOptions& o) {
    const Ring ring = parse_ring(o.ring);
    const SumMode file_mode = o.star ? SumMode::Star : SumMode::Plain;
    std::vector<NamedRelation> relations;
    std::vector<int> ns;
    if (!o.n_range.empty())
        for (long v : parse_values(o.n_range, "n range")) {
            if (v < 1) throw ParseError("--n values must be >= 1");
            ns.push_back(static_cast<int>(v));
        }
    const bool want_primes = !o.primes.empty();
    if (!want_primes && ns.empty()) throw ParseError("verify needs --primes and/or --n");

    bool ok = true;
    Json exact_json = Json::array();
    auto exact_pass = [&](const std::string& label, int n, bool pass) {
        ok = ok && pass;
        if (o.format == "json")
            exact_json.push_back(Json{{"relation", label}, {"n", n}, {"holds", pass}});
        else if (!pass)
            std::cout << label << ": fails exactly at n=" << n << '\n';
    };

    if (o.target == "duality" || o.target == "double-shuffle") {
        if (o.weight < 1) throw ParseError(o.target + " needs --weight >= 1");
        if (o.target == "duality") {
            for (const auto& k : indices_of_weight(o.weight)) {
                relations.push_back({"duality(" + format_index(k) + ")", duality_element(k), SumMode::Star});
                for (int n : ns) exact_pass("duality(" + format_index(k) + ")", n, duality_exact(k, n));
            }
        } else {
            if (!ns.empty()) throw ParseError("double-shuffle relations only hold modulo p; use --primes");
            int i = 0;
            for (auto& e : relation_family(o.weight, o.jobs))
                relations.push_back({"relation#" + std::to_string(i++), std::move(e), SumMode::Star});
        }
    } else if (o.target == "hoffman-4-1") {
        HPoly e = HPoly::word(Index{4, 1});
        e -= HPoly::word(Index{3, 1, 1}, Rational(2));
        if (!ns.empty()) throw ParseError("hoffman-4-1 is a mod-p relation; use --primes");
        relations.push_back({"hoffman-4-1", e, SumMode::Plain});
    } else if (o.target == "star-5") {
        for (int n : ns) exact_pass("star-5", n, star5_exact(n));
        HPoly e = HPoly::word(Index{4, 1}, Rational(2));
        e += HPoly::word(Index{3, 2});
        relations.push_back({"star-5", e, SumMode::Star});
    } else {
        std::ifstream in(o.target);
        if (!in) throw ParseError("no builtin or readable file named '" + o.target + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        if (!ns.empty()) {
            const HPoly e = parse_hpoly(ss.str());
            for (int n : ns) exact_pass(o.target, n, z_hpoly_exact(e, n, file_mode).is_zero());
            relations.push_back({o.target, e, file_mode});
        } else {
            relations.push_back({o.target, parse_hpoly(ss.str()), file_mode});
        }
    }

    Json reports = Json::array();
    if (want_primes) {
        const auto primes = parse_primes(o.primes);
        for (const auto& r : relations) {
            const RelationReport rep = verify_relation(r.combo, ring, primes, r.mode, o.jobs);
            ok = ok && rep.holds();
            if (o.format == "json") {
                Json j = to_json(rep);
                j["relation"] = r.label;
                reports.push_back(std::move(j));
            } else if (o.format == "csv") {
                if (reports.empty()) std::cout << "relation,prime,status\n";
                reports.push_back(true);
                for (const auto& [p, pr] : rep.primes) std::cout << r.label << ',' << p << ',' << to_string(pr.status) << '\n';
            } else {
                std::cout << r.label << ": " << (rep.holds() ? "holds" : "FAILS") << " (zero "
                          << rep.count(PrimeStatus::Zero) << ", nonzero " << rep.count(PrimeStatus::Nonzero)
                          << ", excluded " << rep.count(PrimeStatus::Excluded) << ")\n";
                for (const auto& [p, pr] : rep.primes)
                    if (pr.status == PrimeStatus::Nonzero) std::cout << "  nonzero at p=" << p << '\n';
            }
        }
    }
    if (o.format == "json") {
        Json out{{"holds", ok}};
        if (!ns.empty()) out["exact"] = std::move(exact_json);
        if (want_primes) out["modular"] = std::move(reports);
        print_json(out);
    } else if (o.format == "text") {
        if (!ns.empty()) std::cout << "exact checks: " << ns.size() << " value(s) of n\n";
        std::cout << (ok ? "verified" : "FAILED") << '\n';
    }
    return ok ? 0 : kExitFailed;
}

// ---------------------------------------------------------------- dimtable

struct DimOptions {
    int kmax = 8;
    std::string primes;
    std::string mode = "bounds";
    bool extended = false;
    int jobs = 0;
    std::string format = "text";
};

int run_dimtable(const DimOptions& o) {
    const int ceiling = o.extended ? kExtendedKmaxCeiling : kDefaultKmaxCeiling;
    if (o.kmax < 0) throw ParseError("--kmax must be >= 0");
    if (o.kmax > ceiling)
        throw ParseError("--kmax " + std::to_string(o.kmax) + " exceeds " + std::to_string(ceiling) +
                         (o.extended ? "" : " (use --extended for 11 and 12)"));
    const bool bounds = o.mode == "bounds" || o.mode == "both";
    const bool observed = o.mode == "observed" || o.mode == "both";
    if (!bounds && !observed) throw ParseError("--mode must be bounds, observed or both");
    std::vector<std::uint64_t> primes;
    if (observed) {
        if (o.primes.empty()) throw ParseError("--mode " + o.mode + " needs --primes");
        primes = parse_primes(o.primes);
    }

    std::vector<DimensionRow> rows;
    if (bounds) rows = dimension_upper_bounds(o.kmax, o.jobs);
    std::vector<std::vector<std::size_t>> obs(static_cast<std::size_t>(o.kmax) + 1);
    if (observed) {
        std::vector<std::pair<int, std::uint64_t>> jobs_list;
        for (int k = 0; k <= o.kmax; ++k)
            for (auto p : primes) jobs_list.emplace_back(k, p);
        const auto dims = parallel_map(
            jobs_list, [](const auto& kp) { return observed_dimension(kp.first, static_cast<int>(kp.second)); },
            o.jobs);
        for (std::size_t i = 0; i < jobs_list.size(); ++i) obs[static_cast<std::size_t>(jobs_list[i].first)].push_back(dims[i]);
    }

    if (o.format == "json") {
        Json out = Json::array();
        for (int k = 0; k <= o.kmax; ++k) {
            Json row{{"k", k}, {"num_indices", k == 0 ? 1 : (std::size_t{1} << (k - 1))}};
            if (bounds) {
                row["relation_rank"] = rows[k].relation_rank;
                row["upper_bound"] = rows[k].upper_bound;
                row["certified"] = rows[k].certified;
            }
            if (observed) {
                Json o_json = Json::object();
                for (std::size_t i = 0; i < primes.size(); ++i) o_json[std::to_string(primes[i])] = obs[k][i];
                row["observed"] = std::move(o_json);
            }
            out.push_back(std::move(row));
        }
        print_json(out);
        return 0;
    }
    if (bounds && !observed) {
        std::cout << dimension_table_csv(rows);
        return 0;
    }
    std::cout << "k,num_indices";
    if (bounds) std::cout << ",relation_rank,upper_bound";
    for (auto p : primes) std::cout << ",observed_p" << p;
    std::cout << '\n';
    for (int k = 0; k <= o.kmax; ++k) {
        std::cout << k << ',' << (k == 0 ? 1 : (std::size_t{1} << (k - 1)));
        if (bounds) std::cout << ',' << rows[k].relation_rank << ',' << rows[k].upper_bound;
        for (auto d : obs[k]) std::cout << ',' << d;
        std::cout << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- limit

struct LimitOptions {
    std::string index;
    std::string schedule = "1000:2:7";
    int precision = 128;
    bool star = false;
    int jobs = 0;
    std::string format = "text";
};

int run_limit(const LimitOptions& o) {
    const Index k = parse_index(o.index);
    const auto schedule = parse_schedule(o.schedule);
    const XiEstimate e = xi_approx(k, schedule, o.precision, o.star ? SumMode::Star : SumMode::Plain, o.jobs);
    const int digits = 16;
    if (o.format == "json") {
        Json j{{"index", format_index(k)}, {"star", o.star}, {"schedule", schedule}};
        j.update(to_json(e, digits));
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << "re,im,error_bar,converged,log_order\n"
                  << format_float(e.estimate.re, digits) << ',' << format_float(e.estimate.im, digits) << ','
                  << e.error_bar << ',' << (e.converged ? "true" : "false") << ',' << e.log_order << '\n';
    } else {
        std::cout << "estimate:  " << format_float(e.estimate.re, digits) << " + " << format_float(e.estimate.im, digits)
                  << " i\n"
                  << "error bar: " << e.error_bar << '\n'
                  << "model:     c0 + sum_{j<=" << e.log_order << "} c (log n)^j / n\n"
                  << "converged: " << (e.converged ? "yes" : "no") << '\n';
        std::cout << "window differences:";
        for (double w : e.window_errors) std::cout << ' ' << w;
        std::cout << '\n';
    }
    return e.converged ? 0 : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated multiple harmonic q-series at roots of unity"};
    app.require_subcommand(1);
    int jobs = default_jobs();
    std::string format = "text";
    app.add_option("--jobs", jobs, "Worker threads (default: CYCMZV_JOBS or all cores)");
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--jobs", jobs, "Worker threads");
    };

    EvalOptions eval;
    auto* ev = app.add_subcommand("eval", "Evaluate z_n(k) or z*_n(k) at zeta_n = e^{2 pi i/n}");
    ev->add_option("index", eval.index, "Index k1,k2,...")->required();
    ev->add_option("--n", eval.n, "Level n")->required();
    ev->add_flag("--star", eval.star, "Weak inequalities (star version)");
    auto* ex = ev->add_flag("--exact", eval.exact, "Exact coefficients in the power basis (default)");
    ev->add_flag("--numeric", eval.numeric, "Complex value in big-float arithmetic")->excludes(ex);
    ev->add_option("--precision", eval.precision, "Bits of precision for --numeric")->check(CLI::Range(16, 1 << 16));
    add_format(ev);

    VerifyOptions ver;
    auto* vr = app.add_subcommand("verify", "Check a relation modulo primes and/or exactly at levels n");
    vr->add_option("relation", ver.target, "Builtin (duality, double-shuffle, hoffman-4-1, star-5) or JSON file")
        ->required();
    vr->add_option("--primes", ver.primes, "Primes: lo..hi or a comma list");
    vr->add_option("--n", ver.n_range, "Levels for exact checks: lo..hi or a comma list");
    vr->add_option("--ring", ver.ring, "A or Acyc")->check(CLI::IsMember({"A", "Acyc"}));
    vr->add_flag("--star", ver.star, "Evaluate a relation file with star values");
    vr->add_option("--weight", ver.weight, "Weight for duality and double-shuffle");
    add_format(vr);

    DimOptions dim;
    auto* dt = app.add_subcommand("dimtable", "Dimension bounds and observed dimensions by weight");
    dt->add_option("--kmax", dim.kmax, "Largest weight");
    dt->add_option("--primes", dim.primes, "Primes for observed dimensions");
    dt->add_option("--mode", dim.mode, "bounds, observed or both")->check(CLI::IsMember({"bounds", "observed", "both"}));
    dt->add_flag("--extended", dim.extended, "Allow weights 11 and 12");
    add_format(dt);

    LimitOptions lim;
    auto* lm = app.add_subcommand("limit", "Extrapolate lim z_n(k; e^{2 pi i/n}) as n grows");
    lm->add_option("index", lim.index, "Index k1,k2,...")->required();
    lm->add_option("--schedule,--geometric", lim.schedule, "n values: start:factor:count or a comma list");
    lm->add_option("--precision", lim.precision, "Bits of precision")->check(CLI::Range(16, 1 << 16));
    lm->add_flag("--star", lim.star, "Star version");
    add_format(lm);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (ev->parsed()) {
            eval.format = format;
            return run_eval(eval);
        }
        if (vr->parsed()) {
            ver.format = format;
            ver.jobs = jobs;
            return run_verify(ver);
        }
        if (dt->parsed()) {
            dim.format = format;
            dim.jobs = jobs;
            return run_dimtable(dim);
        }
        lim.format = format;
        lim.jobs = jobs;
        return run_limit(lim);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
