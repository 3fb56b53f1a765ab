#include "cli.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "xdn/error.hpp"
#include "xdn/quadforms.hpp"

namespace xdn::cli {

json to_json(Verdict const & v)
{
    json j;
    j["status"] = status_name(v.status);
    j["case"] = case_name(v.kind);
    j["reason"] = v.status == Status::undetermined ? v.reason_code : v.reason;
    return j;
}

namespace {

json tri_json(Tri t)
{
    if (t == Tri::yes)
        return true;
    if (t == Tri::no)
        return false;
    return everywhere_name(t);
}

json point_json(CurvePoint const & P)
{
    return json::array({P.x, P.y, P.z});
}

} // namespace

json to_json(GlobalReport const & r)
{
    json j;
    j["N"] = r.N;
    j["d"] = r.d;
    j["everywhereLocal"] = tri_json(r.everywhereLocal);
    json places = json::array();
    for (auto const & [place, v] : r.perPlace) {
        json row;
        row["place"] = place.str();
        json const verdict = to_json(v);
        for (auto const & [k, val] : verdict.items())
            row[k] = val;
        places.push_back(row);
    }
    j["places"] = places;
    json failing = json::array();
    for (auto const & place : r.failing_places())
        failing.push_back(place.str());
    j["failingPlaces"] = failing;
    return j;
}

json to_json(std::vector<SearchEntry> const & entries)
{
    json rows = json::array();
    for (auto const & e : entries)
        rows.push_back(to_json(e.report));
    return rows;
}

json to_json(ScharaschkinResult const & r)
{
    json j;
    j["status"] = sieve_status_name(r.status);
    j["genOrders"] = r.gen_orders;
    j["combinations"] = r.combinations;
    j["points"] = r.points;
    json w = json::array();
    for (auto const & P : r.witnesses)
        w.push_back(point_json(P));
    j["witnesses"] = w;
    return j;
}

json to_json(Rank0Result const & r)
{
    json j;
    j["status"] = sieve_status_name(r.status);
    json primes = json::array();
    for (auto const & rep : r.primes) {
        json row;
        row["p"] = rep.p;
        row["points"] = rep.points;
        row["verified"] = rep.verified;
        primes.push_back(row);
    }
    j["primes"] = primes;
    return j;
}

json to_json(SSCount const & c)
{
    json j;
    j["count"] = c.count;
    json pts = json::array();
    for (auto const & P : c.points) {
        json row;
        row["j"] = P.j.str();
        row["subgroupOrder"] = P.subgroupOrder;
        row["autOrder"] = P.autOrder;
        pts.push_back(row);
    }
    j["points"] = pts;
    return j;
}

namespace {

/* Failure raised by the adapter itself, before any library call. */
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "table";
    std::string cache_dir;
    i64 N = 0, d = 0, dmin = 0, dmax = 0;
    std::string place;
    bool primes_only = false;
    u64 p = 0, level = 0;
    std::string gens;
    std::vector<u64> primes;
};

localsolve_config make_config(Options const & o, json & warnings)
{
    localsolve_config cfg;
    std::string dir = o.cache_dir;
    if (dir.empty()) {
        if (char const * env = std::getenv(cache_env))
            dir = env;
    }
    if (dir.empty())
        warnings.push_back("no cache directory configured; class polynomials are recomputed");
    else
        cfg.classpoly.cache_dir = dir;
    return cfg;
}

Place parse_place(std::string const & s)
{
    if (s == "inf" || s == "infinity")
        return Place::infinity();
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (std::exception const &) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size() || v < 2)
        throw usage_error("--p expects a prime or 'inf', got '" + s + "'");
    if (!is_prime(static_cast<u64>(v)))
        throw usage_error("--p expects a prime, got " + s);
    return Place::prime(static_cast<u64>(v));
}

void require_twist(i64 d)
{
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw error(errc::not_squarefree, "d must be a squarefree integer other than 0 and 1, got " + std::to_string(d));
}

std::string render_scalar(json const & v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_generic(std::ostringstream & os, json const & v, int indent)
{
    std::string const pad(indent, ' ');
    if (v.is_object()) {
        for (auto const & [k, val] : v.items()) {
            if (val.is_structured() && !val.empty()) {
                os << pad << k << ":\n";
                render_generic(os, val, indent + 2);
            } else {
                os << pad << k << ": " << render_scalar(val) << '\n';
            }
        }
    } else if (v.is_array()) {
        for (auto const & val : v) {
            if (val.is_object()) {
                std::string line;
                for (auto const & [k, x] : val.items())
                    line += (line.empty() ? "" : "  ") + k + "=" + (x.is_structured() ? x.dump() : render_scalar(x));
                os << pad << line << '\n';
            } else {
                os << pad << render_scalar(val) << '\n';
            }
        }
    } else {
        os << pad << render_scalar(v) << '\n';
    }
}

void render_report(std::ostringstream & os, json const & r)
{
    os << "N = " << r["N"].dump() << ", d = " << r["d"].dump()
       << ": everywhere locally solvable = " << render_scalar(r["everywhereLocal"]) << '\n';
    os << "  place  status        case                reason\n";
    for (auto const & row : r["places"]) {
        std::string place = row["place"].get<std::string>();
        std::string status = row["status"].get<std::string>();
        std::string kind = row["case"].get<std::string>();
        os << "  " << place << std::string(place.size() < 7 ? 7 - place.size() : 1, ' ')
           << status << std::string(status.size() < 14 ? 14 - status.size() : 1, ' ')
           << kind << std::string(kind.size() < 20 ? 20 - kind.size() : 1, ' ')
           << row["reason"].get<std::string>() << '\n';
    }
}

} // namespace

std::string emit(CommandResult const & result, Format format)
{
    json const & doc = result.document;
    if (format == Format::json)
        return doc.dump(2) + "\n";

    std::ostringstream os;
    if (doc.contains("error")) {
        os << "error (" << doc["error"]["code"].get<std::string>() << "): " << doc["error"]["message"].get<std::string>()
           << '\n';
        if (!result.help.empty())
            os << '\n' << result.help;
        return os.str();
    }
    std::string const cmd = doc.value("command", "");
    json const & payload = doc["payload"];
    if (cmd == "local") {
        os << "status: " << payload["status"].get<std::string>() << "\ncase: " << payload["case"].get<std::string>()
           << "\nreason: " << payload["reason"].get<std::string>() << '\n';
    } else if (cmd == "everywhere") {
        render_report(os, payload);
    } else if (cmd == "search") {
        os << payload.size() << " value(s) of d\n";
        if (!payload.empty())
            os << "  d        critical places\n";
        for (auto const & row : payload) {
            std::string const d = row["d"].dump();
            std::string places;
            for (auto const & pl : row["places"])
                places += (places.empty() ? "" : " ") + pl["place"].get<std::string>();
            os << "  " << d << std::string(d.size() < 9 ? 9 - d.size() : 1, ' ') << places << '\n';
        }
    } else {
        render_generic(os, payload, 0);
    }
    for (auto const & w : doc["warnings"])
        os << "warning: " << w.get<std::string>() << '\n';
    return os.str();
}

CommandResult run(std::vector<std::string> const & argv)
{
    CommandResult result;
    json warnings = json::array();
    json inputs = json::object();
    Options o;

    CLI::App app{"Local solvability of twists X^d(N) and genus-2 sieve tools", "xdn"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--cache-dir", o.cache_dir, std::string("Class polynomial cache directory (default: $") + cache_env + ")");

    auto * local = app.add_subcommand("local", "Verdict of X^d(N) at one place");
    local->add_option("--N", o.N, "Squarefree level")->required();
    local->add_option("--d", o.d, "Squarefree twist parameter")->required();
    local->add_option("--p", o.place, "Prime or 'inf'")->required();

    auto * everywhere = app.add_subcommand("everywhere", "Local solvability at every place");
    everywhere->add_option("--N", o.N, "Squarefree level")->required();
    everywhere->add_option("--d", o.d, "Squarefree twist parameter")->required();

    auto * search = app.add_subcommand("search", "Twists with points everywhere locally in a d-range");
    search->add_option("--N", o.N, "Squarefree level")->required();
    search->add_option("--dmin", o.dmin, "Smallest d")->required();
    search->add_option("--dmax", o.dmax, "Largest d")->required();
    search->add_flag("--primes-only", o.primes_only, "Only d with |d| prime");

    auto * classpoly = app.add_subcommand("classpoly", "Class polynomial of Z[sqrt -N]");
    classpoly->add_option("--N", o.N, "Squarefree level")->required();

    auto * density = app.add_subcommand("density", "Density of the prime set S_N");
    density->add_option("--N", o.N, "Squarefree level")->required();

    auto * supersingular = app.add_subcommand("supersingular", "Supersingular j-invariants and level-M points");
    supersingular->add_option("--p", o.p, "Prime")->required();
    supersingular->add_option("--level", o.level, "Level M of the points to count");

    auto * sieve = app.add_subcommand("sieve", "One-prime Scharaschkin test on a genus-2 twist");
    sieve->add_option("--N", o.N, "Level (23)")->required();
    sieve->add_option("--d", o.d, "Twist parameter")->required();
    sieve->add_option("--p", o.p, "Split prime of good reduction")->required();
    sieve->add_option("--gens", o.gens, "Generators file")->required();

    auto * rank0 = app.add_subcommand("rank0", "Rank-0 divisor test on a genus-2 twist");
    rank0->add_option("--N", o.N, "Level (23)")->required();
    rank0->add_option("--d", o.d, "Twist parameter")->required();
    rank0->add_option("--primes", o.primes, "Comma-separated test primes")->required()->delimiter(',');
    rank0->add_option("--gens", o.gens, "File with the curve and divisor")->required();

    CLI::App * active = &app;
    std::string command;
    auto fail = [&](int code, std::string const & errname, std::string const & message) {
        result.exitCode = code;
        result.document = json::object();
        result.document["command"] = command;
        result.document["inputs"] = inputs;
        result.document["payload"] = nullptr;
        result.document["warnings"] = warnings;
        result.document["error"] = {{"code", errname}, {"message", message}};
        if (code == exit_usage)
            result.help = active->help();
        return result;
    };

    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (CLI::CallForHelp const &) {
        for (auto * sub : app.get_subcommands())
            active = sub;
        result.help = active->help();
        result.document = {{"command", "help"}, {"inputs", inputs}, {"payload", result.help}, {"warnings", warnings}};
        return result;
    } catch (CLI::ParseError const & e) {
        for (auto * sub : app.get_subcommands())
            active = sub;
        if (active != &app)
            command = active->get_name();
        return fail(exit_usage, "UsageError", e.what());
    }
    for (auto * sub : app.get_subcommands())
        active = sub;
    command = active->get_name();
    result.format = o.format == "json" ? Format::json : Format::table;

    try {
        json payload;
        if (active == local) {
            inputs = {{"N", o.N}, {"d", o.d}, {"p", o.place}};
            require_level(o.N);
            require_twist(o.d);
            Place const place = parse_place(o.place);
            auto cfg = make_config(o, warnings);
            Verdict const v = decide_local(o.N, o.d, place, cfg);
            payload = to_json(v);
            if (v.status == Status::undetermined) {
                if (!v.reason.empty())
                    warnings.push_back(v.reason);
                result.exitCode = exit_undetermined;
            }
        } else if (active == everywhere) {
            inputs = {{"N", o.N}, {"d", o.d}};
            require_level(o.N);
            require_twist(o.d);
            auto cfg = make_config(o, warnings);
            GlobalReport const r = everywhere_local(o.N, o.d, cfg);
            payload = to_json(r);
            if (r.everywhereLocal == Tri::undetermined)
                result.exitCode = exit_undetermined;
        } else if (active == search) {
            inputs = {{"N", o.N}, {"dmin", o.dmin}, {"dmax", o.dmax}, {"primesOnly", o.primes_only}};
            require_level(o.N);
            if (o.dmin > o.dmax)
                throw usage_error("--dmin must not exceed --dmax");
            auto cfg = make_config(o, warnings);
            payload = to_json(search_d(o.N, o.dmin, o.dmax, o.primes_only, cfg));
        } else if (active == classpoly) {
            inputs = {{"N", o.N}};
            require_level(o.N);
            auto cfg = make_config(o, warnings);
            ClassPolynomial const H = class_polynomial(o.N, cfg.classpoly);
            payload["D"] = H.D;
            payload["degree"] = H.degree();
            json coeffs = json::array();
            for (auto const & c : H.coeffs)
                coeffs.push_back(c.str());
            payload["coefficients"] = coeffs;
            payload["polynomial"] = H.str();
            payload["discPoly"] = H.discPoly.str();
        } else if (active == density) {
            inputs = {{"N", o.N}};
            require_level(o.N);
            ClassGroup const G = class_group(o.N);
            Rational const a = density_SN(o.N);
            payload["N"] = o.N;
            payload["h"] = G.h;
            payload["twoGsize"] = G.twoGsize;
            payload["density"] = a.str();
            payload["value"] = a.value();
        } else if (active == supersingular) {
            inputs = {{"p", o.p}};
            if (o.level)
                inputs["level"] = o.level;
            if (o.p < 2 || !is_prime(o.p))
                throw usage_error("--p expects a prime");
            json js = json::array();
            for (auto const & j : ss_j_invariants(o.p))
                js.push_back(j.str());
            payload["p"] = o.p;
            payload["ssJ"] = js;
            payload["eichlerMass"] = eichler_mass(o.p).str();
            if (o.level) {
                payload["level"] = o.level;
                json const counted = to_json(count_ss_points(o.level, o.p));
                for (auto const & [k, v] : counted.items())
                    payload[k] = v;
            }
        } else if (active == sieve || active == rank0) {
            inputs = {{"N", o.N}, {"d", o.d}};
            if (active == sieve)
                inputs["p"] = o.p;
            else
                inputs["primes"] = o.primes;
            inputs["gens"] = o.gens;
            if (o.N != 23)
                throw error(errc::unsupported_level, "the genus-2 sieve is available for N = 23 only");
            require_twist(o.d);
            GensFile const G = read_gens_file(o.gens);
            if (G.d != 0 && G.d != o.d)
                throw error(errc::invalid_argument,
                            "the gens file is written for d = " + std::to_string(G.d) + ", not " + std::to_string(o.d));
            if (G.f != f23_sextic())
                warnings.push_back("the gens file uses a sextic other than the level-23 model");
            payload["d"] = o.d;
            if (active == sieve) {
                HyperellipticCurveFp const C = reduce_twist(G.f, o.d, o.p);
                std::vector<MumfordDivisor> gens;
                for (auto const & text : G.gens)
                    gens.push_back(transport_divisor(C, text, G.model, o.d));
                payload["p"] = o.p;
                json pts = json::array();
                for (auto const & P : enumerate_points(C))
                    pts.push_back(point_json(P));
                payload["curvePoints"] = pts;
                json gtext = json::array();
                for (auto const & D : gens)
                    gtext.push_back(print_mumford(D));
                payload["gens"] = gtext;
                json const verdict = to_json(scharaschkin_test(C, gens));
                for (auto const & [k, v] : verdict.items())
                    payload[k] = v;
            } else {
                if (G.divisors.empty())
                    throw error(errc::parse_error, "the gens file has no divisor line");
                std::vector<HyperellipticCurveFp> curves;
                std::vector<MumfordDivisor> divs;
                for (u64 p : o.primes) {
                    curves.push_back(reduce_twist(G.f, o.d, p));
                    divs.push_back(transport_divisor(curves.back(), G.divisors.front(), G.model, o.d));
                }
                json const verdict = to_json(rank0_divisor_test(curves, divs));
                for (auto const & [k, v] : verdict.items())
                    payload[k] = v;
            }
        }
        result.document = json::object();
        result.document["command"] = command;
        result.document["inputs"] = inputs;
        result.document["payload"] = payload;
        result.document["warnings"] = warnings;
        return result;
    } catch (usage_error const & e) {
        return fail(exit_usage, "UsageError", e.what());
    } catch (error const & e) {
        int const code = e.code() == errc::precision_exhausted ? exit_internal : exit_usage;
        return fail(code, errc_name(e.code()), e.what());
    } catch (std::exception const & e) {
        return fail(exit_internal, "InternalError", e.what());
    }
}

} // namespace xdn::cli
