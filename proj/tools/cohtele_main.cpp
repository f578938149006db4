#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cohtele/errors.hpp"
#include "cohtele/protocol.hpp"
#include "cohtele/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cohtele;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerifyFailed = 4;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CaseId parse_case(const std::string& s) {
    if (s == "I") return CaseId::I;
    if (s == "II") return CaseId::II;
    if (s == "III") return CaseId::III;
    throw validation_error("unknown case '" + s + "' (expected I, II or III)");
}

std::string case_name(CaseId c) {
    switch (c) {
        case CaseId::I: return "I";
        case CaseId::II: return "II";
        case CaseId::III: return "III";
    }
    return "?";
}

// Complex literals of the form `re`, `re+imi`, `re-imi` or `imi`.
cx parse_complex(const std::string& s) {
    if (s.empty()) throw validation_error("empty complex literal");
    const char* p = s.c_str();
    char* end = nullptr;
    const double first = std::strtod(p, &end);
    if (end == p) throw validation_error("bad complex literal '" + s + "'");
    if (*end == '\0') return cx(first, 0.0);
    if (*end == 'i' && end[1] == '\0') return cx(0.0, first);
    const char* q = end;
    char* end2 = nullptr;
    const double second = std::strtod(q, &end2);
    if (end2 == q || *end2 != 'i' || end2[1] != '\0')
        throw validation_error("bad complex literal '" + s + "' (expected re+imi)");
    return cx(first, second);
}

struct ResourceSpec {
    ResourceFamily family = ResourceFamily::maxent;
    std::string token = "maxent";
};

// `maxent`, `nonmax:2+0i`, `werner:0.25`, `mems:0.5,0.3,0.2,0`.
ResourceSpec parse_resource(const std::string& token, ProtocolParams& params) {
    ResourceSpec spec;
    spec.token = token;
    const auto colon = token.find(':');
    const std::string head = token.substr(0, colon);
    const std::string arg =
        colon == std::string::npos ? "" : token.substr(colon + 1);
    if (head == "maxent") {
        spec.family = ResourceFamily::maxent;
    } else if (head == "nonmax") {
        if (arg.empty()) throw validation_error("nonmax resource requires :n");
        spec.family = ResourceFamily::nonmax;
        params.n = parse_complex(arg);
    } else if (head == "werner") {
        if (arg.empty()) throw validation_error("werner resource requires :p");
        spec.family = ResourceFamily::werner;
        params.werner_p = std::stod(arg);
    } else if (head == "mems") {
        spec.family = ResourceFamily::mems;
        double p[4];
        if (std::sscanf(arg.c_str(), "%lf,%lf,%lf,%lf", &p[0], &p[1], &p[2], &p[3]) != 4)
            throw validation_error("mems resource requires :p1,p2,p3,p4");
        params.mems = MemsParams{p[0], p[1], p[2], p[3]};
    } else {
        throw validation_error("unknown resource '" + token + "'");
    }
    return spec;
}

std::string resource_token(const ResourceSpec& spec, const ProtocolParams& p) {
    switch (spec.family) {
        case ResourceFamily::maxent: return "maxent";
        case ResourceFamily::nonmax: return "nonmax";
        case ResourceFamily::werner: return "werner:" + fmt17(p.werner_p);
        case ResourceFamily::mems:
            return "mems:" + fmt17(p.mems.p1) + "," + fmt17(p.mems.p2) + "," +
                   fmt17(p.mems.p3) + "," + fmt17(p.mems.p4);
    }
    return "?";
}

struct TeleportArgs {
    std::string resource = "maxent";
    std::string case_str = "I";
    int outcome = 0;
    double theta = 0.0;
    double phi = 0.0;
    std::string route = "direct";
};

TeleportOutcome run_point(ResourceFamily family, CaseId c, int outcome,
                          const ProtocolParams& params, bool theorem_route) {
    const DensityMatrix rho = pure_qubit_density({params.theta, params.phi});
    const DensityMatrix tau = resource_state(family, params);
    std::optional<cx> n;
    if (family == ResourceFamily::nonmax) n = params.n;
    const PovmElement e = povm_catalog(c, family, n)[outcome];
    return theorem_route ? teleport_via_theorem(rho, tau, e)
                         : teleport_direct(rho, tau, e);
}

int cmd_teleport(const TeleportArgs& args) {
    ProtocolParams params;
    params.theta = args.theta;
    params.phi = args.phi;
    const ResourceSpec spec = parse_resource(args.resource, params);
    const CaseId c = parse_case(args.case_str);
    if (args.outcome != 0 && args.outcome != 1)
        throw validation_error("outcome must be 0 or 1");
    if (args.route != "direct" && args.route != "theorem")
        throw validation_error("route must be 'direct' or 'theorem'");
    const TeleportOutcome res =
        run_point(spec.family, c, args.outcome, params, args.route == "theorem");

    json out;
    out["index"] = 0;
    out["theta"] = params.theta;
    out["phi"] = params.phi;
    if (spec.family == ResourceFamily::nonmax) {
        out["n_re"] = params.n.real();
        out["n_im"] = params.n.imag();
    } else {
        out["n_re"] = nullptr;
        out["n_im"] = nullptr;
    }
    out["resource"] = resource_token(spec, params);
    out["case"] = case_name(c);
    out["outcome"] = args.outcome;
    out["probability"] = res.probability;
    out["coherence_in"] = res.coherence_in;
    out["coherence_out"] = res.coherence_out;
    if (res.coherence_in < 1e-15)
        out["ratio"] = nullptr;
    else
        out["ratio"] = res.coherence_out / res.coherence_in;
    out["route"] = args.route;
    json bob = json::array();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            bob.push_back({res.bob_state.mat(i, j).real(),
                           res.bob_state.mat(i, j).imag()});
    out["bob_state"] = bob;
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct SweepArgs {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    std::string resource = "maxent";
    std::string case_str = "I";
    int outcome = 0;
    double theta = 0.0;
    double phi = 0.0;
    std::string output;  // empty = stdout
};

void apply_swept(const std::string& name, double value, ResourceFamily family,
                 ProtocolParams& p) {
    if (name == "theta") { p.theta = value; return; }
    if (name == "phi") { p.phi = value; return; }
    if (name == "n_abs" || name == "n_arg") {
        if (family != ResourceFamily::nonmax)
            throw validation_error("sweeping " + name + " requires the nonmax resource");
        const double abs = name == "n_abs" ? value : std::abs(p.n);
        const double arg = name == "n_arg" ? value : std::arg(p.n);
        p.n = std::polar(abs, arg);
        return;
    }
    if (name == "werner_p") {
        if (family != ResourceFamily::werner)
            throw validation_error("sweeping werner_p requires the werner resource");
        p.werner_p = value;
        return;
    }
    if (name.rfind("mems_p", 0) == 0 && name.size() == 7) {
        if (family != ResourceFamily::mems)
            throw validation_error("sweeping " + name + " requires the mems resource");
        double q[4] = {p.mems.p1, p.mems.p2, p.mems.p3, p.mems.p4};
        const int idx = name[6] - '1';
        if (idx < 0 || idx > 3) throw validation_error("unknown sweep parameter " + name);
        q[idx] = value;
        const double sum = q[0] + q[1] + q[2] + q[3];
        if (sum <= 0.0) throw validation_error("mems sweep: probabilities sum to zero");
        p.mems = MemsParams{q[0] / sum, q[1] / sum, q[2] / sum, q[3] / sum};
        return;
    }
    throw validation_error("unknown sweep parameter '" + name + "'");
}

int cmd_sweep(const SweepArgs& args) {
    if (args.count < 2) throw validation_error("sweep: count must be >= 2");
    if (!(args.start < args.stop)) throw validation_error("sweep: start must be < stop");
    ProtocolParams base;
    base.theta = args.theta;
    base.phi = args.phi;
    const ResourceSpec spec = parse_resource(args.resource, base);
    const CaseId c = parse_case(args.case_str);
    if (args.outcome != 0 && args.outcome != 1)
        throw validation_error("outcome must be 0 or 1");

    std::ofstream file;
    if (!args.output.empty()) {
        file.open(args.output, std::ios::binary);
        if (!file) throw validation_error("sweep: cannot open output file");
    }
    std::ostream& out = args.output.empty() ? std::cout : file;

    out << "index,theta,phi,n_re,n_im,resource,case,outcome,probability,"
           "coherence_in,coherence_out,ratio\n";
    for (int i = 0; i < args.count; ++i) {
        const double value =
            args.start + (args.stop - args.start) * i / (args.count - 1);
        ProtocolParams p = base;
        apply_swept(args.param, value, spec.family, p);
        const TeleportOutcome res = run_point(spec.family, c, args.outcome, p, false);
        out << i << "," << fmt17(p.theta) << "," << fmt17(p.phi) << ",";
        if (spec.family == ResourceFamily::nonmax)
            out << fmt17(p.n.real()) << "," << fmt17(p.n.imag());
        else
            out << ",";
        out << "," << resource_token(spec, p) << "," << case_name(c) << ","
            << args.outcome << "," << fmt17(res.probability) << ","
            << fmt17(res.coherence_in) << "," << fmt17(res.coherence_out) << ",";
        if (res.coherence_in >= 1e-15)
            out << fmt17(res.coherence_out / res.coherence_in);
        out << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<VerificationReport> reports;
    if (suite == "all")
        reports = verify_all(seed);
    else
        reports.push_back(verify_suite(suite, seed));
    bool ok = true;
    for (const auto& report : reports) {
        std::cout << "suite " << report.suite << " (seed " << seed << "):\n";
        for (const auto& check : report.checks) {
            std::printf("  [%s] %s (max dev %.3e, tol %.1e)\n",
                        check.passed ? "PASS" : "FAIL", check.name.c_str(),
                        check.max_deviation, check.tolerance);
        }
        ok = ok && report.overall();
    }
    std::cout << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherence-teleportation simulator"};
    app.require_subcommand(1);

    auto* coherence = app.add_subcommand("coherence", "l1 coherence of a pure qubit");
    double c_theta = 0.0, c_phi = 0.0;
    coherence->add_option("--theta", c_theta, "polar angle (radians)")->required();
    coherence->add_option("--phi", c_phi, "azimuthal angle (radians)");

    auto* teleport = app.add_subcommand("teleport", "run one protocol instance");
    TeleportArgs targs;
    teleport->add_option("--resource", targs.resource,
                         "maxent | nonmax:RE+IMi | werner:P | mems:P1,P2,P3,P4");
    teleport->add_option("--case", targs.case_str, "POVM case: I, II or III");
    teleport->add_option("--outcome", targs.outcome, "measurement outcome, 0 or 1");
    teleport->add_option("--theta", targs.theta, "input polar angle")->required();
    teleport->add_option("--phi", targs.phi, "input azimuthal angle");
    teleport->add_option("--route", targs.route, "direct | theorem");

    auto* sweep = app.add_subcommand("sweep", "parameter sweep, CSV output");
    SweepArgs sargs;
    sweep->add_option("--param", sargs.param,
                      "theta | phi | n_abs | n_arg | werner_p | mems_p1..p4")
        ->required();
    sweep->add_option("--start", sargs.start)->required();
    sweep->add_option("--stop", sargs.stop)->required();
    sweep->add_option("--count", sargs.count)->required();
    sweep->add_option("--resource", sargs.resource);
    sweep->add_option("--case", sargs.case_str);
    sweep->add_option("--outcome", sargs.outcome);
    sweep->add_option("--theta", sargs.theta, "fixed theta");
    sweep->add_option("--phi", sargs.phi, "fixed phi");
    sweep->add_option("--output", sargs.output, "write CSV here instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::uint64_t seed = kDefaultVerifySeed;
    if (const char* env = std::getenv("COHTELE_SEED")) seed = std::strtoull(env, nullptr, 10);
    verify->add_option("suite", suite, "theorem | formulas | basis | bounds | all");
    verify->add_option("--seed", seed, "seed for the random suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coherence->parsed()) {
            const DensityMatrix rho = pure_qubit_density({c_theta, c_phi});
            json out;
            out["theta"] = c_theta;
            out["phi"] = c_phi;
            out["coherence"] = l1_coherence(rho);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (teleport->parsed()) return cmd_teleport(targs);
        if (sweep->parsed()) return cmd_sweep(sargs);
        if (verify->parsed()) return cmd_verify(suite, seed);
    } catch (const degenerate_outcome& e) {
        std::cerr << "error: " << e.what() << " (p = " << e.probability << ")\n";
        return kExitDegenerate;
    } catch (const validation_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dimension_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
