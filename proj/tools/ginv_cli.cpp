// ginv: command-line front end. Every invocation prints exactly one JSON
// report on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success/solvable, 2 unsolvable or nonexistent (a verdict),
// 3 hypothesis violated, 4 input/parse error, 1 internal error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <ginv/ginv.hpp>
#include <ginv/json_io.hpp>

namespace {

using ginv::Matrix;
using ginv::Rational;
using ginv::io::json;

enum class Verdict { success, solvable, verified, unsolvable, nonexistent, not_verified, hypothesis_violated,
                     input_error, internal_error };

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::success: return "success";
    case Verdict::solvable: return "solvable";
    case Verdict::verified: return "verified";
    case Verdict::unsolvable: return "unsolvable";
    case Verdict::nonexistent: return "nonexistent";
    case Verdict::not_verified: return "not-verified";
    case Verdict::hypothesis_violated: return "hypothesis-violated";
    case Verdict::input_error: return "input-error";
    case Verdict::internal_error: return "internal-error";
    }
    return "internal-error";
}

int exit_code(Verdict v) {
    switch (v) {
    case Verdict::success:
    case Verdict::solvable:
    case Verdict::verified: return 0;
    case Verdict::unsolvable:
    case Verdict::nonexistent:
    case Verdict::not_verified: return 2;
    case Verdict::hypothesis_violated: return 3;
    case Verdict::input_error: return 4;
    case Verdict::internal_error: return 1;
    }
    return 1;
}

struct Options {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::optional<std::string> mode;
    double tol = 1e-9;
    std::optional<std::string> params;
    bool oracle = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    // gen
    std::string kind = "group-invertible";
    std::size_t n = 3;
    std::optional<std::size_t> m;
    std::optional<std::size_t> rank;
};

class Report {
public:
    Verdict verdict = Verdict::success;
    std::string message;
    json matrices = json::object();
    json checks = json::array();
    json details = json::object();

    template <ginv::Field T>
    void matrix(const std::string& name, const Matrix<T>& m) {
        matrices[name] = ginv::io::to_json(m);
    }

    void check(const std::string& identity, bool holds) { checks.push_back({{"identity", identity}, {"holds", holds}}); }

    void checks_from(const ginv::Verification& v, const std::string& prefix = "") {
        for (const auto& c : v.checks) check(prefix + c.identity, c.holds);
    }

    void checks_from(const std::vector<ginv::IdentityCheck>& cs) {
        for (const auto& c : cs) check(c.identity, c.holds);
    }
};

struct Inputs {
    std::vector<json> docs;
    ginv::Mode mode = ginv::Mode::Rational;
    std::optional<json> params;
};

std::size_t expected_inputs(const std::string& sub) {
    if (sub == "geninv" || sub == "inner-inv") return 1;
    if (sub == "gen") return 0;
    return 3;
}

Inputs load_inputs(const Options& opt) {
    Inputs in;
    std::vector<std::pair<std::string, json>> all;
    for (const auto& path : opt.inputs) all.emplace_back(path, ginv::io::read_json_file(path));
    if (opt.params) all.emplace_back(*opt.params, ginv::io::read_json_file(*opt.params));

    in.mode = opt.mode ? ginv::mode_from_name(*opt.mode) : ginv::Mode::Rational;
    if (!opt.mode) {
        bool first = true;
        for (const auto& [path, doc] : all) {
            const auto m = ginv::io::document_mode(doc, path);
            if (!first && in.mode != m)
                throw ginv::mode_error(path + ": mode differs from the other inputs; mixed-mode arithmetic is rejected "
                                              "(pass --mode to convert explicitly)");
            in.mode = m;
            first = false;
        }
    }
    for (auto& [path, doc] : all) {
        ginv::io::document_mode(doc, path);  // validates structure
        doc = ginv::io::convert_document(doc, in.mode);
    }
    if (opt.params) {
        in.params = all.back().second;
        all.pop_back();
    }
    for (auto& [path, doc] : all) in.docs.push_back(std::move(doc));
    return in;
}

template <ginv::Field T>
Matrix<T> input_matrix(const Inputs& in, const Options& opt, std::size_t k) {
    return ginv::io::matrix_from_json<T>(in.docs.at(k), opt.inputs.at(k));
}

template <ginv::Field T>
void add_group_inverse_checks(Report& r, const Matrix<T>& a, const ginv::GroupInverseResult<T>& g,
                              const ginv::Tolerance& tol, const std::string& name = "A") {
    using ginv::same;
    const auto& x = g.a_sharp;
    r.check(name + " " + name + "# " + name + " = " + name, same(a * x * a, a, tol));
    r.check(name + "# " + name + " " + name + "# = " + name + "#", same(x * a * x, x, tol));
    r.check(name + " " + name + "# = " + name + "# " + name, same(a * x, x * a, tol));
    r.check(name + "^pi idempotent", same(g.a_pi * g.a_pi, g.a_pi, tol));
    r.check(name + "^pi " + name + " = " + name + " " + name + "^pi", same(g.a_pi * a, a * g.a_pi, tol));
}

template <ginv::Field T>
void run_geninv(const Options& opt, const Inputs& in, Report& r, const ginv::Tolerance& tol) {
    const auto a = input_matrix<T>(in, opt, 0);
    const auto g = ginv::group_inverse(a, tol);
    r.details["index_le_one"] = g.index_le_one;
    if (!g) {
        r.verdict = Verdict::nonexistent;
        r.message = "group inverse does not exist (index > 1)";
        return;
    }
    r.matrix("A_sharp", g.a_sharp);
    r.matrix("A_pi", g.a_pi);
    r.matrix("AA_sharp", g.range_projector());
    add_group_inverse_checks(r, a, g, tol);
    r.message = "group inverse exists";
}

template <ginv::Field T>
void run_inner_inv(const Options& opt, const Inputs& in, Report& r, const ginv::Tolerance& tol) {
    const auto a = input_matrix<T>(in, opt, 0);
    const auto g = ginv::inner_inverse(a, tol);
    r.matrix("A_minus", g);
    r.check("A A- A = A", ginv::same(a * g * a, a, tol));
    r.details["rank"] = ginv::rank(a, tol);
}

template <ginv::Field T>
void run_check_block(const Options& opt, const Inputs& in, Report& r, const ginv::Tolerance& tol) {
    const auto a = input_matrix<T>(in, opt, 0), b = input_matrix<T>(in, opt, 1), c = input_matrix<T>(in, opt, 2);
    const auto parts = ginv::block_group_inverse(a, b, c, tol);
    r.details["criterion_holds"] = parts.exists;
    if (!parts.exists) {
        r.verdict = Verdict::nonexistent;
        r.message = "M = [[A, C], [0, B]] is not group invertible (A^pi C B^pi != 0)";
        return;
    }
    const auto m = ginv::upper_triangular(a, c, b);
    r.matrix("M", m);
    r.matrix("M_sharp", parts.m_sharp);
    r.matrix("S", parts.s);
    const auto gm = ginv::group_inverse(m, tol);
    r.check("M M# M = M", ginv::same(m * parts.m_sharp * m, m, tol));
    r.check("M# M M# = M#", ginv::same(parts.m_sharp * m * parts.m_sharp, parts.m_sharp, tol));
    r.check("M M# = M# M", ginv::same(m * parts.m_sharp, parts.m_sharp * m, tol));
    r.check("M# agrees with direct group inverse", gm && ginv::same(gm.a_sharp, parts.m_sharp, tol));
    r.message = "M is group invertible";
}

template <ginv::Field T>
void run_sylvester(const Options& opt, const Inputs& in, Report& r, const ginv::Tolerance& tol) {
    const auto a = input_matrix<T>(in, opt, 0), b = input_matrix<T>(in, opt, 1), c = input_matrix<T>(in, opt, 2);
    const auto out = ginv::solve_sylvester(a, b, c, tol);
    r.message = out.note;
    if (!out.solvable) {
        r.verdict = Verdict::unsolvable;
        return;
    }
    r.verdict = Verdict::solvable;
    r.matrix("X", out.x);
    r.matrix("X_extracted", out.x_extracted);
    r.matrix("P", out.witness->t);
    r.matrix("P_minus", out.witness->t_minus);
    r.matrix("P_equals", out.witness->t_equals);
    r.checks_from(out.verification, "M ~ D: ");
    r.check("A X - X B = C", ginv::is_zero(ginv::sylvester_residual(a, b, c, out.x), tol, c.max_abs()));
    r.check("A X_extracted - X_extracted B = C",
            ginv::is_zero(ginv::sylvester_residual(a, b, c, out.x_extracted), tol, c.max_abs()));
}

template <ginv::Field T>
void add_certificate(Report& r, const ginv::EquivalenceCertificate<T>& cert, const std::string& u_name) {
    r.matrix("P", cert.witness.p);
    r.matrix("Q", cert.witness.q);
    r.matrix("P_minus", cert.witness.p_minus);
    r.matrix("Q_minus", cert.witness.q_minus);
    r.matrix(u_name, cert.u);
    r.checks_from(cert.verification, "D pseudo-equivalent to M: ");
    r.checks_from(cert.checks);
    r.details["certificate_verified"] = cert.certified();
    if (!cert.verification.ok) r.details["certificate_failed_identity"] = cert.verification.failed;
}

template <ginv::Field T>
void run_two_sided(const Options& opt, const Inputs& in, Report& r, const ginv::Tolerance& tol) {
    const auto a = input_matrix<T>(in, opt, 0), b = input_matrix<T>(in, opt, 1), c = input_matrix<T>(in, opt, 2);
    const bool solvable = ginv::check_two_sided_solvable(a, b, c, tol);
    r.details["criterion_holds"] = solvable;
    add_certificate(r, ginv::build_equivalence_certificate(a, b, c, tol), "U");

    if (opt.oracle) {
        const auto o = ginv::oracle::oracle_two_sided(a, b, c, tol);
        r.details["oracle_solvable"] = o.has_value();
        r.details["oracle_agrees"] = o.has_value() == solvable;
        if (o) {
            r.matrix("X_oracle", o->x);
            r.matrix("Y_oracle", o->y);
        }
    }

    const auto family = ginv::solve_two_sided(a, b, c, tol);
    if (!family) {
        r.verdict = Verdict::unsolvable;
        r.message = "A^pi C B^pi != 0: A X - Y B = C has no solution";
        return;
    }
    r.verdict = Verdict::solvable;
    r.message = "A X - Y B = C is solvable";
    r.matrix("X0", family->x0);
    r.matrix("Y0", family->y0);
    r.check("A X0 - Y0 B = C", family->is_solution(family->x0, family->y0));
    if (in.params) {
        const auto z = ginv::io::matrix_from_json<T>((*in.params).at("Z"), *opt.params + "/Z");
        const auto z1 = ginv::io::matrix_from_json<T>((*in.params).at("Z1"), *opt.params + "/Z1");
        const auto xy = family->evaluate(z, z1);
        r.matrix("X", xy.x);
        r.matrix("Y", xy.y);
        r.check("A X - Y B = C", family->is_solution(xy.x, xy.y));
    }
}

template <ginv::Field T>
void run_stein(const Options& opt, const Inputs& in, Report& r, const ginv::Tolerance& tol) {
    const auto a = input_matrix<T>(in, opt, 0), b = input_matrix<T>(in, opt, 1), c = input_matrix<T>(in, opt, 2);
    const auto rep = ginv::solve_stein(a, b, c, tol);
    r.details["criterion_holds"] = rep.criterion_holds;
    r.details["coupled_solution_found"] = rep.coupled_solution.has_value();
    r.details["oracle_solvable"] = rep.oracle_solution.has_value();
    r.details["verdicts_agree"] = rep.verdicts_agree;
    add_certificate(r, rep.criterion.certificate, "U1");
    if (rep.coupled_solution) r.matrix("Y", *rep.coupled_solution);
    if (opt.oracle && rep.oracle_solution) r.matrix("Y_oracle", *rep.oracle_solution);
    if (rep.solvable()) {
        r.verdict = Verdict::solvable;
        const auto& y = rep.coupled_solution ? *rep.coupled_solution : *rep.oracle_solution;
        r.check("A Y B - Y = C", ginv::is_zero(ginv::stein_residual(a, b, c, y), tol, c.max_abs()));
        r.message = "A Y B - Y = C is solvable";
    } else {
        r.verdict = Verdict::unsolvable;
        r.message = rep.verdicts_agree ? "A Y B - Y = C has no solution"
                                       : "A Y B - Y = C has no solution, although the shifted criterion holds";
    }
}

template <ginv::Field T>
void run_verify_witness(const Options& opt, const Inputs& in, Report& r, const ginv::Tolerance& tol) {
    const auto a = input_matrix<T>(in, opt, 0), b = input_matrix<T>(in, opt, 1);
    const auto& w = in.docs.at(2);
    ginv::Verification v;
    if (ginv::io::is_similarity_witness(w)) {
        r.details["witness"] = "pseudo-similarity";
        v = ginv::verify_pseudo_similar(a, b, ginv::io::similarity_witness_from_json<T>(w, opt.inputs[2]), tol);
    } else if (ginv::io::is_equivalence_witness(w)) {
        r.details["witness"] = "pseudo-equivalence";
        v = ginv::verify_pseudo_equivalent(a, b, ginv::io::equivalence_witness_from_json<T>(w, opt.inputs[2]), tol);
    } else {
        throw ginv::parse_error(opt.inputs[2] + ": witness must contain \"T\" or \"P\"");
    }
    r.checks_from(v);
    if (v) {
        r.verdict = Verdict::verified;
        r.message = "witness verifies";
    } else {
        r.verdict = Verdict::not_verified;
        r.message = "witness fails: " + v.failed;
        r.details["failed_identity"] = v.failed;
    }
}

template <ginv::Field T>
void run_gen(const Options& opt, Report& r, std::uint64_t seed) {
    ginv::InstanceGenerator<T> gen(seed);
    const std::size_t n = opt.n, m = opt.m.value_or(opt.n);
    if (opt.rank && *opt.rank > n) throw ginv::dimension_error("--rank exceeds --n");
    r.details["seed"] = seed;
    r.details["kind"] = opt.kind;
    if (opt.kind == "group-invertible") {
        r.matrix("A", opt.rank ? gen.group_invertible(n, *opt.rank) : gen.group_invertible(n));
        return;
    }
    ginv::EquationKind kind;
    if (opt.kind == "sylvester") kind = ginv::EquationKind::sylvester;
    else if (opt.kind == "two-sided") kind = ginv::EquationKind::two_sided;
    else if (opt.kind == "stein") kind = ginv::EquationKind::stein;
    else throw ginv::parse_error("unknown --kind '" + opt.kind + "'");
    const auto inst = opt.rank ? gen.solvable(kind, n, m, *opt.rank, std::min(*opt.rank, m)) : gen.solvable(kind, n, m);
    r.matrix("A", inst.a);
    r.matrix("B", inst.b);
    r.matrix("C", inst.c);
    if (!inst.x.empty()) r.matrix("X", inst.x);
    if (!inst.y.empty()) r.matrix("Y", inst.y);
}

template <ginv::Field T>
void dispatch(const Options& opt, const Inputs& in, Report& r, std::uint64_t seed) {
    const ginv::Tolerance tol{opt.tol};
    const auto& s = opt.subcommand;
    if (s == "geninv") run_geninv<T>(opt, in, r, tol);
    else if (s == "inner-inv") run_inner_inv<T>(opt, in, r, tol);
    else if (s == "check-block") run_check_block<T>(opt, in, r, tol);
    else if (s == "solve-sylvester") run_sylvester<T>(opt, in, r, tol);
    else if (s == "solve-two-sided") run_two_sided<T>(opt, in, r, tol);
    else if (s == "solve-stein") run_stein<T>(opt, in, r, tol);
    else if (s == "verify-witness") run_verify_witness<T>(opt, in, r, tol);
    else if (s == "gen") run_gen<T>(opt, r, seed);
}

std::uint64_t resolve_seed(const Options& opt) {
    if (opt.seed) return *opt.seed;
    if (const char* env = std::getenv("GINV_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw ginv::parse_error(std::string("GINV_SEED: not an unsigned integer: '") + env + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    const auto started = std::chrono::steady_clock::now();
    Options opt;
    CLI::App app{"Group inverses and the matrix equations AX-XB=C, AX-YB=C, AYB-Y=C"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--mode", opt.mode, "Scalar mode (rational or float); converts inputs explicitly")
        ->check(CLI::IsMember({"rational", "float"}));
    app.add_option("--tol", opt.tol, "Relative tolerance for float mode")->check(CLI::PositiveNumber);
    app.add_flag("--oracle", opt.oracle, "Include the vectorized oracle cross-check");
    app.add_option("--seed", opt.seed, "Seed for gen (overrides GINV_SEED)");
    app.add_option("--out", opt.out_dir, "Also write every produced matrix to this directory");

    struct Sub { const char* name; const char* help; };
    const Sub subs[] = {
        {"geninv", "Group inverse and spectral idempotent of A"},
        {"inner-inv", "Inner inverse of A"},
        {"check-block", "Group invertibility of [[A, C], [0, B]] and its group inverse"},
        {"solve-sylvester", "Solve A X - X B = C with a pseudo-similarity witness"},
        {"solve-two-sided", "Solve A X - Y B = C with a pseudo-equivalence certificate"},
        {"solve-stein", "Solve A Y B - Y = C; reports criterion and oracle side by side"},
        {"verify-witness", "Verify a witness file for A and B"},
        {"gen", "Generate a random instance"},
    };
    for (const auto& s : subs) {
        auto* sc = app.add_subcommand(s.name, s.help);
        const auto k = expected_inputs(s.name);
        if (k > 0) {
            sc->add_option("inputs", opt.inputs, "Matrix JSON files")->required()->expected(static_cast<int>(k));
        }
        if (std::string(s.name) == "solve-two-sided")
            sc->add_option("--params", opt.params, "Params JSON {\"Z\": M, \"Z1\": M} for family evaluation");
        if (std::string(s.name) == "gen") {
            sc->add_option("--kind", opt.kind, "group-invertible, sylvester, two-sided or stein")
                ->check(CLI::IsMember({"group-invertible", "sylvester", "two-sided", "stein"}));
            sc->add_option("--n", opt.n, "Dimension of A")->check(CLI::Range(0, 8));
            sc->add_option("--m", opt.m, "Dimension of B (default n)")->check(CLI::Range(0, 8));
            sc->add_option("--rank", opt.rank, "Target rank");
        }
    }

    json report;
    std::vector<std::string> echo(argv + 1, argv + argc);
    report["command"] = echo;
    Report r;
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            throw ginv::parse_error(std::string("command line: ") + e.what());
        }
        opt.subcommand = app.get_subcommands().front()->get_name();
        report["subcommand"] = opt.subcommand;
        const auto seed = opt.subcommand == "gen" ? resolve_seed(opt) : 0;
        const auto in = load_inputs(opt);
        report["mode"] = ginv::mode_name(in.mode);
        if (in.mode == ginv::Mode::Rational) dispatch<Rational>(opt, in, r, seed);
        else dispatch<double>(opt, in, r, seed);
    } catch (const ginv::hypothesis_violated& e) {
        r.verdict = Verdict::hypothesis_violated;
        r.message = e.what();
    } catch (const ginv::internal_inconsistency& e) {
        r.verdict = Verdict::internal_error;
        r.message = e.what();
    } catch (const ginv::certificate_invalid& e) {
        // only reachable on a witness this tool built itself
        r.verdict = Verdict::internal_error;
        r.message = e.what();
        r.details["failed_identity"] = e.identity();
    } catch (const ginv::error& e) {
        // parse, mode, dimension and rejected-solution errors are input problems
        r.verdict = Verdict::input_error;
        r.message = e.what();
    } catch (const std::exception& e) {
        r.verdict = Verdict::internal_error;
        r.message = e.what();
    }

    report["verdict"] = verdict_name(r.verdict);
    report["exit_code"] = exit_code(r.verdict);
    report["message"] = r.message;
    report["matrices"] = r.matrices;
    report["checks"] = r.checks;
    report["details"] = r.details;
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    report["timings"] = {{"total_ms", elapsed.count()}};

    if (opt.out_dir && exit_code(r.verdict) != 4) {
        try {
            std::filesystem::create_directories(*opt.out_dir);
            for (const auto& [name, m] : r.matrices.items())
                ginv::io::write_json_file((std::filesystem::path(*opt.out_dir) / (name + ".json")).string(), m);
        } catch (const std::exception& e) {
            std::cerr << "ginv: " << e.what() << '\n';
        }
    }
    if (r.verdict == Verdict::input_error || r.verdict == Verdict::internal_error) std::cerr << "ginv: " << r.message << '\n';
    std::cout << report.dump(2) << '\n';
    return exit_code(r.verdict);
}
