#include "nambu/cli.hpp"

#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nambu/defcoh.hpp"
#include "nambu/errors.hpp"
#include "nambu/foliation.hpp"
#include "nambu/integrability.hpp"
#include "nambu/io.hpp"
#include "nambu/linear.hpp"
#include "nambu/trivialize.hpp"

namespace nambu {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 2;
constexpr int kExitParse = 3;
constexpr int kExitUnstable = 4;

struct Common {
    std::string vars_csv;
    int cutoff = 24;
    int window = 2;
    bool compact = false;
    bool pretty = false;
    bool strict = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_policy = true) {
    cmd->add_option("--vars", c.vars_csv, "comma-separated variable names");
    if (with_policy) {
        cmd->add_option("--cutoff", c.cutoff, "jet truncation cap")->capture_default_str();
        cmd->add_option("--window", c.window, "stability window")->capture_default_str();
    }
    cmd->add_flag("--json", c.compact, "compact single-line JSON");
    cmd->add_flag("--pretty", c.pretty, "indented JSON");
    cmd->add_flag("--strict", c.strict, "exit 4 on unstabilized dimensions");
}

VarTable resolve_vars(const Common& c, const std::vector<std::string>& poly_sources) {
    if (!c.vars_csv.empty()) {
        VarTable vars;
        std::string cur;
        for (std::size_t i = 0; i <= c.vars_csv.size(); ++i) {
            const char ch = i < c.vars_csv.size() ? c.vars_csv[i] : ',';
            if (ch == ',') {
                if (!cur.empty()) vars.names.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                cur += ch;
            }
        }
        if (vars.names.empty()) throw ParseError("--vars is empty", 1);
        return vars;
    }
    return infer_vars(poly_sources);
}

TruncationPolicy policy_of(const Common& c) { return {c.cutoff, c.window}; }

json vars_json(const VarTable& vars) {
    json a = json::array();
    for (const auto& n : vars.names) a.push_back(n);
    return a;
}

json report_quotient(const QuotientReport& r, const VarTable& vars, int rank) {
    json out;
    if (r.dimension) out["dimension"] = *r.dimension;
    else out["dimension"] = nullptr;
    out["stabilized"] = r.stabilized;
    out["cutoff"] = r.cutoff_used;
    json basis = json::array();
    for (const auto& b : r.basis_monomials) {
        if (rank == 1) basis.push_back(mono_str(b.mono, vars));
        else basis.push_back(json{{"slot", b.slot + 1}, {"monomial", mono_str(b.mono, vars)}});
    }
    out["basis"] = std::move(basis);
    return out;
}

void attach_policy(json& out, const Common& c) {
    out["policy"] = json{{"max_cutoff", c.cutoff}, {"window", c.window}};
    out["exact"] = true;
}

void emit(std::ostream& os, const json& out, const Common& c) {
    if (c.pretty && !c.compact) os << out.dump(2) << "\n";
    else os << out.dump() << "\n";
}

struct CommandResult {
    json report;
    bool unstabilized = false;
};

json header(const std::string& command, const VarTable& vars) {
    json out;
    out["schema"] = 1;
    out["command"] = command;
    out["vars"] = vars_json(vars);
    return out;
}

std::string witness_str(const std::optional<MultiVec>& a, const VarTable& vars) {
    return a ? tensor_str(*a, vars) : std::string("none");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for singular foliations, Nambu tensors and their "
                 "deformation spaces"};
    app.require_subcommand(1);

    // ---- option storage per subcommand ----
    struct {
        Common common;
        std::string form;
    } integ;
    struct {
        Common common;
        std::string tensor;
    } nambu_opts;
    struct {
        Common common;
        std::vector<std::string> gens;
        std::string sing_locus;
    } assoc;
    struct {
        Common common;
        std::string field, tensor;
    } cit;
    struct {
        Common common;
        std::string form, eta, tensor, pi;
    } defcheck;
    struct {
        Common common;
        std::string base, candidate, mode = "tensor";
        int solve_cutoff = 8;
    } trivial;
    struct {
        Common common;
        std::string pi;
        int q = 1;
    } triv;
    struct {
        Common common;
        std::string f;
    } milnor_opts, tjurina_opts;
    struct {
        Common common;
        std::string f, mode = "tensor";
    } dh_opts;
    struct {
        Common common;
        std::vector<std::string> fs;
    } dhfol, rl;
    struct {
        Common common;
        std::string matrix;
    } lindh;
    struct {
        Common common;
        std::string matrix;
        long order_bound = 12;
    } reso;
    struct {
        Common common;
        std::string tensor;
    } classify;

    CLI::App* c_integ = app.add_subcommand("check-integrable", "integrability of a p-form");
    c_integ->add_option("--form", integ.form, "differential form")->required();
    add_common(c_integ, integ.common, false);

    CLI::App* c_nambu = app.add_subcommand("check-nambu", "Nambu property of a multivector");
    c_nambu->add_option("--tensor", nambu_opts.tensor, "multivector")->required();
    add_common(c_nambu, nambu_opts.common, false);

    CLI::App* c_assoc =
        app.add_subcommand("associated-nambu", "associated Nambu tensor of tangent generators");
    c_assoc->add_option("--gen", assoc.gens, "tangent vector field (repeatable)")->required();
    c_assoc->add_option("--sing-locus", assoc.sing_locus,
                        "equation of a codimension-1 singular locus");
    add_common(c_assoc, assoc.common, false);

    CLI::App* c_cit = app.add_subcommand("cit-check", "conformally invariant tangency");
    c_cit->add_option("--field", cit.field, "vector field")->required();
    c_cit->add_option("--tensor", cit.tensor, "Nambu tensor")->required();
    add_common(c_cit, cit.common, false);

    CLI::App* c_defcheck =
        app.add_subcommand("check-deformation", "linearized integrability of a candidate");
    c_defcheck->add_option("--form", defcheck.form, "base form");
    c_defcheck->add_option("--eta", defcheck.eta, "candidate form");
    c_defcheck->add_option("--tensor", defcheck.tensor, "base multivector");
    c_defcheck->add_option("--pi", defcheck.pi, "candidate multivector");
    add_common(c_defcheck, defcheck.common, false);

    CLI::App* c_trivial = app.add_subcommand("trivial?", "search a trivializing field");
    c_trivial->alias("trivial");
    c_trivial->add_option("--base", trivial.base, "base multivector")->required();
    c_trivial->add_option("--candidate", trivial.candidate, "candidate multivector")->required();
    c_trivial->add_option("--mode", trivial.mode, "tensor|foliation")->capture_default_str();
    c_trivial->add_option("--solve-cutoff", trivial.solve_cutoff,
                          "degree bound for the unknown coefficients")
        ->capture_default_str();
    add_common(c_trivial, trivial.common, false);

    CLI::App* c_triv =
        app.add_subcommand("trivialize", "constructive trivialization over the regular tensor");
    c_triv->add_option("--q", triv.q, "degree of the regular tensor")->required();
    c_triv->add_option("--pi", triv.pi, "deformation multivector")->required();
    add_common(c_triv, triv.common, false);

    CLI::App* c_milnor = app.add_subcommand("milnor", "Milnor number");
    c_milnor->add_option("--f", milnor_opts.f, "function germ, f(0)=0")->required();
    add_common(c_milnor, milnor_opts.common);

    CLI::App* c_tjurina = app.add_subcommand("tjurina", "Tjurina number");
    c_tjurina->add_option("--f", tjurina_opts.f, "function germ, f(0)=0")->required();
    add_common(c_tjurina, tjurina_opts.common);

    CLI::App* c_dh = app.add_subcommand("dh", "deformation space of a top-degree tensor");
    c_dh->add_option("--f", dh_opts.f, "function germ, df(0)=0")->required();
    c_dh->add_option("--mode", dh_opts.mode, "tensor|foliation")->capture_default_str();
    add_common(c_dh, dh_opts.common);

    CLI::App* c_dhfol = app.add_subcommand(
        "dh-foliation", "deformation space of a decomposable integrable form");
    c_dhfol->add_option("--f", dhfol.fs, "first integral (repeatable)")->required();
    add_common(c_dhfol, dhfol.common);

    CLI::App* c_rl = app.add_subcommand("rl-quotient", "right-left equivalence quotient");
    c_rl->add_option("--f", rl.fs, "component of the map germ (repeatable)")->required();
    add_common(c_rl, rl.common);

    CLI::App* c_lindh = app.add_subcommand("linear-dh", "linear deformation dimensions");
    c_lindh->add_option("--matrix", lindh.matrix, "linear part, rows 'a,b;c,d'")->required();
    add_common(c_lindh, lindh.common, false);

    CLI::App* c_reso = app.add_subcommand("resonance", "eigenvalue resonance analysis");
    c_reso->add_option("--matrix", reso.matrix, "linear part")->required();
    c_reso->add_option("--order-bound", reso.order_bound, "search bound for mixed spectra")
        ->capture_default_str();
    add_common(c_reso, reso.common, false);

    CLI::App* c_classify =
        app.add_subcommand("classify-linear-nambu", "normal form of a linear Nambu tensor");
    c_classify->add_option("--tensor", classify.tensor, "multivector with linear coefficients")
        ->required();
    add_common(c_classify, classify.common, false);

    std::string problem_path;
    CLI::App* c_run = app.add_subcommand("run", "execute a JSON problem file");
    c_run->add_option("file", problem_path, "problem file")->required();

    std::vector<std::string> argv_copy = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("nambu");
        for (const auto& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitParse;
    }

    auto finish = [&](const CommandResult& result, const Common& common) {
        emit(out, result.report, common);
        if (result.unstabilized && common.strict) return kExitUnstable;
        return kExitOk;
    };

    try {
        if (c_run->parsed()) {
            // One command per file: entities are named expressions that the
            // argument slots may reference.
            std::ifstream in(problem_path);
            if (!in) throw ParseError("cannot open problem file: " + problem_path, 1);
            json file;
            try {
                file = json::parse(in);
            } catch (const json::parse_error& e) {
                throw ParseError(std::string("problem file: ") + e.what(), 1);
            }
            if (!file.contains("command") || !file["command"].is_string())
                throw ParseError("problem file: missing \"command\"", 1);
            const std::string command = file["command"];
            if (command == "run") throw ParseError("problem file: nested run", 1);
            std::vector<std::string> forwarded{command};
            if (file.contains("vars")) {
                std::string csv;
                for (const auto& v : file["vars"]) {
                    if (!csv.empty()) csv += ",";
                    csv += v.get<std::string>();
                }
                forwarded.push_back("--vars");
                forwarded.push_back(csv);
            }
            json entities = file.value("entities", json::object());
            auto resolve = [&](const json& v) -> std::string {
                const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
                if (entities.contains(s)) return entities[s].get<std::string>();
                return s;
            };
            const json args_obj = file.value("args", json::object());
            for (const auto& [key, value] : args_obj.items()) {
                if (value.is_array()) {
                    for (const auto& item : value) {
                        forwarded.push_back("--" + key);
                        forwarded.push_back(resolve(item));
                    }
                } else {
                    forwarded.push_back("--" + key);
                    forwarded.push_back(resolve(value));
                }
            }
            const json policy = file.value("policy", json::object());
            if (policy.contains("cutoff")) {
                forwarded.push_back("--cutoff");
                forwarded.push_back(std::to_string(policy["cutoff"].get<long>()));
            }
            if (policy.contains("window")) {
                forwarded.push_back("--window");
                forwarded.push_back(std::to_string(policy["window"].get<long>()));
            }
            if (file.value("strict", false)) forwarded.push_back("--strict");
            if (file.value("pretty", false)) forwarded.push_back("--pretty");
            return run_cli(forwarded, out, err);
        }
        if (c_integ->parsed()) {
            const VarTable vars = resolve_vars(integ.common, {});
            const DiffForm w = parse_form(integ.form, vars);
            const IntegrabilityVerdict v = is_integrable_form(w);
            json rep = header("check-integrable", vars);
            rep["inputs"] = {{"form", tensor_str(w, vars)}};
            rep["integrable"] = v.integrable;
            if (!v.integrable) {
                rep["failing_condition"] = v.failing_condition;
                rep["witness"] = witness_str(v.witness_A, vars);
                rep["residual"] = tensor_str(*v.residual, vars);
            }
            rep["exact"] = true;
            return finish({rep, false}, integ.common);
        }
        if (c_nambu->parsed()) {
            const VarTable vars = resolve_vars(nambu_opts.common, {});
            const MultiVec t = parse_multivec(nambu_opts.tensor, vars);
            const IntegrabilityVerdict v = is_nambu(t);
            json rep = header("check-nambu", vars);
            rep["inputs"] = {{"tensor", tensor_str(t, vars)}};
            rep["nambu"] = v.integrable;
            rep["dual_form"] = tensor_str(dualize(t), vars);
            if (!v.integrable) {
                rep["failing_condition"] = v.failing_condition;
                rep["witness"] = witness_str(v.witness_A, vars);
                rep["residual"] = tensor_str(*v.residual, vars);
            }
            rep["exact"] = true;
            return finish({rep, false}, nambu_opts.common);
        }
        if (c_assoc->parsed()) {
            const VarTable vars = resolve_vars(assoc.common, {});
            std::vector<MultiVec> gens;
            for (const auto& g : assoc.gens) gens.push_back(parse_multivec(g, vars));
            std::optional<Poly> locus;
            if (!assoc.sing_locus.empty()) locus = parse_poly(assoc.sing_locus, vars);
            const AssociatedNambu an = associated_nambu(gens, locus);
            json rep = header("associated-nambu", vars);
            json gens_json = json::array();
            for (const auto& g : gens) gens_json.push_back(tensor_str(g, vars));
            rep["inputs"] = {{"generators", gens_json}};
            rep["pi"] = tensor_str(wedge_generators(gens), vars);
            rep["lambda"] = tensor_str(an.lambda, vars);
            rep["h"] = poly_str(an.cofactor_h, vars);
            rep["s"] = poly_str(an.codim1_correction_s, vars);
            rep["sing_codim_lambda"] = an.sing_codim_lambda;
            rep["exact"] = true;
            return finish({rep, false}, assoc.common);
        }
        if (c_cit->parsed()) {
            const VarTable vars = resolve_vars(cit.common, {});
            const MultiVec x = parse_multivec(cit.field, vars);
            const MultiVec t = parse_multivec(cit.tensor, vars);
            const CitCertificate cert = is_cit(x, t);
            json rep = header("cit-check", vars);
            rep["inputs"] = {{"field", tensor_str(x, vars)}, {"tensor", tensor_str(t, vars)}};
            rep["is_cit"] = cert.is_cit;
            if (cert.conformal_factor_g) rep["g"] = poly_str(*cert.conformal_factor_g, vars);
            if (cert.obstruction) rep["obstruction"] = tensor_str(*cert.obstruction, vars);
            rep["exact"] = true;
            return finish({rep, false}, cit.common);
        }
        if (c_defcheck->parsed()) {
            const VarTable vars = resolve_vars(defcheck.common, {});
            json rep = header("check-deformation", vars);
            DeformationCheck check;
            if (!defcheck.form.empty() || !defcheck.eta.empty()) {
                if (defcheck.form.empty() || defcheck.eta.empty())
                    throw ParseError("check-deformation needs both --form and --eta", 1);
                const DiffForm w = parse_form(defcheck.form, vars);
                const DiffForm eta = parse_form(defcheck.eta, vars);
                rep["inputs"] = {{"form", tensor_str(w, vars)}, {"eta", tensor_str(eta, vars)}};
                check = is_infinitesimal_deformation(w, eta);
                if (!check.is_deformation) {
                    rep["failing_condition"] = check.failing_condition;
                    rep["witness"] = witness_str(check.witness_A, vars);
                    rep["residual"] = tensor_str(*check.residual, vars);
                }
            } else {
                if (defcheck.tensor.empty() || defcheck.pi.empty())
                    throw ParseError("check-deformation needs --form/--eta or --tensor/--pi", 1);
                const MultiVec base = parse_multivec(defcheck.tensor, vars);
                const MultiVec cand = parse_multivec(defcheck.pi, vars);
                rep["inputs"] = {{"tensor", tensor_str(base, vars)},
                                 {"pi", tensor_str(cand, vars)}};
                check = is_infinitesimal_deformation(base, cand);
                if (!check.is_deformation) {
                    rep["failing_condition"] = check.failing_condition;
                    rep["witness"] = witness_str(check.witness_A, vars);
                    rep["residual"] = tensor_str(*check.residual, vars);
                }
            }
            rep["deformation"] = check.is_deformation;
            rep["exact"] = true;
            return finish({rep, false}, defcheck.common);
        }
        if (c_trivial->parsed()) {
            const VarTable vars = resolve_vars(trivial.common, {});
            const ExprValue base_v = parse_expression(trivial.base, vars);
            const DefMode mode =
                trivial.mode == "foliation" ? DefMode::Foliation : DefMode::Tensor;
            std::optional<TrivialWitness> witness;
            std::string base_str, cand_str;
            if (std::holds_alternative<DiffForm>(base_v)) {
                const DiffForm base = std::get<DiffForm>(base_v);
                const DiffForm cand = parse_form(trivial.candidate, vars);
                witness = is_trivial_deformation(base, cand, mode, trivial.solve_cutoff);
                base_str = tensor_str(base, vars);
                cand_str = tensor_str(cand, vars);
            } else {
                const MultiVec base = parse_multivec(trivial.base, vars);
                const MultiVec cand = parse_multivec(trivial.candidate, vars);
                witness = is_trivial_deformation(base, cand, mode, trivial.solve_cutoff);
                base_str = tensor_str(base, vars);
                cand_str = tensor_str(cand, vars);
            }
            json rep = header("trivial?", vars);
            rep["inputs"] = {{"base", base_str},
                             {"candidate", cand_str},
                             {"mode", trivial.mode}};
            rep["solve_cutoff"] = trivial.solve_cutoff;
            rep["witness_found"] = witness.has_value();
            if (witness) {
                rep["X"] = tensor_str(witness->X, vars);
                if (witness->f) rep["f"] = poly_str(*witness->f, vars);
            } else {
                rep["note"] = "no witness with coefficients of degree <= cutoff; "
                              "this is not a proof of nontriviality";
            }
            rep["exact"] = true;
            return finish({rep, false}, trivial.common);
        }
        if (c_triv->parsed()) {
            const VarTable vars = resolve_vars(triv.common, {});
            const MultiVec pi = parse_multivec(triv.pi, vars);
            const TrivializationWitness witness = trivialize_regular(triv.q, pi);
            json rep = header("trivialize", vars);
            rep["inputs"] = {{"q", triv.q}, {"pi", tensor_str(pi, vars)}};
            rep["X"] = tensor_str(witness.X, vars);
            json fk = json::object();
            for (const auto& [key, poly] : witness.fk)
                fk["f[" + std::to_string(key.second + 1) + "][" + std::to_string(key.first + 1) +
                   "]"] = poly_str(poly, vars);
            rep["fk"] = std::move(fk);
            json bigf = json::object();
            for (const auto& [k, poly] : witness.Fk)
                bigf["F[" + std::to_string(k + 1) + "]"] = poly_str(poly, vars);
            rep["Fk"] = std::move(bigf);
            rep["residual"] = tensor_str(witness.residual, vars);
            rep["verified"] = witness.residual.is_zero();
            rep["exact"] = true;
            return finish({rep, false}, triv.common);
        }
        if (c_milnor->parsed()) {
            const VarTable vars = resolve_vars(milnor_opts.common, {milnor_opts.f});
            const Poly f = parse_poly(milnor_opts.f, vars);
            const QuotientReport r = milnor_number(f, policy_of(milnor_opts.common));
            json rep = header("milnor", vars);
            rep["inputs"] = {{"f", poly_str(f, vars)}};
            rep.update(report_quotient(r, vars, 1));
            attach_policy(rep, milnor_opts.common);
            return finish({rep, !r.stabilized}, milnor_opts.common);
        }
        if (c_tjurina->parsed()) {
            const VarTable vars = resolve_vars(tjurina_opts.common, {tjurina_opts.f});
            const Poly f = parse_poly(tjurina_opts.f, vars);
            const QuotientReport r = tjurina_number(f, policy_of(tjurina_opts.common));
            json rep = header("tjurina", vars);
            rep["inputs"] = {{"f", poly_str(f, vars)}};
            rep.update(report_quotient(r, vars, 1));
            attach_policy(rep, tjurina_opts.common);
            return finish({rep, !r.stabilized}, tjurina_opts.common);
        }
        if (c_dh->parsed()) {
            const VarTable vars = resolve_vars(dh_opts.common, {dh_opts.f});
            const Poly f = parse_poly(dh_opts.f, vars);
            const DefMode mode =
                dh_opts.mode == "foliation" ? DefMode::Foliation : DefMode::Tensor;
            const QuotientReport r = dh_top_order(f, mode, policy_of(dh_opts.common));
            json rep = header("dh", vars);
            rep["inputs"] = {{"f", poly_str(f, vars)}, {"mode", dh_opts.mode}};
            rep.update(report_quotient(r, vars, 1));
            attach_policy(rep, dh_opts.common);
            return finish({rep, !r.stabilized}, dh_opts.common);
        }
        if (c_dhfol->parsed()) {
            const VarTable vars = resolve_vars(dhfol.common, dhfol.fs);
            std::vector<Poly> F;
            for (const auto& s : dhfol.fs) F.push_back(parse_poly(s, vars));
            const QuotientReport r = dh_decomposable_foliation(F, policy_of(dhfol.common));
            json rep = header("dh-foliation", vars);
            json fs_json = json::array();
            for (const Poly& f : F) fs_json.push_back(poly_str(f, vars));
            rep["inputs"] = {{"F", fs_json}};
            rep.update(report_quotient(r, vars, static_cast<int>(F.size())));
            attach_policy(rep, dhfol.common);
            return finish({rep, !r.stabilized}, dhfol.common);
        }
        if (c_rl->parsed()) {
            const VarTable vars = resolve_vars(rl.common, rl.fs);
            std::vector<Poly> F;
            for (const auto& s : rl.fs) F.push_back(parse_poly(s, vars));
            const QuotientReport r = rl_quotient_dim({F, policy_of(rl.common)});
            json rep = header("rl-quotient", vars);
            json fs_json = json::array();
            for (const Poly& f : F) fs_json.push_back(poly_str(f, vars));
            rep["inputs"] = {{"F", fs_json}};
            rep.update(report_quotient(r, vars, static_cast<int>(F.size())));
            attach_policy(rep, rl.common);
            return finish({rep, !r.stabilized}, rl.common);
        }
        if (c_lindh->parsed()) {
            const RatMat m = parse_ratmat(lindh.matrix);
            const DhLinReport r = dh_lin(m);
            const ResonanceResult res = is_nonresonant(m);
            VarTable vars = default_vars(m.rows);
            json rep = header("linear-dh", vars);
            rep["inputs"] = {{"matrix", ratmat_str(m)}};
            rep["orbit_dim"] = r.orbit_dim;
            rep["dim_tensor"] = r.dim_tensor;
            rep["dim_foliation"] = r.dim_foliation;
            rep["shift_line_independent"] = r.shift_line_independent;
            rep["nonresonant"] = res.status == ResonanceResult::Status::Nonresonant
                                     ? "yes"
                                     : (res.status == ResonanceResult::Status::Resonant
                                            ? "no"
                                            : "unknown");
            rep["linearization_valid"] =
                res.status == ResonanceResult::Status::Nonresonant;
            rep["exact"] = true;
            return finish({rep, false}, lindh.common);
        }
        if (c_reso->parsed()) {
            const RatMat m = parse_ratmat(reso.matrix);
            const ResonanceResult r = is_nonresonant(m, reso.order_bound);
            VarTable vars = default_vars(m.rows);
            json rep = header("resonance", vars);
            rep["inputs"] = {{"matrix", ratmat_str(m)}};
            rep["status"] = r.status == ResonanceResult::Status::Nonresonant
                                ? "nonresonant"
                                : (r.status == ResonanceResult::Status::Resonant ? "resonant"
                                                                                 : "unknown");
            if (r.rational_spectrum) {
                json eig = json::array();
                for (const Rat& v : r.eigenvalues) eig.push_back(rat_str(v));
                rep["eigenvalues"] = std::move(eig);
            }
            if (r.status == ResonanceResult::Status::Resonant) {
                rep["witness_i"] = r.witness_i + 1;
                json mvec = json::array();
                for (long v : r.witness_m) mvec.push_back(v);
                rep["witness_m"] = std::move(mvec);
            }
            if (r.status == ResonanceResult::Status::Unknown)
                rep["order_bound"] = r.order_bound;
            rep["exact"] = true;
            return finish({rep, false}, reso.common);
        }
        if (c_classify->parsed()) {
            const VarTable vars = resolve_vars(classify.common, {});
            const MultiVec t = parse_multivec(classify.tensor, vars);
            const LinearNambuClass cls = classify_linear_nambu(t);
            json rep = header("classify-linear-nambu", vars);
            rep["inputs"] = {{"tensor", tensor_str(t, vars)}};
            rep["kind"] = cls.kind == LinearNambuKind::Type1
                              ? "TYPE1"
                              : (cls.kind == LinearNambuKind::Type2 ? "TYPE2"
                                                                    : "NOT_LINEAR_NAMBU");
            if (cls.Q) rep["Q"] = ratmat_str(*cls.Q);
            if (cls.B) rep["B"] = ratmat_str(*cls.B);
            if (!cls.block.empty()) {
                json blk = json::array();
                for (int v : cls.block) blk.push_back(vars.names[v]);
                rep["block"] = std::move(blk);
            }
            rep["nondegenerate_Q"] = cls.nondegenerate_Q;
            rep["rigidity_note"] = cls.rigidity_note;
            rep["exact"] = true;
            return finish({rep, false}, classify.common);
        }
    } catch (const ParseError& e) {
        json rep;
        rep["schema"] = 1;
        rep["error"] = {{"kind", "parse"}, {"message", e.what()}, {"column", e.column()}};
        out << rep.dump() << "\n";
        return kExitParse;
    } catch (const HypothesisError& e) {
        json rep;
        rep["schema"] = 1;
        rep["error"] = {{"kind", "hypothesis"}, {"message", e.what()}};
        out << rep.dump() << "\n";
        return kExitHypothesis;
    }
    err << "no subcommand\n";
    return kExitParse;
}

} // namespace nambu
