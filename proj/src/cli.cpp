#include "forge/cli.hpp"

#include "forge/document.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

namespace forge {

namespace {

using doc::Document;
using doc::Json;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr std::size_t kTextWitnessLimit = 5;

/// A construction that fails its own verification.
struct StageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string star_label(const std::string& l) { return l + "*"; }

doc::Labels doubled(const doc::Labels& l) {
    if (!l) return std::nullopt;
    std::vector<std::string> out = *l;
    for (const auto& s : *l) out.push_back(star_label(s));
    return out;
}

CheckReport check_suite(const Document& d);

CheckReport list_suite(const Document& d) {
    CheckReport rep;
    const Json& items = d.body.at("items");
    for (std::size_t i = 0; i < items.size(); ++i)
        rep.merge(check_suite(doc::from_json(items[i])), "items." + std::to_string(i));
    return rep;
}

CheckReport check_suite(const Document& d) {
    const std::string& k = d.kind;
    if (k == "algebra") {
        CheckReport rep;
        Algebra a = doc::algebra(d);
        add_associativity(rep, a.mult, "associativity");
        if (doc::declared_commutative(d)) add_commutativity(rep, a.mult, "commutativity");
        return rep;
    }
    if (k == "diff_algebra") return check_diff_algebra(doc::diff_algebra(d), doc::declared_commutative(d));
    if (k == "bimodule") {
        DiffAlgebra da = doc::diff_algebra(d);
        DiffBimodule dbm = doc::diff_bimodule(d);
        CheckReport rep;
        rep.merge(check_diff_algebra(da), "algebra");
        rep.merge(check_diff_bimodule(da, dbm), "bimodule");
        if (auto p = doc::pi(d)) rep.merge(check_admissible(da, AdmissibleQuadruple{dbm.base, *p}), "admissible");
        return rep;
    }
    if (k == "asi_bialgebra") return check_asi(doc::asi_bialgebra(d));
    if (k == "diff_asi_bialgebra") return check_diff_asi(doc::diff_asi_bialgebra(d));
    if (k == "zinbiel") return check_zinbiel(doc::zinbiel(d));
    if (k == "dendriform") return check_diff_dendriform(doc::dendriform(d));
    if (k == "poisson") return check_poisson(doc::poisson(d));
    if (k == "poisson_bialgebra") return check_poisson_bialgebra(doc::poisson_bialgebra(d));
    if (k == "pre_poisson") return check_prepoisson(doc::pre_poisson(d));
    if (k == "r_element") {
        RElement r = doc::r_element(d);
        CheckReport rep;
        rep.law("antisymmetry");
        rep.add("antisymmetry", {}, r + transpose(r));
        return rep;
    }
    if (k == "linear_map") {
        if (!d.body.contains("mult")) return CheckReport{};
        CheckReport rep;
        rep.merge(check_derivation(doc::algebra(d), doc::linear_map(d)), "derivation");
        return rep;
    }
    if (k == "bilinear_form") {
        BilForm f = doc::bilinear_form(d);
        if (d.body.contains("mult")) return check_frobenius(doc::algebra(d), f);
        CheckReport rep;
        rep.law("nondegenerate");
        if (rank(f.b) < f.dim()) rep.fail("nondegenerate", "the form is degenerate");
        return rep;
    }
    return list_suite(d);
}

/// Keeps laws whose name, or group prefix before a dot, was requested.
CheckReport select_laws(const CheckReport& rep, const std::vector<std::string>& wanted) {
    std::set<std::string> hit;
    CheckReport out;
    for (const auto& l : rep.laws()) {
        for (const auto& w : wanted) {
            if (l.name == w || l.name.rfind(w + ".", 0) == 0) {
                hit.insert(w);
                CheckReport one;
                LawResult& dst = one.law(l.name);
                dst = l;
                out.merge(one);
                break;
            }
        }
    }
    for (const auto& w : wanted)
        if (!hit.count(w)) throw ParseError("unknown law \"" + w + "\" for this document", "--laws");
    return out;
}

std::string format_tuple(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

void print_text(std::ostream& out, const CheckReport& rep) {
    for (const auto& l : rep.laws()) {
        out << (l.pass() ? "PASS " : "FAIL ") << l.name;
        if (!l.witnesses.empty()) out << " (" << l.witnesses.size() << " witnesses)";
        out << "\n";
        if (!l.note.empty()) out << "  note: " << l.note << "\n";
        std::size_t shown = 0;
        for (const auto& w : l.witnesses) {
            if (shown++ == kTextWitnessLimit) {
                out << "  ... " << l.witnesses.size() - kTextWitnessLimit << " more\n";
                break;
            }
            out << "  at " << format_tuple(w.at) << ": " << doc::sparse(w.residual, w.shape).dump() << "\n";
        }
    }
    out << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
}

int cmd_check(const std::string& file, const std::vector<std::string>& laws, bool json, std::ostream& out) {
    Document d = doc::load(file);
    CheckReport rep = check_suite(d);
    if (!laws.empty()) rep = select_laws(rep, laws);
    if (json) {
        out << doc::dump(doc::encode_report(rep, d.digest, d.kind));
    } else {
        out << "kind: " << d.kind << "\n";
        print_text(out, rep);
    }
    return rep.pass() ? kPass : kViolation;
}

int cmd_derive(const std::string& file, const std::string& space, std::ostream& out) {
    Document d = doc::load(file);
    std::vector<Json> items;
    doc::Labels labels = doc::labels(d);
    if (space == "derivations") {
        Algebra a = doc::algebra(d);
        for (const auto& m : derivation_space(a)) {
            Json j = doc::encode_linear_map(m, labels);
            j["mult"] = doc::encode_algebra(a)["mult"];
            items.push_back(j);
        }
    } else {
        ASIBialgebra b = doc::asi_bialgebra(d);
        for (const auto& p : coherent_derivation_space(b))
            items.push_back(doc::encode_diff_asi_bialgebra(DiffASIBialgebra{b, {p.d}, {p.cd}}, labels));
    }
    out << doc::dump(doc::encode_list(items));
    return kPass;
}

struct BuildOutput {
    std::vector<std::pair<std::string, Json>> documents;
    Json report;
    bool pass = true;
    std::string failed_stage;
};

Json build_report(const std::string& digest, const std::string& op, const CheckReport& rep) {
    Json j;
    j["tool"] = doc::kTool;
    j["version"] = doc::kVersion;
    j["input_digest"] = digest;
    j["op"] = op;
    j["verdict"] = rep.pass() ? "pass" : "fail";
    j["laws"] = doc::encode_laws(rep);
    return j;
}

BuildOutput single(const std::string& digest, const std::string& op, const CheckReport& rep,
                   std::vector<std::pair<std::string, Json>> docs) {
    BuildOutput o{std::move(docs), build_report(digest, op, rep), rep.pass(), rep.pass() ? "" : op};
    return o;
}

BuildOutput build_pipeline(const Document& d) {
    PipelineBundle b = pipeline_zinbiel_to_poisson_bialgebra(doc::zinbiel(d));
    doc::Labels l = doc::labels(d), l2 = doubled(l);
    auto passed = [&](const std::string& name) {
        for (const auto& s : b.stages)
            if (s.name == name) return s.report.pass();
        return false;
    };
    BuildOutput o;
    if (passed("associated_algebra"))
        o.documents.emplace_back("01_associated_algebra", doc::encode_diff_algebra(b.associated, {}, true, l));
    if (passed("induced_poisson")) o.documents.emplace_back("02_induced_poisson", doc::encode_poisson(b.induced, l));
    if (passed("pre_poisson")) o.documents.emplace_back("03_pre_poisson", doc::encode_pre_poisson(b.pre_poisson, l));
    if (passed("diff_asi_bialgebra")) {
        o.documents.emplace_back("04_diff_asi_bialgebra", doc::encode_diff_asi_bialgebra(b.diff_asi, l2));
        o.documents.emplace_back("05_r", doc::encode_r_element(b.r, l2));
    }
    if (passed("poisson_bialgebra"))
        o.documents.emplace_back("06_poisson_bialgebra", doc::encode_poisson_bialgebra(b.poisson_bialgebra, l2));

    Json rep;
    rep["tool"] = doc::kTool;
    rep["version"] = doc::kVersion;
    rep["input_digest"] = d.digest;
    rep["op"] = "zinbiel-pipeline";
    rep["verdict"] = b.pass() ? "pass" : "fail";
    if (b.halted_at) rep["halted_at"] = *b.halted_at;
    Json gates = Json::object();
    for (const auto& [name, value] : b.gates) gates[name] = value;
    rep["gates"] = gates;
    rep["stages"] = Json::array();
    for (const auto& s : b.stages) {
        Json sj;
        sj["name"] = s.name;
        sj["verdict"] = s.report.pass() ? "pass" : "fail";
        if (!s.note.empty()) sj["note"] = s.note;
        sj["laws"] = doc::encode_laws(s.report);
        rep["stages"].push_back(sj);
    }
    o.report = rep;
    o.pass = b.pass();
    o.failed_stage = b.halted_at.value_or("");
    return o;
}

std::vector<Scalar> parse_theta(const std::vector<std::string>& theta) {
    std::vector<Scalar> out;
    for (const auto& t : theta) {
        try {
            out.push_back(parse_scalar(t));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), "--theta");
        }
    }
    return out;
}

RElement load_r(const std::string& path, std::size_t n) {
    if (path.empty()) throw ParseError("this operation needs --r", "--r");
    RElement r = doc::r_element(doc::load(path));
    if (r.rows() != n) throw ShapeError("r has dimension " + std::to_string(r.rows()) + ", expected " + std::to_string(n));
    return r;
}

struct BuildArgs {
    std::string file, op, out_dir, r_file;
    std::vector<std::string> theta;
    std::size_t n = 0;
};

BuildOutput run_build(const BuildArgs& a) {
    if (a.op == "canonical-r") {
        if (a.n == 0) throw ParseError("canonical-r needs --n with n > 0", "--n");
        RElement r = canonical_r(a.n);
        CheckReport rep;
        rep.law("antisymmetry");
        rep.add("antisymmetry", {}, r + transpose(r));
        return single("none", a.op, rep, {{"01_r", doc::encode_r_element(r)}});
    }
    if (a.file.empty()) throw ParseError("missing input file", "file");
    Document d = doc::load(a.file);
    doc::Labels l = doc::labels(d), l2 = doubled(l);
    const std::string& op = a.op;

    if (op == "zinbiel-pipeline") return build_pipeline(d);
    if (op == "semidirect") {
        DiffAlgebra da = doc::diff_algebra(d);
        DiffBimodule dbm = doc::diff_bimodule(d);
        DiffAlgebra sum = semidirect_product(da, dbm);
        CheckReport rep;
        rep.merge(check_diff_bimodule(da, dbm), "bimodule");
        rep.merge(check_diff_algebra(sum), "product");
        return single(d.digest, op, rep, {{"01_semidirect", doc::encode_diff_algebra(sum)}});
    }
    if (op == "dual") {
        if (d.kind == "bimodule") {
            DiffAlgebra da = doc::diff_algebra(d);
            auto p = doc::pi(d);
            if (!p) throw ParseError("dual of a bimodule needs a \"pi\" family", "/pi");
            DiffBimodule base = doc::diff_bimodule(d);
            DiffBimodule dual = dual_bimodule(base.base, *p);
            CheckReport rep = check_admissible(da, AdmissibleQuadruple{base.base, *p});
            return single(d.digest, op, rep, {{"01_dual", doc::encode_bimodule(da, dual, std::nullopt, l)}});
        }
        DiffASIBialgebra dual = dualize(doc::diff_asi_bialgebra(d));
        return single(d.digest, op, check_diff_asi(dual), {{"01_dual", doc::encode_diff_asi_bialgebra(dual)}});
    }
    if (op == "double") {
        DiffASIBialgebra db = d.kind == "asi_bialgebra" ? DiffASIBialgebra{doc::asi_bialgebra(d), {}, {}}
                                                        : doc::diff_asi_bialgebra(d);
        DoubleResult dr = double_construction(db);
        return single(d.digest, op, dr.report,
                      {{"01_double", doc::encode_diff_algebra(dr.algebra, {}, false, l2)},
                       {"02_form", doc::encode_bilinear_form(dr.form, l2)}});
    }
    if (op == "coboundary") {
        if (d.kind == "poisson") {
            PoissonAlgebra p = doc::poisson(d);
            RElement r = load_r(a.r_file, p.dim());
            auto [delta, cop] = coboundary_poisson(p, r);
            PoissonBialgebra pb{p, delta, cop};
            return single(d.digest, op, check_poisson_bialgebra(pb),
                          {{"01_coboundary", doc::encode_poisson_bialgebra(pb, l)}});
        }
        DiffAlgebra da = doc::diff_algebra(d);
        std::vector<LinearOp> ps = doc::psi(d);
        RElement r = load_r(a.r_file, da.dim());
        DiffASIBialgebra db{ASIBialgebra{da.base, coboundary_delta(da.base, r)}, da.phi, ps};
        CheckReport rep = check_coboundary_conditions(da, ps, r, CoboundaryOptions{true});
        return single(d.digest, op, rep, {{"01_coboundary", doc::encode_diff_asi_bialgebra(db, l)}});
    }
    if (op == "induce-poisson") {
        PoissonAlgebra p = induce_poisson(doc::diff_algebra(d));
        return single(d.digest, op, check_poisson(p), {{"01_poisson", doc::encode_poisson(p, l)}});
    }
    if (op == "induce-poisson-bialgebra") {
        InducedPoissonBialgebra ipb = build_induced_poisson_bialgebra(doc::diff_asi_bialgebra(d));
        return single(d.digest, op, ipb.report,
                      {{"01_poisson_bialgebra", doc::encode_poisson_bialgebra(ipb.bialgebra, l)}});
    }
    if (op == "dendriform-asi") {
        DiffDendriform dd = d.kind == "zinbiel" ? as_dendriform(doc::zinbiel(d)) : doc::dendriform(d);
        DiffASIBialgebra db = dendriform_to_diff_asi(dd, parse_theta(a.theta));
        return single(d.digest, op, check_diff_asi(db), {{"01_diff_asi_bialgebra", doc::encode_diff_asi_bialgebra(db, l2)}});
    }
    if (op == "prepoisson") {
        if (d.kind == "pre_poisson") {
            PoissonAlgebra p = prepoisson_to_poisson(doc::pre_poisson(d));
            return single(d.digest, op, check_poisson(p), {{"01_poisson", doc::encode_poisson(p, l)}});
        }
        PrePoisson pp = zinbiel_to_prepoisson(doc::zinbiel(d));
        return single(d.digest, op, check_prepoisson(pp), {{"01_pre_poisson", doc::encode_pre_poisson(pp, l)}});
    }
    throw ParseError("unknown operation \"" + op + "\"", "--op");
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text;
}

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
    BuildOutput o;
    try {
        o = run_build(a);
    } catch (const Refused& e) {
        err << "stage failed: " << a.op << ": " << e.what() << "\n";
        out << doc::dump(build_report("", a.op, e.report));
        return kViolation;
    }
    if (a.out_dir.empty()) {
        Json j;
        j["documents"] = Json::array();
        for (const auto& [name, document] : o.documents) {
            Json entry;
            entry["name"] = name;
            entry["document"] = document;
            j["documents"].push_back(entry);
        }
        j["report"] = o.report;
        out << doc::dump(j);
    } else {
        std::filesystem::path dir(a.out_dir);
        std::filesystem::create_directories(dir);
        for (const auto& [name, document] : o.documents) {
            write_file(dir / (name + ".json"), doc::dump(document));
            out << "wrote " << (dir / (name + ".json")).string() << "\n";
        }
        write_file(dir / "report.json", doc::dump(o.report));
        out << "wrote " << (dir / "report.json").string() << "\n";
    }
    if (!o.pass) {
        err << "stage failed: " << o.failed_stage << "\n";
        return kViolation;
    }
    return kPass;
}

CheckReport keep(const CheckReport& rep, const std::vector<std::string>& names) { return select_laws(rep, names); }

int cmd_residual(const std::string& file, const std::string& r_file, const std::string& eq, std::ostream& out) {
    Document d = doc::load(file);
    Document rd = doc::load(r_file);
    RElement r = doc::r_element(rd);
    CheckReport rep;
    auto require_dim = [&](std::size_t n) {
        if (r.rows() != n)
            throw ShapeError("r has dimension " + std::to_string(r.rows()) + ", structure has " + std::to_string(n));
    };
    if (eq == "pybe") {
        PoissonAlgebra p = doc::poisson(d);
        require_dim(p.dim());
        auto [bracket, prod] = pybe_residual(p, r);
        rep.law("pybe_bracket");
        rep.law("pybe_product");
        rep.add("pybe_bracket", {}, bracket);
        rep.add("pybe_product", {}, prod);
    } else if (eq == "aybe") {
        Algebra a = d.kind == "poisson" || d.kind == "poisson_bialgebra" ? Algebra(doc::poisson(d).prod) : doc::algebra(d);
        require_dim(a.dim());
        rep.law("aybe");
        rep.add("aybe", {}, aybe_residual(a, r));
    } else {
        DiffAlgebra da = doc::diff_algebra(d);
        std::vector<LinearOp> ps = doc::psi(d);
        require_dim(da.dim());
        if (eq == "pqadm") {
            rep = check_psi_admissible_aybe(da, ps, r);
        } else if (eq == "coboundary") {
            rep = check_coboundary_conditions(da, ps, r);
        } else {
            CompatConditions cc = check_compat_conditions(da, ps, coboundary_delta(da.base, r));
            rep = eq == "dpb" ? keep(cc.report, {"dpb1", "dpb2"}) : keep(cc.report, {"vip1", "vip2"});
        }
    }
    Json j;
    j["tool"] = doc::kTool;
    j["version"] = doc::kVersion;
    j["input_digest"] = d.digest;
    j["r_digest"] = rd.digest;
    j["equation"] = eq;
    j["verdict"] = rep.pass() ? "pass" : "fail";
    j["residuals"] = Json::array();
    for (const auto& l : rep.laws())
        for (const auto& w : l.witnesses) {
            Json wj;
            wj["name"] = l.name;
            wj["at"] = w.at;
            wj["shape"] = w.shape;
            wj["entries"] = doc::sparse(w.residual, w.shape);
            j["residuals"].push_back(wj);
        }
    j["laws"] = doc::encode_laws(rep);
    out << doc::dump(j);
    return rep.pass() ? kPass : kViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of differential (bi)algebra structures", "forge"};
    app.set_version_flag("--version", doc::kVersion);
    app.require_subcommand(1);

    std::string file, r_file, space, eq;
    std::vector<std::string> laws;
    bool json = false;
    BuildArgs b;

    auto* check = app.add_subcommand("check", "Verify every law of a structure document");
    check->add_option("file", file, "Structure document")->required();
    check->add_option("--laws", laws, "Comma-separated law names or groups")->delimiter(',');
    check->add_flag("--json", json, "Emit the JSON report");

    auto* derive = app.add_subcommand("derive", "Solve a linear law system");
    derive->add_option("file", file, "Structure document")->required();
    derive->add_option("--space", space, "derivations or coherent")
        ->required()
        ->check(CLI::IsMember({"derivations", "coherent"}));

    auto* build = app.add_subcommand("build", "Run a construction");
    build->add_option("file", b.file, "Input document");
    build->add_option("--op", b.op, "Construction name")->required();
    build->add_option("--theta", b.theta, "Comma-separated rational shifts")->delimiter(',');
    build->add_option("--out", b.out_dir, "Write documents to this directory");
    build->add_option("--r", b.r_file, "r-element document");
    build->add_option("--n", b.n, "Dimension for canonical-r");

    auto* residual = app.add_subcommand("residual", "Print residual tensors of an equation in r");
    residual->add_option("file", file, "Structure document")->required();
    residual->add_option("--r", r_file, "r-element document")->required();
    residual->add_option("--eq", eq, "Equation")
        ->required()
        ->check(CLI::IsMember({"aybe", "pybe", "pqadm", "coboundary", "dpb", "vip"}));

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (check->parsed()) return cmd_check(file, laws, json, out);
        if (derive->parsed()) return cmd_derive(file, space, out);
        if (build->parsed()) return cmd_build(b, out, err);
        return cmd_residual(file, r_file, eq, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ShapeError& e) {
        err << "shape error: " << e.what() << "\n";
    } catch (const Refused& e) {
        err << "refused: " << e.what() << "\n";
        return kViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kInputError;
}

}  // namespace forge
