#include "forge/document.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace forge::doc {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& where) { throw ParseError(what, where); }

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

struct KindSpec {
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

const std::map<std::string, KindSpec>& kinds() {
    static const std::map<std::string, KindSpec> table = {
        {"algebra", {{"dim", "mult"}, {"commutative"}}},
        {"diff_algebra", {{"dim", "mult", "phi"}, {"psi", "commutative"}}},
        {"bimodule", {{"dim", "v_dim", "mult", "phi", "l", "r", "omega"}, {"pi"}}},
        {"asi_bialgebra", {{"dim", "mult", "comult"}, {}}},
        {"diff_asi_bialgebra", {{"dim", "mult", "comult", "phi", "psi"}, {}}},
        {"zinbiel", {{"dim", "star"}, {"phi"}}},
        {"dendriform", {{"dim", "succ", "prec"}, {"phi"}}},
        {"poisson", {{"dim", "bracket", "prod"}, {}}},
        {"poisson_bialgebra", {{"dim", "bracket", "prod", "cobracket", "comult"}, {}}},
        {"pre_poisson", {{"dim", "diamond", "star"}, {}}},
        {"r_element", {{"dim", "entries"}, {}}},
        {"linear_map", {{"entries"}, {"dim", "rows", "cols", "mult"}}},
        {"bilinear_form", {{"dim", "entries"}, {"mult"}}},
        {"list", {{"items"}, {}}},
    };
    return table;
}

std::size_t read_index(const Json& v, std::size_t bound, const std::string& where) {
    if (!v.is_number_integer()) fail("index must be an integer", where);
    if (!v.is_number_unsigned() && v.get<long long>() < 0) fail("index must be nonnegative", where);
    auto x = v.get<unsigned long long>();
    if (x >= bound) fail("index " + std::to_string(x) + " out of range (size " + std::to_string(bound) + ")", where);
    return static_cast<std::size_t>(x);
}

Scalar read_scalar(const Json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_scalar(v.get<std::string>());
        } catch (const ParseError& e) {
            fail(e.what(), where);
        }
    }
    if (v.is_number_integer()) return Scalar(mpz_class(v.dump()));
    if (v.is_number_float()) fail("floating-point scalars are not exact", where);
    fail("scalar must be a string \"n\" or \"p/q\"", where);
}

std::size_t read_positive(const Json& body, const std::string& key) {
    const Json& v = body.at(key);
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0))
        fail("must be a nonnegative integer", at("", key));
    auto x = v.get<unsigned long long>();
    if (x == 0) fail("must be positive", at("", key));
    if (x > 4096) fail("dimension too large", at("", key));
    return static_cast<std::size_t>(x);
}

Vec read_sparse(const Json& arr, const std::vector<std::size_t>& shape, const std::string& where) {
    if (!arr.is_array()) fail("expected a list of sparse entries", where);
    std::size_t total = 1;
    for (auto s : shape) total *= s;
    Vec out(total, Scalar(0));
    std::vector<bool> seen(total, false);
    for (std::size_t e = 0; e < arr.size(); ++e) {
        const Json& entry = arr[e];
        std::string p = at(where, e);
        if (!entry.is_array() || entry.size() != shape.size() + 1)
            fail("entry must hold " + std::to_string(shape.size()) + " indices and a scalar", p);
        std::size_t flat = 0;
        for (std::size_t a = 0; a < shape.size(); ++a) flat = flat * shape[a] + read_index(entry[a], shape[a], at(p, a));
        if (seen[flat]) fail("duplicate entry", p);
        seen[flat] = true;
        out[flat] = read_scalar(entry[shape.size()], at(p, shape.size()));
    }
    return out;
}

Cube read_cube(const Json& body, const std::string& key, std::size_t n) {
    Vec v = read_sparse(body.at(key), {n, n, n}, at("", key));
    Cube c(n);
    std::size_t f = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(i, j, k) = v[f++];
    return c;
}

Matrix read_matrix(const Json& arr, std::size_t rows, std::size_t cols, const std::string& where) {
    return unflatten(read_sparse(arr, {rows, cols}, where), rows, cols);
}

std::vector<Matrix> read_family(const Json& body, const std::string& key, std::size_t n) {
    const Json& arr = body.at(key);
    if (!arr.is_array()) fail("expected a list of maps", at("", key));
    std::vector<Matrix> out;
    for (std::size_t m = 0; m < arr.size(); ++m) out.push_back(read_matrix(arr[m], n, n, at(at("", key), m)));
    return out;
}

std::vector<Matrix> read_actions(const Json& body, const std::string& key, std::size_t count, std::size_t m) {
    Vec v = read_sparse(body.at(key), {count, m, m}, at("", key));
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(unflatten(v, m, m, i * m * m));
    return out;
}

void require_field(const Document& d, const std::string& key, const char* what) {
    if (!d.body.contains(key)) fail("a " + d.kind + " document carries no " + what, at("", key));
}

Json encode_cube(const Cube& c) { return sparse(c.data(), {c.dim(0), c.dim(1), c.dim(2)}); }
Json encode_matrix(const Matrix& m) { return sparse(m.data(), {m.rows(), m.cols()}); }

Json encode_family(const std::vector<Matrix>& f) {
    Json out = Json::array();
    for (const auto& m : f) out.push_back(encode_matrix(m));
    return out;
}

Json encode_actions(const std::vector<Matrix>& a, std::size_t m) {
    Vec flat;
    for (const auto& x : a) flat.insert(flat.end(), x.data().begin(), x.data().end());
    return sparse(flat, {a.size(), m, m});
}

Json header(const std::string& kind, std::size_t n, const Labels& l) {
    Json j;
    j["kind"] = kind;
    j["dim"] = n;
    if (l) {
        if (l->size() != n) throw ShapeError("label count does not match the dimension");
        j["labels"] = *l;
    }
    return j;
}

void validate(const Document& d) {
    const auto& k = d.kind;
    if (k == "algebra") algebra(d);
    else if (k == "diff_algebra") diff_algebra(d), psi(d);
    else if (k == "bimodule") diff_bimodule(d), pi(d);
    else if (k == "asi_bialgebra") asi_bialgebra(d);
    else if (k == "diff_asi_bialgebra") diff_asi_bialgebra(d);
    else if (k == "zinbiel") zinbiel(d);
    else if (k == "dendriform") dendriform(d);
    else if (k == "poisson") poisson(d);
    else if (k == "poisson_bialgebra") poisson_bialgebra(d);
    else if (k == "pre_poisson") pre_poisson(d);
    else if (k == "r_element") r_element(d);
    else if (k == "linear_map") {
        linear_map(d);
        if (d.body.contains("mult")) algebra(d);
    } else if (k == "bilinear_form") {
        bilinear_form(d);
        if (d.body.contains("mult")) algebra(d);
    } else if (k == "list") {
        const Json& items = d.body.at("items");
        if (!items.is_array()) fail("expected a list of documents", "/items");
        for (const auto& item : items) from_json(item);
    }
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::string out;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        out += buf;
    }
    return out;
}

Document from_json(const Json& j) {
    if (!j.is_object()) fail("document must be a JSON object", "/");
    if (!j.contains("kind") || !j.at("kind").is_string()) fail("missing string field", "/kind");
    Document d{j.at("kind").get<std::string>(), j, {}};
    auto it = kinds().find(d.kind);
    if (it == kinds().end()) fail("unknown kind \"" + d.kind + "\"", "/kind");
    const KindSpec& spec = it->second;
    for (const auto& key : spec.required)
        if (!j.contains(key)) fail("missing field", at("", key));
    for (const auto& [key, value] : j.items()) {
        bool known = key == "kind" || key == "labels" ||
                     std::find(spec.required.begin(), spec.required.end(), key) != spec.required.end() ||
                     std::find(spec.optional.begin(), spec.optional.end(), key) != spec.optional.end();
        if (!known) fail("unknown field", at("", key));
    }
    if (d.kind == "linear_map" && !j.contains("dim") && !(j.contains("rows") && j.contains("cols")))
        fail("linear_map needs dim or rows and cols", "/dim");
    if (j.contains("commutative") && !j.at("commutative").is_boolean()) fail("must be a boolean", "/commutative");
    if (j.contains("labels")) {
        const Json& l = j.at("labels");
        if (!l.is_array()) fail("expected a list of strings", "/labels");
        for (std::size_t i = 0; i < l.size(); ++i)
            if (!l[i].is_string()) fail("label must be a string", at("/labels", i));
        if (d.kind != "list" && l.size() != dim(d)) fail("label count does not match the dimension", "/labels");
    }
    validate(d);
    return d;
}

Document parse(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
    Document d = from_json(j);
    d.digest = "sha256:" + sha256_hex(text);
    return d;
}

Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(e.what(), path);
    }
}

std::size_t dim(const Document& d) {
    if (d.body.contains("dim")) return read_positive(d.body, "dim");
    if (d.kind == "linear_map") return read_positive(d.body, "rows");
    fail("a " + d.kind + " document has no dimension", "/dim");
}

std::optional<std::vector<std::string>> labels(const Document& d) {
    if (!d.body.contains("labels")) return std::nullopt;
    return d.body.at("labels").get<std::vector<std::string>>();
}

Algebra algebra(const Document& d) {
    require_field(d, "mult", "product \"mult\"");
    return Algebra(read_cube(d.body, "mult", dim(d)));
}

DiffAlgebra diff_algebra(const Document& d) {
    Algebra a = algebra(d);
    std::vector<LinearOp> phi = d.body.contains("phi") ? read_family(d.body, "phi", dim(d)) : std::vector<LinearOp>{};
    return DiffAlgebra{a, phi};
}

std::vector<LinearOp> psi(const Document& d) {
    return d.body.contains("psi") ? read_family(d.body, "psi", dim(d)) : std::vector<LinearOp>{};
}

bool declared_commutative(const Document& d) { return d.body.value("commutative", false); }

DiffBimodule diff_bimodule(const Document& d) {
    if (d.kind != "bimodule") fail("expected a bimodule document, got " + d.kind, "/kind");
    std::size_t n = dim(d), m = read_positive(d.body, "v_dim");
    Bimodule bm{n, m, read_actions(d.body, "l", n, m), read_actions(d.body, "r", n, m)};
    return DiffBimodule{bm, read_family(d.body, "omega", m)};
}

std::optional<std::vector<LinearOp>> pi(const Document& d) {
    if (!d.body.contains("pi")) return std::nullopt;
    return read_family(d.body, "pi", read_positive(d.body, "v_dim"));
}

ASIBialgebra asi_bialgebra(const Document& d) {
    require_field(d, "comult", "coproduct \"comult\"");
    return ASIBialgebra{algebra(d), Coalgebra(read_cube(d.body, "comult", dim(d)))};
}

DiffASIBialgebra diff_asi_bialgebra(const Document& d) {
    ASIBialgebra b = asi_bialgebra(d);
    return DiffASIBialgebra{b, diff_algebra(d).phi, psi(d)};
}

Zinbiel zinbiel(const Document& d) {
    if (d.kind != "zinbiel") fail("expected a zinbiel document, got " + d.kind, "/kind");
    std::size_t n = dim(d);
    return Zinbiel{read_cube(d.body, "star", n), d.body.contains("phi") ? read_family(d.body, "phi", n) : std::vector<LinearOp>{}};
}

DiffDendriform dendriform(const Document& d) {
    if (d.kind != "dendriform") fail("expected a dendriform document, got " + d.kind, "/kind");
    std::size_t n = dim(d);
    return DiffDendriform{Dendriform{read_cube(d.body, "succ", n), read_cube(d.body, "prec", n)},
                          d.body.contains("phi") ? read_family(d.body, "phi", n) : std::vector<LinearOp>{}};
}

PoissonAlgebra poisson(const Document& d) {
    require_field(d, "bracket", "bracket");
    std::size_t n = dim(d);
    return PoissonAlgebra{read_cube(d.body, "bracket", n), read_cube(d.body, "prod", n)};
}

PoissonBialgebra poisson_bialgebra(const Document& d) {
    require_field(d, "cobracket", "cobracket");
    std::size_t n = dim(d);
    return PoissonBialgebra{poisson(d), read_cube(d.body, "cobracket", n), read_cube(d.body, "comult", n)};
}

PrePoisson pre_poisson(const Document& d) {
    if (d.kind != "pre_poisson") fail("expected a pre_poisson document, got " + d.kind, "/kind");
    std::size_t n = dim(d);
    return PrePoisson{read_cube(d.body, "diamond", n), read_cube(d.body, "star", n)};
}

RElement r_element(const Document& d) {
    if (d.kind != "r_element") fail("expected an r_element document, got " + d.kind, "/kind");
    std::size_t n = dim(d);
    return read_matrix(d.body.at("entries"), n, n, "/entries");
}

LinearOp linear_map(const Document& d) {
    if (d.kind != "linear_map") fail("expected a linear_map document, got " + d.kind, "/kind");
    std::size_t rows = d.body.contains("rows") ? read_positive(d.body, "rows") : dim(d);
    std::size_t cols = d.body.contains("cols") ? read_positive(d.body, "cols") : dim(d);
    return read_matrix(d.body.at("entries"), rows, cols, "/entries");
}

BilForm bilinear_form(const Document& d) {
    if (d.kind != "bilinear_form") fail("expected a bilinear_form document, got " + d.kind, "/kind");
    std::size_t n = dim(d);
    return BilForm{read_matrix(d.body.at("entries"), n, n, "/entries")};
}

Json sparse(const Vec& data, const std::vector<std::size_t>& shape) {
    Json out = Json::array();
    for (std::size_t f = 0; f < data.size(); ++f) {
        if (data[f] == 0) continue;
        Json entry = Json::array();
        std::size_t rest = f;
        std::vector<std::size_t> idx(shape.size());
        for (std::size_t a = shape.size(); a-- > 0;) {
            idx[a] = rest % shape[a];
            rest /= shape[a];
        }
        for (auto i : idx) entry.push_back(i);
        entry.push_back(format_scalar(data[f]));
        out.push_back(entry);
    }
    return out;
}

Json encode_algebra(const Algebra& a, bool commutative, const Labels& l) {
    Json j = header("algebra", a.dim(), l);
    j["mult"] = encode_cube(a.mult);
    if (commutative) j["commutative"] = true;
    return j;
}

Json encode_diff_algebra(const DiffAlgebra& da, const std::vector<LinearOp>& ps, bool commutative, const Labels& l) {
    Json j = header("diff_algebra", da.dim(), l);
    j["mult"] = encode_cube(da.base.mult);
    j["phi"] = encode_family(da.phi);
    if (!ps.empty()) j["psi"] = encode_family(ps);
    if (commutative) j["commutative"] = true;
    return j;
}

Json encode_bimodule(const DiffAlgebra& da, const DiffBimodule& dbm, const std::optional<std::vector<LinearOp>>& p,
                     const Labels& l) {
    Json j = header("bimodule", da.dim(), l);
    std::size_t m = dbm.base.v_dim;
    j["v_dim"] = m;
    j["mult"] = encode_cube(da.base.mult);
    j["phi"] = encode_family(da.phi);
    j["l"] = encode_actions(dbm.base.l, m);
    j["r"] = encode_actions(dbm.base.r, m);
    j["omega"] = encode_family(dbm.omega);
    if (p) j["pi"] = encode_family(*p);
    return j;
}

Json encode_asi_bialgebra(const ASIBialgebra& b, const Labels& l) {
    Json j = header("asi_bialgebra", b.dim(), l);
    j["mult"] = encode_cube(b.alg.mult);
    j["comult"] = encode_cube(b.coalg.comult);
    return j;
}

Json encode_diff_asi_bialgebra(const DiffASIBialgebra& db, const Labels& l) {
    Json j = header("diff_asi_bialgebra", db.dim(), l);
    j["mult"] = encode_cube(db.bialg.alg.mult);
    j["comult"] = encode_cube(db.bialg.coalg.comult);
    j["phi"] = encode_family(db.phi);
    j["psi"] = encode_family(db.psi);
    return j;
}

Json encode_zinbiel(const Zinbiel& z, const Labels& l) {
    Json j = header("zinbiel", z.dim(), l);
    j["star"] = encode_cube(z.star);
    j["phi"] = encode_family(z.phi);
    return j;
}

Json encode_dendriform(const DiffDendriform& dd, const Labels& l) {
    Json j = header("dendriform", dd.dim(), l);
    j["succ"] = encode_cube(dd.base.succ);
    j["prec"] = encode_cube(dd.base.prec);
    j["phi"] = encode_family(dd.phi);
    return j;
}

Json encode_poisson(const PoissonAlgebra& p, const Labels& l) {
    Json j = header("poisson", p.dim(), l);
    j["bracket"] = encode_cube(p.bracket);
    j["prod"] = encode_cube(p.prod);
    return j;
}

Json encode_poisson_bialgebra(const PoissonBialgebra& pb, const Labels& l) {
    Json j = header("poisson_bialgebra", pb.dim(), l);
    j["bracket"] = encode_cube(pb.alg.bracket);
    j["prod"] = encode_cube(pb.alg.prod);
    j["cobracket"] = encode_cube(pb.cobracket);
    j["comult"] = encode_cube(pb.coproduct);
    return j;
}

Json encode_pre_poisson(const PrePoisson& pp, const Labels& l) {
    Json j = header("pre_poisson", pp.dim(), l);
    j["diamond"] = encode_cube(pp.diamond);
    j["star"] = encode_cube(pp.star);
    return j;
}

Json encode_r_element(const RElement& r, const Labels& l) {
    if (!r.square()) throw ShapeError("r must be square");
    Json j = header("r_element", r.rows(), l);
    j["entries"] = encode_matrix(r);
    return j;
}

Json encode_linear_map(const LinearOp& m, const Labels& l) {
    Json j;
    j["kind"] = "linear_map";
    if (m.square()) {
        j = header("linear_map", m.rows(), l);
    } else {
        j["rows"] = m.rows();
        j["cols"] = m.cols();
    }
    j["entries"] = encode_matrix(m);
    return j;
}

Json encode_bilinear_form(const BilForm& f, const Labels& l) {
    Json j = header("bilinear_form", f.dim(), l);
    j["entries"] = encode_matrix(f.b);
    return j;
}

Json encode_list(const std::vector<Json>& items) {
    Json j;
    j["kind"] = "list";
    j["items"] = Json::array();
    for (const auto& i : items) j["items"].push_back(i);
    return j;
}

Json encode_laws(const CheckReport& rep) {
    Json laws = Json::array();
    for (const auto& l : rep.laws()) {
        Json lj;
        lj["name"] = l.name;
        lj["pass"] = l.pass();
        Json ws = Json::array();
        for (const auto& w : l.witnesses) {
            Json wj;
            wj["at"] = w.at;
            wj["shape"] = w.shape;
            wj["residual"] = sparse(w.residual, w.shape);
            ws.push_back(wj);
        }
        lj["witnesses"] = ws;
        if (!l.note.empty()) lj["note"] = l.note;
        laws.push_back(lj);
    }
    return laws;
}

Json encode_report(const CheckReport& rep, const std::string& digest, const std::string& kind) {
    Json j;
    j["tool"] = kTool;
    j["version"] = kVersion;
    j["input_digest"] = digest;
    j["kind"] = kind;
    j["verdict"] = rep.pass() ? "pass" : "fail";
    j["laws"] = encode_laws(rep);
    return j;
}

namespace {

void emit(const Json& j, int depth, std::string& out) {
    auto pad = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            pad(depth + 1);
            out += Json(key).dump() + ": ";
            emit(value, depth + 1, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        pad(depth);
        out += "}";
    } else if (j.is_array()) {
        bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            pad(depth + 1);
            emit(j[i], depth + 1, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        pad(depth);
        out += "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    emit(j, 0, out);
    out += "\n";
    return out;
}

}  // namespace forge::doc
