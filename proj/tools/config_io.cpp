#include "config_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fedosov::cli {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("config: " + what);
}

int as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<int>();
}

const Json& member(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) bad("missing key '" + key + "'");
    return *it;
}

Exp exp_from_json(const Json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        bad("exponent vector must be an array of length dim");
    Exp e(dim, 0);
    for (int t = 0; t < dim; ++t) {
        const int v = as_int(j[t], "exponent");
        if (v < 0) bad("exponent entries must be nonnegative");
        e[t] = static_cast<std::uint32_t>(v);
    }
    return e;
}

Json exp_to_json(const Exp& e) {
    Json out = Json::array();
    for (std::uint32_t v : e) out.push_back(static_cast<int>(v));
    return out;
}

DxTuple dx_from_json(const Json& j, int dim) {
    if (!j.is_array()) bad("dx tuple must be an array");
    DxTuple J;
    int prev = -1;
    for (const Json& item : j) {
        const int v = as_int(item, "dx index");
        if (v < 0 || v >= dim) bad("dx index out of range");
        if (v <= prev) bad("dx tuple must be strictly increasing");
        J.push_back(v);
        prev = v;
    }
    return J;
}

Json dx_to_json(const DxTuple& J) {
    Json out = Json::array();
    for (int v : J) out.push_back(v);
    return out;
}

// a 2-form at hbar order 0, used for perturbations: [{"dx", "poly"}]
Json flat_two_form_to_json(const ScalarFormSeries& w) {
    Json out = Json::array();
    for (const auto& [key, poly] : w.entries()) {
        Json entry = Json::object();
        entry["dx"] = dx_to_json(key.second);
        entry["poly"] = poly_to_json(poly);
        out.push_back(std::move(entry));
    }
    return out;
}

ScalarFormSeries flat_two_form_from_json(const Json& j, int dim) {
    if (!j.is_array()) bad("2-form must be an array of entries");
    ScalarFormSeries w(dim);
    for (const Json& entry : j) {
        const DxTuple J = dx_from_json(member(entry, "dx"), dim);
        if (J.size() != 2) bad("perturbation entries must be 2-form terms");
        w.add_term(0, J, poly_from_json(member(entry, "poly"), dim));
    }
    return w;
}

}  // namespace

std::string scalar_to_string(const Scalar& s) {
    return s.is_real() ? rational_str(s.re()) : s.str();
}

Scalar scalar_from_string(const std::string& text) { return Scalar::parse(text); }

Json poly_to_json(const BasePoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term = Json::array();
        term.push_back(scalar_to_string(c));
        term.push_back(exp_to_json(e));
        out.push_back(std::move(term));
    }
    return out;
}

BasePoly poly_from_json(const Json& j, int dim) {
    if (!j.is_array()) bad("polynomial must be a list of [coeff, exponents]");
    BasePoly p(dim);
    for (const Json& term : j) {
        if (!term.is_array() || term.size() != 2)
            bad("polynomial term must be [coeff, exponents]");
        if (!term[0].is_string()) bad("coefficient must be a string");
        p.add_term(exp_from_json(term[1], dim),
                   scalar_from_string(term[0].get<std::string>()));
    }
    return p;
}

Json matrix_to_json(const ScalarMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Scalar& s : row) r.push_back(scalar_to_string(s));
        out.push_back(std::move(r));
    }
    return out;
}

ScalarMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array");
    ScalarMatrix m;
    for (const Json& row : j) {
        if (!row.is_array() || row.size() != j.size())
            bad("matrix must be square");
        std::vector<Scalar> r;
        for (const Json& s : row) {
            if (!s.is_string()) bad("matrix entries must be strings");
            r.push_back(scalar_from_string(s.get<std::string>()));
        }
        m.push_back(std::move(r));
    }
    return m;
}

Json form_series_to_json(const ScalarFormSeries& w) {
    Json out = Json::array();
    for (const auto& [key, poly] : w.entries()) {
        Json entry = Json::object();
        entry["hbar"] = key.first;
        entry["dx"] = dx_to_json(key.second);
        entry["poly"] = poly_to_json(poly);
        out.push_back(std::move(entry));
    }
    return out;
}

ScalarFormSeries form_series_from_json(const Json& j, int dim) {
    if (!j.is_array()) bad("form series must be an array of entries");
    ScalarFormSeries w(dim);
    for (const Json& entry : j) {
        w.add_term(as_int(member(entry, "hbar"), "hbar order"),
                   dx_from_json(member(entry, "dx"), dim),
                   poly_from_json(member(entry, "poly"), dim));
    }
    return w;
}

Json cochain_to_json(const Cochain& c) {
    Json out = Json::object();
    out["arity"] = c.arity();
    Json terms = Json::array();
    for (const auto& [key, g] : c.terms()) {
        Json term = Json::object();
        term["hbar"] = key.l;
        Json ders = Json::array();
        for (const Exp& a : key.alphas) ders.push_back(exp_to_json(a));
        term["derivatives"] = std::move(ders);
        term["poly"] = poly_to_json(g);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Cochain cochain_from_json(const Json& j, int dim) {
    const int arity = as_int(member(j, "arity"), "arity");
    if (arity < 0) bad("arity must be nonnegative");
    Cochain c(dim, arity);
    for (const Json& term : member(j, "terms")) {
        const Json& ders = member(term, "derivatives");
        if (!ders.is_array() || static_cast<int>(ders.size()) != arity)
            bad("cochain term needs one derivative multi-index per slot");
        std::vector<Exp> alphas;
        for (const Json& a : ders) alphas.push_back(exp_from_json(a, dim));
        c.add_term(as_int(member(term, "hbar"), "hbar order"), alphas,
                   poly_from_json(member(term, "poly"), dim));
    }
    return c;
}

Json spec_to_json(const ExampleSpec& spec) {
    Json out = Json::object();
    out["name"] = spec.name;
    out["dim"] = spec.dim;
    out["omega"] = matrix_to_json(spec.poisson().omega());

    Json christoffel = Json::array();
    for (const auto& [ijk, poly] : spec.christoffel.symbols()) {
        Json entry = Json::object();
        entry["i"] = ijk[0];
        entry["j"] = ijk[1];
        entry["k"] = ijk[2];
        entry["poly"] = poly_to_json(poly);
        christoffel.push_back(std::move(entry));
    }
    out["christoffel"] = std::move(christoffel);

    Json perturbations = Json::array();
    const ScalarFormSeries& pert = spec.prescription.perturbation_part();
    if (!pert.is_zero()) {
        for (int k = pert.min_hbar_order(); k <= pert.max_hbar_order(); ++k) {
            const ScalarFormSeries slice = pert.hbar_slice(k);
            if (slice.is_zero()) continue;
            Json entry = Json::object();
            entry["order"] = k;
            entry["form"] = flat_two_form_to_json(slice.shifted_hbar(-k));
            perturbations.push_back(std::move(entry));
        }
    }
    out["perturbations"] = std::move(perturbations);

    out["candidate"] =
        spec.candidate ? cochain_to_json(spec.candidate->X) : Json(nullptr);

    if (spec.decl) {
        Json basis = Json::array();
        for (std::size_t j = 0; j < spec.decl->size(); ++j) {
            Json entry = Json::object();
            entry["name"] = spec.decl->names()[j];
            entry["matrix"] = matrix_to_json(spec.decl->matrix(j));
            basis.push_back(std::move(entry));
        }
        Json decl = Json::object();
        decl["basis"] = std::move(basis);
        out["decl"] = std::move(decl);
    } else {
        out["decl"] = Json(nullptr);
    }
    return out;
}

ExampleSpec spec_from_json(const Json& j) {
    if (!j.is_object()) bad("spec must be an object");
    ExampleSpec spec;
    const Json& name = member(j, "name");
    if (!name.is_string()) bad("name must be a string");
    spec.name = name.get<std::string>();
    spec.dim = as_int(member(j, "dim"), "dim");
    if (spec.dim <= 0 || spec.dim % 2 != 0) bad("dim must be positive even");

    const ScalarMatrix omega = matrix_from_json(member(j, "omega"));
    if (static_cast<int>(omega.size()) != spec.dim)
        bad("omega must be dim x dim");
    spec.prescription = CurvaturePrescription(PoissonMatrix::from_omega(omega));

    spec.christoffel = ConnectionData(spec.dim);
    for (const Json& entry : member(j, "christoffel")) {
        const int i = as_int(member(entry, "i"), "christoffel index");
        const int jj = as_int(member(entry, "j"), "christoffel index");
        const int k = as_int(member(entry, "k"), "christoffel index");
        spec.christoffel.set_symbol(
            i, jj, k, poly_from_json(member(entry, "poly"), spec.dim));
    }

    for (const Json& entry : member(j, "perturbations")) {
        spec.prescription.add_perturbation(
            as_int(member(entry, "order"), "perturbation order"),
            flat_two_form_from_json(member(entry, "form"), spec.dim));
    }

    const Json& cand = member(j, "candidate");
    if (!cand.is_null()) {
        Cochain X = cochain_from_json(cand, spec.dim);
        if (X.arity() != 1) bad("candidate must have arity 1");
        spec.candidate = LiouvilleCandidate{std::move(X)};
    }

    const Json& decl = member(j, "decl");
    if (!decl.is_null()) {
        CohomologyDecl d(spec.dim);
        for (const Json& entry : member(decl, "basis")) {
            const Json& bname = member(entry, "name");
            if (!bname.is_string()) bad("basis form name must be a string");
            d.add_basis_form(bname.get<std::string>(),
                             matrix_from_json(member(entry, "matrix")));
        }
        spec.decl = std::move(d);
    }
    return spec;
}

Json config_to_json(const RunConfig& cfg) {
    Json out = Json::object();
    if (cfg.example) out["example"] = *cfg.example;
    if (cfg.inline_spec) out["spec"] = spec_to_json(*cfg.inline_spec);
    if (cfg.degree_cap) out["degree_cap"] = *cfg.degree_cap;
    if (cfg.laurent_floor) out["laurent_floor"] = *cfg.laurent_floor;
    out["order"] = cfg.order;
    out["test_degree"] = cfg.test_degree;
    out["seed"] = cfg.seed;
    out["out"] = cfg.out;
    return out;
}

RunConfig config_from_json(const Json& j) {
    if (!j.is_object()) bad("config must be an object");
    RunConfig cfg;
    if (auto it = j.find("example"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) bad("example must be a string");
        cfg.example = it->get<std::string>();
    }
    if (auto it = j.find("spec"); it != j.end() && !it->is_null())
        cfg.inline_spec = spec_from_json(*it);
    if (cfg.example && cfg.inline_spec)
        bad("give either 'example' or 'spec', not both");
    if (!cfg.example && !cfg.inline_spec)
        bad("one of 'example' or 'spec' is required");
    if (auto it = j.find("degree_cap"); it != j.end() && !it->is_null())
        cfg.degree_cap = as_int(*it, "degree_cap");
    if (auto it = j.find("laurent_floor"); it != j.end() && !it->is_null())
        cfg.laurent_floor = as_int(*it, "laurent_floor");
    if (auto it = j.find("order"); it != j.end())
        cfg.order = as_int(*it, "order");
    if (cfg.order < 0) bad("order must be nonnegative");
    if (auto it = j.find("test_degree"); it != j.end())
        cfg.test_degree = as_int(*it, "test_degree");
    if (cfg.test_degree < 0) bad("test_degree must be nonnegative");
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_unsigned() && !it->is_number_integer())
            bad("seed must be an integer");
        cfg.seed = it->get<std::uint64_t>();
    }
    if (auto it = j.find("out"); it != j.end()) {
        if (!it->is_string()) bad("out must be a string");
        cfg.out = it->get<std::string>();
    }
    return cfg;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // the library message already carries "at line L, column C"
        throw std::invalid_argument(origin + ": " + e.what());
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json(parse_json_text(buf.str(), path));
}

ExampleSpec resolve_spec(const RunConfig& cfg) {
    if (cfg.example.has_value() == cfg.inline_spec.has_value())
        bad("one of 'example' or 'spec' is required (and not both)");
    ExampleSpec spec = cfg.example ? builtin(*cfg.example) : *cfg.inline_spec;
    const int cap = cfg.degree_cap.value_or(spec.trunc.degree_cap);
    const int floor = cfg.laurent_floor.value_or(spec.trunc.laurent_floor);
    spec.trunc = Truncation{cap, floor};  // validates
    return spec;
}

RunConfig builtin_config(const std::string& name) {
    RunConfig cfg;
    cfg.inline_spec = builtin(name);
    cfg.degree_cap = cfg.inline_spec->trunc.degree_cap;
    cfg.laurent_floor = cfg.inline_spec->trunc.laurent_floor;
    return cfg;
}

}  // namespace fedosov::cli
