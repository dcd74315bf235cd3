// Acceptance suite: twelve end-to-end criteria, one pass/fail line each.
// Usage: acceptance <path-to-fedosov-binary>
// The binary path is needed for the process-level criteria (exit status of
// the obstructed verify run, byte-determinism of two identical runs).
//
// Exit status 0 iff every criterion passes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fedosov/examples.hpp"

using namespace fedosov;

namespace {

std::string g_binary;  // path to the CLI executable

// ---- caches so repeated criteria share the expensive builds ----

FedosovSetup& setup_at(const std::string& name, int cap) {
    static std::map<std::pair<std::string, int>, FedosovSetup> cache;
    const auto key = std::make_pair(name, cap);
    auto it = cache.find(key);
    if (it == cache.end()) {
        ExampleSpec spec = builtin(name);
        spec.trunc = Truncation{cap, spec.trunc.laurent_floor};
        it = cache.emplace(key, spec.build()).first;
    }
    return it->second;
}

const StarProductTable& table_at(const std::string& name, int cap, int order) {
    static std::map<std::tuple<std::string, int, int>, TableExtraction> cache;
    const auto key = std::make_tuple(name, cap, order);
    auto it = cache.find(key);
    if (it == cache.end()) {
        TableExtraction ex = extract_table(setup_at(name, cap), order, order);
        if (!ex.residual_ok)
            throw std::runtime_error(name + ": " + ex.residual_note);
        it = cache.emplace(key, std::move(ex)).first;
    }
    return it->second.table;
}

BasePoly seeded_poly(std::mt19937_64& eng, int dim, int max_deg, int n_terms) {
    const std::vector<Exp> pool = exps_up_to(dim, max_deg);
    BasePoly out(dim);
    for (int t = 0; t < n_terms; ++t) {
        const Exp& e = pool[eng() % pool.size()];
        long num = static_cast<long>(eng() % 19) - 9;
        if (num == 0) num = 1;
        out += BasePoly::monomial(dim, e, Scalar::ratio(num, 1 + static_cast<long>(eng() % 4)));
    }
    return out;
}

ScalarMatrix dtheta_wedge_matrix(int dim) {
    ScalarMatrix m(dim, std::vector<Scalar>(dim, Scalar(0)));
    m[0][1] = Scalar(1);
    m[1][0] = Scalar(-1);
    return m;
}

int run_cli(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---- criteria ----

bool c1_moyal_associativity(std::string& detail) {
    for (const std::string& name : {"moyal_r2", "moyal_r4"}) {
        const FedosovSetup& s = setup_at(name, 8);
        std::mt19937_64 eng(0xacc30001ULL);
        for (int rep = 0; rep < 50; ++rep) {
            const CenterSeries a =
                CenterSeries::from_poly(seeded_poly(eng, s.dim(), 3, 3));
            const CenterSeries b =
                CenterSeries::from_poly(seeded_poly(eng, s.dim(), 3, 3));
            const CenterSeries c =
                CenterSeries::from_poly(seeded_poly(eng, s.dim(), 3, 3));
            const CenterSeries lhs = s.star(s.star(a, b), c).truncated(4);
            const CenterSeries rhs = s.star(a, s.star(b, c)).truncated(4);
            if (lhs != rhs) {
                detail = name + " triple " + std::to_string(rep);
                return false;
            }
        }
    }
    return true;
}

bool c2_flat_reduction(std::string& detail) {
    for (const std::string& name : {"moyal_r2", "moyal_r4"}) {
        const FedosovSetup& s = setup_at(name, 8);
        if (!s.gamma().is_zero()) {
            detail = name + ": gamma not zero";
            return false;
        }
        const int dim = s.dim();
        const StarProductTable oracle =
            moyal_table_for(dim, {{0, s.poisson().pi()}}, 4);
        const std::vector<Exp> basis = exps_up_to(dim, 4);
        for (const Exp& ea : basis) {
            for (const Exp& eb : basis) {
                const BasePoly f = BasePoly::monomial(dim, ea);
                const BasePoly g = BasePoly::monomial(dim, eb);
                if (s.star(f, g) != oracle.evaluate(f, g)) {
                    detail = name + ": pair differs from the Moyal oracle";
                    return false;
                }
            }
        }
    }
    return true;
}

bool c3_torus_gamma_closed_form(std::string& detail) {
    const FedosovSetup& s = setup_at("torus_h_omega1", 8);
    // gamma = (hbar/2) (omega_1)_{ij} y^i dx^j with omega_1 = dtheta1^dtheta2
    const ScalarMatrix w1 = dtheta_wedge_matrix(4);
    WeylForm expected(4, s.trunc());
    for (int j = 0; j < 4; ++j) {
        WeylElement el(4, s.trunc());
        for (int i = 0; i < 4; ++i) {
            if (w1[i][j].is_zero()) continue;
            el.add_term(1, exp_unit(4, i),
                        BasePoly::constant(4, w1[i][j] * Scalar::ratio(1, 2)));
        }
        if (!el.is_zero()) expected.add_entry(DxTuple{j}, el);
    }
    if (s.gamma() != expected) {
        detail = "gamma differs from (hbar/2)(omega_1)_{ij} y^i dx^j";
        return false;
    }
    if (!s.curvature_residual().is_zero()) {
        detail = "curvature residual nonzero";
        return false;
    }
    return true;
}

bool c4_flat_sections(std::string& detail) {
    for (const std::string& name : builtin_names()) {
        const FedosovSetup& s = setup_at(name, 8);
        const int dim = s.dim();
        const int cap = s.trunc().degree_cap;
        const bool is_flat = s.gamma().is_zero() &&
                             s.connection().is_flat_zero();
        for (const Exp& e : exps_up_to(dim, 4)) {
            const BasePoly a = BasePoly::monomial(dim, e);
            const WeylElement u = s.flat_section(a);
            if (center_project(u) != CenterSeries::from_poly(a)) {
                detail = name + ": center projection differs";
                return false;
            }
            const WeylForm du = s.fedosov_d(WeylForm::from_element(u));
            if (!du.truncated_above(cap - 1).is_zero()) {
                detail = name + ": D(section) residual nonzero";
                return false;
            }
            if (is_flat) {
                WeylElement taylor(dim, s.trunc());
                for (const Exp& alpha : exps_up_to(dim, exp_total(e))) {
                    const BasePoly da = a.derivative(alpha);
                    if (da.is_zero()) continue;
                    taylor.add_term(
                        0, alpha,
                        da.scaled(Scalar(Rational(1) / exp_factorial(alpha))));
                }
                if (u != taylor) {
                    detail = name + ": section differs from the Taylor lift";
                    return false;
                }
            }
        }
    }
    return true;
}

bool c5_hochschild(std::string& detail) {
    for (const std::string& name : builtin_names()) {
        const int cap = 10, K = 5, margin = 3;  // identities exact through K-2
        const StarProductTable& S = table_at(name, cap, K);
        const int dim = S.dim();

        const Cochain c = derivative_cocycle(S);
        const Cochain bc = coboundary(c, S, margin);
        if (!bc.is_zero()) {
            detail = name + ": b(derivative cocycle) nonzero through hbar^3";
            return false;
        }

        std::mt19937_64 eng(0xacc30005ULL);
        std::vector<Cochain> outers;
        for (int arity = 1; arity <= 2; ++arity) {
            for (int rep = 0; rep < 2; ++rep) {
                Cochain x(dim, arity);
                for (int t = 0; t < 2; ++t) {
                    std::vector<Exp> alphas;
                    for (int sl = 0; sl < arity; ++sl) {
                        Exp al(dim, 0);
                        const int budget = static_cast<int>(eng() % 3);
                        for (int u = 0; u < budget; ++u) al[eng() % dim] += 1;
                        alphas.push_back(al);
                    }
                    x.add_term(static_cast<int>(eng() % 2), alphas,
                               seeded_poly(eng, dim, 2, 2));
                }
                const Cochain outer = coboundary(coboundary(x, S, K - 1), S, margin);
                if (!outer.is_zero()) {
                    detail = name + ": b(b(x)) nonzero through hbar^3";
                    return false;
                }
                outers.push_back(outer);
            }
        }

        const std::vector<Exp> basis = exps_up_to(dim, 2);
        for (const Exp& ea : basis) {
            for (const Exp& eb : basis) {
                for (const Exp& ec : basis) {
                    const std::vector<BasePoly> fs = {
                        BasePoly::monomial(dim, ea), BasePoly::monomial(dim, eb),
                        BasePoly::monomial(dim, ec)};
                    CenterSeries r = apply_cochain(bc, fs).truncated(margin);
                    for (const Cochain& outer : outers)
                        if (outer.arity() == 3)
                            r += apply_cochain(outer, fs).truncated(margin);
                    if (!r.is_zero()) {
                        detail = name + ": evaluation residual on a triple";
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool c6_dk0_values(std::string& detail) {
    const std::vector<std::string> names = {"moyal_r2", "torus_h_omega1",
                                            "torus_h2_omega1", "curved_toy"};
    for (const std::string& name : names) {
        const FedosovSetup& s = setup_at(name, 8);
        const DK0Report rep = verify_DK0(s);
        if (!rep.ok || !rep.residual.is_zero()) {
            detail = name + ": DK0 residual nonzero";
            return false;
        }
        // expected value i(Omega - hbar dOmega/dhbar), written out per case
        ScalarFormSeries expected(s.dim());
        const ScalarMatrix omega = s.poisson().omega();
        if (name == "torus_h2_omega1") {
            expected = (ScalarFormSeries::constant_two_form(4, omega) -
                        ScalarFormSeries::constant_two_form(
                            4, dtheta_wedge_matrix(4), 2))
                           .scaled(Scalar::i());
        } else {
            expected = ScalarFormSeries::constant_two_form(s.dim(), omega)
                           .scaled(Scalar::i());
        }
        if (rep.phi_value != expected) {
            detail = name + ": phi differs from i(Omega - hbar Omega')";
            return false;
        }
    }
    return true;
}

bool c7_commutator_lemmas(std::string& detail) {
    for (const std::string& name : builtin_names()) {
        const FedosovSetup& s = setup_at(name, 8);
        int forms = 0;
        for (int r = 0; r < 4; ++r) {
            const LemmaReport rep = verify_commutator_lemmas(s, 0xacc30007ULL + r);
            forms += rep.cases_checked;
            if (!rep.all_ok()) {
                detail = name + ": a lemma residual is nonzero";
                return false;
            }
        }
        if (forms < 20) {
            detail = name + ": only " + std::to_string(forms) + " forms checked";
            return false;
        }
    }
    return true;
}

bool c8_liouville_positive(std::string& detail) {
    for (const std::string& name : {"torus_h_omega1", "moyal_r2"}) {
        const ExampleSpec spec = builtin(name);
        const StarProductTable& S = table_at(name, 8, 4);
        if (!spec.candidate) {
            detail = name + ": no shipped candidate";
            return false;
        }
        const LiouvilleReport rep = liouville_check(*spec.candidate, S, 3, 4);
        if (!rep.derivation_ok || !rep.kappa_ok) {
            detail = name + ": candidate fails at order " +
                     std::to_string(rep.first_bad_order);
            return false;
        }
        const ObstructionReport obs =
            liouville_obstruction(setup_at(name, 8), *spec.decl);
        if (obs.obstructed) {
            detail = name + ": obstruction projection not all-zero";
            return false;
        }
    }
    return true;
}

bool c9_liouville_negative(std::string& detail) {
    const ExampleSpec spec = builtin("torus_h2_omega1");
    const ObstructionReport obs =
        liouville_obstruction(setup_at("torus_h2_omega1", 8), *spec.decl);
    if (!obs.obstructed) {
        detail = "obstruction projection unexpectedly zero";
        return false;
    }
    const auto it = obs.projection.coordinates.find(0);
    if (it == obs.projection.coordinates.end() || it->second.size() != 1 ||
        it->second[0].is_zero()) {
        detail = "no nonzero coordinate on dtheta1^dtheta2 at hbar order 0";
        return false;
    }
    const int exit_code =
        run_cli("verify --example torus_h2_omega1 --suite liouville");
    if (exit_code == 0) {
        detail = "verify exited 0 on the obstructed example";
        return false;
    }
    return true;
}

bool c10_trivializer(std::string& detail) {
    const StarProductTable& S = table_at("moyal_r2", 10, 5);
    const Cochain c = derivative_cocycle(S);
    const TrivializerResult triv = trivialize_on_flat(c, S, 4);
    const Cochain bH = coboundary(triv.H, S, 3);
    if (bH != c.truncated(3)) {
        detail = "b(H) differs from the derivative cocycle termwise";
        return false;
    }
    const std::vector<Exp> basis = exps_up_to(2, 2);
    for (const Exp& ea : basis) {
        for (const Exp& eb : basis) {
            const std::vector<BasePoly> fs = {BasePoly::monomial(2, ea),
                                              BasePoly::monomial(2, eb)};
            const CenterSeries diff =
                (apply_cochain(bH, fs) - apply_cochain(c, fs)).truncated(3);
            if (!diff.is_zero()) {
                detail = "b(H) evaluation differs through hbar^3";
                return false;
            }
        }
    }
    return true;
}

bool c11_phi_class_consistency(std::string& detail) {
    for (const std::string& name : builtin_names()) {
        const FedosovSetup& s = setup_at(name, 8);
        const DK0Report rep = verify_DK0(s);
        const ScalarFormSeries expected = s.characteristic_class()
                                              .hbar_derivative()
                                              .shifted_hbar(2)
                                              .scaled(-Scalar::i());
        if (rep.phi_value != expected) {
            detail = name + ": phi != -i hbar^2 d/dhbar(class)";
            return false;
        }
    }
    return true;
}

bool c12_determinism(std::string& detail) {
    const std::string f1 = "acceptance_run1.json";
    const std::string f2 = "acceptance_run2.json";
    for (const std::string& f : {f1, f2}) {
        const int code = run_cli(
            "verify --example moyal_r2 --suite all --seed 7 --out " + f);
        if (code != 0) {
            detail = "verify run exited " + std::to_string(code);
            return false;
        }
    }
    const std::string a = slurp(f1);
    const std::string b = slurp(f2);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
    if (a.empty() || a != b) {
        detail = "reports differ between identical runs";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-fedosov-binary>\n");
        return 2;
    }
    g_binary = argv[1];

    struct Criterion {
        std::string text;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"Moyal associativity: 50 seeded triples, degree <= 3, through hbar^4",
         c1_moyal_associativity},
        {"flat reduction: gamma = 0 and star equals the Moyal oracle on "
         "pairs of degree <= 4",
         c2_flat_reduction},
        {"torus gamma closed form and curvature residual zero at cap 8",
         c3_torus_gamma_closed_form},
        {"flat sections: projection identity, D-residual zero, Taylor lift",
         c4_flat_sections},
        {"Hochschild: b(b(x)) = 0 and b(derivative cocycle) = 0 through "
         "hbar^3 on every builtin",
         c5_hochschild},
        {"DK0 identity with the expected curvature values", c6_dk0_values},
        {"commutator lemmas on >= 20 seeded forms per builtin",
         c7_commutator_lemmas},
        {"quantum Liouville, positive: shipped candidates pass through "
         "hbar^4 and the obstruction vanishes",
         c8_liouville_positive},
        {"quantum Liouville, negative: nonzero obstruction at hbar^0 and "
         "nonzero exit status",
         c9_liouville_negative},
        {"trivializer: b(H) reproduces the derivative cocycle through hbar^3",
         c10_trivializer},
        {"phi equals -i hbar^2 d/dhbar of the characteristic class on every "
         "builtin",
         c11_phi_class_consistency},
        {"determinism: two identical verify runs emit identical bytes",
         c12_determinism},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        all_ok = all_ok && ok;
        std::printf("[%s] criterion %2zu: %s%s%s\n", ok ? "PASS" : "FAIL",
                    i + 1, criteria[i].text.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
