#pragma once

// Named, shipped example charts: the flat Moyal planes, the cotangent-torus
// chart with its order-1 and order-2 momentum perturbations, and a curved
// toy connection.  Each carries everything the verification suites need --
// symplectic data, connection, curvature prescription, an optional
// quantum-Liouville candidate and an optional cohomology declaration.

#include <optional>
#include <string>
#include <vector>

#include "fedosov/cohomology.hpp"
#include "fedosov/hochschild.hpp"

namespace fedosov {

struct ExampleSpec {
    std::string name;
    int dim = 0;
    ConnectionData christoffel;  // default: flat
    CurvaturePrescription prescription;
    std::optional<LiouvilleCandidate> candidate;
    std::optional<CohomologyDecl> decl;
    Truncation trunc{8, 0};

    const PoissonMatrix& poisson() const { return prescription.poisson(); }
    // validates and solves; throws on inconsistent data
    FedosovSetup build() const;
};

// known names: moyal_r2, moyal_r4, torus_h_omega1, torus_h2_omega1,
// curved_toy; throws std::invalid_argument otherwise
ExampleSpec builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

// The star-product table of the exponential Moyal formula applied to an
// hbar-dependent constant bivector pi(hbar) = sum_m hbar^m pi_m, through
// hbar^K.  This is the comparison oracle for charts whose product the
// construction is expected to reproduce in closed form.
StarProductTable moyal_table_for(int dim,
                                 const std::vector<std::pair<int, ScalarMatrix>>& pi,
                                 int K);

struct GaugeReport {
    bool term_identical = false;  // tables equal termwise through the order
    int compared_order = -1;
    std::vector<int> mismatched_orders;  // hbar orders that differ, if any
    std::string note;
};

// Extracts the example's table through `order` and compares it termwise and
// on monomial pairs of degree <= test_degree with the Moyal oracle built on
// the hbar-expansion of the inverse of the prescribed curvature.  The
// returned report records whatever relation holds; callers decide how much
// agreement to demand.
GaugeReport compare_with_moyal_pi(const ExampleSpec& spec, int order,
                                  int test_degree);

}  // namespace fedosov
