#pragma once

// JSON configuration for the command-line front end.  A run is described by
// a RunConfig: either the name of a shipped example or a full inline spec,
// plus truncation and run parameters.  Serialization is canonical -- maps
// iterate in their deterministic key order, scalars render through the
// exact string form -- so parse followed by serialize is the identity on
// canonical documents and identical configs always produce identical bytes.

#include <cstdint>
#include <optional>
#include <string>

#include "fedosov/examples.hpp"
#include "json.hpp"

namespace fedosov::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
    // exactly one of the two is set
    std::optional<std::string> example;
    std::optional<ExampleSpec> inline_spec;

    // unset values fall back to the resolved spec's own truncation
    std::optional<int> degree_cap;
    std::optional<int> laurent_floor;

    int order = 3;
    int test_degree = 3;
    std::uint64_t seed = 1;
    std::string out;  // output path; empty means stdout
};

// ---- leaf (de)serializers, all canonical ----

// real scalars render as "num/den"; complex ones as "a/b+c/d*i"
std::string scalar_to_string(const Scalar& s);
Scalar scalar_from_string(const std::string& text);

// list of [coeff, exponent-vector] in graded-lex term order
Json poly_to_json(const BasePoly& p);
BasePoly poly_from_json(const Json& j, int dim);

Json matrix_to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const Json& j);

// list of {"hbar", "dx", "poly"} entries in series key order
Json form_series_to_json(const ScalarFormSeries& w);
ScalarFormSeries form_series_from_json(const Json& j, int dim);

// {"arity", "terms": [{"hbar", "derivatives", "poly"}]}
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, int dim);

Json spec_to_json(const ExampleSpec& spec);
ExampleSpec spec_from_json(const Json& j);

Json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const Json& j);

// parse with line/column diagnostics; origin names the source in messages
Json parse_json_text(const std::string& text, const std::string& origin);
RunConfig load_config_file(const std::string& path);

// builtin lookup or inline spec, with the config's truncation overrides
// applied; throws std::invalid_argument on inconsistent configs
ExampleSpec resolve_spec(const RunConfig& cfg);

// the canonical config document for a builtin, inline-spec form; this is
// what emit-config prints and what the golden files under configs/ store
RunConfig builtin_config(const std::string& name);

}  // namespace fedosov::cli
