#include "qfe/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qfe/expr.hpp"

namespace qfe {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
}

void require_keys(const json& doc, const std::set<std::string>& allowed, const char* what) {
  if (!doc.is_object()) throw DocumentError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!allowed.contains(key)) throw DocumentError(std::string("unknown field '") + key + "' in " + what);
  for (const auto& key : allowed)
    if (!doc.contains(key)) throw DocumentError(std::string("missing field '") + key + "' in " + what);
}

PrimeList read_primes(const json& node) {
  if (!node.is_array()) throw DocumentError("'primes' must be an array of integers");
  PrimeList primes;
  for (const auto& p : node) {
    if (!p.is_number_integer() || p.get<std::int64_t>() < 1)
      throw DocumentError("'primes' must contain positive integers");
    primes.push_back(p.get<std::int64_t>());
  }
  return primes;
}

std::int64_t read_prime_key(const std::string& key, const PrimeList& primes, const char* field) {
  std::int64_t p = 0;
  std::size_t used = 0;
  try {
    p = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size() || std::to_string(p) != key)
    throw DocumentError(std::string("key '") + key + "' in '" + field + "' is not a decimal integer");
  if (std::find(primes.begin(), primes.end(), p) == primes.end())
    throw DocumentError(std::string("key '") + key + "' in '" + field + "' is not one of the primes");
  return p;
}

Rational read_rational(const json& node, const std::string& where) {
  if (!node.is_string()) throw DocumentError(where + " must be a rational string like \"a/b\"");
  try {
    return parse_rational(node.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

}  // namespace

SolutionSpec parse_spec_document(std::string_view json_text) {
  const json doc = parse_json(json_text);
  require_keys(doc, {"primes", "generators"}, "spec document");
  const PrimeList primes = read_primes(doc["primes"]);
  const json& gens = doc["generators"];
  if (!gens.is_object()) throw DocumentError("'generators' must be an object");
  std::map<std::int64_t, RationalFunction> generators;
  for (const auto& [key, value] : gens.items()) {
    const std::int64_t p = read_prime_key(key, primes, "generators");
    if (!value.is_string()) throw DocumentError("generator '" + key + "' must be an expression string");
    try {
      generators.emplace(p, parse_function(value.get<std::string>()));
    } catch (const ParseError& e) {
      throw DocumentError("generator '" + key + "': " + e.what());
    } catch (const std::domain_error& e) {
      throw DocumentError("generator '" + key + "': " + e.what());
    }
  }
  try {
    return SolutionSpec(primes, std::move(generators));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("spec document: ") + e.what());
  }
}

std::string write_spec_document(const SolutionSpec& spec) {
  ordered_json doc;
  doc["primes"] = spec.primes();
  ordered_json gens = ordered_json::object();
  for (std::int64_t p : spec.primes()) gens[std::to_string(p)] = format_expr(spec.generator(p));
  doc["generators"] = gens;
  return doc.dump(2) + "\n";
}

StructureData parse_structure_document(std::string_view json_text) {
  const json doc = parse_json(json_text);
  require_keys(doc, {"primes", "lambda", "t0", "terms"}, "structure document");
  StructureData sd;
  sd.primes = read_primes(doc["primes"]);
  const json& lambda = doc["lambda"];
  if (!lambda.is_object()) throw DocumentError("'lambda' must be an object");
  for (const auto& [key, value] : lambda.items())
    sd.lambda[read_prime_key(key, sd.primes, "lambda")] = read_rational(value, "lambda '" + key + "'");
  sd.t0 = read_rational(doc["t0"], "'t0'");
  const json& terms = doc["terms"];
  if (!terms.is_array()) throw DocumentError("'terms' must be an array");
  for (const auto& term : terms) {
    require_keys(term, {"r", "t"}, "term");
    if (!term["r"].is_number_integer() || !term["t"].is_number_integer())
      throw DocumentError("term fields 'r' and 't' must be integers");
    const auto r = term["r"].get<std::int64_t>();
    if (sd.terms.contains(r)) throw DocumentError("duplicate term r = " + std::to_string(r));
    sd.terms[r] = term["t"].get<std::int64_t>();
  }
  try {
    validate_structure(sd);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("structure document: ") + e.what());
  }
  return sd;
}

std::string write_structure_document(const StructureData& sd) {
  ordered_json doc;
  doc["primes"] = sd.primes;
  ordered_json lambda = ordered_json::object();
  for (std::int64_t p : sd.primes) lambda[std::to_string(p)] = to_string(sd.lambda.at(p));
  doc["lambda"] = lambda;
  doc["t0"] = to_string(sd.t0);
  ordered_json terms = ordered_json::array();
  for (auto [r, t] : sd.terms) terms.push_back(ordered_json{{"r", r}, {"t", t}});
  doc["terms"] = terms;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace qfe
