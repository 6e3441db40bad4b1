#include "prony/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "prony/errors.hpp"

namespace prony {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw IoError("expected a complex number as a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json vector_to_json(const CVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw IoError(std::string("expected an array for ") + what);
  CVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = complex_from_json(j[i]);
  return v;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw IoError("malformed JSON");
  return j;
}

json signal_to_json_value(const Signal& f) {
  json support = json::array();
  for (const Spike& s : f.support()) {
    support.push_back(
        {{"node", complex_to_json(s.node)}, {"amplitudes", vector_to_json(s.amplitudes)}});
  }
  return json{{"support", support}};
}

}  // namespace

std::string signal_to_json(const Signal& f) {
  return signal_to_json_value(f).dump(2) + "\n";
}

Signal signal_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("support") || !j["support"].is_array())
    throw IoError("signal JSON must contain a \"support\" array");
  std::vector<Spike> spikes;
  for (const json& entry : j["support"]) {
    if (!entry.contains("node") || !entry.contains("amplitudes"))
      throw IoError("each support entry needs \"node\" and \"amplitudes\"");
    spikes.push_back({complex_from_json(entry["node"]),
                      vector_from_json(entry["amplitudes"], "amplitudes")});
  }
  return Signal(std::move(spikes));
}

std::string moments_to_json(const MomentVector& mu,
                            const std::optional<MomentVector>& clean) {
  json j{{"moments", vector_to_json(mu)}};
  if (clean) j["clean_moments"] = vector_to_json(*clean);
  return j.dump(2) + "\n";
}

MomentVector moments_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("moments"))
    throw IoError("moments JSON must contain a \"moments\" array");
  return vector_from_json(j["moments"], "moments");
}

std::string solution_to_json(const SolveResult& result) {
  const SolveDiagnostics& d = result.diagnostics;
  json diagnostics{{"rank", d.rank},
                   {"stratum", to_string(d.stratum)},
                   {"leading_minor", d.leading_minor},
                   {"pade_condition", d.pade_condition},
                   {"moment_residual", d.moment_residual},
                   {"agreement_order", d.agreement_order},
                   {"vandermonde_condition", d.vandermonde_condition}};
  if (d.basis_condition > 0.0) diagnostics["basis_condition"] = d.basis_condition;
  if (d.iterations > 0) diagnostics["iterations"] = d.iterations;
  json j{{"signal", signal_to_json_value(result.signal)}, {"diagnostics", diagnostics}};
  return j.dump(2) + "\n";
}

std::string classification_to_json(const SolvabilityReport& report) {
  json j{{"rank", report.rank},
         {"minor", report.leading_minor},
         {"stratum", to_string(report.stratum)},
         {"tolerance", report.tolerance}};
  return j.dump(2) + "\n";
}

std::string error_to_json(const std::string& type, const std::string& message) {
  json j{{"error", {{"type", type}, {"message", message}}}};
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace prony
