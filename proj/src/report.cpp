#include "motint/report.hpp"

#include "motint/errors.hpp"

namespace motint {

Json to_json(const LPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return coeffs;
}

Json to_json(const RationalFunction& f) {
  Json j;
  j["text"] = f.to_string();
  j["num_coeffs"] = to_json(f.num());
  j["den_coeffs"] = to_json(f.den());
  return j;
}

RationalFunction rational_function_from_json(const Json& j) {
  auto poly = [](const Json& arr) {
    std::vector<Integer> c;
    for (const auto& x : arr) c.emplace_back(x.get<std::string>());
    return LPolynomial(std::move(c));
  };
  if (!j.contains("num_coeffs") || !j.contains("den_coeffs")) throw DomainError("missing coefficient lists");
  return RationalFunction::normalized(poly(j["num_coeffs"]), poly(j["den_coeffs"]));
}

Json to_json(const PrimeSet& primes) {
  Json arr = Json::array();
  for (const auto& p : primes) arr.push_back(p.get_str());
  return arr;
}

Json to_json(const ValidityReport& v) {
  Json j;
  j["equal_char"] = v.equal_char;
  j["stratum_bad_primes"] = to_json(v.stratum_bad_primes);
  j["mixed_char"] = to_string(v.mixed_char);
  j["mixed_bad_primes"] = to_json(v.mixed_bad_primes);
  j["bad_primes_are"] = "sufficient condition";
  Json forms = Json::array();
  for (const auto& r : v.rationale) forms.push_back({{"form", r.form}, {"rule", r.rule}});
  j["rationale"] = forms;
  return j;
}

Json to_json(const Bracket& b) {
  Json j;
  j["q"] = b.q;
  j["k"] = b.depth;
  j["lower"] = to_fraction_string(b.lower);
  j["upper"] = to_fraction_string(b.upper);
  return j;
}

Json to_json(const TraceNode& t) {
  Json j;
  j["key"] = t.key;
  j["n"] = t.n;
  j["forms"] = t.forms;
  j["value"] = t.value.to_string();
  j["residual_zero"] = t.residual.is_zero();
  return j;
}

}  // namespace motint
