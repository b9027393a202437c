#include "hfk/record.hpp"

#include <sstream>

#include <json.hpp>

#include "hfk/errors.hpp"

namespace hfk {

using nlohmann::ordered_json;

CertificateRecord make_record(const WitnessCertificate& cert) {
  return {cert, alexander(seifert_matrix_lens(cert.space, cert.params), cert.space.p())};
}

std::string to_json_line(const CertificateRecord& record) {
  const WitnessCertificate& c = record.certificate;
  ordered_json j;
  j["p"] = c.space.p().get_str();
  j["q"] = c.space.q().get_str();
  j["a"] = c.params.a.get_str();
  j["b"] = c.params.b.get_str();
  j["c"] = c.params.c.get_str();
  j["u"] = c.params.u.get_str();
  j["v"] = c.params.v.get_str();
  j["epsilon"] = std::to_string(c.epsilon);
  j["k"] = c.k.get_str();
  j["r_k"] = c.r_k.get_str();
  j["s_k"] = c.s_k.get_str();
  j["method"] = std::string(to_string(c.method));
  ordered_json poly = ordered_json::object();
  for (const auto& [e, coeff] : record.alexander.terms()) poly[std::to_string(e)] = coeff.get_str();
  j["alexander"] = std::move(poly);
  j["identity_value"] = c.identity_value.get_str();
  return j.dump();
}

namespace {

Int int_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw InvalidArgument(std::string("certificate record: field '") + key + "' missing or not a string");
  }
  return parse_int(j[key].get<std::string>());
}

}  // namespace

CertificateRecord parse_json_line(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const ordered_json::parse_error& e) {
    throw InvalidArgument(std::string("certificate record: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("certificate record: expected a JSON object");

  const Int epsilon = int_field(j, "epsilon");
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("certificate record: epsilon must be 1 or -1");
  if (!j.contains("method") || !j["method"].is_string()) {
    throw InvalidArgument("certificate record: field 'method' missing");
  }
  if (!j.contains("alexander") || !j["alexander"].is_object()) {
    throw InvalidArgument("certificate record: field 'alexander' missing or not an object");
  }

  LaurentPoly poly;
  for (const auto& [key, value] : j["alexander"].items()) {
    if (!value.is_string()) throw InvalidArgument("certificate record: Alexander coefficients must be strings");
    const Int e = parse_int(key);
    if (!fits_i64(e)) throw InvalidArgument("certificate record: exponent out of range");
    poly.add_term(to_i64(e), parse_int(value.get<std::string>()));
  }

  WitnessCertificate cert{LensSpace(int_field(j, "p"), int_field(j, "q")),
                          {int_field(j, "a"), int_field(j, "b"), int_field(j, "c"), int_field(j, "u"),
                           int_field(j, "v")},
                          epsilon == 1 ? 1 : -1,
                          int_field(j, "k"),
                          int_field(j, "r_k"),
                          int_field(j, "s_k"),
                          parse_witness_method(j["method"].get<std::string>()),
                          int_field(j, "identity_value")};
  return {std::move(cert), std::move(poly)};
}

bool record_is_sound(const CertificateRecord& record) {
  if (!certificate_is_sound(record.certificate)) return false;
  return make_record(record.certificate).alexander == record.alexander;
}

std::string describe(const CertificateRecord& record) {
  const WitnessCertificate& c = record.certificate;
  std::ostringstream out;
  out << "space          " << c.space.name() << '\n'
      << "surface        (a,b,c,u,v) = (" << c.params.a.get_str() << ", " << c.params.b.get_str() << ", "
      << c.params.c.get_str() << ", " << c.params.u.get_str() << ", " << c.params.v.get_str() << ")\n"
      << "epsilon        " << c.epsilon << '\n'
      << "k              " << c.k.get_str() << '\n'
      << "(r_k, s_k)     (" << c.r_k.get_str() << ", " << c.s_k.get_str() << ")\n"
      << "method         " << to_string(c.method) << '\n'
      << "identity       " << c.identity_value.get_str() << '\n'
      << "alexander      " << record.alexander.to_string() << '\n';
  return out.str();
}

}  // namespace hfk
