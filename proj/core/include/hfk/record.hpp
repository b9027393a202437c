#pragma once

#include <string>
#include <string_view>

#include "hfk/seifert.hpp"
#include "hfk/witness.hpp"

namespace hfk {

/// One certificate as written to a JSON Lines table. Integers are
/// serialized as decimal strings, including the Alexander coefficients:
///
///   {"p":"7","q":"1","a":"10","b":"13","c":"11","u":"1","v":"0",
///    "epsilon":"1","k":"1","r_k":"13","s_k":"2","method":"constructed",
///    "alexander":{"-1":"-1","0":"9","1":"-1"},"identity_value":"1"}
struct CertificateRecord {
  WitnessCertificate certificate;
  LaurentPoly alexander;
};

/// Attaches the Alexander polynomial of the certificate's knot.
CertificateRecord make_record(const WitnessCertificate& cert);

/// Single-line JSON object, keys in the order shown above.
std::string to_json_line(const CertificateRecord& record);

/// Throws InvalidArgument on malformed JSON, missing keys or non-integer
/// fields. The result is not re-verified; see record_is_sound.
CertificateRecord parse_json_line(std::string_view line);

/// Certificate identity holds and the stored polynomial matches a fresh
/// computation.
bool record_is_sound(const CertificateRecord& record);

/// Human-readable multi-line summary.
std::string describe(const CertificateRecord& record);

}  // namespace hfk
