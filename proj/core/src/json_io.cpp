#include "qseries/json_io.hpp"

#include <vector>

#include <json.hpp>

namespace qseries {
namespace {

// Insertion-ordered so counterexample params keep their emitted order.
using json = nlohmann::ordered_json;

bool is_integer_literal(const std::string& s) {
  std::size_t i = s.empty() || s[0] != '-' ? 0 : 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

// DOM builder that keeps integers too wide for 64 bits as decimal strings
// instead of rounding them through double.
class WideIntegerDom {
 public:
  explicit WideIntegerDom(json& root) : root_(root) {}

  bool null() { return put(nullptr); }
  bool boolean(bool v) { return put(v); }
  bool number_integer(json::number_integer_t v) { return put(v); }
  bool number_unsigned(json::number_unsigned_t v) { return put(v); }
  bool number_float(json::number_float_t v, const std::string& raw) {
    if (is_integer_literal(raw)) return put(raw);
    return put(v);
  }
  bool string(std::string& v) { return put(v); }
  bool binary(json::binary_t& v) { return put(json::binary(v)); }
  bool start_object(std::size_t) {
    stack_.push_back(put_ref(json::object()));
    return true;
  }
  bool key(std::string& k) {
    pending_key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    stack_.push_back(put_ref(json::array()));
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& e) {
    throw JsonFormatError("invalid JSON at byte " + std::to_string(position) + ": " + e.what());
  }

 private:
  json* put_ref(json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    json& slot = top[pending_key_];
    slot = std::move(value);
    return &slot;
  }
  bool put(json value) {
    put_ref(std::move(value));
    return true;
  }

  json& root_;
  std::vector<json*> stack_;
  std::string pending_key_;
};

json parse_wide(std::string_view text) {
  json root;
  WideIntegerDom dom(root);
  json::sax_parse(text.begin(), text.end(), &dom);
  return root;
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw JsonFormatError(std::string("missing field \"") + name + "\"");
  }
  return obj.at(name);
}

BigInt to_big(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()));
    return BigInt(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string() && is_integer_literal(v.get<std::string>())) {
    return BigInt(v.get<std::string>());
  }
  throw JsonFormatError("expected an integer, got " + v.dump());
}

std::uint64_t to_u64(const json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw JsonFormatError(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string series_to_json(const Series& s) {
  std::string out = "{\"ring\":";
  out += s.ring().is_exact() ? "\"Z\"" : "{\"mod\":" + std::to_string(s.ring().modulus()) + "}";
  out += ",\"order\":" + std::to_string(s.order()) + ",\"coeffs\":[";
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n != 0) out += ',';
    out += s.ring().is_exact() ? s.exact()[n].get_str() : std::to_string(s.residues()[n]);
  }
  out += "]}";
  return out;
}

Series series_from_json(std::string_view text) {
  const json doc = parse_wide(text);
  const json& ring_field = field(doc, "ring");
  CoefficientRing ring = CoefficientRing::integers();
  if (ring_field.is_object()) {
    try {
      ring = CoefficientRing::modulo(to_u64(field(ring_field, "mod"), "mod"));
    } catch (const std::invalid_argument& e) {
      throw JsonFormatError(e.what());
    }
  } else if (ring_field != "Z") {
    throw JsonFormatError("ring must be \"Z\" or {\"mod\": m}");
  }
  const std::uint64_t order = to_u64(field(doc, "order"), "order");
  const json& coeffs = field(doc, "coeffs");
  if (!coeffs.is_array()) throw JsonFormatError("coeffs must be an array");
  std::vector<BigInt> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) values.push_back(to_big(c));
  try {
    return series_from_coeffs(ring, values, order);
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

std::string report_to_json(const VerificationReport& r) {
  std::string out = "{\"id\":" + quoted(r.claim_id);
  out += ",\"bound\":" + std::to_string(r.bound);
  out += ",\"instances\":" + std::to_string(r.instances);
  out += ",\"status\":" + quoted(to_string(r.status));
  if (r.status == Status::Skipped) out += ",\"reason\":" + quoted(r.reason);
  out += ",\"counterexample\":";
  if (!r.counterexample) {
    out += "null";
  } else {
    const auto& ce = *r.counterexample;
    out += "{\"params\":{";
    for (std::size_t i = 0; i < ce.params.size(); ++i) {
      if (i != 0) out += ',';
      out += quoted(ce.params[i].name) + ':' + std::to_string(ce.params[i].value);
    }
    out += "},\"index\":" + std::to_string(ce.index);
    out += ",\"lhs\":" + ce.lhs.get_str() + ",\"rhs\":" + ce.rhs.get_str() + "}";
  }
  out += '}';
  return out;
}

VerificationReport report_from_json(std::string_view text) {
  const json doc = parse_wide(text);
  VerificationReport r;
  const json& id = field(doc, "id");
  if (!id.is_string()) throw JsonFormatError("id must be a string");
  r.claim_id = id.get<std::string>();
  r.bound = to_u64(field(doc, "bound"), "bound");
  r.instances = to_u64(field(doc, "instances"), "instances");
  const json& status = field(doc, "status");
  if (status == "pass") {
    r.status = Status::Pass;
  } else if (status == "fail") {
    r.status = Status::Fail;
  } else if (status == "skipped") {
    r.status = Status::Skipped;
    const json& reason = field(doc, "reason");
    if (!reason.is_string()) throw JsonFormatError("reason must be a string");
    r.reason = reason.get<std::string>();
  } else {
    throw JsonFormatError("unknown status " + status.dump());
  }
  const json& ce = field(doc, "counterexample");
  if (!ce.is_null()) {
    Counterexample c;
    const json& params = field(ce, "params");
    if (!params.is_object()) throw JsonFormatError("params must be an object");
    for (auto it = params.begin(); it != params.end(); ++it) {
      if (!it.value().is_number_integer()) throw JsonFormatError("params must be integers");
      c.params.push_back({it.key(), it.value().get<std::int64_t>()});
    }
    c.index = to_u64(field(ce, "index"), "index");
    c.lhs = to_big(field(ce, "lhs"));
    c.rhs = to_big(field(ce, "rhs"));
    r.counterexample = std::move(c);
  }
  if (r.status == Status::Fail && !r.counterexample) {
    throw JsonFormatError("a failing report needs a counterexample");
  }
  return r;
}

}  // namespace qseries
