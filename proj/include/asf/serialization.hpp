#pragma once

#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "asf/errors.hpp"
#include "asf/expansion.hpp"
#include "asf/exponent.hpp"
#include "asf/frames.hpp"
#include "asf/scalar.hpp"
#include "asf/vectors.hpp"

namespace asf::io {

enum class ScalarKind { real_field, complex_field };

// ============================================================================
// Deterministic JSON rendering
// ============================================================================

/// Fixed decimal rendering at 17 significant digits; identical inputs give
/// identical bytes, and 17 digits round-trip every double.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

/// Minimal compact JSON emitter with explicit structure calls. Field order
/// is exactly the call order, so reports are byte-stable.
class JsonBuilder {
 public:
  JsonBuilder& begin_object() { return open('{'); }
  JsonBuilder& end_object() { return close('}'); }
  JsonBuilder& begin_array() { return open('['); }
  JsonBuilder& end_array() { return close(']'); }

  JsonBuilder& key(std::string_view k) {
    comma();
    quote(k);
    out_ += ':';
    pending_value_ = true;
    return *this;
  }

  JsonBuilder& value_string(std::string_view s) {
    comma();
    quote(s);
    return *this;
  }
  JsonBuilder& value_real(double v) {
    comma();
    out_ += format_real(v);
    return *this;
  }
  JsonBuilder& value_uint(std::size_t v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }
  JsonBuilder& value_bool(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonBuilder& value_null() {
    comma();
    out_ += "null";
    return *this;
  }
  /// Splices an already rendered JSON value verbatim.
  JsonBuilder& value_raw(std::string_view rendered) {
    comma();
    out_ += rendered;
    return *this;
  }

  const std::string& str() const { return out_; }

 private:
  JsonBuilder& open(char c) {
    comma();
    out_ += c;
    need_comma_.push_back(false);
    return *this;
  }
  JsonBuilder& close(char c) {
    out_ += c;
    need_comma_.pop_back();
    if (!need_comma_.empty()) need_comma_.back() = true;
    return *this;
  }
  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!need_comma_.empty()) {
      if (need_comma_.back()) out_ += ',';
      need_comma_.back() = true;
    }
  }
  void quote(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> need_comma_;
  bool pending_value_ = false;
};

/// Exponent field: a number, or the string "inf" for the sup norm.
inline void write_exponent(JsonBuilder& b, const Exponent& p) {
  if (p.is_infinite()) {
    b.value_string("inf");
  } else {
    b.value_real(p.value());
  }
}

template <Scalar T>
void write_scalar(JsonBuilder& b, const T& v) {
  if constexpr (is_complex_v<T>) {
    b.begin_array();
    b.value_real(double(v.real()));
    b.value_real(double(v.imag()));
    b.end_array();
  } else {
    b.value_real(double(v));
  }
}

template <Scalar T>
void write_scalar_list(JsonBuilder& b, const std::vector<T>& values) {
  b.begin_array();
  for (const T& v : values) write_scalar(b, v);
  b.end_array();
}

// ============================================================================
// System schema
// ============================================================================
//
// {"dim": d, "p": number|"inf", "scalar": "real"|"complex",
//  "pairs": [{"f": [entry...], "tau": [entry...]}, ...]}
//
// real entries are numbers; complex entries are [re, im] arrays.

template <Scalar T>
std::string system_to_json(const FunctionalSystem<T>& sys) {
  JsonBuilder b;
  b.begin_object();
  b.key("dim").value_uint(sys.dim());
  b.key("p");
  write_exponent(b, sys.exponent());
  b.key("scalar").value_string(is_complex_v<T> ? "complex" : "real");
  b.key("pairs").begin_array();
  for (const SystemPair<T>& pr : sys.pairs()) {
    b.begin_object();
    b.key("f");
    write_scalar_list(b, pr.f.coeffs());
    b.key("tau");
    write_scalar_list(b, pr.tau.coords());
    b.end_object();
  }
  b.end_array();
  b.end_object();
  return b.str();
}

inline ScalarKind scalar_kind_of(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("scalar") || !j["scalar"].is_string()) {
    throw InvalidArgument("system JSON needs a \"scalar\" field of \"real\" or \"complex\"");
  }
  const std::string s = j["scalar"].get<std::string>();
  if (s == "real") return ScalarKind::real_field;
  if (s == "complex") return ScalarKind::complex_field;
  throw InvalidArgument("system JSON field \"scalar\" must be \"real\" or \"complex\"");
}

inline Exponent exponent_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Exponent::infinity();
    throw InvalidArgument("system JSON field \"p\" must be a number >= 1 or \"inf\"");
  }
  if (!j.is_number()) {
    throw InvalidArgument("system JSON field \"p\" must be a number >= 1 or \"inf\"");
  }
  return Exponent(j.get<double>());
}

namespace detail {

template <Scalar T>
T entry_from_json(const nlohmann::json& j, const std::string& at) {
  if constexpr (is_complex_v<T>) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
      throw InvalidArgument("complex entry at " + at + " must be a [re, im] pair");
    }
    return T(j[0].get<double>(), j[1].get<double>());
  } else {
    if (!j.is_number()) {
      throw InvalidArgument("real entry at " + at + " must be a number");
    }
    return T(j.get<double>());
  }
}

template <Scalar T>
std::vector<T> entries_from_json(const nlohmann::json& j, std::size_t expect,
                                 const std::string& at) {
  if (!j.is_array()) throw InvalidArgument(at + " must be an array");
  if (j.size() != expect) {
    throw InvalidArgument(at + " must have length " + std::to_string(expect));
  }
  std::vector<T> out;
  out.reserve(expect);
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(entry_from_json<T>(j[i], at + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace detail

/// Parse a system from its JSON object form; the scalar template parameter
/// must match the "scalar" tag (dispatch through scalar_kind_of first).
template <Scalar T>
FunctionalSystem<T> system_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("system JSON must be an object");
  const ScalarKind kind = scalar_kind_of(j);
  if ((kind == ScalarKind::complex_field) != is_complex_v<T>) {
    throw InvalidArgument("system JSON scalar tag does not match the requested field");
  }
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) {
    throw InvalidArgument("system JSON needs an unsigned \"dim\" field");
  }
  if (!j.contains("p")) throw InvalidArgument("system JSON needs a \"p\" field");
  if (!j.contains("pairs")) throw InvalidArgument("system JSON needs a \"pairs\" field");

  const std::size_t d = j["dim"].get<std::size_t>();
  const Exponent p = exponent_from_json(j["p"]);
  const nlohmann::json& jp = j["pairs"];
  if (!jp.is_array() || jp.empty()) {
    throw InvalidArgument("system JSON field \"pairs\" must be a nonempty array");
  }

  std::vector<SystemPair<T>> pairs;
  pairs.reserve(jp.size());
  for (std::size_t n = 0; n < jp.size(); ++n) {
    const std::string at = "pairs[" + std::to_string(n) + "]";
    const nlohmann::json& pj = jp[n];
    if (!pj.is_object() || !pj.contains("f") || !pj.contains("tau")) {
      throw InvalidArgument(at + " must be an object with \"f\" and \"tau\"");
    }
    pairs.push_back(SystemPair<T>{
        Functional<T>(detail::entries_from_json<T>(pj["f"], d, at + ".f")),
        PVector<T>(detail::entries_from_json<T>(pj["tau"], d, at + ".tau"), p)});
  }
  return FunctionalSystem<T>(d, p, std::move(pairs));
}

// ============================================================================
// Expansion schema
// ============================================================================
//
// {"variant": "A"|"B"|"TIGHT", "lambda": entry, "count_added": n,
//  "added_pairs": [{"f": [...], "tau": [...]}, ...], "residual": r}

template <Scalar T>
std::string expansion_to_json(const ExpansionResult<T>& r) {
  JsonBuilder b;
  b.begin_object();
  b.key("variant").value_string(to_string(r.variant));
  b.key("lambda");
  write_scalar(b, r.lambda);
  b.key("count_added").value_uint(r.count_added);
  b.key("added_pairs").begin_array();
  for (const SystemPair<T>& pr : r.added_pairs) {
    b.begin_object();
    b.key("f");
    write_scalar_list(b, pr.f.coeffs());
    b.key("tau");
    write_scalar_list(b, pr.tau.coords());
    b.end_object();
  }
  b.end_array();
  b.key("residual").value_real(r.residual);
  b.end_object();
  return b.str();
}

}  // namespace asf::io
