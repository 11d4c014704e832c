#include "laz/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace laz::io {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

JsonWriter& JsonWriter::begin_object() {
  pre_value();
  out_ += '{';
  needs_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  needs_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  pre_value();
  out_ += '[';
  needs_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  needs_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  if (needs_comma_.back()) out_ += ',';
  needs_comma_.back() = true;
  out_ += '"';
  out_ += k;
  out_ += "\":";
  after_key_ = true;
  return *this;
}

void JsonWriter::pre_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!needs_comma_.empty()) {
    if (needs_comma_.back()) out_ += ',';
    needs_comma_.back() = true;
  }
}

JsonWriter& JsonWriter::value(double v) {
  pre_value();
  out_ += format_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  pre_value();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  pre_value();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  pre_value();
  out_ += '"';
  for (char c : v) {
    if (c == '"' || c == '\\') out_ += '\\';
    out_ += c;
  }
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::raw(const std::string& fragment) {
  pre_value();
  out_ += fragment;
  return *this;
}

namespace {

PolyphaseSequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw FormatError("sequence JSON: missing \"n\"");
  const int n = j.at("n").get<int>();
  if (j.contains("phases")) {
    std::vector<int> phases = j.at("phases").get<std::vector<int>>();
    return make_polyphase(n, phases);
  }
  if (j.contains("values")) {
    std::vector<cdouble> values;
    for (const auto& pair : j.at("values")) {
      if (!pair.is_array() || pair.size() != 2)
        throw FormatError("sequence JSON: values entries must be [re, im]");
      values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return sequence_from_values(n, std::move(values));
  }
  throw FormatError("sequence JSON: need \"phases\" or \"values\"");
}

SequenceFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("members"))
    throw FormatError("family JSON: missing \"n\" or \"members\"");
  const int n = j.at("n").get<int>();
  std::vector<PolyphaseSequence> members;
  for (const auto& mj : j.at("members")) members.push_back(sequence_from_json(mj));
  std::optional<SpectralMask> mask;
  if (j.contains("mask")) {
    mask = make_mask(n, j.at("mask").at("forbidden").get<std::vector<int>>());
  }
  SequenceFamily fam = make_family(std::move(members), std::move(mask));
  if (fam.n != n) throw FormatError("family JSON: member period disagrees with \"n\"");
  return fam;
}

void emit_sequence(JsonWriter& w, const PolyphaseSequence& s) {
  w.begin_object();
  w.key("n").value(s.n);
  if (s.has_exact_phases()) {
    w.key("phases").begin_array();
    for (int p : s.exact_phases) w.value(p);
    w.end_array();
  } else {
    w.key("values").begin_array();
    for (const cdouble& v : s.values) {
      w.begin_array().value(v.real()).value(v.imag()).end_array();
    }
    w.end_array();
  }
  w.end_object();
}

}  // namespace

PolyphaseSequence sequence_from_json_text(const std::string& text) {
  try {
    return sequence_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("sequence JSON: ") + e.what());
  }
}

SequenceFamily family_from_json_text(const std::string& text) {
  try {
    return family_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("family JSON: ") + e.what());
  }
}

SequenceFamily load_family(const std::string& path) {
  return family_from_json_text(read_file(path));
}

std::string family_to_json(const SequenceFamily& family, const Provenance* provenance) {
  JsonWriter w;
  w.begin_object();
  w.key("format").value(1);
  w.key("n").value(family.n);
  w.key("members").begin_array();
  for (const auto& s : family.members) emit_sequence(w, s);
  w.end_array();
  if (family.mask) {
    w.key("mask").begin_object();
    w.key("forbidden").begin_array();
    for (int f : family.mask->forbidden) w.value(f);
    w.end_array();
    w.end_object();
  }
  if (provenance) {
    w.key("provenance").begin_object();
    w.key("construction").value(provenance->construction);
    w.key("params").begin_object();
    for (const auto& [k, v] : provenance->params) w.key(k).raw(v);
    w.end_object();
    w.end_object();
  }
  w.end_object();
  return w.str() + "\n";
}

std::string grid_to_csv(const AmbiguityGrid& grid) {
  std::string out = "tau,nu,mag\n";
  const int n = grid.n();
  for (long long tau = -(n - 1); tau <= n - 1; ++tau) {
    for (long long nu = -(n - 1); nu <= n - 1; ++nu) {
      out += std::to_string(tau);
      out += ',';
      out += std::to_string(nu);
      out += ',';
      out += format_double(grid.mag(tau, nu));
      out += '\n';
    }
  }
  return out;
}

std::string grid_to_json(const AmbiguityGrid& grid) {
  JsonWriter w;
  const int n = grid.n();
  w.begin_object();
  w.key("format").value(1);
  w.key("n").value(n);
  w.key("kind").value(grid.kind() == GridKind::periodic ? "periodic" : "aperiodic");
  w.key("mags").begin_array();
  for (long long tau = -(n - 1); tau <= n - 1; ++tau) {
    w.begin_array();
    for (long long nu = -(n - 1); nu <= n - 1; ++nu) w.value(grid.mag(tau, nu));
    w.end_array();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string certificate_to_json(const Certificate& cert) {
  JsonWriter w;
  w.begin_object();
  w.key("format").value(1);
  w.key("bound").value(cert.bound.name);
  w.key("inputs").begin_object();
  w.key("n").value(cert.bound.n);
  w.key("m").value(cert.bound.m);
  if (cert.bound.zx > 0) w.key("zx").value(cert.bound.zx);
  if (cert.bound.zy > 0) w.key("zy").value(cert.bound.zy);
  if (cert.bound.l > 0) w.key("l").value(cert.bound.l);
  w.end_object();
  w.key("applicable").value(cert.bound.applicable);
  w.key("bound_value").value(cert.bound.value);
  w.key("measured").value(cert.measured);
  w.key("gap").value(cert.gap);
  w.key("verdict").value(verdict_name(cert.verdict));
  w.end_object();
  return w.str() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace laz::io
