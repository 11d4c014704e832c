#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laz/bounds.hpp"
#include "laz/seqcore.hpp"

namespace laz::io {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Floats are serialized with 17 significant digits so identical inputs give
// byte-identical output.
std::string format_double(double v);

// Minimal deterministic JSON emitter: insertion order preserved, no
// locale-dependent formatting.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  JsonWriter& raw(const std::string& fragment);

  std::string str() const { return out_; }

 private:
  void pre_value();
  std::string out_;
  std::vector<bool> needs_comma_;
  bool after_key_ = false;
};

// Sequence JSON: {"n": int, "phases": [int]?, "values": [[re, im]]?} with
// phases authoritative when both are present. Family JSON:
// {"n": int, "members": [sequence], "mask": {"forbidden": [int]}?}.
PolyphaseSequence sequence_from_json_text(const std::string& text);
SequenceFamily family_from_json_text(const std::string& text);
SequenceFamily load_family(const std::string& path);

struct Provenance {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> params;  // already rendered values
};

std::string family_to_json(const SequenceFamily& family, const Provenance* provenance = nullptr);

// Grid CSV: header tau,nu,mag; rows tau-major over the signed range.
std::string grid_to_csv(const AmbiguityGrid& grid);
// Grid JSON: signed-square magnitudes row per tau.
std::string grid_to_json(const AmbiguityGrid& grid);

std::string certificate_to_json(const Certificate& cert);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace laz::io
