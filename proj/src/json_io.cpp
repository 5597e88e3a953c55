// Copyright 2026 The Entropion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entropion/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace entropion {

using nlohmann::json;

std::string format_number(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Keep integral doubles recognisable as floats.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void JsonWriter::separator() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separator();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  separator();
  out_ += json(k).dump();
  out_ += ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separator();
  out_ += format_number(x);
  return *this;
}

JsonWriter& JsonWriter::value(long long x) {
  separator();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(unsigned long long x) {
  separator();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  separator();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
  separator();
  out_ += json(s).dump();
  return *this;
}

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t size_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field \"") + name + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<double> number_list(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) throw ParseError(std::string("field \"") + name + "\" holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

ComplexMatrix matrix_from(const json& j) {
  const std::size_t rows = size_field(j, "d_rows");
  const std::size_t cols = size_field(j, "d_cols");
  const std::vector<double> re = number_list(j, "re");
  const std::vector<double> im = number_list(j, "im");
  if (re.size() != rows * cols || im.size() != rows * cols)
    throw ParseError("matrix: re/im must hold d_rows * d_cols entries");
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = Complex(re[i * cols + k], im[i * cols + k]);
  return m;
}

const json& array_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array");
  return v;
}

KrausMap channel_from(const json& j) {
  const std::size_t d_in = size_field(j, "d_in");
  const std::size_t d_out = size_field(j, "d_out");
  std::vector<ComplexMatrix> ops;
  for (const auto& k : array_field(j, "kraus")) ops.push_back(matrix_from(k));
  KrausMap phi(std::move(ops));
  if (phi.d_in() != d_in || phi.d_out() != d_out) throw DimensionError("channel: Kraus shapes disagree with d_in/d_out");
  return phi;
}

}  // namespace

ComplexMatrix parse_matrix(const std::string& text) { return matrix_from(parse_text(text)); }
HermitianMatrix parse_hermitian(const std::string& text) { return HermitianMatrix(parse_matrix(text)); }
DensityMatrix parse_density(const std::string& text) { return DensityMatrix(parse_matrix(text)); }
KrausMap parse_channel(const std::string& text) { return channel_from(parse_text(text)); }

Povm parse_povm(const std::string& text) {
  const json j = parse_text(text);
  std::vector<HermitianMatrix> effects;
  for (const auto& e : array_field(j, "effects")) effects.emplace_back(matrix_from(e));
  return Povm(std::move(effects));
}

Ensemble parse_ensemble(const std::string& text) {
  const json j = parse_text(text);
  std::vector<double> weights = number_list(j, "weights");
  std::vector<DensityMatrix> states;
  for (const auto& s : array_field(j, "states")) states.emplace_back(matrix_from(s));
  return Ensemble(std::move(weights), std::move(states));
}

void write_matrix(JsonWriter& w, const ComplexMatrix& m) {
  w.begin_object();
  w.key("d_rows").value(static_cast<unsigned long long>(m.rows()));
  w.key("d_cols").value(static_cast<unsigned long long>(m.cols()));
  w.key("re").begin_array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) w.value(m(i, k).real());
  w.end_array();
  w.key("im").begin_array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) w.value(m(i, k).imag());
  w.end_array();
  w.end_object();
}

std::string matrix_to_json(const ComplexMatrix& m) {
  JsonWriter w;
  write_matrix(w, m);
  return w.str();
}

std::string channel_to_json(const KrausMap& phi) {
  JsonWriter w;
  w.begin_object();
  w.key("d_in").value(static_cast<unsigned long long>(phi.d_in()));
  w.key("d_out").value(static_cast<unsigned long long>(phi.d_out()));
  w.key("kraus").begin_array();
  for (const auto& k : phi.kraus_ops()) write_matrix(w, k);
  w.end_array().end_object();
  return w.str();
}

std::string povm_to_json(const Povm& m) {
  JsonWriter w;
  w.begin_object().key("effects").begin_array();
  for (const auto& e : m.effects()) write_matrix(w, e.matrix());
  w.end_array().end_object();
  return w.str();
}

std::string ensemble_to_json(const Ensemble& e) {
  JsonWriter w;
  w.begin_object().key("weights").begin_array();
  for (double x : e.weights()) w.value(x);
  w.end_array().key("states").begin_array();
  for (const auto& s : e.states()) write_matrix(w, s.matrix());
  w.end_array().end_object();
  return w.str();
}

void write_report(JsonWriter& w, const CheckReport& r) {
  w.begin_object();
  w.key("suite").value(r.suite_name);
  w.key("trials").value(static_cast<unsigned long long>(r.trials));
  w.key("seed").value(static_cast<unsigned long long>(r.seed));
  w.key("tol").value(r.tol);
  w.key("pass").value(r.pass());
  w.key("worst_margin").value(r.worst_margin);
  w.key("skipped_infinite").value(static_cast<unsigned long long>(r.skipped_infinite));
  w.key("failures").begin_array();
  for (const auto& f : r.failures) {
    w.begin_object();
    w.key("trial").value(static_cast<unsigned long long>(f.trial));
    w.key("margin").value(f.margin);
    w.key("digest").value(f.digest);
    w.end_object();
  }
  w.end_array();
  w.key("runtime_ms").value(r.runtime_ms);
  w.end_object();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  JsonWriter w;
  w.begin_array();
  for (const auto& r : reports) write_report(w, r);
  w.end_array();
  return w.str() + "\n";
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = "suite,trials,seed,tol,pass,worst_margin,skipped_infinite,failures,runtime_ms\n";
  for (const auto& r : reports) {
    out += r.suite_name + ',' + std::to_string(r.trials) + ',' + std::to_string(r.seed) + ',' +
           format_number(r.tol) + ',' + (r.pass() ? "true" : "false") + ',' + format_number(r.worst_margin) + ',' +
           std::to_string(r.skipped_infinite) + ',' + std::to_string(r.failures.size()) + ',' +
           format_number(r.runtime_ms) + '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace entropion
