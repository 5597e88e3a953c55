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

// File formats. Matrices are {"d_rows", "d_cols", "re", "im"} with row-major
// entry lists; channels, POVMs and ensembles nest that format. Output numbers
// carry 17 significant digits; non-finite values become the strings "inf",
// "-inf" and "nan".

#pragma once

#include <string>
#include <vector>

#include "entropion/channels.hpp"
#include "entropion/holevo.hpp"
#include "entropion/inequalities.hpp"
#include "entropion/matcore.hpp"

namespace entropion {

/// Compact JSON writer with a fixed key order (insertion order) and
/// %.17g numbers, so equal inputs give equal bytes.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double x);
  JsonWriter& value(long long x);
  JsonWriter& value(unsigned long long x);
  JsonWriter& value(bool b);
  JsonWriter& value(const std::string& s);
  JsonWriter& value(const char* s) { return value(std::string(s)); }

  const std::string& str() const { return out_; }

 private:
  void separator();
  std::string out_;
  std::vector<bool> first_;  // per open container: nothing written yet
  bool after_key_ = false;
};

std::string format_number(double x);

ComplexMatrix parse_matrix(const std::string& text);
HermitianMatrix parse_hermitian(const std::string& text);
DensityMatrix parse_density(const std::string& text);
KrausMap parse_channel(const std::string& text);
Povm parse_povm(const std::string& text);
Ensemble parse_ensemble(const std::string& text);

std::string matrix_to_json(const ComplexMatrix& m);
std::string channel_to_json(const KrausMap& phi);
std::string povm_to_json(const Povm& m);
std::string ensemble_to_json(const Ensemble& e);

void write_matrix(JsonWriter& w, const ComplexMatrix& m);
void write_report(JsonWriter& w, const CheckReport& r);

/// JSON array of reports.
std::string reports_to_json(const std::vector<CheckReport>& reports);
/// Header line plus one line per report.
std::string reports_to_csv(const std::vector<CheckReport>& reports);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace entropion
