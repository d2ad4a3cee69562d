// Copyright 2026 The qlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLP_IO_HPP
#define QLP_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qlp/spectral.hpp"

namespace qlp {

// Matrix files are JSON objects {"dim": d, "matrix": [[[re, im], ...], ...]}
// with d rows of d entries each.
ComplexMatrix parse_matrix(std::string_view text);
ComplexMatrix load_matrix(const std::filesystem::path& path);
std::string format_matrix(const ComplexMatrix& m);
void save_matrix(const ComplexMatrix& m, const std::filesystem::path& path);

// Serialises with every floating-point number written to 17 significant
// digits, so doubles survive a round trip. Non-finite numbers, which JSON
// cannot express, are written as the strings "inf", "-inf" and "nan".
std::string dump_json(const nlohmann::json& j, int indent = 2);

// Reads a number written by dump_json, accepting the non-finite spellings.
double json_to_double(const nlohmann::json& j);
nlohmann::json double_to_json(double x);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace qlp

#endif  // QLP_IO_HPP
