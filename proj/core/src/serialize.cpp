// Copyright 2026 The fraclap authors
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

#include "fraclap/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fraclap/errors.hpp"

namespace fraclap {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  // Shortest decimal that parses back to the same bits (never more than 17
  // significant digits); locale-free.
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["alpha"] = r.alpha;
  j["n"] = r.n;
  j["window"] = {r.window.first, r.window.second};
  j["grid"] = r.grid;
  j["g_discrete"] = r.g_discrete;
  j["g_green"] = r.g_green;
  j["g_riesz"] = r.g_riesz;
  j["pairwise_sup"] = {{"dg", r.pairwise_sup_dg},
                       {"dr", r.pairwise_sup_dr},
                       {"gr", r.pairwise_sup_gr}};
  j["residual_sup"] = r.residual_sup;
  return j.dump(2) + "\n";
}

SolveReport solve_report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("solve_report_from_json: ") + e.what());
  }
  try {
    SolveReport r;
    r.alpha = j.at("alpha").get<double>();
    r.n = j.at("n").get<std::size_t>();
    r.window = {j.at("window").at(0).get<double>(),
                j.at("window").at(1).get<double>()};
    r.grid = j.at("grid").get<std::vector<double>>();
    r.g_discrete = j.at("g_discrete").get<std::vector<double>>();
    r.g_green = j.at("g_green").get<std::vector<double>>();
    r.g_riesz = j.at("g_riesz").get<std::vector<double>>();
    r.pairwise_sup_dg = j.at("pairwise_sup").at("dg").get<double>();
    r.pairwise_sup_dr = j.at("pairwise_sup").at("dr").get<double>();
    r.pairwise_sup_gr = j.at("pairwise_sup").at("gr").get<double>();
    r.residual_sup = j.at("residual_sup").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("solve_report_from_json: ") + e.what());
  }
}

std::string to_csv(const SolveReport& r) {
  std::ostringstream out;
  out << "x,g_discrete,g_green,g_riesz\n";
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    out << format_double(r.grid[i]) << ',' << format_double(r.g_discrete[i])
        << ',' << format_double(r.g_green[i]) << ','
        << format_double(r.g_riesz[i]) << '\n';
  }
  return out.str();
}

std::string to_csv(const KernelTable& t) {
  std::ostringstream out;
  out << "x,y,G,K,H\n";
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    for (std::size_t j = 0; j < t.ys.size(); ++j) {
      const std::size_t idx = t.index(i, j);
      out << format_double(t.xs[i]) << ',' << format_double(t.ys[j]) << ','
          << format_double(t.G[idx]) << ',' << format_double(t.K[idx]) << ','
          << format_double(t.H[idx]) << '\n';
    }
  }
  return out.str();
}

std::string to_json(const KernelTable& t) {
  nlohmann::ordered_json j;
  j["alpha"] = t.alpha;
  j["xs"] = t.xs;
  j["ys"] = t.ys;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    for (std::size_t k = 0; k < t.ys.size(); ++k) {
      const std::size_t idx = t.index(i, k);
      // NaN sentinels serialize as null.
      rows.push_back({{"x", t.xs[i]},
                      {"y", t.ys[k]},
                      {"G", t.G[idx]},
                      {"K", t.K[idx]},
                      {"H", t.H[idx]}});
    }
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace fraclap
