#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "transhull/algebra.hpp"
#include "transhull/census.hpp"
#include "transhull/coalgebra.hpp"
#include "transhull/hull.hpp"
#include "transhull/semigroup.hpp"

namespace transhull {

using json = nlohmann::json;

// ---- .sgp: Cayley-table text format ----------------------------------------
// Line 1: the element count n.  Next n lines: n space-separated 0-based
// entries.  '#' starts a comment line.  Round-trips bit-exactly through
// serialize_sgp.

inline FiniteSemigroup parse_sgp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header)) throw ValidationError("sgp: missing element count line");
  int n = 0;
  {
    std::istringstream hs(header);
    if (!(hs >> n)) throw ValidationError("sgp: line " + std::to_string(lineno) +
                                          ": expected the element count");
    std::string extra;
    if (hs >> extra) throw ValidationError("sgp: line " + std::to_string(lineno) +
                                           ": trailing tokens after the element count");
  }
  if (n < 0) throw ValidationError("sgp: negative element count");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    std::string row;
    if (!next_data_line(row)) throw ValidationError("sgp: expected " + std::to_string(n) +
                                                    " table rows, got " + std::to_string(r));
    std::istringstream rs(row);
    for (int c = 0; c < n; ++c) {
      int v;
      if (!(rs >> v))
        throw ValidationError("sgp: line " + std::to_string(lineno) + ", column " +
                              std::to_string(c + 1) + ": expected an integer");
      flat.push_back(v);
    }
    std::string extra;
    if (rs >> extra)
      throw ValidationError("sgp: line " + std::to_string(lineno) + ": row has more than " +
                            std::to_string(n) + " entries");
  }
  std::string trailing;
  if (next_data_line(trailing))
    throw ValidationError("sgp: line " + std::to_string(lineno) + ": unexpected content after " +
                          std::to_string(n) + " table rows");
  return validate_semigroup(n, flat);
}

inline std::string serialize_sgp(const FiniteSemigroup& s) {
  std::string out = std::to_string(s.n) + "\n";
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      if (y) out += ' ';
      out += std::to_string(s.at(x, y));
    }
    out += '\n';
  }
  return out;
}

// ---- .alg: JSON algebra/coalgebra format ------------------------------------
// {"p": int, "dim": int, "mul": [[[int]]], "unit": [int]?, "comul": [[[int]]]?}
// mul[i][j] is the coordinate vector of e_i * e_j; comul[k][i][j] is the
// coefficient of e_i (x) e_j in delta(e_k).  Files may carry mul, comul or
// both over the same carrier.

struct AlgFile {
  int p = 2;
  int dim = 0;
  std::optional<FpAlgebra> algebra;
  std::optional<FpCoalgebra> coalgebra;
};

inline AlgFile parse_alg(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("alg: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("dim"))
    throw ValidationError("alg: expected an object with \"p\" and \"dim\"");
  AlgFile file;
  file.p = j.at("p").get<int>();
  file.dim = j.at("dim").get<int>();
  if (file.dim < 0) throw ValidationError("alg: negative dimension");

  auto read_tensor = [&](const json& t, const char* key) {
    std::vector<int> flat(static_cast<size_t>(file.dim) * file.dim * file.dim, 0);
    if (!t.is_array() || t.size() != static_cast<size_t>(file.dim))
      throw ValidationError(std::string("alg: ") + key + " must be a dim x dim x dim array");
    for (int a = 0; a < file.dim; ++a) {
      const json& mid = t.at(a);
      if (!mid.is_array() || mid.size() != static_cast<size_t>(file.dim))
        throw ValidationError(std::string("alg: ") + key + " must be a dim x dim x dim array");
      for (int b = 0; b < file.dim; ++b) {
        const json& row = mid.at(b);
        if (!row.is_array() || row.size() != static_cast<size_t>(file.dim))
          throw ValidationError(std::string("alg: ") + key + " must be a dim x dim x dim array");
        for (int c = 0; c < file.dim; ++c)
          flat[(static_cast<size_t>(a) * file.dim + b) * file.dim + c] = row.at(c).get<int>();
      }
    }
    return flat;
  };

  if (!j.contains("mul") && !j.contains("comul"))
    throw ValidationError("alg: need at least one of \"mul\", \"comul\"");
  if (j.contains("mul")) {
    std::optional<FpVec> unit;
    if (j.contains("unit")) unit = j.at("unit").get<FpVec>();
    file.algebra = validate_algebra(file.p, file.dim, read_tensor(j.at("mul"), "mul"), unit);
  }
  if (j.contains("comul"))
    file.coalgebra = validate_coalgebra(file.p, file.dim, read_tensor(j.at("comul"), "comul"));
  return file;
}

inline json tensor_to_json(const std::vector<int>& flat, int dim) {
  json t = json::array();
  for (int a = 0; a < dim; ++a) {
    json mid = json::array();
    for (int b = 0; b < dim; ++b) {
      json row = json::array();
      for (int c = 0; c < dim; ++c)
        row.push_back(flat[(static_cast<size_t>(a) * dim + b) * dim + c]);
      mid.push_back(row);
    }
    t.push_back(mid);
  }
  return t;
}

inline std::string serialize_alg(const AlgFile& file) {
  json j;
  j["p"] = file.p;
  j["dim"] = file.dim;
  if (file.algebra) {
    j["mul"] = tensor_to_json(file.algebra->mul, file.dim);
    if (file.algebra->unit) j["unit"] = *file.algebra->unit;
  }
  if (file.coalgebra) j["comul"] = tensor_to_json(file.coalgebra->delta, file.dim);
  return j.dump(2) + "\n";
}

// ---- hom files: a JSON array of image indices -------------------------------

inline std::vector<int> parse_hom(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("hom: invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ValidationError("hom: expected a JSON array of image indices");
  return j.get<std::vector<int>>();
}

// ---- hull report serialization ----------------------------------------------

inline json hull_to_json(const TranslationalHull& h) {
  json elems = json::array();
  for (const Multiplier& m : h.elements) {
    json e;
    e["L"] = m.L.img;
    e["R"] = m.R.img;
    e["inner_witnesses"] = m.inner_witnesses;
    elems.push_back(e);
  }
  json star = json::array();
  for (int i = 0; i < h.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < h.size(); ++j) row.push_back(h.star_at(i, j));
    star.push_back(row);
  }
  json out;
  out["order"] = h.base.n;
  out["elements"] = elems;
  out["star"] = star;
  out["identity"] = h.identity_index;
  out["counts"] = {{"total", h.size()}, {"inner", h.inner_count()}, {"outer", h.outer_count()}};
  return out;
}

// ---- report envelope ---------------------------------------------------------

struct CheckItem {
  std::string id;
  bool pass = false;
  std::string witness;  // re-checkable description; empty on pass
};

struct Report {
  std::string command;
  json inputs = json::object();  // file name -> content hash
  json results = json::object();
  std::vector<CheckItem> checks;

  bool all_pass() const {
    for (const CheckItem& c : checks)
      if (!c.pass) return false;
    return true;
  }

  json to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    json cs = json::array();
    for (const CheckItem& c : checks)
      cs.push_back({{"id", c.id}, {"pass", c.pass}, {"witness", c.witness}});
    j["checks"] = cs;
    return j;
  }

  static Report from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    for (const json& c : j.at("checks"))
      r.checks.push_back(
          {c.at("id").get<std::string>(), c.at("pass").get<bool>(), c.at("witness").get<std::string>()});
    return r;
  }
};

inline std::string content_hash_hex(const std::string& data) {
  char hex[32];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data.data(), data.size())));
  return hex;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << content;
}

}  // namespace transhull
