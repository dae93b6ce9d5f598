#include "magicsq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace magicsq {

namespace {

Dyadic scalar_from_json(const json& v) {
  if (v.is_string()) return Dyadic::from_string(v.get<std::string>());
  if (v.is_number_integer()) return Dyadic(v.get<long long>());
  throw std::invalid_argument("scalar must be a string or integer");
}

}  // namespace

json hyper_to_json(const Hyper& h) {
  json arr = json::array();
  for (int i = 0; i < h.dim(); ++i) arr.push_back(h[i].to_string());
  return arr;
}

Hyper hyper_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of scalars");
  std::vector<Dyadic> coords;
  coords.reserve(j.size());
  for (const auto& v : j) coords.push_back(scalar_from_json(v));
  return Hyper(std::move(coords));
}

json matrix_to_json(const SquareMatrix& m) {
  json j;
  j["dim"] = m.n();
  if (m.provenance()) {
    j["A"] = hyper_to_json(m.provenance()->A);
    j["P"] = hyper_to_json(m.provenance()->P);
    j["convention"] = convention_tag(m.provenance()->convention);
  }
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int jcol = 0; jcol < m.n(); ++jcol) row.push_back(m.at(i, jcol).to_string());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  j["constant"] = gram_report(m).constant.to_string();
  return j;
}

SquareMatrix matrix_from_json(const json& j) {
  int n = j.at("dim").get<int>();
  const json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("matrix entries shape mismatch");
  std::vector<Dyadic> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix entries shape mismatch");
    for (const auto& v : row) entries.push_back(scalar_from_json(v));
  }
  std::optional<Provenance> prov;
  if (j.contains("A") && j.contains("P")) {
    Convention conv = j.contains("convention")
                          ? convention_from_tag(j.at("convention").get<std::string>())
                          : Convention::standard;
    prov = Provenance{hyper_from_json(j.at("A")), hyper_from_json(j.at("P")), conv};
  }
  return SquareMatrix(n, std::move(entries), std::move(prov));
}

json candidate_to_json(const Candidate& c, Convention conv, bool with_timestamp) {
  json j;
  j["dim"] = c.A.dim();
  j["convention"] = convention_tag(conv);
  j["A"] = hyper_to_json(c.A);
  j["P"] = hyper_to_json(c.P);
  j["constant"] = c.constant.to_string();
  j["classification"] = classification_name(c.flags.cls);
  j["entries_distinct"] = c.flags.entries_distinct;
  j["squares_distinct"] = c.flags.squares_distinct;
  j["entries_integral"] = c.flags.entries_integral;
  j["seed"] = c.seed;
  j["worker"] = c.worker;
  j["iteration"] = c.iteration;
  if (with_timestamp) j["timestamp"] = c.timestamp;
  return j;
}

std::string candidate_to_jsonl(const Candidate& c, Convention conv, bool with_timestamp) {
  return candidate_to_json(c, conv, with_timestamp).dump() + "\n";
}

std::string grid_to_string(const SquareMatrix& m) {
  std::size_t width = 1;
  for (const Dyadic& e : m.entries()) width = std::max(width, e.to_string().size());
  std::string out;
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      std::string s = m.at(i, j).to_string();
      if (j) out += "  ";
      out += std::string(width - s.size(), ' ') + s;
    }
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace magicsq
