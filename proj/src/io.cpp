#include "cobweb/io.hpp"

#include <sstream>

#include "cobweb/error.hpp"

namespace cobweb::io {

std::string to_text(const BoolMatrix& m) {
  std::string out;
  out.reserve(m.rows() * (2 * m.cols() + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m.get(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

BoolMatrix bool_matrix_from_text(const std::string& text) {
  std::vector<std::vector<bool>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<bool> row;
    for (std::size_t pos = 0; pos < line.size(); ++pos) {
      const char c = line[pos];
      if (pos % 2 == 1) {
        if (c != ' ') throw ParseError("entries must be separated by single spaces", lineno);
        continue;
      }
      if (c != '0' && c != '1') throw ParseError(std::string("unexpected character '") + c + "'", lineno);
      row.push_back(c == '1');
    }
    if (line.size() % 2 == 0) throw ParseError("trailing separator", lineno);
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged row", lineno);
    rows.push_back(std::move(row));
  }
  BoolMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j]) m.set(i, j);
  return m;
}

namespace {

json rows_of(const BoolMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j) ? 1 : 0);
    data.push_back(std::move(row));
  }
  return data;
}

BoolMatrix matrix_from_rows(const json& data, std::size_t rows, std::size_t cols) {
  if (!data.is_array() || data.size() != rows) throw ParseError("expected " + std::to_string(rows) + " rows");
  BoolMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = data[i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const json& v = row[j];
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
        throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be 0 or 1");
      }
      if (v.get<int>() == 1) m.set(i, j);
    }
  }
  return m;
}

std::size_t get_count(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw ParseError(std::string("missing non-negative integer '") + key + "'");
  }
  return j[key].get<std::size_t>();
}

json mismatch_json(const std::optional<MatrixMismatch>& m) {
  if (!m) return nullptr;
  return {{"row", m->row}, {"col", m->col}, {"expected", to_string(m->expected)},
          {"actual", to_string(m->actual)}};
}

}  // namespace

json to_json(const BoolMatrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows_of(m)}}; }

BoolMatrix bool_matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  return matrix_from_rows(j.value("data", json()), get_count(j, "rows"), get_count(j, "cols"));
}

BoolMatrix parse_bool_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return bool_matrix_from_json(parse_json(text));
  return bool_matrix_from_text(text);
}

json to_json(const FSequence& f) { return f.values(); }

FSequence fsequence_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("F-sequence JSON must be an array");
  std::vector<std::size_t> v;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() <= 0) {
      throw InvalidSequenceError("F-sequence entries must be positive integers");
    }
    v.push_back(e.get<std::size_t>());
  }
  return FSequence(std::move(v));
}

json to_json(const GradedDigraph& g) {
  json blocks = json::array();
  for (const auto& b : g.blocks()) blocks.push_back(rows_of(b.matrix()));
  return {{"sizes", g.partition().sizes()}, {"blocks", std::move(blocks)}};
}

GradedDigraph graded_digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sizes") || !j["sizes"].is_array()) {
    throw ParseError("block-chain JSON needs a 'sizes' array");
  }
  std::vector<std::size_t> sizes;
  for (const auto& s : j["sizes"]) {
    if (!s.is_number_integer() || s.get<long long>() <= 0) throw ParseError("sizes must be positive integers");
    sizes.push_back(s.get<std::size_t>());
  }
  const json blocks_json = j.value("blocks", json::array());
  if (!blocks_json.is_array()) throw ParseError("'blocks' must be an array");
  if (sizes.empty() || blocks_json.size() + 1 != sizes.size()) {
    throw ChainError(std::to_string(sizes.size()) + " sizes need " +
                     std::to_string(sizes.empty() ? 0 : sizes.size() - 1) + " blocks");
  }
  std::vector<BipartiteBlock> blocks;
  for (std::size_t k = 0; k < blocks_json.size(); ++k)
    blocks.emplace_back(matrix_from_rows(blocks_json[k], sizes[k], sizes[k + 1]));
  return GradedDigraph(LevelPartition(std::move(sizes)), std::move(blocks));
}

json to_json(const RationalMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

RationalMatrix rational_matrix_from_json(const json& j) {
  const std::size_t rows = get_count(j, "rows");
  const std::size_t cols = get_count(j, "cols");
  const json& data = j.at("data");
  if (!data.is_array() || data.size() != rows) throw ParseError("rational matrix row count mismatch");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!data[i].is_array() || data[i].size() != cols) throw ParseError("rational matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!data[i][c].is_string()) throw ParseError("rational entries must be \"p/q\" strings");
      m(i, c) = parse_rational(data[i][c].get<std::string>());
    }
  }
  return m;
}

json to_json(const GhwReport& r) {
  json levels = json::array();
  for (const auto& l : r.per_level) {
    levels.push_back({{"level", l.level},
                      {"holds", l.holds},
                      {"expected", to_string(l.expected)},
                      {"max_abs_discrepancy", to_string(l.max_abs_discrepancy)},
                      {"level_sum_eigenvalue",
                       l.level_sum_eigenvalue ? json(to_string(*l.level_sum_eigenvalue)) : json(nullptr)}});
  }
  return {{"check", r.check},
          {"holds", r.holds_elementwise},
          {"r_if_uniform", r.r_if_uniform ? json(to_string(*r.r_if_uniform)) : json(nullptr)},
          {"max_abs_discrepancy", to_string(r.max_abs_discrepancy)},
          {"first_counterexample", mismatch_json(r.first_counterexample)},
          {"per_level", std::move(levels)}};
}

json to_json(const PowerIdentityReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"n", s.n},
                     {"status", to_string(s.status)},
                     {"sides_equal", s.sides_equal},
                     {"first_counterexample", mismatch_json(s.first_counterexample)}});
  }
  json first = nullptr;
  for (const auto& s : r.steps)
    if (s.first_counterexample) {
      first = mismatch_json(s.first_counterexample);
      first["n"] = s.n;
      break;
    }
  return {{"check", r.weighted ? "power-delta" : "power"},
          {"holds", r.holds()},
          {"base_holds", r.base_holds},
          {"failing_base_level", r.failing_base_level ? json(*r.failing_base_level) : json(nullptr)},
          {"first_counterexample", first},
          {"per_level", std::move(steps)}};
}

json to_json(const FominReport& r) {
  json steps = json::array();
  json first = nullptr;
  for (const auto& s : r.steps) {
    steps.push_back({{"n", s.n},
                     {"q", to_string(s.q)},
                     {"r", to_string(s.r)},
                     {"holds", s.holds},
                     {"max_abs_residual", to_string(s.max_abs_residual)}});
    if (!s.holds && first.is_null()) first = {{"n", s.n}, {"max_abs_residual", to_string(s.max_abs_residual)}};
  }
  return {{"check", "fomin"}, {"holds", r.holds()}, {"first_counterexample", first}, {"per_level", steps}};
}

json to_json(const FDifferentialReport& r) {
  json levels = json::array();
  for (const auto& l : r.per_level)
    levels.push_back({{"level", l.level}, {"condition1", l.condition1}, {"condition2", l.condition2}});
  json first = nullptr;
  if (r.first_counterexample) {
    const auto& v = *r.first_counterexample;
    first = {{"condition", v.condition}, {"x", v.x}, {"y", v.y ? json(*v.y) : json(nullptr)}};
    if (v.condition == 1) {
      first["common_covers"] = v.observed;
      first["commonly_covered"] = v.counterpart;
    } else {
      first["covers"] = v.observed;
      first["covered_by"] = v.counterpart;
    }
  }
  return {{"check", "fdiff"},
          {"holds", r.holds()},
          {"condition1", r.condition1},
          {"condition2", r.condition2},
          {"first_counterexample", first},
          {"per_level", std::move(levels)}};
}

json to_json(const FerrersResult& r) {
  json first = nullptr;
  if (r.witness) {
    const auto& w = *r.witness;
    first = {{"block", w.block}, {"r1", w.r1}, {"r2", w.r2}, {"c1", w.c1}, {"c2", w.c2}};
  }
  return {{"check", "ferrers"}, {"holds", r.dim_one}, {"first_counterexample", first}, {"per_level", json::array()}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace cobweb::io
