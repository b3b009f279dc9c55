#include "gcakit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gcakit/errors.hpp"

namespace gcakit::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::nearbyint(v) == v && std::abs(v) < 9e15) return static_cast<std::int64_t>(v);
  }
  malformed(std::string(what) + " must be an integer");
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_into(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        emit_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out += ',';
        emit_into(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 5e-13 ? 0.0 : v);
  return buf;
}

std::string short_complex(Complex z) {
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  if (im == 0.0) return short_double(re);
  const std::string imag = (im == 1.0 ? "" : im == -1.0 ? "-" : short_double(im)) + "i";
  if (re == 0.0) return imag;
  return short_double(re) + (im > 0 ? "+" : "") + imag;
}

void render_grid(const std::vector<std::vector<std::string>>& cells, const std::string& indent, std::string& out) {
  std::size_t width = 1;
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  for (const auto& row : cells) {
    out += indent + "[";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += std::string(width - row[c].size() + (c == 0 ? 0 : 1), ' ') + row[c];
    }
    out += " ]\n";
  }
}

bool is_matrix_doc(const Json& j) {
  return j.is_object() && j.contains("kind") && j["kind"].is_string() &&
         (j["kind"] == "monomial" || j["kind"] == "dense");
}

bool is_report(const Json& j) { return j.is_object() && j.contains("overall") && j.contains("checks"); }

bool is_phase_obj(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

bool is_complex_obj(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im"); }

// Primitives, phases and complex numbers render on one line.
bool is_atom(const Json& j) { return j.is_primitive() || is_phase_obj(j) || is_complex_obj(j); }

bool is_scalar_row(const Json& j) { return j.is_array() && std::all_of(j.begin(), j.end(), is_atom); }

std::string scalar_text(const Json& j) {
  if (is_phase_obj(j)) return phase_from_json(j).to_string();
  if (is_complex_obj(j)) return short_complex(complex_from_json(j));
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return short_double(j.get<double>());
  return j.dump();
}

void render_into(const Json& j, const std::string& indent, std::string& out) {
  if (is_matrix_doc(j)) {
    std::vector<std::vector<std::string>> cells;
    if (j["kind"] == "monomial") {
      const auto m = monomial_from_json(j);
      cells.assign(m.dim(), std::vector<std::string>(m.dim(), "0"));
      for (std::size_t c = 0; c < m.dim(); ++c) cells[m.target()[c]][c] = m.phases()[c].to_string();
    } else {
      const auto m = dense_from_json(j);
      cells.assign(static_cast<std::size_t>(m.rows()), std::vector<std::string>(static_cast<std::size_t>(m.cols())));
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = short_complex(m(r, c));
        }
      }
    }
    render_grid(cells, indent, out);
    return;
  }
  if (is_report(j)) {
    out += indent + "overall: " + (j["overall"].get<bool>() ? "pass" : "FAIL") + "\n";
    for (const auto& c : j["checks"]) {
      out += indent + (c["pass"].get<bool>() ? "[pass] " : "[FAIL] ") + c["name"].get<std::string>();
      const std::string detail = c.value("detail", "");
      if (!detail.empty()) out += "  " + detail;
      out += "\n";
    }
    return;
  }
  if (is_atom(j)) {
    out += indent + scalar_text(j) + "\n";
    return;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (is_atom(v)) {
        out += indent + it.key() + ": " + scalar_text(v) + "\n";
      } else if (is_scalar_row(v)) {
        std::string row;
        for (std::size_t i = 0; i < v.size(); ++i) row += (i ? " " : "") + scalar_text(v[i]);
        out += indent + it.key() + ": [" + row + "]\n";
      } else {
        out += indent + it.key() + ":\n";
        render_into(v, indent + "  ", out);
      }
    }
    return;
  }
  if (j.is_array()) {
    if (!j.empty() && std::all_of(j.begin(), j.end(), is_scalar_row)) {
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : j) {
        cells.emplace_back();
        for (const auto& x : row) cells.back().push_back(scalar_text(x));
      }
      render_grid(cells, indent, out);
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (is_atom(j[i])) {
        out += indent + "- " + scalar_text(j[i]) + "\n";
      } else {
        out += indent + "- [" + std::to_string(i) + "]\n";
        render_into(j[i], indent + "  ", out);
      }
    }
    return;
  }
}

}  // namespace

Json to_json(Phase p) { return Json{{"num", p.num()}, {"den", p.den()}}; }

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const MonomialMatrix& m) {
  Json target = Json::array();
  Json phase = Json::array();
  for (std::size_t c = 0; c < m.dim(); ++c) {
    target.push_back(m.target()[c]);
    phase.push_back(to_json(m.phases()[c]));
  }
  Json out;
  out["kind"] = "monomial";
  out["dim"] = m.dim();
  out["target"] = std::move(target);
  out["phase"] = std::move(phase);
  return out;
}

Json to_json(const DenseMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  }
  Json out;
  out["kind"] = "dense";
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

Json to_json(const RealMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    item["deviation"] = c.deviation;
    checks.push_back(std::move(item));
  }
  Json out;
  out["overall"] = r.overall();
  out["checks"] = std::move(checks);
  return out;
}

Phase phase_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return Phase(as_int(j[0], "phase num"), as_int(j[1], "phase den"));
  if (j.is_object()) return Phase(as_int(field(j, "num"), "num"), as_int(field(j, "den"), "den"));
  malformed("phase must be {num, den} or [num, den]");
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {as_double(j[0], "re"), as_double(j[1], "im")};
  if (j.is_object()) return {as_double(field(j, "re"), "re"), as_double(field(j, "im"), "im")};
  malformed("complex value must be a number, [re, im] or {re, im}");
}

MonomialMatrix monomial_from_json(const Json& j) {
  if (!j.is_object() || field(j, "kind") != "monomial") malformed("expected a monomial matrix document");
  const Json& target = field(j, "target");
  const Json& phase = field(j, "phase");
  if (!target.is_array() || !phase.is_array() || target.size() != phase.size()) {
    malformed("monomial target and phase arrays must have equal length");
  }
  if (j.contains("dim") && as_int(j["dim"], "dim") != static_cast<std::int64_t>(target.size())) {
    malformed("monomial dim does not match the target array");
  }
  std::vector<std::size_t> t;
  std::vector<Phase> p;
  for (std::size_t c = 0; c < target.size(); ++c) {
    const std::int64_t row = as_int(target[c], "target entry");
    if (row < 0) malformed("negative target entry");
    t.push_back(static_cast<std::size_t>(row));
    p.push_back(phase_from_json(phase[c]));
  }
  return MonomialMatrix(std::move(t), std::move(p));
}

DenseMatrix dense_from_json(const Json& j) {
  if (!j.is_object()) malformed("expected a matrix document");
  const Json& kind = field(j, "kind");
  if (kind == "monomial") return monomial_from_json(j).to_dense();
  if (kind != "dense") malformed("matrix kind must be \"monomial\" or \"dense\"");
  const std::int64_t rows = as_int(field(j, "rows"), "rows");
  const std::int64_t cols = as_int(field(j, "cols"), "cols");
  const Json& data = field(j, "data");
  if (rows < 0 || cols < 0 || !data.is_array() || data.size() != static_cast<std::size_t>(rows * cols)) {
    malformed("dense data length must equal rows * cols");
  }
  DenseMatrix m(rows, cols);
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(data[static_cast<std::size_t>(r * cols + c)]);
  }
  return m;
}

RealMatrix real_matrix_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  RealMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) malformed("rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = as_double(j[r][c], "matrix entry");
    }
  }
  return m;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) malformed("rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = as_int(j[r][c], "matrix entry");
    }
  }
  return m;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  for (const auto& c : field(j, "checks")) {
    r.add(field(c, "name").get<std::string>(), field(c, "pass").get<bool>(), c.value("detail", ""),
          c.contains("deviation") ? as_double(c["deviation"], "deviation") : 0.0);
  }
  return r;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("malformed JSON: ") + e.what());
  }
}

Json load(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    return parse(path_or_inline);
  }
  std::ifstream in(path_or_inline);
  if (!in) malformed("cannot read \"" + path_or_inline + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string emit(const Json& j) {
  std::string out;
  emit_into(j, out);
  out += '\n';
  return out;
}

std::string render_text(const Json& j) {
  std::string out;
  render_into(j, "", out);
  return out;
}

}  // namespace gcakit::io
