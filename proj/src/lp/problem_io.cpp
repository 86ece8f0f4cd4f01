#include "lcaes/lp/problem_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lcaes/io/csv.hpp"

namespace lcaes::lp {

namespace {

char sense_code(RowSense s) {
  switch (s) {
    case RowSense::kLessEqual:
      return 'L';
    case RowSense::kEqual:
      return 'E';
    case RowSense::kGreaterEqual:
      return 'G';
  }
  return 'E';
}

RowSense parse_sense(const std::string& s) {
  if (s == "L") return RowSense::kLessEqual;
  if (s == "E") return RowSense::kEqual;
  if (s == "G") return RowSense::kGreaterEqual;
  throw StructuralError("unknown row sense '" + s + "'");
}

void expect(std::istream& in, const std::string& word) {
  std::string got;
  in >> got;
  if (got != word) throw StructuralError("expected '" + word + "', got '" + got + "'");
}

}  // namespace

void dump(const Problem& p, std::ostream& out) {
  out << "lcaes-lp 1\n";
  out << "offset " << io::format_number(p.objective_offset()) << '\n';
  out << "variables " << p.num_variables() << '\n';
  for (const auto& v : p.variables()) {
    out << v.name << ' ' << io::format_number(v.lower) << ' ' << io::format_number(v.upper)
        << ' ' << io::format_number(v.cost) << ' ' << (v.integer ? 1 : 0) << '\n';
  }
  out << "rows " << p.num_rows() << '\n';
  for (const auto& r : p.rows()) {
    out << r.name << ' ' << sense_code(r.sense) << ' ' << io::format_number(r.rhs) << ' '
        << r.entries.size();
    for (const auto& e : r.entries) out << ' ' << e.col << ':' << io::format_number(e.value);
    out << '\n';
  }
}

Problem load(std::istream& in) {
  Problem p;
  expect(in, "lcaes-lp");
  int version = 0;
  in >> version;
  if (version != 1) throw StructuralError("unsupported problem dump version");
  std::string tok;
  expect(in, "offset");
  in >> tok;
  p.set_objective_offset(io::parse_number(tok));
  expect(in, "variables");
  int n = 0;
  in >> n;
  for (int j = 0; j < n; ++j) {
    std::string name, lo, hi, cost;
    int integer = 0;
    in >> name >> lo >> hi >> cost >> integer;
    p.add_variable(name, io::parse_number(lo), io::parse_number(hi), io::parse_number(cost),
                   integer != 0);
  }
  expect(in, "rows");
  int m = 0;
  in >> m;
  for (int i = 0; i < m; ++i) {
    std::string name, sense, rhs;
    std::size_t nnz = 0;
    in >> name >> sense >> rhs >> nnz;
    std::vector<Entry> entries;
    for (std::size_t k = 0; k < nnz; ++k) {
      in >> tok;
      const auto colon = tok.find(':');
      if (colon == std::string::npos) throw StructuralError("malformed entry '" + tok + "'");
      entries.push_back({std::stoi(tok.substr(0, colon)), io::parse_number(tok.substr(colon + 1))});
    }
    p.add_row(name, std::move(entries), parse_sense(sense), io::parse_number(rhs));
  }
  if (!in) throw StructuralError("truncated problem dump");
  return p;
}

void dump_file(const Problem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  dump(p, out);
}

Problem load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return load(in);
}

}  // namespace lcaes::lp
