#include "cdc/codefile.hpp"

#include <fstream>
#include <sstream>

#include "cdc/errors.hpp"

namespace cdc {

void write_code_file(std::ostream& out, const SubspaceCode& code) {
  const Field& F = *code.field;
  out << F.q() << ' ' << code.v << ' ' << code.k << ' ' << code.words.size()
      << ' ' << code.claimed_d.value_or(0) << ' ' << F.p() << ' ' << F.e();
  for (Elem c : F.modulus()) out << ' ' << c;
  out << '\n';
  for (const auto& w : code.words) {
    out << '\n';
    for (int i = 0; i < w.dim(); ++i) {
      for (int j = 0; j < w.ambient(); ++j) {
        if (j) out << ' ';
        out << w.rep().at(i, j);
      }
      out << '\n';
    }
  }
}

SubspaceCode read_code_file(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParameterError("empty code file");
  std::istringstream hs(header);
  std::uint32_t q, p, e;
  long long v, k, n, d;
  if (!(hs >> q >> v >> k >> n >> d >> p >> e))
    throw ParameterError("malformed code file header");
  if (v < 0 || k < 0 || k > v || n < 0 || d < 0)
    throw ParameterError("code file header out of range");
  std::vector<Elem> modulus;
  Elem c;
  while (hs >> c) modulus.push_back(c);

  FieldPtr f = Field::make(p, e);
  if (f->q() != q) throw ParameterError("header q does not equal p^e");
  if (!modulus.empty() && modulus != f->modulus())
    throw ParameterError("unsupported modulus polynomial in code file");

  SubspaceCode code;
  code.field = f;
  code.v = static_cast<int>(v);
  code.k = static_cast<int>(k);
  if (d > 0) code.claimed_d = static_cast<int>(d);

  std::vector<std::vector<Elem>> rows;
  std::string line;
  auto flush_block = [&]() {
    if (rows.empty()) return;
    if (static_cast<long long>(rows.size()) != k)
      throw ParameterError("codeword block has wrong number of rows");
    MatrixFq m(f, code.k, code.v);
    for (int i = 0; i < code.k; ++i)
      for (int j = 0; j < code.v; ++j) m.set(i, j, rows[i][j]);
    if (!m.is_rref())
      throw ParameterError("codeword block is not in rref");
    code.words.push_back(Subspace::from_rref(std::move(m)));
    rows.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Elem> row;
    Elem x;
    while (ls >> x) {
      if (x >= q) throw ParameterError("entry out of field range");
      row.push_back(x);
    }
    if (row.empty()) {
      flush_block();
      continue;
    }
    if (static_cast<long long>(row.size()) != v)
      throw ParameterError("row has wrong length");
    rows.push_back(std::move(row));
  }
  flush_block();
  if (static_cast<long long>(code.words.size()) != n)
    throw ParameterError("codeword count does not match header");
  return code;
}

void write_code_file(const std::string& path, const SubspaceCode& code) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open output file: " + path);
  write_code_file(out, code);
}

SubspaceCode read_code_file_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open code file: " + path);
  return read_code_file(in);
}

}  // namespace cdc
