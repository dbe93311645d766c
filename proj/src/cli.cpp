#include "burnside/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "burnside/reference_data.hpp"

namespace burnside {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Generator-document parser.

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

[[noreturn]] void parse_fail(int line, int column, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line;
  if (column > 0) os << ", column " << column;
  os << ": " << msg;
  throw std::invalid_argument(os.str());
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), int(start) + 1});
  }
  return out;
}

long parse_long(const Token& tok, int line, const char* what) {
  const std::string& s = tok.text;
  size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(s, &pos);
  } catch (const std::exception&) {
    parse_fail(line, tok.column, std::string("expected ") + what + ", got '" + s + "'");
  }
  if (pos != s.size())
    parse_fail(line, tok.column, std::string("expected ") + what + ", got '" + s + "'");
  return value;
}

bool is_integer_literal(const std::string& s) {
  size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Entry syntax a0,a1,.../den: the value (a0 + a1 z + ...) / den in Q(zeta_e).
Cyclotomic parse_cyclotomic_entry(const Token& tok, int line, unsigned e) {
  std::string body = tok.text;
  BigInt den = 1;
  if (size_t slash = body.find('/'); slash != std::string::npos) {
    std::string den_text = body.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text == "0")
      parse_fail(line, tok.column, "denominator must be a positive integer");
    den = BigInt(den_text);
    body = body.substr(0, slash);
  }
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    parts.push_back(body.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() > e)
    parse_fail(line, tok.column, "more than " + std::to_string(e) + " coefficients");
  Cyclotomic value = Cyclotomic::zero(e);
  for (size_t k = 0; k < parts.size(); ++k) {
    if (!is_integer_literal(parts[k]))
      parse_fail(line, tok.column, "bad coefficient '" + parts[k] + "'");
    BigRational c(BigInt(parts[k]), den);
    c.canonicalize();
    if (c == 0) continue;
    value += Cyclotomic::root_power(e, long(k)).scaled(c);
  }
  return value;
}

}  // namespace

std::vector<GroupElement> parse_group_spec(const std::string& document) {
  std::vector<std::pair<int, std::vector<Token>>> lines;  // (line number, tokens)
  {
    std::istringstream in(document);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      auto tokens = tokenize(raw);
      if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
  }
  if (lines.empty()) parse_fail(1, 0, "empty document, expected a domain: header");

  const auto& [header_line, header] = lines.front();
  if (header[0].text != "domain:")
    parse_fail(header_line, header[0].column, "expected 'domain:'");
  if (header.size() < 2) parse_fail(header_line, header[0].column, "missing domain kind");
  const std::string& kind = header[1].text;

  enum class Kind { Permutation, PrimeField, CyclotomicField } domain;
  long n = 0, p = 0, dim = 0;
  unsigned e = 1;
  if (kind == "permutation") {
    domain = Kind::Permutation;
    if (header.size() != 3)
      parse_fail(header_line, header[1].column, "usage: domain: permutation <n>");
    n = parse_long(header[2], header_line, "the degree");
    if (n < 1) parse_fail(header_line, header[2].column, "degree must be >= 1");
  } else if (kind == "gf") {
    domain = Kind::PrimeField;
    if (header.size() != 4)
      parse_fail(header_line, header[1].column, "usage: domain: gf <p> <dim>");
    p = parse_long(header[2], header_line, "the characteristic");
    dim = parse_long(header[3], header_line, "the dimension");
    if (!is_prime(p)) parse_fail(header_line, header[2].column, "characteristic must be prime");
    if (dim < 1) parse_fail(header_line, header[3].column, "dimension must be >= 1");
  } else if (kind == "cyclotomic") {
    domain = Kind::CyclotomicField;
    if (header.size() != 4)
      parse_fail(header_line, header[1].column, "usage: domain: cyclotomic <e> <dim>");
    long e_arg = parse_long(header[2], header_line, "the root order");
    dim = parse_long(header[3], header_line, "the dimension");
    if (e_arg < 1) parse_fail(header_line, header[2].column, "root order must be >= 1");
    if (dim < 1) parse_fail(header_line, header[3].column, "dimension must be >= 1");
    e = unsigned(e_arg);
  } else {
    parse_fail(header_line, header[1].column,
               "unknown domain '" + kind + "' (permutation, gf, cyclotomic)");
  }

  std::vector<GroupElement> generators;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& [line, tokens] = lines[li];
    switch (domain) {
      case Kind::Permutation: {
        if (long(tokens.size()) != n)
          parse_fail(line, tokens[0].column,
                     "expected " + std::to_string(n) + " images, got " +
                         std::to_string(tokens.size()));
        Permutation perm;
        std::vector<bool> seen(size_t(n), false);
        for (const Token& tok : tokens) {
          long v = parse_long(tok, line, "an image");
          if (v < 0 || v >= n) parse_fail(line, tok.column, "image out of range");
          if (seen[size_t(v)]) parse_fail(line, tok.column, "repeated image");
          seen[size_t(v)] = true;
          perm.img.push_back(uint32_t(v));
        }
        generators.push_back(std::move(perm));
        break;
      }
      case Kind::PrimeField: {
        if (long(tokens.size()) != dim * dim)
          parse_fail(line, tokens[0].column,
                     "expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(tokens.size()));
        MatrixOverPrimeField mat;
        mat.p = uint32_t(p);
        mat.dim = uint32_t(dim);
        for (const Token& tok : tokens) {
          long v = parse_long(tok, line, "an entry") % p;
          if (v < 0) v += p;
          mat.a.push_back(uint32_t(v));
        }
        generators.push_back(std::move(mat));
        break;
      }
      case Kind::CyclotomicField: {
        if (long(tokens.size()) != dim * dim)
          parse_fail(line, tokens[0].column,
                     "expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(tokens.size()));
        MatrixOverCyclotomic mat;
        mat.e = e;
        mat.dim = uint32_t(dim);
        for (const Token& tok : tokens) mat.a.push_back(parse_cyclotomic_entry(tok, line, e));
        generators.push_back(std::move(mat));
        break;
      }
    }
  }
  if (generators.empty()) parse_fail(lines.back().first, 0, "no generator lines");
  return generators;
}

// ---------------------------------------------------------------------------
// Shared rendering helpers.

namespace {

// A..Z without O, then AA, AB, ... in the same 25-letter alphabet.
std::string class_letter(int position) {
  static const char alphabet[] = "ABCDEFGHIJKLMNPQRSTUVWXYZ";
  const int base = 25;
  if (position < base) return std::string(1, alphabet[position]);
  int rest = position - base;
  std::string s;
  s += alphabet[rest / base];
  s += alphabet[rest % base];
  return s;
}

std::vector<std::string> subgroup_letters(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(class_letter(i));
  return out;
}

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::runtime_error("value exceeds native integer range");
  return v.get_si();
}

std::string value_string(const Cyclotomic& v) {
  if (v.is_rational()) {
    BigRational r = v.rational_value();
    return r.get_str();
  }
  return v.to_string();
}

// Values of a lattice basis vector: integer combination of the complex rows.
std::vector<Cyclotomic> lattice_row_values(const IrreducibleTable& t,
                                           const IntMatrix& coords, int row) {
  std::vector<Cyclotomic> values(size_t(t.classes.count()));
  for (int c = 0; c < t.classes.count(); ++c) {
    Cyclotomic acc;
    acc = Cyclotomic::zero(1);
    for (int k = 0; k < t.count(); ++k) {
      if (coords.at(row, k) == 0) continue;
      acc += t.chars[k].values[c].scaled(BigRational(coords.at(row, k)));
    }
    values[size_t(c)] = acc;
  }
  return values;
}

// Plain-text table: first column left-aligned, the rest right-aligned.
std::string render_table(const std::vector<std::vector<std::string>>& rows,
                         const std::string& indent) {
  size_t columns = 0;
  for (const auto& r : rows) columns = std::max(columns, r.size());
  std::vector<size_t> width(columns, 0);
  for (const auto& r : rows)
    for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::string out;
  for (const auto& r : rows) {
    std::string line = indent;
    for (size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      if (c == 0) {
        line += r[c] + std::string(width[c] - r[c].size(), ' ');
      } else {
        line += std::string(width[c] - r[c].size(), ' ') + r[c];
      }
    }
    size_t end = line.find_last_not_of(' ');
    out += line.substr(0, end == std::string::npos ? 0 : end + 1);
    out += '\n';
  }
  return out;
}

// Nonzero (basis name, coefficient) pairs of a coordinate vector.
std::vector<std::pair<std::string, BigInt>> named_terms(
    const std::vector<BigInt>& coords, const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, BigInt>> out;
  for (size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) out.push_back({names[k], coords[k]});
  return out;
}

std::string combination_string(const std::vector<BigInt>& coords,
                               const std::vector<std::string>& names) {
  return format_combination(coords, names);
}

std::vector<BigInt> matrix_row(const IntMatrix& m, int r) {
  std::vector<BigInt> out(size_t(m.cols()));
  for (int c = 0; c < m.cols(); ++c) out[size_t(c)] = m.at(r, c);
  return out;
}

std::string field_display_name(FieldTag tag) {
  switch (tag) {
    case FieldTag::Rational: return "Q";
    case FieldTag::Real: return "R";
    case FieldTag::Complex: return "C";
    case FieldTag::Integral: return "integer-valued (C)";
    case FieldTag::IntegralReal: return "integer-valued (R)";
  }
  return "?";
}

std::string quotient_summary(const CokernelPresentation& c) {
  std::ostringstream os;
  if (c.surjective()) return "trivial";
  os << "free rank " << c.quotient.free_rank;
  if (!c.quotient.invariant_factors.empty()) {
    os << ", invariant factors (";
    for (size_t i = 0; i < c.quotient.invariant_factors.size(); ++i)
      os << (i ? ", " : "") << c.quotient.invariant_factors[i].get_str();
    os << ")";
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Text emitter.

std::string emit_text(const BetaReport& report) {
  std::ostringstream os;
  const int m = report.image.multiplicities.rows();
  const auto letters = subgroup_letters(m);

  os << "group: " << report.group_name << '\n';
  os << "order: " << report.order << '\n';
  os << "conjugacy classes: " << report.classes.count() << '\n';
  os << "subgroup classes: " << m << '\n';
  os << '\n';

  os << "subgroup classes (largest first):\n";
  {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"", "order", "cosets", "conjugates", "cyclic"});
    for (int i = 0; i < m; ++i) {
      const SubgroupClass& c = report.marks.classes[report.image.decreasing[i]];
      rows.push_back({letters[i], std::to_string(c.order), std::to_string(c.index),
                      std::to_string(c.conjugate_count), c.is_cyclic ? "yes" : "-"});
    }
    os << render_table(rows, "  ");
  }
  os << '\n';

  os << "products of transitive G-sets:\n";
  {
    // structure constants live in the increasing order; translate positions
    std::vector<int> position_of(size_t(m), 0);
    for (int i = 0; i < m; ++i) position_of[size_t(report.image.decreasing[i])] = i;
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        const auto& coeffs =
            report.structure.constants[size_t(report.image.decreasing[i])]
                                      [size_t(report.image.decreasing[j])];
        std::vector<BigInt> by_position(size_t(m), BigInt{});
        for (int l = 0; l < m; ++l) by_position[size_t(position_of[size_t(l)])] = coeffs[size_t(l)];
        os << "  " << letters[i] << "*" << letters[j] << " = "
           << combination_string(by_position, letters) << '\n';
      }
    }
  }
  os << '\n';

  os << "multiplicity table:\n";
  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {""};
    head.insert(head.end(), letters.begin(), letters.end());
    rows.push_back(head);
    for (int i = 0; i < m; ++i) {
      std::vector<std::string> r = {letters[i]};
      for (int j = 0; j < m; ++j) r.push_back(report.image.multiplicities.at(i, j).get_str());
      rows.push_back(r);
    }
    os << render_table(rows, "  ");
  }
  os << '\n';

  os << "triangular form:\n";
  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {""};
    head.insert(head.end(), letters.begin(), letters.end());
    rows.push_back(head);
    for (int i = 0; i < report.image.h_tilde.rows(); ++i) {
      std::vector<std::string> r = {"V" + std::to_string(i + 1)};
      for (int j = 0; j < m; ++j) {
        const BigInt& v = report.image.h_tilde.at(i, j);
        r.push_back(v == 0 ? "." : v.get_str());
      }
      rows.push_back(r);
    }
    os << render_table(rows, "  ");
  }
  os << '\n';

  os << "image characters:\n";
  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"class"}, sizes = {"size"};
    for (int c = 0; c < report.classes.count(); ++c) {
      head.push_back(report.classes.labels[c]);
      sizes.push_back(std::to_string(report.classes.sizes[c]));
    }
    rows.push_back(head);
    rows.push_back(sizes);
    for (size_t i = 0; i < report.image_chars.size(); ++i) {
      std::vector<std::string> r = {"V" + std::to_string(i + 1)};
      for (const Cyclotomic& v : report.image_chars[i].values) r.push_back(value_string(v));
      rows.push_back(r);
    }
    os << render_table(rows, "  ");
  }

  for (const auto& [tag, lattice] : report.lattices) {
    os << '\n';
    os << "character basis over " << field_display_name(tag) << ":\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"class"}, sizes = {"size"};
    for (int c = 0; c < report.classes.count(); ++c) {
      head.push_back(report.classes.labels[c]);
      sizes.push_back(std::to_string(report.classes.sizes[c]));
    }
    rows.push_back(head);
    rows.push_back(sizes);
    for (int r = 0; r < lattice.rank(); ++r) {
      std::vector<std::string> row = {lattice.names[r]};
      for (const Cyclotomic& v : lattice_row_values(report.table, lattice.coords_in_complex, r))
        row.push_back(value_string(v));
      rows.push_back(row);
    }
    os << render_table(rows, "  ");

    const IntMatrix& coords = report.image_coords.at(tag);
    os << "  image coordinates:\n";
    for (int i = 0; i < coords.rows(); ++i)
      os << "    V" << (i + 1) << " = " << combination_string(matrix_row(coords, i), lattice.names)
         << '\n';

    const CokernelPresentation& coker = report.cokernels.at(tag);
    os << "  cokernel: " << quotient_summary(coker) << '\n';
    for (size_t k = 0; k < coker.torsion_generators.size(); ++k)
      os << "    torsion generator " << coker.quotient.invariant_factors[k].get_str() << ": "
         << coker.torsion_generators[k] << '\n';
    for (const std::string& gen : coker.free_generators)
      os << "    free generator: " << gen << '\n';
  }

  os << '\n';
  os << "kernel rank: " << report.kernel_rank << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON emitter.

namespace {

ordered_json json_value(const Cyclotomic& v) {
  if (v.is_integer()) return to_long(v.rational_value().get_num());
  if (v.is_rational()) return v.rational_value().get_str();
  ordered_json j;
  j["order"] = v.order();
  ordered_json coeffs = ordered_json::array();
  for (const BigRational& c : v.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = coeffs;
  j["pretty"] = v.to_string();
  return j;
}

ordered_json json_int_matrix(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_long(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json json_generator(const std::vector<BigInt>& coords,
                            const std::vector<std::string>& names) {
  ordered_json terms = ordered_json::array();
  for (const auto& [name, coeff] : named_terms(coords, names))
    terms.push_back(ordered_json::array({name, to_long(coeff)}));
  return terms;
}

}  // namespace

std::string emit_json(const BetaReport& report) {
  const int m = report.image.multiplicities.rows();
  const auto letters = subgroup_letters(m);
  ordered_json j;
  j["schema"] = "burnside-report/1";

  {
    ordered_json g;
    g["name"] = report.group_name;
    g["order"] = report.order;
    g["exponent"] = report.group.exponent();
    g["conjugacy_classes"] = report.classes.count();
    g["subgroup_classes"] = m;
    j["group"] = g;
  }

  {
    ordered_json classes = ordered_json::array();
    for (int c = 0; c < report.classes.count(); ++c) {
      ordered_json e;
      e["label"] = report.classes.labels[c];
      e["element_order"] = report.classes.element_orders[c];
      e["size"] = report.classes.sizes[c];
      classes.push_back(e);
    }
    j["classes"] = classes;
  }

  {
    ordered_json subs = ordered_json::array();
    for (int i = 0; i < m; ++i) {
      const SubgroupClass& c = report.marks.classes[report.image.decreasing[i]];
      ordered_json e;
      e["label"] = letters[i];
      e["order"] = c.order;
      e["cosets"] = c.index;
      e["conjugates"] = c.conjugate_count;
      e["cyclic"] = c.is_cyclic;
      subs.push_back(e);
    }
    j["subgroups"] = subs;
  }

  {
    std::vector<int> position_of(size_t(m), 0);
    for (int i = 0; i < m; ++i) position_of[size_t(report.image.decreasing[i])] = i;
    ordered_json products = ordered_json::array();
    for (int i = 0; i < m; ++i) {
      for (int jj = i; jj < m; ++jj) {
        const auto& coeffs =
            report.structure.constants[size_t(report.image.decreasing[i])]
                                      [size_t(report.image.decreasing[jj])];
        ordered_json terms = ordered_json::array();
        std::vector<std::pair<int, BigInt>> by_position;
        for (int l = 0; l < m; ++l)
          if (coeffs[size_t(l)] != 0) by_position.push_back({position_of[size_t(l)], coeffs[size_t(l)]});
        std::sort(by_position.begin(), by_position.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [pos, coeff] : by_position)
          terms.push_back(ordered_json::array({letters[pos], to_long(coeff)}));
        ordered_json entry;
        entry["left"] = letters[i];
        entry["right"] = letters[jj];
        entry["terms"] = terms;
        products.push_back(entry);
      }
    }
    j["products"] = products;
  }

  j["multiplicities"] = json_int_matrix(report.image.multiplicities);
  j["triangular_form"] = json_int_matrix(report.image.h_tilde);

  {
    ordered_json image;
    ordered_json cols = ordered_json::array();
    for (int c = 0; c < report.classes.count(); ++c) cols.push_back(report.classes.labels[c]);
    image["columns"] = cols;
    ordered_json rows = ordered_json::array();
    for (const ClassFunction& chi : report.image_chars) {
      ordered_json row = ordered_json::array();
      for (const Cyclotomic& v : chi.values) row.push_back(json_value(v));
      rows.push_back(row);
    }
    image["rows"] = rows;
    j["image_characters"] = image;
  }

  {
    ordered_json fields;
    for (const auto& [tag, lattice] : report.lattices) {
      ordered_json f;
      ordered_json names = ordered_json::array();
      for (const std::string& n : lattice.names) names.push_back(n);
      f["basis_names"] = names;
      f["basis_coordinates"] = json_int_matrix(lattice.coords_in_complex);
      ordered_json chars = ordered_json::array();
      for (int r = 0; r < lattice.rank(); ++r) {
        ordered_json row = ordered_json::array();
        for (const Cyclotomic& v :
             lattice_row_values(report.table, lattice.coords_in_complex, r))
          row.push_back(json_value(v));
        chars.push_back(row);
      }
      f["characters"] = chars;
      f["image_coordinates"] = json_int_matrix(report.image_coords.at(tag));

      const CokernelPresentation& coker = report.cokernels.at(tag);
      ordered_json ck;
      ck["free_rank"] = coker.quotient.free_rank;
      ordered_json factors = ordered_json::array();
      for (const BigInt& f2 : coker.quotient.invariant_factors) factors.push_back(to_long(f2));
      ck["invariant_factors"] = factors;
      ordered_json gens = ordered_json::array();
      for (const auto& coords : coker.quotient.torsion_generators)
        gens.push_back(json_generator(coords, lattice.names));
      for (const auto& coords : coker.quotient.free_generators)
        gens.push_back(json_generator(coords, lattice.names));
      ck["generators"] = gens;
      f["cokernel"] = ck;
      fields[field_tag_name(tag)] = f;
    }
    j["fields"] = fields;
  }

  j["kernel_rank"] = report.kernel_rank;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// LaTeX emitter.

namespace {

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '\\': out += "\\textbackslash{}"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '$': case '&': case '#': case '_': case '%':
        out += '\\';
        out += ch;
        break;
      case '^': out += "\\textasciicircum{}"; break;
      case '~': out += "\\textasciitilde{}"; break;
      default: out += ch;
    }
  }
  return out;
}

// rho7 -> \rho_{7} inside math mode.
std::string tex_names(const std::string& s) {
  static const std::regex rho("rho(\\d+)");
  return std::regex_replace(s, rho, "\\rho_{$1}");
}

std::string tex_value(const Cyclotomic& v) {
  if (v.is_rational()) return v.rational_value().get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < v.coeffs().size(); ++k) {
    const BigRational& c = v.coeffs()[k];
    if (c == 0) continue;
    BigRational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    std::string coeff = a.get_str();
    if (coeff != "1" || k == 0) {
      if (a.get_den() != 1)
        os << "\\tfrac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
      else
        os << coeff;
    }
    if (k == 1)
      os << "\\zeta_{" << v.order() << "}";
    else if (k > 1)
      os << "\\zeta_{" << v.order() << "}^{" << k << "}";
  }
  if (first) return "0";
  return os.str();
}

std::string tex_array(const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels,
                      const std::vector<std::vector<std::string>>& cells) {
  std::ostringstream os;
  os << "\\[\n\\begin{array}{r|*{" << col_labels.size() << "}{r}}\n";
  for (size_t c = 0; c < col_labels.size(); ++c) os << " & " << col_labels[c];
  os << " \\\\\n\\hline\n";
  for (size_t r = 0; r < cells.size(); ++r) {
    os << row_labels[r];
    for (const std::string& cell : cells[r]) os << " & " << cell;
    os << " \\\\\n";
  }
  os << "\\end{array}\n\\]\n";
  return os.str();
}

}  // namespace

std::string emit_latex(const BetaReport& report) {
  std::ostringstream os;
  const int m = report.image.multiplicities.rows();
  const auto letters = subgroup_letters(m);

  os << "\\documentclass{article}\n"
        "\\usepackage{amsmath}\n"
        "\\usepackage{amssymb}\n"
        "\\usepackage[margin=2cm]{geometry}\n"
        "\\begin{document}\n\n";
  os << "\\section*{\\texttt{" << tex_escape(report.group_name) << "}, order "
     << report.order << "}\n\n";
  os << "Conjugacy classes: " << report.classes.count() << ". Subgroup classes: " << m
     << ". Kernel rank of the linearization map: " << report.kernel_rank << ".\n\n";

  os << "\\subsection*{Subgroup classes}\n";
  os << "\\begin{tabular}{|c|c|c|c|c|}\n\\hline\n";
  os << "subgroup & order & cosets & conjugates & cyclic \\\\\n\\hline\n";
  for (int i = 0; i < m; ++i) {
    const SubgroupClass& c = report.marks.classes[report.image.decreasing[i]];
    os << letters[i] << " & " << c.order << " & " << c.index << " & " << c.conjugate_count
       << " & " << (c.is_cyclic ? "$\\checkmark$" : "") << " \\\\\n\\hline\n";
  }
  os << "\\end{tabular}\n\n";

  os << "\\subsection*{Products of transitive $G$-sets}\n";
  {
    std::vector<int> position_of(size_t(m), 0);
    for (int i = 0; i < m; ++i) position_of[size_t(report.image.decreasing[i])] = i;
    std::vector<std::string> row_labels, col_labels = letters;
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < m; ++i) {
      row_labels.push_back(letters[i]);
      std::vector<std::string> row;
      for (int jj = 0; jj < m; ++jj) {
        const auto& coeffs =
            report.structure.constants[size_t(report.image.decreasing[i])]
                                      [size_t(report.image.decreasing[jj])];
        std::vector<BigInt> by_position(size_t(m), BigInt{});
        for (int l = 0; l < m; ++l)
          by_position[size_t(position_of[size_t(l)])] = coeffs[size_t(l)];
        row.push_back(combination_string(by_position, letters));
      }
      cells.push_back(row);
    }
    os << tex_array(row_labels, col_labels, cells);
  }

  os << "\\subsection*{Table of multiplicities}\n";
  {
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < m; ++i) {
      std::vector<std::string> row;
      for (int jj = 0; jj < m; ++jj) row.push_back(report.image.multiplicities.at(i, jj).get_str());
      cells.push_back(row);
    }
    os << tex_array(letters, letters, cells);
  }

  os << "\\subsection*{Upper triangular form}\n";
  {
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < report.image.h_tilde.rows(); ++i) {
      row_labels.push_back("V_{" + std::to_string(i + 1) + "}");
      std::vector<std::string> row;
      for (int jj = 0; jj < m; ++jj) {
        const BigInt& v = report.image.h_tilde.at(i, jj);
        row.push_back(v == 0 ? "." : v.get_str());
      }
      cells.push_back(row);
    }
    os << tex_array(row_labels, letters, cells);
  }

  auto class_header_array = [&](const std::vector<std::string>& row_labels,
                                const std::vector<std::vector<std::string>>& value_rows) {
    std::ostringstream body;
    body << "\\[\n\\begin{array}{r|*{" << report.classes.count() << "}{r}}\n";
    body << "\\mathrm{class}";
    for (int c = 0; c < report.classes.count(); ++c)
      body << " & " << report.classes.labels[c];
    body << " \\\\\n\\mathrm{size}";
    for (int c = 0; c < report.classes.count(); ++c) body << " & " << report.classes.sizes[c];
    body << " \\\\\n\\hline\n";
    for (size_t r = 0; r < value_rows.size(); ++r) {
      body << row_labels[r];
      for (const std::string& cell : value_rows[r]) body << " & " << cell;
      body << " \\\\\n";
    }
    body << "\\end{array}\n\\]\n";
    return body.str();
  };

  os << "\\subsection*{Image characters}\n";
  {
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < report.image_chars.size(); ++i) {
      row_labels.push_back("V_{" + std::to_string(i + 1) + "}");
      std::vector<std::string> row;
      for (const Cyclotomic& v : report.image_chars[i].values) row.push_back(tex_value(v));
      rows.push_back(row);
    }
    os << class_header_array(row_labels, rows);
  }

  auto field_math = [](FieldTag tag) -> std::string {
    switch (tag) {
      case FieldTag::Rational: return "$\\mathbb{Q}$";
      case FieldTag::Real: return "$\\mathbb{R}$";
      case FieldTag::Complex: return "$\\mathbb{C}$";
      case FieldTag::Integral: return "integer-valued ($\\mathbb{C}$)";
      case FieldTag::IntegralReal: return "integer-valued ($\\mathbb{R}$)";
    }
    return "?";
  };

  for (const auto& [tag, lattice] : report.lattices) {
    os << "\\subsection*{Character basis over " << field_math(tag) << "}\n";
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> rows;
    for (int r = 0; r < lattice.rank(); ++r) {
      row_labels.push_back(tex_names(lattice.names[r]));
      std::vector<std::string> row;
      for (const Cyclotomic& v : lattice_row_values(report.table, lattice.coords_in_complex, r))
        row.push_back(tex_value(v));
      rows.push_back(row);
    }
    os << class_header_array(row_labels, rows);

    const IntMatrix& coords = report.image_coords.at(tag);
    os << "Image coordinates:\n\\begin{align*}\n";
    for (int i = 0; i < coords.rows(); ++i) {
      os << "V_{" << (i + 1) << "} &= "
         << tex_names(combination_string(matrix_row(coords, i), lattice.names));
      os << (i + 1 < coords.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{align*}\n";

    const CokernelPresentation& coker = report.cokernels.at(tag);
    os << "Cokernel: " << tex_escape(quotient_summary(coker)) << ".";
    if (!coker.torsion_generators.empty() || !coker.free_generators.empty()) {
      os << " Generators:";
      bool first = true;
      for (const std::string& gen : coker.torsion_generators) {
        os << (first ? " " : ", ") << "$" << tex_names(gen) << "$";
        first = false;
      }
      for (const std::string& gen : coker.free_generators) {
        os << (first ? " " : ", ") << "$" << tex_names(gen) << "$ (free)";
        first = false;
      }
      os << ".";
    }
    os << "\n\n";
  }

  os << "Kernel rank: " << report.kernel_rank << ".\n\n";
  os << "\\end{document}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Command driver.

namespace {

std::optional<std::vector<FieldTag>> parse_fields(const std::string& spec, std::ostream& err) {
  std::vector<FieldTag> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "q") {
      out.push_back(FieldTag::Rational);
    } else if (item == "r") {
      out.push_back(FieldTag::Real);
    } else if (item == "c") {
      out.push_back(FieldTag::Complex);
    } else if (item == "int") {
      out.push_back(FieldTag::Integral);
      out.push_back(FieldTag::IntegralReal);
    } else {
      err << "usage error: unknown field '" << item << "' (expected q, r, c, int)\n";
      return std::nullopt;
    }
  }
  return out;
}

struct GroupInput {
  std::optional<CatalogId> id;
  std::vector<GroupElement> generators;
  std::string name;
};

// Resolves a group argument: catalog name, path to a generator document, or
// '-' for a document on stdin.  rc is set when resolution fails.
std::optional<GroupInput> resolve_group(const std::string& arg, std::ostream& err, int& rc) {
  GroupInput input;
  input.name = arg;
  if (auto id = parse_catalog_name(arg)) {
    input.id = id;
    return input;
  }
  std::string document;
  if (arg == "-") {
    input.name = "custom";
    document.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(arg);
    if (!file) {
      err << "usage error: '" << arg
          << "' is neither a catalog name nor a readable generator file\n";
      rc = 2;
      return std::nullopt;
    }
    document.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    input.generators = parse_group_spec(document);
  } catch (const std::exception& e) {
    err << "error [generator document]: " << e.what() << '\n';
    rc = 3;
    return std::nullopt;
  }
  return input;
}

FiniteGroup build_input(const GroupInput& input) {
  if (input.id) return build(*input.id);
  return close_generators(input.generators, default_order_cap());
}

int write_document(const std::string& document, const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
  if (out_path.empty()) {
    out << document;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error [output]: cannot open '" << out_path << "' for writing\n";
    return 3;
  }
  file << document;
  if (!file.good()) {
    err << "error [output]: write to '" << out_path << "' failed\n";
    return 3;
  }
  return 0;
}

void print_character_block(std::ostream& out, const ConjClasses& classes,
                           const std::vector<std::string>& names,
                           const std::vector<std::vector<Cyclotomic>>& value_rows) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"class"}, sizes = {"size"};
  for (int c = 0; c < classes.count(); ++c) {
    head.push_back(classes.labels[c]);
    sizes.push_back(std::to_string(classes.sizes[c]));
  }
  rows.push_back(head);
  rows.push_back(sizes);
  for (size_t r = 0; r < value_rows.size(); ++r) {
    std::vector<std::string> row = {names[r]};
    for (const Cyclotomic& v : value_rows[r]) row.push_back(value_string(v));
    rows.push_back(row);
  }
  out << render_table(rows, "  ");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Burnside rings, tables of marks and linearization cokernels"};
  app.name("burnside");
  app.require_subcommand(1);

  std::string analyze_group, analyze_fields = "q,r,c", analyze_format = "text", analyze_out;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "full report: subgroups, marks, image and cokernels");
  analyze_cmd->add_option("group", analyze_group,
                          "catalog name, generator file, or '-' for stdin")
      ->required();
  analyze_cmd->add_option("--fields", analyze_fields,
                          "comma-separated coefficient list: q, r, c, int");
  analyze_cmd->add_option("--format", analyze_format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  analyze_cmd->add_option("--out", analyze_out, "write the document to a file");

  std::string marks_group;
  CLI::App* marks_cmd = app.add_subcommand("marks", "table of marks");
  marks_cmd->add_option("group", marks_group, "catalog name, generator file, or '-' for stdin")
      ->required();

  std::string chartab_group, chartab_field = "c";
  CLI::App* chartab_cmd = app.add_subcommand("chartab", "character table");
  chartab_cmd
      ->add_option("group", chartab_group, "catalog name, generator file, or '-' for stdin")
      ->required();
  chartab_cmd->add_option("--field", chartab_field, "c, r or q")
      ->check(CLI::IsMember({"c", "r", "q"}));

  CLI::App* list_cmd = app.add_subcommand("list-groups", "catalog names and orders");
  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "recompute and check the built-in reference tables");

  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e, out, err);
      err << "usage error: " << e.what() << '\n';
      return 2;
    }
  }

  if (*list_cmd) {
    for (const CatalogId& id : catalog_listing()) {
      long order = 0;
      switch (id.family) {
        case CatalogFamily::Cyclic: order = id.parameter; break;
        case CatalogFamily::BinaryDihedral: order = 4L * id.parameter; break;
        case CatalogFamily::BinaryTetrahedral: order = 24; break;
        case CatalogFamily::BinaryOctahedral: order = 48; break;
        case CatalogFamily::BinaryIcosahedral: order = 120; break;
        case CatalogFamily::GL2F3: order = 48; break;
        case CatalogFamily::Symmetric: {
          order = 1;
          for (int k = 2; k <= id.parameter; ++k) order *= k;
          break;
        }
      }
      out << id.name() << " " << order << '\n';
    }
    return 0;
  }

  if (*verify_cmd) {
    int failures = 0;
    std::vector<std::vector<std::string>> rows;
    try {
      for (const ReferenceCheckResult& r : run_reference_checks()) {
        rows.push_back({r.passed ? "PASS" : "FAIL", r.group, r.check, r.detail});
        if (!r.passed) ++failures;
      }
      for (const std::string& name : integral_real_vanishing_set()) {
        BetaReport report = analyze(parse_catalog_name(name).value(), {FieldTag::IntegralReal});
        bool ok = report.cokernels.at(FieldTag::IntegralReal).surjective();
        rows.push_back({ok ? "PASS" : "FAIL", name, "integer-valued real cokernel vanishes", ""});
        if (!ok) ++failures;
      }
    } catch (const std::exception& e) {
      err << "error [verification]: " << e.what() << '\n';
      return 3;
    }
    out << render_table(rows, "");
    if (failures) {
      out << failures << " of " << rows.size() << " checks failed\n";
      return 1;
    }
    out << "all " << rows.size() << " checks passed\n";
    return 0;
  }

  if (*marks_cmd) {
    int rc = 0;
    auto input = resolve_group(marks_group, err, rc);
    if (!input) return rc;
    try {
      FiniteGroup g = build_input(*input);
      auto classes = enumerate_subgroup_classes(g);
      MarksTable table = table_of_marks(g, classes);
      const int n = int(classes.size());
      out << "table of marks for " << input->name << " (order " << g.order()
          << "), subgroup classes in increasing order:\n";
      std::vector<std::vector<std::string>> rows;
      {
        std::vector<std::string> head = {"order"};
        for (const SubgroupClass& c : classes) head.push_back(std::to_string(c.order));
        rows.push_back(head);
      }
      for (int i = 0; i < n; ++i) {
        std::vector<std::string> row = {std::to_string(classes[size_t(i)].order)};
        for (int j = 0; j < n; ++j) row.push_back(table.marks.at(i, j).get_str());
        rows.push_back(row);
      }
      out << render_table(rows, "  ");
      return 0;
    } catch (const std::exception& e) {
      err << "error [marks]: " << e.what() << '\n';
      return 3;
    }
  }

  if (*chartab_cmd) {
    int rc = 0;
    auto input = resolve_group(chartab_group, err, rc);
    if (!input) return rc;
    try {
      FiniteGroup g = build_input(*input);
      IrreducibleTable t = complex_irreducibles(g);
      out << "character table of " << input->name << " (order " << g.order() << ") over "
          << (chartab_field == "c" ? "C" : chartab_field == "r" ? "R" : "Q") << ":\n";
      if (chartab_field == "c") {
        std::vector<std::string> names;
        std::vector<std::vector<Cyclotomic>> rows;
        for (int i = 0; i < t.count(); ++i) {
          names.push_back("rho" + std::to_string(i + 1));
          rows.push_back(t.chars[size_t(i)].values);
        }
        print_character_block(out, t.classes, names, rows);
      } else {
        CharacterLattice lattice = chartab_field == "r"
                                       ? real_irreducible_basis(g, t)
                                       : rational_irreducible_basis(g, t, -1);
        std::vector<std::vector<Cyclotomic>> rows;
        for (int r = 0; r < lattice.rank(); ++r)
          rows.push_back(lattice_row_values(t, lattice.coords_in_complex, r));
        print_character_block(out, t.classes, lattice.names, rows);
      }
      return 0;
    } catch (const std::exception& e) {
      err << "error [character table]: " << e.what() << '\n';
      return 3;
    }
  }

  // analyze
  auto fields = parse_fields(analyze_fields, err);
  if (!fields) return 2;
  int rc = 0;
  auto input = resolve_group(analyze_group, err, rc);
  if (!input) return rc;
  BetaReport report;
  try {
    report = input->id ? analyze(*input->id, *fields)
                       : analyze_generators(input->name, input->generators, *fields,
                                            default_order_cap());
  } catch (const std::exception& e) {
    err << "error [analysis]: " << e.what() << '\n';
    return 3;
  }
  std::string document;
  try {
    if (analyze_format == "json") {
      document = emit_json(report);
    } else if (analyze_format == "latex") {
      document = emit_latex(report);
    } else {
      document = emit_text(report);
    }
  } catch (const std::exception& e) {
    err << "error [emit]: " << e.what() << '\n';
    return 3;
  }
  return write_document(document, analyze_out, out, err);
}

}  // namespace burnside
