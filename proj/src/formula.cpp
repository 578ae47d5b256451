#include "allsat/formula.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace allsat {

namespace {

// Clause normalization: returns false to drop the clause (tautology),
// otherwise leaves `lits` deduplicated in first-occurrence order.
bool normalize_clause(std::vector<Lit>& lits, std::vector<int8_t>& mark) {
  size_t out = 0;
  bool tautology = false;
  for (Lit l : lits) {
    int8_t& m = mark[static_cast<size_t>(l.var())];
    int8_t sign = l.is_negative() ? -1 : 1;
    if (m == 0) {
      m = sign;
      lits[out++] = l;
    } else if (m != sign) {
      tautology = true;
      break;
    }  // duplicate literal: skip
  }
  for (Lit l : lits) mark[static_cast<size_t>(l.var())] = 0;
  if (tautology) return false;
  lits.resize(out);
  return true;
}

}  // namespace

ParseResult parse_dimacs(std::istream& in) {
  ParseResult result;
  CnfFormula& f = result.formula;

  std::string line;
  long declared_vars = -1;
  size_t line_no = 0;

  // Header: comment lines, then "p cnf <vars> <clauses>".
  while (std::getline(in, line)) {
    ++line_no;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == 'c') continue;
    if (line[i] != 'p')
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected header 'p cnf <vars> <clauses>'");
    std::istringstream hs(line.substr(i));
    std::string p, cnf;
    long vars = -1, clauses = -1;
    std::string trailing;
    if (!(hs >> p >> cnf >> vars >> clauses) || p != "p" || cnf != "cnf" ||
        vars < 0 || clauses < 0 || (hs >> trailing))
      throw ParseError("line " + std::to_string(line_no) +
                       ": malformed header '" + line + "'");
    declared_vars = vars;
    break;
  }
  if (declared_vars < 0) throw ParseError("missing 'p cnf' header");
  f.num_vars = static_cast<Var>(declared_vars);

  std::vector<Lit> current;
  std::vector<int8_t> mark(static_cast<size_t>(f.num_vars) + 1, 0);

  auto finish_clause = [&]() {
    if (current.empty()) {
      result.empty_clause = true;
      return;
    }
    if (!normalize_clause(current, mark)) {
      current.clear();
      return;  // tautology
    }
    if (current.size() == 1) {
      f.units.push_back(current[0]);
    } else {
      Clause c;
      c.lits = current;
      f.clauses.push_back(std::move(c));
    }
    current.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == 'c') continue;
    std::istringstream ls(line);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        finish_clause();
        continue;
      }
      long v = lit < 0 ? -lit : lit;
      if (v > declared_vars)
        throw ParseError("line " + std::to_string(line_no) + ": literal " +
                         std::to_string(lit) + " exceeds declared " +
                         std::to_string(declared_vars) + " variables");
      current.push_back(Lit::from_dimacs(static_cast<int>(lit)));
    }
    if (!ls.eof()) {
      std::string tok;
      ls.clear();
      ls >> tok;
      throw ParseError("line " + std::to_string(line_no) +
                       ": unexpected token '" + tok + "'");
    }
  }
  if (!current.empty())
    throw ParseError("unterminated clause at end of input (missing 0)");

  return result;
}

ParseResult parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void write_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() + f.units.size()
      << '\n';
  for (const Clause& c : f.clauses) {
    for (Lit l : c.lits) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  for (Lit u : f.units) out << u.to_dimacs() << " 0\n";
}

std::string write_dimacs_string(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(f, out);
  return out.str();
}

}  // namespace allsat
