#include "msts/cnf.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "msts/errors.hpp"

namespace msts {

Cnf2Formula parse_cnf2(std::istream& in) {
  Cnf2Formula formula;
  bool have_header = false;
  long declared_clauses = -1;
  std::string line;
  int line_no = 0;

  auto fail = [&](const std::string& what) -> void {
    throw ParseError("parse error at line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      if (have_header) fail("duplicate header");
      std::string kind;
      long vars = -1;
      std::string trailing;
      row >> kind >> vars >> declared_clauses;
      if (kind != "cnf" || row.fail() || vars < 0 || declared_clauses < 0 ||
          (row >> trailing)) {
        fail("expected 'p cnf <vars> <clauses>'");
      }
      formula.num_vars = static_cast<int>(vars);
      have_header = true;
      continue;
    }
    if (!have_header) fail("clause before 'p cnf' header");

    std::vector<long> lits;
    char* end = nullptr;
    long v = std::strtol(first.c_str(), &end, 10);
    if (end == first.c_str() || *end != '\0') fail("expected integer literal");
    lits.push_back(v);
    long next = 0;
    while (row >> next) lits.push_back(next);
    if (row.fail() && !row.eof()) fail("expected integer literal");
    if (lits.empty() || lits.back() != 0) fail("clause must end with 0");
    lits.pop_back();
    if (lits.size() != 2) fail("clauses must have exactly two literals");

    std::array<Literal, 2> clause;
    for (int k = 0; k < 2; ++k) {
      const long lit = lits[static_cast<size_t>(k)];
      if (lit == 0 || std::labs(lit) > formula.num_vars) fail("literal out of range");
      clause[static_cast<size_t>(k)] = Literal{static_cast<int>(std::labs(lit)), lit > 0};
    }
    formula.clauses.push_back(clause);
  }

  if (!have_header) throw ParseError("parse error: missing 'p cnf' header");
  if (declared_clauses != formula.num_clauses()) {
    throw ParseError("parse error: clause count does not match header");
  }
  return formula;
}

Cnf2Formula parse_cnf2_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_cnf2(in);
}

int satisfied_count(const Cnf2Formula& formula, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != formula.num_vars) {
    throw std::invalid_argument("assignment size does not match formula");
  }
  int count = 0;
  for (const auto& clause : formula.clauses) {
    for (const auto& lit : clause) {
      if (assignment[static_cast<size_t>(lit.var - 1)] == lit.positive) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace msts
