#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace msts {

struct Literal {
  int var = 0;          // 1-based variable index
  bool positive = true;
};

// CNF with exactly two literals per clause.
struct Cnf2Formula {
  int num_vars = 0;
  std::vector<std::array<Literal, 2>> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// DIMACS CNF subset: "p cnf <vars> <clauses>" then clause lines terminated by
// 0, each with exactly two literals. 'c' lines are comments.
Cnf2Formula parse_cnf2(std::istream& in);
Cnf2Formula parse_cnf2_file(const std::string& path);

int satisfied_count(const Cnf2Formula& formula, const std::vector<bool>& assignment);

}  // namespace msts
