#include "msts/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "msts/errors.hpp"

namespace msts {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ValidationReport validate(const Instance& inst) {
  ValidationReport report;
  const int n = inst.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!segments_disjoint(inst.segments[i], inst.segments[j])) {
        report.violations.emplace_back(i, j);
      }
    }
  }
  return report;
}

ChoiceSolution solution_from_choices(const Instance& inst, std::vector<int> choices) {
  const int n = inst.size();
  if (static_cast<int>(choices.size()) != n) {
    throw std::invalid_argument("choice vector size does not match instance");
  }
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) {
    if (choices[i] != 0 && choices[i] != 1) {
      throw std::invalid_argument("choice values must be 0 or 1");
    }
    pts[i] = choices[i] == 0 ? inst.segments[i].a : inst.segments[i].b;
  }
  ChoiceSolution sol;
  sol.choices = std::move(choices);
  sol.tree = euclidean_mst(pts);
  sol.cost = sol.tree.cost;
  return sol;
}

namespace {

// Strips comments, records a "# name: ..." comment if seen, skips blank lines.
struct LineReader {
  std::istream& in;
  int line_no = 0;
  std::string name;

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) {
        const std::string comment = raw.substr(hash + 1);
        const auto key = comment.find("name:");
        if (key != std::string::npos && name.empty()) {
          std::string value = comment.substr(key + 5);
          const auto first = value.find_first_not_of(" \t");
          const auto last = value.find_last_not_of(" \t\r");
          if (first != std::string::npos) name = value.substr(first, last - first + 1);
        }
        raw.erase(hash);
      }
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      out = raw;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at line " + std::to_string(line_no) + ": " + what);
  }
};

}  // namespace

Instance parse_instance(std::istream& in, bool strict) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError("parse error: empty input");

  std::istringstream header(line);
  std::string magic;
  long n = -1;
  std::string trailing;
  header >> magic >> n;
  if (magic != "MSTS" || header.fail() || n < 0 || (header >> trailing)) {
    reader.fail("expected header 'MSTS <n>'");
  }

  Instance inst;
  inst.segments.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    if (!reader.next(line)) {
      throw ParseError("parse error: expected " + std::to_string(n) +
                       " segment lines, got " + std::to_string(i));
    }
    std::istringstream row(line);
    Segment s;
    row >> s.a.x >> s.a.y >> s.b.x >> s.b.y;
    if (row.fail() || (row >> trailing)) {
      reader.fail("expected 'x1 y1 x2 y2'");
    }
    if (!std::isfinite(s.a.x) || !std::isfinite(s.a.y) || !std::isfinite(s.b.x) ||
        !std::isfinite(s.b.y)) {
      reader.fail("non-finite coordinate");
    }
    inst.segments.push_back(s);
  }
  if (reader.next(line)) reader.fail("unexpected trailing content");
  inst.name = reader.name;

  if (strict) {
    const auto report = validate(inst);
    if (!report.ok()) {
      const auto& [i, j] = report.violations.front();
      throw ParseError("segments " + std::to_string(i) + " and " + std::to_string(j) +
                       " are not disjoint");
    }
  }
  return inst;
}

Instance parse_instance_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_instance(in, strict);
}

std::string serialize_instance(const Instance& inst) {
  std::string out;
  if (!inst.name.empty()) out += "# name: " + inst.name + "\n";
  out += "MSTS " + std::to_string(inst.size()) + "\n";
  for (const auto& s : inst.segments) {
    out += format_double(s.a.x) + " " + format_double(s.a.y) + " " +
           format_double(s.b.x) + " " + format_double(s.b.y) + "\n";
  }
  return out;
}

std::string serialize_solution(const ChoiceSolution& sol) {
  const int n = static_cast<int>(sol.choices.size());
  std::string out = "MSTS-SOL " + std::to_string(n) + " " + format_double(sol.cost) + "\n";
  for (int i = 0; i < n; ++i) {
    out += i ? " " : "";
    out += std::to_string(sol.choices[i]);
  }
  out += "\n";
  for (const auto& [u, v] : sol.tree.edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

ChoiceSolution parse_solution(std::istream& in, const Instance& inst) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError("parse error: empty solution");

  std::istringstream header(line);
  std::string magic;
  long n = -1;
  double cost = 0.0;
  std::string trailing;
  header >> magic >> n >> cost;
  if (magic != "MSTS-SOL" || header.fail() || n < 0 || (header >> trailing)) {
    reader.fail("expected header 'MSTS-SOL <n> <cost>'");
  }
  if (n != inst.size()) {
    reader.fail("solution size does not match instance");
  }

  if (!reader.next(line)) throw ParseError("parse error: missing selector line");
  std::istringstream selectors(line);
  std::vector<int> choices(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    selectors >> choices[static_cast<size_t>(i)];
    if (selectors.fail() || (choices[static_cast<size_t>(i)] != 0 &&
                             choices[static_cast<size_t>(i)] != 1)) {
      reader.fail("selectors must be n values in {0,1}");
    }
  }
  if (selectors >> trailing) reader.fail("selectors must be n values in {0,1}");

  ChoiceSolution sol;
  sol.choices = std::move(choices);
  std::vector<Point> pts(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    const auto& s = inst.segments[static_cast<size_t>(i)];
    pts[static_cast<size_t>(i)] = sol.choices[static_cast<size_t>(i)] == 0 ? s.a : s.b;
  }
  sol.tree.nodes = pts;

  double edge_sum = 0.0;
  for (long e = 0; e + 1 < n; ++e) {
    if (!reader.next(line)) throw ParseError("parse error: expected n-1 edge lines");
    std::istringstream row(line);
    int u = -1, v = -1;
    row >> u >> v;
    if (row.fail() || (row >> trailing) || u < 0 || v < 0 || u >= n || v >= n || u == v) {
      reader.fail("expected edge 'i j'");
    }
    sol.tree.edges.emplace_back(std::min(u, v), std::max(u, v));
    edge_sum += point_distance(pts[static_cast<size_t>(u)], pts[static_cast<size_t>(v)]);
  }
  if (reader.next(line)) reader.fail("unexpected trailing content");

  sol.tree.cost = edge_sum;
  sol.cost = edge_sum;
  if (std::abs(edge_sum - cost) > kCostRelTol * std::max(1.0, std::abs(cost))) {
    throw ParseError("solution cost does not match its edges");
  }
  return sol;
}

namespace {

double unit_double(std::mt19937_64& rng) {
  // 53 uniform mantissa bits in [0, 1).
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Instance random_instance(int n, std::uint64_t seed, double min_separation,
                         double max_length) {
  if (n < 0) throw std::invalid_argument("random_instance: n must be >= 0");
  if (min_separation < 0.0 || max_length < 0.0) {
    throw std::invalid_argument("random_instance: negative parameter");
  }
  Instance inst;
  inst.segments.reserve(static_cast<size_t>(n));
  if (n == 0) return inst;

  std::mt19937_64 rng(seed);
  const double sep = std::max(min_separation, 1e-9);
  double box = std::max(4.0, std::sqrt(static_cast<double>(n)) *
                                 (2.0 * max_length + 2.0 * sep + 1.0));
  constexpr double kTwoPi = 6.283185307179586476925286766559;

  for (int growth = 0; growth < 24; ++growth) {
    inst.segments.clear();
    const long attempts_cap = 200L * n + 200L;
    long attempts = 0;
    while (inst.size() < n && attempts < attempts_cap) {
      ++attempts;
      const double cx = unit_double(rng) * box;
      const double cy = unit_double(rng) * box;
      const double angle = unit_double(rng) * kTwoPi;
      const double len = unit_double(rng) * max_length;
      const double dx = 0.5 * len * std::cos(angle);
      const double dy = 0.5 * len * std::sin(angle);
      const Segment cand{{cx - dx, cy - dy}, {cx + dx, cy + dy}};
      bool ok = true;
      for (const auto& s : inst.segments) {
        if (segment_distance(cand, s) < sep) {
          ok = false;
          break;
        }
      }
      if (ok) inst.segments.push_back(cand);
    }
    if (inst.size() == n) return inst;
    box *= 1.5;
  }
  throw GuardError("random_instance: could not place segments");
}

}  // namespace msts
