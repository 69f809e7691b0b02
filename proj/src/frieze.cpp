#include "quiddity/frieze.hpp"

#include "quiddity/error.hpp"
#include "quiddity/surgery.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace quiddity {

namespace {

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((i % sn) + sn) % sn);
}

BigInt det3(const BigInt m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

BigInt Frieze::entry(std::ptrdiff_t r, std::ptrdiff_t i) const {
  if (r < 0 || r >= static_cast<std::ptrdiff_t>(rows.size())) return 0;
  const auto& row = rows[static_cast<std::size_t>(r)];
  return row[wrap(i, row.size())];
}

Frieze frieze(const Word& w, std::optional<std::size_t> row_count) {
  const std::size_t n = w.size();
  std::size_t rows = 0;
  switch (solution_class(w)) {
    case SolutionClass::ProblemII: rows = n - 1; break;
    case SolutionClass::ProblemIII: rows = 2 * n - 1; break;
    case SolutionClass::ProblemI:
      throw DomainError("friezes are built for Problem II and III solutions; " + w.to_string() +
                        " solves Problem I");
    case SolutionClass::NotASolution:
      throw NotASolutionError(w.to_string() + " is not a solution", w.vector());
  }
  if (row_count) rows = *row_count;
  Frieze f{w, std::vector<std::vector<BigInt>>(rows, std::vector<BigInt>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    BigInt prev = 0, cur = 1;
    for (std::size_t r = 0; r < rows; ++r) {
      f.rows[r][i] = cur;
      BigInt next = BigInt(w[(i + r) % n]) * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return f;
}

bool check_diamond(const Frieze& f) {
  const auto rows = static_cast<std::ptrdiff_t>(f.row_count());
  const auto n = static_cast<std::ptrdiff_t>(f.word.size());
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (f.entry(r, i) * f.entry(r, i + 1) - f.entry(r + 1, i) * f.entry(r - 1, i + 1) != 1) return false;
    }
  }
  return true;
}

bool check_tame(const Frieze& f) {
  if (f.row_count() < 3) throw DomainError("tameness needs at least 3 rows");
  const auto rows = static_cast<std::ptrdiff_t>(f.row_count());
  const auto n = static_cast<std::ptrdiff_t>(f.word.size());
  // Diamonds may lean on the zero rows just outside the stored range.
  for (std::ptrdiff_t r = -1; r + 4 <= rows; ++r) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      BigInt m[3][3];
      for (std::ptrdiff_t p = 0; p < 3; ++p) {
        for (std::ptrdiff_t q = 0; q < 3; ++q) m[p][q] = f.entry(r + p + q, i - q);
      }
      if (det3(m) != 0) return false;
    }
  }
  return true;
}

bool check_glide(const Frieze& f) {
  const auto last = static_cast<std::ptrdiff_t>(f.row_count()) - 1;
  const auto n = static_cast<std::ptrdiff_t>(f.word.size());
  for (std::ptrdiff_t r = 0; r <= last; ++r) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (f.entry(r, i) != f.entry(last - r, i + r + 1)) return false;
    }
  }
  return true;
}

std::string render_text(const Frieze& f, std::ptrdiff_t first_column, std::size_t columns) {
  const std::size_t n = f.word.size();
  if (columns == 0) columns = f.row_count() > n ? 2 * n : n;
  std::size_t width = 1;
  for (const auto& row : f.rows) {
    for (const auto& x : row) width = std::max(width, to_string(x).size());
  }
  const std::size_t cell = width + 1;
  std::ostringstream os;
  for (std::size_t r = 0; r < f.row_count(); ++r) {
    const auto sr = static_cast<std::ptrdiff_t>(r);
    std::string line(r % 2 == 0 ? cell : 0, ' ');
    for (std::size_t j = 0; j < columns; ++j) {
      const auto sj = static_cast<std::ptrdiff_t>(j);
      const std::ptrdiff_t i = r % 2 == 0 ? first_column + 1 + sj - sr / 2 : first_column + sj - (sr - 1) / 2;
      const std::string text = to_string(f.entry(sr, i));
      line += std::string(2 * cell - text.size(), ' ') + text;
    }
    os << line << '\n';
  }
  return os.str();
}

std::string to_json(const Frieze& f) {
  nlohmann::json j;
  j["word"] = f.word.vector();
  j["rows"] = nlohmann::json::array();
  for (const auto& row : f.rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : row) {
      if (auto small = to_int64(x)) out.push_back(*small);
      else out.push_back(to_string(x));
    }
    j["rows"].push_back(out);
  }
  return j.dump();
}

}  // namespace quiddity
