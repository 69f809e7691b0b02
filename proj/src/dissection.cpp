#include "quiddity/dissection.hpp"

#include "quiddity/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace quiddity {

namespace {

bool is_side(std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t gap = i < j ? j - i : i - j;
  return gap == 1 || gap == n - 1;
}

Diagonal ordered(std::size_t i, std::size_t j) { return i < j ? Diagonal{i, j} : Diagonal{j, i}; }

std::vector<Diagonal> diagonals_of_faces(std::size_t n, const std::vector<Face>& fs) {
  std::set<Diagonal> out;
  for (const Face& f : fs) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      const std::size_t u = f[k], v = f[(k + 1) % f.size()];
      if (!is_side(n, u, v)) out.insert(ordered(u, v));
    }
  }
  return {out.begin(), out.end()};
}

void split_faces(const Face& poly, std::vector<Diagonal> diags, std::vector<Face>& out) {
  for (std::size_t k = 0; k < diags.size(); ++k) {
    const auto [u, v] = diags[k];
    const auto iu = std::find(poly.begin(), poly.end(), u);
    const auto iv = std::find(poly.begin(), poly.end(), v);
    if (iu == poly.end() || iv == poly.end()) continue;
    Face inner(iu, iv + 1);
    Face outer(poly.begin(), iu + 1);
    outer.insert(outer.end(), iv, poly.end());
    diags.erase(diags.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Diagonal> in_inner, in_outer;
    for (const Diagonal& e : diags) {
      (e.first >= u && e.second <= v ? in_inner : in_outer).push_back(e);
    }
    split_faces(inner, std::move(in_inner), out);
    split_faces(outer, std::move(in_outer), out);
    return;
  }
  out.push_back(poly);
}

}  // namespace

bool diagonals_cross(Diagonal x, Diagonal y) noexcept {
  const auto [i, j] = x;
  const auto [k, l] = y;
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

Dissection::Dissection(std::size_t n, std::vector<Diagonal> diagonals) : n_(n) {
  if (n < 3) throw DomainError("a polygon needs at least 3 vertices");
  for (auto& e : diagonals) {
    e = ordered(e.first, e.second);
    if (e.second >= n) throw DomainError("diagonal endpoint out of range");
    if (e.first == e.second || is_side(n, e.first, e.second)) {
      throw DomainError("{" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        "} is not a diagonal of the " + std::to_string(n) + "-gon");
    }
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end()) {
    throw DomainError("duplicate diagonal");
  }
  for (std::size_t a = 0; a < diagonals.size(); ++a) {
    for (std::size_t b = a + 1; b < diagonals.size(); ++b) {
      if (diagonals_cross(diagonals[a], diagonals[b])) throw DomainError("diagonals cross");
    }
  }
  diagonals_ = std::move(diagonals);
}

std::vector<Face> faces(const Dissection& d) {
  Face all(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) all[v] = v;
  std::vector<Face> out;
  split_faces(all, d.diagonals(), out);
  for (Face& f : out) std::sort(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

DissectionProfile profile(const Dissection& d) {
  DissectionProfile p;
  for (const Face& f : faces(d)) {
    p.face_sizes.push_back(f.size());
    if (f.size() % 3 == 0) ++p.by_d[f.size() / 3];
    if (f.size() % 2 == 0) ++p.even_face_count;
  }
  std::sort(p.face_sizes.begin(), p.face_sizes.end());
  return p;
}

bool is_3d_dissection(const Dissection& d) {
  const auto fs = faces(d);
  return std::all_of(fs.begin(), fs.end(), [](const Face& f) { return f.size() % 3 == 0; });
}

Word quiddity_of(const Dissection& d) {
  const auto fs = faces(d);
  std::vector<Entry> q(d.size(), 0);
  for (const Face& f : fs) {
    if (f.size() % 3 != 0) {
      throw DomainError("face of size " + std::to_string(f.size()) + " is not a multiple of 3");
    }
    for (std::size_t v : f) ++q[v];
  }
  return Word(std::move(q));
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity even_face_parity(const Dissection& d) {
  if (!is_3d_dissection(d)) throw DomainError("not a 3d-dissection");
  return profile(d).even_face_count % 2 == 0 ? Parity::Even : Parity::Odd;
}

Dissection from_certificate(const ReductionCertificate& cert) {
  if (cert.base != Word{1, 1, 1}) {
    throw DomainError("from_certificate needs the base (1,1,1); got " + cert.base.to_string());
  }
  // Vertices carry stable ids; the boundary lists them counterclockwise.
  std::vector<long> boundary{0, 1, 2};
  std::vector<std::vector<long>> fs{{0, 1, 2}};
  long next_id = 3;

  for (const SurgeryStep& step : cert.steps) {
    const std::size_t m = boundary.size();
    const std::size_t i = step.position % m;
    if (step.kind == SurgeryKind::Type1) {
      const long x = next_id++;
      fs.push_back({boundary[i], x, boundary[(i + 1) % m]});
      boundary.insert(boundary.begin() + static_cast<std::ptrdiff_t>(i + 1), x);
    } else {
      const long v = boundary[i];
      std::vector<std::pair<std::size_t, std::size_t>> around;  // (successor offset, face)
      for (std::size_t f = 0; f < fs.size(); ++f) {
        if (std::find(fs[f].begin(), fs[f].end(), v) == fs[f].end()) continue;
        std::size_t least = m;
        for (long u : fs[f]) {
          if (u == v) continue;
          const auto pos = static_cast<std::size_t>(std::find(boundary.begin(), boundary.end(), u) -
                                                    boundary.begin());
          least = std::min(least, (pos + m - i) % m);
        }
        around.emplace_back(least, f);
      }
      std::sort(around.begin(), around.end(), std::greater<>());
      const auto [first, second] = step.split;
      if (first < 1 || second < 1 || static_cast<std::size_t>(first + second) != around.size() + 1) {
        throw DomainError("certificate split does not match the faces at the vertex");
      }
      const long x = next_id++, y = next_id++, v2 = next_id++;
      for (std::size_t k = 0; k < around.size(); ++k) {
        auto& face = fs[around[k].second];
        if (k + 1 == static_cast<std::size_t>(first)) {
          face.insert(face.end(), {x, y, v2});
        } else if (k + 1 > static_cast<std::size_t>(first)) {
          *std::find(face.begin(), face.end(), v) = v2;
        }
      }
      boundary.insert(boundary.begin() + static_cast<std::ptrdiff_t>(i + 1), {x, y, v2});
    }
    if (step.shift != 0) {
      std::rotate(boundary.begin(), boundary.begin() + static_cast<std::ptrdiff_t>(step.shift % boundary.size()),
                  boundary.end());
    }
  }

  const std::size_t n = boundary.size();
  std::vector<std::size_t> label(static_cast<std::size_t>(next_id));
  for (std::size_t k = 0; k < n; ++k) label[static_cast<std::size_t>(boundary[k])] = k;
  std::vector<Face> labeled;
  for (const auto& f : fs) {
    Face g;
    for (long u : f) g.push_back(label[static_cast<std::size_t>(u)]);
    std::sort(g.begin(), g.end());
    labeled.push_back(std::move(g));
  }
  Dissection d(n, diagonals_of_faces(n, labeled));
  if (quiddity_of(d) != replay(cert)) {
    throw InternalError("certificate dissection does not reproduce the certified word");
  }
  return d;
}

namespace {

// Recursive face splitting: each pending polygon is resolved by choosing
// the face on its first side. `target`, when set, prunes by vertex counts.
class DissectionSearch {
 public:
  using Visitor = std::function<bool(const Dissection&)>;

  DissectionSearch(std::size_t n, const Word* target, Visitor visit)
      : n_(n), target_(target), visit_(std::move(visit)), count_(n, 0), open_(n, 0) {}

  void run() {
    Face all(n_);
    for (std::size_t v = 0; v < n_; ++v) all[v] = v;
    push(std::move(all));
    descend();
  }

 private:
  void push(Face p) {
    for (std::size_t v : p) ++open_[v];
    pending_.push_back(std::move(p));
  }

  Face pop() {
    Face p = std::move(pending_.back());
    pending_.pop_back();
    for (std::size_t v : p) --open_[v];
    return p;
  }

  bool descend() {
    if (pending_.empty()) {
      return visit_(Dissection(n_, diagonals_));
    }
    const Face poly = pop();
    const std::size_t m = poly.size();
    const std::size_t free = m - 2;
    bool keep_going = true;
    for (std::uint32_t mask = 0; keep_going && mask < (1u << free); ++mask) {
      if (std::popcount(mask) % 3 != 1) continue;
      std::vector<std::size_t> at{0, 1};  // positions in poly of the face vertices
      for (std::size_t k = 0; k < free; ++k) {
        if (mask & (1u << k)) at.push_back(k + 2);
      }
      const std::size_t pending_before = pending_.size();
      const std::size_t diagonals_before = diagonals_.size();
      for (std::size_t k = 1; k < at.size(); ++k) {
        const std::size_t lo = at[k - 1];
        if (at[k] - lo >= 2) {
          diagonals_.push_back(ordered(poly[lo], poly[at[k]]));
          push(Face(poly.begin() + static_cast<std::ptrdiff_t>(lo),
                    poly.begin() + static_cast<std::ptrdiff_t>(at[k]) + 1));
        }
      }
      if (m - at.back() >= 2) {
        diagonals_.push_back(ordered(poly[0], poly[at.back()]));
        Face tail(poly.begin() + static_cast<std::ptrdiff_t>(at.back()), poly.end());
        tail.push_back(poly[0]);
        push(std::move(tail));
      }
      bool ok = true;
      for (std::size_t p : at) {
        const std::size_t v = poly[p];
        ++count_[v];
        if (target_ && (count_[v] > (*target_)[v] || (open_[v] == 0 && count_[v] != (*target_)[v]))) {
          ok = false;
        }
      }
      if (ok) keep_going = descend();
      for (std::size_t p : at) --count_[poly[p]];
      while (pending_.size() > pending_before) pop();
      diagonals_.resize(diagonals_before);
    }
    push(poly);
    return keep_going;
  }

  std::size_t n_;
  const Word* target_;
  Visitor visit_;
  std::vector<Entry> count_;
  std::vector<std::size_t> open_;
  std::vector<Face> pending_;
  std::vector<Diagonal> diagonals_;
};

void check_budget(std::size_t n, const Budget& budget) {
  if (n > budget.dissection_max_n) {
    throw BudgetExceeded("dissection enumeration at n = " + std::to_string(n) +
                         " exceeds the ceiling n <= " + std::to_string(budget.dissection_max_n));
  }
}

void search_quiddity(const Word& w, const Budget& budget, const DissectionSearch::Visitor& visit) {
  check_budget(w.size(), budget);
  if (w.size() < 3) return;
  DissectionSearch(w.size(), &w, visit).run();
}

}  // namespace

void for_each_dissection(std::size_t n, const std::function<void(const Dissection&)>& visit,
                         const Budget& budget) {
  if (n < 3) throw DomainError("a polygon needs at least 3 vertices");
  check_budget(n, budget);
  DissectionSearch(n, nullptr, [&](const Dissection& d) {
    visit(d);
    return true;
  }).run();
}

std::vector<Dissection> enumerate_dissections(std::size_t n, const Budget& budget) {
  std::vector<Dissection> out;
  for_each_dissection(n, [&](const Dissection& d) { out.push_back(d); }, budget);
  return out;
}

std::vector<Dissection> dissections_with_quiddity(const Word& w, const Budget& budget) {
  std::vector<Dissection> out;
  search_quiddity(w, budget, [&](const Dissection& d) {
    out.push_back(d);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_centrally_symmetric(const Dissection& d) {
  if (d.size() % 2 != 0) throw DomainError("central symmetry needs an even number of vertices");
  return rotate(d, d.size() / 2) == d;
}

Word half_quiddity(const Dissection& d, std::size_t start) {
  const std::size_t n = d.size();
  if (n % 2 != 0) throw DomainError("half_quiddity needs an even number of vertices");
  const Word q = quiddity_of(d);
  if (!q.has_period(n / 2)) throw DomainError("quiddity " + q.to_string() + " is not n/2-periodic");
  const Word r = q.rotated(static_cast<std::ptrdiff_t>(start % n));
  return Word(std::vector<Entry>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n / 2)));
}

Dissection build_symmetric(const Word& w, const Budget& budget) {
  if (solution_class(w) != SolutionClass::ProblemIII) {
    throw NotASolutionError(w.to_string() + " is not a Problem III solution", w.vector());
  }
  const Word target = w.doubled();
  std::optional<Dissection> found;
  search_quiddity(target, budget, [&](const Dissection& d) {
    if (!is_centrally_symmetric(d)) return true;
    found = d;
    return false;
  });
  if (!found) throw InternalError("no centrally symmetric dissection with quiddity " + target.to_string());
  return *found;
}

Dissection dissection_for(const Word& w, const Budget& budget) {
  const Classification c = classify(w);
  switch (c.solution_class) {
    case SolutionClass::ProblemI:
    case SolutionClass::ProblemII: return from_certificate(*c.certificate);
    case SolutionClass::ProblemIII: return build_symmetric(w, budget);
    case SolutionClass::NotASolution: break;
  }
  throw NotASolutionError(w.to_string() + " is not a solution", w.vector());
}

Dissection rotate(const Dissection& d, std::size_t k) {
  std::vector<Diagonal> out;
  for (auto [i, j] : d.diagonals()) out.push_back(ordered((i + k) % d.size(), (j + k) % d.size()));
  return Dissection(d.size(), std::move(out));
}

Dissection reflect(const Dissection& d) {
  const std::size_t n = d.size();
  std::vector<Diagonal> out;
  for (auto [i, j] : d.diagonals()) out.push_back(ordered((n - i) % n, (n - j) % n));
  return Dissection(n, std::move(out));
}

Dissection canonical_dihedral(const Dissection& d) {
  Dissection best = d;
  const Dissection mirrored = reflect(d);
  for (std::size_t k = 0; k < d.size(); ++k) {
    best = std::min({best, rotate(d, k), rotate(mirrored, k)});
  }
  return best;
}

std::string to_json(const Dissection& d) {
  nlohmann::json j;
  j["n"] = d.size();
  j["diagonals"] = nlohmann::json::array();
  for (auto [a, b] : d.diagonals()) j["diagonals"].push_back({a, b});
  return j.dump();
}

Dissection dissection_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<Diagonal> diags;
    for (const auto& e : j.at("diagonals")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("a diagonal is a pair [i, j]");
      diags.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return Dissection(j.at("n").get<std::size_t>(), std::move(diags));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed dissection document: ") + e.what());
  }
}

std::string to_dot(const Dissection& d) {
  std::ostringstream os;
  os << "graph dissection {\n  layout=circo;\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < d.size(); ++v) os << "  " << v << " -- " << (v + 1) % d.size() << ";\n";
  for (auto [a, b] : d.diagonals()) os << "  " << a << " -- " << b << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

std::string to_svg(const Dissection& d) {
  constexpr double size = 400, centre = 200, radius = 160;
  const std::size_t n = d.size();
  std::vector<std::pair<double, double>> at(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double theta = std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(n);
    at[v] = {centre + radius * std::cos(theta), centre - radius * std::sin(theta)};
  }
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t v = 0; v < n; ++v) os << (v ? " " : "") << num(at[v].first) << ',' << num(at[v].second);
  os << "\"/>\n";
  for (auto [a, b] : d.diagonals()) {
    os << "  <line x1=\"" << num(at[a].first) << "\" y1=\"" << num(at[a].second) << "\" x2=\""
       << num(at[b].first) << "\" y2=\"" << num(at[b].second) << "\" stroke=\"black\"/>\n";
  }
  for (std::size_t v = 0; v < n; ++v) {
    os << "  <circle cx=\"" << num(at[v].first) << "\" cy=\"" << num(at[v].second)
       << "\" r=\"11\" fill=\"white\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << num(at[v].first) << "\" y=\"" << num(at[v].second + 4)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace quiddity
