#pragma once

#include "quiddity/budget.hpp"
#include "quiddity/surgery.hpp"
#include "quiddity/word.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace quiddity {

using Diagonal = std::pair<std::size_t, std::size_t>;
/// Vertex labels of one face, ascending (hence counterclockwise).
using Face = std::vector<std::size_t>;

/// A convex n-gon, vertices 0..n-1 counterclockwise, cut by non-crossing
/// diagonals. Diagonals are stored with i < j, sorted.
class Dissection {
 public:
  /// Throws DomainError for n < 3, out-of-range or boundary pairs,
  /// duplicates, or crossing diagonals.
  Dissection(std::size_t n, std::vector<Diagonal> diagonals = {});

  std::size_t size() const noexcept { return n_; }
  const std::vector<Diagonal>& diagonals() const noexcept { return diagonals_; }

  friend bool operator==(const Dissection&, const Dissection&) = default;
  friend auto operator<=>(const Dissection&, const Dissection&) = default;

 private:
  std::size_t n_;
  std::vector<Diagonal> diagonals_;
};

bool diagonals_cross(Diagonal x, Diagonal y) noexcept;

/// Faces sorted lexicographically; there are |diagonals| + 1 of them.
std::vector<Face> faces(const Dissection& d);

struct DissectionProfile {
  std::vector<std::size_t> face_sizes;      // ascending
  std::map<std::size_t, std::size_t> by_d;  // d -> number of 3d-gons
  std::size_t even_face_count = 0;
};

DissectionProfile profile(const Dissection& d);

bool is_3d_dissection(const Dissection& d);

/// Entry i counts the faces at vertex i. Throws DomainError unless
/// is_3d_dissection(d).
Word quiddity_of(const Dissection& d);

enum class Parity { Even, Odd };
std::string to_string(Parity p);

/// Parity of the number of even-sized faces: odd for Problem I quiddities,
/// even for Problem II.
Parity even_face_parity(const Dissection& d);

/// Replays a certificate with base (1,1,1) geometrically. Type1 glues a
/// triangle on a boundary edge; Type2 at vertex v with split (a', a'')
/// enlarges the a'-th face at v, counted from the edge to v's predecessor,
/// by three vertices. Throws DomainError for other bases.
Dissection from_certificate(const ReductionCertificate& cert);

/// Calls `visit` on every 3d-dissection of the labeled n-gon, in a fixed
/// order. Throws BudgetExceeded when n > budget.dissection_max_n.
void for_each_dissection(std::size_t n, const std::function<void(const Dissection&)>& visit,
                         const Budget& budget = {});

std::vector<Dissection> enumerate_dissections(std::size_t n, const Budget& budget = {});

/// Every 3d-dissection whose quiddity equals w exactly, sorted.
std::vector<Dissection> dissections_with_quiddity(const Word& w, const Budget& budget = {});

/// Throws DomainError for odd n.
bool is_centrally_symmetric(const Dissection& d);

/// quiddity_of(d) rotated to `start`, first n/2 entries. Throws DomainError
/// if n is odd or the quiddity is not n/2-periodic.
Word half_quiddity(const Dissection& d, std::size_t start = 0);

/// A centrally symmetric 3d-dissection of the 2n-gon whose quiddity is
/// w doubled, for a Problem III solution w. Throws NotASolutionError for
/// other words.
Dissection build_symmetric(const Word& w, const Budget& budget = {});

/// Dissection of w's class: from_certificate for Problems I/II,
/// build_symmetric for Problem III.
Dissection dissection_for(const Word& w, const Budget& budget = {});

/// Dihedral images of d, and the least of them.
Dissection rotate(const Dissection& d, std::size_t k);
Dissection reflect(const Dissection& d);
Dissection canonical_dihedral(const Dissection& d);

std::string to_json(const Dissection& d);
Dissection dissection_from_json(const std::string& text);
std::string to_dot(const Dissection& d);
/// Vertices on a circle, vertex 0 at the top, labels counterclockwise.
std::string to_svg(const Dissection& d);

}  // namespace quiddity
