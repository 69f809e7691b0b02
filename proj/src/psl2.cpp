#include "quiddity/psl2.hpp"

#include "quiddity/enumeration.hpp"
#include "quiddity/error.hpp"
#include "quiddity/surgery.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace quiddity {

namespace {

// Words whose left-to-right products are +-S and +-T^q.
const std::vector<Entry> kS{1, 1, 2, 1, 1};

constexpr std::int64_t kMaxExponent = 1'000'000;

void append_t_power(std::vector<Entry>& out, const BigInt& q) {
  if (q == 0) return;
  const auto small = to_int64(q);
  if (!small || *small > kMaxExponent || *small < -kMaxExponent) {
    throw BudgetExceeded("transvection exponent " + to_string(q) + " is too large to expand");
  }
  if (*small > 0) {
    out.insert(out.end(), {*small + 1, 1, 1});
  } else {
    out.insert(out.end(), {1, 1});
    out.insert(out.end(), static_cast<std::size_t>(-*small), 2);
    out.push_back(1);
  }
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string matrix_key(const Matrix& m) {
  return to_string(m.a) + "," + to_string(m.b) + "," + to_string(m.c) + "," + to_string(m.d);
}

nlohmann::json matrix_json(const Matrix& m) {
  auto entry = [](const BigInt& x) -> nlohmann::json {
    if (auto small = to_int64(x)) return *small;
    return to_string(x);
  };
  return {{entry(m.a), entry(m.b)}, {entry(m.c), entry(m.d)}};
}

}  // namespace

GroupElement::GroupElement(Matrix m) : m_(std::move(m)) {
  if (m_.det() != 1) throw DomainError("group elements need determinant 1");
}

Matrix GroupElement::canonical() const {
  if (m_.c > 0 || (m_.c == 0 && m_.d > 0)) return m_;
  return -m_;
}

Word normalize(const Word& w) {
  std::vector<Entry> s;
  s.reserve(w.size());
  for (Entry x : w) {
    s.push_back(x);
    while (true) {
      const std::size_t k = s.size();
      if (k >= 3 && s[k - 2] == 1 && s[k - 3] > 1 && s[k - 1] > 1) {
        const Entry b = s[k - 1] - 1;
        s.pop_back();
        s.pop_back();
        --s.back();
        s.push_back(b);
      } else if (k >= 4 && s[k - 2] == 1 && s[k - 3] == 1) {
        const Entry merged = s[k - 4] + s[k - 1] - 1;
        s.resize(k - 4);
        s.push_back(merged);
      } else {
        break;
      }
    }
  }
  return Word(std::move(s));
}

Word reduced_decomposition(const GroupElement& element) {
  // A = T^{q_1} S T^{q_2} S ... T^{q_k} S T^{e}, by division on the first column.
  Matrix m = element.representative();
  std::vector<Entry> letters;
  while (m.c != 0) {
    const BigInt q = floor_div(m.a, m.c);
    append_t_power(letters, q);
    m.a -= q * m.c;
    m.b -= q * m.d;
    letters.insert(letters.end(), kS.begin(), kS.end());
    m = Matrix{m.c, m.d, -m.a, -m.b};
  }
  append_t_power(letters, m.b * m.a);
  Word w = letters.empty() ? Word{1, 1, 1} : normalize(Word(std::move(letters)));
  if (GroupElement(word_product_left_to_right(w)) != element) {
    throw InternalError("decomposition " + w.to_string() + " does not reproduce the element");
  }
  return w;
}

ElementQuiddity element_quiddity(const GroupElement& a) {
  ElementQuiddity q{reduced_decomposition(a), reduced_decomposition(a.inverse()), Word{1}, false};
  q.combined = concat(q.left, q.right);
  const Matrix product = word_product_left_to_right(q.combined);
  if (product == Matrix::identity()) {
    q.sign_defect = false;
  } else if (product == -Matrix::identity()) {
    q.sign_defect = true;
  } else {
    throw InternalError("element quiddity " + q.combined.to_string() + " does not multiply to +-Id");
  }
  return q;
}

Dissection element_dissection(const GroupElement& a) {
  return from_certificate(reduce(element_quiddity(a).combined));
}

HalfInteger element_index(const GroupElement& a) { return rotation_index(element_quiddity(a).combined); }

std::vector<ProductCollision> find_product_collisions(const std::vector<Word>& words) {
  std::map<std::string, std::size_t> seen;
  std::vector<ProductCollision> out;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Matrix m = GroupElement(word_product_left_to_right(words[k])).canonical();
    auto [it, fresh] = seen.try_emplace(matrix_key(m), k);
    if (!fresh && words[it->second] != words[k]) out.push_back({m, words[it->second], words[k]});
  }
  return out;
}

std::string describe(const ProductCollision& c) {
  std::ostringstream os;
  os << c.first << " and " << c.second << " both give " << c.element << " up to sign";
  return os.str();
}

std::vector<Word> reduced_words(std::size_t max_length, Entry max_entry) {
  std::vector<Word> out;
  std::vector<Entry> cur;
  // Only the tail can complete a forbidden fragment, so prefixes are pruned early.
  auto tail_ok = [&] {
    const std::size_t k = cur.size();
    if (k >= 3 && cur[k - 2] == 1 && cur[k - 3] > 1 && cur[k - 1] > 1) return false;
    if (k >= 4 && cur[k - 2] == 1 && cur[k - 3] == 1) return false;
    return true;
  };
  auto extend = [&](auto&& self) -> void {
    if (!cur.empty()) out.emplace_back(cur);
    if (cur.size() == max_length) return;
    for (Entry a = 1; a <= max_entry; ++a) {
      cur.push_back(a);
      if (tail_ok()) self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  return out;
}

bool uniqueness_spot_check(std::size_t max_length, Entry max_entry, const Budget& budget) {
  if (max_length > 10) throw BudgetExceeded("uniqueness check is limited to length <= 10");
  double estimate = 0, layer = 1;
  for (std::size_t k = 0; k < max_length; ++k) estimate += (layer *= static_cast<double>(max_entry));
  if (estimate > static_cast<double>(budget.max_stored_words)) {
    throw BudgetExceeded("uniqueness check would visit about " + std::to_string(static_cast<long long>(estimate)) +
                         " words");
  }
  return find_product_collisions(reduced_words(max_length, max_entry)).empty();
}

std::vector<ProbeRecord> conjecture_probe(std::size_t bound, const Budget& budget) {
  if (bound > budget.dissection_max_n) {
    throw BudgetExceeded("probe bound " + std::to_string(bound) + " exceeds the dissection ceiling " +
                         std::to_string(budget.dissection_max_n));
  }
  std::vector<ProbeRecord> out;
  if (bound < 3) return out;
  const auto levels = generative_closure(false, bound, budget);
  for (std::size_t n = 3; n <= bound; ++n) {
    for (const auto& g : levels[n]) {
      const Word& w = g.word;
      for (std::size_t k = 1; k < n; ++k) {
        const Word left(std::vector<Entry>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
        const Word right(std::vector<Entry>(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
        if (!is_reduced(left) || !is_reduced(right)) continue;
        const GroupElement a(word_product_left_to_right(left));
        if (reduced_decomposition(a) != left || reduced_decomposition(a.inverse()) != right) continue;
        out.push_back({a.canonical(), left, w, rotation_index(w).twice_value(),
                       dissections_with_quiddity(w, budget).size()});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ProbeRecord& x, const ProbeRecord& y) {
    if (x.quiddity.size() != y.quiddity.size()) return x.quiddity.size() < y.quiddity.size();
    return x.quiddity < y.quiddity;
  });
  return out;
}

std::string to_json(const ProbeRecord& r) {
  nlohmann::json j;
  j["element"] = matrix_json(r.element);
  j["reduced"] = r.reduced.vector();
  j["quiddity"] = r.quiddity.vector();
  j["index_twice"] = r.index_twice;
  j["dissections_found"] = r.dissections_found;
  return j.dump();
}

}  // namespace quiddity
