#include "qwitt/pbw.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>

#include "qwitt/parallel.hpp"
#include "qwitt/qnumbers.hpp"

namespace qwitt {

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += w[k].to_string();
  }
  return s;
}

bool is_ordered(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

long long disordering_index(const Word& w) {
  long long n = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[b] < w[a]) ++n;
  return n;
}

// ---------------------------------------------------------------- NoncommPoly

NoncommPoly NoncommPoly::one(const ScalarField& f) { return word(f, Word{}, Scalar::from_int(f, 1)); }

NoncommPoly NoncommPoly::word(const ScalarField& f, Word w, const Scalar& c) {
  NoncommPoly p(f);
  p.add_term(w, c);
  return p;
}

NoncommPoly NoncommPoly::from_element(const AlgebraElement& a) {
  NoncommPoly p(a.field());
  for (const auto& [b, c] : a.terms()) p.add_term(Word{b}, c);
  return p;
}

Scalar NoncommPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(field_) : it->second;
}

long long NoncommPoly::max_length() const {
  long long m = -1;
  for (const auto& [w, c] : terms_) m = std::max<long long>(m, static_cast<long long>(w.size()));
  return m;
}

void NoncommPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NoncommPoly& NoncommPoly::operator+=(const NoncommPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NoncommPoly& NoncommPoly::operator-=(const NoncommPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NoncommPoly operator-(const NoncommPoly& a) {
  NoncommPoly r(a.field_);
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
  return r;
}

NoncommPoly operator*(const Scalar& s, const NoncommPoly& a) {
  NoncommPoly r(a.field_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
  return r;
}

NoncommPoly operator*(const NoncommPoly& a, const NoncommPoly& b) {
  NoncommPoly r(a.field_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, c * d);
    }
  return r;
}

NoncommPoly NoncommPoly::pow(unsigned n) const {
  NoncommPoly r = one(field_);
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

std::vector<std::pair<Word, Scalar>> NoncommPoly::sorted_terms() const {
  std::vector<std::pair<Word, Scalar>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  return v;
}

std::string NoncommPoly::to_string() const {
  std::vector<std::string> pieces;
  for (const auto& [w, c] : sorted_terms()) pieces.push_back(coefficient_times(c, word_to_string(w)));
  return join_signed(pieces);
}

std::ostream& operator<<(std::ostream& os, const NoncommPoly& p) { return os << p.to_string(); }

// ------------------------------------------------------------ ReductionSystem

namespace {

// Strictly decreases along every rewrite: shorter words first, then (same
// letters) fewer inversions.
struct OrderKey {
  std::size_t length;
  Word letters;
  long long inversions;
  Word word;
  friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

OrderKey order_key(const Word& w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  return {w.size(), std::move(sorted), disordering_index(w), w};
}

std::size_t descending_pair(const Word& w, Strategy s) {
  if (s == Strategy::Leftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p + 1] < w[p]) return p;
  } else {
    for (std::size_t p = w.size() - 1; p-- > 0;)
      if (w[p + 1] < w[p]) return p;
  }
  return w.size();
}

}  // namespace

ReductionSystem::ReductionSystem(GradedAlgebra alg) : alg_(std::move(alg)) {
  static std::atomic<std::uint64_t> counter{0};
  id_ = ++counter;
  if (!alg_.is_finite()) return;
  auto t = std::make_shared<std::map<std::pair<BasisElement, BasisElement>, Rhs>>();
  for (const auto& y : alg_.basis())
    for (const auto& x : alg_.basis())
      if (x < y) t->emplace(std::make_pair(y, x), compute_rule(y, x));
  table_ = t;
}

ReductionSystem::Rhs ReductionSystem::compute_rule(const BasisElement& y, const BasisElement& x) const {
  const ScalarField& f = alg_.field();
  const long long i = x.degree(), j = y.degree();
  Rhs r;
  r.emplace_back(Word{x, y}, Scalar::q_power(f, i - j));
  const Scalar c = -Scalar::q_power(f, -(j + 1));
  const AlgebraElement br = alg_.bracket(x, y);
  for (const auto& [b, v] : br.terms()) r.emplace_back(Word{b}, c * v);
  return r;
}

const std::vector<std::pair<Word, Scalar>>& ReductionSystem::rule(const BasisElement& y, const BasisElement& x) const {
  if (!(x < y)) throw std::invalid_argument("rules exist only for descending pairs");
  if (table_) {
    auto it = table_->find({y, x});
    if (it == table_->end()) throw std::invalid_argument("letter outside the algebra basis");
    return it->second;
  }
  // infinite algebras: compute per thread and keep the most recent rules
  thread_local std::map<std::pair<BasisElement, BasisElement>, Rhs> cache;
  thread_local std::uint64_t owner = 0;
  if (owner != id_ || cache.size() > 4096) {
    cache.clear();
    owner = id_;
  }
  auto it = cache.find({y, x});
  if (it == cache.end()) it = cache.emplace(std::make_pair(y, x), compute_rule(y, x)).first;
  return it->second;
}

NoncommPoly ReductionSystem::rewrite_at(const Word& w, std::size_t p, const Scalar& c) const {
  if (p + 1 >= w.size() || !(w[p + 1] < w[p])) throw std::invalid_argument("no descending pair at that position");
  NoncommPoly out(field());
  for (const auto& [piece, k] : rule(w[p], w[p + 1])) {
    Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    nw.insert(nw.end(), piece.begin(), piece.end());
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
    out.add_term(nw, c * k);
  }
  return out;
}

NoncommPoly ReductionSystem::rewrite_at(const Word& w, std::size_t p) const {
  return rewrite_at(w, p, Scalar::from_int(field(), 1));
}

NoncommPoly ReductionSystem::normal_form(const NoncommPoly& p, Strategy s) const {
  NoncommPoly result(field());
  std::map<OrderKey, Scalar> work;
  auto push = [&](const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    if (is_ordered(w)) {
      result.add_term(w, c);
      return;
    }
    auto [it, fresh] = work.try_emplace(order_key(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  for (const auto& [w, c] : p.terms()) push(w, c);
  // every rewrite produces strictly smaller keys, so each word is expanded once
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const Word w = it->first.word;
    const Scalar c = it->second;
    work.erase(it);
    const std::size_t pos = descending_pair(w, s);
    for (const auto& [piece, k] : rule(w[pos], w[pos + 1])) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), piece.begin(), piece.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
      push(nw, c * k);
    }
  }
  return result;
}

NoncommPoly ReductionSystem::normal_form(const Word& w, Strategy s) const {
  return normal_form(NoncommPoly::word(field(), w), s);
}

NoncommPoly ReductionSystem::multiply(const NoncommPoly& a, const NoncommPoly& b) const {
  return normal_form(a * b);
}

// --------------------------------------------------------------- confluence

NoncommPoly q_jacobi_sum(const GradedAlgebra& alg, const BasisElement& xi, const BasisElement& xj,
                         const BasisElement& xk) {
  const ScalarField& f = alg.field();
  const long long i = xi.degree(), j = xj.degree(), k = xk.degree();
  auto q = [&](long long e) { return Scalar::q_power(f, e); };
  auto L = [&](const BasisElement& b) { return NoncommPoly::letter(f, b); };
  const NoncommPoly kj = NoncommPoly::from_element(alg.bracket(xk, xj));
  const NoncommPoly ji = NoncommPoly::from_element(alg.bracket(xj, xi));
  const NoncommPoly ik = NoncommPoly::from_element(alg.bracket(xi, xk));
  return q(j + k) * (kj * L(xi)) - q(2 * i) * (L(xi) * kj) + q(i + j) * (ji * L(xk)) - q(2 * k) * (L(xk) * ji) +
         q(i + k) * (ik * L(xj)) - q(2 * j) * (L(xj) * ik);
}

NoncommPoly ambiguity_defect(const ReductionSystem& sys, const BasisElement& x, const BasisElement& y,
                             const BasisElement& z) {
  const Word w{z, y, x};
  return sys.normal_form(sys.rewrite_at(w, 0)) - sys.normal_form(sys.rewrite_at(w, 1));
}

ConfluenceReport check_confluence(const ReductionSystem& sys, const std::vector<BasisElement>& letters, int jobs) {
  const GradedAlgebra& alg = sys.algebra();
  const ScalarField& f = sys.field();
  Word sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  ConfluenceReport rep;
  rep.ambiguities.name = "overlap ambiguities";
  rep.jacobi_sums.name = "q-Jacobi sums";
  rep.relations.name = "defining relations";
  rep.compatibility.name = "order compatibility";

  for (const auto& x : sorted)
    for (const auto& y : sorted) {
      const std::string tag = x.to_string() + ", " + y.to_string();
      if (x < y) {
        const OrderKey top = order_key(Word{y, x});
        bool lower = true;
        for (const auto& [w, c] : sys.rule(y, x)) lower = lower && order_key(w) < top;
        rep.compatibility.record(lower, tag);
      }
      const NoncommPoly rel = Scalar::q_power(f, x.degree() + 1) * NoncommPoly::word(f, Word{x, y}) -
                              Scalar::q_power(f, y.degree() + 1) * NoncommPoly::word(f, Word{y, x});
      rep.relations.record(sys.normal_form(rel) == NoncommPoly::from_element(alg.bracket(x, y)), tag);
    }

  std::vector<std::array<BasisElement, 3>> triples;
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      for (std::size_t c = b + 1; c < sorted.size(); ++c) triples.push_back({sorted[a], sorted[b], sorted[c]});

  std::vector<char> amb(triples.size()), jac(triples.size());
  parallel_for(triples.size(), jobs, [&](std::size_t t) {
    const auto& [x, y, z] = triples[t];
    amb[t] = ambiguity_defect(sys, x, y, z).is_zero();
    jac[t] = sys.normal_form(q_jacobi_sum(alg, x, y, z)).is_zero();
  });
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& [x, y, z] = triples[t];
    const std::string tag = word_to_string(Word{z, y, x});
    rep.ambiguities.record(amb[t] != 0, tag);
    rep.jacobi_sums.record(jac[t] != 0, "J(" + z.to_string() + ", " + y.to_string() + ", " + x.to_string() + ")");
  }
  return rep;
}

CheckReport strategy_agreement(const ReductionSystem& sys, const std::vector<BasisElement>& letters,
                               std::size_t length, std::size_t samples, std::uint64_t seed, int jobs) {
  CheckReport rep;
  rep.name = "strategy independence";
  if (letters.empty()) return rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::vector<Word> words(samples);
  for (auto& w : words)
    for (std::size_t k = 0; k < length; ++k) w.push_back(letters[pick(rng)]);
  std::vector<char> same(samples);
  parallel_for(samples, jobs, [&](std::size_t k) {
    same[k] = sys.normal_form(words[k], Strategy::Leftmost) == sys.normal_form(words[k], Strategy::Rightmost);
  });
  for (std::size_t k = 0; k < samples; ++k) rep.record(same[k] != 0, word_to_string(words[k]));
  return rep;
}

CheckReport zero_divisor_sample(const ReductionSystem& sys, const std::vector<BasisElement>& letters,
                                std::size_t samples, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "no zero divisors (sampled)";
  if (letters.empty()) return rep;
  const ScalarField& f = sys.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> len(0, 2), nterms(1, 3), coef(-3, 3);
  auto random_poly = [&] {
    NoncommPoly p(f);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      Word w;
      const int m = len(rng);
      for (int k = 0; k < m; ++k) w.push_back(letters[pick(rng)]);
      int c = coef(rng);
      if (c == 0) c = 1;
      p.add_term(w, Scalar::from_int(f, c));
    }
    return sys.normal_form(p);
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const NoncommPoly a = random_poly(), b = random_poly();
    if (a.is_zero() || b.is_zero()) continue;
    rep.record(!sys.multiply(a, b).is_zero(), "(" + a.to_string() + ") * (" + b.to_string() + ")");
  }
  return rep;
}

// ------------------------------------------------------ power commutation

Scalar power_coefficient(const ScalarField& f, long long i, long long j, long long k) {
  if (k == 0) return Scalar::from_int(f, 1);
  const long long l = f.order();
  if (i + j < -1 || (l != 0 && i + j > l - 2)) return Scalar(f);
  Scalar h = Scalar::q_power(f, -k - j * (k * (k + 1) / 2));
  for (long long s = 1; s <= k; ++s)
    h *= gauss_binomial(f, i + s * j + 1, j) - gauss_binomial(f, i + s * j + 1, j + 1);
  return h;
}

NoncommPoly iterated_q_commutator(const ReductionSystem& sys, long long i, long long j, long long k) {
  const ScalarField& f = sys.field();
  const NoncommPoly ej = NoncommPoly::letter(f, BasisElement::e(j));
  NoncommPoly b = NoncommPoly::letter(f, BasisElement::e(i));
  for (long long s = 0; s < k; ++s) {
    const long long d = i + s * j;
    b = sys.normal_form(b * ej - Scalar::q_power(f, j - d) * (ej * b));
  }
  return b;
}

PowerCommutation power_commutation_check(const ReductionSystem& sys, long long i, long long j, long long n) {
  const ScalarField& f = sys.field();
  const GradedAlgebra& alg = sys.algebra();
  alg.require(BasisElement::e(i));
  alg.require(BasisElement::e(j));
  if (n < 0) throw std::invalid_argument("power must be nonnegative");
  PowerCommutation out;
  out.i = i;
  out.j = j;
  out.n = n;
  const NoncommPoly ei = NoncommPoly::letter(f, BasisElement::e(i));
  const NoncommPoly ej = NoncommPoly::letter(f, BasisElement::e(j));
  const NoncommPoly lhs = sys.normal_form(ei * ej.pow(static_cast<unsigned>(n)));

  if (j == 0) {
    const NoncommPoly shifted = ej - NoncommPoly::scalar(q_integer(f, i));
    const NoncommPoly rhs = Scalar::q_power(f, -i * n) * (shifted.pow(static_cast<unsigned>(n)) * ei);
    out.first_equality = sys.normal_form(rhs) == lhs;
    out.closed_form = out.first_equality;
    out.has_closed_form = false;
    return out;
  }

  NoncommPoly first(f), closed(f);
  for (long long k = 0; k <= n; ++k) {
    const Scalar binom = gauss_binomial_at_power(f, n, k, -j);
    const NoncommPoly lead = ej.pow(static_cast<unsigned>(n - k));
    first += (binom * Scalar::q_power(f, (n - k) * (j - i))) * (lead * iterated_q_commutator(sys, i, j, k));
    const BasisElement target = BasisElement::e(i + k * j);
    if (alg.contains(target))
      closed += (binom * power_coefficient(f, i, j, k)) * (lead * NoncommPoly::letter(f, target));
  }
  closed = Scalar::q_power(f, n * (j - i)) * closed;
  out.first_equality = sys.normal_form(first) == lhs;
  const NoncommPoly diff = sys.normal_form(closed) - lhs;
  out.closed_form = diff.is_zero();
  if (!out.closed_form) out.discrepancy = diff.to_string();
  return out;
}

// ------------------------------------------------------------ the center

NoncommPoly central_element(const ScalarField& f, long long i) {
  if (!f.is_root_of_unity()) throw std::invalid_argument("central elements need a root of unity");
  const auto l = static_cast<unsigned>(f.order());
  NoncommPoly base = NoncommPoly::letter(f, BasisElement::e(i));
  if (i == 0) {
    const Scalar one = Scalar::from_int(f, 1);
    base -= NoncommPoly::scalar(one / (one - Scalar::q(f)));
  }
  return base.pow(l);
}

CheckReport central_elements_check(const ReductionSystem& sys, int jobs) {
  CheckReport rep;
  rep.name = "central elements";
  const ScalarField& f = sys.field();
  const long long l = f.order();
  std::vector<BasisElement> gens;
  for (const auto& b : sys.algebra().basis())
    if (b.family == Family::E) gens.push_back(b);
  std::vector<NoncommPoly> zs;
  for (long long i = -1; i <= l - 2; ++i) zs.push_back(sys.normal_form(central_element(f, i)));
  const std::size_t n = gens.size() * zs.size();
  std::vector<char> zero(n);
  parallel_for(n, jobs, [&](std::size_t k) {
    const NoncommPoly g = NoncommPoly::letter(f, gens[k / zs.size()]);
    const NoncommPoly& z = zs[k % zs.size()];
    zero[k] = sys.normal_form(g * z) == sys.normal_form(z * g);
  });
  for (std::size_t k = 0; k < n; ++k)
    rep.record(zero[k] != 0, "[" + gens[k / zs.size()].to_string() + ", z_" +
                                 std::to_string(static_cast<long long>(k % zs.size()) - 1) + "]");
  return rep;
}

CheckReport graded_leading_term_check(const ReductionSystem& sys) {
  CheckReport rep;
  rep.name = "graded leading terms";
  const ScalarField& f = sys.field();
  const auto& basis = sys.algebra().basis();
  for (const auto& x : basis)
    for (const auto& y : basis) {
      const NoncommPoly d = sys.normal_form(Word{x, y}) -
                            Scalar::q_power(f, y.degree() - x.degree()) * sys.normal_form(Word{y, x});
      rep.record(d.max_length() < 2, x.to_string() + " " + y.to_string());
    }
  return rep;
}

}  // namespace qwitt
