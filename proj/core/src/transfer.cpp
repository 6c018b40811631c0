#include "ainfty/transfer.hpp"

#include "ainfty/errors.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace ainfty {

std::string to_string(SignVariant v) { return v == SignVariant::printed ? "printed" : "uniform"; }

namespace {

constexpr std::size_t kMaxArity = 32;

Rational sign(long long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

LambdaCache::LambdaCache(std::shared_ptr<const HodgeData> hodge, std::vector<Element> inputs, SignVariant variant,
                         bool memoize)
    : hodge_(std::move(hodge)), inputs_(std::move(inputs)), variant_(variant), memoize_(memoize), cache_(kMaxArity + 1) {
  const auto& space = hodge_->space();
  for (const auto& v : inputs_) {
    if (v.size() != space.total_dim()) throw std::invalid_argument("lambda input has the wrong dimension");
    const auto deg = homogeneous_degree(space, v);
    if (!deg && !v.is_zero()) throw std::invalid_argument("lambda inputs must be homogeneous");
    degrees_.push_back(deg.value_or(0));
  }
}

std::uint64_t LambdaCache::key(std::span<const std::size_t> tuple) const {
  const std::uint64_t base = inputs_.size();
  std::uint64_t code = 0;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
    if (code > (std::numeric_limits<std::uint64_t>::max() - *it) / base)
      throw ArityError("tuple too long to memoize");
    code = code * base + *it;
  }
  return code;
}

Element LambdaCache::lambda(std::span<const std::size_t> tuple) const {
  if (tuple.size() < 2) throw ArityError("lambda needs at least two arguments");
  if (tuple.size() > kMaxArity) throw ArityError("arity above " + std::to_string(kMaxArity));
  for (auto i : tuple)
    if (i >= inputs_.size()) throw std::out_of_range("lambda input index out of range");
  if (!memoize_) return evaluate(tuple);
  return lookup(tuple).lambda;
}

Element LambdaCache::q_lambda(std::span<const std::size_t> tuple) const {
  if (tuple.size() == 1 && variant_ == SignVariant::uniform) return -inputs_.at(tuple[0]);
  if (tuple.size() < 2) throw ArityError("Q lambda_1 is only defined in the uniform variant");
  return q_of(tuple);
}

std::size_t LambdaCache::cached_entries() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& m : cache_) n += m.size();
  return n;
}

const LambdaCache::Entry& LambdaCache::lookup(std::span<const std::size_t> tuple) const {
  const std::uint64_t k = key(tuple);
  auto& table = cache_[tuple.size()];
  {
    std::shared_lock lock(mutex_);
    auto it = table.find(k);
    if (it != table.end()) return it->second;
  }
  Entry fresh = compute(tuple);
  std::unique_lock lock(mutex_);
  return table.try_emplace(k, std::move(fresh)).first->second;
}

LambdaCache::Entry LambdaCache::compute(std::span<const std::size_t> tuple) const {
  Entry e;
  e.lambda = evaluate(tuple);
  e.q_lambda = hodge_->homotopy.apply(hodge_->space(), e.lambda);
  return e;
}

Element LambdaCache::q_of(std::span<const std::size_t> tuple) const {
  if (tuple.size() == 1) return -inputs_[tuple[0]];  // uniform variant only
  if (!memoize_) return hodge_->homotopy.apply(hodge_->space(), evaluate(tuple));
  return lookup(tuple).q_lambda;
}

Element LambdaCache::evaluate(std::span<const std::size_t> tuple) const {
  const auto& space = hodge_->space();
  const auto& product = hodge_->dga->product;
  const std::size_t n = tuple.size();
  Element out(space.total_dim());

  int total = 0;
  for (auto i : tuple) {
    if (inputs_[i].is_zero()) return out;
    total += degrees_[i];
  }
  const int out_degree = total + 2 - static_cast<int>(n);
  if (out_degree < 0 || out_degree > space.top()) return out;

  if (n == 2) return product.multiply(inputs_[tuple[0]], inputs_[tuple[1]]);

  // partial[k] = |v_1| + ... + |v_k|
  std::vector<long long> partial(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) partial[i + 1] = partial[i] + degrees_[tuple[i]];

  auto split_term = [&](std::size_t k) {
    const std::size_t l = n - k;
    const Element left = q_of(tuple.subspan(0, k));
    if (left.is_zero()) return;
    const Element right = q_of(tuple.subspan(k));
    if (right.is_zero()) return;
    const long long exponent = static_cast<long long>(k) + static_cast<long long>(l - 1) * partial[k];
    out.add_scaled(-sign(exponent), product.multiply(left, right));
  };

  if (variant_ == SignVariant::uniform) {
    for (std::size_t k = 1; k < n; ++k) split_term(k);
    return out;
  }

  const Element& first = inputs_[tuple[0]];
  const Element& last = inputs_[tuple[n - 1]];
  const Element head = q_of(tuple.subspan(0, n - 1));
  if (!head.is_zero()) out.add_scaled(sign(static_cast<long long>(n) - 1), product.multiply(head, last));
  const Element tail = q_of(tuple.subspan(1));
  if (!tail.is_zero())
    out.add_scaled(-sign(static_cast<long long>(n) * degrees_[tuple[0]]), product.multiply(first, tail));
  for (std::size_t k = 2; k + 2 <= n; ++k) split_term(k);
  return out;
}

Element lambda_eval(const HodgeData& h, const std::vector<Element>& args, SignVariant variant) {
  if (args.size() < 2) throw ArityError("lambda needs at least two arguments");
  const auto& space = h.space();
  std::vector<Element> inputs;
  std::vector<std::vector<std::size_t>> choices(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    for (auto& [deg, part] : homogeneous_parts(space, args[i])) {
      choices[i].push_back(inputs.size());
      inputs.push_back(std::move(part));
    }
  Element out(space.total_dim());
  for (const auto& c : choices)
    if (c.empty()) return out;

  auto shared = std::make_shared<const HodgeData>(h);
  const LambdaCache cache(shared, std::move(inputs), variant);
  std::vector<std::size_t> pos(args.size(), 0);
  std::vector<std::size_t> tuple(args.size());
  while (true) {
    for (std::size_t i = 0; i < args.size(); ++i) tuple[i] = choices[i][pos[i]];
    out += cache.lambda(tuple);
    std::size_t i = 0;
    while (i < args.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == args.size()) break;
  }
  return out;
}

HarmonicCoordinates::HarmonicCoordinates(const HodgeData& h) : space_(&h.space()) {
  const auto& form = h.dga->form;
  std::size_t off = 0;
  for (int n = 0; n <= space_->top(); ++n) {
    const auto& level = h.harmonic[static_cast<std::size_t>(n)];
    offsets_.push_back(off);
    off += level.size();
    basis_.insert(basis_.end(), level.begin(), level.end());
    if (level.empty()) {
      solvers_.emplace_back(0, space_->dim(n));
      continue;
    }
    std::vector<Vector> cols;
    for (const auto& v : level) cols.push_back(block_of(*space_, v, n));
    const Matrix basis = Matrix::from_columns(space_->dim(n), cols);
    const Matrix bt_g = basis.transpose() * form.gram(n);
    solvers_.push_back(inverse(bt_g * basis) * bt_g);
  }
}

Vector HarmonicCoordinates::operator()(const Element& harmonic) const {
  Vector coords(basis_.size());
  for (int n = 0; n <= space_->top(); ++n) {
    const Vector block = block_of(*space_, harmonic, n);
    if (is_zero(block)) continue;
    const Vector c = solvers_[static_cast<std::size_t>(n)] * block;
    for (std::size_t i = 0; i < c.size(); ++i) coords[offsets_[static_cast<std::size_t>(n)] + i] = c[i];
  }
  if (!(ambient(coords) == harmonic)) throw NotHarmonic("element is not in the harmonic space");
  return coords;
}

Element HarmonicCoordinates::ambient(const Vector& coords) const {
  Element out(space_->total_dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) out.add_scaled(coords[i], basis_[i]);
  return out;
}

namespace {

/// Calls f(tuple) for every k-tuple over [0, dim), lexicographically.
template <typename F>
void for_each_tuple(std::size_t dim, std::size_t k, F&& f) {
  if (dim == 0 && k > 0) return;
  std::vector<std::size_t> t(k, 0);
  while (true) {
    f(std::span<const std::size_t>(t));
    std::size_t i = k;
    while (i > 0 && ++t[i - 1] == dim) t[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace

Vector AInfinityStructure::m(std::span<const std::size_t> tuple) const {
  const std::size_t k = tuple.size();
  if (k == 0) throw ArityError("m_0 is not defined");
  if (k > max_arity) throw ArityError("m_" + std::to_string(k) + " exceeds the computed arity " + std::to_string(max_arity));
  if (k == 1) return Vector(dim());
  const auto& table = tables[k];
  auto it = table.find(std::vector<std::size_t>(tuple.begin(), tuple.end()));
  return it == table.end() ? Vector(dim()) : it->second;
}

Vector AInfinityStructure::m(std::span<const Vector> args) const {
  const std::size_t k = args.size();
  Vector out(dim());
  std::vector<std::vector<std::size_t>> support(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (args[i].size() != dim()) throw std::invalid_argument("argument is not a harmonic coordinate vector");
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(args[i][j]) != 0) support[i].push_back(j);
    if (support[i].empty()) return out;
  }
  std::vector<std::size_t> pos(k, 0);
  std::vector<std::size_t> tuple(k);
  while (true) {
    Rational coeff = 1;
    for (std::size_t i = 0; i < k; ++i) {
      tuple[i] = support[i][pos[i]];
      coeff *= args[i][tuple[i]];
    }
    axpy(out, coeff, m(tuple));
    std::size_t i = 0;
    while (i < k && ++pos[i] == support[i].size()) pos[i++] = 0;
    if (i == k) break;
  }
  return out;
}

Element AInfinityStructure::to_ambient(const Vector& coords) const {
  Element out(hodge->space().total_dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) out.add_scaled(coords[i], harmonic[i]);
  return out;
}

AInfinityStructure transfer_structure(std::shared_ptr<const HodgeData> hodge, const TransferOptions& options) {
  if (options.max_arity < 2) throw std::invalid_argument("max arity must be at least 2");
  if (options.max_arity > kMaxArity) throw ArityError("max arity above " + std::to_string(kMaxArity));
  const auto& h = *hodge;
  AInfinityStructure s;
  s.max_arity = options.max_arity;
  s.variant = options.variant;
  s.hodge = hodge;
  s.harmonic = h.harmonic_flat();
  std::vector<std::vector<std::string>> labels(h.harmonic.size());
  {
    const auto flat = harmonic_labels(h);
    std::size_t i = 0;
    for (std::size_t n = 0; n < h.harmonic.size(); ++n)
      for (std::size_t j = 0; j < h.harmonic[n].size(); ++j, ++i) {
        labels[n].push_back(flat[i]);
        s.degrees.push_back(static_cast<int>(n));
      }
  }
  s.space = GradedVectorSpace(std::move(labels));
  s.tables.resize(options.max_arity + 1);

  const LambdaCache cache(hodge, s.harmonic, options.variant);
  const HarmonicCoordinates coords(h);
  const int top = h.space().top();
  const auto hdims = h.harmonic_dims();

  for (std::size_t k = 2; k <= options.max_arity; ++k) {
    std::vector<std::vector<std::size_t>> work;
    for_each_tuple(s.dim(), k, [&](std::span<const std::size_t> t) {
      int total = 0;
      for (auto i : t) total += s.degrees[i];
      const int out = total + 2 - static_cast<int>(k);
      if (out < 0 || out > top || hdims[static_cast<std::size_t>(out)] == 0) return;
      work.emplace_back(t.begin(), t.end());
    });

    std::vector<Vector> results(work.size());
    auto run = [&](std::size_t begin, std::size_t stride) {
      for (std::size_t i = begin; i < work.size(); i += stride)
        results[i] = coords(harmonic_part(h, cache.lambda(work[i])));
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, work.size()));
    if (threads == 1) {
      run(0, 1);
    } else {
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          try {
            run(t, threads);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i < work.size(); ++i)
      if (!is_zero(results[i])) s.tables[k].emplace(std::move(work[i]), std::move(results[i]));
  }
  return s;
}

AInfinityStructure transfer_structure(const HodgeData& hodge, const TransferOptions& options) {
  return transfer_structure(std::make_shared<const HodgeData>(hodge), options);
}

Element harmonic_product(const HodgeData& h, const Element& alpha, const Element& beta) {
  if (!(harmonic_part(h, alpha) == alpha)) throw NotHarmonic("left factor is not harmonic");
  if (!(harmonic_part(h, beta) == beta)) throw NotHarmonic("right factor is not harmonic");
  return harmonic_part(h, multiply(*h.dga, alpha, beta));
}

ProductTable harmonic_product_table(const AInfinityStructure& s) {
  const HodgeData& h = *s.hodge;
  const HarmonicCoordinates coords(h);
  ProductTable table(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Element p = harmonic_product(h, s.harmonic[i], s.harmonic[j]);
      if (!p.is_zero()) table.set(i, j, Element(coords(p)));
    }
  return table;
}

std::size_t pairing_rank(const GradedVectorSpace& space, const ProductTable& product, int p, int q) {
  const std::size_t dp = space.dim(p);
  const std::size_t dq = space.dim(q);
  const std::size_t dr = space.dim(p + q);
  Matrix m(dp, dq * dr);
  for (std::size_t i = 0; i < dp; ++i)
    for (std::size_t j = 0; j < dq; ++j)
      for (const auto& [k, c] : product.terms(space.global_index(p, i), space.global_index(q, j))) {
        if (space.degree_of(k) != p + q) continue;
        m(i, j * dr + (k - space.offset(p + q))) = c;
      }
  return rank(m);
}

Report check_lemma_associativity(const HodgeData& h) {
  const DGA& dga = *h.dga;
  const auto harmonic = h.harmonic_flat();
  const auto labels = harmonic_labels(h);
  CheckResult absorb{"projection_absorbs_inner_projection", true, {}, {}};
  CheckResult assoc{"harmonic_product_associative", true, {}, {}};
  std::size_t triples = 0;
  for (std::size_t i = 0; i < harmonic.size(); ++i)
    for (std::size_t j = 0; j < harmonic.size(); ++j) {
      const Element ab = multiply(dga, harmonic[i], harmonic[j]);
      const Element ab_h = harmonic_part(h, ab);
      for (std::size_t k = 0; k < harmonic.size(); ++k) {
        ++triples;
        const std::string witness = "(" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
        const Element lhs = harmonic_part(h, multiply(dga, ab_h, harmonic[k]));
        const Element rhs = harmonic_part(h, multiply(dga, ab, harmonic[k]));
        if (absorb.passed && !(lhs == rhs)) {
          absorb.passed = false;
          absorb.witnesses.push_back(witness);
        }
        const Element left = harmonic_product(h, ab_h, harmonic[k]);
        const Element right = harmonic_product(h, harmonic[i], harmonic_product(h, harmonic[j], harmonic[k]));
        if (assoc.passed && !(left == right)) {
          assoc.passed = false;
          assoc.witnesses.push_back(witness);
        }
      }
    }
  absorb.detail = assoc.detail = std::to_string(triples) + " triples";
  return Report{"lemma_associativity", {absorb, assoc}};
}

Report check_ring_isomorphism(const HodgeData& h, const CohomologyRing& ring) {
  const auto& space = h.space();
  const DGA& dga = *h.dga;
  const auto labels = harmonic_labels(h);
  Report report{"ring_isomorphism", {}};

  CheckResult iso{"phi_is_isomorphism", true, {}, {}};
  std::vector<Element> phi;
  for (int n = 0; n <= space.top(); ++n) {
    const auto& level = h.harmonic[static_cast<std::size_t>(n)];
    if (level.size() != ring.betti(n)) {
      iso.passed = false;
      iso.witnesses.push_back("degree " + std::to_string(n) + ": dim H = " + std::to_string(level.size()) +
                              ", betti = " + std::to_string(ring.betti(n)));
    }
    std::vector<Vector> cols;
    for (const auto& v : level) {
      Element c;
      try {
        c = ring.classify(space, v);
      } catch (const NoSolution&) {
        iso.passed = false;
        iso.witnesses.push_back("harmonic element not closed: " + format_element(space, v));
        c = Element(ring.space.total_dim());
      }
      cols.push_back(block_of(ring.space, c, n));
      phi.push_back(std::move(c));
    }
    if (level.size() == ring.betti(n) && !level.empty() &&
        rank(Matrix::from_columns(ring.betti(n), cols)) != level.size()) {
      iso.passed = false;
      iso.witnesses.push_back("degree " + std::to_string(n) + ": phi is singular");
    }
  }
  report.add(iso);

  CheckResult mult{"phi_multiplicative", true, {}, {}};
  const auto harmonic = h.harmonic_flat();
  if (iso.passed) {
    for (std::size_t i = 0; i < harmonic.size() && mult.passed; ++i)
      for (std::size_t j = 0; j < harmonic.size(); ++j) {
        const Element lhs = ring.classify(space, harmonic_product(h, harmonic[i], harmonic[j]));
        const Element rhs = ring.product.multiply(phi[i], phi[j]);
        if (!(lhs == rhs)) {
          mult.passed = false;
          mult.witnesses.push_back("(" + labels[i] + ", " + labels[j] + ")");
          break;
        }
      }
    mult.detail = std::to_string(harmonic.size() * harmonic.size()) + " pairs";
  } else {
    mult.passed = false;
    mult.witnesses.push_back("skipped: phi is not an isomorphism");
  }
  report.add(mult);
  (void)dga;
  return report;
}

Report stasheff_check(const AInfinityStructure& s, std::size_t n) {
  if (n == 0 || n > s.max_arity)
    throw ArityError("Stasheff identity of arity " + std::to_string(n) + " needs m_k up to k = " + std::to_string(n) +
                     ", computed up to " + std::to_string(s.max_arity));
  CheckResult r{"stasheff_" + std::to_string(n), true, {}, {}};
  const int top = s.hodge->space().top();
  const auto hdims = s.hodge->harmonic_dims();
  std::size_t checked = 0;
  std::vector<std::size_t> outer;
  for_each_tuple(s.dim(), n, [&](std::span<const std::size_t> a) {
    if (!r.passed) return;
    int total = 0;
    for (auto i : a) total += s.degrees[i];
    const int out = total + 3 - static_cast<int>(n);
    if (out < 0 || out > top || hdims[static_cast<std::size_t>(out)] == 0) return;
    ++checked;
    Vector residue(s.dim());
    long long prefix = 0;  // |a_1| + ... + |a_r|
    for (std::size_t rr = 0; rr < n; ++rr) {
      for (std::size_t ss = 1; rr + ss <= n; ++ss) {
        const std::size_t tt = n - rr - ss;
        if (ss == 1 || rr + 1 + tt == 1) continue;  // m_1 = 0
        const Vector inner = s.m(a.subspan(rr, ss));
        if (is_zero(inner)) continue;
        const long long exponent = static_cast<long long>(rr + ss * tt) + static_cast<long long>(ss) * prefix;
        outer.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(rr));
        outer.push_back(0);
        outer.insert(outer.end(), a.begin() + static_cast<std::ptrdiff_t>(rr + ss), a.end());
        for (std::size_t hidx = 0; hidx < s.dim(); ++hidx) {
          if (sgn(inner[hidx]) == 0) continue;
          outer[rr] = hidx;
          axpy(residue, sign(exponent) * inner[hidx], s.m(outer));
        }
      }
      prefix += s.degrees[a[rr]];
    }
    if (!is_zero(residue)) {
      r.passed = false;
      std::string w = "(";
      for (std::size_t i = 0; i < a.size(); ++i) w += (i ? ", " : "") + s.space.label(a[i]);
      w += ") residue " + format_element(s.space, Element(residue));
      r.witnesses.push_back(w);
    }
  });
  r.detail = std::to_string(checked) + " tuples, " + to_string(s.variant) + " signs";
  return Report{"stasheff", {r}};
}

bool in_span(const Element& v, const std::vector<Element>& spanning) {
  if (v.is_zero()) return true;
  if (spanning.empty()) return false;
  std::vector<Vector> cols;
  for (const auto& e : spanning) cols.push_back(e.coeffs());
  const std::size_t base = rank(Matrix::from_columns(v.size(), cols));
  cols.push_back(v.coeffs());
  return rank(Matrix::from_columns(v.size(), cols)) == base;
}

MasseyProduct massey_triple(const HodgeData& h, const Element& a, const Element& b, const Element& c) {
  const DGA& dga = *h.dga;
  const auto& space = h.space();
  for (const Element* x : {&a, &b, &c})
    if (!(harmonic_part(h, *x) == *x)) throw NotHarmonic("Massey argument is not harmonic: " + format_element(space, *x));
  MasseyProduct out{Element(space.total_dim()), {}, 0};
  if (a.is_zero() || b.is_zero() || c.is_zero()) return out;
  const auto da = homogeneous_degree(space, a);
  const auto db = homogeneous_degree(space, b);
  const auto dc = homogeneous_degree(space, c);
  if (!da || !db || !dc) throw std::invalid_argument("Massey arguments must be homogeneous");

  const Element ab = multiply(dga, a, b);
  const Element bc = multiply(dga, b, c);
  if (!harmonic_part(h, ab).is_zero()) throw NotDefined("a o b = " + format_element(space, harmonic_part(h, ab)) + " is nonzero");
  if (!harmonic_part(h, bc).is_zero()) throw NotDefined("b o c = " + format_element(space, harmonic_part(h, bc)) + " is nonzero");
  // du = -ab and dw = bc make (-1)^|a| a w + u c closed.
  const Element u = -h.homotopy.apply(space, ab);
  const Element w = h.homotopy.apply(space, bc);
  Element rep = multiply(dga, u, c);
  rep.add_scaled(sign(*da), multiply(dga, a, w));
  out.representative = harmonic_part(h, rep);

  const int left_deg = *db + *dc - 1;
  const int right_deg = *da + *db - 1;
  if (left_deg >= 0 && left_deg < static_cast<int>(h.harmonic.size()))
    for (const auto& x : h.harmonic[static_cast<std::size_t>(left_deg)])
      out.indeterminacy.push_back(harmonic_part(h, multiply(dga, a, x)));
  if (right_deg >= 0 && right_deg < static_cast<int>(h.harmonic.size()))
    for (const auto& x : h.harmonic[static_cast<std::size_t>(right_deg)])
      out.indeterminacy.push_back(harmonic_part(h, multiply(dga, x, c)));
  if (!out.indeterminacy.empty()) {
    std::vector<Vector> cols;
    for (const auto& e : out.indeterminacy) cols.push_back(e.coeffs());
    out.indeterminacy_dim = rank(Matrix::from_columns(space.total_dim(), cols));
  }
  return out;
}

Report compare_m3_massey(const AInfinityStructure& s) {
  if (s.max_arity < 3) throw ArityError("comparison with Massey products needs m_3");
  const HodgeData& h = *s.hodge;
  CheckResult r{"m3_matches_massey", true, {}, {}};
  bool plus_ok = true;
  bool minus_ok = true;
  std::string plus_witness;
  std::string minus_witness;
  std::size_t defined = 0;
  std::size_t nonzero = 0;
  for_each_tuple(s.dim(), 3, [&](std::span<const std::size_t> t) {
    const std::array<std::size_t, 2> ab{t[0], t[1]};
    const std::array<std::size_t, 2> bc{t[1], t[2]};
    // defined iff a o b = 0 and b o c = 0
    if (!is_zero(s.m(ab)) || !is_zero(s.m(bc))) return;
    ++defined;
    const MasseyProduct mp = massey_triple(h, s.harmonic[t[0]], s.harmonic[t[1]], s.harmonic[t[2]]);
    const Element m3 = s.to_ambient(s.m(t));
    if (!m3.is_zero()) ++nonzero;
    const std::string witness =
        "(" + s.space.label(t[0]) + ", " + s.space.label(t[1]) + ", " + s.space.label(t[2]) + ")";
    if (plus_ok && !in_span(m3 - mp.representative, mp.indeterminacy)) {
      plus_ok = false;
      plus_witness = witness;
    }
    if (minus_ok && !in_span(m3 + mp.representative, mp.indeterminacy)) {
      minus_ok = false;
      minus_witness = witness;
    }
  });
  r.passed = plus_ok || minus_ok;
  const std::string sign_text = plus_ok && minus_ok ? "either sign" : plus_ok ? "sign +1" : minus_ok ? "sign -1" : "no sign";
  r.detail = std::to_string(defined) + " defined triples, " + std::to_string(nonzero) + " with m3 != 0, " + sign_text;
  if (!r.passed) {
    r.witnesses.push_back("+1 fails at " + plus_witness);
    r.witnesses.push_back("-1 fails at " + minus_witness);
  }
  return Report{"m3_massey", {r}};
}

Report check_unit_degeneracy(const AInfinityStructure& s) {
  const HodgeData& h = *s.hodge;
  CheckResult r{"unit_degeneracy", true, {}, {}};
  if (!h.dga->unit) {
    r.detail = "no unit";
    return Report{"unit_degeneracy", {r}};
  }
  const HarmonicCoordinates coords(h);
  Vector unit;
  try {
    unit = coords(*h.dga->unit);
  } catch (const NotHarmonic&) {
    r.passed = false;
    r.witnesses.push_back("unit is not harmonic");
    return Report{"unit_degeneracy", {r}};
  }
  std::size_t checked = 0;
  std::vector<Vector> args;
  for (std::size_t k = 3; k <= s.max_arity && r.passed; ++k)
    for (std::size_t p = 0; p < k && r.passed; ++p)
      for_each_tuple(s.dim(), k - 1, [&](std::span<const std::size_t> rest) {
        if (!r.passed) return;
        args.clear();
        for (std::size_t i = 0, j = 0; i < k; ++i) {
          if (i == p) {
            args.push_back(unit);
          } else {
            Vector e(s.dim());
            e[rest[j++]] = 1;
            args.push_back(std::move(e));
          }
        }
        ++checked;
        const Vector value = s.m(std::span<const Vector>(args));
        if (!is_zero(value)) {
          r.passed = false;
          std::string w = "m" + std::to_string(k) + "(";
          for (std::size_t i = 0, j = 0; i < k; ++i) w += (i ? ", " : "") + (i == p ? std::string("unit") : s.space.label(rest[j++]));
          r.witnesses.push_back(w + ") = " + format_element(s.space, Element(value)));
        }
      });
  r.detail = std::to_string(checked) + " tuples";
  return Report{"unit_degeneracy", {r}};
}

Report check_degrees(const AInfinityStructure& s) {
  const HodgeData& h = *s.hodge;
  CheckResult r{"output_degree", true, {}, {}};
  std::size_t entries = 0;
  for (std::size_t k = 2; k < s.tables.size(); ++k)
    for (const auto& [tuple, value] : s.tables[k]) {
      ++entries;
      int total = 0;
      for (auto i : tuple) total += s.degrees[i];
      const int expected = total + 2 - static_cast<int>(k);
      bool ok = true;
      for (std::size_t i = 0; i < value.size(); ++i)
        if (sgn(value[i]) != 0 && s.degrees[i] != expected) ok = false;
      const Element amb = s.to_ambient(value);
      if (!h.laplacian.apply(h.space(), amb).is_zero()) ok = false;
      if (!ok && r.passed) {
        r.passed = false;
        std::string w = "m" + std::to_string(k) + "(";
        for (std::size_t i = 0; i < tuple.size(); ++i) w += (i ? ", " : "") + s.space.label(tuple[i]);
        r.witnesses.push_back(w + ")");
      }
    }
  r.detail = std::to_string(entries) + " entries";
  return Report{"degrees", {r}};
}

}  // namespace ainfty
