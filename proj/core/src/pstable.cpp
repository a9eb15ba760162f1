#include "autxy/pstable.hpp"

#include <algorithm>
#include <stdexcept>

namespace autxy {

long long binom_mod_p(long long n, long long k, int p) {
  if (p < 2) throw std::invalid_argument("binom_mod_p requires a prime modulus");
  if (k < 0 || k > n) return 0;
  long long res = 1;
  while (n > 0 || k > 0) {
    long long nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) mod p with nd, kd < p
    long long c = 1;
    for (long long i = 1; i <= kd; ++i) {
      c = c * ((nd - kd + i) % p) % p;
      // divide by i mod p (i < p so invertible)
      long long inv = 1, base = i % p, e = p - 2;
      while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      c = c * inv % p;
    }
    res = res * c % p;
    n /= p;
    k /= p;
  }
  return res;
}

std::set<long long> expand_binomial_support(long long n, int p) {
  if (p < 2) throw std::invalid_argument("expand_binomial_support requires a prime modulus");
  if (n < 0) throw std::invalid_argument("negative exponent");
  RPoly base = RPoly::y(p) + RPoly::constant(TPoly::one(p));
  RPoly acc = RPoly::constant(TPoly::one(p));
  RPoly sq = base;
  long long e = n;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    sq = sq * sq;
    e >>= 1;
  }
  std::set<long long> support;
  for (int i = 0; i <= acc.degree(); ++i)
    if (!acc.coeff(i).is_zero()) support.insert(i);
  return support;
}

namespace {

void require_positive_char(int p, const char* family) {
  if (p < 2)
    throw std::invalid_argument(std::string(family) + " requires p > 0");
}

}  // namespace

PStableSet PStableSet::empty(int p) { return PStableSet(Kind::Empty, p); }

PStableSet PStableSet::finite(const std::set<long long>& elems, int p) {
  PStableSet s(Kind::Finite, p);
  for (long long m : elems) {
    if (m < 2) throw std::invalid_argument("exponent sets live in {2, 3, ...}");
    s.elems_.push_back(m);
  }
  if (s.elems_.empty()) s.kind_ = Kind::Empty;
  return s;
}

PStableSet PStableSet::range_to(long long k, int p) {
  if (k < 2) throw std::invalid_argument("range upper bound must be >= 2");
  PStableSet s(Kind::RangeTo, p);
  s.k_ = k;
  return s;
}

PStableSet PStableSet::p_powers(int p) {
  require_positive_char(p, "p_powers");
  return PStableSet(Kind::PPowers, p);
}

PStableSet PStableSet::p_multiples(int p) {
  require_positive_char(p, "p_multiples");
  return PStableSet(Kind::PMultiples, p);
}

PStableSet PStableSet::all_ge2(int p) { return PStableSet(Kind::AllGe2, p); }

PStableSet PStableSet::scaled_range(int n, long long k, int p) {
  require_positive_char(p, "scaled_range");
  if (n < 1) throw std::invalid_argument("scale exponent must be >= 1");
  if (k < 1) throw std::invalid_argument("range upper factor must be >= 1");
  PStableSet s(Kind::ScaledRange, p);
  s.n_ = n;
  s.k_ = k;
  return s;
}

PStableSet PStableSet::scaled_all(int n, int p) {
  require_positive_char(p, "scaled_all");
  if (n < 1) throw std::invalid_argument("scale exponent must be >= 1");
  PStableSet s(Kind::ScaledAll, p);
  s.n_ = n;
  return s;
}

PStableSet PStableSet::p_power_pair(int n, int p) {
  require_positive_char(p, "p_power_pair");
  if (n < 1) throw std::invalid_argument("scale exponent must be >= 1");
  PStableSet s(Kind::PPowerPair, p);
  s.n_ = n;
  return s;
}

PStableSet PStableSet::union_of(const std::vector<PStableSet>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty part list");
  PStableSet s(Kind::Union, parts.front().p());
  for (const auto& part : parts) {
    if (part.p() != s.p_) throw std::logic_error("characteristic mismatch");
    s.parts_.push_back(part);
  }
  return s;
}

PStableSet PStableSet::intersection_of(const std::vector<PStableSet>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty part list");
  PStableSet s(Kind::Intersection, parts.front().p());
  for (const auto& part : parts) {
    if (part.p() != s.p_) throw std::logic_error("characteristic mismatch");
    s.parts_.push_back(part);
  }
  return s;
}

long long PStableSet::scale() const {
  long long s = 1;
  for (int i = 0; i < n_; ++i) s *= p_;
  return s;
}

bool PStableSet::contains(long long m) const {
  if (m < 2) return false;
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::Finite:
      return std::binary_search(elems_.begin(), elems_.end(), m);
    case Kind::RangeTo:
      return m <= k_;
    case Kind::PPowers:
      return is_p_power(m, p_);
    case Kind::PMultiples:
      return m % p_ == 0;
    case Kind::AllGe2:
      return true;
    case Kind::ScaledRange:
      return m % scale() == 0 && m / scale() >= 1 && m / scale() <= k_;
    case Kind::ScaledAll:
      return m % scale() == 0;
    case Kind::PPowerPair:
      return m == scale() || m == scale() + 1;
    case Kind::Union:
      for (const auto& part : parts_)
        if (part.contains(m)) return true;
      return false;
    case Kind::Intersection:
      for (const auto& part : parts_)
        if (!part.contains(m)) return false;
      return true;
  }
  return false;
}

std::optional<std::vector<long long>> PStableSet::materialize() const {
  switch (kind_) {
    case Kind::Empty:
      return std::vector<long long>{};
    case Kind::Finite:
      return elems_;
    case Kind::RangeTo: {
      std::vector<long long> v;
      for (long long m = 2; m <= k_; ++m) v.push_back(m);
      return v;
    }
    case Kind::ScaledRange: {
      std::vector<long long> v;
      for (long long i = 1; i <= k_; ++i)
        if (i * scale() >= 2) v.push_back(i * scale());
      return v;
    }
    case Kind::PPowerPair:
      return std::vector<long long>{scale(), scale() + 1};
    case Kind::Union: {
      std::set<long long> acc;
      for (const auto& part : parts_) {
        auto m = part.materialize();
        if (!m) return std::nullopt;
        acc.insert(m->begin(), m->end());
      }
      return std::vector<long long>(acc.begin(), acc.end());
    }
    case Kind::Intersection: {
      // one explicit part is enough; filter it through the others
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        auto m = parts_[i].materialize();
        if (!m) continue;
        std::vector<long long> v;
        for (long long x : *m)
          if (contains(x)) v.push_back(x);
        return v;
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::string PStableSet::str() const {
  switch (kind_) {
    case Kind::Empty:
      return "empty";
    case Kind::Finite: {
      std::string s = "{";
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elems_[i]);
      }
      return s + "}";
    }
    case Kind::RangeTo:
      return "2.." + std::to_string(k_);
    case Kind::PPowers:
      return "ppowers";
    case Kind::PMultiples:
      return "pmult";
    case Kind::AllGe2:
      return "all";
    case Kind::ScaledRange:
      return "pscaled(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
    case Kind::ScaledAll:
      return "pscaledall(" + std::to_string(n_) + ")";
    case Kind::PPowerPair:
      return "ppowerpair(" + std::to_string(n_) + ")";
    case Kind::Union:
    case Kind::Intersection: {
      std::string sep = kind_ == Kind::Union ? "|" : "&";
      std::string s;
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += sep;
        bool paren = parts_[i].kind() == Kind::Union || parts_[i].kind() == Kind::Intersection;
        s += paren ? "(" + parts_[i].str() + ")" : parts_[i].str();
      }
      return s;
    }
  }
  return "?";
}

std::optional<std::pair<long long, long long>> stability_counterexample(
    const PStableSet& I, long long nmax) {
  int p = I.p();
  for (long long n = 2; n <= nmax; ++n) {
    if (!I.contains(n)) continue;
    for (long long k = 2; k < n; ++k) {
      if (I.contains(k)) continue;
      bool divisible = p == 0 ? false : binom_mod_p(n, k, p) == 0;
      if (!divisible) return std::make_pair(n, k);
    }
  }
  return std::nullopt;
}

namespace {

StabilityReport exact_finite_report(const PStableSet& I,
                                    const std::vector<long long>& elems) {
  StabilityReport r;
  r.exact = true;
  int p = I.p();
  for (long long n : elems) {
    for (long long k = 2; k < n; ++k) {
      if (I.contains(k)) continue;
      bool divisible = p == 0 ? false : binom_mod_p(n, k, p) == 0;
      if (!divisible) {
        r.stable = false;
        r.counterexample = std::make_pair(n, k);
        r.certificate = "C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") is nonzero mod p and " + std::to_string(k) +
                        " is missing";
        return r;
      }
    }
  }
  r.stable = true;
  r.certificate = "binomial condition verified on every element";
  return r;
}

}  // namespace

StabilityReport is_p_stable(const PStableSet& I, long long audit_bound) {
  StabilityReport r;
  switch (I.kind()) {
    case PStableSet::Kind::Empty:
      r.stable = true;
      r.certificate = "empty set";
      return r;
    case PStableSet::Kind::AllGe2:
      r.stable = true;
      r.certificate = "contains every exponent >= 2";
      return r;
    case PStableSet::Kind::RangeTo:
      r.stable = true;
      r.certificate = "downward closed within {2..n}";
      return r;
    case PStableSet::Kind::PPowers:
      r.stable = true;
      r.certificate = "(y+1)^(p^j) = y^(p^j) + 1";
      return r;
    case PStableSet::Kind::PMultiples:
      r.stable = true;
      r.certificate = "(y+1)^(p*k) = (y^p + 1)^k";
      return r;
    case PStableSet::Kind::ScaledRange:
    case PStableSet::Kind::ScaledAll:
      r.stable = true;
      r.certificate = "(y+1)^(p^n*k) = (y^(p^n) + 1)^k";
      return r;
    case PStableSet::Kind::PPowerPair:
      r.stable = true;
      r.certificate = "(y+1)^(p^n+1) = y^(p^n+1) + y^(p^n) + y + 1";
      return r;
    case PStableSet::Kind::Finite:
      return exact_finite_report(I, *I.materialize());
    case PStableSet::Kind::Union:
    case PStableSet::Kind::Intersection: {
      bool all_parts_stable = true;
      for (const auto& part : I.parts()) {
        StabilityReport pr = is_p_stable(part, audit_bound);
        if (!pr.stable || !pr.exact) all_parts_stable = false;
      }
      if (all_parts_stable) {
        r.stable = true;
        r.certificate = I.kind() == PStableSet::Kind::Union
                            ? "union of p-stable sets"
                            : "intersection of p-stable sets";
        return r;
      }
      if (auto elems = I.materialize()) return exact_finite_report(I, *elems);
      auto ce = stability_counterexample(I, audit_bound);
      if (ce) {
        r.stable = false;
        r.counterexample = ce;
        r.certificate = "counterexample found";
        return r;
      }
      r.stable = true;
      r.exact = false;
      r.audit_bound = audit_bound;
      r.certificate = "binomial condition audited up to the bound";
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

TriangularSplit triangular_in_AI(const Auto& beta, const PStableSet& I) {
  auto tf = as_triangular(beta);
  if (!tf) throw std::domain_error("triangular element required");
  TriangularSplit split;
  std::map<int, RatFunc> high;
  for (const auto& [j, c] : tf->shear) {
    if (j <= 1) continue;
    if (!I.contains(j)) {
      split.in_subgroup = false;
      split.offending_exponent = j;
      return split;
    }
    high.emplace(j, c / tf->u);
  }
  split.in_subgroup = true;
  int p = beta.p();
  split.shear_part = make_shear(p, beta.tag(), high);
  TriangularForm aff = *tf;
  for (auto it = aff.shear.begin(); it != aff.shear.end();) {
    if (it->first > 1)
      it = aff.shear.erase(it);
    else
      ++it;
  }
  split.affine_part = make_triangular(p, beta.tag(), aff);
  return split;
}

SubsetReport ai_order(const PStableSet& I, const PStableSet& J, long long bound) {
  SubsetReport r;
  auto elems = I.materialize();
  if (elems) {
    for (long long m : *elems) {
      if (!J.contains(m)) {
        r.subset = false;
        r.witness = m;
        return r;
      }
    }
    r.subset = true;
    r.exact = true;
    return r;
  }
  for (long long m = 2; m <= bound; ++m) {
    if (I.contains(m) && !J.contains(m)) {
      r.subset = false;
      r.witness = m;
      return r;
    }
  }
  r.subset = true;
  r.exact = false;
  r.bound = bound;
  return r;
}

}  // namespace autxy
