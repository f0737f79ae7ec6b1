#include "barrlab/compair/compair.hpp"

#include <algorithm>
#include <functional>

#include "barrlab/core/algebra.hpp"
#include "barrlab/error.hpp"
#include "barrlab/kernels.hpp"

namespace barrlab {

FunctorExpr one_plus_a_times(const FinSet& a) {
  return FunctorExpr::coprod(
      {FunctorExpr::prod({}), FunctorExpr::prod({FunctorExpr::constant(a), FunctorExpr::id()})});
}

KleisliLiftPoly kleisli_lift_poly(const FinSet& a, const MonadPtr& m) {
  const FunctorExpr t = one_plus_a_times(a);
  const Card letters = a.size();
  auto fn = [m, letters](Card n, Element e) -> Element {
    const Card tn = 1 + letters * n;
    if (e == 0) return m->unit(tn, 0);
    const Card mx = monad_size(*m, n);
    const Element letter = (e - 1) / mx;
    const Element inner = (e - 1) % mx;
    const Arrow pair_with{n, tn, [letter, n](Element x) { return 1 + letter * n + x; }};
    return m->map(pair_with, inner);
  };
  auto law = std::make_shared<const DistLawKl>("kleisli:" + t.to_string(), t, m, fn);
  return KleisliLiftPoly{a, t, law};
}

CommutingCandidate table_candidate(std::string name, FunctorExpr t, FunctorExpr h, MonadPtr m,
                                   std::map<Card, std::vector<Element>> tables) {
  auto shared = std::make_shared<const std::map<Card, std::vector<Element>>>(std::move(tables));
  auto fn = [shared, name](Card n, Element e) -> Element {
    auto it = shared->find(n);
    if (it == shared->end()) {
      throw Error(ErrorKind::MissingComponent,
                  "candidate " + name + " has no table for |X| = " + std::to_string(n));
    }
    if (e >= it->second.size()) {
      throw Error(ErrorKind::DomainMismatch, "element " + std::to_string(e) +
                                                 " outside the table of " + name);
    }
    return it->second[e];
  };
  return CommutingCandidate{name, std::move(t), std::move(h), std::move(m), fn};
}

namespace {

struct LevelShape {
  Card mn = 0;  // |M X|
  Card hm = 0;  // |H M X|
  Card tn = 0;  // |T X|
  Card mt = 0;  // |M T X|
};

std::optional<LevelShape> shape_at(const FunctorExpr& t, const FunctorExpr& h, const FinMonad& m,
                                   Card n) {
  LevelShape s;
  auto mn = m.size(n);
  if (!mn) return std::nullopt;
  s.mn = *mn;
  auto hm = functor_size(h, s.mn);
  auto tn = functor_size(t, n);
  if (!hm || !tn) return std::nullopt;
  s.hm = *hm;
  s.tn = *tn;
  auto mt = m.size(s.tn);
  if (!mt) return std::nullopt;
  s.mt = *mt;
  return s;
}

LevelShape require_shape(const FunctorExpr& t, const FunctorExpr& h, const FinMonad& m, Card n) {
  auto s = shape_at(t, h, m, n);
  if (!s) {
    throw Error(ErrorKind::BlowUpGuard,
                "H(M X) or M(T X) is not representable at |X| = " + std::to_string(n));
  }
  return *s;
}

// H(M f) and M(T f) for f : n -> k.
struct Transport {
  Arrow hmf;
  Arrow mtf;
};

Transport transport(const FunctorExpr& t, const FunctorExpr& h, const MonadPtr& m,
                    const Arrow& f) {
  return Transport{eval_functor_arrow(h, monad_arrow(m, f)),
                   monad_arrow(m, eval_functor_arrow(t, f))};
}

// The square sigma . H m . lambda_M = m_T . M sigma at |X| = n.
PointwiseLaw square_law(const FunctorExpr& h, const MonadPtr& m, const DistLawEM& law,
                        const LevelShape& s, Card n, const std::function<Element(Element)>& sigma) {
  const Card count = monad_size(*m, s.hm);
  const Arrow mult{monad_size(*m, s.mn), s.mn, [m, n](Element tt) { return m->mult(n, tt); }};
  const Arrow sig{s.hm, s.mt, sigma};
  const Card mn = s.mn;
  const Card tn = s.tn;
  return PointwiseLaw{"algebra square", scope_of(n), "M(H(M X))", count,
                      [&law, m, h, mn, tn, mult, sig](Element w) {
                        const Element left =
                            sig.apply(functor_map_element(h, mult, law.apply(mn, w)));
                        return std::pair{left, m->mult(tn, m->map(sig, w))};
                      },
                      [](Element e) { return std::to_string(e); },
                      [](Element v) { return std::to_string(v); }, {}};
}

void require_matching_law(const FunctorExpr& h, const MonadPtr& m, const DistLawEM& law) {
  if (law.functor().to_string() != h.to_string() || law.monad()->name() != m->name()) {
    throw Error(ErrorKind::DomainMismatch, "law " + law.name() + " is for " +
                                               law.functor().to_string() + " over " +
                                               law.monad()->name() + ", not " + h.to_string() +
                                               " over " + m->name());
  }
}

}  // namespace

LawReport check_commuting(const CommutingCandidate& c, const DistLawEM& law, Card max_size) {
  if (max_size < 1) throw Error(ErrorKind::InvalidInput, "max_size must be at least 1");
  require_matching_law(c.h, c.m, law);
  const MonadPtr m = c.m;
  LawReport report;
  report.subject = "commuting pair " + c.name + " (T = " + c.t.to_string() +
                   ", H = " + c.h.to_string() + ", over " + m->name() + ")";
  for (Card n = 0; n <= max_size; ++n) {
    const std::string scope = scope_of(n);
    const auto shape = shape_at(c.t, c.h, *m, n);

    LawResult card{"cardinality", scope, Verdict::Pass, 1, std::nullopt, {}};
    if (!shape) {
      card.verdict = Verdict::Skipped;
      card.checked = 0;
      card.note = "sizes not representable";
    } else if (shape->hm != shape->mt) {
      card.verdict = Verdict::Fail;
      card.counterexample = Counterexample{"|X|=" + std::to_string(n), 0, "",
                                           std::to_string(shape->hm),
                                           std::to_string(shape->mt), "|H(M X)| vs |M(T X)|"};
    }
    report.results.push_back(card);
    if (!shape || card.verdict == Verdict::Fail) continue;
    const LevelShape s = *shape;

    LawResult bij{"bijectivity", scope, Verdict::Pass, s.hm, std::nullopt, {}};
    if (s.hm > blowup_guard()) {
      bij.verdict = Verdict::Skipped;
      bij.checked = 0;
      bij.note = "H(M X) above the enumeration guard";
    } else {
      const auto table = kernels::tabulate(s.hm, [&](Element e) { return c.sigma(n, e); });
      std::vector<Element> first_with(s.mt, s.hm);
      for (Element e = 0; e < s.hm; ++e) {
        const Element v = table[e];
        if (v >= s.mt) {
          bij.verdict = Verdict::Fail;
          bij.counterexample = Counterexample{"H(M X)", e, std::to_string(e), std::to_string(v),
                                              "< " + std::to_string(s.mt), "image out of range"};
          break;
        }
        if (first_with[v] != s.hm) {
          bij.verdict = Verdict::Fail;
          bij.counterexample =
              Counterexample{"H(M X)", e, std::to_string(e), std::to_string(v), std::to_string(v),
                             "same image as " + std::to_string(first_with[v])};
          break;
        }
        first_with[v] = e;
      }
    }
    report.results.push_back(bij);

    LawResult nat{"naturality", scope, Verdict::Pass, 0, std::nullopt, {}};
    for (Card k = 0; k <= max_size; ++k) {
      const LawResult r = check_or_skip("naturality", scope_of(n, k), [&] {
        require_shape(c.t, c.h, *m, k);
        const Card fs = function_count(n, k);
        auto total = checked_mul(fs, s.hm);
        if (!total) throw Error(ErrorKind::BlowUpGuard, "naturality domain not representable");
        const Card block = s.hm;
        return PointwiseLaw{
            "naturality", scope_of(n, k), "H(M X) x functions", *total,
            [&c, m, n, k, block](Element e) {
              const Arrow f = function_at(n, k, e / block);
              const Element w = e % block;
              const Transport tr = transport(c.t, c.h, m, f);
              return std::pair{tr.mtf.apply(c.sigma(n, w)), c.sigma(k, tr.hmf.apply(w))};
            },
            [block](Element e) { return std::to_string(e % block); },
            [](Element v) { return std::to_string(v); },
            [n, k, block](Element e) {
              return "f=" + describe_arrow(function_at(n, k, e / block));
            }};
      });
      nat.checked += r.checked;
      if (r.verdict == Verdict::Fail && nat.verdict != Verdict::Fail) {
        nat.verdict = Verdict::Fail;
        nat.counterexample = r.counterexample;
      } else if (r.verdict == Verdict::Skipped && nat.verdict == Verdict::Pass) {
        nat.verdict = Verdict::Skipped;
        nat.note = r.note;
      }
    }
    report.results.push_back(nat);

    report.results.push_back(check_or_skip("algebra square", scope, [&] {
      return square_law(c.h, m, law, s, n, [&c, n](Element e) { return c.sigma(n, e); });
    }));
  }
  return report;
}

std::string_view to_string(CommutingSearch::Status s) {
  switch (s) {
    case CommutingSearch::Status::Found: return "found";
    case CommutingSearch::Status::Exhausted: return "none";
    case CommutingSearch::Status::Unknown: return "unknown";
  }
  return "?";
}

namespace {

class Searcher {
 public:
  Searcher(const FunctorExpr& t, const FunctorExpr& h, const MonadPtr& m, const DistLawEM& law,
           Card max_size, std::uint64_t cap, const ComponentFn& preferred)
      : t_(t), h_(h), m_(m), law_(law), max_size_(max_size), cap_(cap), preferred_(preferred) {}

  CommutingSearch run() {
    const bool found = level(0);
    if (found) {
      out_.status = CommutingSearch::Status::Found;
    } else if (capped_) {
      out_.status = CommutingSearch::Status::Unknown;
      out_.tables.clear();
    } else {
      out_.status = CommutingSearch::Status::Exhausted;
      out_.tables.clear();
    }
    return out_;
  }

 private:
  struct Edge {
    Element other;
    Arrow mtf;
  };

  // Searches sigma_n given sigma_0 .. sigma_{n-1} in out_.tables.
  bool level(Card n) {
    if (n > max_size_) return true;
    const LevelShape s = require_shape(t_, h_, *m_, n);
    if (s.hm != s.mt) return false;
    if (s.hm > blowup_guard()) {
      throw Error(ErrorKind::BlowUpGuard, "H(M X) too large to search at |X| = " +
                                              std::to_string(n));
    }
    const Card size = s.hm;

    // values pinned by naturality against maps k -> n from smaller carriers
    std::vector<std::optional<Element>> pinned(size);
    for (Card k = 0; k < n; ++k) {
      const auto& sk = out_.tables.at(k);
      const Card fs = function_count(k, n);
      for (Element fi = 0; fi < fs; ++fi) {
        const Transport tr = transport(t_, h_, m_, function_at(k, n, fi));
        for (Element e = 0; e < sk.size(); ++e) {
          const Element at = tr.hmf.apply(e);
          const Element v = tr.mtf.apply(sk[e]);
          if (pinned[at] && *pinned[at] != v) return false;
          pinned[at] = v;
        }
      }
    }

    // unary filters from maps n -> k into smaller carriers
    std::vector<std::vector<Element>> domain(size);
    std::vector<Transport> down;
    std::vector<Card> down_target;
    for (Card k = 0; k < n; ++k) {
      const Card fs = function_count(n, k);
      for (Element fi = 0; fi < fs; ++fi) {
        down.push_back(transport(t_, h_, m_, function_at(n, k, fi)));
        down_target.push_back(k);
      }
    }
    for (Element e = 0; e < size; ++e) {
      auto ok = [&](Element v) {
        for (std::size_t i = 0; i < down.size(); ++i) {
          const auto& sk = out_.tables.at(down_target[i]);
          if (down[i].mtf.apply(v) != sk[down[i].hmf.apply(e)]) return false;
        }
        return true;
      };
      if (pinned[e]) {
        if (ok(*pinned[e])) domain[e].push_back(*pinned[e]);
      } else {
        for (Element v = 0; v < size; ++v) {
          if (ok(v)) domain[e].push_back(v);
        }
      }
      if (domain[e].empty()) return false;
      if (preferred_) {
        const Element p = preferred_(n, e);
        auto it = std::find(domain[e].begin(), domain[e].end(), p);
        if (it != domain[e].end()) std::rotate(domain[e].begin(), it, it + 1);
      }
    }

    // binary constraints from endomaps
    std::vector<std::vector<Edge>> edges(size);
    const Card endos = function_count(n, n);
    for (Element fi = 0; fi < endos; ++fi) {
      const Transport tr = transport(t_, h_, m_, function_at(n, n, fi));
      for (Element e = 0; e < size; ++e) {
        const Element other = tr.hmf.apply(e);
        edges[e].push_back({other, tr.mtf});
      }
    }

    std::vector<Element> sigma(size, 0);
    std::vector<bool> assigned(size, false);
    std::vector<bool> used(size, false);
    std::function<bool(Element)> assign = [&](Element e) -> bool {
      if (e == size) {
        if (capped_) return false;
        if (out_.candidates >= cap_) {
          capped_ = true;
          return false;
        }
        ++out_.candidates;
        const PointwiseLaw sq =
            square_law(h_, m_, law_, s, n, [&sigma](Element x) { return sigma[x]; });
        if (check_pointwise(sq).verdict != Verdict::Pass) return false;
        out_.tables[n] = sigma;
        if (level(n + 1)) return true;
        out_.tables.erase(n);
        return false;
      }
      for (Element v : domain[e]) {
        if (capped_) return false;
        if (used[v]) continue;
        sigma[e] = v;
        assigned[e] = true;
        bool consistent = true;
        // f sends e to other: M(Tf)(sigma(e)) = sigma(other)
        for (const auto& edge : edges[e]) {
          if (assigned[edge.other] && edge.mtf.apply(v) != sigma[edge.other]) {
            consistent = false;
            break;
          }
        }
        // and the reverse direction for already assigned elements that reach e
        for (Element d = 0; consistent && d < e; ++d) {
          for (const auto& edge : edges[d]) {
            if (edge.other == e && edge.mtf.apply(sigma[d]) != v) {
              consistent = false;
              break;
            }
          }
        }
        if (consistent) {
          used[v] = true;
          if (assign(e + 1)) return true;
          used[v] = false;
        }
        assigned[e] = false;
      }
      return false;
    };
    return assign(0);
  }

  FunctorExpr t_;
  FunctorExpr h_;
  MonadPtr m_;
  const DistLawEM& law_;
  Card max_size_;
  std::uint64_t cap_;
  ComponentFn preferred_;
  bool capped_ = false;
  CommutingSearch out_;
};

}  // namespace

CommutingSearch search_commuting(const FunctorExpr& t, const FunctorExpr& h, const MonadPtr& m,
                                 const DistLawEM& law, Card max_size, std::uint64_t cap,
                                 const ComponentFn& preferred) {
  require_matching_law(h, m, law);
  return Searcher(t, h, m, law, max_size, cap, preferred).run();
}

std::optional<PartnerCase> parse_partner_case(const std::string& name) {
  if (name == "streams") return PartnerCase::Streams;
  if (name == "constant") return PartnerCase::Constant;
  if (name == "moore") return PartnerCase::Moore;
  return std::nullopt;
}

CommutingPair partner_for_product(PartnerCase kind, const FinSet& b, const MonadPtr& m) {
  auto sm = std::dynamic_pointer_cast<const SemimoduleMonad>(m);
  if (!m->biproducts() || !sm) {
    throw Error(ErrorKind::NotBiproductCompatible,
                m->name() + " algebras do not have finite biproducts");
  }
  const FinSet one = FinSet::labelled("1", {"*"});
  const FinSet gens = kind == PartnerCase::Moore ? one : b;
  const EMAlgebra free = free_algebra(m, gens);
  const FinSet mb = free.carrier;
  const Card nb = gens.size();
  const Card letters = b.size();

  FunctorExpr t = FunctorExpr::id();
  FunctorExpr h = FunctorExpr::id();
  std::string name;
  switch (kind) {
    case PartnerCase::Streams:
      h = FunctorExpr::prod({FunctorExpr::constant(mb), FunctorExpr::id()});
      t = FunctorExpr::coprod({FunctorExpr::constant(b), FunctorExpr::id()});
      name = "streams";
      break;
    case PartnerCase::Constant:
      h = FunctorExpr::constant(mb);
      t = FunctorExpr::constant(b);
      name = "constant";
      break;
    case PartnerCase::Moore:
      h = FunctorExpr::prod({FunctorExpr::constant(mb), FunctorExpr::pow(b, FunctorExpr::id())});
      t = one_plus_a_times(b);
      name = "moore";
      break;
  }

  // coefficient blocks of an element of H(M X), in the summand order of T
  auto sigma = [sm, kind, nb, letters, mb](Card n, Element e) -> Element {
    const Card mx = monad_size(*sm, n);
    std::vector<Scalar> coeffs;
    auto append = [&](Card size, Element t) {
      const auto c = sm->coefficients(size, t);
      coeffs.insert(coeffs.end(), c.begin(), c.end());
    };
    switch (kind) {
      case PartnerCase::Constant:
        append(nb, e);
        break;
      case PartnerCase::Streams:
        append(nb, e / mx);
        append(n, e % mx);
        break;
      case PartnerCase::Moore: {
        const Card rest = *checked_pow(mx, letters);
        append(nb, e / rest);
        for (Element part : split_tuple(std::vector<Card>(letters, mx), e % rest)) append(n, part);
        break;
      }
    }
    return sm->from_coefficients(coeffs);
  };

  CommutingCandidate candidate{name, t, h, m, sigma};
  auto h_law = product_law(h, m, ConstantAlgebras{{mb.name(), free}});
  return CommutingPair{kind, b, std::move(candidate), std::move(h_law)};
}

std::vector<Word> initial_T_algebra_words(const FinSet& a, Card depth) {
  return words_up_to(a.size(), depth);
}

TruncatedSeries embed_free_element(const Semiring& k, const FinSet& a,
                                   const std::vector<Scalar>& c, Card n, Card bound) {
  const Card count = words_below(a.size(), n);
  if (c.size() != count) {
    throw Error(ErrorKind::DomainMismatch, "expected " + std::to_string(count) +
                                               " coefficients for the words of length < " +
                                               std::to_string(n));
  }
  const TruncatedSeries zero = TruncatedSeries::zero(k, a, bound);
  std::vector<std::pair<Scalar, TruncatedSeries>> terms;
  for (Element w = 0; w < count; ++w) {
    if (c[w] == k.zero() || word_at(a.size(), w).size() >= bound) continue;
    TruncatedSeries basis = zero;
    basis.coeffs[w] = k.one();
    terms.emplace_back(c[w], std::move(basis));
  }
  return linear_combination(terms, zero);
}

std::vector<Scalar> free_approximant(const TruncatedSeries& x, Card n) {
  return x.truncate(n).coeffs;
}

}  // namespace barrlab
