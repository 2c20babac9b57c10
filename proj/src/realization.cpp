#include "zpi/realization.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zpi {

namespace {

void check_almost_even_or_report(const HermitianMatrix& a) {
  for (int i = 0; i < a.size(); ++i) {
    const GroupRingElement& d = a.at(i, i);
    if (d.is_self_conjugate_almost_even()) continue;
    const auto& g = a.group();
    std::ostringstream os;
    os << "realization_moves: diagonal entry (" << (i + 1) << "," << (i + 1)
       << ") is not self-conjugate almost even";
    for (const auto& [el, c] : d.terms()) {
      if (g->is_involution(el) && c % 2 != 0) {
        os << ": odd coefficient " << c << " on order-2 element " << g->to_string(el);
        break;
      }
      if (d.coeff(g->inv(el)) != c) {
        os << ": coefficient of " << g->to_string(el)
           << " does not match its inverse";
        break;
      }
    }
    throw DomainError(os.str());
  }
}

void emit_copies(std::vector<RealizationMove>& out, const RealizationMove& mv,
                 const Int& count) {
  if (count > 1'000'000)
    throw ResourceBoundError("realization_moves: coefficient too large to emit as moves");
  for (Int k = 0; k < count; ++k) out.push_back(mv);
}

}  // namespace

std::vector<RealizationMove> realization_moves(const HermitianMatrix& a) {
  check_almost_even_or_report(a);
  const auto& g = a.group();
  const int n = a.size();
  std::vector<RealizationMove> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto& [el, c] : a.at(i, j).terms())
        emit_copies(out, {RealizationMove::Kind::OffDiagonal, i, j, int_sign(c), el},
                    int_abs(c));
  std::vector<std::pair<int, Int>> twists;
  for (int i = 0; i < n; ++i) {
    for (const auto& [el, c] : a.at(i, i).terms()) {
      if (g->is_identity(el)) {
        twists.emplace_back(i, c);
      } else if (g->is_involution(el)) {
        Int half = c / 2;
        emit_copies(out, {RealizationMove::Kind::OffDiagonal, i, i, int_sign(half), el},
                    int_abs(half));
      } else if (g->less(el, g->inv(el))) {
        // one move per conjugate pair, keyed on the smaller element
        emit_copies(out, {RealizationMove::Kind::OffDiagonal, i, i, int_sign(c), el},
                    int_abs(c));
      }
    }
  }
  for (const auto& [i, c] : twists)
    emit_copies(out, {RealizationMove::Kind::DiagonalTwist, i, i, int_sign(c), g->identity()},
                int_abs(c));
  return out;
}

HermitianMatrix apply_moves(const HermitianMatrix& start,
                            const std::vector<RealizationMove>& moves) {
  const auto& g = start.group();
  const int n = start.size();
  RingMatrix m = start.matrix();
  for (const auto& mv : moves) {
    if (mv.i < 0 || mv.i >= n || mv.j < 0 || mv.j >= n)
      throw DomainError("apply_moves: index out of range");
    if (mv.sign != 1 && mv.sign != -1)
      throw DomainError("apply_moves: sign must be +-1");
    const Int s(mv.sign);
    if (mv.kind == RealizationMove::Kind::DiagonalTwist) {
      m.at(mv.i, mv.i) =
          m.at(mv.i, mv.i) + GroupRingElement::from_int(g, s);
      continue;
    }
    g->require(mv.g, "apply_moves");
    if (mv.i != mv.j) {
      m.at(mv.i, mv.j) = m.at(mv.i, mv.j) + GroupRingElement::monomial(g, mv.g, s);
      m.at(mv.j, mv.i) =
          m.at(mv.j, mv.i) + GroupRingElement::monomial(g, g->inv(mv.g), s);
    } else {
      if (g->is_identity(mv.g))
        throw DomainError(
            "apply_moves: diagonal identity contributions use diagonal twists");
      if (g->is_involution(mv.g)) {
        m.at(mv.i, mv.i) =
            m.at(mv.i, mv.i) + GroupRingElement::monomial(g, mv.g, 2 * s);
      } else {
        m.at(mv.i, mv.i) = m.at(mv.i, mv.i) +
                           GroupRingElement::monomial(g, mv.g, s) +
                           GroupRingElement::monomial(g, g->inv(mv.g), s);
      }
    }
  }
  return HermitianMatrix(std::move(m));
}

GroupRingElement eval_normlike_term(const NormLikeTerm& t, const GroupPtr& g) {
  g->require(t.g1, "normlike term");
  g->require(t.g2, "normlike term");
  g->require(t.h, "normlike term");
  if (t.sign != 1 && t.sign != -1)
    throw DomainError("normlike term: sign must be +-1");
  const Int s(t.sign);
  const auto g1i = g->inv(t.g1);
  const auto g2i = g->inv(t.g2);
  const auto hi = g->inv(t.h);
  // g1 (h-1) g2 + g2^-1 (h^-1 - 1) g1^-1
  return GroupRingElement::monomial(g, g->mul(g->mul(t.g1, t.h), t.g2), s) +
         GroupRingElement::monomial(g, g->mul(t.g1, t.g2), -s) +
         GroupRingElement::monomial(g, g->mul(g->mul(g2i, hi), g1i), s) +
         GroupRingElement::monomial(g, g->mul(g2i, g1i), -s);
}

GroupRingElement eval_normlike(const std::vector<NormLikeTerm>& terms,
                               const GroupPtr& g) {
  GroupRingElement acc = GroupRingElement::zero(g);
  for (const auto& t : terms) acc = acc + eval_normlike_term(t, g);
  return acc;
}

std::vector<NormLikeTerm> normlike_decompose(const GroupRingElement& lambda,
                                             const QuotientMap& q) {
  require_same_group(*lambda.group(), *q.source(), "normlike_decompose");
  if (!lambda.is_self_conjugate_almost_even())
    throw DomainError("normlike_decompose: element is not self-conjugate almost even");
  if (!ideal_member(lambda, q))
    throw DomainError("normlike_decompose: element is not in the augmentation ideal of the kernel");

  const auto& src = q.source();
  const auto& dst = q.target();
  const GroupElement one_src = src->identity();

  // Bucket the support by the section representative of its image coset:
  // the smaller of {image, image^-1} in the target order.
  struct Bucket {
    GroupElement rep;
    bool order_two;  // rep^2 == 1 in the target (identity included)
    std::vector<std::pair<GroupElement, Int>> terms;  // restriction of lambda
  };
  std::map<std::vector<std::int64_t>, Bucket> buckets;
  for (const auto& [el, c] : lambda.terms()) {
    GroupElement im = q.image(el);
    GroupElement imi = dst->inv(im);
    GroupElement rep = dst->less(imi, im) ? imi : im;
    auto [it, fresh] = buckets.try_emplace(rep.payload());
    if (fresh) {
      it->second.rep = rep;
      it->second.order_two = (im == imi);
    }
    if (im == it->second.rep) it->second.terms.emplace_back(el, c);
    // Terms in the g^-1 coset are determined by self-conjugacy; skipped.
  }

  std::vector<NormLikeTerm> out;
  for (auto& [key, b] : buckets) {
    const GroupElement lift = q.minimal_lift(b.rep);  // lift of 1 is 1
    const GroupElement lift_inv = src->inv(lift);
    if (!b.order_two) {
      // lambda restricted to the rep coset is sum eps_i * (k_i * lift) with
      // k_i in ker q and sum eps_i = 0; each k_i != 1 yields a norm-like term.
      Int total = 0;
      for (const auto& [el, c] : b.terms) {
        total += c;
        GroupElement k = src->mul(el, lift_inv);
        if (src->is_identity(k)) continue;
        NormLikeTerm t{int_sign(c), one_src, lift, k};
        for (Int n = 0; n < int_abs(c); ++n) out.push_back(t);
      }
      if (total != 0)
        throw Error("normlike_decompose: coset augmentation is nonzero");
    } else {
      // Order-2 coset: conjugation maps the coset to itself. Pair each term
      // with its conjugate partner; a self-paired term has even coefficient
      // and is halved.
      std::map<std::vector<std::int64_t>, Int> coeff;
      for (const auto& [el, c] : b.terms) coeff[el.payload()] = c;
      std::map<std::vector<std::int64_t>, char> done;
      Int total = 0;
      for (const auto& [el, c] : b.terms) {
        if (done[el.payload()]) continue;
        done[el.payload()] = 1;
        GroupElement partner = src->inv(el);  // (k lift)^-1 back in the coset
        Int eps;
        if (partner == el) {
          if (c % 2 != 0)
            throw Error("normlike_decompose: odd self-paired coefficient");
          eps = c / 2;
        } else {
          auto it = coeff.find(partner.payload());
          if (it == coeff.end() || it->second != c)
            throw Error("normlike_decompose: conjugate pair mismatch");
          done[partner.payload()] = 1;
          eps = c;
        }
        total += eps;
        GroupElement k = src->mul(el, lift_inv);
        if (src->is_identity(k)) continue;
        NormLikeTerm t{int_sign(eps), one_src, lift, k};
        for (Int n = 0; n < int_abs(eps); ++n) out.push_back(t);
      }
      if (total != 0)
        throw Error("normlike_decompose: order-2 coset pairing sum is nonzero");
    }
  }
  return out;
}

}  // namespace zpi
