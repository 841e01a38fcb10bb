#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extalg/reduction.hpp"

namespace extalg {

/// Overlap difference o(h1, h2, p, q) = (1/CTip(h1)) h1 p - (1/CTip(h2)) q h2
/// for an alignment Tip(h1) p = q Tip(h2).
template <class K>
struct OverlapDifference {
  int h1 = -1;
  int h2 = -1;
  Path p;
  Path q;
  Element<K> value;
};

/// All overlap differences of h1 against h2, in that orientation.
/// `same_element` suppresses the degenerate full self-alignment h - h.
template <class K>
std::vector<OverlapDifference<K>> overlap_differences(const Quiver& quiv,
                                                      const AdmissibleOrder& ord,
                                                      const Element<K>& h1,
                                                      const Element<K>& h2,
                                                      bool same_element = false);

enum class GbStatus { Verified, DegreeBounded };

template <class K>
struct GroebnerBasis {
  std::vector<Element<K>> elements;  // monic; inter-reduced when Verified
  GbStatus status = GbStatus::Verified;
  int degree_bound = 0;

  std::vector<Path> tips() const {
    std::vector<Path> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.tip());
    return out;
  }
};

struct GbFailure {
  int condition = 0;  // 1: CTip != 1, 2: reduces over another, 3: overlap not zero
  int i = -1;
  int j = -1;
  std::string detail;
};

struct VerifyResult {
  bool verified = false;
  std::vector<GbFailure> failures;
};

/// Reduced Groebner basis check: (i) CTip = 1 throughout, (ii) no element
/// reduces over another, (iii) every overlap difference of two (not
/// necessarily distinct) members reduces to zero over H.
template <class K>
VerifyResult verify_reduced_gb(const Quiver& quiv, const AdmissibleOrder& ord,
                               std::span<const Element<K>> H);

/// Degree-bounded Buchberger-style completion for uniform length-homogeneous
/// generators.  Overlap words longer than the bound are not processed and
/// downgrade the status to DegreeBounded.
template <class K>
GroebnerBasis<K> complete_to_gb(const Quiver& quiv, const AdmissibleOrder& ord,
                                std::vector<Element<K>> gens, int degree_bound);

/// Paths of length exactly d containing no tip of G as a factor, sorted
/// descending under the order.  Requires verification depth >= d.
template <class K>
std::vector<Path> nontips(const Quiver& quiv, const AdmissibleOrder& ord,
                          const GroebnerBasis<K>& G, int d);

std::vector<Path> nontip_paths(const Quiver& quiv, const AdmissibleOrder& ord,
                               const std::vector<Path>& tips, int d);

enum class KoszulVerdict { Koszul, Inconclusive };

template <class K>
struct KoszulCertificate {
  KoszulVerdict verdict = KoszulVerdict::Inconclusive;
  std::string reason;
  GroebnerBasis<K> basis;
};

/// One-directional Koszulity certificate: quadratic generators whose reduced
/// basis stays quadratic certify a Koszul quotient.
template <class K>
KoszulCertificate<K> koszul_certificate(const Quiver& quiv, const AdmissibleOrder& ord,
                                        std::vector<Element<K>> quadratic_gens,
                                        int degree_bound);

}  // namespace extalg

#include "extalg/groebner_impl.hpp"
