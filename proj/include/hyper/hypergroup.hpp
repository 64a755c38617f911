#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyper/config.hpp"
#include "hyper/diagnostics.hpp"
#include "hyper/subset.hpp"

namespace hyper {

/// Set-valued operation table of a hypergroupoid: entry(x, y) = x * y.
class HyperOpTable {
 public:
  HyperOpTable() : n_(0) {}
  explicit HyperOpTable(int n) : n_(n), cells_(std::size_t(n) * n) {
    if (n < 1 || n > kCarrierCap)
      throw std::invalid_argument("carrier size out of range [1, " +
                                  std::to_string(kCarrierCap) + "]");
  }

  int size() const { return n_; }
  SubsetMask& at(int x, int y) { return cells_[std::size_t(x) * n_ + y]; }
  SubsetMask at(int x, int y) const { return cells_[std::size_t(x) * n_ + y]; }

  /// Every entry nonempty and within the carrier.
  Diagnostic well_formed() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        SubsetMask m = at(x, y);
        if (m.is_empty())
          return Diagnostic::fail("well-formed", {x, y},
                                  "empty entry at (" + std::to_string(x) +
                                      ", " + std::to_string(y) + ")");
        if (!m.fits(n_))
          return Diagnostic::fail("well-formed", {x, y},
                                  "entry at (" + std::to_string(x) + ", " +
                                      std::to_string(y) +
                                      ") mentions elements outside the carrier");
      }
    return Diagnostic::pass("well-formed");
  }

  /// x * B for a subset B: union of the row cells selected by B.
  SubsetMask row_product(int x, SubsetMask b) const {
    SubsetMask out;
    for (int y : b.members()) out |= at(x, y);
    return out;
  }

  /// A * B as the union over all pairs.
  SubsetMask product(SubsetMask a, SubsetMask b) const {
    SubsetMask out;
    for (int x : a.members()) out |= row_product(x, b);
    return out;
  }

  /// Table with relabeled carrier: element i becomes perm[i].
  HyperOpTable permuted(const std::vector<int>& perm) const {
    HyperOpTable out(n_);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        out.at(perm[x], perm[y]) = permute(at(x, y), perm);
    return out;
  }

  /// Row-major flattening of the entry bits, used for canonical forms.
  std::vector<std::uint32_t> flattened() const {
    std::vector<std::uint32_t> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) out.push_back(c.bits());
    return out;
  }

  friend bool operator==(const HyperOpTable&, const HyperOpTable&) = default;

 private:
  int n_;
  std::vector<SubsetMask> cells_;
};

namespace detail {
inline std::string name_of(const std::vector<std::string>& labels, int i) {
  return labels.empty() ? std::to_string(i) : labels.at(i);
}
}  // namespace detail

/// (H1) associativity: (x*y)*z = x*(y*z) as sets, for all triples.
inline Diagnostic check_associativity(const HyperOpTable& t) {
  const int n = t.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        SubsetMask left = t.product(t.at(x, y), SubsetMask::single(z));
        SubsetMask right = t.product(SubsetMask::single(x), t.at(y, z));
        if (!(left == right))
          return Diagnostic::fail(
              "H1", {x, y, z},
              "(x*y)*z = " + left.to_string() + " but x*(y*z) = " +
                  right.to_string() + " at (x, y, z) = (" + std::to_string(x) +
                  ", " + std::to_string(y) + ", " + std::to_string(z) + ")");
      }
  return Diagnostic::pass("H1");
}

/// (H2) commutativity: x*y = y*x.
inline Diagnostic check_commutativity(const HyperOpTable& t) {
  const int n = t.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(t.at(x, y) == t.at(y, x)))
        return Diagnostic::fail("H2", {x, y},
                                "x*y = " + t.at(x, y).to_string() +
                                    " but y*x = " + t.at(y, x).to_string() +
                                    " at (x, y) = (" + std::to_string(x) +
                                    ", " + std::to_string(y) + ")");
  return Diagnostic::pass("H2");
}

/// (H3) unique inverses: for each x the set {x' : e in x*x'} is a singleton.
/// Returns the inverse map on success.
inline Checked<std::vector<int>> check_inverses(const HyperOpTable& t, int e) {
  const int n = t.size();
  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    SubsetMask candidates;
    for (int y = 0; y < n; ++y)
      if (t.at(x, y).test(e)) candidates.add(y);
    if (candidates.count() != 1) {
      std::string what = candidates.is_empty() ? "no inverse candidate"
                                               : "multiple inverse candidates";
      return {std::nullopt,
              Diagnostic::fail("H3", {x},
                               what + " for element " + std::to_string(x) +
                                   ": " + candidates.to_string())};
    }
    inverse[x] = candidates.sole_member();
  }
  return {std::move(inverse), Diagnostic::pass("H3")};
}

/// (H4) reversibility: z in x*y implies y in inverse(x)*z.
inline Diagnostic check_reversibility(const HyperOpTable& t,
                                      const std::vector<int>& inverse) {
  const int n = t.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z : t.at(x, y).members())
        if (!t.at(inverse[x], z).test(y))
          return Diagnostic::fail(
              "H4", {x, y, z},
              std::to_string(z) + " in x*y but " + std::to_string(y) +
                  " not in x^-1*z at (x, y) = (" + std::to_string(x) + ", " +
                  std::to_string(y) + ")");
  return Diagnostic::pass("H4");
}

/// A finite canonical hypergroup: carrier, table, identity and the inverse
/// map derived during verification. Construct via verify_canonical,
/// embed_group or sign_hypergroup; instances always satisfy H1-H4.
struct FiniteCanonicalHypergroup {
  std::vector<std::string> labels;
  HyperOpTable table;
  int identity = 0;
  std::vector<int> inverse;

  int size() const { return table.size(); }
  SubsetMask entry(int x, int y) const { return table.at(x, y); }
  SubsetMask product(SubsetMask a, SubsetMask b) const {
    return table.product(a, b);
  }
  int inv(int x) const { return inverse.at(x); }
  std::string label(int x) const { return detail::name_of(labels, x); }
  /// Image of a subset under the inverse map (-A).
  SubsetMask negate(SubsetMask a) const { return permute(a, inverse); }

  friend bool operator==(const FiniteCanonicalHypergroup&,
                         const FiniteCanonicalHypergroup&) = default;
};

/// Full canonical-hypergroup verification (H1-H4 plus the derived laws
/// x*e = {x}, involutive inverse, e^-1 = e).
inline Verified<FiniteCanonicalHypergroup> verify_canonical(
    const HyperOpTable& t, int e, std::vector<std::string> labels = {}) {
  Verified<FiniteCanonicalHypergroup> out;
  const int n = t.size();
  if (e < 0 || e >= n) {
    out.diagnostics.add(
        Diagnostic::fail("identity", {e}, "identity index out of range"));
    return out;
  }
  Diagnostic wf = t.well_formed();
  out.diagnostics.add(wf);
  if (!wf.ok) return out;

  out.diagnostics.add(check_associativity(t));
  out.diagnostics.add(check_commutativity(t));
  auto inv = check_inverses(t, e);
  out.diagnostics.add(inv.diag);
  if (inv.ok()) {
    out.diagnostics.add(check_reversibility(t, *inv));
    // Derived law x*e = {x}; holds whenever H3 and H4 do, checked anyway.
    Diagnostic identity_law = Diagnostic::pass("identity-law");
    for (int x = 0; x < n; ++x)
      if (!(t.at(x, e) == SubsetMask::single(x))) {
        identity_law = Diagnostic::fail(
            "identity-law", {x},
            "x*e = " + t.at(x, e).to_string() + " for x = " +
                std::to_string(x) + ", expected {" + std::to_string(x) + "}");
        break;
      }
    out.diagnostics.add(identity_law);
    Diagnostic involution = Diagnostic::pass("inverse-involution");
    for (int x = 0; x < n; ++x)
      if ((*inv)[(*inv)[x]] != x) {
        involution = Diagnostic::fail("inverse-involution", {x},
                                      "inverse is not an involution at " +
                                          std::to_string(x));
        break;
      }
    out.diagnostics.add(involution);
    if ((*inv)[e] != e)
      out.diagnostics.add(Diagnostic::fail("identity-self-inverse", {e},
                                           "e^-1 differs from e"));
  }
  if (!out.diagnostics.ok()) return out;

  out.value = FiniteCanonicalHypergroup{std::move(labels), t, e,
                                        std::move(*inv.value)};
  return out;
}

/// Marty's condition x*H = H*x = H. A theorem for canonical hypergroups;
/// exposed as a pipeline self-test.
inline Diagnostic check_marty(const FiniteCanonicalHypergroup& h) {
  const int n = h.size();
  SubsetMask all = SubsetMask::full(n);
  for (int x = 0; x < n; ++x) {
    if (!(h.table.row_product(x, all) == all))
      return Diagnostic::fail("marty", {x},
                              "x*H is a proper subset of H for x = " +
                                  std::to_string(x));
  }
  return Diagnostic::pass("marty");
}

/// Turns an abelian group Cayley table into a hypergroup with singleton
/// entries. Rejects non-group and non-abelian input, naming the violated
/// group axiom.
inline Verified<FiniteCanonicalHypergroup> embed_group(
    const std::vector<std::vector<int>>& cayley, int e,
    std::vector<std::string> labels = {}) {
  Verified<FiniteCanonicalHypergroup> out;
  const int n = int(cayley.size());
  if (n < 1 || n > kCarrierCap) {
    out.diagnostics.add(Diagnostic::fail("group", {}, "carrier size out of range"));
    return out;
  }
  for (int x = 0; x < n; ++x) {
    if (int(cayley[x].size()) != n) {
      out.diagnostics.add(Diagnostic::fail("group", {x}, "ragged Cayley table"));
      return out;
    }
    for (int y = 0; y < n; ++y)
      if (cayley[x][y] < 0 || cayley[x][y] >= n) {
        out.diagnostics.add(Diagnostic::fail(
            "group-closure", {x, y}, "entry out of range at (" +
                                         std::to_string(x) + ", " +
                                         std::to_string(y) + ")"));
        return out;
      }
  }
  for (int x = 0; x < n; ++x)
    if (cayley[e][x] != x || cayley[x][e] != x) {
      out.diagnostics.add(
          Diagnostic::fail("group-identity", {x}, "e is not an identity"));
      return out;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (cayley[x][y] != cayley[y][x]) {
        out.diagnostics.add(Diagnostic::fail("group-commutativity", {x, y},
                                             "xy != yx at (" +
                                                 std::to_string(x) + ", " +
                                                 std::to_string(y) + ")"));
        return out;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (cayley[cayley[x][y]][z] != cayley[x][cayley[y][z]]) {
          out.diagnostics.add(Diagnostic::fail(
              "group-associativity", {x, y, z},
              "(xy)z != x(yz) at (" + std::to_string(x) + ", " +
                  std::to_string(y) + ", " + std::to_string(z) + ")"));
          return out;
        }
  for (int x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < n; ++y) has_inverse |= (cayley[x][y] == e);
    if (!has_inverse) {
      out.diagnostics.add(Diagnostic::fail("group-inverse", {x},
                                           "no inverse for element " +
                                               std::to_string(x)));
      return out;
    }
  }

  HyperOpTable t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t.at(x, y) = SubsetMask::single(cayley[x][y]);
  out = verify_canonical(t, e, std::move(labels));
  return out;
}

/// Cyclic group Z/n embedded as a hypergroup.
inline FiniteCanonicalHypergroup embed_cyclic_group(int n) {
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y) cayley[x][y] = (x + y) % n;
  }
  return *embed_group(cayley, 0, std::move(labels));
}

/// The sign hypergroup on {0, 1, -1} (identity first): 1*(-1) = {-1, 0, 1},
/// 1*1 = {1}, (-1)*(-1) = {-1}.
inline FiniteCanonicalHypergroup sign_hypergroup() {
  // Carrier order: 0 -> "0", 1 -> "1", 2 -> "-1".
  HyperOpTable t(3);
  const int zero = 0, one = 1, minus = 2;
  t.at(zero, zero) = SubsetMask::single(zero);
  t.at(zero, one) = t.at(one, zero) = t.at(one, one) = SubsetMask::single(one);
  t.at(zero, minus) = t.at(minus, zero) = t.at(minus, minus) =
      SubsetMask::single(minus);
  t.at(one, minus) = t.at(minus, one) = SubsetMask::of({zero, one, minus});
  auto v = verify_canonical(t, zero, {"0", "1", "-1"});
  return *v;
}

}  // namespace hyper
