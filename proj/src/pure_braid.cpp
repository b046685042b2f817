#include "bu/pure_braid.hpp"

#include "bu/errors.hpp"
#include "bu/garside.hpp"

namespace bu {

PureBraid::PureBraid(BraidWord word) : word_(std::move(word)) {
  if (!permutation(word_).is_identity()) throw DomainError("braid is not pure: " + word_.to_string());
}

PureBraid operator*(const PureBraid& a, const PureBraid& b) {
  return PureBraid(a.word_ * b.word_, PureBraid::Unchecked{});
}

PureBraid PureBraid::inverse() const { return PureBraid(word_.inverse(), Unchecked{}); }

PureBraid a_gen(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw InputError("A_{i,j} needs 1 <= i < j <= n, got i=" + std::to_string(i) + " j=" + std::to_string(j) +
                     " n=" + std::to_string(n));
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return PureBraid(BraidWord(n, std::move(letters)));
}

BraidWord a_gen_alternative(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw InputError("A_{i,j} needs 1 <= i < j <= n");
  std::vector<int> letters;
  for (int k = i; k <= j - 2; ++k) letters.push_back(-k);
  letters.push_back(j - 1);
  letters.push_back(j - 1);
  for (int k = j - 2; k >= i; --k) letters.push_back(k);
  return BraidWord(n, std::move(letters));
}

long long epsilon(const PureBraid& p) { return exponent_sum(p.word()) / 2; }

long long epsilon(const BraidWord& w) { return epsilon(PureBraid(w)); }

PureBraid full_twist(int n) {
  if (n < 2) throw InputError("full twist needs n >= 2");
  PureBraid result{BraidWord(n)};
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) result = result * a_gen(i, j, n);
  return result;
}

CheckRecord check_braid_identity(const std::string& relation, std::vector<int> indices, const BraidWord& lhs,
                           const BraidWord& rhs) {
  CheckRecord r;
  r.relation = relation;
  r.indices = std::move(indices);
  r.lhs_word = lhs.to_string();
  r.rhs_word = rhs.to_string();
  r.pass = equal(lhs, rhs);
  return r;
}

Report check_relations_I(int n) {
  if (n < 2) throw InputError("relation check needs n >= 2");
  Report report;
  auto A = [n](int i, int j) { return a_gen(i, j, n).word(); };
  auto Ainv = [n](int i, int j) { return a_gen(i, j, n).word().inverse(); };
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const BraidWord lhs = Ainv(r, s) * A(i, j) * A(r, s);
          std::string relation;
          BraidWord rhs(n);
          if (r < s && s < i && i < j) {
            relation = "I.disjoint";
            rhs = A(i, j);
          } else if (i < r && r < s && s < j) {
            relation = "I.nested";
            rhs = A(i, j);
          } else if (r < i && i == s && s < j) {
            relation = "I.shared_middle";
            rhs = A(r, j) * A(i, j) * Ainv(r, j);
          } else if (i == r && r < s && s < j) {
            relation = "I.shared_left";
            rhs = A(r, j) * A(s, j) * A(i, j) * Ainv(s, j) * Ainv(r, j);
          } else if (r < i && i < s && s < j) {
            relation = "I.interleaved";
            rhs = A(r, j) * A(s, j) * Ainv(r, j) * Ainv(s, j) * A(i, j) * A(s, j) * A(r, j) * Ainv(s, j) *
                  Ainv(r, j);
          } else {
            continue;
          }
          report.add(check_braid_identity(relation, {r, s, i, j}, lhs, rhs));
        }
  return report;
}

}  // namespace bu
