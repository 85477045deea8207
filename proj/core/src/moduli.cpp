#include "conesphere/moduli.hpp"

#include <algorithm>

#include "conesphere/errors.hpp"

namespace conesphere {

namespace {

bool is_positive_integer(const BigRat& q) {
  return q > 0 && boost::multiprecision::denominator(q) == 1;
}

}  // namespace

DeficitList DeficitList::from_values(std::vector<BigRat> values) {
  BigRat sum;
  for (const BigRat& v : values) {
    if (v <= 0 || v >= 2)
      throw Error("deficit " + rational_str(v) + " outside the open interval (0, 2)");
    sum += v;
  }
  if (sum != 4)
    throw Error("deficits sum to " + rational_str(sum) + ", expected 4");
  std::sort(values.begin(), values.end());
  DeficitList out;
  out.deficits = std::move(values);
  return out;
}

DeficitList DeficitList::from_triangulation(const Triangulation& t) {
  if (!t.is_combinatorially_positive())
    throw NotCombinatoriallyPositive("a vertex has more than 6 incident triangles");
  std::vector<BigRat> values;
  for (int k : t.degrees())
    if (k < 6) values.emplace_back(BigRat(6 - k) / 3);
  return from_values(std::move(values));
}

std::vector<PairReport> classify_condition1(const DeficitList& d) {
  std::vector<PairReport> out;
  int n = d.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      BigRat sum = d.deficits[i] + d.deficits[j];
      if (sum >= 2) continue;  // no constraint
      PairReport r;
      r.i = i;
      r.j = j;
      r.ratio = BigRat(2) / (2 - sum);
      if (d.deficits[i] == d.deficits[j])
        r.cls = PairClass::covered_by_condition2;
      else
        r.cls = is_positive_integer(r.ratio) ? PairClass::satisfied : PairClass::violated;
      out.push_back(std::move(r));
    }
  return out;
}

std::vector<PairReport> check_condition1(const DeficitList& d) {
  std::vector<PairReport> out;
  for (PairReport& r : classify_condition1(d))
    if (r.cls == PairClass::violated) out.push_back(std::move(r));
  return out;
}

std::vector<EqualPairReport> classify_condition2(const DeficitList& d) {
  std::vector<EqualPairReport> out;
  int n = d.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(d.deficits[i] == d.deficits[j]) || d.deficits[i] >= 1) continue;
      EqualPairReport r;
      r.i = i;
      r.j = j;
      r.ratio = BigRat(2) / (1 - d.deficits[i]);
      r.satisfied = is_positive_integer(r.ratio);
      out.push_back(std::move(r));
    }
  return out;
}

std::vector<EqualPairReport> check_condition2(const DeficitList& d) {
  std::vector<EqualPairReport> out;
  for (EqualPairReport& r : classify_condition2(d))
    if (!r.satisfied) out.push_back(std::move(r));
  return out;
}

bool is_special(const DeficitList& d) {
  for (const BigRat& v : d.deficits) {
    BigRat tripled = v * 3;
    if (boost::multiprecision::denominator(tripled) != 1) return false;
  }
  return true;
}

CoalesceResult coalesce(const DeficitList& d, const MultiList& m) {
  int n = d.size();
  std::vector<bool> used(n, false);
  std::vector<BigRat> merged;
  int removed = 0;
  for (const std::vector<int>& subset : m.subsets) {
    if (subset.empty()) throw InvalidMultiList("empty subset");
    BigRat alpha;
    for (int idx : subset) {
      if (idx < 0 || idx >= n) throw InvalidMultiList("index out of range");
      if (used[idx]) throw InvalidMultiList("subsets overlap");
      used[idx] = true;
      alpha += d.deficits[idx];
    }
    if (alpha >= 2)
      throw InvalidMultiList("merged deficit " + rational_str(alpha) + " reaches 2");
    merged.push_back(std::move(alpha));
    removed += int(subset.size()) - 1;
  }
  for (int i = 0; i < n; ++i)
    if (!used[i]) merged.push_back(d.deficits[i]);
  CoalesceResult out;
  out.list = DeficitList::from_values(std::move(merged));
  out.codimension = removed;
  return out;
}

}  // namespace conesphere
