#include "dormant/enumeration.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

#include "dormant/errors.hpp"
#include "dormant/linalg.hpp"

namespace dormant {

RadiusLabel canonical_radius(int64_t difference, uint32_t p) {
  const int64_t e = ((difference % p) + p) % p;
  return static_cast<RadiusLabel>(std::min<int64_t>(e, p - e));
}

RadiiTriple radii_of(const CompanionOper& oper) {
  if (oper.order() != 2) throw PreconditionViolated("radii_of: order must be 2");
  const uint32_t p = oper.modulus();
  RadiiTriple out{};
  const MarkedPoint points[] = {MarkedPoint::Zero, MarkedPoint::One, MarkedPoint::Infinity};
  for (int i = 0; i < 3; ++i) {
    const auto e = exponents(oper, points[i]).exponents;
    out[static_cast<std::size_t>(i)] =
        canonical_radius(static_cast<int64_t>(e[1].value()) - e[0].value(), p);
  }
  return out;
}

NTable::Key NTable::sorted(RadiusLabel a, RadiusLabel b, RadiusLabel c) {
  Key k{a, b, c};
  std::sort(k.begin(), k.end());
  return k;
}

int64_t NTable::count(RadiusLabel a, RadiusLabel b, RadiusLabel c) const {
  const auto it = counts_.find(sorted(a, b, c));
  return it == counts_.end() ? 0 : it->second;
}

void NTable::add_label(RadiusLabel a) {
  if (a < 0) throw PreconditionViolated("NTable: negative label " + std::to_string(a));
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), a);
  if (it == labels_.end() || *it != a) labels_.insert(it, a);
}

void NTable::set(RadiusLabel a, RadiusLabel b, RadiusLabel c, int64_t count) {
  if (count < 0) throw PreconditionViolated("NTable: negative count");
  const Key k = sorted(a, b, c);
  if (count == 0) {
    counts_.erase(k);
    return;
  }
  for (RadiusLabel l : k) add_label(l);
  counts_[k] = count;
}

int64_t NTable::total() const {
  int64_t sum = 0;
  for (const auto& [k, n] : counts_) {
    const int64_t orderings = (k[0] == k[2]) ? 1 : (k[0] == k[1] || k[1] == k[2]) ? 3 : 6;
    sum += n * orderings;
  }
  return sum;
}

bool is_dormant_sl2(const Polynomial& f) {
  const uint32_t p = f.modulus();
  const Polynomial q = pth_power_factor(p);
  // nabla(u, v) = (d u + f v, d v - u)
  auto step = [&](const std::array<Polynomial, 2>& w) {
    return std::array<Polynomial, 2>{theta_derivative(w[0]) + f * w[1],
                                     theta_derivative(w[1]) - w[0]};
  };
  for (int j = 0; j < 2; ++j) {
    std::array<Polynomial, 2> e{Polynomial(p), Polynomial(p)};
    e[static_cast<std::size_t>(j)] = Polynomial::constant(p, 1);
    const auto once = step(e);
    auto iter = once;
    for (uint32_t k = 1; k < p; ++k) iter = step(iter);
    if (!(iter[0] == q * once[0]) || !(iter[1] == q * once[1])) return false;
  }
  return true;
}

namespace {

std::vector<DormantWitness> sweep_shard(uint32_t p, uint32_t c2) {
  std::vector<DormantWitness> out;
  for (uint32_t c1 = 0; c1 < p; ++c1)
    for (uint32_t c0 = 0; c0 < p; ++c0) {
      Polynomial f(p, {c0, c1, c2});
      if (!is_dormant_sl2(f)) continue;
      CompanionOper oper(p, 2, {f});
      try {
        out.push_back({oper, radii_of(oper)});
      } catch (const NotSplit&) {
        throw UnexpectedExponents("dormant oper with f_2 = " + f.to_string() +
                                  " has non-rational exponents");
      }
    }
  return out;
}

}  // namespace

Enumeration enumerate_dormant_sl2(uint32_t p, unsigned threads) {
  require_odd_prime(p);
  if (p < 5) throw PreconditionViolated("enumerate_dormant_sl2: p must be at least 5");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<std::vector<DormantWitness>> shards(p);
  if (threads == 1) {
    for (uint32_t c2 = 0; c2 < p; ++c2) shards[c2] = sweep_shard(p, c2);
  } else {
    for (uint32_t start = 0; start < p; start += threads) {
      std::vector<std::future<std::vector<DormantWitness>>> jobs;
      for (uint32_t c2 = start; c2 < std::min<uint32_t>(p, start + threads); ++c2)
        jobs.push_back(std::async(std::launch::async, sweep_shard, p, c2));
      for (uint32_t i = 0; i < jobs.size(); ++i) shards[start + i] = jobs[i].get();
    }
  }

  Enumeration result{{}, NTable(p)};
  std::map<RadiiTriple, int64_t> ordered;
  for (auto& shard : shards)
    for (auto& w : shard) {
      ++ordered[w.radii];
      result.witnesses.push_back(std::move(w));
    }
  for (const auto& [t, n] : ordered) {
    std::array<RadiusLabel, 3> perm = t;
    std::sort(perm.begin(), perm.end());
    do {
      const auto it = ordered.find(perm);
      if (it == ordered.end() || it->second != n)
        throw UnexpectedExponents("dormant counts are not symmetric under relabeling the points");
    } while (std::next_permutation(perm.begin(), perm.end()));
    result.table.set(t[0], t[1], t[2], n);
  }
  return result;
}

}  // namespace dormant
