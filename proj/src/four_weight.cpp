#include "qc/four_weight.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "qc/reed_muller.hpp"

namespace qc {

namespace {

std::string format_set(const std::vector<int>& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

bool offset_admissible(int n, int a) {
  const int m = length_exponent(n);
  const int half = n / 2;
  if (a <= 0 || a >= half) return false;
  if ((1 << (m - 1)) % a != 0) return false;
  const int root = n / (2 * a);
  return root * root <= n;
}

}  // namespace

int length_exponent(int n) {
  if (n < 4 || n > kMaxLength || !std::has_single_bit(static_cast<unsigned>(n))) {
    throw std::invalid_argument("length " + std::to_string(n) + " is not 2^m with 2 <= m <= 6");
  }
  return std::countr_zero(static_cast<unsigned>(n));
}

const LinearCode& reference_rm(int m) {
  static const std::vector<LinearCode> refs = [] {
    std::vector<LinearCode> v;
    for (int i = 0; i <= 6; ++i) {
      if (i < 1) {
        v.emplace_back();
      } else if (i == 4 || i == 5) {
        v.push_back(rm1_fixed(i));
      } else {
        v.push_back(rm1(i));
      }
    }
    return v;
  }();
  if (m < 1 || m > 6) throw std::out_of_range("reference_rm: m must be in 1..6");
  return refs[static_cast<std::size_t>(m)];
}

std::vector<int> admissible_offsets(int n) {
  std::vector<int> out;
  for (int a = 1; a < n / 2; ++a) {
    if (offset_admissible(n, a)) out.push_back(a);
  }
  return out;
}

WeightDistribution expected_distribution(int n, int m, int k, int a) {
  if (n != (1 << m) || m < 2) throw std::invalid_argument("expected_distribution: n != 2^m");
  if (k < m + 1 || k > n) throw std::invalid_argument("expected_distribution: need m+1 <= k <= n");
  if (!offset_admissible(n, a)) {
    throw std::invalid_argument("expected_distribution: offset a=" + std::to_string(a) +
                                " is not admissible for n=" + std::to_string(n));
  }
  const std::uint64_t root = static_cast<std::uint64_t>(n / (2 * a));
  const std::uint64_t l = root * root;
  const std::uint64_t extra = (std::uint64_t{1} << (k - m - 1)) - 1;
  const auto un = static_cast<std::uint64_t>(n);
  WeightDistribution wd{std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)};
  const auto half = static_cast<std::size_t>(n / 2);
  const auto delta = static_cast<std::size_t>(a);
  wd.counts[0] = 1;
  wd.counts[half - delta] = extra * l;
  wd.counts[half] = 2 * un - 2 + extra * (2 * un - 2 * l);
  wd.counts[half + delta] = extra * l;
  wd.counts[static_cast<std::size_t>(n)] = 1;
  return wd;
}

ConditionReport check_conditions(const LinearCode& c) {
  const int n = c.length();
  const int m = length_exponent(n);
  const int k = c.dimension();
  ConditionReport rep;
  rep.observed = weight_distribution(c);
  rep.weight_set = rep.observed.weight_set();
  const int half = n / 2;

  // Condition (1): exactly {0, n/2 - a, n/2, n/2 + a, n}.
  int a = 0;
  const auto& ws = rep.weight_set;
  const bool shape = ws.size() == 5 && ws[0] == 0 && ws[2] == half && ws[4] == n &&
                     half - ws[1] == ws[3] - half;
  if (shape) {
    a = half - ws[1];
    if (offset_admissible(n, a)) {
      rep.c1 = true;
    } else {
      rep.violations.push_back("condition (1): offset a=" + std::to_string(a) +
                               " is not admissible (need a | 2^(m-1) and (n/2a)^2 <= n)");
    }
  } else {
    rep.violations.push_back("condition (1): weight set " + format_set(ws) +
                             " is not of the form {0,n/2-a,n/2,n/2+a,n}");
  }

  // Condition (2).
  rep.c2 = contains(c, reference_rm(m));
  if (!rep.c2) {
    rep.violations.push_back("condition (2): does not contain the reference RM(1," +
                             std::to_string(m) + ")");
  }

  if (rep.c1 && rep.c2) {
    FourWeightCertificate cert;
    cert.n = n;
    cert.m = m;
    cert.k = k;
    cert.a = a;
    cert.l = (n / (2 * a)) * (n / (2 * a));
    cert.set_size = std::uint64_t{1} << (k - m - 1);
    cert.expected = expected_distribution(n, m, k, a);
    rep.certificate = std::move(cert);
  }
  return rep;
}

}  // namespace qc
