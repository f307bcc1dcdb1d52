#include "sumgraph/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumgraph {
namespace {

long long exact_div(long long num, long long den) {
  if (num % den != 0) throw std::logic_error("exact_div: nonzero remainder");
  return num / den;
}

long long ceil_half(long long x) { return (x + 1) / 2; }

void require(bool ok, const char* msg) {
  if (!ok) throw validation_error(msg);
}

void validate_family(const family_spec& fam) {
  require(fam.n >= 1, "family parameter n must be >= 1");
  if (fam.kind == family_kind::gmn || fam.kind == family_kind::gmn_complement)
    require(fam.m >= 1, "family parameter m must be >= 1");
}

long long order_of(const family_spec& fam) {
  switch (fam.kind) {
    case family_kind::gn:
    case family_kind::gn_complement:
      return fam.n;
    case family_kind::g0n:
    case family_kind::g0n_complement:
      return fam.n + 1;
    case family_kind::gmn:
    case family_kind::gmn_complement:
      return fam.m + fam.n + 1;
  }
  throw validation_error("unknown family kind");
}

// deg(i) in [1,n]: n-i-1 up to the midpoint, n-i beyond it.
long long degree_gn(long long n, long long i) {
  require(1 <= i && i <= n, "label outside the family's range");
  return i <= n / 2 ? n - i - 1 : n - i;
}

// deg(i) in [-r,s] with order N = r+s+1; r = 0 covers the [0,n] family.
long long degree_grs(long long r, long long s, long long i) {
  require(-r <= i && i <= s, "label outside the family's range");
  const long long N = r + s + 1;
  if (i == 0) return N - 1;
  if (i < 0) return -i <= r / 2 ? N + i - 1 : N + i;
  return i <= s / 2 ? N - i - 1 : N - i;
}

long long edge_count_gn(long long n) { return (n - 1) * (n - 1) / 4; }

long long edge_count_g0n(long long n) {
  return exact_div(n * (n + 3) - 2 * (n / 2), 4);
}

long long edge_count_gmn(long long m, long long n) {
  return exact_div(
      m * m + n * n + 3 * (m + n) + 4 * m * n - 2 * (m / 2) - 2 * (n / 2), 4);
}

// Triangles in G_n: (t-2)(t-1)t/3 for n = 2t, (t-1)t(2t-1)/6 for n = 2t+1.
// Small orders fall out as zero through the vanishing factor.
long long c3_gn(long long n) {
  if (n % 2 == 0) {
    const long long t = n / 2;
    return exact_div((t - 2) * (t - 1) * t, 3);
  }
  const long long t = (n - 1) / 2;
  return exact_div((t - 1) * t * (2 * t - 1), 6);
}

// Four-cycles in G_n, same parity split.
long long c4_gn(long long n) {
  if (n % 2 == 0) {
    const long long t = n / 2;
    return t >= 2 ? exact_div((t - 2) * (t - 1) * t * (2 * t - 5), 6) : 0;
  }
  const long long t = (n - 1) / 2;
  return t >= 2 ? exact_div((t - 2) * (t - 1) * t * (2 * t - 1), 6) : 0;
}

// Four-cycles in G_{-2a,2b}.
long long c4_even_even(long long a, long long b) {
  const long long num = 2 * (a * a * a * a + b * b * b * b) -
                        3 * (a * a * a + b * b * b) - 2 * (a * a + b * b) +
                        3 * (a + b) + 16 * a * b * (a * a + b * b) +
                        36 * a * a * b * b - 18 * a * b * (a + b) - 2 * a * b;
  return exact_div(num, 6);
}

// Four-cycles in G_{-2a,2b+1}; the mirrored odd/even case swaps arguments.
long long c4_even_odd(long long a, long long b) {
  const long long num = 2 * a * a * a * a + 5 * a * a * a + a * a - 2 * a +
                        2 * b * b * b * b + b * b * b - 2 * b * b - b +
                        16 * a * b * (a * a + b * b) + 36 * a * a * b * b +
                        18 * a * a * b + 6 * a * b * b - 2 * a * b;
  return exact_div(num, 6);
}

// Four-cycles in G_{-(2a+1),2b+1}.
long long c4_odd_odd(long long a, long long b) {
  const long long num = 2 * (a * a * a * a + b * b * b * b) +
                        9 * (a * a * a + b * b * b) + 13 * (a * a + b * b) +
                        6 * (a + b) + 16 * a * b * (a * a + b * b) +
                        36 * a * a * b * b + 42 * a * b * (a + b) + 34 * a * b;
  return exact_div(num, 6);
}

void check_agreement(long long lhs, long long rhs, const char* what) {
  if (lhs != rhs) throw std::logic_error(what);
}

}  // namespace

long long degree(const family_spec& fam, long long i) {
  validate_family(fam);
  switch (fam.kind) {
    case family_kind::gn:
      return degree_gn(fam.n, i);
    case family_kind::g0n:
      return degree_grs(0, fam.n, i);
    case family_kind::gmn:
      return degree_grs(fam.m, fam.n, i);
    case family_kind::gn_complement:
      return fam.n - 1 - degree_gn(fam.n, i);
    case family_kind::g0n_complement:
      return fam.n - degree_grs(0, fam.n, i);
    case family_kind::gmn_complement:
      return fam.m + fam.n - degree_grs(fam.m, fam.n, i);
  }
  throw validation_error("unknown family kind");
}

long long edge_count(const family_spec& fam) {
  validate_family(fam);
  const long long N = order_of(fam);
  const long long full = N * (N - 1) / 2;
  switch (fam.kind) {
    case family_kind::gn:
      return edge_count_gn(fam.n);
    case family_kind::g0n:
      return edge_count_g0n(fam.n);
    case family_kind::gmn:
      return edge_count_gmn(fam.m, fam.n);
    case family_kind::gn_complement:
      return full - edge_count_gn(fam.n);
    case family_kind::g0n_complement:
      return full - edge_count_g0n(fam.n);
    case family_kind::gmn_complement:
      return full - edge_count_gmn(fam.m, fam.n);
  }
  throw validation_error("unknown family kind");
}

long long c3_count(long long m, long long n, graph_side which) {
  require(m >= 1 && n >= 1, "triangle count needs m, n >= 1");
  if (which == graph_side::complement) {
    // The complement splits into the two halves' complements plus an isolated
    // vertex, so the count is the sum of two single-interval counts.
    auto half = [](long long k) {
      if (k % 2 == 0) {
        const long long t = k / 2;
        return exact_div((t - 1) * t * (2 * t - 1), 6);
      }
      const long long t = (k - 1) / 2;
      return exact_div((t - 1) * t * (t + 1), 3);
    };
    const long long value = half(m) + half(n);
    check_agreement(value, c3_gn(m + 1) + c3_gn(n + 1),
                    "complement triangle split disagrees with shift identity");
    return value;
  }
  const bool modd = m % 2 != 0, nodd = n % 2 != 0;
  if (!modd && !nodd) {
    const long long a = m / 2, b = n / 2;
    return exact_div((a + b) * (a * a + 5 * a * b + b * b - 1), 3);
  }
  if (modd && nodd) {
    const long long a = (m - 1) / 2, b = (n - 1) / 2, s = a + b;
    return exact_div(s * (2 * s * s + 9 * s + 6 * a * b + 13), 6) + a * b + 1;
  }
  // Mixed parity; the graph is mirror-symmetric in (m, n), so orient the even
  // side first.
  const long long a = modd ? n / 2 : m / 2;
  const long long b = modd ? (m - 1) / 2 : (n - 1) / 2;
  return exact_div(2 * (a * a * a + b * b * b) + 12 * a * b * (a + b) +
                       3 * (2 * a * a + b * b + 4 * a * b) + 4 * a + b,
                   6);
}

long long triangle_count(const family_spec& fam) {
  validate_family(fam);
  switch (fam.kind) {
    case family_kind::gn:
      return c3_gn(fam.n);
    case family_kind::gn_complement:
      return c3_gn(fam.n + 1);
    case family_kind::g0n:
      // [0,n] is [1,n+2] with its isolated top vertex removed.
      return c3_gn(fam.n + 2);
    case family_kind::g0n_complement:
      return c3_gn(fam.n + 1);
    case family_kind::gmn:
      return c3_count(fam.m, fam.n, graph_side::primal);
    case family_kind::gmn_complement:
      return c3_count(fam.m, fam.n, graph_side::complement);
  }
  throw validation_error("unknown family kind");
}

long long c4_count(const family_spec& fam) {
  validate_family(fam);
  switch (fam.kind) {
    case family_kind::gn:
      return c4_gn(fam.n);
    case family_kind::gn_complement:
      return c4_gn(fam.n + 1);
    case family_kind::g0n:
      return c4_gn(fam.n + 2);
    case family_kind::g0n_complement:
      throw validation_error("four-cycle count not supported for this family");
    case family_kind::gmn_complement:
      return c4_gn(fam.m + 1) + c4_gn(fam.n + 1);
    case family_kind::gmn:
      break;
  }
  const long long m = fam.m, n = fam.n;
  const bool modd = m % 2 != 0, nodd = n % 2 != 0;
  long long value;
  if (!modd && !nodd)
    value = c4_even_even(m / 2, n / 2);
  else if (modd && nodd)
    value = c4_odd_odd((m - 1) / 2, (n - 1) / 2);
  else if (!modd)
    value = c4_even_odd(m / 2, (n - 1) / 2);
  else
    value = c4_even_odd(n / 2, (m - 1) / 2);
  // [-1,n] is [1,n+4] with two vertices peeled off that lie on no four-cycle.
  if (m == 1)
    check_agreement(value, c4_gn(n + 4), "[-1,n] four-cycle shift identity");
  if (n == 1)
    check_agreement(value, c4_gn(m + 4), "[-m,1] four-cycle shift identity");
  return value;
}

long long open_p3_count(long long n) {
  require(n >= 1, "open path count needs n >= 1");
  if (n % 2 == 0) {
    const long long k = n / 2;
    return exact_div((k - 1) * k * (2 * k - 1), 6);
  }
  const long long k = (n - 1) / 2;
  return exact_div((k - 1) * k * (k + 1), 3);
}

long long max_isg_size(long long order) {
  require(order >= 1, "order must be >= 1");
  const long long k = order - 1;
  return (3 * k * k + 7) / 8 + (k + 1) / 2;
}

invariant_record family_invariants(const family_spec& fam) {
  validate_family(fam);
  invariant_record rec;
  if (fam.kind == family_kind::gn) {
    const long long n = fam.n;
    rec.omega = ceil_half(n);
    rec.chi = rec.omega;
    rec.chi_prime = n >= 2 ? n - 2 : 0;
    rec.alpha0 = ceil_half(n) - 1;
    rec.beta0 = n / 2 + 1;
    rec.alpha1 = std::nullopt;  // the top label is isolated
    rec.beta1 = ceil_half(n) - 1;
    return rec;
  }
  long long r;
  if (fam.kind == family_kind::g0n)
    r = 0;
  else if (fam.kind == family_kind::gmn)
    r = fam.m;
  else
    throw validation_error("invariants are defined for the primal families");
  const long long n = fam.n;
  rec.omega = 1 + ceil_half(r) + ceil_half(n);
  rec.chi = rec.omega;
  // Class 1 throughout, except [-1,1] which is an odd triangle.
  rec.chi_prime = (r == 1 && n == 1) ? 3 : r + n;
  const long long lo = std::min(r, n), hi = std::max(r, n);
  rec.alpha0 = lo + ceil_half(hi);
  rec.beta0 = hi / 2 + 1;
  rec.alpha1 = ceil_half(r + n + 1);
  rec.beta1 = (r + n + 1) / 2;
  return rec;
}

std::optional<long long> count_value(const count_query& q) {
  switch (q.quantity) {
    case quantity_kind::degree:
      return degree(q.family, q.degree_label);
    case quantity_kind::edge_count:
      return edge_count(q.family);
    case quantity_kind::c3:
      return triangle_count(q.family);
    case quantity_kind::c4:
      return c4_count(q.family);
    case quantity_kind::open_p3:
      if (q.family.kind != family_kind::gn)
        throw validation_error("open path counts are defined for the positive-interval family only");
      return open_p3_count(q.family.n);
    case quantity_kind::max_size:
      return max_isg_size(order_of(q.family));
    case quantity_kind::omega:
      return family_invariants(q.family).omega;
    case quantity_kind::chi:
      return family_invariants(q.family).chi;
    case quantity_kind::chi_prime:
      return family_invariants(q.family).chi_prime;
    case quantity_kind::alpha0:
      return family_invariants(q.family).alpha0;
    case quantity_kind::beta0:
      return family_invariants(q.family).beta0;
    case quantity_kind::alpha1:
      return family_invariants(q.family).alpha1;
    case quantity_kind::beta1:
      return family_invariants(q.family).beta1;
  }
  throw validation_error("unknown quantity");
}

}  // namespace sumgraph
