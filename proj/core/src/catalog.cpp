#include "modalg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "modalg/error.hpp"
#include "modalg/fp_vector.hpp"
#include "modalg/group_ops.hpp"

namespace modalg {

namespace {

std::size_t checked_pow(unsigned p, int n) {
  if (n < 0) throw InvalidInput("negative exponent");
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) {
    r *= p;
    if (r > kMaxGroupOrder) throw InvalidInput("requested group order exceeds 256");
  }
  return r;
}

bool is_power_of(std::size_t n, unsigned p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

PGroup from_rule(unsigned p, std::size_t n, const std::function<Element(Element, Element)>& mul,
                 std::string name) {
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) flat[a * n + b] = mul(a, b);
  return PGroup::from_flat_table(p, n, std::move(flat), std::move(name));
}

PGroup cyclic(unsigned p, std::size_t n, std::string name) {
  return from_rule(p, n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
                   std::move(name));
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e--) r = (r * b) % m;
  return r;
}

// a^i b^j encoded as j*m + i.
PGroup metacyclic(unsigned p, std::size_t m, std::size_t q, std::size_t t, std::size_t r, std::string name) {
  if (m == 0 || q == 0 || m * q > kMaxGroupOrder) throw InvalidInput("metacyclic: order out of range");
  if (powmod(r, q, m) != 1 % m || (t * r) % m != t % m || std::gcd(r, m) != 1)
    throw InvalidInput("metacyclic: inconsistent parameters");
  return from_rule(p, m * q,
                   [=](Element x, Element y) {
                     const std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
                     std::uint64_t a = i + k * powmod(r, j, m);
                     std::uint64_t bexp = j + l;
                     if (bexp >= q) {
                       bexp -= q;
                       a += t;
                     }
                     return static_cast<Element>(bexp * m + a % m);
                   },
                   std::move(name));
}

PGroup heisenberg(unsigned p) {
  const std::size_t n = std::size_t{p} * p * p;
  // (a, b, c) encoded as (c * p + b) * p + a; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  return from_rule(p, n,
                   [p](Element x, Element y) {
                     const unsigned a = x % p, b = (x / p) % p, c = x / (p * p);
                     const unsigned a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
                     const unsigned ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
                     return static_cast<Element>((rc * p + rb) * p + ra);
                   },
                   "Heis" + std::to_string(p));
}

// Central product identifying a generator of Z(a) with the inverse of one of Z(b).
PGroup central_product(const PGroup& a, const PGroup& b, std::string name) {
  auto central_generator = [](const PGroup& g) {
    const Subgroup z = center(g);
    for (Element x : z.elements())
      if (g.element_order(x) == g.prime()) return x;
    throw InvalidInput("central_product: no central element of order p");
  };
  const Element za = central_generator(a), zb = central_generator(b);
  const PGroup prod = direct_product(a, b);
  const Element pair = static_cast<Element>(za * b.order() + b.inv(zb));
  const Subgroup n = Subgroup::generated(prod, std::span<const Element>(&pair, 1));
  return quotient_group(prod, n).group.renamed(std::move(name));
}

PGroup extraspecial(unsigned p, int n, int sign) {
  if (n < 1) throw InvalidInput("extraspecial: n must be >= 1");
  const std::size_t order = checked_pow(p, 1 + 2 * n);
  (void)order;
  const std::string name = "E" + std::to_string(checked_pow(p, 1 + 2 * n)) + (sign > 0 ? "+" : "-");
  PGroup base;
  PGroup first;
  if (p == 2) {
    base = metacyclic(2, 4, 2, 0, 3, "D8");
    first = sign > 0 ? base : metacyclic(2, 4, 2, 2, 3, "Q8");
  } else {
    base = heisenberg(p);
    first = sign > 0 ? base : metacyclic(p, std::size_t{p} * p, p, 0, 1 + p, "M" + std::to_string(p * p * p));
  }
  PGroup g = first;
  for (int i = 1; i < n; ++i) g = central_product(g, base, name);
  return g.renamed(name);
}

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("cannot parse group spec '" + std::string(whole) + "'");
  return std::stoi(std::string(s));
}

unsigned prime_of(std::size_t order, std::string_view whole) {
  for (unsigned p : {2u, 3u, 5u})
    if (order > 1 && is_power_of(order, p)) return p;
  throw InvalidInput("group spec '" + std::string(whole) + "' does not describe a p-group for p in {2,3,5}");
}

int log_p(std::size_t order, unsigned p) {
  int k = 0;
  while (order > 1) {
    order /= p;
    ++k;
  }
  return k;
}

PGroup parse_single(std::string_view spec, unsigned p_hint) {
  std::string_view body = spec;
  int power = 1;
  if (auto caret = body.find('^'); caret != std::string_view::npos && body.substr(0, 1) != "E") {
    power = parse_int(body.substr(caret + 1), spec);
    body = body.substr(0, caret);
  }
  PGroup g;
  auto starts = [&](std::string_view prefix) { return body.substr(0, prefix.size()) == prefix; };
  if (starts("Meta(")) {
    if (body.back() != ')') throw InvalidInput("cannot parse group spec '" + std::string(spec) + "'");
    std::vector<int> args;
    std::string_view inner = body.substr(5, body.size() - 6);
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      auto comma = inner.find(',', pos);
      if (comma == std::string_view::npos) comma = inner.size();
      args.push_back(parse_int(inner.substr(pos, comma - pos), spec));
      pos = comma + 1;
    }
    if (args.size() != 4) throw InvalidInput("Meta(m,q,t,r) needs four integers");
    const unsigned p = prime_of(static_cast<std::size_t>(args[0]) * static_cast<std::size_t>(args[1]), spec);
    const int params[] = {static_cast<int>(p), args[0], args[1], args[2], args[3]};
    g = catalog_build("metacyclic", params);
  } else if (starts("Heis")) {
    const int params[] = {parse_int(body.substr(4), spec)};
    g = catalog_build("heisenberg", params);
  } else if (starts("SD")) {
    const int params[] = {parse_int(body.substr(2), spec)};
    g = catalog_build("semidihedral", params);
  } else if (starts("E")) {
    const char sign = body.back();
    if (sign != '+' && sign != '-') throw InvalidInput("extraspecial spec needs a trailing + or -");
    const auto order = static_cast<std::size_t>(parse_int(body.substr(1, body.size() - 2), spec));
    const unsigned p = prime_of(order, spec);
    const int k = log_p(order, p);
    if (k < 3 || k % 2 == 0) throw InvalidInput("extraspecial order must be p^(1+2n)");
    const int params[] = {static_cast<int>(p), (k - 1) / 2, sign == '+' ? 1 : -1};
    g = catalog_build("extraspecial", params);
  } else if (starts("C")) {
    const auto order = static_cast<std::size_t>(parse_int(body.substr(1), spec));
    if (order == 1) {
      g = PGroup::trivial(p_hint);
    } else {
      const unsigned p = prime_of(order, spec);
      const int params[] = {static_cast<int>(p), log_p(order, p)};
      g = catalog_build("cyclic", params);
    }
  } else if (starts("D")) {
    const int params[] = {parse_int(body.substr(1), spec)};
    g = catalog_build("dihedral", params);
  } else if (starts("Q")) {
    const int params[] = {parse_int(body.substr(1), spec)};
    g = catalog_build("quaternion", params);
  } else if (starts("M")) {
    const auto order = static_cast<std::size_t>(parse_int(body.substr(1), spec));
    const unsigned p = prime_of(order, spec);
    const int params[] = {static_cast<int>(p), log_p(order, p)};
    g = catalog_build("modular_maximal_cyclic", params);
  } else {
    throw InvalidInput("unknown group family in spec '" + std::string(spec) + "'");
  }
  PGroup result = g;
  for (int i = 1; i < power; ++i) result = direct_product(result, g);
  return result.renamed(std::string(spec));
}

}  // namespace

PGroup catalog_build(std::string_view family, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidInput(std::string(family) + ": expected " + std::to_string(k) + " parameters");
  };
  auto prime = [&](int p) {
    if (p <= 0 || !is_supported_prime(static_cast<unsigned>(p)))
      throw InvalidInput(std::string(family) + ": unsupported prime " + std::to_string(p));
    return static_cast<unsigned>(p);
  };
  auto two_power_order = [&](int order, int min) {
    if (order < min || order > static_cast<int>(kMaxGroupOrder) || !is_power_of(static_cast<std::size_t>(order), 2))
      throw InvalidInput(std::string(family) + ": order must be a power of 2 between " + std::to_string(min) +
                         " and 256");
    return static_cast<std::size_t>(order);
  };
  if (family == "cyclic") {
    need(2);
    const unsigned p = prime(params[0]);
    const std::size_t n = checked_pow(p, params[1]);
    return cyclic(p, n, n == 1 ? "C1" : "C" + std::to_string(n));
  }
  if (family == "abelian") {
    if (params.empty()) throw InvalidInput("abelian: expected a prime and exponents");
    const unsigned p = prime(params[0]);
    PGroup g = PGroup::trivial(p);
    std::string name;
    for (std::size_t i = 1; i < params.size(); ++i) {
      const std::size_t n = checked_pow(p, params[i]);
      g = i == 1 ? cyclic(p, n, "") : direct_product(g, cyclic(p, n, ""));
      name += (i == 1 ? "C" : "xC") + std::to_string(n);
    }
    return g.renamed(name.empty() ? "C1" : name);
  }
  if (family == "dihedral") {
    need(1);
    const std::size_t n = two_power_order(params[0], 4);
    return metacyclic(2, n / 2, 2, 0, n / 2 - 1, "D" + std::to_string(n));
  }
  if (family == "quaternion") {
    need(1);
    const std::size_t n = two_power_order(params[0], 8);
    return metacyclic(2, n / 2, 2, n / 4, n / 2 - 1, "Q" + std::to_string(n));
  }
  if (family == "semidihedral") {
    need(1);
    const std::size_t n = two_power_order(params[0], 16);
    return metacyclic(2, n / 2, 2, 0, n / 4 - 1, "SD" + std::to_string(n));
  }
  if (family == "modular_maximal_cyclic") {
    need(2);
    const unsigned p = prime(params[0]);
    const int n = params[1];
    if (n < 3 || (p == 2 && n < 4)) throw InvalidInput("modular_maximal_cyclic: n too small");
    const std::size_t order = checked_pow(p, n);
    const std::size_t m = order / p;
    return metacyclic(p, m, p, 0, 1 + m / p, "M" + std::to_string(order));
  }
  if (family == "heisenberg") {
    need(1);
    const unsigned p = prime(params[0]);
    return heisenberg(p);
  }
  if (family == "extraspecial") {
    need(3);
    const unsigned p = prime(params[0]);
    if (params[2] != 1 && params[2] != -1) throw InvalidInput("extraspecial: sign must be +1 or -1");
    return extraspecial(p, params[1], params[2]);
  }
  if (family == "metacyclic") {
    need(5);
    const unsigned p = prime(params[0]);
    for (std::size_t i = 1; i < 5; ++i)
      if (params[i] < 0) throw InvalidInput("metacyclic: negative parameter");
    const auto m = static_cast<std::size_t>(params[1]), q = static_cast<std::size_t>(params[2]);
    if (!is_power_of(m * q, p)) throw InvalidInput("metacyclic: order is not a power of p");
    std::ostringstream name;
    name << "Meta(" << params[1] << "," << params[2] << "," << params[3] << "," << params[4] << ")";
    return metacyclic(p, m, q, static_cast<std::size_t>(params[3]), static_cast<std::size_t>(params[4]), name.str());
  }
  if (family == "direct_product")
    throw InvalidInput("direct_product takes groups; use direct_product() or a product spec such as C2xD8");
  throw InvalidInput("unknown group family '" + std::string(family) + "'");
}

std::vector<std::string> split_product_spec(std::string_view spec) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : spec) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  for (const auto& part : parts)
    if (part.empty()) throw InvalidInput("empty factor in group spec '" + std::string(spec) + "'");
  return parts;
}

PGroup parse_group_spec(std::string_view spec, unsigned p) {
  const auto parts = split_product_spec(spec);
  PGroup g = parse_single(parts.front(), p);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parse_single(parts[i], p));
  return g.renamed(std::string(spec));
}

std::vector<CatalogEntry> standard_catalog(unsigned p, std::size_t max_order) {
  static const std::vector<CatalogEntry> all = {
      // p = 2
      {"C2", 2, 2}, {"C4", 2, 4}, {"C2^2", 2, 4},
      {"C8", 2, 8}, {"C4xC2", 2, 8}, {"C2^3", 2, 8}, {"D8", 2, 8}, {"Q8", 2, 8},
      {"C16", 2, 16}, {"C8xC2", 2, 16}, {"C4^2", 2, 16}, {"C4xC2^2", 2, 16}, {"C2^4", 2, 16},
      {"D16", 2, 16}, {"Q16", 2, 16}, {"SD16", 2, 16}, {"M16", 2, 16}, {"C2xD8", 2, 16},
      {"C2xQ8", 2, 16}, {"Meta(4,4,0,3)", 2, 16},
      {"C32", 2, 32}, {"C16xC2", 2, 32}, {"C8xC4", 2, 32}, {"C8xC2^2", 2, 32}, {"C4^2xC2", 2, 32},
      {"C4xC2^3", 2, 32}, {"C2^5", 2, 32}, {"D32", 2, 32}, {"Q32", 2, 32}, {"SD32", 2, 32},
      {"M32", 2, 32}, {"C2xD16", 2, 32}, {"C2xQ16", 2, 32}, {"C2xSD16", 2, 32}, {"C2xM16", 2, 32},
      {"C4xD8", 2, 32}, {"C4xQ8", 2, 32}, {"C2^2xD8", 2, 32}, {"C2^2xQ8", 2, 32}, {"E32+", 2, 32},
      {"E32-", 2, 32}, {"Meta(8,4,0,7)", 2, 32}, {"C2xMeta(4,4,0,3)", 2, 32},
      {"C64", 2, 64}, {"C8^2", 2, 64}, {"C4^3", 2, 64}, {"C2^6", 2, 64}, {"D64", 2, 64},
      {"Q64", 2, 64}, {"SD64", 2, 64}, {"M64", 2, 64}, {"D8xD8", 2, 64}, {"Q8xQ8", 2, 64},
      {"C2xE32+", 2, 64}, {"C4xD16", 2, 64}, {"C8xQ8", 2, 64},
      // p = 3
      {"C3", 3, 3}, {"C9", 3, 9}, {"C3^2", 3, 9},
      {"C27", 3, 27}, {"C9xC3", 3, 27}, {"C3^3", 3, 27}, {"Heis3", 3, 27}, {"M27", 3, 27},
      {"C81", 3, 81}, {"C9^2", 3, 81}, {"C3xHeis3", 3, 81}, {"C3xM27", 3, 81}, {"M81", 3, 81},
      // p = 5
      {"C5", 5, 5}, {"C25", 5, 25}, {"C5^2", 5, 25}, {"Heis5", 5, 125},
  };
  std::vector<CatalogEntry> out;
  for (const auto& e : all)
    if (e.p == p && e.order <= max_order) out.push_back(e);
  return out;
}

}  // namespace modalg
