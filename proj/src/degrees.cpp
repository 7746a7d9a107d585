#include "rfg/degrees.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rfg {

DegreeSequence DegreeSequence::from_signed(const std::vector<std::int64_t>& raw) {
  std::vector<std::uint32_t> d;
  d.reserve(raw.size());
  for (std::int64_t v : raw) {
    if (v < 0)
      throw Error(Errc::NegativeDegree, "degree " + std::to_string(v) + " is negative");
    d.push_back(std::uint32_t(v));
  }
  return from(std::move(d));
}

DegreeSequence DegreeSequence::from(std::vector<std::uint32_t> d) {
  if (d.empty()) throw Error(Errc::DomainError, "empty degree sequence");
  std::uint64_t sum = 0;
  for (std::uint32_t v : d) sum += v;
  if (sum != d.size())
    throw Error(Errc::SumMismatch, "sum(d) = " + std::to_string(sum) + " but n = " +
                                       std::to_string(d.size()));
  return DegreeSequence(std::move(d));
}

std::vector<std::uint32_t> DegreeSequence::degrees_without(Vertex v) const {
  std::vector<std::uint32_t> out;
  out.reserve(d_.size() - 1);
  out.insert(out.end(), d_.begin(), d_.begin() + v);
  out.insert(out.end(), d_.begin() + v + 1, d_.end());
  return out;
}

DegreeStats stats(const DegreeSequence& ds) {
  DegreeStats s;
  auto m = kernels::degree_moments(ds.degrees());
  s.n = ds.n();
  s.delta = m.max;
  s.m1 = m.m1;
  s.m2 = m.m2;
  s.m3 = m.m3;
  s.num_deg0 = m.zeros;
  s.num_deg1 = m.ones;
  BigInt m2z = u128_to_mpz(m.m2);
  s.sigma2 = BigRat(m2z, BigInt(std::uint64_t(s.n)));
  s.sigma2 -= 1;
  s.sigma2.canonicalize();
  s.sigma2_d = s.sigma2.get_d();
  s.n_sigma2 = m2z - BigInt(std::uint64_t(s.n));
  return s;
}

AssumptionReport check_assumptions(const DegreeSequence& ds) {
  DegreeStats st = stats(ds);
  AssumptionReport r;
  r.n = st.n;
  r.sigma2 = st.sigma2_d;
  r.delta = st.delta;

  double n = double(st.n);
  double s2 = st.sigma2_d;
  double ns2 = s2 * n;
  double del = double(st.delta);
  double ln = std::log(n);
  bool degen = s2 <= 0.0;

  auto add = [&](std::string name, std::string detail, double lhs, double rhs, bool small) {
    AssumptionRatio a;
    a.name = std::move(name);
    a.detail = std::move(detail);
    a.lhs = lhs;
    a.rhs = rhs;
    a.ratio = rhs != 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity();
    a.want_small = small;
    a.degenerate = degen;
    r.items.push_back(std::move(a));
  };

  add("A1-upper", "sigma2 / n", s2, n, true);
  add("A1-lower", "n*sigma2 (want large)", ns2, 1.0, false);
  add("A2", "delta / sqrt(n*sigma2)", del, std::sqrt(ns2), true);
  add("B1-upper", "sigma2 * log(n)^3 / n", s2 * ln * ln * ln, n, true);
  add("B1-lower", "n*sigma2 (want large)", ns2, 1.0, false);
  add("B2", "delta * log(n)^{3/2} / sqrt(n*sigma2)", del * std::pow(ln, 1.5), std::sqrt(ns2),
      true);
  add("A+", "sigma2 * n^{1/3} / log(n)", s2 * std::cbrt(n), ln, false);
  add("A-", "sigma2 * n^{1/3} / log(n)^2", s2 * std::cbrt(n), ln * ln, true);
  return r;
}

DegreeSequence generate_two_zero(std::uint64_t n) {
  if (n == 0 || n % 2 != 0)
    throw Error(Errc::InfeasibleParams, "two_zero requires even n > 0");
  std::vector<std::uint32_t> d(n, 0);
  std::fill(d.begin(), d.begin() + n / 2, 2u);
  return DegreeSequence::from(std::move(d));
}

DegreeSequence generate_permutation(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InfeasibleParams, "permutation requires n > 0");
  return DegreeSequence::from(std::vector<std::uint32_t>(n, 1u));
}

DegreeSequence generate_binary_mix(std::uint64_t n, std::uint64_t c0, std::uint64_t c1,
                                   std::uint64_t c2, std::uint64_t c3) {
  if (c0 + c1 + c2 + c3 != n)
    throw Error(Errc::InfeasibleParams, "binary_mix counts sum to " +
                                            std::to_string(c0 + c1 + c2 + c3) + ", need n = " +
                                            std::to_string(n));
  if (c1 + 2 * c2 + 3 * c3 != n)
    throw Error(Errc::InfeasibleParams, "binary_mix degree mass " +
                                            std::to_string(c1 + 2 * c2 + 3 * c3) +
                                            " != n = " + std::to_string(n));
  std::vector<std::uint32_t> d;
  d.reserve(n);
  d.insert(d.end(), c3, 3u);
  d.insert(d.end(), c2, 2u);
  d.insert(d.end(), c1, 1u);
  d.insert(d.end(), c0, 0u);
  return DegreeSequence::from(std::move(d));
}

DegreeSequence generate_multinomial(std::uint64_t n, RngStream& rng) {
  if (n == 0) throw Error(Errc::InfeasibleParams, "multinomial requires n > 0");
  std::vector<std::uint32_t> d(n, 0);
  for (std::uint64_t i = 0; i < n; ++i) d[rng.below(n)] += 1;
  return DegreeSequence::from(std::move(d));
}

DegreeSequence generate(GeneratorKind kind, std::uint64_t n, const GeneratorParams& params,
                        RngStream& rng) {
  switch (kind) {
    case GeneratorKind::two_zero: return generate_two_zero(n);
    case GeneratorKind::permutation: return generate_permutation(n);
    case GeneratorKind::binary_mix:
      return generate_binary_mix(n, params.c0, params.c1, params.c2, params.c3);
    case GeneratorKind::multinomial: return generate_multinomial(n, rng);
    case GeneratorKind::custom: return DegreeSequence::from(params.custom);
  }
  throw Error(Errc::ConfigError, "unknown generator kind");
}

namespace {

GeneratorParams parse_params(const std::string& s) {
  GeneratorParams p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ConfigError, "bad generator parameter '" + item + "'");
    std::string key = item.substr(0, eq);
    std::uint64_t val = std::stoull(item.substr(eq + 1));
    if (key == "c0") p.c0 = val;
    else if (key == "c1") p.c1 = val;
    else if (key == "c2") p.c2 = val;
    else if (key == "c3") p.c3 = val;
    else throw Error(Errc::ConfigError, "unknown generator parameter '" + key + "'");
  }
  return p;
}

}  // namespace

DegreeSequence degrees_from_spec(const std::string& spec, std::uint64_t n, RngStream& rng) {
  if (spec.rfind("file:", 0) == 0) return read_degrees(spec.substr(5));
  if (spec.rfind("generator:", 0) != 0)
    throw Error(Errc::ConfigError, "degree spec must start with 'generator:' or 'file:'");
  std::string rest = spec.substr(10);
  std::string name = rest;
  std::string params;
  if (auto colon = rest.find(':'); colon != std::string::npos) {
    name = rest.substr(0, colon);
    params = rest.substr(colon + 1);
  }
  if (n == 0) throw Error(Errc::ConfigError, "generator spec requires --n");
  if (name == "two_zero") return generate_two_zero(n);
  if (name == "permutation") return generate_permutation(n);
  if (name == "multinomial") return generate_multinomial(n, rng);
  if (name == "binary_mix") {
    GeneratorParams p = parse_params(params);
    return generate_binary_mix(n, p.c0, p.c1, p.c2, p.c3);
  }
  throw Error(Errc::ConfigError, "unknown generator '" + name + "'");
}

DegreeHistogram degree_histogram(const DegreeSequence& ds) {
  DegreeHistogram h;
  std::uint32_t delta = 0;
  for (std::uint32_t v : ds.degrees()) delta = std::max(delta, v);
  if (std::uint64_t(delta) <= std::max<std::uint64_t>(1u << 20, ds.n())) {
    std::vector<std::uint64_t> counts(std::size_t(delta) + 1, 0);
    for (std::uint32_t v : ds.degrees()) counts[v]++;
    for (std::uint32_t v = 0; v <= delta; ++v)
      if (counts[v] > 0) h.bins.emplace_back(v, counts[v]);
  } else {
    std::vector<std::uint32_t> sorted(ds.degrees().begin(), ds.degrees().end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      h.bins.emplace_back(sorted[i], std::uint64_t(j - i));
      i = j;
    }
  }
  return h;
}

DegreeSequence read_degrees(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::vector<std::int64_t> raw;
  std::string line;
  bool csv_header_checked = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    // accept a CSV column: take the last comma-separated field
    std::string field = line;
    if (auto comma = line.rfind(','); comma != std::string::npos) field = line.substr(comma + 1);
    if (!csv_header_checked) {
      csv_header_checked = true;
      bool numeric = !field.empty() &&
                     field.find_first_not_of("-0123456789 \t\r") == std::string::npos;
      if (!numeric) continue;  // header row
    }
    try {
      raw.push_back(std::stoll(field));
    } catch (const std::exception&) {
      throw Error(Errc::IoError, "bad degree line '" + line + "' in " + path);
    }
  }
  return DegreeSequence::from_signed(raw);
}

void write_degrees(const DegreeSequence& ds, std::ostream& out) {
  for (std::uint32_t v : ds.degrees()) out << v << "\n";
}

}  // namespace rfg
