#include "hyptwist/curve.hpp"

#include "hyptwist/errors.hpp"
#include "hyptwist/galois.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>

namespace hyptwist {

struct CurveSpec::Lazy {
  std::once_flag once;
  SigmaSet sigma;
};

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CurveSpec::CurveSpec(RatPoly f, unsigned p, std::optional<std::vector<RatPoly>> declared_factors)
    : f_(std::move(f)), p_(p), factors_(std::move(declared_factors)), lazy_(std::make_shared<Lazy>()) {
  if (!is_prime(static_cast<std::uint64_t>(p_))) throw InvalidInput("p must be prime");
  if (f_.degree() < 3 || f_.degree() % 2 == 0) {
    throw InvalidInput("f must have odd degree >= 3 (got degree " + std::to_string(f_.degree()) + ")");
  }
  if (!is_separable(f_)) throw InvalidInput("f is not separable");
  if (factors_) {
    RatPoly product = RatPoly::constant(1);
    for (const auto& g : *factors_) {
      if (g.degree() < 1) throw InvalidInput("declared factor must have positive degree");
      product *= g;
    }
    if (product.degree() != f_.degree() || product * BigRational(f_.lead() / product.lead()) != f_) {
      throw InvalidInput("declared factors do not multiply to f up to a constant");
    }
  }
  disc_ = hyptwist::discriminant(f_);
  disc_int_ = disc_.get_num() * disc_.get_den();
  hash_ = fnv1a("p=" + std::to_string(p_) + ";f=" + f_.to_string());
}

std::string CurveSpec::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
  return buf;
}

const SigmaSet& CurveSpec::sigma() const {
  std::call_once(lazy_->once, [this] { lazy_->sigma = sigma_set(*this); });
  return lazy_->sigma;
}

std::vector<BigRational> parse_coefficient_list(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw InvalidInput("coefficient list must be enclosed in [ ]");
  }
  std::vector<BigRational> out;
  std::stringstream body(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    item = trim(item);
    if (item.empty()) throw InvalidInput("empty coefficient");
    if (item.front() == '+') item.erase(0, 1);
    BigRational q;
    if (q.set_str(item, 10) != 0) throw InvalidInput("bad coefficient '" + item + "'");
    if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + item + "'");
    q.canonicalize();
    out.push_back(q);
  }
  if (out.empty()) throw InvalidInput("empty coefficient list");
  return out;
}

CurveSpec parse_curve(std::istream& in) {
  std::optional<unsigned> p;
  std::optional<RatPoly> f;
  std::vector<RatPoly> factors;
  int f_line = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "p") {
        if (p) throw InvalidInput("duplicate p");
        std::size_t used = 0;
        unsigned long v = std::stoul(value, &used);
        if (used != value.size()) throw InvalidInput("p must be an integer");
        p = static_cast<unsigned>(v);
      } else if (key == "f") {
        if (f) throw InvalidInput("duplicate f");
        f = RatPoly(parse_coefficient_list(value));
        f_line = lineno;
      } else if (key == "factor") {
        factors.emplace_back(parse_coefficient_list(value));
      } else {
        throw InvalidInput("unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!f) throw ParseError(lineno, "missing 'f = [...]'");
  try {
    std::optional<std::vector<RatPoly>> declared;
    if (!factors.empty()) declared = std::move(factors);
    return CurveSpec(*f, p.value_or(2), std::move(declared));
  } catch (const InvalidInput& e) {
    throw ParseError(f_line, e.what());
  }
}

CurveSpec parse_curve_text(const std::string& text) {
  std::istringstream in(text);
  return parse_curve(in);
}

CurveSpec load_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open curve file " + path.string());
  return parse_curve(in);
}

std::string format_curve(const CurveSpec& curve) {
  std::ostringstream os;
  os << "p = " << curve.p() << "\n";
  os << "f = " << curve.f().to_string() << "\n";
  if (curve.declared_factors()) {
    for (const auto& g : *curve.declared_factors()) os << "factor = " << g.to_string() << "\n";
  }
  return os.str();
}

}  // namespace hyptwist
