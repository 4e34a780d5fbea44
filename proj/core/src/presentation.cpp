#include "pcdyn/presentation.hpp"

#include <algorithm>

#include "pcdyn/error.hpp"
#include "pcdyn/ff/integer_factor.hpp"
#include "text_util.hpp"

namespace pcdyn {

bool ExponentVector::is_identity() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

std::size_t ExponentVector::depth() const {
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] != 0) return k;
  return e_.size();
}

Exponent ExponentVector::leading_exponent() const {
  std::size_t d = depth();
  return d < e_.size() ? e_[d] : 0;
}

std::string ExponentVector::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(e_[k]);
  }
  s += ']';
  return s;
}

using txt::parse_number;
using txt::split_ws;
using txt::trim;
using txt::parse_fail;

ExponentVector ExponentVector::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InputError("exponent vector must be bracketed: '" +
                     std::string(text) + "'");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<Exponent> e;
  if (text.empty()) return ExponentVector(std::move(e));
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
    Exponent x{};
    if (!parse_number(piece, x))
      throw InputError("bad exponent '" + std::string(trim(piece)) + "'");
    e.push_back(x);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ExponentVector(std::move(e));
}

PcPresentation::PcPresentation(std::vector<Exponent> relative_orders,
                               std::vector<ExponentVector> powers,
                               std::vector<std::vector<ExponentVector>> conjugates)
    : orders_(std::move(relative_orders)),
      powers_(std::move(powers)),
      conjugates_(std::move(conjugates)) {
  const std::size_t n = orders_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!is_prime(orders_[i]))
      throw InputError("relative order not prime: generator " +
                       std::to_string(i + 1) + " has order " +
                       std::to_string(orders_[i]));
  if (powers_.empty()) powers_.assign(n, ExponentVector(n));
  if (powers_.size() != n)
    throw InputError("power relation count does not match generator count");
  if (conjugates_.empty()) conjugates_.resize(n);
  if (conjugates_.size() != n)
    throw InputError("conjugate relation table does not match generator count");

  auto check_rhs = [&](const ExponentVector& v, std::size_t above,
                       const std::string& what) {
    if (v.size() != n) throw InputError(what + ": wrong vector length");
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] >= orders_[k])
        throw InputError(what + ": exponent out of range");
      if (v[k] != 0 && k <= above)
        throw InputError(what + ": generator index out of range");
    }
  };

  power_words_.resize(n);
  conj_words_.resize(n * n);
  trivial_conj_.assign(n * n, 1);
  auto to_sparse = [](const ExponentVector& v) {
    SparseWord w;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k]) w.emplace_back(static_cast<std::uint32_t>(k), v[k]);
    return w;
  };
  for (std::size_t i = 0; i < n; ++i) {
    check_rhs(powers_[i], i, "pow " + std::to_string(i + 1));
    power_words_[i] = to_sparse(powers_[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto& row = conjugates_[j];
    if (row.empty()) row.assign(j, ExponentVector::unit(n, j));
    if (row.size() < j)
      throw InputError("conjugate relation row too short for generator " +
                       std::to_string(j + 1));
    row.resize(j);
    for (std::size_t i = 0; i < j; ++i) {
      check_rhs(row[i], i,
                "conj " + std::to_string(j + 1) + " " + std::to_string(i + 1));
      conj_words_[j * n + i] = to_sparse(row[i]);
      trivial_conj_[j * n + i] = row[i] == ExponentVector::unit(n, j);
    }
    conj_words_[j * n + j] = {{static_cast<std::uint32_t>(j), 1}};
  }
}

Integer PcPresentation::group_order() const {
  Integer order = 1;
  for (auto p : orders_) order *= p;
  return order;
}

bool PcPresentation::is_valid(const ExponentVector& v) const {
  if (v.size() != size()) return false;
  for (std::size_t k = 0; k < size(); ++k)
    if (v[k] >= orders_[k]) return false;
  return true;
}

void PcPresentation::check_element(const ExponentVector& v) const {
  if (v.size() != size())
    throw InputError("element " + v.to_string() + " has length " +
                     std::to_string(v.size()) + ", expected " +
                     std::to_string(size()));
  if (!is_valid(v))
    throw InputError("element " + v.to_string() +
                     " has an exponent outside its relative order");
}

namespace {

// Parses "<word>" into a normal form, requiring generator indices in
// (above, n] in increasing order.
ExponentVector parse_rhs(std::string_view text, const std::vector<Exponent>& orders,
                         std::size_t above, std::size_t line) {
  const std::size_t n = orders.size();
  ExponentVector v(n);
  std::size_t last = above;
  for (auto atom : split_ws(text)) {
    std::string_view gen = atom, exp = "1";
    if (auto caret = atom.find('^'); caret != std::string_view::npos) {
      gen = atom.substr(0, caret);
      exp = atom.substr(caret + 1);
    }
    if (!gen.empty() && (gen.front() == 'x' || gen.front() == 'X'))
      gen.remove_prefix(1);
    std::size_t g{};
    std::int64_t e{};
    if (!parse_number(gen, g) || !parse_number(exp, e))
      parse_fail(line, "bad word atom '" + std::string(atom) + "'");
    if (g < 1 || g > n)
      parse_fail(line, "generator index out of range: " + std::to_string(g));
    if (g <= above)
      parse_fail(line, "generator index out of range for this relation: " +
                           std::to_string(g));
    if (g <= last)
      parse_fail(line, "word not in normal form (indices must increase)");
    if (e < 0 || e >= static_cast<std::int64_t>(orders[g - 1]))
      parse_fail(line, "exponent " + std::to_string(e) +
                           " not reduced modulo the relative order of x" +
                           std::to_string(g));
    v[g - 1] = static_cast<Exponent>(e);
    last = g;
  }
  return v;
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  auto lines = txt::logical_lines(text);
  if (lines.empty()) throw InputError("empty presentation file");

  auto expect_keyword = [](std::pair<std::size_t, std::string_view> l,
                           std::string_view kw) {
    auto toks = split_ws(l.second);
    if (toks.empty() || toks[0] != kw)
      parse_fail(l.first, "expected '" + std::string(kw) + "'");
    return toks;
  };

  auto header = expect_keyword(lines[0], "pcpres");
  if (header.size() != 2 || header[1] != "1")
    parse_fail(lines[0].first, "unsupported format version");
  if (lines.size() < 3) throw InputError("presentation truncated");

  auto ntoks = expect_keyword(lines[1], "n");
  std::size_t n{};
  if (ntoks.size() != 2 || !parse_number(ntoks[1], n))
    parse_fail(lines[1].first, "expected 'n <count>'");

  auto otoks = expect_keyword(lines[2], "orders");
  if (otoks.size() != n + 1)
    parse_fail(lines[2].first, "expected " + std::to_string(n) + " relative orders");
  std::vector<Exponent> orders(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t p{};
    if (!parse_number(otoks[i + 1], p) || p > 0xffffffffULL)
      parse_fail(lines[2].first, "bad relative order '" + std::string(otoks[i + 1]) + "'");
    if (!is_prime(p))
      parse_fail(lines[2].first, "relative order not prime: " + std::to_string(p));
    orders[i] = static_cast<Exponent>(p);
  }

  std::vector<ExponentVector> powers(n, ExponentVector(n));
  std::vector<std::vector<ExponentVector>> conj(n);
  for (std::size_t j = 0; j < n; ++j) conj[j].assign(j, ExponentVector::unit(n, j));
  std::vector<char> seen_pow(n, 0);
  std::vector<char> seen_conj(n * n, 0);

  for (std::size_t li = 3; li < lines.size(); ++li) {
    auto [lineno, body] = lines[li];
    auto eq = body.find('=');
    if (eq == std::string_view::npos) parse_fail(lineno, "expected '='");
    auto lhs = split_ws(body.substr(0, eq));
    auto rhs = body.substr(eq + 1);
    if (lhs.size() == 2 && lhs[0] == "pow") {
      std::size_t i{};
      if (!parse_number(lhs[1], i) || i < 1 || i > n)
        parse_fail(lineno, "generator index out of range in pow");
      if (seen_pow[i - 1]) parse_fail(lineno, "duplicate pow relation");
      seen_pow[i - 1] = 1;
      powers[i - 1] = parse_rhs(rhs, orders, i, lineno);
    } else if (lhs.size() == 3 && lhs[0] == "conj") {
      std::size_t j{}, i{};
      if (!parse_number(lhs[1], j) || !parse_number(lhs[2], i) || i < 1 ||
          j > n || i >= j)
        parse_fail(lineno, "conj needs indices 1 <= i < j <= n");
      if (seen_conj[(j - 1) * n + (i - 1)])
        parse_fail(lineno, "duplicate conj relation");
      seen_conj[(j - 1) * n + (i - 1)] = 1;
      conj[j - 1][i - 1] = parse_rhs(rhs, orders, i, lineno);
    } else {
      parse_fail(lineno, "unrecognised relation line");
    }
  }
  return PcPresentation(std::move(orders), std::move(powers), std::move(conj));
}

PcPresentation load_presentation(const std::string& path) {
  std::string body = txt::read_file(path);
  try {
    return parse_presentation(body);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_word(const ExponentVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(k + 1);
    if (v[k] != 1) out += '^' + std::to_string(v[k]);
  }
  return out;
}

std::string format_presentation(const PcPresentation& pres) {
  std::ostringstream os;
  const std::size_t n = pres.size();
  os << "pcpres 1\n" << "n " << n << "\n" << "orders";
  for (auto p : pres.relative_orders()) os << ' ' << p;
  os << '\n';
  for (std::size_t i = 0; i < n; ++i)
    if (!pres.power_relation(i).is_identity())
      os << "pow " << i + 1 << " = " << format_word(pres.power_relation(i)) << '\n';
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!pres.conjugate_is_trivial(j, i))
        os << "conj " << j + 1 << ' ' << i + 1 << " = "
           << format_word(pres.conjugate_relation(j, i)) << '\n';
  return os.str();
}

}  // namespace pcdyn
