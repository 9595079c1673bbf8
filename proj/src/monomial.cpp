#include "qaf/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qaf {

std::string Spectral::str() const {
  std::string s;
  if (cls < 26) {
    s.push_back((char)('a' + cls));
  } else {
    s = "c" + std::to_string(cls);
  }
  if (shift != 0) s += "*q^" + std::to_string(shift);
  return s;
}

Spectral parse_spectral(const std::string& text) {
  if (text.empty())
    throw std::invalid_argument("spectral parameter must be class:shift, got '" + text + "'");
  auto colon = text.find(':');
  try {
    // the class is numeric, a single orbit letter ("a"), or letter-prefixed
    // digits ("c0"), matching the rendered forms; a bare class means shift 0
    std::string cls_text = colon == std::string::npos ? text : text.substr(0, colon);
    int cls = 0;
    if (cls_text.size() == 1 && std::isalpha((unsigned char)cls_text[0])) {
      cls = std::tolower((unsigned char)cls_text[0]) - 'a';
    } else {
      size_t p = 0;
      while (p < cls_text.size() && std::isalpha((unsigned char)cls_text[p])) ++p;
      cls = std::stoi(cls_text.substr(p));
    }
    long shift = colon == std::string::npos ? 0 : std::stol(text.substr(colon + 1));
    if (cls < 0) throw std::invalid_argument("negative class");
    return Spectral(cls, shift);
  } catch (const std::exception&) {
    throw std::invalid_argument("spectral parameter must be class:shift, got '" + text + "'");
  }
}

int Monomial::y_exp(int i, const Spectral& a) const {
  auto it = ye.find({i, a});
  return it == ye.end() ? 0 : it->second;
}

long Monomial::y_exp_total(int i) const {
  long t = 0;
  for (const auto& [key, e] : ye)
    if (key.first == i) t += e;
  return t;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (const auto& [key, e] : o.ye) {
    int& slot = m.ye[key];
    slot += e;
    if (slot == 0) m.ye.erase(key);
  }
  m.omega = wv_add(omega, o.omega);
  return m;
}

Monomial Monomial::inv() const {
  Monomial m;
  for (const auto& [key, e] : ye) m.ye[key] = -e;
  m.omega = wv_scale(omega, mpq_class(-1));
  return m;
}

Monomial Monomial::pow(long k) const {
  Monomial m;
  if (k == 0) {
    m.omega = wv_scale(omega, mpq_class(0));
    return m;
  }
  for (const auto& [key, e] : ye) m.ye[key] = (int)(e * k);
  m.omega = wv_scale(omega, mpq_class(k));
  return m;
}

Monomial identity_monomial(const CartanData& cd) {
  Monomial m;
  m.omega = cd.wv_zero();
  return m;
}

Monomial y_gen(const CartanData& cd, int i, const Spectral& a, int e) {
  Monomial m = identity_monomial(cd);
  if (e != 0) m.ye[{i, a}] = e;
  m.omega = wv_scale(cd.fundamental(i), mpq_class(e));
  return m;
}

Monomial k_pure(const CartanData& cd, const WeightVector& w) {
  Monomial m = identity_monomial(cd);
  m.omega = w;
  return m;
}

Monomial a_inverse(const CartanData& cd, int i, const Spectral& a) {
  Monomial m = identity_monomial(cd);
  long ri = cd.ri(i);
  m.ye[{i, a.shifted(ri)}] = -1;
  m.ye[{i, a.shifted(-ri)}] = -1;
  for (int j = 0; j < cd.n; ++j) {
    if (j == i) continue;
    long cji = cd.C[(size_t)j][(size_t)i];
    if (cji > -1) continue;
    for (long k = cji + 1; k <= -cji - 1; k += 2) {
      int& slot = m.ye[{j, a.shifted(k)}];
      slot += 1;
      if (slot == 0) m.ye.erase({j, a.shifted(k)});
    }
  }
  m.omega = wv_scale(cd.simple_root(i), mpq_class(-1));
  return m;
}

bool group_constraint_ok(const CartanData& cd, const Monomial& m) {
  for (int i = 0; i < cd.n; ++i)
    if (m.omega[(size_t)i] != m.y_exp_total(i)) return false;
  return true;
}

bool is_dominant(const Monomial& m) {
  for (const auto& [key, e] : m.ye)
    if (e < 0) return false;
  return true;
}

bool is_right_negative(const CartanData& cd, const Monomial& m) {
  (void)cd;
  if (m.is_identity())
    throw std::invalid_argument("is_right_negative: undefined on the identity");
  if (m.ye.empty()) return false;
  // per orbit: the exponents sitting at the maximal shift must all be negative
  std::map<int, long> top;
  for (const auto& [key, e] : m.ye) {
    (void)e;
    auto it = top.find(key.second.cls);
    if (it == top.end() || key.second.shift > it->second) top[key.second.cls] = key.second.shift;
  }
  for (const auto& [key, e] : m.ye)
    if (key.second.shift == top[key.second.cls] && e >= 0) return false;
  return true;
}

std::optional<std::map<std::pair<int, Spectral>, int>> divides_by_A(
    const CartanData& cd, const Monomial& m_hi, const Monomial& m_lo) {
  Monomial res = m_lo * m_hi.inv();
  std::map<std::pair<int, Spectral>, int> out;
  while (!res.ye.empty()) {
    // topmost point of the first orbit present
    int cls = res.ye.begin()->first.second.cls;
    long t = res.ye.begin()->first.second.shift;
    for (const auto& [key, e] : res.ye) {
      (void)e;
      if (key.second.cls == cls && key.second.shift > t) t = key.second.shift;
    }
    // only A^{-1}_{i, (cls, t - r_i)} factors reach this point, each with
    // exponent -1 there, so the required power is forced
    bool progressed = false;
    for (int i = 0; i < cd.n; ++i) {
      int e = res.y_exp(i, Spectral(cls, t));
      if (e == 0) continue;
      if (e > 0) return std::nullopt;
      Spectral b(cls, t - cd.ri(i));
      out[{i, b}] += -e;
      res = res * a_inverse(cd, i, b).pow(e);  // removes the factor e times
      progressed = true;
    }
    if (!progressed) throw std::logic_error("divides_by_A: stalled");
  }
  if (!wv_is_zero(res.omega)) return std::nullopt;
  return out;
}

namespace {

// single admissible steps from cur: A^{-1}_{i, b q_i} for every live Y_{i,b}
std::vector<std::pair<int, Spectral>> cone_moves(const CartanData& cd, const Monomial& cur) {
  std::vector<std::pair<int, Spectral>> moves;
  for (const auto& [key, e] : cur.ye)
    if (e >= 1) moves.push_back({key.first, key.second.shifted(cd.ri(key.first))});
  return moves;
}

}  // namespace

bool cone_member(const CartanData& cd, const Monomial& m, const Monomial& m_target) {
  if (!divides_by_A(cd, m, m_target)) return false;
  std::set<Monomial> seen;
  std::deque<Monomial> queue;
  queue.push_back(m);
  seen.insert(m);
  while (!queue.empty()) {
    Monomial cur = queue.front();
    queue.pop_front();
    if (cur == m_target) return true;
    for (const auto& [i, b] : cone_moves(cd, cur)) {
      Monomial next = cur * a_inverse(cd, i, b);
      if (seen.count(next)) continue;
      if (!divides_by_A(cd, next, m_target)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return false;
}

std::vector<Monomial> enumerate_cone_below(const CartanData& cd, const Monomial& m,
                                           const std::vector<Spectral>& classes, long N,
                                           std::size_t cap) {
  std::map<int, long> base;  // orbit -> base shift
  for (const auto& c : classes) {
    if (base.count(c.cls))
      throw std::invalid_argument("enumerate_cone_below: orbit base points must be distinct");
    base[c.cls] = c.shift;
  }
  for (const auto& [key, e] : m.ye) {
    (void)e;
    auto it = base.find(key.second.cls);
    if (it == base.end() || key.second.shift < it->second)
      throw std::invalid_argument(
          "enumerate_cone_below: monomial support outside the given orbits");
  }
  auto within = [&](const Monomial& cand) {
    Monomial quot = cand * m.inv();
    for (const auto& [key, e] : quot.ye) {
      (void)e;
      long rel = key.second.shift - base.at(key.second.cls);
      if (rel >= N) return false;
    }
    return true;
  };
  std::set<Monomial> seen;
  std::deque<Monomial> queue;
  queue.push_back(m);
  seen.insert(m);
  while (!queue.empty()) {
    Monomial cur = queue.front();
    queue.pop_front();
    for (const auto& [i, b] : cone_moves(cd, cur)) {
      Monomial next = cur * a_inverse(cd, i, b);
      if (seen.count(next) || !within(next)) continue;
      if (seen.size() >= cap)
        throw std::runtime_error("enumerate_cone_below: cap exceeded");
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return std::vector<Monomial>(seen.begin(), seen.end());
}

Monomial monomial_of_lweight(const CartanData& cd, const LWeight& lw) {
  if ((int)lw.orders.size() != cd.n)
    throw std::invalid_argument("monomial_of_lweight: wrong node count");
  Monomial m = identity_monomial(cd);
  m.omega = lw.lambda;
  for (int i = 0; i < cd.n; ++i) {
    long ri = cd.ri(i);
    // split the factor points into ladders: same orbit, shift mod 2 r_i
    std::map<std::pair<int, long>, std::map<long, int>> chains;
    for (const auto& [p, o] : lw.orders[(size_t)i]) {
      if (o == 0) continue;
      long residue = ((p.shift % (2 * ri)) + 2 * ri) % (2 * ri);
      chains[{p.cls, residue}][p.shift] = o;
    }
    long total_y = 0;
    for (const auto& [chain_key, orders] : chains) {
      int cls = chain_key.first;
      long running = 0;
      auto it = orders.begin();
      while (it != orders.end()) {
        running += it->second;
        long from = it->first + ri;
        ++it;
        if (it == orders.end()) {
          if (running != 0)
            throw std::invalid_argument(
                "monomial_of_lweight: factor orders do not telescope at node " +
                std::to_string(i + 1));
          break;
        }
        if (running == 0) continue;
        for (long s = from; s <= it->first - ri; s += 2 * ri) {
          m.ye[{i, Spectral(cls, s)}] += (int)running;
          if (m.ye[{i, Spectral(cls, s)}] == 0) m.ye.erase({i, Spectral(cls, s)});
          total_y += running;
        }
      }
    }
    if (m.omega[(size_t)i] != total_y)
      throw std::invalid_argument(
          "monomial_of_lweight: coroot pairing of the weight does not match the "
          "factor content at node " +
          std::to_string(i + 1));
  }
  return m;
}

void ypoly_add_term(YPolynomial& p, const Monomial& m, long mult) {
  if (mult == 0) return;
  long& slot = p[m];
  slot += mult;
  if (slot == 0) p.erase(m);
}

YPolynomial ypoly_add(const YPolynomial& a, const YPolynomial& b) {
  YPolynomial p = a;
  for (const auto& [m, c] : b) ypoly_add_term(p, m, c);
  return p;
}

YPolynomial ypoly_sub(const YPolynomial& a, const YPolynomial& b) {
  YPolynomial p = a;
  for (const auto& [m, c] : b) ypoly_add_term(p, m, -c);
  return p;
}

YPolynomial ypoly_mul(const YPolynomial& a, const YPolynomial& b) {
  YPolynomial p;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) ypoly_add_term(p, ma * mb, ca * cb);
  return p;
}

YPolynomial ypoly_scale(const YPolynomial& a, long s) {
  YPolynomial p;
  if (s == 0) return p;
  for (const auto& [m, c] : a) p[m] = c * s;
  return p;
}

std::string mono_str(const CartanData& cd, const Monomial& m) {
  std::vector<std::string> parts;
  WeightVector reduced = m.omega;
  for (const auto& [key, e] : m.ye) {
    std::ostringstream os;
    os << "Y[" << key.first + 1 << "," << key.second.str() << "]";
    if (e != 1) os << "^" << e;
    parts.push_back(os.str());
    reduced[(size_t)key.first] -= e;
  }
  if (!wv_is_zero(reduced)) parts.push_back("k[" + cd.wv_str(reduced) + "]");
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) out += " * " + parts[k];
  return out;
}

std::string ypoly_str(const CartanData& cd, const YPolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    long a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << a << "*";
    os << mono_str(cd, m);
    first = false;
  }
  return os.str();
}

}  // namespace qaf
