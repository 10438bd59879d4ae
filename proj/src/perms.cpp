#include "gpd/perms.hpp"

#include <algorithm>
#include <numeric>

#include "gpd/errors.hpp"

namespace gpd {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  int n = static_cast<int>(w_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : w_) {
    if (v < 1 || v > n || seen[v])
      throw ValidationError("not a permutation in one-line notation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& s) {
  if (s.empty()) throw ValidationError("empty permutation");
  std::vector<int> w;
  if (s.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t comma = s.find(',', pos);
      std::string part = s.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("bad permutation entry '" + part + "'");
      w.push_back(std::stoi(part));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw ValidationError("bad permutation digit '" + std::string(1, c) + "'");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int i = 1; i <= size(); ++i) inv[w_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation Permutation::compose(const Permutation& v) const {
  if (size() != v.size())
    throw ValidationError("composing permutations of different sizes");
  std::vector<int> r(w_.size());
  for (int i = 1; i <= size(); ++i) r[i - 1] = (*this)(v(i));
  return Permutation(std::move(r));
}

Permutation Permutation::right_s(int a) const {
  if (a < 1 || a >= size())
    throw ValidationError("reflection index out of range");
  std::vector<int> r = w_;
  std::swap(r[a - 1], r[a]);
  return Permutation(std::move(r));
}

std::string Permutation::to_string() const {
  std::string out;
  bool digits = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!digits && i) out += ",";
    out += std::to_string(w_[i]);
  }
  return out;
}

Word parse_word(const std::string& s) {
  if (s.empty()) return {};
  Word q;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string part = s.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("bad word letter '" + part + "'");
    q.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return q;
}

std::string word_to_string(const Word& q) {
  std::string out;
  for (size_t i = 0; i < q.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(q[i]);
  }
  return out;
}

Permutation word_product(const Word& q, int n) {
  Permutation w = Permutation::identity(n);
  for (int a : q) w = w.right_s(a);
  return w;
}

Permutation demazure_product(const Word& q, int n) {
  Permutation w = Permutation::identity(n);
  for (int a : q)
    if (!w.right_descent(a)) w = w.right_s(a);
  return w;
}

std::vector<Polynomial> beta_roots(const Word& q, int n) {
  std::vector<Polynomial> betas;
  betas.reserve(q.size());
  Permutation u = Permutation::identity(n);
  for (int a : q) {
    if (a < 1 || a >= n) throw ValidationError("word letter out of range");
    betas.push_back(Polynomial::variable(VarId::z(u(a))) -
                    Polynomial::variable(VarId::z(u(a + 1))));
    u = u.right_s(a);
  }
  return betas;
}

Permutation direct_sum(const Permutation& u, const Permutation& v) {
  std::vector<int> w;
  w.reserve(u.size() + v.size());
  for (int i = 1; i <= u.size(); ++i) w.push_back(u(i));
  for (int i = 1; i <= v.size(); ++i) w.push_back(u.size() + v(i));
  return Permutation(std::move(w));
}

Word rect_word(int k, int n) {
  Word q;
  q.reserve(static_cast<size_t>(k) * n);
  for (int j = 1; j <= n; ++j)
    for (int a = k + j - 1; a >= j; --a) q.push_back(a);
  return q;
}

Word cut_deck_word(int n) { return rect_word(n, n); }

std::set<Permutation> coset_elements(const Permutation& w,
                                     const std::set<int>& generators) {
  std::set<Permutation> coset{w};
  std::vector<Permutation> frontier{w};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (int a : generators) {
        Permutation h = g.right_s(a);
        if (coset.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return coset;
}

std::vector<Word> reduced_words(const Permutation& w) {
  if (w.length() == 0) return {{}};
  std::vector<Word> out;
  for (int a = 1; a < w.size(); ++a) {
    if (!w.right_descent(a)) continue;
    for (Word q : reduced_words(w.right_s(a))) {
      q.push_back(a);
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

PartialPermutation::PartialPermutation(int k, int n,
                                       std::vector<std::vector<int>> m)
    : k_(k), n_(n), m_(std::move(m)) {
  if (k_ < 1 || n_ < 1 || static_cast<int>(m_.size()) != k_)
    throw ValidationError("bad partial permutation shape");
  std::vector<int> colsum(n_, 0);
  for (const auto& row : m_) {
    if (static_cast<int>(row.size()) != n_)
      throw ValidationError("ragged partial permutation");
    int rowsum = 0;
    for (int j = 0; j < n_; ++j) {
      if (row[j] != 0 && row[j] != 1)
        throw ValidationError("partial permutation entries must be 0/1");
      rowsum += row[j];
      colsum[j] += row[j];
    }
    if (rowsum > 1) throw ValidationError("two 1s in a row");
  }
  for (int s : colsum)
    if (s > 1) throw ValidationError("two 1s in a column");
}

PartialPermutation PartialPermutation::parse(const std::string& rows) {
  std::vector<std::vector<int>> m;
  std::vector<int> row;
  for (char c : rows) {
    if (c == '/') {
      m.push_back(row);
      row.clear();
    } else if (c == '0' || c == '1') {
      row.push_back(c - '0');
    } else {
      throw ValidationError("bad matrix character '" + std::string(1, c) + "'");
    }
  }
  m.push_back(row);
  if (m.empty() || m[0].empty())
    throw ValidationError("empty partial permutation");
  int k = static_cast<int>(m.size());
  int n = static_cast<int>(m[0].size());
  return PartialPermutation(k, n, std::move(m));
}

PartialPermutation PartialPermutation::of(const Permutation& w) {
  int n = w.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) m[i - 1][w(i) - 1] = 1;
  return PartialPermutation(n, n, std::move(m));
}

std::vector<Permutation> completions(const PartialPermutation& w) {
  int k = w.rows(), n = w.cols();
  std::vector<Permutation> out;
  for (const auto& cand : all_permutations(n + k)) {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i) {
      bool has_one = false;
      for (int j = 1; j <= n && ok; ++j) {
        if (w.entry(i, j) == 1) {
          has_one = true;
          if (cand(j) != i) ok = false;
        }
      }
      // the pipe of an unmatched row must not exit inside the corner
      if (ok && !has_one && cand.inverse()(i) <= n) ok = false;
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

}  // namespace gpd
